//! Text format for decompositions.
//!
//! ```text
//! n k m mode subgraph_count
//! kind center1 [center2] : u1-v1 u2-v2 ...
//! ```

use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;
use std::{fs, str::FromStr};

use thiserror::Error;

use super::{Decomposition, DecompositionMeta, DecompositionMode, Edge, PlaneSubgraph, SubgraphKind};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

impl FromStr for DecompositionMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "Fallback" => Ok(DecompositionMode::Fallback),
            "Witness" => Ok(DecompositionMode::Witness),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

impl FromStr for SubgraphKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "Star" => Ok(SubgraphKind::Star),
            "TwoStarForest" => Ok(SubgraphKind::TwoStarForest),
            _ => Err(format!("unknown subgraph kind {s:?}")),
        }
    }
}

impl Decomposition {
    pub fn write_to<W: Write>(&self, w: W) -> io::Result<()> {
        let mut w = BufWriter::new(w);
        let m = &self.meta;
        writeln!(w, "{} {} {} {} {}", m.n, m.k, m.m, m.mode, m.subgraph_count)?;
        for s in &self.subgraphs {
            write!(w, "{}", s.kind)?;
            for c in &s.centers {
                write!(w, " {c}")?;
            }
            w.write_all(b" :")?;
            for e in &s.edges {
                write!(w, " {}-{}", e.u, e.v)?;
            }
            w.write_all(b"\n")?;
        }
        w.flush()
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), FormatError> {
        self.write_to(fs::File::create(path)?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, FormatError> {
        Self::read_from(io::BufReader::new(fs::File::open(path)?))
    }

    pub fn from_text(text: &str) -> Result<Self, FormatError> {
        Self::read_from(text.as_bytes())
    }

    /// Parses the format; structural claims (partition, planarity, counts)
    /// are left to the verifier.
    pub fn read_from<R: BufRead>(r: R) -> Result<Self, FormatError> {
        let mut lines = r.lines();
        let header = lines.next().ok_or_else(|| err(1, "empty file"))??;
        let f: Vec<&str> = header.split(' ').collect();
        if f.len() != 5 {
            return Err(err(1, "header must be `n k m mode subgraph_count`"));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(1, format!("not a count: {s:?}")));
        let meta = DecompositionMeta {
            n: num(f[0])?,
            k: num(f[1])?,
            m: num(f[2])?,
            mode: f[3].parse().map_err(|e: String| err(1, e))?,
            subgraph_count: num(f[4])?,
        };
        let mut subgraphs = Vec::new();
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            let line = line?;
            let (head, body) = line
                .split_once(" :")
                .ok_or_else(|| err(lineno, "missing ` :` separator"))?;
            let mut head = head.split(' ');
            let kind: SubgraphKind = head
                .next()
                .unwrap_or("")
                .parse()
                .map_err(|e: String| err(lineno, e))?;
            let centers = head
                .map(|c| c.parse::<usize>().map_err(|_| err(lineno, format!("bad center {c:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let edges = body
                .split(' ')
                .filter(|t| !t.is_empty())
                .map(|t| parse_edge(t).ok_or_else(|| err(lineno, format!("bad edge {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            subgraphs.push(PlaneSubgraph { kind, centers, edges });
        }
        Ok(Decomposition { subgraphs, meta })
    }
}

/// `u-v` with `u < v`.
fn parse_edge(t: &str) -> Option<Edge> {
    let (a, b) = t.split_once('-')?;
    let (u, v) = (a.parse::<u32>().ok()?, b.parse::<u32>().ok()?);
    (u < v).then_some(Edge { u, v })
}

#[cfg(test)]
mod tests {
    use super::super::fallback_decomposition;
    use super::*;

    #[test]
    fn fallback_text() {
        let d = fallback_decomposition(4);
        let text = d.to_text();
        assert_eq!(text, "4 0 0 Fallback 3\nStar 0 : 0-1 0-2 0-3\nStar 1 : 1-2 1-3\nStar 2 : 2-3\n");
        assert_eq!(Decomposition::from_text(&text).unwrap(), d);
    }

    #[test]
    fn two_star_line() {
        let text = "4 1 1 Witness 1\nTwoStarForest 0 2 : 0-1 2-3\n";
        let d = Decomposition::from_text(text).unwrap();
        assert_eq!(d.subgraphs[0].centers, vec![0, 2]);
        assert_eq!(d.to_text(), text);
    }

    #[test]
    fn malformed() {
        assert!(Decomposition::from_text("").is_err());
        assert!(Decomposition::from_text("4 0 0 Fallback\n").is_err());
        assert!(Decomposition::from_text("4 0 0 Sometimes 3\n").is_err());
        assert!(Decomposition::from_text("4 0 0 Fallback 1\nStar 0 0-1\n").is_err());
        assert!(Decomposition::from_text("4 0 0 Fallback 1\nStar 0 : 1-0\n").is_err());
        assert!(Decomposition::from_text("4 0 0 Fallback 1\nBlob 0 : 0-1\n").is_err());
    }
}
