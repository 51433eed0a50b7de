fn main() {
    std::process::exit(dense_partition::cli::main_exit_code());
}
