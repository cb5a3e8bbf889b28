fn main() {
    std::process::exit(pjsat::cli::main_with_args(std::env::args_os()));
}
