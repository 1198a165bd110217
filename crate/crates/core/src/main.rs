fn main() {
    std::process::exit(springer_lab::cli::main_with_args(std::env::args_os()));
}
