fn main() {
    std::process::exit(quoins::cli::run(std::env::args_os()));
}
