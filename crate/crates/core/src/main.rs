fn main() {
    std::process::exit(apostol::cli::run(std::env::args_os()));
}
