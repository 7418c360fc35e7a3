fn main() {
    std::process::exit(exact2::cli::run(std::env::args_os()));
}
