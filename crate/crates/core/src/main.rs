fn main() {
    std::process::exit(xsolvable::cli::run(std::env::args_os()));
}
