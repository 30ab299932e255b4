fn main() {
    std::process::exit(hamcomp::cli::run(std::env::args().collect()));
}
