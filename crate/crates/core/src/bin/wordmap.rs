fn main() {
    std::process::exit(wordmap::cli::run(std::env::args()));
}
