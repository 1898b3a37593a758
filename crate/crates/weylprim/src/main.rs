fn main() {
    std::process::exit(weylprim::cli::run(std::env::args()));
}
