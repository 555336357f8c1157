fn main() {
    std::process::exit(achroma::cli::run());
}
