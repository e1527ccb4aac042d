fn main() {
    std::process::exit(bolkit::cli::run());
}
