fn main() {
    std::process::exit(altknot::cli::run());
}
