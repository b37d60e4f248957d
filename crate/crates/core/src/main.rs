fn main() {
    std::process::exit(synsemi::cli::run());
}
