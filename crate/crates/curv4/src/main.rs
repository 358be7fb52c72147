fn main() {
    std::process::exit(curv4::cli::run());
}
