fn main() {
    std::process::exit(spinorium::cli::run());
}
