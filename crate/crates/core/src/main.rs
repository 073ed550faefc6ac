fn main() {
    std::process::exit(ramsey_sf::cli::run(std::env::args_os()));
}
