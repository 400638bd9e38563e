fn main() {
    std::process::exit(setrep::cli::run());
}
