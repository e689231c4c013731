fn main() {
    std::process::exit(itkit::cli::run(std::env::args_os()));
}
