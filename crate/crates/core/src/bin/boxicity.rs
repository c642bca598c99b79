fn main() {
    std::process::exit(boxicity::cli::run(std::env::args_os()));
}
