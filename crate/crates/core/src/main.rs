fn main() {
    std::process::exit(ffhalton::cli::run(std::env::args_os()));
}
