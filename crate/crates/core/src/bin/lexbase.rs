fn main() {
    std::process::exit(lexbase::cli::run(std::env::args_os()));
}
