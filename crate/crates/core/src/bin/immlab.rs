fn main() {
    std::process::exit(immlab::cli::run(std::env::args_os()));
}
