fn main() {
    std::process::exit(relroots::cli::run(std::env::args_os()));
}
