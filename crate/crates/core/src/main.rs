fn main() {
    std::process::exit(irrepcount::cli::run(std::env::args_os()));
}
