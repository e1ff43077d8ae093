fn main() {
    std::process::exit(narayana_core::cli::run(std::env::args_os()));
}
