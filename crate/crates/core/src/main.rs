fn main() {
    std::process::exit(even_zeta::cli::run(std::env::args_os()));
}
