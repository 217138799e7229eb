fn main() {
    std::process::exit(nilcoh_cli::run(std::env::args_os()));
}
