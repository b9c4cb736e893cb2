fn main() {
    std::process::exit(cellular_crystals::cli::main_with_args(std::env::args_os()));
}
