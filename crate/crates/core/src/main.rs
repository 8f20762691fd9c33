fn main() {
    std::process::exit(recgrow::cli::main_with_args(std::env::args_os().skip(1)));
}
