fn main() {
    std::process::exit(dcl::cli::run(std::env::args_os()));
}
