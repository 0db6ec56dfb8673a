fn main() {
    std::process::exit(gsp4count::cli::run(std::env::args_os()));
}
