fn main() {
    std::process::exit(woedge::cli::run(std::env::args_os()));
}
