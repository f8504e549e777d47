fn main() {
    std::process::exit(roi_forge::cli::run(std::env::args_os()));
}
