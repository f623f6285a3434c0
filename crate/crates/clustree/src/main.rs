fn main() {
    std::process::exit(clustree::cli::run() as i32);
}
