fn main() {
    std::process::exit(rigproof::cli::main_with_env());
}
