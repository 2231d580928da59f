fn main() {
    std::process::exit(qaoa_transfer::cli::main());
}
