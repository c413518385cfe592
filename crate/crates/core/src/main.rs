fn main() {
    std::process::exit(flagrec::cli::main());
}
