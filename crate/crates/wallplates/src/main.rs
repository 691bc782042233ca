fn main() -> std::process::ExitCode {
    wallplates::cli::main()
}
