fn main() -> std::process::ExitCode {
    cactus3::cli::main()
}
