fn main() -> std::process::ExitCode {
    delrecon::cli::main()
}
