fn main() { std::process::exit(frustum_kit::cli::main()) }
