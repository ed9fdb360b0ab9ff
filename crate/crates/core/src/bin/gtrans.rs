fn main() { std::process::exit(graph_translations::cli::run(std::env::args_os())); }
