fn main() {
    std::process::exit(syncagents::cli::run(std::env::args_os()));
}
