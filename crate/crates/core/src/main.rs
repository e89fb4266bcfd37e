fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = cliquebound::cli::run(&argv, &mut std::io::stdout().lock());
    std::process::exit(code);
}
