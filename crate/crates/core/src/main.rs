fn main() {
    let code = srg_borsuk::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
