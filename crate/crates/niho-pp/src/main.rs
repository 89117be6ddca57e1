use std::io;

fn main() {
    let mut out = io::stdout();
    let mut err = io::stderr();
    let code = niho_pp::cli::run_cli(std::env::args_os(), &mut out, &mut err);
    std::process::exit(code);
}
