use std::io::BufRead;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let stdin = std::io::stdin();
    let mut lock = stdin.lock();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    let code = degenlab::cli::run(&argv, &mut lock as &mut dyn BufRead, &mut out, &mut err);
    std::process::exit(code);
}
