use std::io::Write;

fn main() {
    ccq_cli::configure_threads();
    let out = ccq_cli::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
