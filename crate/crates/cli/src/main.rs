use clap::Parser;

fn main() {
    let config = match raag_cli::RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = raag_cli::run(&config);
    if outcome.code == 2 {
        eprintln!("{}", outcome.summary);
    } else {
        println!("{}", outcome.summary);
    }
    std::process::exit(outcome.code);
}
