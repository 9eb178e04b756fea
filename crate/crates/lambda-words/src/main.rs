use clap::Parser;
use lambda_words::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    match execute(&cli.cmd) {
        Ok((out, code)) => {
            print!("{out}");
            std::process::exit(code);
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
