use clap::Parser;

use qpp::cli::{self, Cli, Command};

fn run(cli: Cli) -> cli::CliResult<()> {
    match cli.command {
        Command::Keygen { out, length } => {
            let fp = cli::cmd_keygen(length, &out)?;
            println!("wrote {length}-byte key to {}", out.display());
            println!("pad fingerprint: {fp:016x}");
        }
        Command::Encrypt(args) => {
            let s = cli::cmd_encrypt(&args)?;
            println!("pad fingerprint: {:016x}", s.fingerprint);
            println!("{} blocks, wrote {} bytes to {}", s.blocks, s.bytes_written, args.out.display());
            if let (Some(n), Some(path)) = (s.sample_bytes, &args.emit_samples) {
                println!("wrote {n} sampled bytes to {}", path.display());
            }
        }
        Command::Decrypt(args) => {
            let n = cli::cmd_decrypt(&args)?;
            println!("wrote {n} bytes to {}", args.out.display());
        }
        Command::Analyze { input, report } => {
            print!("{}", cli::cmd_analyze(&input, report)?);
        }
        Command::Demo(args) => {
            let text = cli::cmd_demo(&args)?;
            if args.out.is_none() {
                print!("{text}");
            }
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
