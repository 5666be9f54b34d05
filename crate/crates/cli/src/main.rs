mod args;
mod commands;
mod error;
mod fixtures;
mod input;

use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use args::{rewrite_aliases, Cli};
use commands::{run, Context};
use error::exit;

fn command_name(cli: &[String]) -> String {
    // first non-flag token after the globals, already rewritten to the kebab spelling
    let mut it = cli.iter().skip(1);
    while let Some(a) = it.next() {
        if ["--vars", "--char", "--action", "--max-degree"].contains(&a.as_str()) {
            it.next();
        } else if !a.starts_with('-') {
            return a.clone();
        }
    }
    String::new()
}

fn main() -> ExitCode {
    let argv = rewrite_aliases(std::env::args().collect());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    let name = command_name(&argv);
    let outcome = Context::from_args(&cli.ring).and_then(|ctx| run(&cli.command, &ctx).map(|o| (ctx, o)));
    match outcome {
        Ok((ctx, out)) => {
            if cli.json {
                let doc = json!({
                    "schemaVersion": 1,
                    "command": name,
                    "ring": {
                        "vars": ctx.ring.num_vars(),
                        "characteristic": ctx.ring.characteristic(),
                        "maxDegree": ctx.ring.max_degree(),
                    },
                    "action": action_name(ctx.action),
                    "result": out.result,
                    "diagnostics": Value::Object(out.diagnostics),
                });
                println!("{doc}");
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                println!(
                    "{}",
                    json!({ "schemaVersion": 1, "command": name, "error": e.to_string(), "exitCode": code })
                );
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}

fn action_name(a: macaulay::Action) -> &'static str {
    match a {
        macaulay::Action::Derivation => "der",
        macaulay::Action::Contraction => "cont",
    }
}
