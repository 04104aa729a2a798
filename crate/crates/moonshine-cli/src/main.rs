mod args;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use moonshine_api::{ApiError, Engine, ErrorKind, Request, Response};
use moonshine_client::Client;

use crate::args::{Cli, Format};

const EXIT_DOMAIN: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn exit_for(kind: ErrorKind) -> ExitCode {
    ExitCode::from(if kind == ErrorKind::Usage { EXIT_USAGE } else { EXIT_DOMAIN })
}

fn execute(cli: &Cli, req: &Request) -> Result<Response, (ErrorKind, String)> {
    match &cli.remote {
        Some(url) => {
            if matches!(req, Request::Phi { classes_file: Some(_), .. }) {
                return Err((ErrorKind::Usage, "--classes reads a local file and cannot be combined with --remote".into()));
            }
            let runtime = tokio::runtime::Builder::new_current_thread()
                .enable_all()
                .build()
                .map_err(|e| (ErrorKind::Internal, e.to_string()))?;
            runtime.block_on(Client::new(url.as_str()).execute(req)).map_err(|e| (e.kind(), e.to_string()))
        }
        None => {
            // The environment variable takes precedence over --data.
            let dir = std::env::var_os("MOONSHINE_DATA").map(PathBuf::from).unwrap_or_else(|| cli.data.clone());
            Engine::new(dir).execute(req).map_err(|e: ApiError| (e.kind, e.message))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let req = match cli.command.to_request() {
        Ok(req) => req,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let resp = match execute(&cli, &req) {
        Ok(resp) => resp,
        Err((kind, msg)) => {
            eprintln!("error: {msg}");
            return exit_for(kind);
        }
    };
    let format = if cli.command.wants_json() { Format::Json } else { cli.format };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&resp).expect("responses serialize")),
        Format::Tsv => print!("{}", render::tsv(&resp)),
    }
    if render::failed_verification(&resp) {
        return ExitCode::from(EXIT_DOMAIN);
    }
    ExitCode::SUCCESS
}
