use std::path::PathBuf;
use std::sync::Arc;

use clap::Parser;
use moonshine_api::Engine;

#[derive(Parser)]
#[command(name = "moonshine-server", version, about = "Serve the moonshine operations over HTTP/JSON")]
struct Args {
    /// Address to listen on.
    #[arg(long, default_value = "127.0.0.1:8080")]
    bind: String,
    /// Data directory with classes.tsv, characters.tsv, ….
    #[arg(long, default_value = "data")]
    data: PathBuf,
}

#[tokio::main]
async fn main() -> std::io::Result<()> {
    let args = Args::parse();
    let data = std::env::var_os("MOONSHINE_DATA").map(PathBuf::from).unwrap_or(args.data);
    let app = moonshine_service::router(Arc::new(Engine::new(data)));
    let listener = tokio::net::TcpListener::bind(&args.bind).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, app).await
}
