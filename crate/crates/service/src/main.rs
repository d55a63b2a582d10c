use std::process::ExitCode;

use statlab_service::{router, Config};
use tracing_subscriber::EnvFilter;

#[tokio::main]
async fn main() -> ExitCode {
    tracing_subscriber::fmt()
        .json()
        .with_env_filter(EnvFilter::try_from_default_env().unwrap_or_else(|_| EnvFilter::new("info,tower_http=debug")))
        .with_writer(std::io::stdout)
        .init();

    let config = match Config::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("statlab-service: {e}");
            return ExitCode::from(2);
        }
    };
    let listener = match tokio::net::TcpListener::bind(config.addr()).await {
        Ok(l) => l,
        Err(e) => {
            eprintln!("statlab-service: cannot bind {}: {e}", config.addr());
            return ExitCode::from(3);
        }
    };
    tracing::info!(addr = %config.addr(), max_body_bytes = config.max_body_bytes, origins = ?config.allowed_origins, "listening");
    let app = router(&config);
    let shutdown = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    if let Err(e) = axum::serve(listener, app).with_graceful_shutdown(shutdown).await {
        tracing::error!(error = %e, "server stopped");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
