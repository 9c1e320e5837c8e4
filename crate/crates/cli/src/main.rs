//! `regpump`: membership, enumeration, pumping lengths and graph export for
//! regular expressions.
//!
//! Exit codes: 0 success (and member), 1 non-member, 2 usage or syntax error,
//! 3 resource limit or port in use.

mod config;

use std::io::{self, Write};
use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use regpump_core::pumping::MplMode;
use regpump_service::api::{
    self, GraphQuery, MembershipRequest, ModeParam, MplRequest, PumpRequest, StringsRequest,
};
use regpump_service::{ApiError, ErrorCode, ServiceConfig};
use serde::Serialize;

use crate::config::Config;

#[derive(Debug, Parser)]
#[command(name = "regpump", version, about = "Regular expression workbench")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// key=value configuration file.
    #[arg(long, global = true, env = "REGPUMP_CONFIG")]
    config: Option<PathBuf>,
    /// Enumeration bound for sampled pumping lengths (overrides the config file).
    #[arg(long, global = true)]
    max_len: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Sampled,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test whether INPUT is in the language of REGEX.
    Member { regex: String, input: String },
    /// List language strings in shortlex order.
    Gen {
        regex: String,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        offset: usize,
    },
    /// Minimum pumping length with a witness and its split.
    Mpl {
        regex: String,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Build x y^i z and test it for membership.
    Pump {
        regex: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        i: usize,
    },
    /// Print the NFA in DOT format.
    Graph { regex: String },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        bind: IpAddr,
    },
}

enum Failure {
    Usage(String),
    Api(ApiError),
    Resource(String),
}

impl From<ApiError> for Failure {
    fn from(e: ApiError) -> Self {
        Failure::Api(e)
    }
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Usage(_) => 2,
        Failure::Api(e) if e.code == ErrorCode::ResourceLimit => 3,
        Failure::Api(_) => 2,
        Failure::Resource(_) => 3,
    }
}

struct Out {
    format: Format,
    epsilon: char,
}

impl Out {
    fn text(&self, s: &str) -> String {
        if s.is_empty() {
            self.epsilon.to_string()
        } else {
            s.to_owned()
        }
    }

    fn json(&self, value: &impl Serialize) {
        println!("{}", serde_json::to_string(value).expect("serializable"));
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "True"
    } else {
        "False"
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(|e| Failure::Usage(e.to_string()))?,
        None => Config::default(),
    };
    let service = ServiceConfig {
        reserved: config.reserved,
        limits: config.limits,
        max_len: cli.max_len.or(config.max_len),
        ..ServiceConfig::default()
    };
    let out = Out { format: cli.format, epsilon: config.reserved.epsilon };
    let plain = out.format == Format::Plain;

    match cli.command {
        Command::Member { regex, input } => {
            let r = api::membership(&service, MembershipRequest { regex, input })?;
            if plain {
                println!("{}", verdict(r.member));
            } else {
                out.json(&r);
            }
            Ok(if r.member { 0 } else { 1 })
        }
        Command::Gen { regex, count, offset } => {
            let count = usize::try_from(count).unwrap_or(usize::MAX);
            let r = api::strings(&service, StringsRequest { regex, count, offset })?;
            if plain {
                for s in &r.strings {
                    println!("{}", out.text(s));
                }
                if r.exhausted {
                    eprintln!("language exhausted after {} strings", r.next_offset);
                }
            } else {
                out.json(&r);
            }
            Ok(0)
        }
        Command::Mpl { regex, mode } => {
            let mode = match mode {
                Mode::Exact => ModeParam::Exact,
                Mode::Sampled => ModeParam::Sampled,
            };
            let r = api::mpl(&service, MplRequest { regex, mode, max_len: None })?;
            if plain {
                println!("p={}", r.p);
                if let Some(w) = &r.witness {
                    println!("witness={}", out.text(w));
                }
                if let Some(s) = &r.split {
                    println!("x={} y={} z={}", out.text(&s.x), out.text(&s.y), out.text(&s.z));
                }
                let mode = match r.mode {
                    MplMode::Exact => "exact",
                    MplMode::Sampled => "sampled",
                };
                println!("mode={mode}");
                if let Some(c) = &r.counterexample {
                    println!("counterexample={}", out.text(c));
                }
            } else {
                out.json(&r);
            }
            Ok(0)
        }
        Command::Pump { regex, x, y, z, i } => {
            let r = api::pump_string(&service, PumpRequest { regex, x, y, z, i })?;
            if plain {
                println!("pumped={}", out.text(&r.pumped));
                println!("member={}", verdict(r.member));
            } else {
                out.json(&r);
            }
            Ok(0)
        }
        Command::Graph { regex } => {
            let dot = api::graph(&service, GraphQuery { regex })?;
            if plain {
                print!("{dot}");
            } else {
                out.json(&serde_json::json!({ "dot": dot }));
            }
            Ok(0)
        }
        Command::Serve { port, bind } => serve(SocketAddr::new(bind, port), service, &out),
    }
}

fn serve(addr: SocketAddr, config: ServiceConfig, out: &Out) -> Result<u8, Failure> {
    let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure::Resource(e.to_string()))?;
    runtime.block_on(async {
        let listener = regpump_service::bind(addr)
            .await
            .map_err(|e| Failure::Resource(format!("cannot bind {addr}: {e}")))?;
        let local = listener.local_addr().map_err(|e| Failure::Resource(e.to_string()))?;
        if out.format == Format::Plain {
            println!("listening on http://{local}");
        } else {
            out.json(&serde_json::json!({ "listening": local.to_string() }));
        }
        io::stdout().flush().ok();
        let shutdown = async {
            tokio::signal::ctrl_c().await.ok();
        };
        regpump_service::serve(listener, config, shutdown)
            .await
            .map_err(|e| Failure::Resource(e.to_string()))?;
        Ok(0)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Resource(m) => eprintln!("error: {m}"),
                Failure::Api(e) => eprintln!("error: {}", e.message),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}
