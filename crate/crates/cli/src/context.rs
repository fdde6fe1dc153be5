//! Session loading, input fingerprints and the report envelope.

use jetdisc::discrepancy::Variety;
use jetdisc::fixtures::{fixture, Fixture};
use jetdisc::groebner::{GroebnerEngine, GroebnerLimits};
use jetdisc::rational::format_rat;
use jetdisc::sampling::SamplingConfig;
use jetdisc::session::Session;
use jetdisc::{Error, ErrorKind, Rat};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::Cli;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone)]
pub struct CliError {
    pub exit_code: u8,
    pub code: String,
    pub message: String,
}

impl CliError {
    pub fn precondition(message: impl Into<String>) -> CliError {
        CliError {
            exit_code: 3,
            code: "precondition".into(),
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let exit_code = match e.kind() {
            ErrorKind::Parse => 2,
            ErrorKind::Precondition => 3,
            ErrorKind::ResourceLimit => 4,
        };
        CliError {
            exit_code,
            code: e.code().into(),
            message: e.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn rat(value: &Rat) -> Value {
    Value::String(format_rat(value))
}

pub struct Context {
    pub session: Session,
    pub fixture: Option<Fixture>,
    pub engine: GroebnerEngine,
    pub sampling: SamplingConfig,
    pub ideal_name: String,
    source: String,
    text_sha256: String,
    variety: Result<Variety, CliError>,
}

impl Context {
    pub fn load(cli: &Cli) -> CliResult<Context> {
        let (text, source, fixture) = match (&cli.session, &cli.suite) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError {
                    exit_code: 2,
                    code: "io_error".into(),
                    message: format!("cannot read {}: {e}", path.display()),
                })?;
                (text, path.display().to_string(), None)
            }
            (None, Some(name)) => {
                let f = fixture(name)?;
                (f.text.to_string(), format!("suite:{name}"), Some(*f))
            }
            (None, None) => {
                return Err(CliError::precondition(
                    "one of --session or --suite is required",
                ))
            }
        };
        let session = Session::parse(&text)?;
        let defaults = GroebnerLimits::default();
        let engine = GroebnerEngine::new(GroebnerLimits {
            max_degree: cli.max_degree.unwrap_or(defaults.max_degree),
            max_pairs: cli.max_pairs.unwrap_or(defaults.max_pairs),
        });
        let sampling = SamplingConfig {
            seed: cli.seed,
            ..SamplingConfig::default()
        };
        let variety = build_variety(&session, &cli.ideal, cli.dim, fixture, &engine);
        Ok(Context {
            session,
            fixture,
            engine,
            sampling,
            ideal_name: cli.ideal.clone(),
            source,
            text_sha256: sha256_hex(&text),
            variety,
        })
    }

    pub fn variety(&self) -> CliResult<&Variety> {
        self.variety.as_ref().map_err(Clone::clone)
    }

    pub fn report(&self, command: &str, result: Value) -> Value {
        let limits = self.engine.limits;
        let mut inputs = json!({
            "session": {
                "source": self.source,
                "sha256": self.text_sha256,
                "canonical_sha256": sha256_hex(&self.session.to_string()),
            },
            "ideal": self.ideal_name,
            "seed": self.sampling.seed,
            "limits": { "max_degree": limits.max_degree, "max_pairs": limits.max_pairs },
        });
        if let Ok(v) = &self.variety {
            inputs["dim"] = json!(v.dim());
        }
        json!({
            "schema": SCHEMA,
            "command": command,
            "inputs": inputs,
            "result": result,
        })
    }
}

/// Dimension from `--dim`, else the fixture record, else the Krull dimension.
fn build_variety(
    session: &Session,
    name: &str,
    dim: Option<usize>,
    fixture: Option<Fixture>,
    engine: &GroebnerEngine,
) -> CliResult<Variety> {
    let ideal = session.ideal(name)?.clone();
    let dim = match dim.or(fixture.filter(|_| name == "X").map(|f| f.dim)) {
        Some(d) => d,
        None => {
            let d = engine.dimension(&ideal)?;
            usize::try_from(d).map_err(|_| {
                CliError::precondition(format!("ideal {name} defines the empty set"))
            })?
        }
    };
    Ok(Variety::new(ideal, dim)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_kinds_map_to_exit_codes() {
        let parse = Error::Parse {
            line: 1,
            column: 2,
            message: "x".into(),
        };
        assert_eq!(CliError::from(parse).exit_code, 2);
        assert_eq!(CliError::from(Error::NoWitnesses).exit_code, 3);
        let limit = Error::ResourceLimit {
            limit: "pairs",
            max: 1,
            reached: 2,
        };
        assert_eq!(CliError::from(limit).exit_code, 4);
    }

    #[test]
    fn fingerprints_are_sha256() {
        assert_eq!(
            sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
