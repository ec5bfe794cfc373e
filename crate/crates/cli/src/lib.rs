//! Command-line front end for `extcalc`.
//!
//! [`run`] takes an argument vector and produces what the binary would print,
//! together with its exit status: 0 on success, 1 when the operation itself
//! rejects its inputs, 2 when the arguments cannot be parsed.

mod commands;
pub mod parse;
mod render;

use serde::Serialize;
use serde_json::Value;

pub use commands::COMMANDS;
pub use parse::{parse_graded, parse_group, ParseError};
pub use render::{graded_text, group_text};

/// Version of the JSON envelope, echoed in every envelope.
pub const SCHEMA_VERSION: u32 = 1;

/// The JSON schema describing envelopes of version [`SCHEMA_VERSION`].
pub const ENVELOPE_SCHEMA: &str = include_str!("../schema/envelope-v1.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    Domain = 1,
    Usage = 2,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub ok: bool,
    pub command: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
}

/// Everything one invocation writes, and its exit status.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub envelope: Envelope,
    pub stdout: String,
    pub stderr: String,
    pub exit: ExitCode,
}

/// Failure of a command, split by who is at fault.
#[derive(Debug)]
pub(crate) enum Failure {
    Usage(ErrorBody),
    Domain(ErrorBody),
}

impl Failure {
    pub(crate) fn usage(code: &str, message: impl Into<String>) -> Failure {
        Failure::Usage(ErrorBody { code: code.into(), message: message.into(), details: None })
    }

    pub(crate) fn domain(e: extcalc::Error) -> Failure {
        Failure::Domain(ErrorBody { code: e.code().into(), message: e.to_string(), details: None })
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        let details = match &e {
            ParseError::Syntax { pos, .. } | ParseError::DuplicateDegree { pos, .. } | ParseError::Invalid { pos, .. } => {
                Some(serde_json::json!({ "position": pos }))
            }
        };
        Failure::Usage(ErrorBody { code: e.code().into(), message: e.to_string(), details })
    }
}

/// Run one invocation. `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let json = args.iter().any(|a| a == "--json");
    let unicode = args.iter().any(|a| a == "--unicode");
    let (command, result) = commands::dispatch(&args);
    let (envelope, text, exit) = match result {
        Ok(commands::Output::Help(text)) => {
            return Outcome {
                envelope: Envelope { schema_version: SCHEMA_VERSION, ok: true, command, result: None, error: None },
                stdout: text,
                stderr: String::new(),
                exit: ExitCode::Ok,
            }
        }
        Ok(commands::Output::Value { json, text }) => (
            Envelope { schema_version: SCHEMA_VERSION, ok: true, command, result: Some(json), error: None },
            text,
            ExitCode::Ok,
        ),
        Err(f) => {
            let (body, exit) = match f {
                Failure::Usage(b) => (b, ExitCode::Usage),
                Failure::Domain(b) => (b, ExitCode::Domain),
            };
            let mut text = format!("error[{}]: {}\n", body.code, body.message);
            if let Some(Value::Array(items)) = body.details.as_ref().and_then(|d| d.get("violations")) {
                for v in items {
                    text.push_str(&format!("  {}\n", v.get("message").and_then(Value::as_str).unwrap_or_default()));
                }
            }
            (
                Envelope { schema_version: SCHEMA_VERSION, ok: false, command, result: None, error: Some(body) },
                text,
                exit,
            )
        }
    };
    let text = if unicode { render::unicode(&text) } else { text };
    let (stdout, stderr) = if json {
        (serde_json::to_string_pretty(&envelope).expect("serializable") + "\n", String::new())
    } else if envelope.ok {
        (text, String::new())
    } else {
        (String::new(), text)
    };
    Outcome { envelope, stdout, stderr, exit }
}
