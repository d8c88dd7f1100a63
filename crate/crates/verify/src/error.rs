use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("identity `{0}` requires a root-of-unity specialization (--spec)")]
    SpecializationRequired(String),
    #[error("identity `{name}` does not apply: {reason}")]
    NotApplicable { name: String, reason: String },
    #[error("missing parameter `{param}` for identity `{name}`")]
    MissingParam { name: String, param: &'static str },
    #[error("no assignment at conductor {conductor} gives q of order {ell}")]
    NoValidAssignment { ell: u32, conductor: u32 },
    #[error("q is not a root of unity under this assignment")]
    NotRootOfUnity,
    #[error("invalid specialization id `{0}` (expected `ell<N>`, `ell<N>@<conductor>` or `<n>:<a>:<b>`)")]
    BadSpecId(String),
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] ospkernel_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;
