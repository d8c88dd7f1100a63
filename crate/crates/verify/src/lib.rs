//! Identity registry, root-of-unity specializations, report generation and
//! the `ospkernel` command-line verifier for U_{r,s}(osp(1,2)).

pub mod check;
pub mod config;
pub mod error;
pub mod generic;
pub mod registry;
pub mod report;
pub mod roots;
pub mod runner;
pub mod specialization;

pub use config::{Bounds, Config};
pub use error::{Result, VerifyError};
pub use registry::{lookup, Entry, Invocation, ParamMap, REGISTRY};
pub use report::{IdentityReport, Status};
pub use runner::{verify_all, verify_identity, RunOptions};
pub use specialization::{find_specialization, Orders, Specialization, DEFAULT_CONDUCTOR};
