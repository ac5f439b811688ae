//! The input language, command dispatch and the reproduction suite.

mod run;
mod session;
mod suite;

pub use run::{exit_code, run, Command, Flags, ResultDoc};
pub use session::{Binding, Session};
pub use suite::{fixture, paper_suite, SuiteItem, SuiteStatus, FIXTURES};
