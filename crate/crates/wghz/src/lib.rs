//! State files, reports and the command-line front end over `wghz-core`.

pub mod checks;
pub mod cli;
pub mod report;
pub mod state_io;
pub mod tables;

pub use cli::{run, Outcome};
pub use state_io::{emit, parse, ParseError, Space, StateFile};
