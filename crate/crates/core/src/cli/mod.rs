//! Parser, printer, command-line front end and the seeded proposition
//! checks.

pub mod command;
pub mod parser;
pub mod printer;
pub mod verify;

pub use command::{run_command, BinomialAction, Command, ParsedCommand};
pub use verify::{verify_proposition, Proposition, VerifyReport};
