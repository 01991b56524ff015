//! Command-line front end for `antilimit`.
//!
//! Series text follows the grammar below; `+` binds weakest, `R*` scales the
//! term to its right.
//!
//! ```text
//! expr     := term ('+' term)*
//! term     := rational '*' term | atom
//! atom     := ('eta' | 'beta' | 'zeta') '(' integer ')'
//!           | 'prepend' '(' rational ',' expr ')'
//!           | 'explicit' '[' rational (',' rational)* ']'
//!           | '(' expr ')'
//! rational := '-'? digits ('/' digits)?
//! ```

pub mod args;
pub mod doc;
pub mod error;
pub mod render;
pub mod verify;

mod commands;
mod plot;
mod range;

use std::ffi::OsString;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

pub use args::{Cli, Command, Format};
pub use error::CliError;

/// Rendered output and whether the command succeeded.
pub struct Output {
    pub text: String,
    pub success: bool,
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    commands::dispatch(cli)
}

pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(hint) = e.hint() {
                eprintln!("hint: {hint}");
            }
            e.exit_code()
        }
    }
}
