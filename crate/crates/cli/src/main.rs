mod args;
mod commands;
mod config;
mod output;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command, ErrorsCommand, TableCommand};
use commands::Ctx;

fn run(cli: Cli) -> Result<()> {
    let settings = config::resolve(&cli.global)?;
    let ctx = Ctx {
        settings: &settings,
    };
    let records = match cli.command {
        Command::Gen {
            procedure,
            method,
            rows,
            line4,
            ratios,
        } => commands::gen(&ctx, procedure, method, rows, line4, &ratios)?,
        Command::Recip { n, digits } => commands::recip(&ctx, n, digits)?,
        Command::Table {
            which: TableCommand::Reciprocals,
        } => commands::reciprocal_table(&ctx),
        Command::Stats {
            procedure,
            include_one,
        } => commands::stats(procedure, include_one)?,
        Command::Gaps {
            procedure,
            line4,
            exceeding,
        } => commands::gaps(&ctx, procedure, line4, exceeding.as_deref())?,
        Command::Diff {
            from,
            against,
            reading,
            mode,
        } => commands::diff(&ctx, from, against, reading, mode)?,
        Command::Errors { action } => match action {
            ErrorsCommand::List => commands::errors_list(&ctx)?,
            ErrorsCommand::Simulate { model, param } => {
                commands::errors_simulate(&ctx, model, param.as_deref())?
            }
        },
        Command::Bounds { sqrt2 } => commands::bounds(&ctx, sqrt2)?,
        Command::Cane { d, b } => commands::cane(&ctx, &d, &b)?,
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    output::render(&mut out, settings.format, &records)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
