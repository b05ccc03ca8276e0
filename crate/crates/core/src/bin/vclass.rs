use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use vclass::script::{parse, render_human, render_machine, run, Format, RunConfig};
use vclass::{Budget, MonomialOrder, Options};

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

/// Run a `.vc` script of Segre-class and virtual-class computations.
#[derive(Parser)]
#[command(name = "vclass", version)]
struct Cli {
    /// Script file; `-` reads standard input.
    script: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independent random draws that must agree.
    #[arg(long, default_value_t = 2)]
    redraws: usize,
    #[arg(long, value_enum, default_value = "grevlex")]
    order: OrderArg,
    #[arg(long, value_enum, default_value = "human")]
    format: FormatArg,
    /// Maximum degree of a Gröbner basis element.
    #[arg(long)]
    budget: Option<u32>,
    /// Skip the t-saturation in flat limits.
    #[arg(long)]
    no_saturate: bool,
    /// Accept obstruction twists that differ from the generator degrees.
    #[arg(long)]
    attest_containment: bool,
    /// Report per-directive wall time.
    #[arg(long)]
    timings: bool,
    /// Evaluate directives concurrently.
    #[arg(long)]
    parallel: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let src = if cli.script.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(&cli.script)
    };
    let src = match src {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cannot read {}: {}", cli.script.display(), e);
            return ExitCode::from(2);
        }
    };
    let script = match parse(&src) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}: {}", cli.script.display(), e);
            return ExitCode::from(2);
        }
    };
    let mut budget = Budget::default();
    if let Some(d) = cli.budget {
        budget.max_degree = d;
    }
    let config = RunConfig {
        seed: cli.seed,
        redraws: cli.redraws.max(1),
        budget,
        options: Options { no_saturate: cli.no_saturate, attest_containment: cli.attest_containment },
        order: match cli.order {
            OrderArg::Grevlex => MonomialOrder::GrevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        },
        parallel: cli.parallel,
    };
    let format = match cli.format {
        FormatArg::Human => Format::Human,
        FormatArg::Machine => Format::Machine,
    };
    let (records, error) = match run(&script, &config) {
        Ok(r) => (r, None),
        Err(e) => (e.completed.clone(), Some(e)),
    };
    match format {
        Format::Human => print!("{}", render_human(&records, cli.timings)),
        Format::Machine => print!("{}", render_machine(&records, error.as_ref(), cli.timings)),
    }
    match error {
        Some(e) => {
            eprintln!("{}: {}", cli.script.display(), e);
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
