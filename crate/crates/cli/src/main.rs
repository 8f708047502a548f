mod args;
mod input;
mod report;

use std::process::ExitCode;

use clap::Parser;
use domgame_core::closed_forms::{evaluate, ClosedFormResult};
use domgame_core::engine::{EngineError, Player, Position, SearchConfig, Solver};
use domgame_core::verify::{outcome_from_winners, run_suite, Suite, VerifyConfig};
use domgame_core::{GameValue, Kernel, KernelError, Outcome};

use args::{Cli, Command, Common, FirstArg, Format};
use report::{ClosedFormReport, ComponentReport, SumReport, ValueReport, VerifyReport};

const EXIT_DISAGREE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BOUND: u8 = 3;

enum Failure {
    Input(String),
    Bound(String),
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Unplayable { .. } | EngineError::NoSuchVertex(_) => Failure::Input(e.to_string()),
            EngineError::StateLimit { .. } => Failure::Bound(format!("{e}; lower --max-vertices or split the input")),
            _ => Failure::Bound(e.to_string()),
        }
    }
}

impl From<KernelError> for Failure {
    fn from(e: KernelError) -> Self {
        Failure::Bound(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Bound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BOUND)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Value { input, common } => {
            let report = solve(&input, &common, true)?.report;
            let code = if report.agree == Some(false) { EXIT_DISAGREE } else { 0 };
            emit(common.format, &report, || report.to_text());
            Ok(code)
        }
        Command::Winner { input, first, common } => {
            let first = match first {
                FirstArg::Alice => Player::Alice,
                FirstArg::Bob => Player::Bob,
            };
            let winner = winner(&input, &common, first)?;
            emit(
                common.format,
                &serde_json::json!({ "input": input, "first": first.to_string(), "winner": winner.to_string() }),
                || winner.to_string(),
            );
            Ok(0)
        }
        Command::Outcome { input, common } => {
            let report = solve(&input, &common, false)?.report;
            emit(common.format, &serde_json::json!({ "input": report.input, "outcome": report.outcome }), || {
                report.outcome.clone()
            });
            Ok(0)
        }
        Command::Sum { inputs, common } => {
            if !common.predominate.is_empty() {
                return Err(Failure::Input("--predominate is not supported by sum".into()));
            }
            let mut kernel = Kernel::new();
            let mut components = Vec::new();
            let mut total = kernel.zero();
            for input in &inputs {
                let Solved { value, report, .. } = solve_in(&mut kernel, input, &common, false)?;
                total = kernel.add(total, value)?;
                components.push(ComponentReport { input: report.input, value: report.value, named: report.named });
            }
            let named = kernel.classify(total);
            let report = SumReport {
                components,
                value: kernel.display(total),
                named: domgame_core::cgt::describe(&mut kernel, named),
                outcome: kernel.outcome(total).to_string(),
            };
            emit(common.format, &report, || report.to_text());
            Ok(0)
        }
        Command::Verify { suite, seed, samples, forests, threads, common } => {
            let suites: Vec<Suite> =
                if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse().map_err(Failure::Input)?] };
            let mut config = VerifyConfig::default();
            config.search.max_vertices = common.max_vertices;
            config.seed = seed.unwrap_or(config.seed);
            config.law_samples = samples.unwrap_or(config.law_samples);
            config.forests = forests.unwrap_or(config.forests);
            config.threads = threads.unwrap_or(config.threads).max(1);
            let reports: Vec<VerifyReport> =
                suites.into_iter().map(|s| VerifyReport::from(&run_suite(s, &config))).collect();
            let ok = reports.iter().all(|r| r.failed == 0);
            emit(common.format, &reports, || reports.iter().map(VerifyReport::to_text).collect::<Vec<_>>().join("\n"));
            Ok(if ok { 0 } else { EXIT_DISAGREE })
        }
    }
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Text => println!("{}", text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("reports serialize")),
    }
}

fn solver(common: &Common) -> Solver {
    Solver::new(SearchConfig { max_vertices: common.max_vertices, ..SearchConfig::default() })
}

struct Solved {
    value: GameValue,
    outcome: Outcome,
    report: ValueReport,
}

fn solve(input: &str, common: &Common, winners: bool) -> Result<Solved, Failure> {
    let mut kernel = Kernel::new();
    solve_in(&mut kernel, input, common, winners)
}

/// Value of `input` from the closed form, the search, or both.
fn solve_in(kernel: &mut Kernel, input: &str, common: &Common, winners: bool) -> Result<Solved, Failure> {
    let loaded = input::load(input).map_err(Failure::Input)?;
    let dominated = input::predominated(&loaded.graph, &common.predominate).map_err(Failure::Input)?;
    let position = Position::with_dominated(&loaded.graph, dominated)?;
    let solver = solver(common);

    let closed = match &loaded.family {
        Some(family) if dominated.is_empty() => Some(evaluate(kernel, family)?),
        _ => None,
    };
    let closed_value = closed.as_ref().and_then(ClosedFormResult::value);
    let oracle = match solver.value_by_components(kernel, &position) {
        Ok(v) => Some(v),
        Err(e @ (EngineError::TooLarge { .. } | EngineError::StateLimit { .. })) => {
            if closed_value.is_none() {
                return Err(e.into());
            }
            None
        }
        Err(e) => return Err(e.into()),
    };
    let value = oracle.or(closed_value).expect("one of the two succeeded");
    let agree = match (oracle, closed_value) {
        (Some(o), Some(c)) => Some(o == c),
        _ => None,
    };

    let outcome = kernel.outcome(value);
    let (alice_first, bob_first) = if winners {
        match (solver.winner(&position, Player::Alice), solver.winner(&position, Player::Bob)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => winners_from_outcome(outcome),
        }
    } else {
        winners_from_outcome(outcome)
    };
    debug_assert!(agree == Some(false) || outcome_from_winners(alice_first, bob_first) == outcome);

    let named = kernel.classify(value);
    let report = ValueReport {
        input: loaded.text,
        value: kernel.display(value),
        named: domgame_core::cgt::describe(kernel, named),
        outcome: outcome.to_string(),
        winner_first_alice: alice_first.to_string(),
        winner_first_bob: bob_first.to_string(),
        closed_form: closed.map(|c| ClosedFormReport::new(kernel, &c)),
        oracle_checked: oracle.is_some(),
        agree,
    };
    Ok(Solved { value, outcome, report })
}

fn winners_from_outcome(outcome: Outcome) -> (Player, Player) {
    match outcome {
        Outcome::AliceAlways => (Player::Alice, Player::Alice),
        Outcome::BobAlways => (Player::Bob, Player::Bob),
        Outcome::FirstPlayerWins => (Player::Alice, Player::Bob),
        Outcome::SecondPlayerWins => (Player::Bob, Player::Alice),
    }
}

/// Direct win/loss search when the graph fits the bound, otherwise the
/// outcome of the value.
fn winner(input: &str, common: &Common, first: Player) -> Result<Player, Failure> {
    let loaded = input::load(input).map_err(Failure::Input)?;
    let dominated = input::predominated(&loaded.graph, &common.predominate).map_err(Failure::Input)?;
    let position = Position::with_dominated(&loaded.graph, dominated)?;
    match solver(common).winner(&position, first) {
        Ok(w) => Ok(w),
        Err(EngineError::TooLarge { .. }) => {
            let (alice_first, bob_first) = winners_from_outcome(solve(input, common, false)?.outcome);
            Ok(if first == Player::Alice { alice_first } else { bob_first })
        }
        Err(e) => Err(e.into()),
    }
}
