//! Verification suites: closed forms and kernel identities checked against
//! the brute-force engine and independent recursions.
//!
//! Cases within a suite are independent; they are spread over worker threads,
//! each with its own kernel. Random cases are drawn up front from a seeded
//! generator so reports do not depend on the thread count.

use std::fmt;
use std::str::FromStr;
use std::thread;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cgt::{mex, nim_add, GameValue, Kernel, KernelError, Outcome};
use crate::closed_forms;
use crate::closed_forms::{star_value, ClosedFormResult, NotCoveredCode};
use crate::engine::{EngineError, Player, Position, SearchConfig, Solver, VertexSet};
use crate::graph::{Color, ColoredGraph, FamilySpec};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Suite {
    KernelIdentities,
    Stars,
    Bipartite,
    Split,
    PathsCycles,
    Laws,
    StarForests,
    Nimbers,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::KernelIdentities,
        Suite::Stars,
        Suite::Bipartite,
        Suite::Split,
        Suite::PathsCycles,
        Suite::Laws,
        Suite::StarForests,
        Suite::Nimbers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::KernelIdentities => "kernel-identities",
            Suite::Stars => "stars",
            Suite::Bipartite => "bipartite",
            Suite::Split => "split",
            Suite::PathsCycles => "paths-cycles",
            Suite::Laws => "laws",
            Suite::StarForests => "star-forests",
            Suite::Nimbers => "nimbers",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            format!("unknown suite {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random graphs drawn by the law suite.
    pub law_samples: usize,
    /// Largest graph the law suite draws.
    pub law_max_vertices: usize,
    /// Random forests drawn by the star-forest suite.
    pub forests: usize,
    pub threads: usize,
    pub search: SearchConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0x5eed_d06a,
            law_samples: 500,
            law_max_vertices: 7,
            forests: 100,
            threads: thread::available_parallelism().map_or(1, |n| n.get()),
            search: SearchConfig::default(),
        }
    }
}

/// Result of one case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseResult {
    Pass,
    Fail(String),
    NotCovered,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: usize,
    pub failed: usize,
    pub not_covered: usize,
    /// Descriptions of failing cases, in case order.
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn collect(suite: Suite, started: Instant, results: Vec<CaseResult>) -> Self {
        let mut report =
            SuiteReport { suite, passed: 0, failed: 0, not_covered: 0, failures: Vec::new(), elapsed: Duration::ZERO };
        for r in results {
            match r {
                CaseResult::Pass => report.passed += 1,
                CaseResult::NotCovered => report.not_covered += 1,
                CaseResult::Fail(msg) => {
                    report.failed += 1;
                    report.failures.push(msg);
                }
            }
        }
        report.elapsed = started.elapsed();
        report
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} passed, {} failed, {} not covered ({:.2?})",
            if self.ok() { "PASS" } else { "FAIL" },
            self.suite,
            self.passed,
            self.failed,
            self.not_covered,
            self.elapsed
        )
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> SuiteReport {
    let started = Instant::now();
    let results = match suite {
        Suite::KernelIdentities => kernel_identities(),
        Suite::Stars => stars(config),
        Suite::Bipartite => bipartite(config),
        Suite::Split => split(config),
        Suite::PathsCycles => paths_cycles(config),
        Suite::Laws => laws(config),
        Suite::StarForests => star_forests(config),
        Suite::Nimbers => nimbers(),
    };
    SuiteReport::collect(suite, started, results)
}

pub fn run_all(config: &VerifyConfig) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, config)).collect()
}

/// Applies `f` to every item on up to `threads` workers, keeping item order.
fn parallel_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&mut Kernel, &T) -> R + Sync,
{
    if items.is_empty() {
        return Vec::new();
    }
    let chunk = items.len().div_ceil(threads.max(1));
    thread::scope(|scope| {
        let workers: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                scope.spawn(move || {
                    let mut kernel = Kernel::new();
                    part.iter().map(|item| f(&mut kernel, item)).collect::<Vec<R>>()
                })
            })
            .collect();
        workers.into_iter().flat_map(|w| w.join().expect("verification worker panicked")).collect()
    })
}

#[derive(Debug)]
enum CaseError {
    Engine(EngineError),
    Kernel(KernelError),
}

impl From<EngineError> for CaseError {
    fn from(e: EngineError) -> Self {
        CaseError::Engine(e)
    }
}

impl From<KernelError> for CaseError {
    fn from(e: KernelError) -> Self {
        CaseError::Kernel(e)
    }
}

impl fmt::Display for CaseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseError::Engine(e) => write!(f, "{e}"),
            CaseError::Kernel(e) => write!(f, "{e}"),
        }
    }
}

fn settle(label: impl fmt::Display, r: Result<CaseResult, CaseError>) -> CaseResult {
    r.unwrap_or_else(|e| CaseResult::Fail(format!("{label}: {e}")))
}

fn oracle(kernel: &mut Kernel, search: SearchConfig, graph: &ColoredGraph) -> Result<GameValue, EngineError> {
    Solver::new(search).game_value(kernel, &Position::new(graph)?)
}

fn compare(kernel: &mut Kernel, label: impl fmt::Display, claimed: GameValue, oracle: GameValue) -> CaseResult {
    if claimed == oracle {
        CaseResult::Pass
    } else {
        let (c, o) = (kernel.display(claimed), kernel.display(oracle));
        CaseResult::Fail(format!("{label}: closed form {c}, oracle {o}"))
    }
}

/// All colorings of `len` vertices, in base-3 order.
fn colorings(len: usize) -> Vec<Vec<Color>> {
    let total = 3usize.pow(len as u32);
    (0..total)
        .map(|mut m| {
            (0..len)
                .map(|_| {
                    let c = Color::ALL[m % 3];
                    m /= 3;
                    c
                })
                .collect()
        })
        .collect()
}

fn colors_str(colors: &[Color]) -> String {
    colors.iter().map(|c| c.as_char()).collect()
}

fn identity_checks(kernel: &mut Kernel) -> Result<Vec<(String, GameValue, GameValue)>, KernelError> {
    let zero = kernel.zero();
    let mut checks = Vec::new();
    for n in 0..=4u32 {
        let up = kernel.up_multiple(n, false)?;
        let up_star = kernel.up_multiple(n, true)?;
        let down = kernel.down_multiple(n, false)?;
        let down_star = kernel.down_multiple(n, true)?;
        let lhs = kernel.make_game(&[zero], &[up])?;
        checks.push((format!("{{0|{n}^}} = {}^*", n + 1), lhs, kernel.up_multiple(n + 1, true)?));
        let lhs = kernel.make_game(&[zero], &[up_star])?;
        checks.push((format!("{{0|{n}^*}} = {}^", n + 1), lhs, kernel.up_multiple(n + 1, false)?));
        let lhs = kernel.make_game(&[down], &[zero])?;
        checks.push((format!("{{{n}v|0}} = {}v*", n + 1), lhs, kernel.down_multiple(n + 1, true)?));
        let lhs = kernel.make_game(&[down_star], &[zero])?;
        checks.push((format!("{{{n}v*|0}} = {}v", n + 1), lhs, kernel.down_multiple(n + 1, false)?));
    }
    for n in 1..=4u32 {
        let up = kernel.up_tower(n, true)?;
        let up_prev = kernel.up_tower(n - 1, true)?;
        let up_next = kernel.up_tower(n + 1, true)?;
        let down = kernel.down_tower(n, true)?;
        let down_prev = kernel.down_tower(n - 1, true)?;
        let down_next = kernel.down_tower(n + 1, true)?;

        let g = kernel.make_game(&[zero, up_prev], &[zero, up_next])?;
        checks.push((format!("^[{n}]* = {{0,^[{}]*|0,^[{}]*}}", n - 1, n + 1), up, g));
        let g = kernel.make_game(&[zero, up_prev], &[zero])?;
        checks.push((format!("^[{n}]* = {{0,^[{}]*|0}}", n - 1), up, g));
        let g = kernel.make_game(&[zero, down_next], &[zero, down_prev])?;
        checks.push((format!("v[{n}]* = {{0,v[{}]*|0,v[{}]*}}", n + 1, n - 1), down, g));
        let g = kernel.make_game(&[zero], &[zero, down_prev])?;
        checks.push((format!("v[{n}]* = {{0|0,v[{}]*}}", n - 1), down, g));

        let inner = kernel.make_game(&[zero, up], &[zero, up])?;
        let g = kernel.make_game(&[zero, inner], &[zero, inner])?;
        checks.push((format!("^[{n}]* = {{0,{{0,^[{n}]*|0,^[{n}]*}}|0,{{0,^[{n}]*|0,^[{n}]*}}}}"), up, g));
        let inner = kernel.make_game(&[zero, down], &[zero, down])?;
        let g = kernel.make_game(&[zero, inner], &[zero, inner])?;
        checks.push((format!("v[{n}]* = {{0,{{0,v[{n}]*|0,v[{n}]*}}|0,{{0,v[{n}]*|0,v[{n}]*}}}}"), down, g));
    }
    Ok(checks)
}

/// Identities relating `{0 | n·↑}`-style games to multiples of up, for
/// `n` in `0..=4`, and the tower identities for `n` in `1..=4`.
fn kernel_identities() -> Vec<CaseResult> {
    let mut kernel = Kernel::new();
    let checks = match identity_checks(&mut kernel) {
        Ok(c) => c,
        Err(e) => return vec![CaseResult::Fail(format!("building identities: {e}"))],
    };
    checks
        .into_iter()
        .map(|(label, lhs, rhs)| {
            if lhs == rhs {
                CaseResult::Pass
            } else {
                let (l, r) = (kernel.display(lhs), kernel.display(rhs));
                CaseResult::Fail(format!("{label}: left side is {l}, right side is {r}"))
            }
        })
        .collect()
}

/// Whether a star is outside every star formula's stated range.
pub fn is_star_range_exclusion(center: Color, a: usize, b: usize, c: usize) -> bool {
    let n = a + b + c;
    n == 0 || (center != Color::C && c == 0 && n == 1)
}

fn stars(config: &VerifyConfig) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for center in Color::ALL {
        for n in 0..=7 {
            for a in 0..=n {
                for b in 0..=n - a {
                    cases.push((center, a, b, n - a - b));
                }
            }
        }
    }
    parallel_map(&cases, config.threads, |kernel, &(center, a, b, c)| {
        let label = format!("star(center={center},a={a},b={b},c={c})");
        let run = |kernel: &mut Kernel| -> Result<CaseResult, CaseError> {
            match star_value(kernel, center, a, b, c)? {
                ClosedFormResult::Value(g, _) => {
                    let graph = FamilySpec::Star { center, a, b, c }.build().expect("small star");
                    let o = oracle(kernel, config.search, &graph)?;
                    Ok(compare(kernel, &label, g, o))
                }
                ClosedFormResult::NotCovered { code, reason } => {
                    if code == NotCoveredCode::Range && is_star_range_exclusion(center, a, b, c) {
                        Ok(CaseResult::NotCovered)
                    } else {
                        Ok(CaseResult::Fail(format!("{label}: unexpectedly not covered ({code}: {reason})")))
                    }
                }
            }
        };
        settle(&label, run(kernel))
    })
}

fn bipartite(config: &VerifyConfig) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for s in 2..=4 {
        for t in 2..=4 {
            for cs in colorings(s) {
                for ct in colorings(t) {
                    cases.push((cs.clone(), ct));
                }
            }
        }
    }
    parallel_map(&cases, config.threads, |kernel, (s, t)| {
        let label = format!("kst(S={},T={})", colors_str(s), colors_str(t));
        let run = |kernel: &mut Kernel| -> Result<CaseResult, CaseError> {
            let g = match closed_forms::bipartite_value(kernel, s, t)? {
                ClosedFormResult::Value(g, _) => g,
                ClosedFormResult::NotCovered { code: NotCoveredCode::OpenBipartite, .. } => {
                    return Ok(CaseResult::NotCovered)
                }
                ClosedFormResult::NotCovered { code, reason } => {
                    return Ok(CaseResult::Fail(format!("{label}: unexpectedly not covered ({code}: {reason})")))
                }
            };
            let graph = FamilySpec::CompleteBipartite(s.clone(), t.clone()).build().expect("small graph");
            let o = oracle(kernel, config.search, &graph)?;
            let verdict = compare(kernel, &label, g, o);
            let all_a = s.iter().chain(t.iter()).all(|&c| c == Color::A);
            if verdict == CaseResult::Pass && all_a {
                let expected = crate::cgt::NamedValue::Integer(s.len().max(t.len()) as i64);
                let named = kernel.classify(o);
                if named != expected {
                    return Ok(CaseResult::Fail(format!("{label}: classified as {named:?}, expected {expected:?}")));
                }
            }
            Ok(verdict)
        };
        settle(&label, run(kernel))
    })
}

fn split(config: &VerifyConfig) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for k in 1..=3 {
        for s in 0..=4 {
            for ck in colorings(k) {
                for cs in colorings(s) {
                    cases.push((ck.clone(), cs));
                }
            }
        }
    }
    parallel_map(&cases, config.threads, |kernel, (clique, independent)| {
        let label = format!("split(K={},S={})", colors_str(clique), colors_str(independent));
        let run = |kernel: &mut Kernel| -> Result<CaseResult, CaseError> {
            let (center, a, b, c) = closed_forms::reduced_star(clique, independent);
            let Some(g) = star_value(kernel, center, a, b, c)?.value() else {
                return Ok(CaseResult::NotCovered);
            };
            let graph = FamilySpec::CompleteSplit(clique.clone(), independent.clone()).build().expect("small graph");
            let o = oracle(kernel, config.search, &graph)?;
            Ok(compare(kernel, &label, g, o))
        };
        settle(&label, run(kernel))
    })
}

/// Alice moves first on all-`C` paths and cycles.
fn paths_cycles(config: &VerifyConfig) -> Vec<CaseResult> {
    let mut cases: Vec<(bool, usize)> = (1..=12).map(|n| (false, n)).collect();
    cases.extend((3..=12).map(|n| (true, n)));
    parallel_map(&cases, config.threads, |_, &(cycle, n)| {
        let (spec, expected) = if cycle {
            (FamilySpec::Cycle(vec![Color::C; n]), n % 4 == 3)
        } else {
            (FamilySpec::Path(vec![Color::C; n]), n % 4 != 0)
        };
        let label = format!("{}_{n}", if cycle { "C" } else { "P" });
        let graph = spec.build().expect("small graph");
        let run = || -> Result<CaseResult, CaseError> {
            let winner = Solver::new(config.search).winner(&Position::new(&graph)?, Player::Alice)?;
            let alice_wins = winner == Player::Alice;
            Ok(if alice_wins == expected {
                CaseResult::Pass
            } else {
                CaseResult::Fail(format!("{label}: winner {winner}, expected Alice wins = {expected}"))
            })
        };
        settle(&label, run())
    })
}

/// A random simple graph with `1..=max_vertices` vertices, edge probability
/// 1/2 and uniform colors.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> ColoredGraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let colors: Vec<Color> = (0..n).map(|_| Color::ALL[rng.gen_range(0..3)]).collect();
    let mut g = ColoredGraph::from_colors(&colors);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// Outcome class implied by the winners with each player moving first.
pub fn outcome_from_winners(alice_first: Player, bob_first: Player) -> Outcome {
    match (alice_first, bob_first) {
        (Player::Alice, Player::Alice) => Outcome::AliceAlways,
        (Player::Bob, Player::Bob) => Outcome::BobAlways,
        (Player::Alice, Player::Bob) => Outcome::FirstPlayerWins,
        (Player::Bob, Player::Alice) => Outcome::SecondPlayerWins,
    }
}

struct LawCase {
    graph: ColoredGraph,
    dominated: VertexSet,
    other: ColoredGraph,
}

fn check_laws(kernel: &mut Kernel, search: SearchConfig, case: &LawCase) -> Result<Vec<String>, CaseError> {
    let solver = Solver::new(search);
    let mut broken = Vec::new();
    let g = &case.graph;
    let position = Position::with_dominated(g, case.dominated)?;
    let value = solver.game_value(kernel, &position)?;

    let swapped = g.swap_colors();
    let swapped_value = solver.game_value(kernel, &Position::with_dominated(&swapped, case.dominated)?)?;
    if swapped_value != kernel.neg(value) {
        broken.push("color swap is not negation".to_string());
    }

    let implied =
        outcome_from_winners(solver.winner(&position, Player::Alice)?, solver.winner(&position, Player::Bob)?);
    if implied != kernel.outcome(value) {
        broken.push(format!("winners imply {implied:?}, value has outcome {:?}", kernel.outcome(value)));
    }

    let impartial = g.recolored(Color::C);
    let impartial_value = solver.game_value(kernel, &Position::with_dominated(&impartial, case.dominated)?)?;
    if kernel.as_nimber(impartial_value).is_none() {
        broken.push(format!("all-C recoloring has non-nimber value {}", kernel.display(impartial_value)));
    }

    let (union, _) = ColoredGraph::disjoint_union(&[g.clone(), case.other.clone()]);
    let whole = solver.game_value(kernel, &Position::new(&union)?)?;
    let first = solver.game_value(kernel, &Position::new(g)?)?;
    let second = solver.game_value(kernel, &Position::new(&case.other)?)?;
    let sum = kernel.add(first, second)?;
    let by_components = solver.value_of_graph(kernel, &union)?;
    if whole != sum || whole != by_components {
        broken.push("value of a union differs from the sum of its parts".to_string());
    }
    Ok(broken)
}

fn laws(config: &VerifyConfig) -> Vec<CaseResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let cases: Vec<LawCase> = (0..config.law_samples)
        .map(|_| {
            let graph = random_graph(&mut rng, config.law_max_vertices);
            let dominated = if rng.gen_bool(0.5) {
                (0..graph.vertex_count()).filter(|_| rng.gen_bool(0.25)).collect()
            } else {
                VertexSet::EMPTY
            };
            let other = random_graph(&mut rng, config.law_max_vertices);
            LawCase { graph, dominated, other }
        })
        .collect();
    parallel_map(&cases, config.threads, |kernel, case| {
        let label = format!("graph\n{}(dominated {:#x})", case.graph.to_edge_list(), case.dominated.bits());
        match check_laws(kernel, config.search, case) {
            Ok(broken) if broken.is_empty() => CaseResult::Pass,
            Ok(broken) => CaseResult::Fail(format!("{label}: {}", broken.join("; "))),
            Err(e) => CaseResult::Fail(format!("{label}: {e}")),
        }
    })
}

fn star_forests(config: &VerifyConfig) -> Vec<CaseResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0xf0_4e57);
    let cases: Vec<Vec<(Color, usize, usize, usize)>> = (0..config.forests)
        .map(|_| {
            (0..rng.gen_range(1..=3))
                .map(|_| {
                    let center = Color::ALL[rng.gen_range(0..3)];
                    let (mut a, mut b, mut c) = (0, 0, 0);
                    for _ in 0..rng.gen_range(0..=4) {
                        match rng.gen_range(0..3) {
                            0 => a += 1,
                            1 => b += 1,
                            _ => c += 1,
                        }
                    }
                    (center, a, b, c)
                })
                .collect()
        })
        .collect();
    parallel_map(&cases, config.threads, |kernel, stars| {
        let specs: Vec<FamilySpec> =
            stars.iter().map(|&(center, a, b, c)| FamilySpec::Star { center, a, b, c }).collect();
        let forest = FamilySpec::Union(specs.clone());
        let label = forest.to_string();
        let run = |kernel: &mut Kernel| -> Result<CaseResult, CaseError> {
            let mut total = kernel.zero();
            for (&(center, a, b, c), spec) in stars.iter().zip(&specs) {
                let part = match star_value(kernel, center, a, b, c)?.value() {
                    Some(g) => g,
                    None => oracle(kernel, config.search, &spec.build().expect("small star"))?,
                };
                total = kernel.add(total, part)?;
            }
            let o = oracle(kernel, config.search, &forest.build().expect("small forest"))?;
            Ok(compare(kernel, &label, total, o))
        };
        settle(&label, run(kernel))
    })
}

fn nimbers() -> Vec<CaseResult> {
    let mut kernel = Kernel::new();
    let mut results = Vec::new();
    let mut check = |ok: bool, label: String| {
        results.push(if ok { CaseResult::Pass } else { CaseResult::Fail(label) });
    };
    for m in 0..=8 {
        for n in 0..=8 {
            let ok = (|| -> Result<bool, KernelError> {
                let (a, b) = (kernel.nimber(m)?, kernel.nimber(n)?);
                let sum = kernel.add(a, b)?;
                Ok(kernel.as_nimber(sum) == Some(nim_add(m, n)))
            })()
            .unwrap_or(false);
            check(ok, format!("*{m} + *{n} != *{}", nim_add(m, n)));
        }
    }
    check(mex([0, 1, 2, 5]) == 3, "mex{0,1,2,5} != 3".into());
    check(mex([]) == 0, "mex{} != 0".into());
    check(mex([0]) == 1, "mex{0} != 1".into());
    check(mex([0, 2]) == 1, "mex{0,2} != 1".into());
    check(mex([0, 1]) == 2, "mex{0,1} != 2".into());
    check(nim_add(nim_add(1, 2), 3) == 0, "1 xor 2 xor 3 != 0".into());
    let options = [0, 1, 2, 5].map(|k| kernel.nimber(k).expect("small nimber"));
    let g = kernel.make_game(&options, &options).expect("small game");
    check(kernel.as_nimber(g) == Some(3), "{*0,*1,*2,*5 | *0,*1,*2,*5} != *3".into());
    let triple = [1, 2, 3].map(|k| kernel.nimber(k).expect("small nimber"));
    let zero = kernel.sum(triple).expect("small sum");
    check(zero == kernel.zero(), "*1 + *2 + *3 != 0".into());
    results
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> VerifyConfig {
        VerifyConfig { law_samples: 20, forests: 10, threads: 2, ..VerifyConfig::default() }
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn outcome_from_winner_pairs() {
        assert_eq!(outcome_from_winners(Player::Alice, Player::Bob), Outcome::FirstPlayerWins);
        assert_eq!(outcome_from_winners(Player::Bob, Player::Alice), Outcome::SecondPlayerWins);
    }

    #[test]
    fn parallel_map_keeps_order() {
        let items: Vec<u32> = (0..37).collect();
        let out = parallel_map(&items, 4, |_, &x| x * 2);
        assert_eq!(out, items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn random_cases_do_not_depend_on_thread_count() {
        let one = run_suite(Suite::Laws, &VerifyConfig { threads: 1, ..small_config() });
        let many = run_suite(Suite::Laws, &small_config());
        assert_eq!((one.passed, one.failed), (many.passed, many.failed));
        assert!(one.ok());
    }

    #[test]
    fn nimber_suite_passes() {
        let report = run_suite(Suite::Nimbers, &small_config());
        assert!(report.ok(), "{:?}", report.failures);
        assert_eq!(report.passed, 81 + 8);
    }

    #[test]
    fn range_exclusions() {
        assert!(is_star_range_exclusion(Color::C, 0, 0, 0));
        assert!(is_star_range_exclusion(Color::A, 0, 1, 0));
        assert!(!is_star_range_exclusion(Color::A, 0, 0, 1));
        assert!(!is_star_range_exclusion(Color::C, 1, 0, 0));
    }
}
