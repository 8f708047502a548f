//! Closed-form values for the solved graph families: complete graphs,
//! complete bipartite graphs, stars and complete split graphs.
//!
//! Every evaluator either returns a value or says why the instance is not
//! covered; callers fall back to the brute-force engine in the latter case.

use std::fmt;

use crate::cgt::{GameValue, Kernel, KernelError, NamedValue};
use crate::graph::{Color, FamilySpec};

/// Why a closed form does not apply.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NotCoveredCode {
    /// A complete bipartite coloring with no known closed form.
    OpenBipartite,
    /// Parameters outside the range a formula is stated for.
    Range,
    /// A family without closed forms (paths and cycles).
    UnknownColoring,
}

impl NotCoveredCode {
    pub fn as_str(self) -> &'static str {
        match self {
            NotCoveredCode::OpenBipartite => "OPEN_BIPARTITE",
            NotCoveredCode::Range => "RANGE",
            NotCoveredCode::UnknownColoring => "UNKNOWN_COLORING",
        }
    }
}

impl fmt::Display for NotCoveredCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClosedFormResult {
    Value(GameValue, NamedValue),
    NotCovered { code: NotCoveredCode, reason: String },
}

impl ClosedFormResult {
    pub fn value(&self) -> Option<GameValue> {
        match self {
            ClosedFormResult::Value(g, _) => Some(*g),
            ClosedFormResult::NotCovered { .. } => None,
        }
    }

    pub fn is_covered(&self) -> bool {
        matches!(self, ClosedFormResult::Value(..))
    }

    fn not_covered(code: NotCoveredCode, reason: impl Into<String>) -> Self {
        ClosedFormResult::NotCovered { code, reason: reason.into() }
    }
}

fn covered(kernel: &mut Kernel, g: GameValue) -> ClosedFormResult {
    let named = kernel.classify(g);
    ClosedFormResult::Value(g, named)
}

fn count(colors: &[Color], color: Color) -> usize {
    colors.iter().filter(|&&c| c == color).count()
}

fn all(colors: &[Color], color: Color) -> bool {
    colors.iter().all(|&c| c == color)
}

/// `1` if every vertex is `A`, `-1` if every vertex is `B`, `*` otherwise.
pub fn complete_value(kernel: &mut Kernel, colors: &[Color]) -> Result<ClosedFormResult, KernelError> {
    if colors.is_empty() {
        return Ok(ClosedFormResult::not_covered(NotCoveredCode::Range, "complete graph without vertices"));
    }
    let g = if all(colors, Color::A) {
        kernel.integer(1)?
    } else if all(colors, Color::B) {
        kernel.integer(-1)?
    } else {
        kernel.star()
    };
    Ok(covered(kernel, g))
}

/// `K_{s,t}` with `s, t >= 2`.
pub fn bipartite_value(kernel: &mut Kernel, s: &[Color], t: &[Color]) -> Result<ClosedFormResult, KernelError> {
    if s.len() < 2 || t.len() < 2 {
        return Ok(ClosedFormResult::not_covered(
            NotCoveredCode::Range,
            format!("K_{{{},{}}} needs both parts of size at least 2", s.len(), t.len()),
        ));
    }
    let both: Vec<Color> = s.iter().chain(t).copied().collect();
    let max = s.len().max(t.len()) as i64;
    let mixed = |part: &[Color]| count(part, Color::C) > 0 || (count(part, Color::A) > 0 && count(part, Color::B) > 0);
    let g = if all(&both, Color::A) {
        kernel.integer(max)?
    } else if all(&both, Color::B) {
        kernel.integer(-max)?
    } else if (mixed(s) && mixed(t)) || (all(s, Color::A) && all(t, Color::B)) || (all(s, Color::B) && all(t, Color::A))
    {
        kernel.zero()
    } else {
        return Ok(ClosedFormResult::not_covered(
            NotCoveredCode::OpenBipartite,
            "one part is monochrome A or B and the other is not its opposite",
        ));
    };
    Ok(covered(kernel, g))
}

/// Star with center `A`, `a` A-leaves and `b` B-leaves, `a + b >= 1`.
fn center_a_no_c(kernel: &mut Kernel, a: usize, b: usize) -> Result<GameValue, KernelError> {
    let exponent = |k: usize| u32::try_from(k).map_err(|_| KernelError::ParameterOverflow(format!("2^{k}")));
    if b < a {
        kernel.integer((a - b) as i64)
    } else if a >= 1 {
        kernel.dyadic(1, exponent(b - a + 1)?)
    } else {
        kernel.up_multiple(exponent(b - 1)?, b % 2 == 1)
    }
}

/// Star with center `C` and no C-leaves, `a + b >= 1`.
fn center_c_no_c(kernel: &mut Kernel, a: usize, b: usize) -> Result<GameValue, KernelError> {
    let height = |k: usize| u32::try_from(k).map_err(|_| KernelError::ParameterOverflow(format!("tower {k}")));
    if a == b {
        kernel.nimber(2)
    } else if a.abs_diff(b) == 1 {
        Ok(kernel.star())
    } else if a > b {
        kernel.up_tower(height(a - b - 1)?, true)
    } else {
        kernel.down_tower(height(b - a - 1)?, true)
    }
}

/// Value of a star whose center has color `center`, with `a`, `b` and `c`
/// leaves of colors `A`, `B` and `C`.
///
/// Stars with no leaves, and stars with an `A` or `B` center and a single
/// non-`C` leaf, are not covered.
pub fn star_value(
    kernel: &mut Kernel,
    center: Color,
    a: usize,
    b: usize,
    c: usize,
) -> Result<ClosedFormResult, KernelError> {
    let n = a + b + c;
    if n == 0 {
        return Ok(ClosedFormResult::not_covered(NotCoveredCode::Range, "star without leaves"));
    }
    let g = match center {
        Color::B => match star_value(kernel, Color::A, b, a, c)? {
            ClosedFormResult::Value(g, _) => kernel.neg(g),
            uncovered => return Ok(uncovered),
        },
        Color::A if c == 0 => {
            if n < 2 {
                return Ok(ClosedFormResult::not_covered(
                    NotCoveredCode::Range,
                    "star with a colored center needs at least two leaves",
                ));
            }
            center_a_no_c(kernel, a, b)?
        }
        Color::A => {
            if a == 0 {
                let k = u32::try_from(n - 1).map_err(|_| KernelError::ParameterOverflow(format!("{n}")))?;
                kernel.up_multiple(k, n % 2 == 1)?
            } else {
                let j = center_a_no_c(kernel, a, b)?;
                if c % 2 == 1 {
                    let s = kernel.star();
                    kernel.add(j, s)?
                } else {
                    j
                }
            }
        }
        Color::C if a + b == 0 => {
            if c % 2 == 1 {
                kernel.star()
            } else {
                kernel.nimber(2)?
            }
        }
        Color::C if c.is_multiple_of(2) => center_c_no_c(kernel, a, b)?,
        Color::C => {
            if a == b {
                kernel.star()
            } else if a.abs_diff(b) == 1 {
                kernel.nimber(2)?
            } else {
                let x = center_c_no_c(kernel, a, b)?;
                let zero = kernel.zero();
                kernel.make_game(&[zero, x], &[zero, x])?
            }
        }
    };
    Ok(covered(kernel, g))
}

/// The star a complete split graph reduces to: center `A` or `B` when the
/// clique is monochrome in that color, `C` otherwise; leaves are `S`.
pub fn reduced_star(clique: &[Color], independent: &[Color]) -> (Color, usize, usize, usize) {
    let center = if all(clique, Color::A) {
        Color::A
    } else if all(clique, Color::B) {
        Color::B
    } else {
        Color::C
    };
    (center, count(independent, Color::A), count(independent, Color::B), count(independent, Color::C))
}

/// Complete split graph with clique `clique` and independent set `independent`.
pub fn split_value(
    kernel: &mut Kernel,
    clique: &[Color],
    independent: &[Color],
) -> Result<ClosedFormResult, KernelError> {
    if clique.is_empty() {
        return Ok(ClosedFormResult::not_covered(NotCoveredCode::Range, "split graph with an empty clique"));
    }
    let (center, a, b, c) = reduced_star(clique, independent);
    star_value(kernel, center, a, b, c)
}

fn star_colors(center: Color, a: usize, b: usize, c: usize) -> Vec<Color> {
    let mut colors = vec![center];
    colors.extend(FamilySpec::star_leaves(a, b, c));
    colors
}

/// Closed form for any family description. Small instances that fall outside
/// one evaluator's range are routed to another that covers them (a star with
/// one leaf is a complete graph, `K_{1,t}` is a star), and unions are summed.
pub fn evaluate(kernel: &mut Kernel, spec: &FamilySpec) -> Result<ClosedFormResult, KernelError> {
    match spec {
        FamilySpec::Complete(colors) => complete_value(kernel, colors),
        FamilySpec::Star { center, a, b, c } => {
            if a + b + c <= 1 {
                complete_value(kernel, &star_colors(*center, *a, *b, *c))
            } else {
                star_value(kernel, *center, *a, *b, *c)
            }
        }
        FamilySpec::CompleteBipartite(s, t) => {
            let (small, large) = if s.len() <= t.len() { (s, t) } else { (t, s) };
            match small.len() {
                0 => {
                    let singles: Vec<FamilySpec> = large.iter().map(|&c| FamilySpec::Complete(vec![c])).collect();
                    evaluate(kernel, &FamilySpec::Union(singles))
                }
                1 => evaluate(
                    kernel,
                    &FamilySpec::Star {
                        center: small[0],
                        a: count(large, Color::A),
                        b: count(large, Color::B),
                        c: count(large, Color::C),
                    },
                ),
                _ => bipartite_value(kernel, s, t),
            }
        }
        FamilySpec::CompleteSplit(clique, independent) => {
            if independent.len() <= 1 {
                let all: Vec<Color> = clique.iter().chain(independent).copied().collect();
                complete_value(kernel, &all)
            } else {
                split_value(kernel, clique, independent)
            }
        }
        FamilySpec::Path(_) | FamilySpec::Cycle(_) => {
            Ok(ClosedFormResult::not_covered(NotCoveredCode::UnknownColoring, "no closed form for paths and cycles"))
        }
        FamilySpec::Union(parts) => {
            let mut total = kernel.zero();
            for part in parts {
                match evaluate(kernel, part)? {
                    ClosedFormResult::Value(g, _) => total = kernel.add(total, g)?,
                    uncovered => return Ok(uncovered),
                }
            }
            Ok(covered(kernel, total))
        }
    }
}
