//! Graph families and their one-line description language.
//!
//! ```text
//! complete(colors=AAC)
//! kst(S=AA,T=B*3)
//! star(center=A,a=1,b=3,c=0)
//! split(K=AB,S=C*3)
//! path(n=8,colors=C*8)
//! cycle(n=7,colors=C*7)
//! union(star(center=C,a=2,b=0,c=0), kst(S=AA,T=BC))
//! ```
//!
//! Color strings are sequences of `A`, `B`, `C`, each optionally followed by
//! `*count` (so `A*2BC` is `AABC`).

use std::fmt;

use thiserror::Error;

use super::{Color, ColoredGraph, GraphError};

/// Largest graph a family description may expand to.
pub const MAX_FAMILY_VERTICES: usize = 1 << 12;

/// A member of one of the solved graph families, with its coloring.
///
/// Vertex order of the built graph: the center first for stars (then the
/// A-, B- and C-leaves), the clique before the independent set for split
/// graphs, and part `S` before part `T` for bipartite graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(Vec<Color>),
    CompleteBipartite(Vec<Color>, Vec<Color>),
    Star { center: Color, a: usize, b: usize, c: usize },
    CompleteSplit(Vec<Color>, Vec<Color>),
    Path(Vec<Color>),
    Cycle(Vec<Color>),
    Union(Vec<FamilySpec>),
}

impl FamilySpec {
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Complete(k) => k.len(),
            FamilySpec::CompleteBipartite(s, t) | FamilySpec::CompleteSplit(s, t) => s.len() + t.len(),
            FamilySpec::Star { a, b, c, .. } => 1 + a + b + c,
            FamilySpec::Path(p) | FamilySpec::Cycle(p) => p.len(),
            FamilySpec::Union(parts) => parts.iter().map(FamilySpec::vertex_count).sum(),
        }
    }

    /// Leaf colors of a star, in build order.
    pub fn star_leaves(a: usize, b: usize, c: usize) -> Vec<Color> {
        let mut leaves = vec![Color::A; a];
        leaves.extend(std::iter::repeat_n(Color::B, b));
        leaves.extend(std::iter::repeat_n(Color::C, c));
        leaves
    }

    pub fn build(&self) -> Result<ColoredGraph, GraphError> {
        self.build_with_blocks().map(|(g, _)| g)
    }

    /// Builds the graph and reports the vertex range of each top-level part
    /// (a single range unless this is a union).
    pub fn build_with_blocks(&self) -> Result<(ColoredGraph, Vec<std::ops::Range<usize>>), GraphError> {
        let size = self.vertex_count();
        if size > MAX_FAMILY_VERTICES {
            return Err(GraphError::TooLarge { size, limit: MAX_FAMILY_VERTICES });
        }
        if let FamilySpec::Union(parts) = self {
            let built = parts.iter().map(FamilySpec::build).collect::<Result<Vec<_>, _>>()?;
            return Ok(ColoredGraph::disjoint_union(&built));
        }
        let g = self.build_single()?;
        let n = g.vertex_count();
        Ok((g, std::iter::once(0..n).collect()))
    }

    fn build_single(&self) -> Result<ColoredGraph, GraphError> {
        let mut g = ColoredGraph::new();
        let add = |g: &mut ColoredGraph, color: Color, label: String| g.push_vertex(color, label);
        match self {
            FamilySpec::Complete(colors) => {
                for (i, &c) in colors.iter().enumerate() {
                    add(&mut g, c, format!("k{i}"));
                }
                for u in 0..colors.len() {
                    for v in u + 1..colors.len() {
                        g.add_edge(u, v)?;
                    }
                }
            }
            FamilySpec::CompleteBipartite(s, t) | FamilySpec::CompleteSplit(s, t) => {
                let (first, second) =
                    if matches!(self, FamilySpec::CompleteSplit(..)) { ("k", "s") } else { ("s", "t") };
                for (i, &c) in s.iter().enumerate() {
                    add(&mut g, c, format!("{first}{i}"));
                }
                for (i, &c) in t.iter().enumerate() {
                    add(&mut g, c, format!("{second}{i}"));
                }
                for u in 0..s.len() {
                    for v in 0..t.len() {
                        g.add_edge(u, s.len() + v)?;
                    }
                }
                if matches!(self, FamilySpec::CompleteSplit(..)) {
                    for u in 0..s.len() {
                        for v in u + 1..s.len() {
                            g.add_edge(u, v)?;
                        }
                    }
                }
            }
            FamilySpec::Star { center, a, b, c } => {
                add(&mut g, *center, "u".to_string());
                for (i, color) in FamilySpec::star_leaves(*a, *b, *c).into_iter().enumerate() {
                    let leaf = add(&mut g, color, format!("l{i}"));
                    g.add_edge(0, leaf)?;
                }
            }
            FamilySpec::Path(colors) | FamilySpec::Cycle(colors) => {
                let cycle = matches!(self, FamilySpec::Cycle(_));
                let n = colors.len();
                if n == 0 || (cycle && n < 3) {
                    return Err(GraphError::InvalidFamily(format!(
                        "{} needs at least {} vertices",
                        if cycle { "cycle" } else { "path" },
                        if cycle { 3 } else { 1 }
                    )));
                }
                for (i, &c) in colors.iter().enumerate() {
                    add(&mut g, c, format!("v{i}"));
                }
                for i in 1..n {
                    g.add_edge(i - 1, i)?;
                }
                if cycle {
                    g.add_edge(n - 1, 0)?;
                }
            }
            FamilySpec::Union(_) => unreachable!("unions are built part by part"),
        }
        Ok(g)
    }

    /// `A` and `B` exchanged throughout.
    pub fn swap_colors(&self) -> FamilySpec {
        let sw = |v: &[Color]| v.iter().map(|c| c.swapped()).collect::<Vec<_>>();
        match self {
            FamilySpec::Complete(k) => FamilySpec::Complete(sw(k)),
            FamilySpec::CompleteBipartite(s, t) => FamilySpec::CompleteBipartite(sw(s), sw(t)),
            FamilySpec::Star { center, a, b, c } => FamilySpec::Star { center: center.swapped(), a: *b, b: *a, c: *c },
            FamilySpec::CompleteSplit(k, s) => FamilySpec::CompleteSplit(sw(k), sw(s)),
            FamilySpec::Path(p) => FamilySpec::Path(sw(p)),
            FamilySpec::Cycle(p) => FamilySpec::Cycle(sw(p)),
            FamilySpec::Union(parts) => FamilySpec::Union(parts.iter().map(FamilySpec::swap_colors).collect()),
        }
    }
}

fn write_colors(f: &mut fmt::Formatter<'_>, colors: &[Color]) -> fmt::Result {
    let mut i = 0;
    while i < colors.len() {
        let c = colors[i];
        let run = colors[i..].iter().take_while(|&&x| x == c).count();
        if run >= 3 {
            write!(f, "{c}*{run}")?;
        } else {
            for _ in 0..run {
                write!(f, "{c}")?;
            }
        }
        i += run;
    }
    Ok(())
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(k) => {
                f.write_str("complete(colors=")?;
                write_colors(f, k)?;
                f.write_str(")")
            }
            FamilySpec::CompleteBipartite(s, t) => {
                f.write_str("kst(S=")?;
                write_colors(f, s)?;
                f.write_str(",T=")?;
                write_colors(f, t)?;
                f.write_str(")")
            }
            FamilySpec::Star { center, a, b, c } => write!(f, "star(center={center},a={a},b={b},c={c})"),
            FamilySpec::CompleteSplit(k, s) => {
                f.write_str("split(K=")?;
                write_colors(f, k)?;
                f.write_str(",S=")?;
                write_colors(f, s)?;
                f.write_str(")")
            }
            FamilySpec::Path(p) | FamilySpec::Cycle(p) => {
                let name = if matches!(self, FamilySpec::Path(_)) { "path" } else { "cycle" };
                write!(f, "{name}(n={},colors=", p.len())?;
                write_colors(f, p)?;
                f.write_str(")")
            }
            FamilySpec::Union(parts) => {
                f.write_str("union(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseFamilyError {
    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },
    #[error("count at offset {offset} is too large")]
    CountOverflow { offset: usize },
    #[error("{0}")]
    Invalid(String),
}

pub fn parse_family(text: &str) -> Result<FamilySpec, ParseFamilyError> {
    let mut p = DslParser { src: text.as_bytes(), pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.expected("end of input"));
    }
    if spec.vertex_count() > MAX_FAMILY_VERTICES {
        return Err(ParseFamilyError::CountOverflow { offset: 0 });
    }
    Ok(spec)
}

enum Arg {
    Count(usize),
    Colors(Vec<Color>),
}

struct DslParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl DslParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expected(&self, what: &str) -> ParseFamilyError {
        ParseFamilyError::Syntax { offset: self.pos, expected: what.to_string() }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseFamilyError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.expected(&format!("'{}'", c as char)))
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String, ParseFamilyError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.expected("a name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn count(&mut self) -> Result<Option<usize>, ParseFamilyError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        match text.parse::<usize>() {
            Ok(n) if n <= MAX_FAMILY_VERTICES => Ok(Some(n)),
            _ => Err(ParseFamilyError::CountOverflow { offset: start }),
        }
    }

    fn colors(&mut self) -> Result<Vec<Color>, ParseFamilyError> {
        self.skip_ws();
        let mut out = Vec::new();
        while let Some(color) = self.src.get(self.pos).and_then(|&c| Color::from_char(c as char)) {
            self.pos += 1;
            let mut run = 1;
            if self.src.get(self.pos) == Some(&b'*') {
                self.pos += 1;
                run = self.count()?.ok_or_else(|| self.expected("a repeat count"))?;
            }
            if out.len() + run > MAX_FAMILY_VERTICES {
                return Err(ParseFamilyError::CountOverflow { offset: self.pos });
            }
            out.extend(std::iter::repeat_n(color, run));
        }
        Ok(out)
    }

    fn arg_value(&mut self) -> Result<Arg, ParseFamilyError> {
        if let Some(n) = self.count()? {
            return Ok(Arg::Count(n));
        }
        let start = self.pos;
        let colors = self.colors()?;
        if self.pos == start {
            return Err(self.expected("a count or a color string"));
        }
        Ok(Arg::Colors(colors))
    }

    fn spec(&mut self) -> Result<FamilySpec, ParseFamilyError> {
        let name = self.ident()?;
        self.expect(b'(')?;
        if name == "union" {
            let mut parts = Vec::new();
            if !self.eat(b')') {
                loop {
                    parts.push(self.spec()?);
                    if self.eat(b')') {
                        break;
                    }
                    self.expect(b',')?;
                }
            }
            return Ok(FamilySpec::Union(parts));
        }
        let mut args: Vec<(String, Arg)> = Vec::new();
        if !self.eat(b')') {
            loop {
                let key = self.ident()?;
                self.expect(b'=')?;
                if args.iter().any(|(k, _)| *k == key) {
                    return Err(ParseFamilyError::Invalid(format!("argument {key} given twice")));
                }
                let value = self.arg_value()?;
                args.push((key, value));
                if self.eat(b')') {
                    break;
                }
                self.expect(b',')?;
            }
        }
        build_spec(&name, args)
    }
}

fn build_spec(name: &str, args: Vec<(String, Arg)>) -> Result<FamilySpec, ParseFamilyError> {
    let allowed: &[&str] = match name {
        "complete" => &["colors"],
        "kst" => &["S", "T"],
        "star" => &["center", "a", "b", "c"],
        "split" => &["K", "S"],
        "path" | "cycle" => &["n", "colors"],
        _ => return Err(ParseFamilyError::Invalid(format!("unknown family {name:?}"))),
    };
    if let Some((k, _)) = args.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        return Err(ParseFamilyError::Invalid(format!("{name} has no argument {k:?}")));
    }
    let take = |key: &str| args.iter().find(|(k, _)| k == key).map(|(_, v)| v);
    let colors = |key: &str| -> Result<Vec<Color>, ParseFamilyError> {
        match take(key) {
            Some(Arg::Colors(c)) => Ok(c.clone()),
            Some(Arg::Count(_)) => Err(ParseFamilyError::Invalid(format!("{key} must be a color string"))),
            None => Err(ParseFamilyError::Invalid(format!("{name} needs {key}="))),
        }
    };
    let count = |key: &str| -> Result<usize, ParseFamilyError> {
        match take(key) {
            Some(Arg::Count(n)) => Ok(*n),
            Some(Arg::Colors(_)) => Err(ParseFamilyError::Invalid(format!("{key} must be a count"))),
            None => Ok(0),
        }
    };
    match name {
        "complete" => Ok(FamilySpec::Complete(colors("colors")?)),
        "kst" => Ok(FamilySpec::CompleteBipartite(colors("S")?, colors("T")?)),
        "split" => Ok(FamilySpec::CompleteSplit(colors("K")?, colors("S")?)),
        "star" => {
            let center = match colors("center")?.as_slice() {
                [c] => *c,
                _ => return Err(ParseFamilyError::Invalid("center must be a single color".into())),
            };
            Ok(FamilySpec::Star { center, a: count("a")?, b: count("b")?, c: count("c")? })
        }
        _ => {
            let cols = colors("colors")?;
            if let Some(Arg::Count(n)) = take("n") {
                if *n != cols.len() {
                    return Err(ParseFamilyError::Invalid(format!("n={n} but {} colors given", cols.len())));
                }
            }
            let min = if name == "cycle" { 3 } else { 1 };
            if cols.len() < min {
                return Err(ParseFamilyError::Invalid(format!("{name} needs at least {min} vertices")));
            }
            Ok(if name == "path" { FamilySpec::Path(cols) } else { FamilySpec::Cycle(cols) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse_family("star(center=A,a=1,b=3,c=0)").unwrap(),
            FamilySpec::Star { center: A, a: 1, b: 3, c: 0 }
        );
        assert_eq!(
            parse_family("union(star(center=C,a=2,b=0,c=0), kst(S=AA,T=BC))").unwrap(),
            FamilySpec::Union(vec![
                FamilySpec::Star { center: C, a: 2, b: 0, c: 0 },
                FamilySpec::CompleteBipartite(vec![A, A], vec![B, C]),
            ])
        );
        assert_eq!(parse_family("cycle(n=7,colors=C*7)").unwrap(), FamilySpec::Cycle(vec![C; 7]));
        assert_eq!(
            parse_family(" split( K = A*2B , S = C ) ").unwrap(),
            FamilySpec::CompleteSplit(vec![A, A, B], vec![C])
        );
        assert_eq!(parse_family("star(center=B,b=2)").unwrap(), FamilySpec::Star { center: B, a: 0, b: 2, c: 0 });
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_family("star(center=A,a=1"), Err(ParseFamilyError::Syntax { .. })));
        assert!(matches!(parse_family("blob(n=1)"), Err(ParseFamilyError::Invalid(_))));
        assert!(matches!(parse_family("path(n=3,colors=CC)"), Err(ParseFamilyError::Invalid(_))));
        assert!(matches!(parse_family("cycle(n=2,colors=CC)"), Err(ParseFamilyError::Invalid(_))));
        assert!(matches!(
            parse_family("star(center=A,a=99999999999999999999)"),
            Err(ParseFamilyError::CountOverflow { .. })
        ));
        assert!(matches!(parse_family("complete(colors=C*5000)"), Err(ParseFamilyError::CountOverflow { .. })));
        assert!(matches!(parse_family("star(center=AB)"), Err(ParseFamilyError::Invalid(_))));
        assert!(matches!(parse_family("star(center=A) x"), Err(ParseFamilyError::Syntax { .. })));
    }

    #[test]
    fn display_roundtrips() {
        for text in [
            "star(center=A,a=1,b=3,c=0)",
            "union(complete(colors=AC),kst(S=AA,T=B*3),path(n=4,colors=C*4),split(K=AB,S=ACC))",
            "cycle(n=5,colors=ABABC)",
        ] {
            let spec = parse_family(text).unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(parse_family(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn builds_families() {
        let star = FamilySpec::Star { center: C, a: 0, b: 0, c: 2 }.build().unwrap();
        assert_eq!(star.vertex_count(), 3);
        assert_eq!(star.colors(), &[C, C, C]);
        assert_eq!(star.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);

        let split = FamilySpec::CompleteSplit(vec![A, B], vec![C, C, C]).build().unwrap();
        assert_eq!(split.vertex_count(), 5);
        assert!(split.has_edge(0, 1));
        for k in 0..2 {
            for s in 2..5 {
                assert!(split.has_edge(k, s));
            }
        }
        assert!(!split.has_edge(2, 3));
        assert_eq!(split.edge_count(), 7);

        let kst = FamilySpec::CompleteBipartite(vec![A, A], vec![A, A, A]).build().unwrap();
        assert_eq!(kst.vertex_count(), 5);
        assert_eq!(kst.edge_count(), 6);
        assert!(!kst.has_edge(0, 1));
        assert_eq!(kst.label(2), "t0");

        let cycle = FamilySpec::Cycle(vec![C; 4]).build().unwrap();
        assert_eq!(cycle.edge_count(), 4);
        assert!(cycle.has_edge(3, 0));
    }

    #[test]
    fn union_records_blocks() {
        let spec = parse_family("union(complete(colors=AB),star(center=C,c=2))").unwrap();
        let (g, blocks) = spec.build_with_blocks().unwrap();
        assert_eq!(blocks, vec![0..2, 2..5]);
        assert_eq!(g.label(2), "g1.u");
        assert_eq!(g.components().len(), 2);
    }
}
