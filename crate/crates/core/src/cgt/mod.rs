//! Short partizan game values.
//!
//! Every value lives in a [`Kernel`], an interning store that only ever holds
//! games in canonical form. Two handles are equal exactly when the games they
//! denote are equal, so equality is a single integer comparison.

mod canonical;
mod dyadic;
mod named;
mod notation;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use dyadic::{Dyadic, DyadicOverflow, MAX_EXPONENT, MAX_MAGNITUDE};
pub use named::NamedValue;
pub use notation::{describe, ParseValueError};

/// Handle to a canonical game stored in a [`Kernel`].
///
/// Handles from different kernels must not be mixed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GameValue(u32);

impl GameValue {
    /// The empty game `{|}`. Always the first entry of every kernel.
    pub const ZERO: GameValue = GameValue(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("game store is full ({limit} values)")]
    StoreCapacity { limit: usize },
    #[error("game birthday {birthday} exceeds the recursion limit {limit}")]
    DepthExceeded { birthday: u32, limit: u32 },
    #[error("parameter overflow: {0}")]
    ParameterOverflow(String),
    #[error("invalid named value: {0}")]
    InvalidNamed(String),
}

/// Resource limits for a kernel context.
#[derive(Clone, Copy, Debug)]
pub struct KernelConfig {
    /// Maximum number of distinct canonical games held by the store.
    pub max_values: usize,
    /// Maximum birthday of any stored game; bounds every recursion depth.
    pub max_birthday: u32,
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig { max_values: 1 << 22, max_birthday: 1024 }
    }
}

/// Who wins a game under optimal play.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Outcome {
    /// `G > 0`
    AliceAlways,
    /// `G < 0`
    BobAlways,
    /// `G || 0`
    FirstPlayerWins,
    /// `G = 0`
    SecondPlayerWins,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Outcome::AliceAlways => "AliceAlways",
            Outcome::BobAlways => "BobAlways",
            Outcome::FirstPlayerWins => "FirstPlayerWins",
            Outcome::SecondPlayerWins => "SecondPlayerWins",
        };
        f.write_str(s)
    }
}

/// Left and right option lists of a stored game.
type OptionLists = (Box<[GameValue]>, Box<[GameValue]>);

#[derive(Debug)]
struct Node {
    left: Box<[GameValue]>,
    right: Box<[GameValue]>,
    birthday: u32,
    number: Option<Dyadic>,
    nimber: Option<u32>,
}

/// Interning store plus memo tables for comparison, negation and sums.
///
/// A kernel is confined to one thread at a time; independent kernels can run
/// in parallel on independent inputs.
#[derive(Debug)]
pub struct Kernel {
    config: KernelConfig,
    nodes: Vec<Node>,
    index: HashMap<OptionLists, GameValue>,
    leq_memo: HashMap<(GameValue, GameValue), bool>,
    add_memo: HashMap<(GameValue, GameValue), GameValue>,
    neg_memo: HashMap<GameValue, GameValue>,
    named_memo: HashMap<NamedValue, GameValue>,
}

impl Default for Kernel {
    fn default() -> Self {
        Self::new()
    }
}

impl Kernel {
    pub fn new() -> Self {
        Self::with_config(KernelConfig::default())
    }

    pub fn with_config(config: KernelConfig) -> Self {
        let mut kernel = Kernel {
            config,
            nodes: Vec::new(),
            index: HashMap::new(),
            leq_memo: HashMap::new(),
            add_memo: HashMap::new(),
            neg_memo: HashMap::new(),
            named_memo: HashMap::new(),
        };
        let zero = kernel.intern(Vec::new(), Vec::new()).expect("empty store has room for zero");
        debug_assert_eq!(zero, GameValue::ZERO);
        kernel
    }

    pub fn config(&self) -> &KernelConfig {
        &self.config
    }

    /// Number of distinct canonical games stored so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn node(&self, g: GameValue) -> &Node {
        &self.nodes[g.index()]
    }

    pub fn zero(&self) -> GameValue {
        GameValue::ZERO
    }

    pub fn left_options(&self, g: GameValue) -> &[GameValue] {
        &self.node(g).left
    }

    pub fn right_options(&self, g: GameValue) -> &[GameValue] {
        &self.node(g).right
    }

    /// Depth of the canonical game tree (`0` has birthday 0).
    pub fn birthday(&self, g: GameValue) -> u32 {
        self.node(g).birthday
    }

    /// The number `g` equals, if it is one.
    pub fn as_number(&self, g: GameValue) -> Option<Dyadic> {
        self.node(g).number
    }

    /// `k` when `g = *k` (including `0 = *0`).
    pub fn as_nimber(&self, g: GameValue) -> Option<u32> {
        self.node(g).nimber
    }

    /// Stores an already-canonical game. Options are sorted into print order.
    fn intern(&mut self, left: Vec<GameValue>, right: Vec<GameValue>) -> Result<GameValue, KernelError> {
        self.intern_with(left, right, true)
    }

    fn intern_with(
        &mut self,
        mut left: Vec<GameValue>,
        mut right: Vec<GameValue>,
        enforce_capacity: bool,
    ) -> Result<GameValue, KernelError> {
        left.sort_by(|&a, &b| self.structural_cmp(a, b));
        right.sort_by(|&a, &b| self.structural_cmp(a, b));
        let key = (left.into_boxed_slice(), right.into_boxed_slice());
        if let Some(&g) = self.index.get(&key) {
            return Ok(g);
        }
        if enforce_capacity && self.nodes.len() >= self.config.max_values {
            return Err(KernelError::StoreCapacity { limit: self.config.max_values });
        }
        let (left, right) = key;
        let birthday = left.iter().chain(right.iter()).map(|&o| self.birthday(o) + 1).max().unwrap_or(0);
        if birthday > self.config.max_birthday {
            return Err(KernelError::DepthExceeded { birthday, limit: self.config.max_birthday });
        }
        let number = self.number_of_options(&left, &right)?;
        let nimber = self.nimber_of_options(&left, &right);
        let g = GameValue(self.nodes.len() as u32);
        self.index.insert((left.clone(), right.clone()), g);
        self.nodes.push(Node { left, right, birthday, number, nimber });
        Ok(g)
    }

    // A canonical game whose options are all numbers with every left option
    // below every right option is the canonical form of the simplest number
    // in between.
    fn number_of_options(&self, left: &[GameValue], right: &[GameValue]) -> Result<Option<Dyadic>, KernelError> {
        let mut lo: Option<Dyadic> = None;
        for &l in left {
            let x = match self.as_number(l) {
                Some(x) => x,
                None => return Ok(None),
            };
            lo = Some(lo.map_or(x, |y| y.max(x)));
        }
        let mut hi: Option<Dyadic> = None;
        for &r in right {
            let x = match self.as_number(r) {
                Some(x) => x,
                None => return Ok(None),
            };
            hi = Some(hi.map_or(x, |y| y.min(x)));
        }
        Dyadic::simplest_between(lo, hi)
            .map_err(|_| KernelError::ParameterOverflow("number outside the 62-bit dyadic range".into()))
    }

    fn nimber_of_options(&self, left: &[GameValue], right: &[GameValue]) -> Option<u32> {
        if left != right {
            return None;
        }
        // Options are sorted by birthday and *k has birthday k.
        for (i, &o) in left.iter().enumerate() {
            if self.as_nimber(o) != Some(i as u32) {
                return None;
            }
        }
        Some(left.len() as u32)
    }

    /// Deterministic total order: birthday, then left options, then right
    /// options, compared recursively.
    pub fn structural_cmp(&self, a: GameValue, b: GameValue) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let (na, nb) = (self.node(a), self.node(b));
        na.birthday
            .cmp(&nb.birthday)
            .then_with(|| self.cmp_lists(&na.left, &nb.left))
            .then_with(|| self.cmp_lists(&na.right, &nb.right))
    }

    fn cmp_lists(&self, a: &[GameValue], b: &[GameValue]) -> Ordering {
        for (&x, &y) in a.iter().zip(b) {
            match self.structural_cmp(x, y) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        a.len().cmp(&b.len())
    }

    /// `g <= h` in the partial order of games.
    pub fn leq(&mut self, g: GameValue, h: GameValue) -> bool {
        if g == h {
            return true;
        }
        if let (Some(x), Some(y)) = (self.as_number(g), self.as_number(h)) {
            return x <= y;
        }
        if self.as_nimber(g).is_some() && self.as_nimber(h).is_some() {
            // Distinct nimbers are incomparable.
            return false;
        }
        if let Some(&known) = self.leq_memo.get(&(g, h)) {
            return known;
        }
        let result = self.leq_by_options(g, h);
        self.leq_memo.insert((g, h), result);
        result
    }

    // g <= h iff no g^L with h <= g^L and no h^R with h^R <= g.
    fn leq_by_options(&mut self, g: GameValue, h: GameValue) -> bool {
        for i in 0..self.node(g).left.len() {
            let gl = self.node(g).left[i];
            if self.leq(h, gl) {
                return false;
            }
        }
        for i in 0..self.node(h).right.len() {
            let hr = self.node(h).right[i];
            if self.leq(hr, g) {
                return false;
            }
        }
        true
    }

    pub fn lt(&mut self, g: GameValue, h: GameValue) -> bool {
        g != h && self.leq(g, h)
    }

    /// `g || h`: neither `g <= h` nor `h <= g`.
    pub fn incomparable(&mut self, g: GameValue, h: GameValue) -> bool {
        !self.leq(g, h) && !self.leq(h, g)
    }

    /// Game equality. Stored values are canonical, so this is identity; the
    /// test suite checks it against two-sided `leq`.
    pub fn eq(&self, g: GameValue, h: GameValue) -> bool {
        g == h
    }

    pub fn neg(&mut self, g: GameValue) -> GameValue {
        if g == GameValue::ZERO || self.as_nimber(g).is_some() {
            return g;
        }
        if let Some(&n) = self.neg_memo.get(&g) {
            return n;
        }
        let left: Vec<GameValue> = self.node(g).right.to_vec();
        let right: Vec<GameValue> = self.node(g).left.to_vec();
        let new_left: Vec<GameValue> = left.into_iter().map(|x| self.neg(x)).collect();
        let new_right: Vec<GameValue> = right.into_iter().map(|x| self.neg(x)).collect();
        // The negative of a canonical game is canonical with the same
        // birthday; only the capacity guard could trip, and it is waived.
        let n = self.intern_with(new_left, new_right, false).expect("negation preserves birthday and number range");
        self.neg_memo.insert(g, n);
        self.neg_memo.insert(n, g);
        n
    }

    /// Disjunctive sum `g + h`.
    pub fn add(&mut self, g: GameValue, h: GameValue) -> Result<GameValue, KernelError> {
        if g == GameValue::ZERO {
            return Ok(h);
        }
        if h == GameValue::ZERO {
            return Ok(g);
        }
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.add_memo.get(&key) {
            return Ok(s);
        }
        let depth = self.birthday(g) + self.birthday(h);
        if depth > self.config.max_birthday {
            return Err(KernelError::DepthExceeded { birthday: depth, limit: self.config.max_birthday });
        }
        let (gl, gr) = (self.node(g).left.to_vec(), self.node(g).right.to_vec());
        let (hl, hr) = (self.node(h).left.to_vec(), self.node(h).right.to_vec());
        let mut left = Vec::with_capacity(gl.len() + hl.len());
        for x in gl {
            left.push(self.add(x, h)?);
        }
        for y in hl {
            left.push(self.add(g, y)?);
        }
        let mut right = Vec::with_capacity(gr.len() + hr.len());
        for x in gr {
            right.push(self.add(x, h)?);
        }
        for y in hr {
            right.push(self.add(g, y)?);
        }
        let s = self.make_game(&left, &right)?;
        self.add_memo.insert(key, s);
        Ok(s)
    }

    /// `g - h`.
    pub fn sub(&mut self, g: GameValue, h: GameValue) -> Result<GameValue, KernelError> {
        let nh = self.neg(h);
        self.add(g, nh)
    }

    /// Sum of any number of games; the empty sum is `0`.
    pub fn sum<I>(&mut self, games: I) -> Result<GameValue, KernelError>
    where
        I: IntoIterator<Item = GameValue>,
    {
        games.into_iter().try_fold(GameValue::ZERO, |acc, g| self.add(acc, g))
    }

    pub fn outcome(&mut self, g: GameValue) -> Outcome {
        let zero = GameValue::ZERO;
        match (self.leq(zero, g), self.leq(g, zero)) {
            (true, true) => Outcome::SecondPlayerWins,
            (true, false) => Outcome::AliceAlways,
            (false, true) => Outcome::BobAlways,
            (false, false) => Outcome::FirstPlayerWins,
        }
    }
}

/// Least nonnegative integer not in `values`.
pub fn mex<I: IntoIterator<Item = u32>>(values: I) -> u32 {
    let mut seen: Vec<u32> = values.into_iter().collect();
    seen.sort_unstable();
    seen.dedup();
    let mut m = 0;
    for v in seen {
        if v == m {
            m += 1;
        } else if v > m {
            break;
        }
    }
    m
}

/// Nim-sum: `*m + *n = *(m ^ n)`.
pub fn nim_add(m: u32, n: u32) -> u32 {
    m ^ n
}
