//! Rules of the partizan domination game and a brute-force solver.
//!
//! Selecting a vertex dominates its closed neighborhood. A vertex is playable
//! while its closed neighborhood still contains an undominated vertex, and a
//! player may only select vertices of their own color or `C`. The player who
//! cannot move loses.
//!
//! The solver memoizes on the dominated set alone: colors and edges are fixed
//! for the duration of a solve, so the set determines the rest of the game.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::cgt::{GameValue, Kernel, KernelError};
use crate::graph::{Color, ColoredGraph};

/// Hard ceiling from the 64-bit vertex sets.
pub const MAX_SUPPORTED_VERTICES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }

    /// Alice selects `A` or `C`, Bob selects `B` or `C`.
    pub fn may_select(self, color: Color) -> bool {
        matches!((self, color), (_, Color::C) | (Player::Alice, Color::A) | (Player::Bob, Color::B))
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Alice => "Alice",
            Player::Bob => "Bob",
        })
    }
}

/// Set of vertex indices below 64.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_SUPPORTED_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph has {size} vertices; the search bound is {limit} (raise it with --max-vertices)")]
    TooLarge { size: usize, limit: usize },
    #[error("memo table exceeded {limit} positions")]
    StateLimit { limit: usize },
    #[error("vertex {vertex} is not playable for {player}")]
    Unplayable { vertex: usize, player: Player },
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(usize),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// A colored graph together with the vertices dominated so far.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position<'g> {
    graph: &'g ColoredGraph,
    dominated: VertexSet,
}

impl<'g> Position<'g> {
    /// Start of a game: nothing dominated.
    pub fn new(graph: &'g ColoredGraph) -> Result<Self, EngineError> {
        Self::with_dominated(graph, VertexSet::EMPTY)
    }

    /// A position with `dominated` already dominated. Such vertices stay
    /// selectable while they still have undominated neighbors.
    pub fn with_dominated(graph: &'g ColoredGraph, dominated: VertexSet) -> Result<Self, EngineError> {
        let n = graph.vertex_count();
        if n > MAX_SUPPORTED_VERTICES {
            return Err(EngineError::TooLarge { size: n, limit: MAX_SUPPORTED_VERTICES });
        }
        if let Some(v) = dominated.iter().find(|&v| v >= n) {
            return Err(EngineError::NoSuchVertex(v));
        }
        Ok(Position { graph, dominated })
    }

    pub fn graph(&self) -> &'g ColoredGraph {
        self.graph
    }

    pub fn dominated(&self) -> VertexSet {
        self.dominated
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s: VertexSet = self.graph.neighbors(v).iter().copied().collect();
        s.insert(v);
        s
    }

    fn is_playable(&self, v: usize) -> bool {
        !self.closed_neighborhood(v).is_subset(self.dominated)
    }

    pub fn is_terminal(&self) -> bool {
        self.dominated == VertexSet::full(self.graph.vertex_count())
    }

    /// Vertices `who` may select, ascending.
    pub fn playable_vertices(&self, who: Player) -> Vec<usize> {
        (0..self.graph.vertex_count()).filter(|&v| who.may_select(self.graph.color(v)) && self.is_playable(v)).collect()
    }

    /// `who` selects `v`, dominating its closed neighborhood.
    pub fn apply_move(&self, who: Player, v: usize) -> Result<Position<'g>, EngineError> {
        if v >= self.graph.vertex_count() {
            return Err(EngineError::NoSuchVertex(v));
        }
        if !who.may_select(self.graph.color(v)) || !self.is_playable(v) {
            return Err(EngineError::Unplayable { vertex: v, player: who });
        }
        let next = self.dominated.union(self.closed_neighborhood(v));
        debug_assert!(next.len() > self.dominated.len());
        Ok(Position { graph: self.graph, dominated: next })
    }

    /// The same position restricted to one connected component.
    fn restrict(&self, vertices: &[usize]) -> VertexSet {
        vertices.iter().enumerate().filter(|&(_, &v)| self.dominated.contains(v)).map(|(i, _)| i).collect()
    }
}

/// Search limits for one solve.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Largest graph (or component) the brute-force search accepts.
    pub max_vertices: usize,
    /// Largest number of memoized positions per solve.
    pub max_states: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_vertices: 22, max_states: 1 << 23 }
    }
}

/// Precomputed bitmasks for a fixed colored graph.
struct Board {
    closed: Vec<u64>,
    alice: u64,
    bob: u64,
}

impl Board {
    fn new(graph: &ColoredGraph) -> Self {
        let n = graph.vertex_count();
        let mut closed = vec![0u64; n];
        let (mut alice, mut bob) = (0u64, 0u64);
        for (v, mask) in closed.iter_mut().enumerate() {
            *mask = 1 << v;
            for &w in graph.neighbors(v) {
                *mask |= 1 << w;
            }
            if Player::Alice.may_select(graph.color(v)) {
                alice |= 1 << v;
            }
            if Player::Bob.may_select(graph.color(v)) {
                bob |= 1 << v;
            }
        }
        Board { closed, alice, bob }
    }

    fn movers(&self, who: Player) -> u64 {
        match who {
            Player::Alice => self.alice,
            Player::Bob => self.bob,
        }
    }

    /// Dominated sets reachable by one move of `who`, in vertex order.
    fn successors(&self, dominated: u64, who: Player) -> impl Iterator<Item = u64> + '_ {
        let mut candidates = self.movers(who);
        std::iter::from_fn(move || {
            while candidates != 0 {
                let v = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                let next = dominated | self.closed[v];
                if next != dominated {
                    return Some(next);
                }
            }
            None
        })
    }
}

/// Brute-force solver. Each call owns its memo tables; the kernel passed in
/// collects the values.
#[derive(Clone, Copy, Debug, Default)]
pub struct Solver {
    pub config: SearchConfig,
}

impl Solver {
    pub fn new(config: SearchConfig) -> Self {
        Solver { config }
    }

    fn check_size(&self, n: usize) -> Result<(), EngineError> {
        let limit = self.config.max_vertices.min(MAX_SUPPORTED_VERTICES);
        if n > limit {
            return Err(EngineError::TooLarge { size: n, limit });
        }
        Ok(())
    }

    /// Canonical value of `position`: `{ Alice's successors | Bob's successors }`.
    pub fn game_value(&self, kernel: &mut Kernel, position: &Position<'_>) -> Result<GameValue, EngineError> {
        self.check_size(position.graph.vertex_count())?;
        let board = Board::new(position.graph);
        let mut memo: HashMap<u64, GameValue> = HashMap::new();
        self.value_rec(kernel, &board, position.dominated.bits(), &mut memo)
    }

    fn value_rec(
        &self,
        kernel: &mut Kernel,
        board: &Board,
        dominated: u64,
        memo: &mut HashMap<u64, GameValue>,
    ) -> Result<GameValue, EngineError> {
        if let Some(&g) = memo.get(&dominated) {
            return Ok(g);
        }
        if memo.len() >= self.config.max_states {
            return Err(EngineError::StateLimit { limit: self.config.max_states });
        }
        let mut left = Vec::new();
        for next in board.successors(dominated, Player::Alice) {
            left.push(self.value_rec(kernel, board, next, memo)?);
        }
        let mut right = Vec::new();
        for next in board.successors(dominated, Player::Bob) {
            right.push(self.value_rec(kernel, board, next, memo)?);
        }
        let g = kernel.make_game(&left, &right)?;
        memo.insert(dominated, g);
        Ok(g)
    }

    /// Winner under optimal play when `first` moves first, by direct win/loss
    /// search (no game values involved).
    pub fn winner(&self, position: &Position<'_>, first: Player) -> Result<Player, EngineError> {
        self.check_size(position.graph.vertex_count())?;
        let board = Board::new(position.graph);
        let mut memo: HashMap<(u64, Player), bool> = HashMap::new();
        let wins = self.mover_wins(&board, position.dominated.bits(), first, &mut memo)?;
        Ok(if wins { first } else { first.opponent() })
    }

    fn mover_wins(
        &self,
        board: &Board,
        dominated: u64,
        mover: Player,
        memo: &mut HashMap<(u64, Player), bool>,
    ) -> Result<bool, EngineError> {
        if let Some(&w) = memo.get(&(dominated, mover)) {
            return Ok(w);
        }
        if memo.len() >= self.config.max_states {
            return Err(EngineError::StateLimit { limit: self.config.max_states });
        }
        let mut wins = false;
        for next in board.successors(dominated, mover) {
            if !self.mover_wins(board, next, mover.opponent(), memo)? {
                wins = true;
                break;
            }
        }
        memo.insert((dominated, mover), wins);
        Ok(wins)
    }

    /// Sum of the component values of a fresh game on `graph`.
    pub fn value_of_graph(&self, kernel: &mut Kernel, graph: &ColoredGraph) -> Result<GameValue, EngineError> {
        let start = Position::new(graph)?;
        self.value_by_components(kernel, &start)
    }

    /// Value of `position` as the sum over connected components; only each
    /// component needs to fit the search bound.
    pub fn value_by_components(&self, kernel: &mut Kernel, position: &Position<'_>) -> Result<GameValue, EngineError> {
        let components = position.graph.components();
        for c in &components {
            self.check_size(c.vertices.len())?;
        }
        let mut total = kernel.zero();
        for c in &components {
            let dominated = position.restrict(&c.vertices);
            let part = Position::with_dominated(&c.graph, dominated)?;
            let v = self.game_value(kernel, &part)?;
            total = kernel.add(total, v)?;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cgt::{NamedValue, Outcome};
    use crate::graph::FamilySpec;
    use Color::*;

    fn star(center: Color, a: usize, b: usize, c: usize) -> ColoredGraph {
        FamilySpec::Star { center, a, b, c }.build().unwrap()
    }

    #[test]
    fn playable_vertices_examples() {
        let g = star(C, 0, 0, 2);
        let p = Position::new(&g).unwrap();
        assert_eq!(p.playable_vertices(Player::Alice), vec![0, 1, 2]);
        let done = Position::with_dominated(&g, VertexSet::full(3)).unwrap();
        assert!(done.playable_vertices(Player::Alice).is_empty());
        assert!(done.playable_vertices(Player::Bob).is_empty());
        assert!(done.is_terminal());
        let after_leaf = p.apply_move(Player::Alice, 1).unwrap();
        assert_eq!(after_leaf.dominated(), [0, 1].into_iter().collect());
        assert_eq!(after_leaf.playable_vertices(Player::Alice), vec![0, 2]);
    }

    #[test]
    fn apply_move_examples() {
        let mut k2 = ColoredGraph::from_colors(&[A, B]);
        k2.add_edge(0, 1).unwrap();
        let p = Position::new(&k2).unwrap().apply_move(Player::Alice, 0).unwrap();
        assert_eq!(p.dominated(), VertexSet::full(2));
        assert!(p.is_terminal());

        let g = star(C, 0, 0, 3);
        let start = Position::new(&g).unwrap();
        assert!(start.apply_move(Player::Bob, 0).unwrap().is_terminal());
        let leaf = start.apply_move(Player::Bob, 2).unwrap();
        assert_eq!(leaf.dominated(), [0, 2].into_iter().collect());
    }

    #[test]
    fn illegal_moves_rejected() {
        let g = star(A, 0, 1, 0);
        let p = Position::new(&g).unwrap();
        assert_eq!(p.apply_move(Player::Bob, 0), Err(EngineError::Unplayable { vertex: 0, player: Player::Bob }));
        let done = p.apply_move(Player::Alice, 0).unwrap();
        assert!(done.apply_move(Player::Bob, 1).is_err());
        assert_eq!(p.apply_move(Player::Alice, 9), Err(EngineError::NoSuchVertex(9)));
    }

    #[test]
    fn game_value_examples() {
        let mut k = Kernel::new();
        let solver = Solver::default();

        let single = ColoredGraph::from_colors(&[A]);
        let v = solver.game_value(&mut k, &Position::new(&single).unwrap()).unwrap();
        assert_eq!(k.classify(v), NamedValue::Integer(1));

        let g = star(C, 0, 0, 3);
        let v = solver.game_value(&mut k, &Position::new(&g).unwrap()).unwrap();
        assert_eq!(k.classify(v), NamedValue::Nimber(1));

        let g = star(A, 1, 1, 0);
        let v = solver.game_value(&mut k, &Position::new(&g).unwrap()).unwrap();
        assert_eq!(k.classify(v), NamedValue::Dyadic(1, 1));

        // (2,3]: the T part starts dominated.
        let g = FamilySpec::CompleteBipartite(vec![A; 2], vec![A; 3]).build().unwrap();
        let t: VertexSet = (2..5).collect();
        let v = solver.game_value(&mut k, &Position::with_dominated(&g, t).unwrap()).unwrap();
        assert_eq!(k.classify(v), NamedValue::Integer(2));
        let s: VertexSet = (0..2).collect();
        let v = solver.game_value(&mut k, &Position::with_dominated(&g, s).unwrap()).unwrap();
        assert_eq!(k.classify(v), NamedValue::Integer(3));
    }

    #[test]
    fn winner_examples() {
        let solver = Solver::default();
        let p4 = FamilySpec::Path(vec![C; 4]).build().unwrap();
        assert_eq!(solver.winner(&Position::new(&p4).unwrap(), Player::Alice).unwrap(), Player::Bob);
        let c7 = FamilySpec::Cycle(vec![C; 7]).build().unwrap();
        assert_eq!(solver.winner(&Position::new(&c7).unwrap(), Player::Alice).unwrap(), Player::Alice);
        let done = Position::with_dominated(&p4, VertexSet::full(4)).unwrap();
        assert_eq!(solver.winner(&done, Player::Alice).unwrap(), Player::Bob);
    }

    #[test]
    fn value_of_graph_examples() {
        let mut k = Kernel::new();
        let solver = Solver::default();
        let ab = ColoredGraph::from_colors(&[A, B]);
        assert_eq!(solver.value_of_graph(&mut k, &ab).unwrap(), k.zero());

        let spec = FamilySpec::Union(vec![FamilySpec::Complete(vec![C, C]), FamilySpec::Complete(vec![C, C])]);
        let g = spec.build().unwrap();
        let whole = solver.game_value(&mut k, &Position::new(&g).unwrap()).unwrap();
        assert_eq!(whole, k.zero());
        assert_eq!(solver.value_of_graph(&mut k, &g).unwrap(), whole);

        let g = star(B, 2, 1, 1);
        let whole = solver.game_value(&mut k, &Position::new(&g).unwrap()).unwrap();
        assert_eq!(solver.value_of_graph(&mut k, &g).unwrap(), whole);
    }

    #[test]
    fn search_bound_is_enforced() {
        let mut k = Kernel::new();
        let solver = Solver::new(SearchConfig { max_vertices: 5, ..SearchConfig::default() });
        let g = FamilySpec::Path(vec![C; 6]).build().unwrap();
        let p = Position::new(&g).unwrap();
        assert_eq!(solver.game_value(&mut k, &p), Err(EngineError::TooLarge { size: 6, limit: 5 }));
        assert_eq!(solver.winner(&p, Player::Alice), Err(EngineError::TooLarge { size: 6, limit: 5 }));

        let tight = Solver::new(SearchConfig { max_vertices: 22, max_states: 3 });
        assert_eq!(tight.game_value(&mut k, &p), Err(EngineError::StateLimit { limit: 3 }));
    }

    #[test]
    fn outcome_matches_winners_on_small_paths() {
        let mut k = Kernel::new();
        let solver = Solver::default();
        for n in 1..=9 {
            let g = FamilySpec::Path(vec![C; n]).build().unwrap();
            let p = Position::new(&g).unwrap();
            let v = solver.game_value(&mut k, &p).unwrap();
            let first_wins = solver.winner(&p, Player::Alice).unwrap() == Player::Alice;
            assert_eq!(k.outcome(v) == Outcome::FirstPlayerWins, first_wins, "P_{n}");
        }
    }
}
