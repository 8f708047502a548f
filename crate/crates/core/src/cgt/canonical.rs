//! Reduction of `{L | R}` to canonical form.

use std::collections::HashMap;

use super::{GameValue, Kernel, KernelError};

/// A game given by option lists that is not (yet) in the store.
struct Pending<'a> {
    left: &'a [GameValue],
    right: &'a [GameValue],
    /// `x <= G` for stored `x`.
    below: HashMap<GameValue, bool>,
    /// `G <= x` for stored `x`.
    above: HashMap<GameValue, bool>,
}

impl<'a> Pending<'a> {
    fn new(left: &'a [GameValue], right: &'a [GameValue]) -> Self {
        Pending { left, right, below: HashMap::new(), above: HashMap::new() }
    }
}

impl Kernel {
    /// Canonical form of `{left | right}`.
    ///
    /// Dominated options are removed and reversible options bypassed until
    /// neither rule applies; the result is interned.
    pub fn make_game(&mut self, left: &[GameValue], right: &[GameValue]) -> Result<GameValue, KernelError> {
        let mut left = left.to_vec();
        let mut right = right.to_vec();
        loop {
            self.prune_left(&mut left);
            self.prune_right(&mut right);
            let mut pending = Pending::new(&left, &right);
            let mut changed = false;

            let mut new_left = Vec::with_capacity(left.len());
            for &l in &left {
                match self.left_reversal(l, &mut pending) {
                    Some(replacement) => {
                        new_left.extend_from_slice(self.left_options(replacement));
                        changed = true;
                    }
                    None => new_left.push(l),
                }
            }
            let mut new_right = Vec::with_capacity(right.len());
            for &r in &right {
                match self.right_reversal(r, &mut pending) {
                    Some(replacement) => {
                        new_right.extend_from_slice(self.right_options(replacement));
                        changed = true;
                    }
                    None => new_right.push(r),
                }
            }
            if !changed {
                break;
            }
            left = new_left;
            right = new_right;
        }
        self.intern(left, right)
    }

    /// Drops duplicate left options and any `l` with `l <= l'` for another `l'`.
    fn prune_left(&mut self, options: &mut Vec<GameValue>) {
        options.sort_unstable();
        options.dedup();
        let snapshot = options.clone();
        options.retain(|&l| !snapshot.iter().any(|&m| m != l && self.leq(l, m)));
    }

    fn prune_right(&mut self, options: &mut Vec<GameValue>) {
        options.sort_unstable();
        options.dedup();
        let snapshot = options.clone();
        options.retain(|&r| !snapshot.iter().any(|&m| m != r && self.leq(m, r)));
    }

    /// A right option `l^R` of `l` with `l^R <= G`, if any.
    fn left_reversal(&mut self, l: GameValue, g: &mut Pending<'_>) -> Option<GameValue> {
        let candidates = self.right_options(l).to_vec();
        candidates.into_iter().find(|&lr| self.stored_leq_pending(lr, g))
    }

    /// A left option `r^L` of `r` with `G <= r^L`, if any.
    fn right_reversal(&mut self, r: GameValue, g: &mut Pending<'_>) -> Option<GameValue> {
        let candidates = self.left_options(r).to_vec();
        candidates.into_iter().find(|&rl| self.pending_leq_stored(g, rl))
    }

    /// `x <= G`: no `x^L` with `G <= x^L` and no `G^R <= x`.
    fn stored_leq_pending(&mut self, x: GameValue, g: &mut Pending<'_>) -> bool {
        if let Some(&known) = g.below.get(&x) {
            return known;
        }
        let xl = self.left_options(x).to_vec();
        let result =
            !g.right.iter().any(|&gr| self.leq(gr, x)) && !xl.into_iter().any(|y| self.pending_leq_stored(g, y));
        g.below.insert(x, result);
        result
    }

    /// `G <= x`: no `G^L` with `x <= G^L` and no `x^R <= G`.
    fn pending_leq_stored(&mut self, g: &mut Pending<'_>, x: GameValue) -> bool {
        if let Some(&known) = g.above.get(&x) {
            return known;
        }
        let xr = self.right_options(x).to_vec();
        let result =
            !g.left.iter().any(|&gl| self.leq(x, gl)) && !xr.into_iter().any(|y| self.stored_leq_pending(y, g));
        g.above.insert(x, result);
        result
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn empty_game_is_zero() {
        let mut k = Kernel::new();
        assert_eq!(k.make_game(&[], &[]).unwrap(), GameValue::ZERO);
    }

    #[test]
    fn dominated_options_are_removed() {
        let mut k = Kernel::new();
        let zero = k.zero();
        let one = k.integer(1).unwrap();
        let two = k.integer(2).unwrap();
        // {0, 1 |} = {1 |} = 2
        assert_eq!(k.make_game(&[zero, one], &[]).unwrap(), two);
        assert_eq!(k.left_options(two), &[one]);
    }

    #[test]
    fn reversible_options_are_bypassed() {
        let mut k = Kernel::new();
        let zero = k.zero();
        let one = k.integer(1).unwrap();
        let half = k.dyadic(1, 1).unwrap();
        // {1/2 |} : 1/2 reverses through its right option 1 <= {1/2|} = 1
        assert_eq!(k.make_game(&[half], &[]).unwrap(), one);
        // {0, * | *} = up
        let star = k.nimber(1).unwrap();
        let up = k.make_game(&[zero], &[star]).unwrap();
        assert_eq!(k.make_game(&[zero, star], &[star]).unwrap(), up);
    }

    #[test]
    fn duplicate_options_collapse() {
        let mut k = Kernel::new();
        let zero = k.zero();
        let star = k.make_game(&[zero, zero], &[zero]).unwrap();
        assert_eq!(k.left_options(star), &[zero]);
    }

    #[test]
    fn canonicalizing_a_canonical_value_is_identity() {
        let mut k = Kernel::new();
        let zero = k.zero();
        let star = k.nimber(1).unwrap();
        let up = k.make_game(&[zero], &[star]).unwrap();
        let g = k.make_game(&[up, star], &[zero, up]).unwrap();
        let (l, r) = (k.left_options(g).to_vec(), k.right_options(g).to_vec());
        assert_eq!(k.make_game(&l, &r).unwrap(), g);
    }
}
