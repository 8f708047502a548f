//! Named value families: integers, dyadics, nimbers, multiples of up and
//! up-towers, with their down duals.

use super::{Dyadic, GameValue, Kernel, KernelError, MAX_EXPONENT, MAX_MAGNITUDE};

/// A game value recognized as a member of a named family.
///
/// `UpMultiple(n, star)` is `n·↑` (plus `*` when `star`); `UpTower(n, star)` is
/// `↑^[n]` with `↑^[1] = ↑` and `↑^[n] = {↑^[n-1] | *}`. Because `↑^[1] = 1·↑`,
/// [`Kernel::classify`] always reports those as `UpMultiple(1, _)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NamedValue {
    Integer(i64),
    /// `numerator / 2^exponent` with odd numerator and positive exponent.
    Dyadic(i64, u32),
    Nimber(u32),
    UpMultiple(u32, bool),
    DownMultiple(u32, bool),
    UpTower(u32, bool),
    DownTower(u32, bool),
    Other(GameValue),
}

impl NamedValue {
    pub fn from_number(d: Dyadic) -> Self {
        if d.is_integer() {
            NamedValue::Integer(d.numerator())
        } else {
            NamedValue::Dyadic(d.numerator(), d.exponent())
        }
    }

    pub fn is_other(&self) -> bool {
        matches!(self, NamedValue::Other(_))
    }
}

impl Kernel {
    fn check_birthday(&self, birthday: u64) -> Result<(), KernelError> {
        let limit = self.config.max_birthday;
        if birthday > limit as u64 {
            return Err(KernelError::DepthExceeded { birthday: birthday.min(u32::MAX as u64) as u32, limit });
        }
        Ok(())
    }

    pub fn integer(&mut self, n: i64) -> Result<GameValue, KernelError> {
        let d = Dyadic::integer(n).map_err(|_| KernelError::ParameterOverflow(format!("integer {n} exceeds 2^62")))?;
        self.number(d)
    }

    /// `numerator / 2^exponent`, reduced to lowest terms first.
    pub fn dyadic(&mut self, numerator: i64, exponent: u32) -> Result<GameValue, KernelError> {
        let d = Dyadic::new(numerator, exponent)
            .map_err(|_| KernelError::ParameterOverflow(format!("{numerator}/2^{exponent} is out of range")))?;
        self.number(d)
    }

    /// Canonical form of a dyadic: `n = {n-1 |}` for positive integers, and
    /// `m/2^k = {(m-1)/2^k | (m+1)/2^k}` for odd `m`.
    pub fn number(&mut self, d: Dyadic) -> Result<GameValue, KernelError> {
        let key = NamedValue::from_number(d);
        if let Some(&g) = self.named_memo.get(&key) {
            return Ok(g);
        }
        let whole = d.numerator() >> d.exponent();
        self.check_birthday(whole.unsigned_abs() + d.exponent() as u64 + 1)?;
        let g = if d.is_integer() {
            let n = d.numerator();
            let mut g = GameValue::ZERO;
            for i in 1..=n.unsigned_abs() {
                let step = if n > 0 { i as i64 } else { -(i as i64) };
                let known = self.named_memo.get(&NamedValue::Integer(step)).copied();
                g = match known {
                    Some(v) => v,
                    None => {
                        let v = if n > 0 { self.make_game(&[g], &[])? } else { self.make_game(&[], &[g])? };
                        self.named_memo.insert(NamedValue::Integer(step), v);
                        v
                    }
                };
            }
            g
        } else {
            let below = Dyadic::new(d.numerator() - 1, d.exponent()).expect("neighbor in range");
            let above = Dyadic::new(d.numerator() + 1, d.exponent()).expect("neighbor in range");
            let l = self.number(below)?;
            let r = self.number(above)?;
            self.make_game(&[l], &[r])?
        };
        self.named_memo.insert(key, g);
        Ok(g)
    }

    /// `*k = {*0, ..., *(k-1) | *0, ..., *(k-1)}`.
    pub fn nimber(&mut self, k: u32) -> Result<GameValue, KernelError> {
        if let Some(&g) = self.named_memo.get(&NamedValue::Nimber(k)) {
            return Ok(g);
        }
        self.check_birthday(k as u64)?;
        let mut options = vec![GameValue::ZERO];
        for j in 1..=k {
            let g = match self.named_memo.get(&NamedValue::Nimber(j)) {
                Some(&g) => g,
                None => {
                    let g = self.make_game(&options, &options)?;
                    self.named_memo.insert(NamedValue::Nimber(j), g);
                    g
                }
            };
            options.push(g);
        }
        Ok(options[k as usize])
    }

    pub fn star(&mut self) -> GameValue {
        self.nimber(1).expect("* always fits")
    }

    /// `↑ = {0 | *}`.
    pub fn up(&mut self) -> GameValue {
        let star = self.star();
        self.make_game(&[GameValue::ZERO], &[star]).expect("up always fits")
    }

    /// `n·↑`, plus `*` when `star`; `n = 0` gives `0` or `*`.
    pub fn up_multiple(&mut self, n: u32, star: bool) -> Result<GameValue, KernelError> {
        let key = NamedValue::UpMultiple(n, star);
        if let Some(&g) = self.named_memo.get(&key) {
            return Ok(g);
        }
        self.check_birthday(n as u64 + 1)?;
        let g = if star {
            let plain = self.up_multiple(n, false)?;
            let s = self.star();
            self.add(plain, s)?
        } else if n == 0 {
            GameValue::ZERO
        } else {
            let prev = self.up_multiple(n - 1, false)?;
            let up = self.up();
            self.add(prev, up)?
        };
        self.named_memo.insert(key, g);
        Ok(g)
    }

    /// `↑^[n]`, plus `*` when `star`; `↑^[0]` is taken to be `0`.
    pub fn up_tower(&mut self, n: u32, star: bool) -> Result<GameValue, KernelError> {
        let key = NamedValue::UpTower(n, star);
        if let Some(&g) = self.named_memo.get(&key) {
            return Ok(g);
        }
        self.check_birthday(n as u64 + 1)?;
        let g = if star {
            let plain = self.up_tower(n, false)?;
            let s = self.star();
            self.add(plain, s)?
        } else if n == 0 {
            GameValue::ZERO
        } else {
            let prev = self.up_tower(n - 1, false)?;
            let s = self.star();
            self.make_game(&[prev], &[s])?
        };
        self.named_memo.insert(key, g);
        Ok(g)
    }

    /// `↓_[n] = -↑^[n]`, plus `*` when `star`.
    pub fn down_tower(&mut self, n: u32, star: bool) -> Result<GameValue, KernelError> {
        let up = self.up_tower(n, star)?;
        Ok(self.neg(up))
    }

    pub fn down_multiple(&mut self, n: u32, star: bool) -> Result<GameValue, KernelError> {
        let up = self.up_multiple(n, star)?;
        Ok(self.neg(up))
    }

    /// The game a named value stands for. `Other(g)` maps to `g`.
    pub fn named_to_game(&mut self, v: NamedValue) -> Result<GameValue, KernelError> {
        let positive = |n: u32| {
            if n == 0 {
                Err(KernelError::InvalidNamed(format!("{v:?}: parameter must be positive")))
            } else {
                Ok(())
            }
        };
        match v {
            NamedValue::Integer(n) => self.integer(n),
            NamedValue::Dyadic(num, exp) => {
                if exp == 0 || num % 2 == 0 {
                    return Err(KernelError::InvalidNamed(format!(
                        "{num}/2^{exp} is not a non-integer dyadic in lowest terms"
                    )));
                }
                if exp > MAX_EXPONENT || num.unsigned_abs() > MAX_MAGNITUDE as u64 {
                    return Err(KernelError::ParameterOverflow(format!("{num}/2^{exp}")));
                }
                self.dyadic(num, exp)
            }
            NamedValue::Nimber(k) => self.nimber(k),
            NamedValue::UpMultiple(n, s) => {
                positive(n)?;
                self.up_multiple(n, s)
            }
            NamedValue::DownMultiple(n, s) => {
                positive(n)?;
                self.down_multiple(n, s)
            }
            NamedValue::UpTower(n, s) => {
                positive(n)?;
                self.up_tower(n, s)
            }
            NamedValue::DownTower(n, s) => {
                positive(n)?;
                self.down_tower(n, s)
            }
            NamedValue::Other(g) => Ok(g),
        }
    }

    /// Recognizes `g` as a named family member, trying integers, dyadics,
    /// nimbers, multiples of up/down and then towers; `Other(g)` otherwise.
    ///
    /// Family parameters are searched up to the birthday of `g`.
    pub fn classify(&mut self, g: GameValue) -> NamedValue {
        if let Some(d) = self.as_number(g) {
            return NamedValue::from_number(d);
        }
        if let Some(k) = self.as_nimber(g) {
            return NamedValue::Nimber(k);
        }
        let bound = self.birthday(g);
        let up_side = self.leq(GameValue::ZERO, g) || {
            let s = self.star();
            self.leq(s, g)
        };
        for n in 1..=bound {
            for star in [false, true] {
                let (candidate, named) = if up_side {
                    (self.up_multiple(n, star), NamedValue::UpMultiple(n, star))
                } else {
                    (self.down_multiple(n, star), NamedValue::DownMultiple(n, star))
                };
                match candidate {
                    Ok(c) if c == g => return named,
                    Ok(_) => {}
                    Err(_) => return NamedValue::Other(g),
                }
            }
        }
        for n in 2..=bound {
            for star in [false, true] {
                let (candidate, named) = if up_side {
                    (self.up_tower(n, star), NamedValue::UpTower(n, star))
                } else {
                    (self.down_tower(n, star), NamedValue::DownTower(n, star))
                };
                match candidate {
                    Ok(c) if c == g => return named,
                    Ok(_) => {}
                    Err(_) => return NamedValue::Other(g),
                }
            }
        }
        NamedValue::Other(g)
    }
}
