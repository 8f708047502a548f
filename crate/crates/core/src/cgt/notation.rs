//! Text notation for game values.
//!
//! | value        | notation          |
//! |--------------|-------------------|
//! | integers     | `-3`, `0`, `7`    |
//! | dyadics      | `3/8`, `-1/2`     |
//! | nimbers      | `*`, `*2`         |
//! | `n·↑`, `n·↑*`| `^`, `^*`, `3^`, `3^*` |
//! | `n·↓`, `n·↓*`| `v`, `v*`, `3v`, `3v*` |
//! | towers       | `^[n]`, `^[n]*`, `v[n]`, `v[n]*` |
//! | anything else| `{a,b|c}`         |

use std::fmt::Write as _;

use thiserror::Error;

use super::{Dyadic, GameValue, Kernel, KernelError, NamedValue};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseValueError {
    #[error("unexpected {found} at offset {offset}, expected {expected}")]
    Unexpected { offset: usize, found: String, expected: &'static str },
    #[error("denominator {0} is not a power of two")]
    Denominator(u64),
    #[error("number out of range at offset {0}")]
    Overflow(usize),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

impl NamedValue {
    /// Notation for every variant except `Other`, which needs the kernel.
    pub fn notation(&self) -> Option<String> {
        let suffix = |s: bool| if s { "*" } else { "" };
        let s = match *self {
            NamedValue::Integer(n) => n.to_string(),
            NamedValue::Dyadic(num, exp) => format!("{num}/{}", 1u64 << exp),
            NamedValue::Nimber(0) => "0".to_string(),
            NamedValue::Nimber(1) => "*".to_string(),
            NamedValue::Nimber(k) => format!("*{k}"),
            NamedValue::UpMultiple(1, s) => format!("^{}", suffix(s)),
            NamedValue::UpMultiple(n, s) => format!("{n}^{}", suffix(s)),
            NamedValue::DownMultiple(1, s) => format!("v{}", suffix(s)),
            NamedValue::DownMultiple(n, s) => format!("{n}v{}", suffix(s)),
            NamedValue::UpTower(n, s) => format!("^[{n}]{}", suffix(s)),
            NamedValue::DownTower(n, s) => format!("v[{n}]{}", suffix(s)),
            NamedValue::Other(_) => return None,
        };
        Some(s)
    }
}

impl Kernel {
    /// Value notation of `g`: the named form when `g` belongs to a named
    /// family, otherwise braces with options in stored order.
    pub fn display(&mut self, g: GameValue) -> String {
        let mut out = String::new();
        self.write_value(g, &mut out);
        out
    }

    fn write_value(&mut self, g: GameValue, out: &mut String) {
        let named = self.classify(g);
        if let Some(s) = named.notation() {
            out.push_str(&s);
            return;
        }
        let left = self.left_options(g).to_vec();
        let right = self.right_options(g).to_vec();
        out.push('{');
        for (i, &l) in left.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            self.write_value(l, out);
        }
        out.push('|');
        for (i, &r) in right.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            self.write_value(r, out);
        }
        out.push('}');
    }

    /// Display of a named value; `Other` falls back to brace form.
    pub fn display_named(&mut self, v: NamedValue) -> String {
        match v {
            NamedValue::Other(g) => self.display(g),
            _ => v.notation().expect("named variant has notation"),
        }
    }

    /// Parses value notation into a canonical game.
    pub fn parse_value(&mut self, text: &str) -> Result<GameValue, ParseValueError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let g = p.value(self)?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.unexpected("end of input"));
        }
        Ok(g)
    }
}

/// Human-readable summary of a named value, e.g. `dyadic 3/8`.
pub fn describe(kernel: &mut Kernel, v: NamedValue) -> String {
    let family = match v {
        NamedValue::Integer(_) => "integer",
        NamedValue::Dyadic(..) => "dyadic",
        NamedValue::Nimber(_) => "nimber",
        NamedValue::UpMultiple(..) => "up multiple",
        NamedValue::DownMultiple(..) => "down multiple",
        NamedValue::UpTower(..) => "up tower",
        NamedValue::DownTower(..) => "down tower",
        NamedValue::Other(_) => "other",
    };
    let mut s = String::from(family);
    let _ = write!(s, " {}", kernel.display_named(v));
    s
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseValueError {
        let found = match self.peek() {
            Some(c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        };
        ParseValueError::Unexpected { offset: self.pos, found, expected }
    }

    fn digits(&mut self) -> Result<Option<u64>, ParseValueError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map(Some).map_err(|_| ParseValueError::Overflow(start))
    }

    fn small(&self, n: u64, at: usize) -> Result<u32, ParseValueError> {
        u32::try_from(n).map_err(|_| ParseValueError::Overflow(at))
    }

    fn bracketed_count(&mut self) -> Result<u32, ParseValueError> {
        let at = self.pos;
        let n = self.digits()?.ok_or_else(|| self.unexpected("tower height"))?;
        if !self.eat(b']') {
            return Err(self.unexpected("']'"));
        }
        if n == 0 {
            return Err(ParseValueError::Unexpected {
                offset: at,
                found: "0".into(),
                expected: "positive tower height",
            });
        }
        self.small(n, at)
    }

    fn list(&mut self, kernel: &mut Kernel, close: u8) -> Result<Vec<GameValue>, ParseValueError> {
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(close) {
            return Ok(items);
        }
        loop {
            items.push(self.value(kernel)?);
            self.skip_ws();
            if !self.eat(b',') {
                return Ok(items);
            }
        }
    }

    fn value(&mut self, kernel: &mut Kernel) -> Result<GameValue, ParseValueError> {
        self.skip_ws();
        let start = self.pos;
        if self.eat(b'{') {
            let left = self.list(kernel, b'|')?;
            self.skip_ws();
            if !self.eat(b'|') {
                return Err(self.unexpected("'|'"));
            }
            let right = self.list(kernel, b'}')?;
            self.skip_ws();
            if !self.eat(b'}') {
                return Err(self.unexpected("'}'"));
            }
            return Ok(kernel.make_game(&left, &right)?);
        }
        if self.eat(b'*') {
            let k = match self.digits()? {
                Some(k) => self.small(k, start)?,
                None => 1,
            };
            return Ok(kernel.nimber(k)?);
        }
        let negative = self.eat(b'-');
        let count = self.digits()?;
        match self.peek() {
            Some(b'^') | Some(b'v') if !negative => {
                let up = self.peek() == Some(b'^');
                self.pos += 1;
                if count.is_none() && self.eat(b'[') {
                    let n = self.bracketed_count()?;
                    let star = self.eat(b'*');
                    let g = if up { kernel.up_tower(n, star)? } else { kernel.down_tower(n, star)? };
                    return Ok(g);
                }
                let n = self.small(count.unwrap_or(1), start)?;
                let star = self.eat(b'*');
                let g = if up { kernel.up_multiple(n, star)? } else { kernel.down_multiple(n, star)? };
                Ok(g)
            }
            _ => {
                let whole = count.ok_or_else(|| self.unexpected("a value"))?;
                let mut exponent = 0;
                if self.eat(b'/') {
                    let den = self.digits()?.ok_or_else(|| self.unexpected("denominator"))?;
                    if den == 0 || !den.is_power_of_two() {
                        return Err(ParseValueError::Denominator(den));
                    }
                    exponent = den.trailing_zeros();
                }
                let magnitude = i64::try_from(whole).map_err(|_| ParseValueError::Overflow(start))?;
                let numerator = if negative { -magnitude } else { magnitude };
                let d = Dyadic::new(numerator, exponent).map_err(|_| ParseValueError::Overflow(start))?;
                Ok(kernel.number(d)?)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_named_families() {
        let mut k = Kernel::new();
        let cases = [
            (NamedValue::Integer(-3), "-3"),
            (NamedValue::Integer(0), "0"),
            (NamedValue::Dyadic(3, 3), "3/8"),
            (NamedValue::Dyadic(-1, 1), "-1/2"),
            (NamedValue::Nimber(1), "*"),
            (NamedValue::Nimber(2), "*2"),
            (NamedValue::UpMultiple(1, false), "^"),
            (NamedValue::UpMultiple(1, true), "^*"),
            (NamedValue::UpMultiple(3, true), "3^*"),
            (NamedValue::DownMultiple(2, false), "2v"),
            (NamedValue::UpTower(2, true), "^[2]*"),
            (NamedValue::DownTower(3, false), "v[3]"),
        ];
        for (v, text) in cases {
            let g = k.named_to_game(v).unwrap();
            assert_eq!(k.display(g), text);
            assert_eq!(k.parse_value(text).unwrap(), g, "parse {text}");
        }
    }

    #[test]
    fn prints_other_values_in_braces() {
        let mut k = Kernel::new();
        let half = k.dyadic(1, 1).unwrap();
        let star = k.star();
        let g = k.add(half, star).unwrap();
        assert_eq!(k.display(g), "{1/2|1/2}");
        assert_eq!(k.parse_value("{1/2|1/2}").unwrap(), g);
        assert_eq!(k.parse_value(" { 1/2 | 1/2 } ").unwrap(), g);
    }

    #[test]
    fn parses_bracket_forms() {
        let mut k = Kernel::new();
        let up = k.up();
        assert_eq!(k.parse_value("{0|*}").unwrap(), up);
        assert_eq!(k.parse_value("{|}").unwrap(), k.zero());
        assert_eq!(k.parse_value("{0,*|*}").unwrap(), up);
        let two = k.integer(2).unwrap();
        assert_eq!(k.parse_value("{0,1|}").unwrap(), two);
        assert_eq!(k.parse_value("4/8").unwrap(), k.dyadic(1, 1).unwrap());
        assert_eq!(k.parse_value("*0").unwrap(), k.zero());
    }

    #[test]
    fn parse_errors() {
        let mut k = Kernel::new();
        assert_eq!(k.parse_value("1/3"), Err(ParseValueError::Denominator(3)));
        assert!(matches!(k.parse_value("{0|"), Err(ParseValueError::Unexpected { .. })));
        assert!(matches!(k.parse_value("^[0]"), Err(ParseValueError::Unexpected { .. })));
        assert!(matches!(k.parse_value("1 2"), Err(ParseValueError::Unexpected { .. })));
        assert!(matches!(k.parse_value(""), Err(ParseValueError::Unexpected { .. })));
    }
}
