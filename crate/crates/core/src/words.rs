//! Words in the free group `F_d`.
//!
//! A [`Word`] keeps its syllables freely reduced: adjacent syllables use
//! different variables and no exponent is zero. Text syntax:
//!
//! ```text
//! word := ['d=' posint] term+
//! term := atom ('^' int)?
//! atom := 'x' posint | '[' word ',' word ']' | '(' word ')' | '1'
//! ```
//!
//! `[u,v]` expands to `u⁻¹v⁻¹uv` and `1` is the empty word.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_integer::Integer;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Syllable {
    /// 1-based variable index.
    pub var: usize,
    pub exp: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    arity: usize,
    syllables: Vec<Syllable>,
}

/// Exponent-sum vector of a word, its image in `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianImage {
    pub exponents: Vec<i64>,
}

impl AbelianImage {
    pub fn gcd(&self) -> i64 {
        self.exponents.iter().fold(0i64, |g, &e| g.gcd(&e))
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Coefficients `b` with `Σ eᵢ bᵢ = gcd(e)`, by iterated extended gcd.
    pub fn bezout(&self) -> (i64, Vec<i64>) {
        let mut coeffs = vec![0i64; self.exponents.len()];
        let mut g: i64 = 0;
        for (i, &e) in self.exponents.iter().enumerate() {
            let ext = (g as i128).extended_gcd(&(e as i128));
            for c in coeffs.iter_mut().take(i) {
                *c = (*c as i128 * ext.x) as i64;
            }
            coeffs[i] = ext.y as i64;
            g = ext.gcd as i64;
        }
        if g < 0 {
            g = -g;
            coeffs.iter_mut().for_each(|c| *c = -*c);
        }
        (g, coeffs)
    }
}

impl Add for &AbelianImage {
    type Output = AbelianImage;

    fn add(self, other: &AbelianImage) -> AbelianImage {
        let d = self.exponents.len().max(other.exponents.len());
        let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
        AbelianImage {
            exponents: (0..d)
                .map(|i| at(&self.exponents, i) + at(&other.exponents, i))
                .collect(),
        }
    }
}

fn reduce_into(stack: &mut Vec<Syllable>, s: Syllable) {
    if s.exp == 0 {
        return;
    }
    match stack.last_mut() {
        Some(top) if top.var == s.var => {
            top.exp += s.exp;
            if top.exp == 0 {
                stack.pop();
            }
        }
        _ => stack.push(s),
    }
}

fn reduce(raw: impl IntoIterator<Item = Syllable>) -> Vec<Syllable> {
    let mut stack = Vec::new();
    for s in raw {
        reduce_into(&mut stack, s);
    }
    stack
}

impl Word {
    /// Builds a reduced word. `arity` must cover every variable used.
    pub fn new(arity: usize, syllables: impl IntoIterator<Item = Syllable>) -> Result<Self> {
        let syllables = reduce(syllables);
        if let Some(s) = syllables.iter().find(|s| s.var == 0 || s.var > arity) {
            return Err(Error::arg(format!(
                "variable x{} outside 1..={arity}",
                s.var
            )));
        }
        Ok(Word { arity, syllables })
    }

    /// Word from `(variable, exponent)` pairs with arity the largest variable.
    pub fn from_pairs(pairs: &[(usize, i64)]) -> Result<Self> {
        let arity = pairs.iter().map(|p| p.0).max().unwrap_or(0);
        Self::new(arity, pairs.iter().map(|&(var, exp)| Syllable { var, exp }))
    }

    pub fn identity(arity: usize) -> Self {
        Word {
            arity,
            syllables: Vec::new(),
        }
    }

    /// The single-letter word `x_i`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1);
        Word {
            arity: i,
            syllables: vec![Syllable { var: i, exp: 1 }],
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).parse_top()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_trivial(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length `l(w) = Σ |exponent|`.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    /// Same word with a larger declared arity.
    pub fn with_arity(&self, arity: usize) -> Result<Self> {
        Self::new(arity, self.syllables.iter().copied())
    }

    pub fn inverse(&self) -> Self {
        Word {
            arity: self.arity,
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    var: s.var,
                    exp: -s.exp,
                })
                .collect(),
        }
    }

    /// Free product `self · other`.
    pub fn concat(&self, other: &Self) -> Self {
        Word {
            arity: self.arity.max(other.arity),
            syllables: reduce(self.syllables.iter().chain(&other.syllables).copied()),
        }
    }

    /// `u⁻¹v⁻¹uv`.
    pub fn commutator(u: &Self, v: &Self) -> Self {
        u.inverse().concat(&v.inverse()).concat(u).concat(v)
    }

    /// Renames `x_i` to `x_{i+offset}`.
    pub fn shift(&self, offset: usize) -> Self {
        Word {
            arity: self.arity + offset,
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable {
                    var: s.var + offset,
                    exp: s.exp,
                })
                .collect(),
        }
    }

    /// Product of the words after shifting each onto fresh variables, so the
    /// factors have pairwise disjoint supports.
    pub fn disjoint_product(words: &[Word]) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::arg("disjoint product of an empty list"));
        }
        let mut offset = 0;
        let mut out = Word::identity(0);
        for w in words {
            out = out.concat(&w.shift(offset));
            offset += w.arity;
        }
        out.arity = offset;
        Ok(out)
    }

    pub fn abelianization(&self) -> AbelianImage {
        let mut exponents = vec![0i64; self.arity];
        for s in &self.syllables {
            exponents[s.var - 1] += s.exp;
        }
        AbelianImage { exponents }
    }

    /// Whether the abelianized image is a primitive vector of `Z^d`.
    pub fn is_primitive(&self) -> bool {
        self.abelianization().is_primitive()
    }

    /// `γ(w)`: 1 when every exponent sum is even, 0 otherwise.
    pub fn parity(&self) -> u8 {
        u8::from(self.abelianization().exponents.iter().all(|e| e % 2 == 0))
    }

    /// The word as a sequence of letters `x_i^{±1}`, left to right.
    pub fn letters(&self) -> Vec<(usize, i8)> {
        self.syllables
            .iter()
            .flat_map(|s| {
                let sign = if s.exp > 0 { 1 } else { -1 };
                std::iter::repeat_n((s.var, sign), s.exp.unsigned_abs() as usize)
            })
            .collect()
    }

    /// `w(g₁, …, g_d)`; each syllable is a power computed by
    /// square-and-multiply.
    pub fn evaluate<G: Group>(&self, group: &G, args: &[G::Elem]) -> G::Elem {
        assert!(
            args.len() >= self.arity,
            "word of arity {} evaluated on {} arguments",
            self.arity,
            args.len()
        );
        self.syllables.iter().fold(group.identity(), |acc, s| {
            let p = group.pow(&args[s.var - 1], s.exp);
            group.mul(&acc, &p)
        })
    }

    /// A tuple `(g^{b₁}, …, g^{b_d})` with `w(…) = g`, where `Σ eᵢbᵢ = 1`.
    pub fn surjectivity_witness<G: Group>(&self, group: &G, g: &G::Elem) -> Result<Vec<G::Elem>> {
        let (gcd, b) = self.abelianization().bezout();
        if gcd != 1 {
            return Err(Error::arg(format!(
                "`{self}` is not primitive (exponent gcd {gcd})"
            )));
        }
        let tuple: Vec<G::Elem> = b.iter().map(|&bi| group.pow(g, bi)).collect();
        if self.evaluate(group, &tuple) != *g {
            return Err(Error::Invariant(format!(
                "surjectivity witness for `{self}` does not evaluate to the target"
            )));
        }
        Ok(tuple)
    }

    /// A random reduced word on `arity` variables with `syllables` raw
    /// syllables and exponents in `±1..=max_exp` (reduction may shorten it).
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        arity: usize,
        syllables: usize,
        max_exp: i64,
    ) -> Self {
        let raw = (0..syllables).map(|_| {
            let var = rng.gen_range(1..=arity);
            let mag = rng.gen_range(1..=max_exp);
            let exp = if rng.gen_bool(0.5) { mag } else { -mag };
            Syllable { var, exp }
        });
        Word {
            arity,
            syllables: reduce(raw),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let used = self.syllables.iter().map(|s| s.var).max().unwrap_or(0);
        if used != self.arity {
            write!(f, "d={} ", self.arity)?;
        }
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if s.exp == 1 {
                write!(f, "x{}", s.var)?;
            } else {
                write!(f, "x{}^{}", s.var, s.exp)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(Error::parse(
                self.pos,
                format!("expected `{}`, found `{}`", c as char, x as char),
            )),
            None => Err(Error::parse(self.pos, format!("expected `{}`", c as char))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "number out of range"))
    }

    fn parse_top(&mut self) -> Result<Word> {
        let mut declared = None;
        if self.peek() == Some(b'd') {
            self.pos += 1;
            self.expect(b'=')?;
            self.skip_ws();
            declared = Some(self.number()? as usize);
        }
        let raw = self.word()?;
        if let Some(c) = self.peek() {
            return Err(Error::parse(
                self.pos,
                format!("unexpected `{}`", c as char),
            ));
        }
        let used = raw.iter().map(|s| s.var).max().unwrap_or(0);
        let arity = match declared {
            Some(d) if d < used => {
                return Err(Error::parse(
                    0,
                    format!("declared arity {d} but x{used} is used"),
                ))
            }
            Some(d) => d,
            None => used,
        };
        Word::new(arity, raw)
    }

    fn word(&mut self) -> Result<Vec<Syllable>> {
        let mut out = Vec::new();
        let mut terms = 0;
        while let Some(b'x' | b'[' | b'(' | b'1') = self.peek() {
            for s in self.term()? {
                reduce_into(&mut out, s);
            }
            terms += 1;
        }
        if terms == 0 {
            return Err(Error::parse(self.pos, "expected a term"));
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Vec<Syllable>> {
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let neg = match self.src.get(self.pos) {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            let mag = self.number()? as i64;
            if mag == 0 {
                return Err(Error::parse(start, "exponent must be nonzero"));
            }
            let e = if neg { -mag } else { mag };
            return Ok(power(&atom, e));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Vec<Syllable>> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                let v = self.number()? as usize;
                if v == 0 {
                    return Err(Error::parse(start, "variable index must be positive"));
                }
                Ok(vec![Syllable { var: v, exp: 1 }])
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Vec::new())
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(b',')?;
                let v = self.word()?;
                self.expect(b']')?;
                let inv = |w: &[Syllable]| -> Vec<Syllable> {
                    w.iter()
                        .rev()
                        .map(|s| Syllable {
                            var: s.var,
                            exp: -s.exp,
                        })
                        .collect()
                };
                let mut out = inv(&u);
                out.extend(inv(&v));
                out.extend(u);
                out.extend(v);
                Ok(reduce(out))
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected `{}`", c as char),
            )),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

fn power(w: &[Syllable], e: i64) -> Vec<Syllable> {
    let base: Vec<Syllable> = if e > 0 {
        w.to_vec()
    } else {
        w.iter()
            .rev()
            .map(|s| Syllable {
                var: s.var,
                exp: -s.exp,
            })
            .collect()
    };
    if base.len() == 1 {
        return vec![Syllable {
            var: base[0].var,
            exp: base[0].exp * e.abs(),
        }];
    }
    let mut out = Vec::new();
    for _ in 0..e.unsigned_abs() {
        for &s in &base {
            reduce_into(&mut out, s);
        }
    }
    out
}
