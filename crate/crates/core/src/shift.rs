//! Exact symbolic dynamics for the one-sided full shift on `k` symbols.
//!
//! Points are restricted to eventually periodic sequences (preperiod word
//! followed by an infinitely repeated period word), which are exactly the
//! points that admit finite exact evaluation. Generic points only ever enter
//! the artifact through cylinders, i.e. through [`Word`]s.
//!
//! The metric is fixed as `d(x,y) = 2^{-i}` where `i` is the first (1-based)
//! index at which `x` and `y` disagree. With this convention the Bowen
//! distance over `n` iterates satisfies
//! `d_n(x,y) < 2^{-s}  iff  x,y agree on their first n+s-1 symbols`,
//! so every supremum over a Bowen ball is a supremum over a cylinder.

use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// The symbol alphabet `{0, .., k-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Alphabet {
    k: usize,
}

impl Alphabet {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Invalid(format!("alphabet needs k >= 2, got {k}")));
        }
        Ok(Alphabet { k })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.k
    }

    /// `k^n` as a u128, or an error when it does not fit.
    pub fn word_count(&self, n: usize) -> Result<u128> {
        let n32 = u32::try_from(n)
            .map_err(|_| Error::Invalid(format!("word length {n} out of range")))?;
        (self.k as u128)
            .checked_pow(n32)
            .ok_or_else(|| Error::Invalid(format!("k^{n} overflows for k = {}", self.k)))
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> {
        (0..self.k as u8).collect::<Vec<_>>().into_iter()
    }

    pub fn contains(&self, symbol: u8) -> bool {
        (symbol as usize) < self.k
    }
}

/// Item budget for exhaustive enumerations.
///
/// Worst-case scans are linear in the number of enumerated items, so the
/// default of `2^22` keeps any single operation comfortably under a minute
/// on a desktop machine.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Budget {
    max_items: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_items: 1 << 22,
        }
    }
}

impl Budget {
    pub fn new(max_items: u64) -> Self {
        Budget { max_items }
    }

    pub fn max_items(&self) -> u64 {
        self.max_items
    }

    /// Checks that `needed` items fit, otherwise returns the budget error.
    pub fn check(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_items as u128 {
            Err(Error::Budget {
                what,
                needed,
                budget: self.max_items,
            })
        } else {
            Ok(())
        }
    }
}

/// A finite word over the alphabet, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: Vec<u8>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Validating constructor: every symbol must lie in the alphabet.
    pub fn validated(symbols: Vec<u8>, alphabet: Alphabet) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| !alphabet.contains(s)) {
            return Err(Error::Invalid(format!(
                "symbol {bad} out of range for alphabet of size {}",
                alphabet.size()
            )));
        }
        Ok(Word(symbols))
    }

    /// Parses a digit string like "0110"; requires `k <= 10`.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for ch in text.chars() {
            let d = ch
                .to_digit(10)
                .ok_or_else(|| Error::Invalid(format!("invalid word character {ch:?}")))?;
            symbols.push(d as u8);
        }
        Word::validated(symbols, alphabet)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Index of this word in the lexicographic enumeration of words of its
    /// length (most significant symbol first).
    pub fn lex_index(&self, alphabet: Alphabet) -> u128 {
        let k = alphabet.size() as u128;
        self.0.iter().fold(0u128, |acc, &s| acc * k + s as u128)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            if s < 10 {
                write!(f, "{s}")?;
            } else {
                write!(f, "[{s}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Shortest word `u` with `w = u^m`; rotations of primitive words stay
/// primitive, so canonicalization below is stable under period rotation.
fn primitive_root(w: &[u8]) -> &[u8] {
    let n = w.len();
    for d in 1..=n / 2 {
        if n % d == 0 && w.chunks(d).all(|c| c == &w[..d]) {
            return &w[..d];
        }
    }
    w
}

/// An eventually periodic point `pre . (per)^infinity` in canonical form:
/// the period is primitive and the preperiod is minimal (its last symbol is
/// never absorbable into the period). Equality of canonical forms is equality
/// of the underlying infinite sequences.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pre: Word,
    per: Word,
}

impl Point {
    pub fn new(pre: Word, per: Word) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::Invalid("point period must be nonempty".into()));
        }
        let mut pre = pre.0;
        let mut per = primitive_root(&per.0).to_vec();
        // Absorb: pre . (w a)^inf = pre' . (a w)^inf whenever pre ends in a.
        while let Some(&last) = pre.last() {
            if last == *per.last().expect("period nonempty") {
                pre.pop();
                per.rotate_right(1);
            } else {
                break;
            }
        }
        Ok(Point {
            pre: Word(pre),
            per: Word(per),
        })
    }

    /// The purely periodic point `w^infinity`.
    pub fn periodic(per: Word) -> Result<Self> {
        Point::new(Word::empty(), per)
    }

    /// The constant point `a^infinity`.
    pub fn fixed(symbol: u8) -> Self {
        Point {
            pre: Word::empty(),
            per: Word(vec![symbol]),
        }
    }

    pub fn preperiod(&self) -> &Word {
        &self.pre
    }

    pub fn period(&self) -> &Word {
        &self.per
    }

    /// Length of the primitive period.
    pub fn primitive_period(&self) -> usize {
        self.per.len()
    }

    pub fn is_periodic(&self) -> bool {
        self.pre.is_empty()
    }

    /// Symbol at 0-based position `i`.
    #[inline]
    pub fn symbol_at(&self, i: usize) -> u8 {
        if i < self.pre.len() {
            self.pre.0[i]
        } else {
            self.per.0[(i - self.pre.len()) % self.per.len()]
        }
    }

    /// First `n` symbols (the index word of the depth-`n` cylinder around
    /// this point).
    pub fn prefix(&self, n: usize) -> Word {
        Word((0..n).map(|i| self.symbol_at(i)).collect())
    }

    /// `sigma^m` of this point, in canonical form.
    pub fn shift(&self, m: usize) -> Point {
        if m <= self.pre.len() {
            Point::new(Word(self.pre.0[m..].to_vec()), self.per.clone())
                .expect("period stays nonempty")
        } else {
            let rot = (m - self.pre.len()) % self.per.len();
            let mut per = self.per.0.clone();
            per.rotate_left(rot);
            Point {
                pre: Word::empty(),
                per: Word(per),
            }
        }
    }

    /// 0-based position of the first symbol where the two points disagree;
    /// `None` when they are equal as infinite sequences.
    pub fn first_disagreement(&self, other: &Point) -> Option<usize> {
        let bound = self.pre.len().max(other.pre.len())
            + lcm(self.per.len(), other.per.len());
        (0..bound).find(|&i| self.symbol_at(i) != other.symbol_at(i))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})^inf", self.pre, self.per)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// `d(x,y) = 2^{-i}` with `i` the first 1-based disagreement index; `0` when
/// the points coincide.
pub fn point_distance(x: &Point, y: &Point) -> f64 {
    match x.first_disagreement(y) {
        None => 0.0,
        Some(i) => 0.5f64.powi(i as i32 + 1),
    }
}

/// Bowen distance `d_n(x,y) = max_{0 <= j < n} d(sigma^j x, sigma^j y)`.
///
/// With `p` the 0-based first disagreement position, the maximum is attained
/// at `j = min(p, n-1)`, giving `2^{-(max(p-(n-1),0)+1)}`.
pub fn bowen_distance(x: &Point, y: &Point, n: usize) -> f64 {
    assert!(n >= 1, "bowen_distance needs n >= 1");
    match x.first_disagreement(y) {
        None => 0.0,
        Some(p) => {
            let gap = p.saturating_sub(n - 1);
            0.5f64.powi(gap as i32 + 1)
        }
    }
}

/// Visits all `k^len` words of the given length in lexicographic order.
///
/// The callback receives each word as a slice; the buffer is reused between
/// calls. This is the single enumeration primitive behind every exhaustive
/// scan in the crate, so every floating-point reduction downstream runs in
/// the same deterministic order.
pub fn for_each_word(alphabet: Alphabet, len: usize, mut visit: impl FnMut(&[u8])) {
    let k = alphabet.size() as u8;
    let mut buf = vec![0u8; len];
    loop {
        visit(&buf);
        // Odometer increment, most significant symbol first.
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            buf[pos] += 1;
            if buf[pos] < k {
                break;
            }
            buf[pos] = 0;
        }
        buf[pos + 1..].fill(0);
    }
}

/// All `k^n` words of length `n` in lexicographic order.
pub fn enumerate_words(alphabet: Alphabet, n: usize, budget: &Budget) -> Result<Vec<Word>> {
    budget.check("enumerate_words", alphabet.word_count(n)?)?;
    let mut out = Vec::with_capacity(alphabet.word_count(n)? as usize);
    for_each_word(alphabet, n, |w| out.push(Word(w.to_vec())));
    Ok(out)
}

/// Lexicographically least rotation of `w` equals `w` and `w` is primitive:
/// i.e. `w` is a Lyndon-type necklace representative of an orbit.
fn is_orbit_representative(w: &[u8]) -> bool {
    if primitive_root(w).len() != w.len() {
        return false;
    }
    let n = w.len();
    let mut rot = Vec::with_capacity(2 * n);
    rot.extend_from_slice(w);
    rot.extend_from_slice(w);
    (1..n).all(|r| w <= &rot[r..r + n])
}

/// One representative per periodic orbit of primitive period `q <= max_period`,
/// paired with `q`. Representatives are the lexicographically least rotations
/// of primitive period words; counts match the Mobius necklace formula.
pub fn enumerate_periodic_points(
    alphabet: Alphabet,
    max_period: usize,
    budget: &Budget,
) -> Result<Vec<(Point, usize)>> {
    budget.check(
        "enumerate_periodic_points",
        alphabet.word_count(max_period)?,
    )?;
    let mut out = Vec::new();
    for q in 1..=max_period {
        for_each_word(alphabet, q, |w| {
            if is_orbit_representative(w) {
                out.push((
                    Point {
                        pre: Word::empty(),
                        per: Word(w.to_vec()),
                    },
                    q,
                ));
            }
        });
    }
    Ok(out)
}

/// Closing-lemma shadowing on the full shift: the periodic point
/// `p = (x_1 .. x_n)^infinity`. It satisfies `sigma^n(p) = p` and shares the
/// first `n` symbols with `x`, so `d(sigma^n x, x) < 2^{-s}` implies
/// `d_n(x, p) < 2^{-s}` exactly.
pub fn shadow_periodic(x: &Point, n: usize) -> Point {
    assert!(n >= 1, "shadow_periodic needs n >= 1");
    Point::periodic(x.prefix(n)).expect("nonempty period")
}

/// Finite-horizon stand-in for a transitive point: the concatenation of all
/// words of length `1..=max_len` in lexicographic order. Every word of length
/// `<= max_len` occurs in it as a factor.
pub fn transitive_prefix(alphabet: Alphabet, max_len: usize, budget: &Budget) -> Result<Word> {
    let mut total: u128 = 0;
    for m in 1..=max_len {
        total += (m as u128) * alphabet.word_count(m)?;
    }
    budget.check("transitive_prefix", total)?;
    let mut symbols = Vec::with_capacity(total as usize);
    for m in 1..=max_len {
        for_each_word(alphabet, m, |w| symbols.extend_from_slice(w));
    }
    Ok(Word(symbols))
}
