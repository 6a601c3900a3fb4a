//! Potential sequences `(f_n)` with exact evaluation on cylinders.
//!
//! Every sequence carries a per-`n` *determining window*: `f_n` depends only
//! on the first `window(n)` symbols of a point. Suprema, infima and sup-norms
//! are therefore exact finite maxima over words, never sampled.
//!
//! Locally constant functions stand in for Holder functions throughout: every
//! locally constant function on the shift is Holder, and all counterexample
//! machinery in this domain works through cylinder approximations anyway.

use crate::families::CylinderWeights;
use crate::shift::{for_each_word, Alphabet, Budget, Point, Word};
use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// A function on the shift depending on the first `window` symbols, stored as
/// a complete table over words of that length.
///
/// `window = 0` means a global constant (a single table entry); it is used
/// for transfer functions and coboundary solutions of window-1 inputs.
#[derive(Clone, PartialEq)]
pub struct LocallyConstantPotential {
    alphabet: Alphabet,
    window: usize,
    values: Vec<f64>,
}

impl fmt::Debug for LocallyConstantPotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LocallyConstantPotential(k={}, r={}, {} values)",
            self.alphabet.size(),
            self.window,
            self.values.len()
        )
    }
}

impl LocallyConstantPotential {
    pub fn new(alphabet: Alphabet, window: usize, values: Vec<f64>) -> Result<Self> {
        let expect = alphabet.word_count(window)?;
        if values.len() as u128 != expect {
            return Err(Error::Invalid(format!(
                "potential table has {} values, expected k^r = {expect}",
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Invalid(format!("non-finite table value {bad}")));
        }
        Ok(LocallyConstantPotential {
            alphabet,
            window,
            values,
        })
    }

    /// Builds the table by evaluating `f` on every window word.
    pub fn from_fn(
        alphabet: Alphabet,
        window: usize,
        mut f: impl FnMut(&[u8]) -> f64,
    ) -> Result<Self> {
        let mut values = Vec::new();
        for_each_word(alphabet, window, |w| values.push(f(w)));
        LocallyConstantPotential::new(alphabet, window, values)
    }

    /// The constant function `c` (window 0).
    pub fn constant(alphabet: Alphabet, c: f64) -> Self {
        LocallyConstantPotential {
            alphabet,
            window: 0,
            values: vec![c],
        }
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        Self::constant(alphabet, 0.0)
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn window(&self) -> usize {
        self.window
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[inline]
    fn table_index(&self, w: &[u8]) -> usize {
        let k = self.alphabet.size();
        w[..self.window]
            .iter()
            .fold(0usize, |acc, &s| acc * k + s as usize)
    }

    /// Value on any word with at least `window` symbols.
    #[inline]
    pub fn eval(&self, w: &[u8]) -> f64 {
        debug_assert!(w.len() >= self.window);
        self.values[self.table_index(w)]
    }

    /// `max |phi|` over the table.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Pointwise linear combination `a*self + b*other`, on the larger window.
    pub fn linear_combination(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        if self.alphabet != other.alphabet {
            return Err(Error::Invalid("alphabet mismatch".into()));
        }
        let window = self.window.max(other.window);
        LocallyConstantPotential::from_fn(self.alphabet, window, |w| {
            a * self.eval(w) + b * other.eval(w)
        })
    }

    pub fn add_constant(&self, c: f64) -> Self {
        LocallyConstantPotential {
            alphabet: self.alphabet,
            window: self.window,
            values: self.values.iter().map(|v| v + c).collect(),
        }
    }

    /// The coboundary `q o sigma - q` of this function, one window wider.
    pub fn coboundary(&self) -> Result<LocallyConstantPotential> {
        let r = self.window + 1;
        LocallyConstantPotential::from_fn(self.alphabet, r, |w| {
            self.eval(&w[1..]) - self.eval(&w[..r - 1])
        })
    }

    /// Mean under the uniform Bernoulli measure (equal weight per table word).
    pub fn uniform_mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }
}

/// Parses the line-oriented potential file format:
///
/// ```text
/// alphabet 2
/// window 1
/// 0 1.0
/// 1 -1.0
/// ```
///
/// Every length-`window` word must appear exactly once.
pub fn parse_potential(text: &str, file: &str) -> Result<LocallyConstantPotential> {
    let perr = |line: usize, msg: String| Error::Parse {
        file: file.to_string(),
        line,
        msg,
    };
    let mut alphabet: Option<Alphabet> = None;
    let mut window: Option<usize> = None;
    let mut entries: Vec<(Word, f64, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let head = parts.next().unwrap();
        match head {
            "alphabet" => {
                let k: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| perr(lineno, "expected `alphabet k`".into()))?;
                alphabet = Some(Alphabet::new(k).map_err(|e| perr(lineno, e.to_string()))?);
            }
            "window" => {
                let r: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| perr(lineno, "expected `window r`".into()))?;
                if r == 0 {
                    return Err(perr(lineno, "window must be >= 1 in potential files".into()));
                }
                window = Some(r);
            }
            word_text => {
                let alphabet = alphabet
                    .ok_or_else(|| perr(lineno, "word line before `alphabet` header".into()))?;
                let w = Word::parse(word_text, alphabet).map_err(|e| perr(lineno, e.to_string()))?;
                let v: f64 = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| perr(lineno, format!("missing value for word {w}")))?;
                if !v.is_finite() {
                    return Err(perr(lineno, format!("non-finite value for word {w}")));
                }
                entries.push((w, v, lineno));
            }
        }
    }
    let alphabet = alphabet.ok_or_else(|| perr(0, "missing `alphabet` header".into()))?;
    let window = window.ok_or_else(|| perr(0, "missing `window` header".into()))?;
    let count = alphabet.word_count(window)? as usize;
    let mut values = vec![f64::NAN; count];
    for (w, v, lineno) in entries {
        if w.len() != window {
            return Err(perr(lineno, format!("word {w} has length {} != window {window}", w.len())));
        }
        let idx = w.lex_index(alphabet) as usize;
        if !values[idx].is_nan() {
            return Err(perr(lineno, format!("duplicate word {w}")));
        }
        values[idx] = v;
    }
    if let Some(missing) = values.iter().position(|v| v.is_nan()) {
        let mut digits = Vec::new();
        let mut i = missing;
        for _ in 0..window {
            digits.push((i % alphabet.size()) as u8);
            i /= alphabet.size();
        }
        digits.reverse();
        return Err(perr(0, format!("missing word {}", Word::new(digits))));
    }
    LocallyConstantPotential::new(alphabet, window, values)
}

/// Renders a potential in the file format parsed by [`parse_potential`].
pub fn format_potential(phi: &LocallyConstantPotential) -> String {
    let mut out = format!("alphabet {}\nwindow {}\n", phi.alphabet.size(), phi.window);
    let mut idx = 0usize;
    for_each_word(phi.alphabet, phi.window, |w| {
        out.push_str(&format!("{} {}\n", Word::new(w.to_vec()), phi.values[idx]));
        idx += 1;
    });
    out
}

/// A nonadditive sequence of potentials `(f_n)_{n >= 1}`.
///
/// `eval_word(w, n)` must depend only on the first `window(n)` symbols of `w`,
/// and `window(n)` is finite for every `n`; this contract is what makes every
/// extremum in the crate exactly computable.
pub trait PotentialSequence: Send + Sync {
    fn alphabet(&self) -> Alphabet;

    /// Kind tag used in reports.
    fn kind(&self) -> &'static str;

    /// Number of leading symbols that determine `f_n`; always >= 1.
    fn window(&self, n: usize) -> usize;

    /// `f_n` on any word carrying at least `window(n)` symbols.
    fn eval_word(&self, w: &[u8], n: usize) -> f64;

    /// Visits `f_n` on all words of length `window(n)` in lexicographic
    /// order. Implementations with incremental structure (Birkhoff sums,
    /// measure products, cocycle products) override this with a depth-first
    /// walk sharing work across common prefixes.
    fn visit_values(&self, n: usize, visit: &mut dyn FnMut(&[u8], f64)) {
        let w = self.window(n);
        for_each_word(self.alphabet(), w, |word| visit(word, self.eval_word(word, n)));
    }
}

/// `f_n(x)` for an eventually periodic point, exact via the cylinder prefix.
pub fn eval_point(seq: &dyn PotentialSequence, x: &Point, n: usize) -> f64 {
    assert!(n >= 1, "eval_point needs n >= 1");
    let w = x.prefix(seq.window(n));
    seq.eval_word(w.symbols(), n)
}

/// Exact `(inf, sup)` of `f_n` over the cylinder `C_w`, by enumerating all
/// `k^{window(n) - |w|}` extensions of `w`.
pub fn cylinder_extrema(
    seq: &dyn PotentialSequence,
    w: &Word,
    n: usize,
    budget: &Budget,
) -> Result<(f64, f64)> {
    let window = seq.window(n);
    if w.len() >= window {
        let v = seq.eval_word(w.symbols(), n);
        return Ok((v, v));
    }
    let ext = window - w.len();
    budget.check("cylinder_extrema", seq.alphabet().word_count(ext)?)?;
    let mut buf = w.symbols().to_vec();
    let base = buf.len();
    buf.resize(window, 0);
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for_each_word(seq.alphabet(), ext, |tail| {
        buf[base..].copy_from_slice(tail);
        let v = seq.eval_word(&buf, n);
        lo = lo.min(v);
        hi = hi.max(v);
    });
    Ok((lo, hi))
}

/// Exact `||f_n||_inf` as a maximum over all window words.
pub fn sup_norm(seq: &dyn PotentialSequence, n: usize, budget: &Budget) -> Result<f64> {
    budget.check("sup_norm", seq.alphabet().word_count(seq.window(n))?)?;
    let mut best = 0.0f64;
    seq.visit_values(n, &mut |_, v| best = best.max(v.abs()));
    if !best.is_finite() {
        return Err(Error::DegenerateMeasure(format!(
            "non-finite value in sup_norm at n = {n}"
        )));
    }
    Ok(best)
}

/// Depth-first walk over all words of length `len`, carrying a per-prefix
/// state. `extend` sees the word including the symbol just pushed.
pub(crate) fn dfs_words<S: Clone>(
    alphabet: Alphabet,
    len: usize,
    root: S,
    extend: &mut dyn FnMut(&S, &[u8]) -> S,
    leaf: &mut dyn FnMut(&[u8], &S),
) {
    fn go<S: Clone>(
        alphabet: Alphabet,
        len: usize,
        buf: &mut Vec<u8>,
        state: &S,
        extend: &mut dyn FnMut(&S, &[u8]) -> S,
        leaf: &mut dyn FnMut(&[u8], &S),
    ) {
        if buf.len() == len {
            leaf(buf, state);
            return;
        }
        for a in 0..alphabet.size() as u8 {
            buf.push(a);
            let next = extend(state, buf);
            go(alphabet, len, buf, &next, extend, leaf);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(len);
    go(alphabet, len, &mut buf, &root, extend, leaf);
}

/// The additive sequence `f_n = S_n(phi)` generated by a locally constant
/// function.
#[derive(Clone, Debug)]
pub struct BirkhoffSequence {
    base: LocallyConstantPotential,
}

impl BirkhoffSequence {
    pub fn new(base: LocallyConstantPotential) -> Self {
        BirkhoffSequence { base }
    }

    pub fn base(&self) -> &LocallyConstantPotential {
        &self.base
    }
}

impl PotentialSequence for BirkhoffSequence {
    fn alphabet(&self) -> Alphabet {
        self.base.alphabet()
    }

    fn kind(&self) -> &'static str {
        "birkhoff"
    }

    fn window(&self, n: usize) -> usize {
        (n + self.base.window()).saturating_sub(1).max(1)
    }

    fn eval_word(&self, w: &[u8], n: usize) -> f64 {
        let r = self.base.window();
        if r == 0 {
            return n as f64 * self.base.values()[0];
        }
        (0..n).map(|i| self.base.eval(&w[i..i + r])).sum()
    }

    fn visit_values(&self, n: usize, visit: &mut dyn FnMut(&[u8], f64)) {
        let r = self.base.window();
        if r == 0 {
            let v = n as f64 * self.base.values()[0];
            for_each_word(self.alphabet(), 1, |w| visit(w, v));
            return;
        }
        // Partial Birkhoff sum over the prefix, extended one symbol at a time.
        dfs_words(
            self.alphabet(),
            self.window(n),
            0.0f64,
            &mut |sum, w| {
                if w.len() >= r {
                    sum + self.base.eval(&w[w.len() - r..])
                } else {
                    *sum
                }
            },
            &mut |w, sum| visit(w, *sum),
        );
    }
}

/// `f_n = log nu(C_{x_1..x_n}) + n c` for a cylinder measure `nu`.
#[derive(Clone)]
pub struct MeasureSequence {
    weights: CylinderWeights,
    offset: f64,
}

impl MeasureSequence {
    pub fn new(weights: CylinderWeights, offset: f64) -> Self {
        MeasureSequence { weights, offset }
    }

    pub fn weights(&self) -> &CylinderWeights {
        &self.weights
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }
}

impl PotentialSequence for MeasureSequence {
    fn alphabet(&self) -> Alphabet {
        self.weights.alphabet()
    }

    fn kind(&self) -> &'static str {
        "measure"
    }

    fn window(&self, n: usize) -> usize {
        n
    }

    fn eval_word(&self, w: &[u8], n: usize) -> f64 {
        self.weights.log_weight(&w[..n]) + n as f64 * self.offset
    }

    fn visit_values(&self, n: usize, visit: &mut dyn FnMut(&[u8], f64)) {
        let drift = n as f64 * self.offset;
        self.weights
            .visit_log_weights(n, &mut |w, lw| visit(w, lw + drift));
    }
}

/// Closed-form rule for sequences that are constant in the point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExplicitRule {
    /// `f_n = sqrt(n)`; asymptotically additive but not almost additive.
    Sqrt,
    /// `f_n = c`.
    Constant(f64),
    /// `f_n = n c`.
    Linear(f64),
}

impl ExplicitRule {
    pub fn value(&self, n: usize) -> f64 {
        match *self {
            ExplicitRule::Sqrt => (n as f64).sqrt(),
            ExplicitRule::Constant(c) => c,
            ExplicitRule::Linear(c) => n as f64 * c,
        }
    }
}

/// A sequence constant in `x`, given by a closed-form rule in `n`.
#[derive(Clone, Debug)]
pub struct ExplicitSequence {
    alphabet: Alphabet,
    rule: ExplicitRule,
}

impl ExplicitSequence {
    pub fn new(alphabet: Alphabet, rule: ExplicitRule) -> Self {
        ExplicitSequence { alphabet, rule }
    }

    pub fn sqrt(alphabet: Alphabet) -> Self {
        Self::new(alphabet, ExplicitRule::Sqrt)
    }
}

impl PotentialSequence for ExplicitSequence {
    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn kind(&self) -> &'static str {
        "explicit"
    }

    fn window(&self, _n: usize) -> usize {
        1
    }

    fn eval_word(&self, _w: &[u8], n: usize) -> f64 {
        self.rule.value(n)
    }
}

/// Linear combination of sequences plus a linear-in-`n` constant drift:
/// `sum_i a_i F_i + (n -> n c)`.
#[derive(Clone)]
pub struct CombinedSequence {
    alphabet: Alphabet,
    terms: Vec<(f64, Arc<dyn PotentialSequence>)>,
    drift: f64,
}

impl CombinedSequence {
    pub fn new(
        alphabet: Alphabet,
        terms: Vec<(f64, Arc<dyn PotentialSequence>)>,
        drift: f64,
    ) -> Result<Self> {
        if let Some((_, t)) = terms.iter().find(|(_, t)| t.alphabet() != alphabet) {
            return Err(Error::Invalid(format!(
                "combined sequence term over alphabet of size {} != {}",
                t.alphabet().size(),
                alphabet.size()
            )));
        }
        Ok(CombinedSequence {
            alphabet,
            terms,
            drift,
        })
    }

    /// `a F + b G + (n -> n c)`.
    pub fn pair(
        a: f64,
        f: Arc<dyn PotentialSequence>,
        b: f64,
        g: Arc<dyn PotentialSequence>,
        drift: f64,
    ) -> Result<Self> {
        let alphabet = f.alphabet();
        CombinedSequence::new(alphabet, vec![(a, f), (b, g)], drift)
    }

    /// `F + (n -> n c)`.
    pub fn recentered(f: Arc<dyn PotentialSequence>, drift: f64) -> Self {
        let alphabet = f.alphabet();
        CombinedSequence {
            alphabet,
            terms: vec![(1.0, f)],
            drift,
        }
    }
}

impl PotentialSequence for CombinedSequence {
    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn kind(&self) -> &'static str {
        "combined"
    }

    fn window(&self, n: usize) -> usize {
        self.terms
            .iter()
            .map(|(_, t)| t.window(n))
            .max()
            .unwrap_or(1)
            .max(1)
    }

    fn eval_word(&self, w: &[u8], n: usize) -> f64 {
        let mut v = n as f64 * self.drift;
        for (a, t) in &self.terms {
            v += a * t.eval_word(w, n);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::Point;

    fn ab2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn indicator_zero() -> LocallyConstantPotential {
        // phi(w) = 1 iff w starts with 0, window 1
        LocallyConstantPotential::new(ab2(), 1, vec![1.0, 0.0]).unwrap()
    }

    #[test]
    fn eval_point_examples() {
        let zero = BirkhoffSequence::new(LocallyConstantPotential::zero(ab2()));
        let x = Point::fixed(0);
        assert_eq!(eval_point(&zero, &x, 5), 0.0);

        let counts = BirkhoffSequence::new(indicator_zero());
        let x = Point::periodic(Word::parse("01", ab2()).unwrap()).unwrap();
        assert_eq!(eval_point(&counts, &x, 4), 2.0);

        let half = CylinderWeights::bernoulli(vec![0.5, 0.5]).unwrap();
        let m = MeasureSequence::new(half, 0.0);
        assert!((eval_point(&m, &x, 3) - 3.0 * 0.5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn cylinder_extrema_examples() {
        let budget = Budget::default();
        // Measure sequences have window(n) = n: no extension needed.
        let half = CylinderWeights::bernoulli(vec![0.25, 0.75]).unwrap();
        let m = MeasureSequence::new(half, 0.0);
        let w = Word::parse("01", ab2()).unwrap();
        let (lo, hi) = cylinder_extrema(&m, &w, 2, &budget).unwrap();
        assert_eq!(lo, hi);
        assert!((lo - (0.25f64.ln() + 0.75f64.ln())).abs() < 1e-12);

        // Birkhoff with window 2: phi(ab) = [a = b].
        let eq = LocallyConstantPotential::new(ab2(), 2, vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let s = BirkhoffSequence::new(eq);
        let w = Word::parse("01", ab2()).unwrap();
        let (lo, hi) = cylinder_extrema(&s, &w, 2, &budget).unwrap();
        assert_eq!((lo, hi), (0.0, 1.0));

        // Constant base: both extrema are n*c.
        let c = BirkhoffSequence::new(LocallyConstantPotential::constant(ab2(), 0.3));
        let (lo, hi) = cylinder_extrema(&c, &w, 5, &budget).unwrap();
        assert!((lo - 1.5).abs() < 1e-12 && (hi - 1.5).abs() < 1e-12);
    }

    #[test]
    fn sup_norm_examples() {
        let budget = Budget::default();
        let sqrt = ExplicitSequence::sqrt(ab2());
        assert_eq!(sup_norm(&sqrt, 9, &budget).unwrap(), 3.0);

        let zero = BirkhoffSequence::new(LocallyConstantPotential::zero(ab2()));
        assert_eq!(sup_norm(&zero, 7, &budget).unwrap(), 0.0);

        let pm = BirkhoffSequence::new(
            LocallyConstantPotential::new(ab2(), 1, vec![1.0, -1.0]).unwrap(),
        );
        assert_eq!(sup_norm(&pm, 6, &budget).unwrap(), 6.0);
    }

    #[test]
    fn birkhoff_additivity_exhaustive() {
        // S_{m+n} phi(x) = S_n phi(x) + S_m phi(sigma^n x), exactly.
        for r in 1..=2usize {
            let phi = LocallyConstantPotential::from_fn(ab2(), r, |w| {
                w.iter().map(|&s| (s as f64) - 0.25).sum::<f64>()
            })
            .unwrap();
            let seq = BirkhoffSequence::new(phi);
            for total in 2..=12usize {
                for m in 1..total {
                    let n = total - m;
                    let win = seq.window(total).max(n + seq.window(m));
                    for_each_word(ab2(), win, |w| {
                        let lhs = seq.eval_word(w, total);
                        let rhs = seq.eval_word(w, n) + seq.eval_word(&w[n..], m);
                        assert!((lhs - rhs).abs() < 1e-12);
                    });
                }
            }
        }
    }

    #[test]
    fn visit_matches_eval() {
        let eqv = LocallyConstantPotential::new(ab2(), 2, vec![0.5, -0.25, 1.0, 0.125]).unwrap();
        let seq = BirkhoffSequence::new(eqv);
        for n in 1..=6usize {
            let mut seen = Vec::new();
            seq.visit_values(n, &mut |w, v| seen.push((Word::new(w.to_vec()), v)));
            assert_eq!(seen.len(), 1usize << seq.window(n));
            for (w, v) in seen {
                assert!((seq.eval_word(w.symbols(), n) - v).abs() < 1e-12, "{w} {n}");
            }
        }
    }

    #[test]
    fn combined_self_cancellation() {
        let phi = LocallyConstantPotential::new(ab2(), 1, vec![0.7, -0.1]).unwrap();
        let f: Arc<dyn PotentialSequence> = Arc::new(BirkhoffSequence::new(phi));
        let diff = CombinedSequence::pair(1.0, f.clone(), -1.0, f, 0.0).unwrap();
        let budget = Budget::default();
        for n in 1..=8 {
            assert_eq!(sup_norm(&diff, n, &budget).unwrap(), 0.0);
        }
    }

    #[test]
    fn potential_file_roundtrip() {
        let phi = LocallyConstantPotential::new(ab2(), 2, vec![0.25, -1.0, 0.5, 0.0]).unwrap();
        let text = format_potential(&phi);
        let back = parse_potential(&text, "test.pot").unwrap();
        assert_eq!(back, phi);
    }

    #[test]
    fn potential_file_errors() {
        let missing = "alphabet 2\nwindow 1\n0 1.0\n";
        assert!(matches!(
            parse_potential(missing, "m.pot"),
            Err(Error::Parse { .. })
        ));
        let dup = "alphabet 2\nwindow 1\n0 1.0\n0 2.0\n1 0.0\n";
        assert!(matches!(parse_potential(dup, "d.pot"), Err(Error::Parse { .. })));
        let badword = "alphabet 2\nwindow 1\n2 1.0\n1 0.0\n";
        assert!(parse_potential(badword, "b.pot").is_err());
    }

    #[test]
    fn window_zero_constant_base() {
        let c = BirkhoffSequence::new(LocallyConstantPotential::constant(ab2(), -0.5));
        assert_eq!(c.window(1), 1);
        let x = Point::fixed(1);
        assert_eq!(eval_point(&c, &x, 4), -2.0);
    }
}
