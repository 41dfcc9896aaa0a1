//! Rational functions whose denominator is a product of `(1 - z^k)` factors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{IntPolynomial, TruncatedSeries};

/// `numerator / prod_k (1 - z^k)` with `k` ranging over a sorted multiset of
/// positive exponents.
///
/// The factored form is not unique, so equality compares the two functions by
/// cross-multiplication rather than structurally.
#[derive(Clone, Debug)]
pub struct FactoredRational {
    numerator: IntPolynomial,
    denominator: Vec<usize>,
}

impl FactoredRational {
    /// Panics if any denominator exponent is zero.
    pub fn new(numerator: IntPolynomial, mut denominator: Vec<usize>) -> Self {
        assert!(
            denominator.iter().all(|&k| k >= 1),
            "denominator factors are (1 - z^k) with k >= 1"
        );
        denominator.sort_unstable();
        FactoredRational { numerator, denominator }
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        Self::new(p, Vec::new())
    }

    pub fn zero() -> Self {
        Self::from_polynomial(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(IntPolynomial::one())
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    /// Sorted exponents `k`, one per factor `(1 - z^k)`.
    pub fn denominator(&self) -> &[usize] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The expanded product `prod (1 - z^k)`.
    pub fn denominator_polynomial(&self) -> IntPolynomial {
        den_poly(&self.denominator)
    }

    /// No denominator factor divides the numerator.
    pub fn is_normalized(&self) -> bool {
        let mut distinct = self.denominator.clone();
        distinct.dedup();
        distinct.iter().all(|&k| self.numerator.div_one_minus_z_pow(k).is_err())
    }

    pub fn neg(&self) -> Self {
        FactoredRational {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    /// Sum over the least common denominator (exponent multiplicities are
    /// maxed). The result is not normalized.
    pub fn add(&self, other: &Self) -> Self {
        let lcd = lcm_multiset(&[&self.denominator, &other.denominator]);
        let lhs = &self.numerator * &den_poly(&multiset_difference(&lcd, &self.denominator));
        let rhs = &other.numerator * &den_poly(&multiset_difference(&lcd, &other.denominator));
        FactoredRational::new(&lhs + &rhs, lcd)
    }

    /// Sum of many terms over one common denominator built up front.
    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a FactoredRational>) -> Self {
        let terms: Vec<&FactoredRational> = terms.into_iter().collect();
        let dens: Vec<&[usize]> = terms.iter().map(|t| t.denominator.as_slice()).collect();
        let lcd = lcm_multiset(&dens);
        let mut numerator = IntPolynomial::zero();
        for t in terms {
            let cofactor = den_poly(&multiset_difference(&lcd, &t.denominator));
            numerator = &numerator + &(&t.numerator * &cofactor);
        }
        FactoredRational::new(numerator, lcd)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denominator = self.denominator.clone();
        denominator.extend_from_slice(&other.denominator);
        FactoredRational::new(&self.numerator * &other.numerator, denominator)
    }

    /// Cancels denominator factors against the numerator.
    ///
    /// Any `(1 - z^k)` that divides the numerator is removed. When nothing
    /// more cancels, a factor `(1 - z^{2k})` is split into `(1 - z^k)` if
    /// `(1 + z^k)` divides the numerator and the quotient has no more negative
    /// coefficients than before. Finally, while the numerator has negative
    /// coefficients, a factor `(1 - z^k)` may be lifted to `(1 - z^{2k})` by
    /// multiplying the numerator by `(1 + z^k)`, if that strictly lowers the
    /// count of negative coefficients and leaves nothing to cancel. The result
    /// denotes the same function but is not guaranteed to be a unique
    /// canonical form.
    pub fn normalize(&self) -> Self {
        if self.numerator.is_zero() {
            return Self::zero();
        }
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        loop {
            let mut changed = false;
            let mut distinct = den.clone();
            distinct.dedup();
            for &k in distinct.iter().rev() {
                while let Some(pos) = den.iter().position(|&x| x == k) {
                    match num.div_one_minus_z_pow(k) {
                        Ok(q) => {
                            num = q;
                            den.remove(pos);
                            changed = true;
                        }
                        Err(_) => break,
                    }
                }
            }
            if changed {
                continue;
            }
            let mut distinct = den.clone();
            distinct.dedup();
            for &k2 in distinct.iter().rev().filter(|&&k| k % 2 == 0) {
                let half = k2 / 2;
                let Ok(q) = num.exact_div(&one_plus_z_pow(half)) else {
                    continue;
                };
                if q.negative_count() <= num.negative_count() {
                    num = q;
                    let pos = den.iter().position(|&x| x == k2).expect("factor present");
                    den[pos] = half;
                    den.sort_unstable();
                    changed = true;
                    break;
                }
            }
            if !changed {
                break;
            }
        }
        // terminates: the negative count strictly decreases
        'lift: while num.negative_count() > 0 {
            let mut distinct = den.clone();
            distinct.dedup();
            for &k in &distinct {
                let lifted = &num * &one_plus_z_pow(k);
                if lifted.negative_count() >= num.negative_count() {
                    continue;
                }
                let mut lifted_den = den.clone();
                let pos = lifted_den.iter().position(|&x| x == k).expect("factor present");
                lifted_den[pos] = 2 * k;
                let candidate = FactoredRational::new(lifted, lifted_den);
                if candidate.is_normalized() {
                    num = candidate.numerator;
                    den = candidate.denominator;
                    continue 'lift;
                }
            }
            break;
        }
        FactoredRational::new(num, den)
    }

    /// Same rational function: `a.num * den(b) == b.num * den(a)`.
    pub fn equals(&self, other: &Self) -> bool {
        let lcd = lcm_multiset(&[&self.denominator, &other.denominator]);
        let lhs = &self.numerator * &den_poly(&multiset_difference(&lcd, &self.denominator));
        let rhs = &other.numerator * &den_poly(&multiset_difference(&lcd, &other.denominator));
        lhs == rhs
    }

    /// Exact power-series coefficients through `z^order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::from_polynomial(&self.numerator, order);
        for &k in &self.denominator {
            s.mul_geometric(k);
        }
        s
    }

    /// e.g. `(1+z^3)/((1-z)*(1-z^2)*(1-z^4))`
    pub fn to_plain(&self) -> String {
        let num = self.numerator.to_plain();
        if self.denominator.is_empty() {
            return num;
        }
        let bare = self.numerator.term_count() <= 1 && !self.numerator.leading_coeff().is_some_and(Signed::is_negative);
        let num = if bare { num } else { format!("({num})") };
        let factors: Vec<String> = grouped(&self.denominator)
            .map(|(k, m)| {
                let base = if k == 1 {
                    "(1-z)".to_string()
                } else {
                    format!("(1-z^{k})")
                };
                if m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect();
        if factors.len() == 1 {
            format!("{num}/{}", factors[0])
        } else {
            format!("{num}/({})", factors.join("*"))
        }
    }

    /// e.g. `\frac{1 + z^{3}}{(1 - z)(1 - z^{2})(1 - z^{4})}`
    pub fn to_latex(&self) -> String {
        let num = self.numerator.to_latex();
        if self.denominator.is_empty() {
            return num;
        }
        let den: String = grouped(&self.denominator)
            .map(|(k, m)| {
                let base = if k == 1 {
                    "(1 - z)".to_string()
                } else {
                    format!("(1 - z^{{{k}}})")
                };
                if m == 1 {
                    base
                } else {
                    format!("{base}^{{{m}}}")
                }
            })
            .collect();
        format!("\\frac{{{num}}}{{{den}}}")
    }

    /// `{"d":..,"numerator":[..],"denominator_exponents":[..]}`
    pub fn to_json(&self, d: u32) -> String {
        let record = SeriesJson {
            d,
            numerator: self.numerator.coeffs().iter().map(big_to_number).collect(),
            denominator_exponents: self.denominator.clone(),
        };
        serde_json::to_string(&record).expect("series record serializes")
    }

    /// Inverse of [`FactoredRational::to_json`]; returns the form degree too.
    pub fn from_json(text: &str) -> Result<(u32, Self)> {
        let record: SeriesJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        if record.denominator_exponents.contains(&0) {
            return Err(Error::Json("denominator exponent 0".into()));
        }
        let coeffs = record.numerator.iter().map(number_to_big).collect::<Result<Vec<_>>>()?;
        Ok((
            record.d,
            FactoredRational::new(IntPolynomial::new(coeffs), record.denominator_exponents),
        ))
    }
}

impl PartialEq for FactoredRational {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for FactoredRational {}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

impl From<IntPolynomial> for FactoredRational {
    fn from(p: IntPolynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl FromStr for FactoredRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_rational(s)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesJson {
    d: u32,
    numerator: Vec<serde_json::Number>,
    denominator_exponents: Vec<usize>,
}

pub(crate) fn big_to_number(c: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&c.to_string()).expect("integer is a JSON number")
}

pub(crate) fn number_to_big(n: &serde_json::Number) -> Result<BigInt> {
    BigInt::from_str(&n.to_string()).map_err(|_| Error::Json(format!("not an integer: {n}")))
}

/// `prod (1 - z^k)` over the multiset.
pub fn den_poly(exponents: &[usize]) -> IntPolynomial {
    exponents.iter().fold(IntPolynomial::one(), |acc, &k| {
        &acc * &IntPolynomial::one_minus_z_pow(k)
    })
}

fn one_plus_z_pow(k: usize) -> IntPolynomial {
    let mut c = vec![BigInt::zero(); k + 1];
    c[0] += 1;
    c[k] += 1;
    IntPolynomial::new(c)
}

fn counts(ms: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &k in ms {
        *m.entry(k).or_insert(0) += 1;
    }
    m
}

/// Multiset union taking the maximum multiplicity of each exponent.
pub fn lcm_multiset(sets: &[&[usize]]) -> Vec<usize> {
    let mut best: BTreeMap<usize, usize> = BTreeMap::new();
    for s in sets {
        for (k, m) in counts(s) {
            let e = best.entry(k).or_insert(0);
            *e = (*e).max(m);
        }
    }
    best.into_iter().flat_map(|(k, m)| std::iter::repeat_n(k, m)).collect()
}

/// `a - b` as multisets; `b` must be contained in `a`.
fn multiset_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut left = counts(a);
    for k in b {
        let e = left.get_mut(k).expect("sub-multiset");
        *e -= 1;
    }
    left.into_iter().flat_map(|(k, m)| std::iter::repeat_n(k, m)).collect()
}

fn grouped(sorted: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    sorted.chunk_by(|a, b| a == b).map(|chunk| (chunk[0], chunk.len()))
}

mod parse {
    //! Recursive descent over `expr ['/' product]`.
    //!
    //! Coefficients may be juxtaposed (`3z^12`) or joined with `*`; factors in
    //! a denominator may be juxtaposed as well (`(1-z)(1-z^2)`).

    use super::*;

    const MAX_EXPONENT: usize = 1 << 20;

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    enum Tok {
        Int(usize),
        Z,
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        LParen,
        RParen,
    }

    #[derive(Debug)]
    enum Node {
        Const(BigInt),
        Var,
        Sum(Vec<(bool, Node)>),
        Product(Vec<Node>),
        Power(Box<Node>, usize),
    }

    struct Parser<'a> {
        src: &'a str,
        toks: Vec<(usize, Tok, BigInt)>,
        pos: usize,
    }

    fn lex(src: &str) -> Result<Vec<(usize, Tok, BigInt)>> {
        let mut out = Vec::new();
        let mut chars = src.char_indices().peekable();
        while let Some(&(i, c)) = chars.peek() {
            let tok = match c {
                c if c.is_whitespace() => {
                    chars.next();
                    continue;
                }
                '0'..='9' => {
                    let mut end = i;
                    while let Some(&(j, d)) = chars.peek() {
                        if !d.is_ascii_digit() {
                            break;
                        }
                        end = j + 1;
                        chars.next();
                    }
                    let value = BigInt::from_str(&src[i..end]).expect("digits");
                    let small = usize::try_from(&value).unwrap_or(usize::MAX);
                    out.push((i, Tok::Int(small), value));
                    continue;
                }
                'z' => Tok::Z,
                '+' => Tok::Plus,
                '-' | '\u{2212}' => Tok::Minus,
                '*' | '\u{00b7}' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => return Err(Error::parse(i, format!("unexpected character {other:?}"))),
            };
            out.push((i, tok, BigInt::zero()));
            chars.next();
        }
        Ok(out)
    }

    impl<'a> Parser<'a> {
        fn peek(&self) -> Option<Tok> {
            self.toks.get(self.pos).map(|t| t.1)
        }

        fn here(&self) -> usize {
            self.toks.get(self.pos).map_or(self.src.len(), |t| t.0)
        }

        fn bump(&mut self) -> Option<(usize, Tok, BigInt)> {
            let t = self.toks.get(self.pos).cloned();
            self.pos += 1;
            t
        }

        fn expect(&mut self, want: Tok) -> Result<()> {
            match self.bump() {
                Some((_, t, _)) if t == want => Ok(()),
                Some((p, t, _)) => Err(Error::parse(p, format!("expected {want:?}, found {t:?}"))),
                None => Err(Error::parse(self.src.len(), format!("expected {want:?}, found end"))),
            }
        }

        fn expr(&mut self) -> Result<Node> {
            let mut terms = Vec::new();
            let mut neg = match self.peek() {
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                Some(Tok::Plus) => {
                    self.bump();
                    false
                }
                _ => false,
            };
            loop {
                terms.push((neg, self.product()?));
                neg = match self.peek() {
                    Some(Tok::Plus) => false,
                    Some(Tok::Minus) => true,
                    _ => break,
                };
                self.bump();
            }
            Ok(if terms.len() == 1 && !terms[0].0 {
                terms.pop().expect("one term").1
            } else {
                Node::Sum(terms)
            })
        }

        fn product(&mut self) -> Result<Node> {
            let mut factors = vec![self.power()?];
            loop {
                match self.peek() {
                    Some(Tok::Star) => {
                        self.bump();
                    }
                    Some(Tok::Int(_) | Tok::Z | Tok::LParen) => {}
                    _ => break,
                }
                factors.push(self.power()?);
            }
            Ok(if factors.len() == 1 {
                factors.pop().expect("one factor")
            } else {
                Node::Product(factors)
            })
        }

        fn power(&mut self) -> Result<Node> {
            let base = self.atom()?;
            if self.peek() != Some(Tok::Caret) {
                return Ok(base);
            }
            self.bump();
            match self.bump() {
                Some((p, Tok::Int(e), _)) => {
                    if e > MAX_EXPONENT {
                        return Err(Error::parse(p, "exponent too large"));
                    }
                    Ok(Node::Power(Box::new(base), e))
                }
                Some((p, _, _)) => Err(Error::parse(p, "expected a nonnegative exponent")),
                None => Err(Error::parse(self.src.len(), "expected an exponent")),
            }
        }

        fn atom(&mut self) -> Result<Node> {
            match self.bump() {
                Some((_, Tok::Int(_), value)) => Ok(Node::Const(value)),
                Some((_, Tok::Z, _)) => Ok(Node::Var),
                Some((_, Tok::LParen, _)) => {
                    let inner = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(inner)
                }
                Some((p, t, _)) => Err(Error::parse(p, format!("unexpected {t:?}"))),
                None => Err(Error::parse(self.src.len(), "unexpected end of input")),
            }
        }
    }

    fn eval(node: &Node) -> IntPolynomial {
        match node {
            Node::Const(c) => IntPolynomial::constant(c.clone()),
            Node::Var => IntPolynomial::monomial(BigInt::one(), 1),
            Node::Sum(terms) => terms.iter().fold(IntPolynomial::zero(), |acc, (neg, t)| {
                let v = eval(t);
                if *neg {
                    &acc - &v
                } else {
                    &acc + &v
                }
            }),
            Node::Product(fs) => fs.iter().fold(IntPolynomial::one(), |acc, f| &acc * &eval(f)),
            Node::Power(b, e) => {
                let base = eval(b);
                (0..*e).fold(IntPolynomial::one(), |acc, _| &acc * &base)
            }
        }
    }

    /// Splits a denominator into `(1 - z^k)` factors, tracking the overall sign.
    fn denominator(node: &Node, negative: &mut bool, out: &mut Vec<usize>) -> std::result::Result<(), String> {
        match node {
            Node::Product(fs) => fs.iter().try_for_each(|f| denominator(f, negative, out)),
            Node::Power(b, e) => (0..*e).try_for_each(|_| denominator(b, negative, out)),
            Node::Sum(terms) if terms.len() == 1 => {
                *negative ^= terms[0].0;
                denominator(&terms[0].1, negative, out)
            }
            other => {
                let p = eval(other);
                let c = p.coeffs();
                if p.term_count() == 1 && c.len() == 1 && c[0].abs().is_one() {
                    *negative ^= c[0].is_negative();
                    return Ok(());
                }
                let k = c.len().saturating_sub(1);
                if p.term_count() == 2 && k >= 1 && c[0].abs().is_one() && c[k] == -&c[0] {
                    *negative ^= c[0].is_negative();
                    out.push(k);
                    return Ok(());
                }
                Err(format!("denominator factor {p} is not of the form 1-z^k or z^k-1"))
            }
        }
    }

    pub(super) fn parse_rational(src: &str) -> Result<FactoredRational> {
        let mut p = Parser {
            src,
            toks: lex(src)?,
            pos: 0,
        };
        if p.toks.is_empty() {
            return Err(Error::parse(0, "empty expression"));
        }
        let num = p.expr()?;
        let mut negative = false;
        let mut den = Vec::new();
        if p.peek() == Some(Tok::Slash) {
            p.bump();
            let at = p.here();
            let d = p.product()?;
            denominator(&d, &mut negative, &mut den).map_err(|m| Error::parse(at, m))?;
        }
        if p.pos < p.toks.len() {
            return Err(Error::parse(p.here(), "trailing input"));
        }
        let mut numerator = eval(&num);
        if negative {
            numerator = -numerator;
        }
        Ok(FactoredRational::new(numerator, den))
    }
}
