//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are identified by a rank: rank 0 is the largest variable in
//! the term order, higher ranks are smaller. Monomials compare
//! lexicographically by rank, so the ordinary derive-free lex walk below is
//! the whole term order once ranks are assigned.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Product of variables with positive exponents, sorted by ascending rank.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    /// Monomial from an unsorted list of ranks; repeats accumulate.
    pub fn from_ranks(ranks: &[u32]) -> Self {
        let mut sorted = ranks.to_vec();
        sorted.sort_unstable();
        let mut exps: Vec<(u32, u32)> = Vec::new();
        for r in sorted {
            match exps.last_mut() {
                Some((rank, e)) if *rank == r => *e += 1,
                _ => exps.push((r, 1)),
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    /// (rank, exponent) pairs, ascending rank.
    pub fn exps(&self) -> &[(u32, u32)] {
        &self.exps
    }

    /// Ranks of the variables appearing, ascending.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&(r, _)| r)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ra, ea)), Some(&&(rb, eb))) => match ra.cmp(&rb) {
                    Ordering::Less => {
                        exps.push((ra, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        exps.push((rb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        exps.push((ra, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&x), None) => {
                    exps.push(x);
                    a.next();
                }
                (None, Some(&&x)) => {
                    exps.push(x);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut a = self.exps.iter().peekable();
        for &(rb, eb) in &other.exps {
            loop {
                let &&(ra, ea) = a.peek()?;
                if ra < rb {
                    exps.push((ra, ea));
                    a.next();
                } else if ra == rb {
                    if ea < eb {
                        return None;
                    }
                    if ea > eb {
                        exps.push((ra, ea - eb));
                    }
                    a.next();
                    break;
                } else {
                    return None;
                }
            }
        }
        exps.extend(a);
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ra, ea)), Some(&&(rb, eb))) => match ra.cmp(&rb) {
                    Ordering::Less => {
                        exps.push((ra, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        exps.push((rb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        exps.push((ra, ea.max(eb)));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&x), None) => {
                    exps.push(x);
                    a.next();
                }
                (None, Some(&&x)) => {
                    exps.push(x);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps }
    }

    /// True when the supports are disjoint.
    pub fn coprime(&self, other: &Monomial) -> bool {
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        while let (Some(&&(ra, _)), Some(&&(rb, _))) = (a.peek(), b.peek()) {
            match ra.cmp(&rb) {
                Ordering::Less => {
                    a.next();
                }
                Ordering::Greater => {
                    b.next();
                }
                Ordering::Equal => return false,
            }
        }
        true
    }
}

impl Ord for Monomial {
    /// Lex order with rank 0 as the largest variable: the monomial using a
    /// smaller rank earlier, or a higher power of the shared rank, is larger.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.exps.iter(), other.exps.iter());
        loop {
            match (a.next(), b.next()) {
                (Some(&(ra, ea)), Some(&(rb, eb))) => {
                    if ra != rb {
                        // The smaller rank is the larger variable; whoever
                        // holds it wins.
                        return rb.cmp(&ra);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial as a list of (monomial, nonzero coefficient) pairs in strictly
/// descending monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds from arbitrary terms: sorts, combines equal monomials, drops
    /// zero coefficients.
    pub fn from_terms(terms: Vec<(Monomial, Coeff)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
            if let Some((_, lc)) = out.last() {
                if lc.is_zero() {
                    out.pop();
                }
            }
        }
        Polynomial { terms: out }
    }

    /// Caller guarantees strictly descending monomials and nonzero
    /// coefficients.
    pub(crate) fn from_sorted_terms_unchecked(terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    /// Leading term, or None for the zero polynomial.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Terms past the leading one.
    pub(crate) fn tail(&self) -> &[(Monomial, Coeff)] {
        &self.terms[1.min(self.terms.len())..]
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&(ma, _)), Some(&(mb, _))) => match ma.cmp(mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap().clone()),
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca + cb;
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        Polynomial { terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Multiplies by a single term. Lex order is multiplication-invariant,
    /// so the term sequence stays sorted.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is positive (a convention, not a
    /// normalization to 1: generators here always have unit coefficients).
    pub fn normalized_sign(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(x: i64) -> Coeff {
        Coeff::from_integer(BigInt::from(x))
    }

    fn m(ranks: &[u32]) -> Monomial {
        Monomial::from_ranks(ranks)
    }

    #[test]
    fn monomial_order_examples() {
        // Rank 0 beats anything without it.
        assert!(m(&[0]) > m(&[1, 2, 3]));
        // Shared prefix, then higher power wins.
        assert!(m(&[1, 1]) > m(&[1, 2]));
        // Prefix of the other: the longer one is larger.
        assert!(m(&[1, 2]) > m(&[1]));
        assert!(m(&[]) < m(&[7]));
        assert_eq!(m(&[2, 1]), m(&[1, 2]));
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = m(&[0, 2, 2, 5]);
        let b = m(&[2, 3]);
        let p = a.mul(&b);
        assert_eq!(p, m(&[0, 2, 2, 2, 3, 5]));
        assert_eq!(p.try_div(&b), Some(a.clone()));
        assert_eq!(p.try_div(&a), Some(b.clone()));
        assert_eq!(a.try_div(&b), None);
        assert_eq!(m(&[1]).try_div(&m(&[1, 1])), None);
    }

    #[test]
    fn lcm_and_coprime() {
        let a = m(&[0, 1, 1]);
        let b = m(&[1, 2]);
        assert_eq!(a.lcm(&b), m(&[0, 1, 1, 2]));
        assert!(!a.coprime(&b));
        assert!(m(&[0, 3]).coprime(&m(&[1, 2])));
        assert!(Monomial::one().coprime(&a));
    }

    #[test]
    fn squarefree() {
        assert!(m(&[0, 1, 2]).is_squarefree());
        assert!(!m(&[1, 1]).is_squarefree());
        assert!(Monomial::one().is_squarefree());
    }

    #[test]
    fn polynomial_basics() {
        let p = Polynomial::from_terms(vec![
            (m(&[1]), q(2)),
            (m(&[0]), q(1)),
            (m(&[1]), q(-2)),
            (m(&[2]), q(5)),
        ]);
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.leading(), Some((&m(&[0]), &q(1))));
        assert!(p.sub(&p).is_zero());

        let x = Polynomial::from_terms(vec![(m(&[0]), q(1)), (m(&[1]), q(-1))]);
        let y = Polynomial::from_terms(vec![(m(&[0]), q(1)), (m(&[1]), q(1))]);
        // (x0 - x1)(x0 + x1) = x0^2 - x1^2, via term-by-term products.
        let prod = x.mul_term(&m(&[0]), &q(1)).add(&x.mul_term(&m(&[1]), &q(1)));
        assert_eq!(
            prod,
            Polynomial::from_terms(vec![(m(&[0, 0]), q(1)), (m(&[1, 1]), q(-1))])
        );
        assert_eq!(prod, y.mul_term(&m(&[0]), &q(1)).sub(&y.mul_term(&m(&[1]), &q(1))).neg().neg());
    }

    #[test]
    fn sign_normalization() {
        let p = Polynomial::from_terms(vec![(m(&[0]), q(-3)), (m(&[1]), q(2))]);
        let s = p.normalized_sign();
        assert_eq!(s.leading(), Some((&m(&[0]), &q(3))));
        assert_eq!(s.normalized_sign(), s);
        assert!(Polynomial::zero().normalized_sign().is_zero());
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, 0..5).prop_map(|r| Monomial::from_ranks(&r))
    }

    proptest! {
        #[test]
        fn order_total_and_multiplicative(a in arb_monomial(), b in arb_monomial(), c in arb_monomial()) {
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            // Multiplying both sides by c preserves the comparison.
            prop_assert_eq!(a.mul(&c).cmp(&b.mul(&c)), a.cmp(&b));
            // One divides everything it multiplies into.
            prop_assert_eq!(a.mul(&b).try_div(&b), Some(a));
        }

        #[test]
        fn lcm_is_divisible_by_both(a in arb_monomial(), b in arb_monomial()) {
            let l = a.lcm(&b);
            prop_assert!(l.try_div(&a).is_some());
            prop_assert!(l.try_div(&b).is_some());
            prop_assert_eq!(a.coprime(&b), l == a.mul(&b));
        }
    }
}
