//! Exact binomial arithmetic and the seven counting identities.
//!
//! Everything is computed in arbitrary precision. The two identities whose
//! stated right-hand side carries a denominator of 2 are compared after
//! doubling both sides, then reported halved (the halves are exact because
//! `C(2n, n)` is even for n >= 1).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// `C(n, k)` with the zero convention for `k < 0` or `k > n`.
pub fn binom(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigCount::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Row n of Pascal's triangle.
fn binomial_row(n: u64) -> Vec<BigCount> {
    let mut row = Vec::with_capacity(n as usize + 1);
    row.push(BigCount::one());
    for k in 0..n {
        let next = &row[k as usize] * BigUint::from(n - k) / BigUint::from(k + 1);
        row.push(next);
    }
    row
}

fn row_at(row: &[BigCount], k: i64) -> BigCount {
    if k < 0 || k as usize >= row.len() {
        BigCount::zero()
    } else {
        row[k as usize].clone()
    }
}

/// Off-diagonal distance minus one: `i - j - 1` for `i >= j`, else
/// `j - i - 1`. Can be -1 (on the diagonal), where `C(n, -1) = 0` kicks in.
pub fn h(i: u64, j: u64) -> i64 {
    (i.abs_diff(j) as i64) - 1
}

/// The seven verified identities.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// sum_i C(n,i) = 2^n
    Easy1,
    /// sum_i C(n,i)^2 = C(2n,n)
    Easy2,
    /// even-index sum = odd-index sum = 2^(n-1)
    Easy3,
    /// sum_{i,j} C(n,2i) C(n,2j) = 2^(2n-2)
    BinomTail,
    /// sum_{i,j} [C(n,i+j)^2 + C(n,h(i,j))^2] = (n+2)/2 C(2n,n) or n/2 C(2n,n)
    Kwadraty,
    /// sum_{i,j} C(n,i+j) C(n,h(i,j)) = 2^(2n-2), minus C(2n,n)/2 for odd n
    Mieszane,
    /// sum_{i,j} [(C(n,i+j)-C(n,i-j-1)-C(n,j-i-1))^2 - C(n,2i)C(n,2j)]
    ///   = (n+2)/2 C(2n,n) - 3*2^(2n-2)
    BinomialEq,
}

impl IdentityId {
    pub const ALL: [IdentityId; 7] = [
        IdentityId::Easy1,
        IdentityId::Easy2,
        IdentityId::Easy3,
        IdentityId::BinomTail,
        IdentityId::Kwadraty,
        IdentityId::Mieszane,
        IdentityId::BinomialEq,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::Easy1 => "easy1",
            IdentityId::Easy2 => "easy2",
            IdentityId::Easy3 => "easy3",
            IdentityId::BinomTail => "binom-tail",
            IdentityId::Kwadraty => "kwadraty",
            IdentityId::Mieszane => "mieszane",
            IdentityId::BinomialEq => "binomial-eq",
        }
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact evaluation of one identity at one n.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub n: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub equal: bool,
}

/// Evaluates both sides of `id` at `n >= 1` exactly.
///
/// For Easy3 the reported sides are the even-index sum and `2^(n-1)`;
/// `equal` additionally demands the odd-index sum match.
pub fn verify_identity(id: IdentityId, n: u64) -> IdentityCheck {
    assert!(n >= 1, "identities are stated for n >= 1");
    let row = binomial_row(n);
    let m = (n / 2) as usize;
    let two = BigUint::from(2u32);
    let pow2 = |e: u64| -> BigUint { BigUint::one() << e };

    let (lhs, rhs, equal) = match id {
        IdentityId::Easy1 => {
            let lhs: BigUint = row.iter().sum();
            let rhs = pow2(n);
            let eq = lhs == rhs;
            (lhs, rhs, eq)
        }
        IdentityId::Easy2 => {
            let lhs: BigUint = row.iter().map(|c| c * c).sum();
            let rhs = binom(2 * n, n as i64);
            let eq = lhs == rhs;
            (lhs, rhs, eq)
        }
        IdentityId::Easy3 => {
            let even: BigUint = row.iter().step_by(2).sum();
            let odd: BigUint = row.iter().skip(1).step_by(2).sum();
            let rhs = pow2(n - 1);
            let eq = even == rhs && odd == rhs;
            (even, rhs, eq)
        }
        IdentityId::BinomTail => {
            let tail: BigUint = (0..=m).map(|i| row_at(&row, 2 * i as i64)).sum();
            let lhs = &tail * &tail;
            let rhs = pow2(2 * n - 2);
            let eq = lhs == rhs;
            (lhs, rhs, eq)
        }
        IdentityId::Kwadraty => {
            let mut lhs = BigUint::zero();
            for i in 0..=m as u64 {
                for j in 0..=m as u64 {
                    let a = row_at(&row, (i + j) as i64);
                    let b = row_at(&row, h(i, j));
                    lhs += &a * &a + &b * &b;
                }
            }
            let factor = if n.is_multiple_of(2) { n + 2 } else { n };
            let rhs_doubled = BigUint::from(factor) * binom(2 * n, n as i64);
            let eq = &lhs * &two == rhs_doubled;
            (lhs, exact_half(rhs_doubled), eq)
        }
        IdentityId::Mieszane => {
            let mut lhs = BigUint::zero();
            for i in 0..=m as u64 {
                for j in 0..=m as u64 {
                    lhs += row_at(&row, (i + j) as i64) * row_at(&row, h(i, j));
                }
            }
            let rhs_doubled = if n.is_multiple_of(2) {
                pow2(2 * n - 1)
            } else {
                pow2(2 * n - 1) - binom(2 * n, n as i64)
            };
            let eq = &lhs * &two == rhs_doubled;
            (lhs, exact_half(rhs_doubled), eq)
        }
        IdentityId::BinomialEq => {
            let mut lhs = BigInt::zero();
            for i in 0..=m as i64 {
                for j in 0..=m as i64 {
                    let e = BigInt::from(row_at(&row, i + j))
                        - BigInt::from(row_at(&row, i - j - 1))
                        - BigInt::from(row_at(&row, j - i - 1));
                    lhs += &e * &e
                        - BigInt::from(row_at(&row, 2 * i) * row_at(&row, 2 * j));
                }
            }
            let rhs_doubled = BigInt::from(n + 2) * BigInt::from(binom(2 * n, n as i64))
                - BigInt::from(3) * BigInt::from(pow2(2 * n - 1));
            let eq = &lhs * BigInt::from(2) == rhs_doubled;
            let rhs = exact_half_int(rhs_doubled);
            return IdentityCheck {
                id,
                n,
                lhs,
                rhs,
                equal: eq,
            };
        }
    };
    IdentityCheck {
        id,
        n,
        lhs: BigInt::from(lhs),
        rhs: BigInt::from(rhs),
        equal,
    }
}

fn exact_half(x: BigUint) -> BigUint {
    assert!((&x % 2u32).is_zero(), "right-hand side is not an even integer");
    x >> 1
}

fn exact_half_int(x: BigInt) -> BigInt {
    assert!(
        (&x % BigInt::from(2)).is_zero(),
        "right-hand side is not an even integer"
    );
    x >> 1
}

/// Closed-form count of maximal forbidden-triple-free secant sets:
/// `(n+2)/4 C(2n,n) - 3*2^(2n-3)` for n >= 3.
///
/// Panics if the expression fails to be a nonnegative integer, which would
/// indicate an implementation bug rather than a usable value.
pub fn msaft_count_closed(n: u64) -> BigCount {
    assert!(n >= 3, "the count is stated for n >= 3");
    let quadrupled = BigInt::from(n + 2) * BigInt::from(binom(2 * n, n as i64))
        - BigInt::from(3) * (BigInt::one() << (2 * n - 1));
    assert!(
        quadrupled >= BigInt::zero(),
        "closed-form count came out negative"
    );
    assert!(
        (&quadrupled % BigInt::from(4)).is_zero(),
        "closed-form count is not an integer"
    );
    BigCount::try_from(quadrupled >> 2).expect("nonnegative by assertion")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_edges() {
        assert_eq!(binom(5, -1), BigUint::zero());
        assert_eq!(binom(5, 6), BigUint::zero());
        assert_eq!(binom(5, 0), BigUint::one());
        assert_eq!(binom(10, 5), BigUint::from(252u32));
        assert_eq!(binom(0, 0), BigUint::one());
    }

    #[test]
    fn h_examples() {
        assert_eq!(h(2, 2), -1);
        assert_eq!(h(5, 2), 2);
        assert_eq!(h(2, 5), 2);
        assert_eq!(h(0, 0), -1);
    }

    #[test]
    fn identity_examples() {
        let c = verify_identity(IdentityId::Easy2, 4);
        assert_eq!(c.lhs, BigInt::from(70));
        assert_eq!(c.rhs, BigInt::from(70));
        assert!(c.equal);

        let c = verify_identity(IdentityId::BinomTail, 5);
        assert_eq!(c.lhs, BigInt::from(256));
        assert!(c.equal);

        let c = verify_identity(IdentityId::BinomialEq, 4);
        assert_eq!(c.lhs, BigInt::from(18));
        assert_eq!(c.rhs, BigInt::from(18));
        assert!(c.equal);

        let c = verify_identity(IdentityId::Kwadraty, 4);
        assert_eq!(c.lhs, BigInt::from(210));
        assert!(c.equal);

        let c = verify_identity(IdentityId::Mieszane, 5);
        assert_eq!(c.lhs, BigInt::from(130));
        assert!(c.equal);
    }

    #[test]
    fn all_identities_small_range() {
        for n in 1..=40 {
            for id in IdentityId::ALL {
                let c = verify_identity(id, n);
                assert!(c.equal, "{id} fails at n = {n}: {} != {}", c.lhs, c.rhs);
            }
        }
    }

    #[test]
    fn closed_count_examples() {
        let expected = [(3u64, 1u64), (4, 9), (5, 57), (6, 312), (7, 1578)];
        for (n, want) in expected {
            assert_eq!(msaft_count_closed(n), BigUint::from(want));
        }
    }

    #[test]
    fn closed_count_is_half_the_binomialeq_side() {
        for n in 3..=64 {
            let c = verify_identity(IdentityId::BinomialEq, n);
            assert_eq!(
                BigInt::from(msaft_count_closed(n)) * 2,
                c.rhs,
                "n = {n}"
            );
        }
    }

    proptest! {
        #[test]
        fn pascal_recurrence(n in 1u64..80, k in 0i64..80) {
            prop_assert_eq!(
                binom(n, k),
                binom(n - 1, k - 1) + binom(n - 1, k)
            );
        }
    }
}
