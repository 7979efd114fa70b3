//! The determinantal ideal of the cycle: one variable per secant, a term
//! order that grows toward the diagonal, all 3x3 minors of the cyclic
//! interval submatrices of the generic symmetric matrix, and the Groebner
//! machinery (division, S-pairs) that certifies those minors as a basis.

use crate::error::Error;
use crate::msafts::TripleSystem;
use crate::ngon::{NGon, Secant, SecantSet};
use crate::poly::{Coeff, Monomial, Polynomial};
use num_traits::{One, Signed};
use rayon::prelude::*;
use std::cmp::Ordering;
use std::collections::HashSet;
use std::time::{Duration, Instant};

/// Total order on the secant variables: sigma_{u,v} with smaller plain
/// difference v-u is larger, ties broken by ascending (u,v). Rank 0 is the
/// largest variable, so monomials over ranks compare with the plain
/// [Monomial] lex order.
pub struct TermOrder {
    n: usize,
    rank_by_index: Vec<u32>,
    secant_by_rank: Vec<Secant>,
}

impl TermOrder {
    pub fn new(g: &NGon) -> TermOrder {
        let mut secant_by_rank = g.all_secants();
        secant_by_rank.sort_by_key(|s| (s.v() - s.u(), s.u(), s.v()));
        let mut rank_by_index = vec![0u32; secant_by_rank.len()];
        for (rank, s) in secant_by_rank.iter().enumerate() {
            rank_by_index[s.index()] = rank as u32;
        }
        TermOrder {
            n: g.n(),
            rank_by_index,
            secant_by_rank,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variable_count(&self) -> usize {
        self.secant_by_rank.len()
    }

    pub fn rank_of(&self, s: Secant) -> u32 {
        self.rank_by_index[s.index()]
    }

    pub fn secant_of_rank(&self, rank: u32) -> Secant {
        self.secant_by_rank[rank as usize]
    }

    /// Lex comparison in the variable order; ranks already encode it.
    pub fn compare_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp(b)
    }

    /// Monomial with one factor per listed secant (repeats multiply).
    pub fn monomial_of(&self, secants: &[Secant]) -> Monomial {
        let ranks: Vec<u32> = secants.iter().map(|&s| self.rank_of(s)).collect();
        Monomial::from_ranks(&ranks)
    }

    /// The distinct secants appearing in a monomial, ascending by index.
    pub fn support_secants(&self, m: &Monomial) -> Vec<Secant> {
        let mut out: Vec<Secant> = m.support().map(|r| self.secant_of_rank(r)).collect();
        out.sort();
        out
    }

    pub fn support_set(&self, m: &Monomial) -> SecantSet {
        let mut set = SecantSet::with_universe(self.variable_count());
        for r in m.support() {
            set.insert_idx(self.secant_of_rank(r).index());
        }
        set
    }

    /// Text form like `s[0,2]*s[1,3]^2`, factors in descending variable
    /// order; the empty product renders as `1`.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.exps()
            .iter()
            .map(|&(rank, e)| {
                let s = self.secant_of_rank(rank);
                let var = format!("s[{},{}]", s.u(), s.v());
                if e == 1 {
                    var
                } else {
                    format!("{var}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Text form with explicit signs, terms in descending order.
    pub fn render_polynomial(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.render_monomial(m);
            if abs != Coeff::one() || m.is_one() {
                out.push_str(&abs.to_string());
                if !m.is_one() {
                    out.push('*');
                }
            }
            if !m.is_one() {
                out.push_str(&mono);
            }
        }
        out
    }
}

/// Row and column vertex labels of one 3x3 minor, each ascending.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Minor {
    pub rows: [usize; 3],
    pub cols: [usize; 3],
}

/// The deduplicated minor generators with their term order, generators
/// sorted by leading monomial descending (ties by the full term sequence),
/// minors aligned with generators.
pub struct GeneratorSet {
    order: TermOrder,
    gens: Vec<Polynomial>,
    minors: Vec<Minor>,
}

impl GeneratorSet {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn minors(&self) -> &[Minor] {
        &self.minors
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Laplace expansion of the 3x3 minor with the given row and column
/// labels; entry (r, c) is the variable of secant {r, c}.
fn det3(order: &TermOrder, rows: [usize; 3], cols: [usize; 3]) -> Polynomial {
    const PERMS: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([1, 0, 2], -1),
        ([2, 1, 0], -1),
    ];
    let mut terms = Vec::with_capacity(6);
    for (perm, sign) in PERMS {
        let factors = [
            Secant::new(rows[0], cols[perm[0]]),
            Secant::new(rows[1], cols[perm[1]]),
            Secant::new(rows[2], cols[perm[2]]),
        ];
        terms.push((order.monomial_of(&factors), Coeff::from_integer(sign.into())));
    }
    let p = Polynomial::from_terms(terms);
    // Rows and columns overlap in at most two labels, which makes all six
    // products distinct monomials: nothing collapses or cancels.
    assert_eq!(p.terms().len(), 6, "a subminor must keep all six products");
    p
}

/// All 3x3 minors of the [a,b] x [b,a] cyclic-interval submatrices, over
/// every cyclic interval whose two sides both have at least 3 vertices,
/// sign-normalized and deduplicated. n=3 has no admissible interval and
/// yields the empty set.
pub fn generate_st_minors(g: &NGon) -> GeneratorSet {
    let order = TermOrder::new(g);
    let n = g.n();
    let mut seen: HashSet<Polynomial> = HashSet::new();
    let mut entries: Vec<(Polynomial, Minor)> = Vec::new();
    for a in 0..n {
        for gap in 2..=n.saturating_sub(2) {
            let b = (a + gap) % n;
            let side: Vec<usize> = (0..=gap).map(|t| (a + t) % n).collect();
            let coside: Vec<usize> = (0..=n - gap).map(|t| (b + t) % n).collect();
            for rows in three_subsets(&side) {
                for cols in three_subsets(&coside) {
                    let poly = det3(&order, rows, cols).normalized_sign();
                    if seen.insert(poly.clone()) {
                        entries.push((poly, Minor { rows, cols }));
                    }
                }
            }
        }
    }
    entries.sort_by(|x, y| cmp_descending_terms(&x.0, &y.0));
    let (gens, minors) = entries.into_iter().unzip();
    GeneratorSet {
        order,
        gens,
        minors,
    }
}

/// 3-element subsets of a vertex list, each sorted ascending by label.
fn three_subsets(items: &[usize]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            for k in j + 1..items.len() {
                let mut sub = [items[i], items[j], items[k]];
                sub.sort_unstable();
                out.push(sub);
            }
        }
    }
    out
}

/// Orders polynomials by leading monomial descending, then by the rest of
/// the term sequence (monomial descending, then coefficient).
fn cmp_descending_terms(a: &Polynomial, b: &Polynomial) -> Ordering {
    for ((ma, ca), (mb, cb)) in a.terms().iter().zip(b.terms()) {
        match mb.cmp(ma) {
            Ordering::Equal => {}
            other => return other,
        }
        match ca.cmp(cb) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    a.terms().len().cmp(&b.terms().len())
}

/// Leading monomial under the term order; the zero polynomial has none.
pub fn leading_monomial(o: &TermOrder, p: &Polynomial) -> Result<Monomial, Error> {
    let _ = o;
    p.leading().map(|(m, _)| m.clone()).ok_or(Error::ZeroPolynomial)
}

/// The distinct leading monomials of the generators, ascending.
pub fn leading_ideal(gs: &GeneratorSet) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = gs
        .gens
        .iter()
        .map(|p| p.leading().expect("generators are nonzero").0.clone())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Leading monomials as secant sets, ascending and deduplicated.
pub fn leading_ideal_supports(gs: &GeneratorSet) -> Vec<SecantSet> {
    let mut out: Vec<SecantSet> = leading_ideal(gs)
        .iter()
        .map(|m| gs.order.support_set(m))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Multivariate division: repeatedly cancels the leading term against the
/// first generator whose leading monomial divides it, otherwise moves the
/// leading term to the remainder. The remainder has no monomial divisible
/// by any generator's leading monomial.
pub fn reduce(o: &TermOrder, p: &Polynomial, gens: &GeneratorSet) -> Polynomial {
    let _ = o;
    let heads: Vec<(&Monomial, &Coeff)> = gens
        .gens
        .iter()
        .map(|g| g.leading().expect("generators are nonzero"))
        .collect();
    let mut remainder: Vec<(Monomial, Coeff)> = Vec::new();
    let mut work = p.clone();
    'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for (g, &(gm, gc)) in gens.gens.iter().zip(&heads) {
            if let Some(q) = lm.try_div(gm) {
                work = work.sub(&g.mul_term(&q, &(&lc / gc)));
                continue 'outer;
            }
        }
        remainder.push((lm, lc));
        work = Polynomial::from_sorted_terms_unchecked(work.tail().to_vec());
    }
    Polynomial::from_sorted_terms_unchecked(remainder)
}

/// S-polynomial of two nonzero polynomials: both scaled to cancel their
/// leading terms at the lcm of the leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let fq = l.try_div(fm).expect("lcm is divisible by both");
    let gq = l.try_div(gm).expect("lcm is divisible by both");
    f.mul_term(&fq, &(Coeff::one() / fc))
        .sub(&g.mul_term(&gq, &(Coeff::one() / gc)))
}

/// Resource controls for [s_pair_check].
#[derive(Clone, Copy, Default)]
pub struct SPairOptions {
    /// Run even above the default size bound.
    pub force: bool,
    /// Wall-clock budget; pairs not started in time are left unprocessed.
    pub time_limit: Option<Duration>,
}

/// Outcome of reducing every S-pair of the generator set.
#[derive(Clone, Debug)]
pub struct SPairReport {
    pub n: usize,
    pub use_coprime_criterion: bool,
    pub generator_count: usize,
    pub pair_count: usize,
    /// Pairs skipped because their leading monomials share no variable.
    pub skipped_coprime: usize,
    pub reduced_to_zero: usize,
    /// Generator index pairs whose S-polynomial did not reduce to zero.
    pub nonzero_pairs: Vec<(usize, usize)>,
    /// Pairs not processed before the time limit.
    pub unprocessed: usize,
}

impl SPairReport {
    pub fn completed(&self) -> bool {
        self.unprocessed == 0
    }

    /// True when every pair was processed and reduced to zero (or was
    /// soundly skipped): the generators form a Groebner basis.
    pub fn certified(&self) -> bool {
        self.completed() && self.nonzero_pairs.is_empty()
    }
}

/// Reduces every S-pair of generators against the whole set, in parallel.
/// Refuses n > 6 unless `opts.force` is set; a time limit yields a partial
/// report rather than an error. Skipping pairs with coprime leading
/// monomials is sound and does not change the verdict.
pub fn s_pair_check(
    gs: &GeneratorSet,
    use_coprime_criterion: bool,
    opts: &SPairOptions,
) -> Result<SPairReport, Error> {
    if gs.order.n() > 6 && !opts.force {
        return Err(Error::BoundExceeded {
            operation: "S-pair reduction",
            n: gs.order.n(),
            bound: 6,
        });
    }
    let deadline = opts.time_limit.map(|d| Instant::now() + d);
    let pairs: Vec<(usize, usize)> = (0..gs.len())
        .flat_map(|i| (i + 1..gs.len()).map(move |j| (i, j)))
        .collect();

    enum Outcome {
        Skipped,
        Zero,
        Nonzero,
        Unprocessed,
    }

    let outcomes: Vec<Outcome> = pairs
        .par_iter()
        .map(|&(i, j)| {
            if deadline.is_some_and(|d| Instant::now() >= d) {
                return Outcome::Unprocessed;
            }
            let (fm, _) = gs.gens[i].leading().unwrap();
            let (gm, _) = gs.gens[j].leading().unwrap();
            if use_coprime_criterion && fm.coprime(gm) {
                return Outcome::Skipped;
            }
            let r = reduce(&gs.order, &s_polynomial(&gs.gens[i], &gs.gens[j]), gs);
            // Unit leading coefficients keep everything over the integers.
            assert!(
                r.terms().iter().all(|(_, c)| c.is_integer()),
                "reduction of integer polynomials stays integral"
            );
            if r.is_zero() {
                Outcome::Zero
            } else {
                Outcome::Nonzero
            }
        })
        .collect();

    let mut report = SPairReport {
        n: gs.order.n(),
        use_coprime_criterion,
        generator_count: gs.len(),
        pair_count: pairs.len(),
        skipped_coprime: 0,
        reduced_to_zero: 0,
        nonzero_pairs: Vec::new(),
        unprocessed: 0,
    };
    for (pair, outcome) in pairs.iter().zip(outcomes) {
        match outcome {
            Outcome::Skipped => report.skipped_coprime += 1,
            Outcome::Zero => report.reduced_to_zero += 1,
            Outcome::Nonzero => report.nonzero_pairs.push(*pair),
            Outcome::Unprocessed => report.unprocessed += 1,
        }
    }
    Ok(report)
}

/// Inclusion-maximal variable sets avoiding every leading-monomial support:
/// the components of the variety of the initial ideal, as secant sets,
/// canonically sorted. Refuses n > 8; see
/// [initial_components_with_bound].
pub fn initial_components(gs: &GeneratorSet) -> Result<Vec<SecantSet>, Error> {
    initial_components_with_bound(gs, 8)
}

/// [initial_components] with an explicit bound on n.
pub fn initial_components_with_bound(
    gs: &GeneratorSet,
    bound: usize,
) -> Result<Vec<SecantSet>, Error> {
    let n = gs.order.n();
    if n > bound {
        return Err(Error::BoundExceeded {
            operation: "initial-ideal component enumeration",
            n,
            bound,
        });
    }
    let mut triples: Vec<[u32; 3]> = Vec::new();
    for p in &gs.gens {
        let lm = &p.leading().expect("generators are nonzero").0;
        assert!(
            lm.degree() == 3 && lm.is_squarefree(),
            "leading monomials are squarefree cubics"
        );
        let mut t = [0u32; 3];
        for (slot, rank) in t.iter_mut().zip(lm.support()) {
            *slot = gs.order.secant_of_rank(rank).index() as u32;
        }
        t.sort_unstable();
        triples.push(t);
    }
    triples.sort_unstable();
    triples.dedup();
    let system = TripleSystem::new(gs.order.variable_count(), &triples);
    let mut out: Vec<SecantSet> = system
        .maximal_sets()
        .into_iter()
        .map(|vertices| {
            let mut set = SecantSet::with_universe(gs.order.variable_count());
            for v in vertices {
                set.insert_idx(v as usize);
            }
            set
        })
        .collect();
    out.sort();
    Ok(out)
}
