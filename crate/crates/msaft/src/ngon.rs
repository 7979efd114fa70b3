//! The regular n-gon, its secants, and the predicates everything else builds on.
//!
//! Conventions, fixed here once and relied on throughout the crate:
//!
//! * vertices are `0..n`, placed counterclockwise on a circle;
//! * a secant is an unordered pair of vertices `{u, v}`, stored canonically
//!   with `u <= v`; `u == v` is a loop, cyclically adjacent endpoints form an
//!   edge of the n-gon;
//! * secants are numbered by the triangular index `v(v+1)/2 + u`, and every
//!   "canonical" ordering in the crate means ascending triangular index;
//! * the parallel family of `{u, v}` is `(u + v) mod n`;
//! * a loop's two boundary arcs are, by convention, the empty arc and the arc
//!   of all other vertices, so a loop never separates anything.

use crate::error::Error;

/// The regular n-gon, `n >= 3`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct NGon {
    n: usize,
}

/// An unordered pair of vertices of the n-gon, kept with `u <= v`.
///
/// Ordering is by triangular index, so sorting a `Vec<Secant>` yields the
/// crate-wide canonical order.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Secant {
    u: u32,
    v: u32,
}

/// One element of the dihedral group of order 2n: an optional reflection
/// `v -> -v (mod n)` applied first, then rotation by `rotation`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub rotation: usize,
    pub reflected: bool,
}

impl Secant {
    pub fn new(a: usize, b: usize) -> Secant {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Secant {
            u: u as u32,
            v: v as u32,
        }
    }

    pub fn u(&self) -> usize {
        self.u as usize
    }

    pub fn v(&self) -> usize {
        self.v as usize
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// Both endpoints cyclically adjacent in the n-gon.
    pub fn is_edge(&self, g: &NGon) -> bool {
        let n = g.n() as u32;
        self.v - self.u == 1 || (self.u == 0 && self.v == n - 1)
    }

    /// Triangular index `v(v+1)/2 + u`; enumerates secants of any n-gon
    /// without gaps.
    pub fn index(&self) -> usize {
        let (u, v) = (self.u as usize, self.v as usize);
        v * (v + 1) / 2 + u
    }

    /// Inverse of [`Secant::index`].
    pub fn from_index(idx: usize) -> Secant {
        let mut v = (8 * idx as u64 + 1).isqrt().div_ceil(2) as usize;
        while v * (v + 1) / 2 > idx {
            v -= 1;
        }
        let u = idx - v * (v + 1) / 2;
        debug_assert!(u <= v);
        Secant::new(u, v)
    }

    pub fn shares_endpoint(&self, other: Secant) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }
}

impl std::fmt::Debug for Secant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl std::fmt::Display for Secant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl PartialOrd for Secant {
    fn partial_cmp(&self, other: &Secant) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Secant {
    fn cmp(&self, other: &Secant) -> std::cmp::Ordering {
        // (v, u) lexicographic == triangular index order
        (self.v, self.u).cmp(&(other.v, other.u))
    }
}

impl NGon {
    pub fn new(n: usize) -> NGon {
        assert!(n >= 3, "the n-gon needs at least 3 vertices, got {n}");
        NGon { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn secant_count(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    pub fn contains(&self, s: Secant) -> bool {
        s.v() < self.n
    }

    /// All secants in ascending index order, `C(n+1, 2)` of them.
    pub fn all_secants(&self) -> Vec<Secant> {
        let mut out = Vec::with_capacity(self.secant_count());
        for v in 0..self.n {
            for u in 0..=v {
                out.push(Secant::new(u, v));
            }
        }
        out
    }

    pub fn family_of(&self, s: Secant) -> usize {
        (s.u() + s.v()) % self.n
    }

    /// Secants whose endpoint sum is `k (mod n)`, ascending index order.
    /// Sizes: `(n+2)/2` (k even) or `n/2` (k odd) for even n, `(n+1)/2` for
    /// odd n.
    pub fn parallel_family(&self, k: usize) -> Vec<Secant> {
        assert!(k < self.n, "family index {k} out of range for n = {}", self.n);
        self.all_secants()
            .into_iter()
            .filter(|&s| self.family_of(s) == k)
            .collect()
    }

    /// Counterclockwise distance from `from` to `to`.
    fn ccw_dist(&self, from: usize, to: usize) -> usize {
        (to + self.n - from) % self.n
    }

    /// Two secants cross when they share a vertex or their endpoints strictly
    /// interleave on the circle. A loop only crosses secants through its
    /// vertex.
    pub fn crosses(&self, a: Secant, b: Secant) -> bool {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.shares_endpoint(b) {
            return true;
        }
        if a.is_loop() || b.is_loop() {
            return false;
        }
        let span = a.v() - a.u();
        let inside = |x: usize| {
            let d = self.ccw_dist(a.u(), x);
            d > 0 && d < span
        };
        inside(b.u()) != inside(b.v())
    }

    /// Whether `m` splits the circle into two open arcs, one containing both
    /// endpoints of `x` and the other both endpoints of `y`. Loops and edges
    /// have an empty arc, so they never separate.
    fn separates(&self, m: Secant, x: Secant, y: Secant) -> bool {
        let span = m.v() - m.u();
        // Some(true): strictly inside the ccw arc u..v; Some(false): strictly
        // inside the complementary arc; None: touches m or straddles.
        let side = |s: Secant| -> Option<bool> {
            let du = self.ccw_dist(m.u(), s.u());
            let dv = self.ccw_dist(m.u(), s.v());
            if du > 0 && du < span && dv > 0 && dv < span {
                Some(true)
            } else if du > span && dv > span {
                Some(false)
            } else {
                None
            }
        };
        matches!((side(x), side(y)), (Some(p), Some(q)) if p != q)
    }

    /// Pairwise endpoint-disjoint, pairwise non-crossing, and one of the three
    /// secants separates the other two.
    pub fn is_forbidden_triple(&self, a: Secant, b: Secant, c: Secant) -> bool {
        let disjoint =
            !a.shares_endpoint(b) && !a.shares_endpoint(c) && !b.shares_endpoint(c);
        disjoint
            && !self.crosses(a, b)
            && !self.crosses(a, c)
            && !self.crosses(b, c)
            && (self.separates(a, b, c) || self.separates(b, a, c) || self.separates(c, a, b))
    }

    /// Cut-line characterization for arbitrary k: the tuple is forbidden when
    /// its endpoints are pairwise disjoint and some cut through two distinct
    /// vertices a, b admits a labeling `alpha_i = {b_i, c_i}` with every `b_i`
    /// on one closed side, every `c_i` on the other, the `b_i` in clockwise
    /// order from a and the `c_i` in counterclockwise order from a. Restricted
    /// to k = 3 this agrees with [`NGon::is_forbidden_triple`].
    pub fn is_forbidden_ktuple(&self, tuple: &[Secant]) -> Result<bool, Error> {
        let k = tuple.len();
        if k < 2 {
            return Err(Error::TupleTooSmall(k));
        }
        for i in 0..k {
            for j in i + 1..k {
                if tuple[i] == tuple[j] {
                    return Err(Error::RepeatedSecants);
                }
                if tuple[i].shares_endpoint(tuple[j]) {
                    return Ok(false);
                }
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.cut_admits(tuple, a, self.ccw_dist(a, b)) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// One oriented cut to test: vertex `a` plus the vertex at ccw distance
    /// `cut`. The `b_i` must sit on the closed clockwise arc from `a` to the
    /// second cut vertex, the `c_i` on the closed counterclockwise arc, so
    /// walking the circle from `a` in either direction stays inside the
    /// required side until the far cut vertex. Both orientations of a cut are
    /// covered because the caller tries both ordered vertex pairs.
    fn cut_admits(&self, tuple: &[Secant], a: usize, cut: usize) -> bool {
        let n = self.n;
        let ccw_pos = |x: usize| (x + n - a) % n;
        let cw_pos = |x: usize| (a + n - x) % n;
        // Both cut vertices (ccw positions 0 and cut) belong to both sides.
        let on_c_side = |x: usize| ccw_pos(x) <= cut;
        let on_b_side = |x: usize| {
            let p = ccw_pos(x);
            p == 0 || p >= cut
        };

        // For each secant, the admissible (b endpoint, c endpoint) choices as
        // (clockwise position of b_i, counterclockwise position of c_i).
        let mut options: Vec<Vec<(usize, usize)>> = Vec::with_capacity(tuple.len());
        for s in tuple {
            let mut opts = Vec::with_capacity(2);
            let mut push = |p: usize, q: usize| {
                if on_b_side(p) && on_c_side(q) {
                    let cand = (cw_pos(p), ccw_pos(q));
                    if !opts.contains(&cand) {
                        opts.push(cand);
                    }
                }
            };
            push(s.u(), s.v());
            push(s.v(), s.u());
            if opts.is_empty() {
                return false;
            }
            options.push(opts);
        }

        // Endpoints are pairwise disjoint, so b positions are distinct and c
        // positions are distinct; a labeling works exactly when sorting by b
        // position makes the c positions increase.
        let mut choice = vec![0usize; options.len()];
        loop {
            let mut picked: Vec<(usize, usize)> = choice
                .iter()
                .zip(&options)
                .map(|(&c, opts)| opts[c])
                .collect();
            picked.sort_unstable();
            if picked.windows(2).all(|w| w[0].1 < w[1].1) {
                return true;
            }
            // next choice vector
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return false;
                }
                choice[i] += 1;
                if choice[i] < options[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    /// The one or two secants to the right of `s = {i, j}`: `{i, j+1}` and
    /// `{i+1, j}` mod n, deduplicated (a loop has a single right neighbor).
    /// Every result lies in family `family_of(s) + 1 (mod n)`.
    pub fn right_neighbors(&self, s: Secant) -> Vec<Secant> {
        debug_assert!(self.contains(s));
        let n = self.n;
        let a = Secant::new(s.u(), (s.v() + 1) % n);
        let b = Secant::new((s.u() + 1) % n, s.v());
        if a == b {
            vec![a]
        } else if a < b {
            vec![a, b]
        } else {
            vec![b, a]
        }
    }

    /// Mirror of [`NGon::right_neighbors`]: `{i-1, j}` and `{i, j-1}` mod n.
    /// `t` is a right neighbor of `s` exactly when `s` is a left neighbor of
    /// `t`.
    pub fn left_neighbors(&self, s: Secant) -> Vec<Secant> {
        debug_assert!(self.contains(s));
        let n = self.n;
        let a = Secant::new((s.u() + n - 1) % n, s.v());
        let b = Secant::new(s.u(), (s.v() + n - 1) % n);
        if a == b {
            vec![a]
        } else if a < b {
            vec![a, b]
        } else {
            vec![b, a]
        }
    }

    /// All 2n dihedral elements: rotations first, then reflected ones.
    pub fn dihedral_elements(&self) -> Vec<DihedralElement> {
        let mut out = Vec::with_capacity(2 * self.n);
        for reflected in [false, true] {
            for rotation in 0..self.n {
                out.push(DihedralElement {
                    rotation,
                    reflected,
                });
            }
        }
        out
    }

    /// Image of a secant under a dihedral element (reflection first, then
    /// rotation), re-canonicalized.
    pub fn dihedral_image(&self, e: DihedralElement, s: Secant) -> Secant {
        debug_assert!(self.contains(s));
        let n = self.n;
        let map = |x: usize| {
            let y = if e.reflected { (n - x) % n } else { x };
            (y + e.rotation) % n
        };
        Secant::new(map(s.u()), map(s.v()))
    }
}

/// Set of secants of one n-gon, backed by a bitset over triangular indices.
/// Iteration and comparison follow ascending index order, so equal sets are
/// `==` and collections of sets sort canonically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SecantSet {
    words: Vec<u64>,
    universe: usize,
}

impl SecantSet {
    pub fn new(g: &NGon) -> SecantSet {
        Self::with_universe(g.secant_count())
    }

    pub fn with_universe(universe: usize) -> SecantSet {
        SecantSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn from_secants<I: IntoIterator<Item = Secant>>(g: &NGon, iter: I) -> SecantSet {
        let mut set = SecantSet::new(g);
        for s in iter {
            set.insert(s);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, s: Secant) {
        self.insert_idx(s.index());
    }

    pub fn insert_idx(&mut self, idx: usize) {
        assert!(idx < self.universe, "secant index {idx} out of universe");
        self.words[idx / 64] |= 1 << (idx % 64);
    }

    pub fn remove(&mut self, s: Secant) {
        let idx = s.index();
        assert!(idx < self.universe);
        self.words[idx / 64] &= !(1 << (idx % 64));
    }

    pub fn contains(&self, s: Secant) -> bool {
        self.contains_idx(s.index())
    }

    pub fn contains_idx(&self, idx: usize) -> bool {
        idx < self.universe && self.words[idx / 64] & (1 << (idx % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter_idx(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            std::iter::successors(Some(w), |&rest| Some(rest & rest.wrapping_sub(1)))
                .take_while(|&rest| rest != 0)
                .map(move |rest| wi * 64 + rest.trailing_zeros() as usize)
        })
    }

    /// Ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Secant> + '_ {
        self.iter_idx().map(Secant::from_index)
    }

    pub fn union_with(&mut self, other: &SecantSet) {
        assert_eq!(self.universe, other.universe);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn is_subset(&self, other: &SecantSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(w, o)| w & !o == 0)
    }

    pub fn is_disjoint(&self, other: &SecantSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(w, o)| w & o == 0)
    }
}

impl std::fmt::Debug for SecantSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl PartialOrd for SecantSet {
    fn partial_cmp(&self, other: &SecantSet) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SecantSet {
    /// Lexicographic on the ascending element sequence.
    fn cmp(&self, other: &SecantSet) -> std::cmp::Ordering {
        self.iter_idx().cmp(other.iter_idx())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn secant_canonicalizes_and_indexes() {
        let s = Secant::new(3, 0);
        assert_eq!((s.u(), s.v()), (0, 3));
        assert_eq!(s.index(), 6);
        for idx in 0..500 {
            assert_eq!(Secant::from_index(idx).index(), idx);
        }
    }

    #[test]
    fn all_secants_is_index_ordered_and_complete() {
        for n in 3..=12 {
            let g = NGon::new(n);
            let all = g.all_secants();
            assert_eq!(all.len(), n * (n + 1) / 2);
            for (i, s) in all.iter().enumerate() {
                assert_eq!(s.index(), i);
            }
        }
    }

    #[test]
    fn family_sizes_match_parity_rule() {
        for n in 3..=16 {
            let g = NGon::new(n);
            let mut total = 0;
            for k in 0..n {
                let fam = g.parallel_family(k);
                let loops = fam.iter().filter(|s| s.is_loop()).count();
                if n % 2 == 0 {
                    if k % 2 == 0 {
                        assert_eq!(fam.len(), (n + 2) / 2);
                        assert_eq!(loops, 2);
                    } else {
                        assert_eq!(fam.len(), n / 2);
                        assert_eq!(loops, 0);
                    }
                } else {
                    assert_eq!(fam.len(), n.div_ceil(2));
                    assert_eq!(loops, 1);
                }
                total += fam.len();
            }
            assert_eq!(total, g.secant_count());
        }
    }

    #[test]
    fn crossing_examples() {
        let g = NGon::new(4);
        assert!(g.crosses(Secant::new(0, 2), Secant::new(1, 3)));
        assert!(!g.crosses(Secant::new(0, 1), Secant::new(2, 3)));
        assert!(g.crosses(Secant::new(0, 0), Secant::new(0, 2)));
        let g7 = NGon::new(7);
        assert!(g7.crosses(Secant::new(1, 5), Secant::new(2, 6)));
        // a loop off the chord does not cross it
        assert!(!g7.crosses(Secant::new(3, 3), Secant::new(1, 5)));
    }

    #[test]
    fn forbidden_triple_examples_n7() {
        let g = NGon::new(7);
        let t = |a: (usize, usize), b: (usize, usize), c: (usize, usize)| {
            g.is_forbidden_triple(
                Secant::new(a.0, a.1),
                Secant::new(b.0, b.1),
                Secant::new(c.0, c.1),
            )
        };
        assert!(t((0, 0), (2, 6), (3, 3)));
        assert!(t((1, 6), (2, 5), (3, 4)));
        assert!(!t((0, 0), (1, 6), (2, 6))); // shares vertex 6
        assert!(!t((0, 1), (2, 3), (4, 5))); // nothing separates
        assert!(!t((1, 5), (2, 6), (3, 4))); // first two cross
    }

    #[test]
    fn loops_and_edges_never_separate() {
        for n in 3..=8 {
            let g = NGon::new(n);
            let all = g.all_secants();
            for &m in all.iter().filter(|s| s.is_loop() || s.is_edge(&g)) {
                for &x in &all {
                    for &y in &all {
                        assert!(!g.separates(m, x, y), "n={n} m={m:?} x={x:?} y={y:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn ktuple_rejects_bad_input_and_accepts_disjoint_pairs() {
        let g = NGon::new(6);
        let a = Secant::new(0, 1);
        assert_eq!(g.is_forbidden_ktuple(&[a, a]), Err(Error::RepeatedSecants));
        assert_eq!(g.is_forbidden_ktuple(&[a]), Err(Error::TupleTooSmall(1)));
        // any two disjoint non-crossing secants admit a cut
        let all = g.all_secants();
        for &x in &all {
            for &y in &all {
                if x < y && !x.shares_endpoint(y) && !g.crosses(x, y) {
                    assert_eq!(g.is_forbidden_ktuple(&[x, y]), Ok(true), "{x:?} {y:?}");
                }
            }
        }
    }

    #[test]
    fn ktuple_matches_triple_predicate_small() {
        for n in 3..=6 {
            let g = NGon::new(n);
            let all = g.all_secants();
            for i in 0..all.len() {
                for j in i + 1..all.len() {
                    for k in j + 1..all.len() {
                        let by_middle = g.is_forbidden_triple(all[i], all[j], all[k]);
                        let by_cut = g.is_forbidden_ktuple(&[all[i], all[j], all[k]]).unwrap();
                        assert_eq!(by_middle, by_cut, "n={n} {:?} {:?} {:?}", all[i], all[j], all[k]);
                    }
                }
            }
        }
    }

    #[test]
    fn neighbor_examples() {
        let g5 = NGon::new(5);
        assert_eq!(
            g5.right_neighbors(Secant::new(0, 0)),
            vec![Secant::new(0, 1)]
        );
        let g4 = NGon::new(4);
        assert_eq!(
            g4.right_neighbors(Secant::new(0, 3)),
            vec![Secant::new(0, 0), Secant::new(1, 3)]
        );
        assert_eq!(
            g4.left_neighbors(Secant::new(0, 0)),
            vec![Secant::new(0, 3)]
        );
    }

    #[test]
    fn neighbors_change_family_by_one_and_invert() {
        for n in 3..=12 {
            let g = NGon::new(n);
            for s in g.all_secants() {
                let fam = g.family_of(s);
                for t in g.right_neighbors(s) {
                    assert_eq!(g.family_of(t), (fam + 1) % n);
                    assert!(g.left_neighbors(t).contains(&s));
                }
                for t in g.left_neighbors(s) {
                    assert_eq!((g.family_of(t) + 1) % n, fam);
                    assert!(g.right_neighbors(t).contains(&s));
                }
            }
        }
    }

    #[test]
    fn dihedral_examples_and_group_size() {
        let g = NGon::new(5);
        let refl = DihedralElement {
            rotation: 0,
            reflected: true,
        };
        assert_eq!(g.dihedral_image(refl, Secant::new(1, 3)), Secant::new(2, 4));
        assert_eq!(g.dihedral_elements().len(), 10);
        // rotation by n is the identity
        for s in g.all_secants() {
            let full = DihedralElement {
                rotation: 0,
                reflected: false,
            };
            assert_eq!(g.dihedral_image(full, s), s);
        }
    }

    #[test]
    fn secant_set_orders_canonically() {
        let g = NGon::new(5);
        let a = SecantSet::from_secants(&g, [Secant::new(0, 0), Secant::new(1, 2)]);
        let b = SecantSet::from_secants(&g, [Secant::new(0, 0), Secant::new(0, 3)]);
        assert!(a < b); // {1,2} has index 4, {0,3} has index 6
        assert_eq!(a.len(), 2);
        let elems: Vec<Secant> = a.iter().collect();
        assert_eq!(elems, vec![Secant::new(0, 0), Secant::new(1, 2)]);
    }

    fn arb_ngon_and_two_secants() -> impl Strategy<Value = (usize, usize, usize)> {
        (3usize..=20).prop_flat_map(|n| {
            let count = n * (n + 1) / 2;
            (Just(n), 0..count, 0..count)
        })
    }

    proptest! {
        #[test]
        fn crosses_is_symmetric((n, i, j) in arb_ngon_and_two_secants()) {
            let g = NGon::new(n);
            let a = Secant::from_index(i);
            let b = Secant::from_index(j);
            prop_assert_eq!(g.crosses(a, b), g.crosses(b, a));
        }

        #[test]
        fn crossing_is_dihedral_invariant((n, i, j) in arb_ngon_and_two_secants(), r in 0usize..20, refl: bool) {
            let g = NGon::new(n);
            let e = DihedralElement { rotation: r % n, reflected: refl };
            let a = Secant::from_index(i);
            let b = Secant::from_index(j);
            prop_assert_eq!(
                g.crosses(a, b),
                g.crosses(g.dihedral_image(e, a), g.dihedral_image(e, b))
            );
        }

        #[test]
        fn forbidden_triple_is_dihedral_invariant_and_symmetric(
            n in 3usize..=9, seed in 0u64..1_000_000, r in 0usize..9, refl: bool
        ) {
            let g = NGon::new(n);
            let count = g.secant_count();
            let a = Secant::from_index((seed % count as u64) as usize);
            let b = Secant::from_index(((seed / 64) % count as u64) as usize);
            let c = Secant::from_index(((seed / 4096) % count as u64) as usize);
            let e = DihedralElement { rotation: r % n, reflected: refl };
            let base = g.is_forbidden_triple(a, b, c);
            prop_assert_eq!(base, g.is_forbidden_triple(b, c, a));
            prop_assert_eq!(base, g.is_forbidden_triple(c, b, a));
            prop_assert_eq!(base, g.is_forbidden_triple(
                g.dihedral_image(e, a), g.dihedral_image(e, b), g.dihedral_image(e, c)));
        }
    }
}
