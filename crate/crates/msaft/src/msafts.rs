//! Maximal forbidden-triple-free secant sets and their structure theory:
//! exhaustive enumeration, enumeration through disjoint path pairs in the
//! strip graph, the unique secant walk, the moving lemma, and dihedral
//! orbit classification.

use crate::error::Error;
use crate::ngon::{DihedralElement, NGon, Secant, SecantSet};
use crate::strip::{build_strip_graph, enumerate_disjoint_path_pairs, path_secants};
use std::collections::HashMap;

/// All forbidden triples, as index-sorted secant triples in lexicographic
/// order.
pub fn enumerate_forbidden_triples(g: &NGon) -> Vec<[Secant; 3]> {
    let all = g.all_secants();
    let mut out = Vec::new();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            for c in b + 1..all.len() {
                if g.is_forbidden_triple(all[a], all[b], all[c]) {
                    out.push([all[a], all[b], all[c]]);
                }
            }
        }
    }
    out
}

/// Forbidden triples indexed for fast membership queries.
pub struct ForbiddenTriples {
    secant_count: usize,
    triples: Vec<[u32; 3]>,
    /// completions[i] lists the pairs {j,k} such that {i,j,k} is forbidden.
    completions: Vec<Vec<(u32, u32)>>,
}

impl ForbiddenTriples {
    pub fn new(g: &NGon) -> Self {
        let secant_count = g.secant_count();
        let mut triples = Vec::new();
        let mut completions = vec![Vec::new(); secant_count];
        for t in enumerate_forbidden_triples(g) {
            let [a, b, c] = t.map(|s| s.index() as u32);
            triples.push([a, b, c]);
            completions[a as usize].push((b, c));
            completions[b as usize].push((a, c));
            completions[c as usize].push((a, b));
        }
        ForbiddenTriples {
            secant_count,
            triples,
            completions,
        }
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triples(&self) -> &[[u32; 3]] {
        &self.triples
    }

    /// True when some forbidden triple lies entirely inside `set`.
    pub fn contains_triple_within(&self, set: &SecantSet) -> bool {
        self.triples
            .iter()
            .any(|t| t.iter().all(|&i| set.contains_idx(i as usize)))
    }

    /// True when every secant outside `set` forms a forbidden triple with
    /// two members, i.e. `set` is inclusion-maximal among triple-free sets
    /// (assuming it is triple-free).
    pub fn all_outside_complete(&self, set: &SecantSet) -> bool {
        (0..self.secant_count).filter(|&i| !set.contains_idx(i)).all(|i| {
            self.completions[i]
                .iter()
                .any(|&(a, b)| set.contains_idx(a as usize) && set.contains_idx(b as usize))
        })
    }

    pub fn is_msaft(&self, set: &SecantSet) -> bool {
        !self.contains_triple_within(set) && self.all_outside_complete(set)
    }
}

/// True iff `set` contains no forbidden triple and every outside secant
/// completes one with two members. Builds the triple table on each call;
/// use [ForbiddenTriples] for bulk queries.
pub fn is_msaft(g: &NGon, set: &SecantSet) -> bool {
    ForbiddenTriples::new(g).is_msaft(set)
}

/// A verified maximal forbidden-triple-free secant set. Ordered
/// lexicographically on the sorted secant index sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Msaft {
    secants: Vec<Secant>,
    set: SecantSet,
}

impl Msaft {
    /// Verifies the defining property before constructing.
    pub fn new(g: &NGon, set: SecantSet) -> Result<Msaft, Error> {
        Msaft::with_triples(&ForbiddenTriples::new(g), set)
    }

    /// Same as [Msaft::new], reusing a prebuilt triple table.
    pub fn with_triples(ft: &ForbiddenTriples, set: SecantSet) -> Result<Msaft, Error> {
        if ft.contains_triple_within(&set) {
            return Err(Error::NotAMsaft("the set contains a forbidden triple"));
        }
        if !ft.all_outside_complete(&set) {
            return Err(Error::NotAMsaft("the set is not inclusion-maximal"));
        }
        Ok(Msaft::from_set(set))
    }

    /// Caller guarantees the set is a verified or construction-guaranteed
    /// maximal triple-free set.
    pub(crate) fn from_set(set: SecantSet) -> Msaft {
        let secants: Vec<Secant> = set.iter().collect();
        Msaft { secants, set }
    }

    /// Members in ascending index order.
    pub fn secants(&self) -> &[Secant] {
        &self.secants
    }

    pub fn set(&self) -> &SecantSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.secants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.secants.is_empty()
    }

    pub fn contains(&self, s: Secant) -> bool {
        self.set.contains(s)
    }
}

/// Shared enumerator for inclusion-maximal subsets avoiding a family of
/// 3-element hyperedges, over vertices 0..vertex_count.
pub(crate) struct TripleSystem {
    vertex_count: usize,
    words: usize,
    /// pair_masks[u * vertex_count + v] is the bitset of w completing a
    /// hyperedge {u, v, w}.
    pair_masks: Vec<u64>,
}

impl TripleSystem {
    pub(crate) fn new(vertex_count: usize, triples: &[[u32; 3]]) -> Self {
        let words = vertex_count.div_ceil(64).max(1);
        let mut pair_masks = vec![0u64; vertex_count * vertex_count * words];
        let mut set = |u: usize, v: usize, w: usize| {
            pair_masks[(u * vertex_count + v) * words + w / 64] |= 1u64 << (w % 64);
        };
        for &[a, b, c] in triples {
            let (a, b, c) = (a as usize, b as usize, c as usize);
            set(a, b, c);
            set(b, a, c);
            set(a, c, b);
            set(c, a, b);
            set(b, c, a);
            set(c, b, a);
        }
        TripleSystem {
            vertex_count,
            words,
            pair_masks,
        }
    }

    fn pair_mask(&self, u: u32, v: u32) -> &[u64] {
        let base = (u as usize * self.vertex_count + v as usize) * self.words;
        &self.pair_masks[base..base + self.words]
    }

    /// u stays addable after v joins the current set r iff no hyperedge
    /// {u, v, w} has w already in r.
    fn still_addable(&self, u: u32, v: u32, r: &[u64]) -> bool {
        self.pair_mask(u, v).iter().zip(r).all(|(m, rw)| m & rw == 0)
    }

    /// All inclusion-maximal hyperedge-free vertex sets, each ascending.
    pub(crate) fn maximal_sets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut r_words = vec![0u64; self.words];
        let mut r_list = Vec::new();
        let p: Vec<u32> = (0..self.vertex_count as u32).collect();
        self.extend(&mut r_words, &mut r_list, &p, &[], &mut out);
        out
    }

    fn extend(
        &self,
        r_words: &mut [u64],
        r_list: &mut Vec<u32>,
        p: &[u32],
        x: &[u32],
        out: &mut Vec<Vec<u32>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r_list.clone());
            return;
        }
        let mut x_cur: Vec<u32> = x.to_vec();
        for (pos, &v) in p.iter().enumerate() {
            r_words[v as usize / 64] |= 1u64 << (v % 64);
            r_list.push(v);
            let p_next: Vec<u32> = p[pos + 1..]
                .iter()
                .copied()
                .filter(|&u| self.still_addable(u, v, r_words))
                .collect();
            let x_next: Vec<u32> = x_cur
                .iter()
                .copied()
                .filter(|&u| self.still_addable(u, v, r_words))
                .collect();
            self.extend(r_words, r_list, &p_next, &x_next, out);
            r_list.pop();
            r_words[v as usize / 64] &= !(1u64 << (v % 64));
            x_cur.push(v);
        }
    }
}

/// All maximal triple-free sets by exhaustive maximal-set enumeration over
/// the forbidden-triple hypergraph, canonically sorted. Refuses n > 8; use
/// [enumerate_msafts_bruteforce_with_bound] to override the cost guard.
pub fn enumerate_msafts_bruteforce(g: &NGon) -> Result<Vec<Msaft>, Error> {
    enumerate_msafts_bruteforce_with_bound(g, 8)
}

/// [enumerate_msafts_bruteforce] with an explicit bound on n.
pub fn enumerate_msafts_bruteforce_with_bound(g: &NGon, bound: usize) -> Result<Vec<Msaft>, Error> {
    if g.n() > bound {
        return Err(Error::BoundExceeded {
            operation: "brute-force maximal-set enumeration",
            n: g.n(),
            bound,
        });
    }
    let ft = ForbiddenTriples::new(g);
    let system = TripleSystem::new(g.secant_count(), ft.triples());
    let mut out: Vec<Msaft> = system
        .maximal_sets()
        .into_iter()
        .map(|vertices| {
            let mut set = SecantSet::new(g);
            for v in vertices {
                set.insert_idx(v as usize);
            }
            debug_assert!(ft.is_msaft(&set));
            Msaft::from_set(set)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All maximal triple-free sets as underlying secant sets of disjoint path
/// pairs in the strip graph, one pair of column labels at a time. Equals
/// the brute-force list as a set; panics loudly if a produced set fails
/// the cardinality or family-count facts, or if two coincide.
pub fn enumerate_msafts_via_walks(g: &NGon) -> Vec<Msaft> {
    let sg = build_strip_graph(g);
    let n = g.n();
    let mut out = Vec::new();
    for i1 in 0..sg.label_count() {
        for i2 in i1 + 1..sg.label_count() {
            for (p, q) in enumerate_disjoint_path_pairs(&sg, (i1, i2)) {
                let mut set = path_secants(&sg, &p);
                set.union_with(&path_secants(&sg, &q));
                assert_eq!(
                    set.len(),
                    2 * n,
                    "a disjoint path pair must cover 2n distinct secants"
                );
                let mut per_family = vec![0usize; n];
                for s in set.iter() {
                    per_family[g.family_of(s)] += 1;
                }
                assert!(
                    per_family.iter().all(|&c| c == 2),
                    "a disjoint path pair must cover each family exactly twice"
                );
                out.push(Msaft::from_set(set));
            }
        }
    }
    out.sort();
    let before = out.len();
    out.dedup();
    assert_eq!(before, out.len(), "walk enumeration repeated a set");
    out
}

/// The unique injective right-assignment on a maximal set: each member maps
/// to a member right neighbor, no two to the same one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SecantWalk {
    /// (source, image) pairs sorted by source.
    pairs: Vec<(Secant, Secant)>,
}

impl SecantWalk {
    pub fn pairs(&self) -> &[(Secant, Secant)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn image(&self, s: Secant) -> Option<Secant> {
        self.pairs
            .binary_search_by(|(src, _)| src.cmp(&s))
            .ok()
            .map(|k| self.pairs[k].1)
    }

    /// The iteration orbit of `start`: start, f(start), ... up to but not
    /// including the return to `start`.
    pub fn cycle_from(&self, start: Secant) -> Vec<Secant> {
        let mut orbit = vec![start];
        let mut cur = self.image(start).expect("start must be a member");
        while cur != start {
            orbit.push(cur);
            cur = self.image(cur).expect("members map to members");
        }
        orbit
    }
}

/// Finds the walk of a maximal set. The image of family k lies in family
/// k+1, so injectivity decomposes into an independent assignment problem
/// per family boundary; existence and uniqueness mean exactly one
/// assignment at every boundary.
pub fn secant_walk(g: &NGon, m: &Msaft) -> Result<SecantWalk, Error> {
    let n = g.n();
    let mut families: Vec<Vec<Secant>> = vec![Vec::new(); n];
    for &s in m.secants() {
        families[g.family_of(s)].push(s);
    }
    let mut pairs = Vec::with_capacity(m.len());
    for k in 0..n {
        let next = (k + 1) % n;
        let assignments = injective_assignments(g, &families[k], &families[next]);
        match assignments.len() {
            0 => return Err(Error::NoWalk { family: k, next }),
            1 => pairs.extend(families[k].iter().copied().zip(assignments[0].iter().copied())),
            _ => return Err(Error::AmbiguousWalk { family: k, next }),
        }
    }
    pairs.sort();
    Ok(SecantWalk { pairs })
}

/// All ways to assign each source a distinct right neighbor drawn from
/// `targets`, aligned with `sources`.
fn injective_assignments(g: &NGon, sources: &[Secant], targets: &[Secant]) -> Vec<Vec<Secant>> {
    fn rec(
        g: &NGon,
        sources: &[Secant],
        targets: &[Secant],
        used: &mut Vec<bool>,
        chosen: &mut Vec<Secant>,
        out: &mut Vec<Vec<Secant>>,
    ) {
        if chosen.len() == sources.len() {
            out.push(chosen.clone());
            return;
        }
        let src = sources[chosen.len()];
        for t in g.right_neighbors(src) {
            if let Some(k) = targets.iter().position(|&x| x == t) {
                if !used[k] {
                    used[k] = true;
                    chosen.push(t);
                    rec(g, sources, targets, used, chosen, out);
                    chosen.pop();
                    used[k] = false;
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(
        g,
        sources,
        targets,
        &mut vec![false; targets.len()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// One failed clause of the moving lemma.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MovingLemmaViolation {
    /// No right neighbor of the member is a member.
    Right(Secant),
    /// No left neighbor of the member is a member.
    Left(Secant),
    /// Adjacent parallel members (alpha, alpha') with neither of the two
    /// compatible right moves available.
    AdjacentRight(Secant, Secant),
    /// Mirror image of AdjacentRight on the left side.
    AdjacentLeft(Secant, Secant),
}

/// Outcome of checking every moving-lemma clause on one maximal set.
#[derive(Clone, Debug)]
pub struct MovingLemmaReport {
    pub member_count: usize,
    /// Ordered adjacent parallel pairs (alpha, alpha' = {i-1, j+1}) found.
    pub adjacent_pairs: usize,
    pub violations: Vec<MovingLemmaViolation>,
}

impl MovingLemmaReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// True iff every member has a member right neighbor and a member left
/// neighbor, and every adjacent parallel pair additionally admits one of
/// its two compatible moves on each side.
pub fn check_moving_lemma(g: &NGon, m: &Msaft) -> bool {
    moving_lemma_report(g, m).holds()
}

/// Clause-by-clause evaluation behind [check_moving_lemma].
pub fn moving_lemma_report(g: &NGon, m: &Msaft) -> MovingLemmaReport {
    let n = g.n() as i64;
    let sec = |a: i64, b: i64| Secant::new(a.rem_euclid(n) as usize, b.rem_euclid(n) as usize);
    let mut violations = Vec::new();
    let mut adjacent_pairs = 0;
    for &alpha in m.secants() {
        if !g.right_neighbors(alpha).iter().any(|&t| m.contains(t)) {
            violations.push(MovingLemmaViolation::Right(alpha));
        }
        if !g.left_neighbors(alpha).iter().any(|&t| m.contains(t)) {
            violations.push(MovingLemmaViolation::Left(alpha));
        }
        let (u, v) = (alpha.u() as i64, alpha.v() as i64);
        let orientations: &[(i64, i64)] = if u == v { &[(u, v)] } else { &[(u, v), (v, u)] };
        for &(i, j) in orientations {
            let alpha_prime = sec(i - 1, j + 1);
            // An edge oriented as (i, i-1) reproduces itself here; a secant
            // is never adjacent-parallel to itself.
            if alpha_prime == alpha || !m.contains(alpha_prime) {
                continue;
            }
            adjacent_pairs += 1;
            let delta = sec(i - 1, j + 2);
            let gamma = sec(i + 1, j);
            if !(m.contains(delta) || m.contains(gamma)) {
                violations.push(MovingLemmaViolation::AdjacentRight(alpha, alpha_prime));
            }
            let delta_left = sec(i - 2, j + 1);
            let gamma_left = sec(i, j - 1);
            if !(m.contains(delta_left) || m.contains(gamma_left)) {
                violations.push(MovingLemmaViolation::AdjacentLeft(alpha, alpha_prime));
            }
        }
    }
    MovingLemmaReport {
        member_count: m.len(),
        adjacent_pairs,
        violations,
    }
}

/// Image of a maximal set under a dihedral element. Forbidden triples are
/// preserved by the symmetry, so the image is again maximal triple-free.
pub fn dihedral_image_msaft(g: &NGon, e: DihedralElement, m: &Msaft) -> Msaft {
    let mut set = SecantSet::new(g);
    for &s in m.secants() {
        set.insert(g.dihedral_image(e, s));
    }
    Msaft::from_set(set)
}

/// Orbits of the 2n-element dihedral action on a closed list of maximal
/// sets: (canonical representative, orbit size), sorted by representative.
/// Fails if some image is missing from the input list.
pub fn dihedral_classes(g: &NGon, msafts: &[Msaft]) -> Result<Vec<(Msaft, usize)>, Error> {
    let index: HashMap<&Msaft, usize> = msafts.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let elements = g.dihedral_elements();
    let mut seen = vec![false; msafts.len()];
    let mut out = Vec::new();
    for start in 0..msafts.len() {
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        for &e in &elements {
            let image = dihedral_image_msaft(g, e, &msafts[start]);
            match index.get(&image) {
                Some(&k) => {
                    if !seen[k] {
                        seen[k] = true;
                        members.push(k);
                    }
                }
                None => return Err(Error::NotActionClosed),
            }
        }
        let rep = members.iter().map(|&k| &msafts[k]).min().unwrap().clone();
        out.push((rep, members.len()));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binom::msaft_count_closed;
    use num_bigint::BigUint;

    fn sec(u: usize, v: usize) -> Secant {
        Secant::new(u, v)
    }

    fn set_of(g: &NGon, secants: &[(usize, usize)]) -> SecantSet {
        SecantSet::from_secants(g, secants.iter().map(|&(u, v)| sec(u, v)))
    }

    #[test]
    fn triple_enumeration_examples() {
        assert!(enumerate_forbidden_triples(&NGon::new(3)).is_empty());

        let g = NGon::new(4);
        let triples = enumerate_forbidden_triples(&g);
        assert_eq!(triples.len(), 2);
        // Canonical member order is ascending triangular index.
        assert!(triples.contains(&[sec(1, 1), sec(0, 2), sec(3, 3)]));
        assert!(triples.contains(&[sec(0, 0), sec(2, 2), sec(1, 3)]));
        // Canonical index order inside each triple.
        for t in &triples {
            assert!(t[0] < t[1] && t[1] < t[2]);
        }

        let g = NGon::new(7);
        let triples = enumerate_forbidden_triples(&g);
        let mut target = [sec(1, 6), sec(2, 5), sec(3, 4)];
        target.sort();
        assert!(triples.contains(&target));
    }

    #[test]
    fn is_msaft_examples() {
        let g = NGon::new(3);
        let all = SecantSet::from_secants(&g, g.all_secants());
        assert!(is_msaft(&g, &all));

        let g = NGon::new(4);
        let mut eight = SecantSet::from_secants(&g, g.all_secants());
        eight.remove(sec(0, 2));
        eight.remove(sec(1, 3));
        assert!(is_msaft(&g, &eight));
        let all = SecantSet::from_secants(&g, g.all_secants());
        assert!(!is_msaft(&g, &all));
    }

    #[test]
    fn msaft_construction_rejects_bad_sets() {
        let g = NGon::new(4);
        let too_small = set_of(&g, &[(0, 0), (1, 1)]);
        assert_eq!(
            Msaft::new(&g, too_small),
            Err(Error::NotAMsaft("the set is not inclusion-maximal"))
        );
        let all = SecantSet::from_secants(&g, g.all_secants());
        assert_eq!(
            Msaft::new(&g, all),
            Err(Error::NotAMsaft("the set contains a forbidden triple"))
        );
    }

    #[test]
    fn bruteforce_counts_match_closed_form() {
        for n in 3..=6u64 {
            let g = NGon::new(n as usize);
            let got = enumerate_msafts_bruteforce(&g).unwrap();
            assert_eq!(BigUint::from(got.len()), msaft_count_closed(n), "n = {n}");
            // Sorted, deduplicated, every member verified.
            let ft = ForbiddenTriples::new(&g);
            for w in got.windows(2) {
                assert!(w[0] < w[1]);
            }
            for m in &got {
                assert!(ft.is_msaft(m.set()));
            }
        }
    }

    #[test]
    fn bruteforce_bound_guard() {
        let g = NGon::new(9);
        assert_eq!(
            enumerate_msafts_bruteforce(&g),
            Err(Error::BoundExceeded {
                operation: "brute-force maximal-set enumeration",
                n: 9,
                bound: 8
            })
        );
    }

    #[test]
    fn walks_agree_with_bruteforce() {
        for n in 3..=6 {
            let g = NGon::new(n);
            assert_eq!(
                enumerate_msafts_via_walks(&g),
                enumerate_msafts_bruteforce(&g).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn n3_walk_is_a_family_bijection() {
        let g = NGon::new(3);
        let msafts = enumerate_msafts_bruteforce(&g).unwrap();
        assert_eq!(msafts.len(), 1);
        assert_eq!(msafts[0].len(), 6);
        let walk = secant_walk(&g, &msafts[0]).unwrap();
        for (src, img) in walk.pairs() {
            assert_eq!(
                (g.family_of(*src) + 1) % 3,
                g.family_of(*img),
                "images land in the next family"
            );
        }
        assert_eq!(walk.cycle_from(sec(0, 0)).len(), 6);
    }

    #[test]
    fn every_small_msaft_has_unique_walk_and_moving_property() {
        for n in 3..=6 {
            let g = NGon::new(n);
            for m in enumerate_msafts_bruteforce(&g).unwrap() {
                let walk = secant_walk(&g, &m).expect("walk must exist uniquely");
                assert_eq!(walk.len(), 2 * n);
                assert_eq!(walk.cycle_from(m.secants()[0]).len(), 2 * n);
                assert!(check_moving_lemma(&g, &m), "n = {n}, {:?}", m.secants());
            }
        }
    }

    #[test]
    fn forced_walk_images_for_n5() {
        let g = NGon::new(5);
        let mut seen = 0;
        for m in enumerate_msafts_bruteforce(&g).unwrap() {
            if !(m.contains(sec(0, 0)) && m.contains(sec(1, 1))) {
                continue;
            }
            seen += 1;
            let walk = secant_walk(&g, &m).unwrap();
            // The loop's only right neighbor, and the only left neighbor of
            // the next loop, pin down two images.
            assert_eq!(walk.image(sec(0, 0)), Some(sec(0, 1)));
            assert_eq!(walk.image(sec(0, 1)), Some(sec(1, 1)));
        }
        assert!(seen > 0, "some maximal set contains both loops");
    }

    #[test]
    fn dihedral_class_counts() {
        let cases = [(3, 1), (4, 3), (5, 12)];
        for (n, classes) in cases {
            let g = NGon::new(n);
            let msafts = enumerate_msafts_bruteforce(&g).unwrap();
            let orbits = dihedral_classes(&g, &msafts).unwrap();
            assert_eq!(orbits.len(), classes, "n = {n}");
            assert_eq!(
                orbits.iter().map(|(_, size)| size).sum::<usize>(),
                msafts.len(),
                "orbit sizes partition the list"
            );
            for (rep, _) in &orbits {
                assert!(msafts.binary_search(rep).is_ok());
            }
        }
        // The single n=3 orbit is a fixed point of the whole group.
        let g = NGon::new(3);
        let orbits = dihedral_classes(&g, &enumerate_msafts_bruteforce(&g).unwrap()).unwrap();
        assert_eq!(orbits[0].1, 1);
    }

    #[test]
    fn dihedral_classes_reject_partial_lists() {
        let g = NGon::new(4);
        let msafts = enumerate_msafts_bruteforce(&g).unwrap();
        let partial = &msafts[..msafts.len() - 1];
        assert_eq!(
            dihedral_classes(&g, partial).unwrap_err(),
            Error::NotActionClosed
        );
    }

    #[test]
    fn maximality_witnesses_exist() {
        // For each maximal set and each outside secant, two members complete
        // a forbidden triple with it.
        for n in [4, 5] {
            let g = NGon::new(n);
            let ft = ForbiddenTriples::new(&g);
            for m in enumerate_msafts_bruteforce(&g).unwrap() {
                for s in g.all_secants() {
                    if m.contains(s) {
                        continue;
                    }
                    let found = ft.completions[s.index()].iter().any(|&(a, b)| {
                        m.set().contains_idx(a as usize) && m.set().contains_idx(b as usize)
                    });
                    assert!(found, "n = {n}: {s} has no completion witness");
                }
            }
        }
    }
}
