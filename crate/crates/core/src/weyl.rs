//! Weyl group elements, parabolic cosets and double cosets.
//!
//! Elements are stored as permutations of the signed root set. Coset
//! enumeration runs on the orbit of the weight `ρ_J = Σ_{i∉J} ω_i`, whose
//! stabilizer is exactly `W_J`: minimal representatives of `W/W_J` are in
//! bijection with that orbit, and the length of a representative is the
//! layer in which its weight is first reached. Only two layers are ever
//! held in memory, so `W` itself is never materialised.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{fmt_nodes, sub_diagram_type, CartanType, DiagramAut, NodeSet, RootSystem};

/// A Weyl group element acting on signed root indices of its root system.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Box<[u16]>,
    length: u32,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        let np = rs.num_positive_roots() as u16;
        WeylElement {
            perm: (0..2 * np).collect(),
            length: 0,
        }
    }

    /// Product `s_{word[0]} · s_{word[1]} ⋯` of simple reflections (1-based).
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(rs);
        for &i in word {
            if i == 0 || i > rs.rank() {
                return Err(Error::NodeOutOfRange {
                    node: i,
                    rank: rs.rank(),
                });
            }
            w = w.right_mul_simple(rs, i);
        }
        Ok(w)
    }

    fn from_perm(rs: &RootSystem, perm: Box<[u16]>) -> Self {
        let np = rs.num_positive_roots();
        let length = perm[..np].iter().filter(|&&k| k as usize >= np).count() as u32;
        WeylElement { perm, length }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of the signed root with index `root`.
    pub fn apply(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    pub fn permutation(&self) -> &[u16] {
        &self.perm
    }

    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let t = rs.reflection_table(i - 1);
        let perm = self.perm.iter().map(|&k| t[k as usize]).collect();
        WeylElement::from_perm(rs, perm)
    }

    pub fn right_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let t = rs.reflection_table(i - 1);
        let perm = t.iter().map(|&k| self.perm[k as usize]).collect();
        WeylElement::from_perm(rs, perm)
    }

    /// `self · other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> Self {
        let perm = other.perm.iter().map(|&k| self.perm[k as usize]).collect();
        WeylElement::from_perm(rs, perm)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.perm.len()];
        for (k, &img) in self.perm.iter().enumerate() {
            inv[img as usize] = k as u16;
        }
        WeylElement {
            perm: inv.into(),
            length: self.length,
        }
    }

    /// `w(α_i) < 0`.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        !rs.is_positive(self.apply(i - 1))
    }

    /// `w⁻¹(α_i) < 0`.
    pub fn has_left_descent(&self, rs: &RootSystem, i: usize) -> bool {
        let target = (i - 1) as u16;
        let pre = self.perm.iter().position(|&k| k == target).expect("permutation");
        !rs.is_positive(pre)
    }

    /// A reduced word, found by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = vec![];
        while let Some(i) = (1..=rs.rank()).find(|&i| w.has_right_descent(rs, i)) {
            w = w.right_mul_simple(rs, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn longest(rs: &RootSystem) -> Self {
        let mut w = WeylElement::identity(rs);
        while let Some(i) = (1..=rs.rank()).find(|&i| !w.has_right_descent(rs, i)) {
            w = w.right_mul_simple(rs, i);
        }
        w
    }

    /// `σ w σ⁻¹` for a diagram automorphism `σ`.
    pub fn conjugate_by(&self, rs: &RootSystem, sigma: &DiagramAut) -> Self {
        let rp = sigma.root_permutation(rs);
        let mut perm = vec![0u16; self.perm.len()];
        for (k, &img) in self.perm.iter().enumerate() {
            perm[rp[k]] = rp[img as usize] as u16;
        }
        WeylElement {
            perm: perm.into(),
            length: self.length,
        }
    }
}

/// A minimal-length representative of a coset `w·W_J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRep {
    pub element: WeylElement,
    pub parabolic: NodeSet,
}

impl CosetRep {
    pub fn length(&self) -> u32 {
        self.element.length()
    }
}

/// One double coset `W_I · w · W_J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCosetCell {
    #[serde(skip)]
    pub min_rep: WeylElement,
    #[serde(skip)]
    pub left_nodes: NodeSet,
    #[serde(skip)]
    pub right_nodes: NodeSet,
    pub length: u32,
    /// Number of right `W_J`-cosets in the double coset.
    pub orbit_size: u64,
    pub star_invariant: bool,
    /// Nodes `i ∈ I` whose reflections fix the cell's weight; they generate
    /// `W_I ∩ w W_J w⁻¹` for the minimal representative `w`.
    #[serde(skip)]
    pub stabilizer_nodes: NodeSet,
}

impl DoubleCosetCell {
    /// Types of the components of `I ∩ w(J)`.
    pub fn stabilizer_type(&self, rs: &RootSystem) -> Vec<CartanType> {
        sub_diagram_type(rs, &self.stabilizer_nodes).expect("nodes come from rs")
    }
}

type Weight = Box<[i32]>;

fn reflect(cartan: &[Vec<i32>], mu: &[i32], i: usize) -> Weight {
    let c = mu[i];
    mu.iter()
        .enumerate()
        .map(|(k, &m)| m - c * cartan[k][i])
        .collect()
}

/// `ρ_J` in fundamental-weight coordinates for a 0-based mask of `J`.
fn rho_outside(in_j: &[bool]) -> Weight {
    in_j.iter().map(|&b| if b { 0 } else { 1 }).collect()
}

/// Next orbit layer: `s_i μ` for every `i` with `μ_i > 0`, deduplicated
/// and sorted.
fn next_layer(cartan: &[Vec<i32>], layer: &[Weight]) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    for mu in layer {
        for i in 0..mu.len() {
            if mu[i] > 0 {
                seen.insert(reflect(cartan, mu, i));
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Sizes of the length layers of `W/W_J` for an arbitrary Cartan matrix.
fn orbit_layer_sizes(cartan: &[Vec<i32>], in_j: &[bool]) -> Vec<u64> {
    let mut sizes = vec![];
    let mut layer = vec![rho_outside(in_j)];
    while !layer.is_empty() {
        sizes.push(layer.len() as u64);
        layer = next_layer(cartan, &layer);
    }
    sizes
}

fn mask(rs: &RootSystem, nodes: &NodeSet) -> Vec<bool> {
    (1..=rs.rank()).map(|i| nodes.contains(&i)).collect()
}

/// Number of minimal coset representatives of `W/W_J` of each length.
pub fn coset_length_counts(rs: &RootSystem, parabolic: &NodeSet) -> Result<Vec<u64>> {
    rs.check_nodes(parabolic)?;
    Ok(orbit_layer_sizes(rs.cartan(), &mask(rs, parabolic)))
}

/// Fundamental degrees in ascending order.
///
/// The partition of positive roots by height is conjugate to the partition
/// of the exponents; degrees are exponents plus one.
pub fn fundamental_degrees(rs: &RootSystem) -> Vec<u32> {
    let mut by_height: BTreeMap<u32, usize> = BTreeMap::new();
    for r in rs.positive_roots() {
        *by_height.entry(r.iter().sum::<i32>() as u32).or_default() += 1;
    }
    let max_h = by_height.keys().copied().max().unwrap_or(0);
    let count = |h: u32| by_height.get(&h).copied().unwrap_or(0);
    let mut degrees = vec![];
    for m in 1..=max_h {
        for _ in 0..count(m) - count(m + 1) {
            degrees.push(m + 1);
        }
    }
    degrees
}

/// `|W|` as the product of the fundamental degrees.
pub fn weyl_order(rs: &RootSystem) -> BigUint {
    let order = fundamental_degrees(rs)
        .iter()
        .fold(BigUint::from(1u32), |acc, &d| acc * d);
    if rs.rank() <= 7 {
        debug_assert_eq!(order, weyl_order_by_orbits(rs));
    }
    order
}

/// `|W_S|` for a node set `S`, by the orbit-stabilizer recursion
/// `|W_S| = |W_S / W_{S∖k}| · |W_{S∖k}|` with explicit orbit enumeration.
pub fn parabolic_order(rs: &RootSystem, nodes: &NodeSet) -> Result<BigUint> {
    rs.check_nodes(nodes)?;
    let mut order = BigUint::from(1u32);
    let mut s = nodes.clone();
    while let Some(&k) = s.iter().next_back() {
        let sub = rs.sub_cartan(&s);
        let in_j: Vec<bool> = s.iter().map(|&i| i != k).collect();
        let cosets: u64 = orbit_layer_sizes(&sub, &in_j).iter().sum();
        order *= cosets;
        s.remove(&k);
    }
    Ok(order)
}

/// `|W|` by explicit orbit enumeration, independent of the degree formula.
pub fn weyl_order_by_orbits(rs: &RootSystem) -> BigUint {
    parabolic_order(rs, &rs.all_nodes()).expect("all nodes are valid")
}

/// Length of the longest minimal representative of `W/W_J`: the number of
/// positive roots not supported on `J`.
pub fn longest_element_length(rs: &RootSystem, parabolic: &NodeSet) -> Result<u32> {
    rs.check_nodes(parabolic)?;
    Ok((rs.num_positive_roots() - rs.num_positive_roots_in(parabolic)) as u32)
}

/// Streaming enumeration of the minimal representatives of `W/W_J`,
/// ordered by length and then by the element's permutation.
pub struct MinimalCosetReps<'a> {
    rs: &'a RootSystem,
    parabolic: NodeSet,
    layer: Vec<(Weight, WeylElement)>,
    pos: usize,
}

impl<'a> MinimalCosetReps<'a> {
    fn advance(&mut self) {
        let cartan = self.rs.cartan();
        let mut next: HashMap<Weight, WeylElement> = HashMap::new();
        for (mu, w) in &self.layer {
            for i in 0..mu.len() {
                if mu[i] > 0 {
                    let nu = reflect(cartan, mu, i);
                    next.entry(nu)
                        .or_insert_with(|| w.left_mul_simple(self.rs, i + 1));
                }
            }
        }
        let mut layer: Vec<(Weight, WeylElement)> = next.into_iter().collect();
        layer.sort_unstable_by(|a, b| a.1.cmp(&b.1));
        self.layer = layer;
        self.pos = 0;
    }
}

impl Iterator for MinimalCosetReps<'_> {
    type Item = CosetRep;

    fn next(&mut self) -> Option<CosetRep> {
        if self.pos == self.layer.len() {
            if self.layer.is_empty() {
                return None;
            }
            self.advance();
            if self.layer.is_empty() {
                return None;
            }
        }
        let element = self.layer[self.pos].1.clone();
        self.pos += 1;
        Some(CosetRep {
            element,
            parabolic: self.parabolic.clone(),
        })
    }
}

pub fn minimal_coset_reps<'a>(rs: &'a RootSystem, parabolic: &NodeSet) -> Result<MinimalCosetReps<'a>> {
    rs.check_nodes(parabolic)?;
    Ok(MinimalCosetReps {
        rs,
        parabolic: parabolic.clone(),
        layer: vec![(rho_outside(&mask(rs, parabolic)), WeylElement::identity(rs))],
        pos: 0,
    })
}

/// Every element of `W`, streamed. Refused above rank 7.
pub fn full_group(rs: &RootSystem) -> Result<MinimalCosetReps<'_>> {
    if rs.rank() > 7 {
        return Err(Error::EnumerationTooLarge(rs.ctype().to_string()));
    }
    minimal_coset_reps(rs, &NodeSet::new())
}

/// Moves `μ` into the `I`-dominant chamber, returning the reflections used.
fn dominate(cartan: &[Vec<i32>], mu: &[i32], left: &[usize]) -> (Weight, Vec<usize>) {
    let mut cur: Weight = mu.into();
    let mut word = vec![];
    while let Some(&i) = left.iter().find(|&&i| cur[i] < 0) {
        cur = reflect(cartan, &cur, i);
        word.push(i);
    }
    (cur, word)
}

/// Word of the minimal coset representative `w` with `w ρ_J = μ`.
fn word_for_weight(cartan: &[Vec<i32>], mu: &[i32]) -> Vec<usize> {
    let all: Vec<usize> = (0..mu.len()).collect();
    // μ = s_{i1} ⋯ s_{ik} ρ_J where i1, i2, … are the reflections used to
    // reach the dominant chamber.
    dominate(cartan, mu, &all).1.into_iter().map(|i| i + 1).collect()
}

/// Partitions `W/W_right` into left `W_left`-orbits.
///
/// Cells come back ordered by length and then by minimal representative.
/// `star`, when given, must stabilize both node sets; a cell is
/// star-invariant when the automorphism maps it onto itself.
pub fn double_cosets(
    rs: &RootSystem,
    left: &NodeSet,
    right: &NodeSet,
    star: Option<&DiagramAut>,
) -> Result<Vec<DoubleCosetCell>> {
    rs.check_nodes(left)?;
    rs.check_nodes(right)?;
    if let Some(s) = star {
        if s.rank() != rs.rank() {
            return Err(Error::NotADiagramAutomorphism(s.to_string()));
        }
        for set in [left, right] {
            if !s.stabilizes(set) {
                return Err(Error::StarDoesNotStabilize(fmt_nodes(set)));
            }
        }
    }
    let cartan = rs.cartan();
    let left0: Vec<usize> = left.iter().map(|i| i - 1).collect();

    let mut length_of: HashMap<Weight, u32> = HashMap::new();
    let mut cells: HashMap<Weight, u64> = HashMap::new();
    let mut layer = vec![rho_outside(&mask(rs, right))];
    let mut len = 0u32;
    while !layer.is_empty() {
        for mu in &layer {
            length_of.insert(mu.clone(), len);
            let (dom, _) = dominate(cartan, mu, &left0);
            *cells.entry(dom).or_default() += 1;
        }
        layer = next_layer(cartan, &layer);
        len += 1;
    }

    let mut out: Vec<DoubleCosetCell> = cells
        .into_iter()
        .map(|(mu, orbit_size)| {
            let star_invariant = star.is_none_or(|s| {
                let mut img = vec![0; mu.len()];
                for (i, &c) in mu.iter().enumerate() {
                    img[s.apply(i + 1) - 1] = c;
                }
                img[..] == mu[..]
            });
            let min_rep = WeylElement::from_word(rs, &word_for_weight(cartan, &mu))
                .expect("word uses valid nodes");
            debug_assert_eq!(min_rep.length(), length_of[&mu]);
            DoubleCosetCell {
                length: length_of[&mu],
                orbit_size,
                star_invariant,
                stabilizer_nodes: left.iter().copied().filter(|&i| mu[i - 1] == 0).collect(),
                min_rep,
                left_nodes: left.clone(),
                right_nodes: right.clone(),
            }
        })
        .collect();
    out.sort_by(|a, b| (a.length, &a.min_rep).cmp(&(b.length, &b.min_rep)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn nodes(v: &[usize]) -> NodeSet {
        v.iter().copied().collect()
    }

    #[test]
    fn orders() {
        assert_eq!(weyl_order(&rs("A1")), BigUint::from(2u32));
        assert_eq!(weyl_order(&rs("E6")), BigUint::from(51840u32));
        assert_eq!(weyl_order(&rs("E7")), BigUint::from(2903040u32));
        assert_eq!(weyl_order(&rs("E8")), BigUint::from(696729600u32));
        assert_eq!(weyl_order_by_orbits(&rs("E8")), BigUint::from(696729600u32));
        assert_eq!(weyl_order(&rs("F4")), BigUint::from(1152u32));
        assert_eq!(weyl_order(&rs("G2")), BigUint::from(12u32));
        assert_eq!(weyl_order(&rs("B3")), BigUint::from(48u32));
    }

    #[test]
    fn degrees() {
        assert_eq!(fundamental_degrees(&rs("A1")), [2]);
        assert_eq!(fundamental_degrees(&rs("E6")), [2, 5, 6, 8, 9, 12]);
        assert_eq!(fundamental_degrees(&rs("E7")), [2, 6, 8, 10, 12, 14, 18]);
        assert_eq!(fundamental_degrees(&rs("E8")), [2, 8, 12, 14, 18, 20, 24, 30]);
        assert_eq!(fundamental_degrees(&rs("D4")), [2, 4, 4, 6]);
        assert_eq!(fundamental_degrees(&rs("F4")), [2, 6, 8, 12]);
    }

    #[test]
    fn coset_reps_a1() {
        let a1 = rs("A1");
        let reps: Vec<_> = minimal_coset_reps(&a1, &NodeSet::new()).unwrap().collect();
        assert_eq!(reps.iter().map(CosetRep::length).collect::<Vec<_>>(), [0, 1]);
    }

    #[test]
    fn coset_reps_e6_levi_a5() {
        let e6 = rs("E6");
        let j = nodes(&[1, 3, 4, 5, 6]);
        let reps: Vec<_> = minimal_coset_reps(&e6, &j).unwrap().collect();
        assert_eq!(reps.len(), 72);
        assert_eq!(reps.iter().map(CosetRep::length).max(), Some(21));
        for r in &reps {
            for &jj in &j {
                assert!(!r.element.has_right_descent(&e6, jj));
            }
        }
        let distinct: HashSet<_> = reps.iter().map(|r| r.element.clone()).collect();
        assert_eq!(distinct.len(), 72);
        // Order is by length then by element.
        assert!(reps
            .windows(2)
            .all(|w| (w[0].length(), &w[0].element) < (w[1].length(), &w[1].element)));
    }

    #[test]
    fn coset_reps_e8_levi_e7() {
        let e8 = rs("E8");
        let reps: Vec<_> = minimal_coset_reps(&e8, &nodes(&[1, 2, 3, 4, 5, 6, 7]))
            .unwrap()
            .collect();
        assert_eq!(reps.len(), 240);
        assert_eq!(reps.last().unwrap().length(), 57);
    }

    #[test]
    fn full_group_guard() {
        assert!(full_group(&rs("E8")).is_err());
        assert_eq!(full_group(&rs("B3")).unwrap().count(), 48);
    }

    #[test]
    fn element_basics() {
        let e6 = rs("E6");
        let w0 = WeylElement::longest(&e6);
        assert_eq!(w0.length(), 36);
        assert_eq!(w0.reduced_word(&e6).len(), 36);
        assert_eq!(w0.compose(&e6, &w0), WeylElement::identity(&e6));
        let w = WeylElement::from_word(&e6, &[1, 3, 4, 2]).unwrap();
        assert_eq!(w.length(), 4);
        assert_eq!(WeylElement::from_word(&e6, &w.reduced_word(&e6)).unwrap(), w);
        assert_eq!(w.compose(&e6, &w.inverse()), WeylElement::identity(&e6));
        assert!(w.has_right_descent(&e6, 2));
        assert!(w.has_left_descent(&e6, 1));
        assert!(!w.has_left_descent(&e6, 2));
        let s1 = WeylElement::from_word(&e6, &[1]).unwrap();
        assert_eq!(s1.right_mul_simple(&e6, 1), WeylElement::identity(&e6));
        assert!(WeylElement::from_word(&e6, &[7]).is_err());
    }

    #[test]
    fn conjugation_by_diagram() {
        let e6 = rs("E6");
        let sigma = crate::rootsys::opposition_involution(&e6);
        let w = WeylElement::from_word(&e6, &[1, 3]).unwrap();
        let expected = WeylElement::from_word(&e6, &[6, 5]).unwrap();
        assert_eq!(w.conjugate_by(&e6, &sigma), expected);
        // Conjugation by the opposition involution is conjugation by w₀.
        let w0 = WeylElement::longest(&e6);
        assert_eq!(w0.compose(&e6, &w).compose(&e6, &w0), expected);
    }

    #[test]
    fn longest_lengths() {
        assert_eq!(longest_element_length(&rs("E6"), &nodes(&[1, 3, 4, 5, 6])).unwrap(), 21);
        assert_eq!(longest_element_length(&rs("E6"), &nodes(&[2, 3, 4, 5])).unwrap(), 24);
        assert_eq!(longest_element_length(&rs("E7"), &nodes(&[2, 3, 4, 5, 6, 7])).unwrap(), 33);
    }

    #[test]
    fn double_cosets_e6() {
        let e6 = rs("E6");
        let star = crate::rootsys::opposition_involution(&e6);
        let kernel = nodes(&[3, 4, 5]);
        let cells = double_cosets(&e6, &kernel, &nodes(&[1, 3, 4, 5, 6]), Some(&star)).unwrap();
        assert_eq!(cells.iter().map(|c| c.orbit_size).sum::<u64>(), 72);
        let tate: Vec<u32> = cells
            .iter()
            .filter(|c| c.orbit_size == 1 && c.star_invariant)
            .map(|c| c.length)
            .collect();
        assert_eq!(tate, [0, 6, 15, 21]);
        for c in &cells {
            for &i in &kernel {
                assert!(!c.min_rep.has_left_descent(&e6, i));
            }
            for &j in &c.right_nodes {
                assert!(!c.min_rep.has_right_descent(&e6, j));
            }
            let stab = parabolic_order(&e6, &c.stabilizer_nodes).unwrap();
            assert_eq!(BigUint::from(24u32), stab * c.orbit_size);
        }
    }

    #[test]
    fn double_cosets_empty_left() {
        let d4 = rs("D4");
        let j = nodes(&[1, 2]);
        let cells = double_cosets(&d4, &NodeSet::new(), &j, None).unwrap();
        let total: u64 = coset_length_counts(&d4, &j).unwrap().iter().sum();
        assert_eq!(cells.len() as u64, total);
        assert!(cells.iter().all(|c| c.orbit_size == 1 && c.star_invariant));
    }

    #[test]
    fn star_must_stabilize() {
        let e6 = rs("E6");
        let star = crate::rootsys::opposition_involution(&e6);
        let err = double_cosets(&e6, &nodes(&[1]), &nodes(&[2]), Some(&star));
        assert!(matches!(err, Err(Error::StarDoesNotStabilize(_))));
    }
}
