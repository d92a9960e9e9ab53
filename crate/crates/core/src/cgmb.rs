//! Motive skeletons of isotropic flag varieties via parabolic double cosets,
//! and exact checks of motivic decompositions at the level of Poincaré
//! polynomials over a splitting field.
//!
//! A Tate summand of `M(X)` is detected by a double coset
//! `W_kernel · w · W_Θ` that consists of a single right coset and is stable
//! under the `*`-action; its twist is the length of the minimal
//! representative.

use std::collections::HashSet;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jinv::{self, GroupLabel};
use crate::poincare::{poincare_poly, FlagVariety};
use crate::polyring::IntPoly;
use crate::rootsys::{DiagramAut, NodeSet, RootSystem};
use crate::weyl::double_cosets;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MotiveKind {
    Tate,
    UpperBlock { poly: IntPoly },
    /// `cor_{K/F}(Spec K)` for a quadratic extension `K/F`; two points over
    /// the splitting field.
    CorQuadratic,
}

impl MotiveKind {
    /// Poincaré polynomial over the splitting field.
    pub fn poly(&self) -> IntPoly {
        match self {
            MotiveKind::Tate => IntPoly::one(),
            MotiveKind::UpperBlock { poly } => poly.clone(),
            MotiveKind::CorQuadratic => IntPoly::constant(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotiveTerm {
    #[serde(flatten)]
    pub kind: MotiveKind,
    pub shift: usize,
}

impl MotiveTerm {
    pub fn tate(shift: usize) -> Self {
        MotiveTerm {
            kind: MotiveKind::Tate,
            shift,
        }
    }

    pub fn upper(poly: IntPoly, shift: usize) -> Self {
        MotiveTerm {
            kind: MotiveKind::UpperBlock { poly },
            shift,
        }
    }

    pub fn cor_quadratic(shift: usize) -> Self {
        MotiveTerm {
            kind: MotiveKind::CorQuadratic,
            shift,
        }
    }

    pub fn contribution(&self) -> IntPoly {
        self.kind.poly().shift(self.shift)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub total: IntPoly,
    pub terms: Vec<MotiveTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    pub holds: bool,
    /// `total − Σ contributions`.
    pub residual: IntPoly,
}

pub fn check_decomposition(d: &Decomposition) -> DecompositionCheck {
    let sum = d
        .terms
        .iter()
        .fold(IntPoly::zero(), |acc, t| &acc + &t.contribution());
    let residual = &d.total - &sum;
    DecompositionCheck {
        holds: residual.is_zero(),
        residual,
    }
}

/// Twists of the Tate summands: lengths of the singleton, star-invariant
/// cells of `W_kernel \ W / W_target`, ascending.
pub fn tate_skeleton(
    rs: &RootSystem,
    kernel: &NodeSet,
    target: &NodeSet,
    star: &DiagramAut,
) -> Result<Vec<u32>> {
    let cells = double_cosets(rs, kernel, target, Some(star))?;
    let mut shifts: Vec<u32> = cells
        .iter()
        .filter(|c| c.orbit_size == 1 && c.star_invariant)
        .map(|c| c.length)
        .collect();
    shifts.sort_unstable();
    Ok(shifts)
}

/// One placement in a residual witness: `blocks[block] · t^shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Placement {
    pub block: usize,
    pub shift: usize,
}

/// Writes `residual` as a nonnegative combination of shifted blocks.
///
/// The search always covers the lowest remaining exponent, trying blocks
/// from highest degree down (ties: larger value at 1, then lower index), and
/// memoises residuals already shown infeasible. Returns one witness sorted
/// by `(shift, block)`, or `None` when no combination exists.
pub fn express_residual(residual: &IntPoly, blocks: &[IntPoly]) -> Result<Option<Vec<Placement>>> {
    if !residual.has_nonnegative_coeffs() {
        return Err(Error::Precondition(format!(
            "residual {residual} has a negative coefficient"
        )));
    }
    for b in blocks {
        if b.is_zero() || !b.has_nonnegative_coeffs() {
            return Err(Error::Precondition(format!(
                "block {b} must be nonzero with nonnegative coefficients"
            )));
        }
    }
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by(|&a, &b| {
        blocks[b]
            .degree()
            .cmp(&blocks[a].degree())
            .then_with(|| blocks[b].value_at_one().cmp(&blocks[a].value_at_one()))
            .then(a.cmp(&b))
    });

    let mut search = Search {
        blocks,
        order,
        dead: HashSet::new(),
        witness: vec![],
    };
    let mut state: Vec<BigInt> = residual.coeffs().to_vec();
    if search.run(&mut state) {
        let mut w = search.witness;
        w.sort_by_key(|p| (p.shift, p.block));
        Ok(Some(w))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    blocks: &'a [IntPoly],
    order: Vec<usize>,
    dead: HashSet<Vec<BigInt>>,
    witness: Vec<Placement>,
}

impl Search<'_> {
    fn run(&mut self, state: &mut Vec<BigInt>) -> bool {
        while state.last().is_some_and(Zero::is_zero) {
            state.pop();
        }
        let Some(e) = state.iter().position(|c| !c.is_zero()) else {
            return true;
        };
        if self.dead.contains(state.as_slice()) {
            return false;
        }
        for k in 0..self.order.len() {
            let idx = self.order[k];
            let block = &self.blocks[idx];
            let low = block.low_degree().expect("blocks are nonzero");
            let Some(shift) = e.checked_sub(low) else {
                continue;
            };
            if shift + block.coeffs().len() > state.len() {
                continue;
            }
            let fits = block
                .coeffs()
                .iter()
                .enumerate()
                .all(|(i, c)| &state[shift + i] >= c);
            if !fits {
                continue;
            }
            let mut next = state.clone();
            for (i, c) in block.coeffs().iter().enumerate() {
                next[shift + i] -= c;
            }
            debug_assert!(next.iter().all(|c| !c.is_negative()));
            self.witness.push(Placement { block: idx, shift });
            if self.run(&mut next) {
                return true;
            }
            self.witness.pop();
        }
        self.dead.insert(state.clone());
        false
    }
}

/// Recomputes `Σ blocks[p.block] · t^{p.shift}` from a witness.
pub fn witness_sum(blocks: &[IntPoly], witness: &[Placement]) -> IntPoly {
    witness
        .iter()
        .fold(IntPoly::zero(), |acc, p| &acc + &blocks[p.block].shift(p.shift))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDescriptor {
    pub name: String,
    pub kind: MotiveKind,
}

impl BlockDescriptor {
    pub fn poly(&self) -> IntPoly {
        self.kind.poly()
    }
}

/// Candidate indecomposable summands for `²E₆` varieties split by a
/// quadratic extension, with the J-invariant `(1,0,0)` and `X_{1,6}`
/// without zero-cycles of odd degree.
pub fn karpenko_blocks() -> Vec<BlockDescriptor> {
    let borel = jinv::profile(GroupLabel::E6Outer, vec![1, 0, 0])
        .and_then(|p| jinv::upper_motive_poly(&p))
        .expect("(1,0,0) is admissible for 2E6");
    vec![
        BlockDescriptor {
            name: "U(X_{1,6})".into(),
            kind: MotiveKind::UpperBlock {
                poly: IntPoly::one_plus_t_pow(15),
            },
        },
        BlockDescriptor {
            name: "U(X_{1,2,3,4,5,6})".into(),
            kind: MotiveKind::UpperBlock { poly: borel },
        },
        BlockDescriptor {
            name: "cor_{K/F}(Spec K)".into(),
            kind: MotiveKind::CorQuadratic,
        },
    ]
}

/// A decomposition identity stored as JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub provenance: String,
    pub total: FixtureTotal,
    pub terms: Vec<FixtureTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixtureTotal {
    /// Split Poincaré polynomial of a flag variety.
    FlagVariety { ambient: String, circled: Vec<usize> },
    Poly(IntPoly),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureTerm {
    /// `tate`, `upper_block` or `cor_quadratic`.
    pub kind: String,
    /// Product of these factors; only for `upper_block`.
    #[serde(default)]
    pub factors: Vec<IntPoly>,
    pub shifts: Vec<usize>,
}

const BUILTIN_FIXTURES: &[(&str, &str)] = &[
    ("henke-y1", include_str!("../data/fixtures/henke-y1.json")),
    ("projective-line", include_str!("../data/fixtures/projective-line.json")),
];

impl Fixture {
    pub fn builtin_names() -> Vec<&'static str> {
        BUILTIN_FIXTURES.iter().map(|(n, _)| *n).collect()
    }

    /// Loads `name` from `dir/<name>.json` when a directory is given and the
    /// file exists, otherwise from the bundled set.
    pub fn load(name: &str, dir: Option<&Path>) -> Result<Fixture> {
        if let Some(dir) = dir {
            let path = dir.join(format!("{name}.json"));
            if path.exists() {
                return Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?);
            }
        }
        let (_, src) = BUILTIN_FIXTURES
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::UnknownFixture {
                pattern: name.to_string(),
                available: Fixture::builtin_names().iter().map(|s| s.to_string()).collect(),
            })?;
        Ok(serde_json::from_str(src)?)
    }

    pub fn decomposition(&self) -> Result<Decomposition> {
        let total = match &self.total {
            FixtureTotal::Poly(p) => p.clone(),
            FixtureTotal::FlagVariety { ambient, circled } => {
                let fv = FlagVariety::new(ambient.parse()?, circled.iter().copied().collect())?;
                poincare_poly(&fv)?
            }
        };
        let mut terms = vec![];
        for t in &self.terms {
            let kind = match t.kind.as_str() {
                "tate" => MotiveKind::Tate,
                "cor_quadratic" => MotiveKind::CorQuadratic,
                "upper_block" => MotiveKind::UpperBlock {
                    poly: IntPoly::product(&t.factors),
                },
                other => return Err(Error::Parse(format!("unknown term kind {other:?}"))),
            };
            terms.extend(t.shifts.iter().map(|&shift| MotiveTerm {
                kind: kind.clone(),
                shift,
            }));
        }
        Ok(Decomposition { total, terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, opposition_involution};

    fn nodes(v: &[usize]) -> NodeSet {
        v.iter().copied().collect()
    }

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn skeletons_e6() {
        let e6 = build_root_system("E6".parse().unwrap()).unwrap();
        let star = opposition_involution(&e6);
        let k = nodes(&[3, 4, 5]);
        assert_eq!(tate_skeleton(&e6, &k, &nodes(&[1, 3, 4, 5, 6]), &star).unwrap(), [0, 6, 15, 21]);
        assert_eq!(tate_skeleton(&e6, &k, &nodes(&[2, 3, 4, 5]), &star).unwrap(), [0, 9, 15, 24]);
    }

    #[test]
    fn empty_kernel_gives_full_cell_decomposition() {
        let b3 = build_root_system("B3".parse().unwrap()).unwrap();
        let j = nodes(&[2, 3]);
        let id = DiagramAut::identity(3);
        let shifts = tate_skeleton(&b3, &NodeSet::new(), &j, &id).unwrap();
        let fv = FlagVariety::new("B3".parse().unwrap(), nodes(&[1])).unwrap();
        assert_eq!(
            IntPoly::from_exponents(shifts.iter().map(|&s| s as usize)),
            poincare_poly(&fv).unwrap()
        );
    }

    #[test]
    fn trivial_decompositions() {
        let d = Decomposition {
            total: p("1+t"),
            terms: vec![MotiveTerm::tate(0), MotiveTerm::tate(1)],
        };
        assert!(check_decomposition(&d).holds);
        let d = Decomposition {
            total: p("1+t^3"),
            terms: vec![MotiveTerm::tate(0)],
        };
        let c = check_decomposition(&d);
        assert!(!c.holds);
        assert_eq!(c.residual, p("t^3"));
        let d = Decomposition {
            total: p("2t^4 + t + t^4"),
            terms: vec![MotiveTerm::cor_quadratic(4), MotiveTerm::upper(p("1+t^3"), 1)],
        };
        assert!(check_decomposition(&d).holds);
    }

    #[test]
    fn residual_search() {
        let blocks = [p("1+t^3"), p("2")];
        let w = express_residual(&p("2t^2 + t + t^4"), &blocks).unwrap().unwrap();
        assert_eq!(
            w,
            [Placement { block: 0, shift: 1 }, Placement { block: 1, shift: 2 }]
        );
        assert_eq!(express_residual(&p("t"), &[p("1+t^3")]).unwrap(), None);
        assert_eq!(express_residual(&IntPoly::zero(), &blocks).unwrap(), Some(vec![]));
        assert!(express_residual(&p("t - t^2"), &blocks).is_err());
        assert!(express_residual(&p("t"), &[p("1-t")]).is_err());
        // Backtracking is needed: greedy 1+t^3 at 0 strands t^1.
        let w = express_residual(&p("1 + t + t^3 + t^4"), &[p("1+t^3"), p("1+t")]).unwrap();
        assert!(w.is_some());
        // Blocks with a zero constant term.
        let w = express_residual(&p("t^3 + t^5"), &[p("t + t^3")]).unwrap().unwrap();
        assert_eq!(w, [Placement { block: 0, shift: 2 }]);
    }

    #[test]
    fn karpenko_catalog() {
        let blocks = karpenko_blocks();
        assert_eq!(blocks.len(), 3);
        let polys: Vec<IntPoly> = blocks.iter().map(BlockDescriptor::poly).collect();
        assert_eq!(polys, [p("1+t^15"), p("1+t^3"), p("2")]);
        assert!(polys.iter().all(|q| q.value_at_one() == 2.into()));
    }

    #[test]
    fn fixtures_load() {
        for name in Fixture::builtin_names() {
            let f = Fixture::load(name, None).unwrap();
            assert!(!f.provenance.is_empty());
            assert!(check_decomposition(&f.decomposition().unwrap()).holds, "{name}");
        }
        assert!(matches!(
            Fixture::load("nope", None),
            Err(Error::UnknownFixture { .. })
        ));
    }
}
