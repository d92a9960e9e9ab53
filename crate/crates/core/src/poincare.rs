//! Poincaré polynomials and dimensions of flag varieties `G/P`.
//!
//! `X_I` is the variety of parabolic subgroups of type `I`: the circled
//! nodes `I` are the ones removed from the Levi, so the Levi of `X_I`
//! lives on the complement `Θ` of `I` and `P(X_I, t) = Σ_{w ∈ W^Θ} t^{ℓ(w)}`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{eval_rational, IntPoly};
use crate::rootsys::{build_root_system, fmt_nodes, CartanType, NodeSet, Series};
use crate::weyl::{coset_length_counts, fundamental_degrees, longest_element_length};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FlagVariety {
    pub ambient: CartanType,
    /// Circled nodes `I`.
    pub parabolic_type: NodeSet,
}

impl FlagVariety {
    pub fn new(ambient: CartanType, circled: NodeSet) -> Result<Self> {
        if circled.is_empty() {
            return Err(Error::Precondition(
                "a flag variety needs at least one circled node".into(),
            ));
        }
        if let Some(&node) = circled.iter().find(|&&n| n == 0 || n > ambient.rank) {
            return Err(Error::NodeOutOfRange {
                node,
                rank: ambient.rank,
            });
        }
        Ok(FlagVariety {
            ambient,
            parabolic_type: circled,
        })
    }

    /// Variety of Borel subgroups: every node circled.
    pub fn borel(ambient: CartanType) -> Self {
        FlagVariety {
            ambient,
            parabolic_type: (1..=ambient.rank).collect(),
        }
    }

    /// The Levi node set `Θ`, complement of the circled nodes.
    pub fn levi_nodes(&self) -> NodeSet {
        (1..=self.ambient.rank)
            .filter(|i| !self.parabolic_type.contains(i))
            .collect()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.parabolic_type.iter().map(|n| n.to_string()).collect();
        format!("{} X_{}", self.ambient, parts.join(","))
    }
}

type MemoKey = (Series, usize, NodeSet);

fn memo() -> &'static RwLock<HashMap<MemoKey, IntPoly>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, IntPoly>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Split Poincaré polynomial of `fv`, by coset enumeration.
pub fn poincare_poly(fv: &FlagVariety) -> Result<IntPoly> {
    let key = (fv.ambient.series, fv.ambient.rank, fv.parabolic_type.clone());
    if let Some(p) = memo().read().expect("memo lock").get(&key) {
        return Ok(p.clone());
    }
    let rs = build_root_system(fv.ambient.untwisted())?;
    let counts = coset_length_counts(&rs, &fv.levi_nodes())?;
    let p = IntPoly::new(counts.into_iter().map(Into::into).collect());
    memo().write().expect("memo lock").insert(key, p.clone());
    Ok(p)
}

pub fn dim_flag(fv: &FlagVariety) -> Result<u32> {
    let rs = build_root_system(fv.ambient.untwisted())?;
    longest_element_length(&rs, &fv.levi_nodes())
}

/// `∏ (t^{d_i} − 1)/(t − 1)` over the fundamental degrees.
pub fn borel_product_formula(ambient: CartanType) -> Result<IntPoly> {
    let rs = build_root_system(ambient.untwisted())?;
    Ok(fundamental_degrees(&rs)
        .iter()
        .fold(IntPoly::one(), |acc, &d| &acc * &IntPoly::geometric(1, d as usize)))
}

/// Conormed Poincaré polynomial, known only for `X_2` and `X_{1,6}` of
/// outer type `²E₆`.
pub fn conormed_poincare(fv: &FlagVariety) -> Result<IntPoly> {
    let a = fv.ambient;
    let is_2e6 = a.series == Series::E && a.rank == 6 && a.outer_twist == Some(2);
    let circled: Vec<usize> = fv.parabolic_type.iter().copied().collect();
    let m = IntPoly::t_pow_minus_one;
    let p = IntPoly::one_plus_t_pow;
    match (is_2e6, circled.as_slice()) {
        (true, [2]) => eval_rational(&[m(8), m(12), p(9)], &[m(1), m(4), p(3)]),
        (true, [1, 6]) => eval_rational(&[m(8), m(12), p(5), p(9)], &[m(1), p(1), m(4), p(4)]),
        _ => Err(Error::NotSpecifiedBySource(format!(
            "conormed Poincaré polynomial of {} {}",
            a,
            fmt_nodes(&fv.parabolic_type)
        ))),
    }
}
