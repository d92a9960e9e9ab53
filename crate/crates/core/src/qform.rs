//! Diagonal quadratic forms over ℝ, up to isometry.
//!
//! A real diagonal form is determined by how many of its entries are
//! positive and how many negative, so forms are stored as that pair.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" | "−" | "−1" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("expected a sign, got {other:?}"))),
        }
    }
}

/// Parses `"+,-,+"` into three signs.
pub fn parse_gamma(s: &str) -> Result<[Sign; 3]> {
    let signs: Vec<Sign> = s.split(',').map(str::parse).collect::<Result<_>>()?;
    signs
        .try_into()
        .map_err(|v: Vec<Sign>| Error::Parse(format!("expected 3 signs, got {}", v.len())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct DiagFormR {
    pub positive: usize,
    pub negative: usize,
}

impl DiagFormR {
    pub fn new(positive: usize, negative: usize) -> Self {
        DiagFormR { positive, negative }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let positive = signs.iter().filter(|&&s| s == Sign::Plus).count();
        DiagFormR::new(positive, signs.len() - positive)
    }

    pub fn hyperbolic_planes(n: usize) -> Self {
        DiagFormR::new(n, n)
    }

    /// Diagonal entries, positives first.
    pub fn entries(&self) -> Vec<Sign> {
        let mut v = vec![Sign::Plus; self.positive];
        v.extend(std::iter::repeat_n(Sign::Minus, self.negative));
        v
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative
    }

    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn witt_index(&self) -> usize {
        self.positive.min(self.negative)
    }

    pub fn is_anisotropic(&self) -> bool {
        self.witt_index() == 0
    }

    pub fn direct_sum(&self, other: &DiagFormR) -> DiagFormR {
        DiagFormR::new(self.positive + other.positive, self.negative + other.negative)
    }

    pub fn tensor(&self, other: &DiagFormR) -> DiagFormR {
        DiagFormR::new(
            self.positive * other.positive + self.negative * other.negative,
            self.positive * other.negative + self.negative * other.positive,
        )
    }

    /// `⟨s⟩ · self`.
    pub fn scale_by_sign(&self, s: Sign) -> DiagFormR {
        match s {
            Sign::Plus => *self,
            Sign::Minus => DiagFormR::new(self.negative, self.positive),
        }
    }

    /// `k · self`, the orthogonal sum of `k` copies.
    pub fn multiple(&self, k: usize) -> DiagFormR {
        DiagFormR::new(self.positive * k, self.negative * k)
    }
}

impl fmt::Display for DiagFormR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(Sign::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraKind {
    Quaternion,
    Octonion,
}

impl AlgebraKind {
    pub fn dim(self) -> usize {
        match self {
            AlgebraKind::Quaternion => 4,
            AlgebraKind::Octonion => 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompositionAlgebraR {
    pub kind: AlgebraKind,
    /// Division algebra with positive definite norm; otherwise split.
    pub definite: bool,
}

impl CompositionAlgebraR {
    pub fn quaternion(definite: bool) -> Self {
        CompositionAlgebraR {
            kind: AlgebraKind::Quaternion,
            definite,
        }
    }

    pub fn octonion(definite: bool) -> Self {
        CompositionAlgebraR {
            kind: AlgebraKind::Octonion,
            definite,
        }
    }

    /// Parses `definite` or `split`.
    pub fn parse(kind: AlgebraKind, s: &str) -> Result<Self> {
        let definite = match s.trim().to_ascii_lowercase().as_str() {
            "definite" | "division" | "compact" => true,
            "split" => false,
            other => {
                return Err(Error::Parse(format!(
                    "expected `definite` or `split`, got {other:?}"
                )))
            }
        };
        Ok(CompositionAlgebraR { kind, definite })
    }
}

/// Norm form, or its pure part (the restriction to the trace-zero
/// subspace, i.e. the norm minus one `⟨1⟩`).
pub fn norm_form(alg: CompositionAlgebraR, pure_part: bool) -> DiagFormR {
    let n = alg.kind.dim();
    let full = if alg.definite {
        DiagFormR::new(n, 0)
    } else {
        DiagFormR::hyperbolic_planes(n / 2)
    };
    if pure_part {
        DiagFormR::new(full.positive - 1, full.negative)
    } else {
        full
    }
}

/// Killing form of the E₇ group built from a quaternion algebra `q`, an
/// octonion algebra `o` and scalars with signs `gamma`:
///
/// `⟨−1⟩(4 n'_O ⊥ 3⟨2⟩ n'_Q ⊥ ⟨γ₁γ₂⁻¹, γ₂γ₃⁻¹, γ₃γ₁⁻¹⟩ n_O n_Q)`.
pub fn af_killing_form_e7(
    q: CompositionAlgebraR,
    o: CompositionAlgebraR,
    gamma: [Sign; 3],
) -> Result<DiagFormR> {
    if q.kind != AlgebraKind::Quaternion {
        return Err(Error::Precondition("first algebra must be a quaternion algebra".into()));
    }
    if o.kind != AlgebraKind::Octonion {
        return Err(Error::Precondition("second algebra must be an octonion algebra".into()));
    }
    let [g1, g2, g3] = gamma;
    let gammas = DiagFormR::from_signs(&[g1 * g2, g2 * g3, g3 * g1]);
    let inner = norm_form(o, true)
        .multiple(4)
        .direct_sum(&norm_form(q, true).multiple(3))
        .direct_sum(&gammas.tensor(&norm_form(o, false)).tensor(&norm_form(q, false)));
    Ok(inner.scale_by_sign(Sign::Minus))
}

/// Every `(q, o, γ)` input: two choices for each algebra, eight for `γ`.
pub fn af_e7_input_grid() -> Vec<(CompositionAlgebraR, CompositionAlgebraR, [Sign; 3])> {
    let mut out = vec![];
    for qd in [true, false] {
        for od in [true, false] {
            for g1 in Sign::BOTH {
                for g2 in Sign::BOTH {
                    for g3 in Sign::BOTH {
                        out.push((
                            CompositionAlgebraR::quaternion(qd),
                            CompositionAlgebraR::octonion(od),
                            [g1, g2, g3],
                        ));
                    }
                }
            }
        }
    }
    out
}
