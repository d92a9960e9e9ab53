//! J-invariant profiles at the prime 2 and the Poincaré polynomials of the
//! corresponding upper motives,
//!
//! ```text
//! ∏_i (t^{d_i · 2^{j_i}} − 1) / (t^{d_i} − 1).
//! ```
//!
//! The degrees `d_i` and caps `k_i` for each group ship as a versioned JSON
//! table (`data/jinv_max.json`). Inter-entry constraints are encoded as
//! non-increasing chains of positions.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupLabel {
    /// `2·²A₂`, a product of two groups of type `²A₂`.
    #[serde(rename = "2x2A2")]
    TwoA2Pair,
    #[serde(rename = "2A5")]
    A5Outer,
    #[serde(rename = "1D6")]
    D6Inner,
    #[serde(rename = "2E6")]
    E6Outer,
    E7,
    E8,
}

impl GroupLabel {
    pub const ALL: [GroupLabel; 6] = [
        GroupLabel::TwoA2Pair,
        GroupLabel::A5Outer,
        GroupLabel::D6Inner,
        GroupLabel::E6Outer,
        GroupLabel::E7,
        GroupLabel::E8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupLabel::TwoA2Pair => "2x2A2",
            GroupLabel::A5Outer => "2A5",
            GroupLabel::D6Inner => "1D6",
            GroupLabel::E6Outer => "2E6",
            GroupLabel::E7 => "E7",
            GroupLabel::E8 => "E8",
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Normalises `²E₆`, `2·²A₂`, `1 D6` and friends to ASCII (`2E6`, `2x2A2`, `1D6`).
pub(crate) fn normalize_label(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '¹' | '₁' => '1',
            '²' | '₂' => '2',
            '³' | '₃' => '3',
            '₄' => '4',
            '₅' => '5',
            '₆' => '6',
            '₇' => '7',
            '₈' => '8',
            '·' | '.' | '*' | '×' | 'x' | 'X' => 'x',
            c => c.to_ascii_uppercase(),
        })
        .collect()
}

impl FromStr for GroupLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match normalize_label(s).as_str() {
            "2x2A2" => GroupLabel::TwoA2Pair,
            "2A5" => GroupLabel::A5Outer,
            "1D6" | "D6" => GroupLabel::D6Inner,
            "2E6" => GroupLabel::E6Outer,
            "E7" => GroupLabel::E7,
            "E8" => GroupLabel::E8,
            "A1" | "2A2" | "C3" | "F4" => {
                return Err(Error::UnsupportedGroup(format!(
                    "{s}: no J-invariant table entry for this group"
                )))
            }
            _ => return Err(Error::UnknownLabel(s.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JTableEntry {
    pub group: GroupLabel,
    pub degrees: Vec<u32>,
    pub caps: Vec<u32>,
    /// Position chains along which `j` must be non-increasing.
    pub chains: Vec<Vec<usize>>,
    /// False when no inter-entry constraint is known beyond `j_i ≤ k_i`.
    pub constrained_by_source: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JTable {
    pub version: u32,
    pub prime: u32,
    pub groups: Vec<JTableEntry>,
}

const DEFAULT_TABLE: &str = include_str!("../data/jinv_max.json");

impl JTable {
    pub fn from_json(s: &str) -> Result<Self> {
        let t: JTable = serde_json::from_str(s)?;
        if t.prime != 2 {
            return Err(Error::Precondition(format!(
                "J-invariant tables are only supported at p = 2, got {}",
                t.prime
            )));
        }
        for e in &t.groups {
            if e.degrees.len() != e.caps.len() {
                return Err(Error::Parse(format!("{}: degrees and caps differ in length", e.group)));
            }
            if e.chains.iter().flatten().any(|&p| p >= e.degrees.len()) {
                return Err(Error::Parse(format!("{}: chain position out of range", e.group)));
            }
        }
        Ok(t)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        JTable::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn builtin() -> &'static JTable {
        static TABLE: OnceLock<JTable> = OnceLock::new();
        TABLE.get_or_init(|| JTable::from_json(DEFAULT_TABLE).expect("bundled J table parses"))
    }

    pub fn entry(&self, group: GroupLabel) -> Result<&JTableEntry> {
        self.groups
            .iter()
            .find(|e| e.group == group)
            .ok_or_else(|| Error::UnsupportedGroup(group.to_string()))
    }

    pub fn profile(&self, group: GroupLabel, values: Vec<u32>) -> Result<JProfile> {
        let e = self.entry(group)?;
        let p = JProfile {
            group,
            prime: self.prime,
            degrees: e.degrees.clone(),
            caps: e.caps.clone(),
            values,
        };
        p.check(e)?;
        Ok(p)
    }

    pub fn max_profile(&self, group: GroupLabel) -> Result<JProfile> {
        let e = self.entry(group)?;
        self.profile(group, e.caps.clone())
    }

    /// Every admissible `j` in lexicographic order.
    pub fn enumerate_admissible(&self, group: GroupLabel) -> Result<Admissible> {
        let e = self.entry(group)?;
        let mut profiles = vec![];
        let mut j = vec![0u32; e.caps.len()];
        loop {
            if chains_hold(&e.chains, &j) {
                profiles.push(JProfile {
                    group,
                    prime: self.prime,
                    degrees: e.degrees.clone(),
                    caps: e.caps.clone(),
                    values: j.clone(),
                });
            }
            // Odometer, last position fastest: lexicographic order.
            let Some(pos) = (0..j.len()).rev().find(|&i| j[i] < e.caps[i]) else {
                break;
            };
            j[pos] += 1;
            for x in &mut j[pos + 1..] {
                *x = 0;
            }
        }
        Ok(Admissible {
            profiles,
            unconstrained_by_source: !e.constrained_by_source,
        })
    }
}

fn chains_hold(chains: &[Vec<usize>], j: &[u32]) -> bool {
    chains
        .iter()
        .all(|c| c.windows(2).all(|w| j[w[0]] >= j[w[1]]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Admissible {
    pub profiles: Vec<JProfile>,
    /// Set when only `0 ≤ j_i ≤ k_i` was applied.
    pub unconstrained_by_source: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JProfile {
    pub group: GroupLabel,
    pub prime: u32,
    pub degrees: Vec<u32>,
    pub caps: Vec<u32>,
    pub values: Vec<u32>,
}

impl JProfile {
    fn check(&self, entry: &JTableEntry) -> Result<()> {
        let bad = |why: String| Err(Error::InadmissibleProfile(format!("{} {:?}: {why}", self.group, self.values)));
        if self.prime != 2 {
            return bad(format!("prime {} is not supported", self.prime));
        }
        if self.values.len() != self.degrees.len() || self.caps.len() != self.degrees.len() {
            return bad(format!("expected {} entries", self.degrees.len()));
        }
        if self.degrees != entry.degrees || self.caps != entry.caps {
            return bad("degrees or caps disagree with the table".into());
        }
        if let Some(i) = (0..self.values.len()).find(|&i| self.values[i] > self.caps[i]) {
            return bad(format!("j_{} = {} exceeds its cap {}", i + 1, self.values[i], self.caps[i]));
        }
        if !chains_hold(&entry.chains, &self.values) {
            return bad("monotonicity constraint violated".into());
        }
        Ok(())
    }

    /// Checks the profile against the builtin table.
    pub fn validate(&self) -> Result<()> {
        self.check(JTable::builtin().entry(self.group)?)
    }

    pub fn is_split(&self) -> bool {
        self.values.iter().all(|&j| j == 0)
    }

    /// `∑ d_i (2^{j_i} − 1)`.
    pub fn expected_degree(&self) -> u64 {
        self.degrees
            .iter()
            .zip(&self.values)
            .map(|(&d, &j)| d as u64 * ((1u64 << j) - 1))
            .sum()
    }
}

/// Poincaré polynomial of the upper motive of the Borel variety.
pub fn upper_motive_poly(profile: &JProfile) -> Result<IntPoly> {
    profile.validate()?;
    Ok(upper_motive_poly_unchecked(profile))
}

pub(crate) fn upper_motive_poly_unchecked(profile: &JProfile) -> IntPoly {
    // (t^{d·2^j} − 1)/(t^d − 1) = 1 + t^d + … + t^{d(2^j − 1)}.
    profile
        .degrees
        .iter()
        .zip(&profile.values)
        .fold(IntPoly::one(), |acc, (&d, &j)| {
            &acc * &IntPoly::geometric(d as usize, 1usize << j)
        })
}

pub fn max_profile(group: GroupLabel) -> Result<JProfile> {
    JTable::builtin().max_profile(group)
}

pub fn enumerate_admissible(group: GroupLabel) -> Result<Admissible> {
    JTable::builtin().enumerate_admissible(group)
}

pub fn profile(group: GroupLabel, values: Vec<u32>) -> Result<JProfile> {
    JTable::builtin().profile(group, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::eval_rational;

    #[test]
    fn labels() {
        assert_eq!("²E₆".parse::<GroupLabel>().unwrap(), GroupLabel::E6Outer);
        assert_eq!("2·²A₂".parse::<GroupLabel>().unwrap(), GroupLabel::TwoA2Pair);
        assert_eq!("2x2A2".parse::<GroupLabel>().unwrap(), GroupLabel::TwoA2Pair);
        assert_eq!("1D6".parse::<GroupLabel>().unwrap(), GroupLabel::D6Inner);
        for omitted in ["A1", "2A2", "C3", "F4"] {
            assert!(matches!(omitted.parse::<GroupLabel>(), Err(Error::UnsupportedGroup(_))));
        }
        assert!(matches!("G2".parse::<GroupLabel>(), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn max_profiles() {
        let p = max_profile(GroupLabel::E6Outer).unwrap();
        assert_eq!((p.degrees.as_slice(), p.values.as_slice()), ([3, 5, 9].as_slice(), [1, 1, 1].as_slice()));
        let p = max_profile(GroupLabel::E8).unwrap();
        assert_eq!(p.degrees, [3, 5, 9, 15]);
        assert_eq!(p.values, [3, 2, 1, 1]);
        let p = max_profile(GroupLabel::D6Inner).unwrap();
        assert_eq!(p.degrees, [1, 1, 3, 5]);
        assert_eq!(p.values, [1, 3, 1, 1]);
    }

    #[test]
    fn upper_motives() {
        let p = profile(GroupLabel::E6Outer, vec![1, 0, 0]).unwrap();
        assert_eq!(upper_motive_poly(&p).unwrap(), IntPoly::one_plus_t_pow(3));
        let p = profile(GroupLabel::E7, vec![0, 1, 1, 1]).unwrap();
        let expected = IntPoly::product(&[
            IntPoly::one_plus_t_pow(3),
            IntPoly::one_plus_t_pow(5),
            IntPoly::one_plus_t_pow(9),
        ]);
        assert_eq!(upper_motive_poly(&p).unwrap(), expected);
        for g in GroupLabel::ALL {
            let n = JTable::builtin().entry(g).unwrap().caps.len();
            assert_eq!(upper_motive_poly(&profile(g, vec![0; n]).unwrap()).unwrap(), IntPoly::one());
        }
    }

    #[test]
    fn upper_motive_matches_rational_form() {
        for g in GroupLabel::ALL {
            for p in enumerate_admissible(g).unwrap().profiles {
                let num: Vec<IntPoly> = p
                    .degrees
                    .iter()
                    .zip(&p.values)
                    .map(|(&d, &j)| IntPoly::t_pow_minus_one((d as usize) << j))
                    .collect();
                let den: Vec<IntPoly> =
                    p.degrees.iter().map(|&d| IntPoly::t_pow_minus_one(d as usize)).collect();
                assert_eq!(upper_motive_poly(&p).unwrap(), eval_rational(&num, &den).unwrap());
            }
        }
    }

    #[test]
    fn inadmissible_rejected() {
        assert!(profile(GroupLabel::E6Outer, vec![0, 1, 0]).is_err());
        assert!(profile(GroupLabel::E6Outer, vec![2, 0, 0]).is_err());
        assert!(profile(GroupLabel::E7, vec![0, 0, 1, 0]).is_err());
        assert!(profile(GroupLabel::E7, vec![1, 0, 0]).is_err());
        assert!(profile(GroupLabel::E7, vec![1, 0, 0, 0]).is_ok());
        let mut p = profile(GroupLabel::E8, vec![0; 4]).unwrap();
        p.values = vec![4, 0, 0, 0];
        assert!(upper_motive_poly(&p).is_err());
    }

    #[test]
    fn enumeration() {
        let e6: Vec<Vec<u32>> = enumerate_admissible(GroupLabel::E6Outer)
            .unwrap()
            .profiles
            .into_iter()
            .map(|p| p.values)
            .collect();
        assert_eq!(e6, vec![vec![0, 0, 0], vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]);
        let e7 = enumerate_admissible(GroupLabel::E7).unwrap();
        assert_eq!(e7.profiles.len(), 8);
        assert!(!e7.unconstrained_by_source);
        let e8 = enumerate_admissible(GroupLabel::E8).unwrap();
        assert_eq!(e8.profiles.len(), 4 * 3 * 2 * 2);
        assert!(e8.unconstrained_by_source);
        for g in GroupLabel::ALL {
            let all = enumerate_admissible(g).unwrap().profiles;
            assert_eq!(all.last().unwrap(), &max_profile(g).unwrap());
            assert!(all.windows(2).all(|w| w[0].values < w[1].values));
        }
    }

    #[test]
    fn all_zero_caps() {
        let t = JTable::from_json(
            r#"{"version":1,"prime":2,"groups":[{"group":"E8","degrees":[3,5],"caps":[0,0],"chains":[],"constrained_by_source":false}]}"#,
        )
        .unwrap();
        let all = t.enumerate_admissible(GroupLabel::E8).unwrap().profiles;
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].values, [0, 0]);
    }

    #[test]
    fn other_primes_rejected() {
        let s = DEFAULT_TABLE.replace("\"prime\": 2", "\"prime\": 3");
        assert!(JTable::from_json(&s).is_err());
    }
}
