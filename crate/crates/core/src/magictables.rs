//! Classification tables for the groups of the Freudenthal magic square:
//! the square itself with invariant degrees, the J-invariant conditions and
//! parabolic types per group, the Tits-construction conditions, and the
//! Tits indices of isotropic `²E₆` groups with split Tits algebras.
//!
//! Everything is loaded from one versioned JSON document
//! (`data/tables.json`), which can be replaced at runtime.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jinv::{normalize_label, GroupLabel, JTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MagicRow {
    Base,
    QuadraticExt,
    Quaternion,
    Octonion,
}

impl MagicRow {
    pub const ALL: [MagicRow; 4] = [
        MagicRow::Base,
        MagicRow::QuadraticExt,
        MagicRow::Quaternion,
        MagicRow::Octonion,
    ];

    fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for MagicRow {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().replace(['-', ' '], "_").as_str() {
            "base" | "base_field" => MagicRow::Base,
            "quadratic_ext" | "quadratic" | "quadratic_extension" | "mu2" => MagicRow::QuadraticExt,
            "quaternion" | "quaternions" | "a1" => MagicRow::Quaternion,
            "octonion" | "octonions" | "g2" => MagicRow::Octonion,
            _ => return Err(Error::UnknownLabel(format!("magic-square row {s:?}"))),
        })
    }
}

impl fmt::Display for MagicRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MagicRow::Base => "base",
            MagicRow::QuadraticExt => "quadratic_ext",
            MagicRow::Quaternion => "quaternion",
            MagicRow::Octonion => "octonion",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MagicCol {
    A1,
    #[serde(rename = "2A2")]
    A2Outer,
    C3,
    F4,
}

impl MagicCol {
    pub const ALL: [MagicCol; 4] = [MagicCol::A1, MagicCol::A2Outer, MagicCol::C3, MagicCol::F4];

    fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for MagicCol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match normalize_label(s).as_str() {
            "A1" => MagicCol::A1,
            "2A2" => MagicCol::A2Outer,
            "C3" => MagicCol::C3,
            "F4" => MagicCol::F4,
            _ => return Err(Error::UnknownLabel(format!("magic-square column {s:?}"))),
        })
    }
}

impl fmt::Display for MagicCol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MagicCol::A1 => "A1",
            MagicCol::A2Outer => "2A2",
            MagicCol::C3 => "C3",
            MagicCol::F4 => "F4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MagicCell {
    pub row: MagicRow,
    pub col: MagicCol,
    pub group: String,
    pub invariant_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicSquare {
    pub rows: Vec<MagicRow>,
    pub row_names: Vec<String>,
    pub cols: Vec<MagicCol>,
    pub groups: Vec<Vec<String>>,
    pub degrees: Vec<Vec<u32>>,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JCondition {
    pub values: Vec<u32>,
    pub degrees: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupConditionRow {
    pub group: String,
    pub degree: u32,
    pub j_condition: Option<JCondition>,
    pub condition: String,
    /// Equivalent condition up to odd-degree field extensions.
    pub equivalent_condition: String,
    /// `P_Θ` column: `any` or a concrete parabolic.
    pub parabolic: String,
    pub parabolic_nodes: Option<Vec<usize>>,
    pub source: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equals,
    Divides,
    DivisibleBy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicate {
    /// `n` in `f_n`.
    pub invariant_degree: u32,
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TitsConstructionRow {
    pub group: String,
    pub construction: String,
    pub input: String,
    pub predicate: Predicate,
    pub source_text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RostCondition {
    Zero,
    PureSymbolDivisibleByK,
    SymbolNotDivisibleByK,
    NotPureSymbol,
    ImpossibleWithSplitTits,
}

impl RostCondition {
    pub const ALL: [RostCondition; 5] = [
        RostCondition::Zero,
        RostCondition::PureSymbolDivisibleByK,
        RostCondition::SymbolNotDivisibleByK,
        RostCondition::NotPureSymbol,
        RostCondition::ImpossibleWithSplitTits,
    ];
}

impl FromStr for RostCondition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Ok(match key.as_str() {
            "zero" | "0" | "quasisplit" => RostCondition::Zero,
            "puresymboldivisiblebyk" => RostCondition::PureSymbolDivisibleByK,
            "symbolnotdivisiblebyk" => RostCondition::SymbolNotDivisibleByK,
            "notpuresymbol" => RostCondition::NotPureSymbol,
            "impossiblewithsplittits" | "impossible" => RostCondition::ImpossibleWithSplitTits,
            _ => return Err(Error::UnknownLabel(format!("Rost condition {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TitsIndexCase {
    pub rost_condition: RostCondition,
    pub circled_nodes: Vec<usize>,
    pub kernel_nodes: Vec<usize>,
    /// Type of the anisotropic kernel; empty when quasi-split.
    pub kernel_type: String,
    pub quasi_split: bool,
    pub impossible: bool,
    pub condition_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TitsIndexTable {
    pub ambient: String,
    pub note: String,
    pub cases: Vec<TitsIndexCase>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub version: u32,
    pub magic_square: MagicSquare,
    pub conditions: Vec<GroupConditionRow>,
    pub tits_constructions: Vec<TitsConstructionRow>,
    pub tits_indices: TitsIndexTable,
}

fn is_4x4<T>(grid: &[Vec<T>]) -> bool {
    grid.len() == 4 && grid.iter().all(|r| r.len() == 4)
}

const DEFAULT_TABLES: &str = include_str!("../data/tables.json");

impl Tables {
    pub fn from_json(s: &str) -> Result<Self> {
        let t: Tables = serde_json::from_str(s)?;
        if t.version != 1 {
            return Err(Error::Parse(format!("unsupported tables version {}", t.version)));
        }
        let m = &t.magic_square;
        if m.rows != MagicRow::ALL || m.cols != MagicCol::ALL || !is_4x4(&m.groups) || !is_4x4(&m.degrees) {
            return Err(Error::Parse("magic square must be a 4x4 grid in canonical order".into()));
        }
        let mut seen: Vec<RostCondition> = t.tits_indices.cases.iter().map(|c| c.rost_condition).collect();
        seen.sort_by_key(|c| *c as usize);
        if seen != RostCondition::ALL {
            return Err(Error::Parse("Tits index table needs one case per Rost condition".into()));
        }
        Ok(t)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn builtin() -> &'static Tables {
        static T: OnceLock<Tables> = OnceLock::new();
        T.get_or_init(|| Tables::from_json(DEFAULT_TABLES).expect("bundled tables are valid"))
    }

    pub fn cell(&self, row: MagicRow, col: MagicCol) -> MagicCell {
        let m = &self.magic_square;
        MagicCell {
            row,
            col,
            group: m.groups[row.index()][col.index()].clone(),
            invariant_degree: m.degrees[row.index()][col.index()],
        }
    }

    /// All sixteen cells, row by row.
    pub fn cells(&self) -> Vec<MagicCell> {
        MagicRow::ALL
            .iter()
            .flat_map(|&r| MagicCol::ALL.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.cell(r, c))
            .collect()
    }

    pub fn conditions_for(&self, group: &str) -> Result<&GroupConditionRow> {
        let key = normalize_label(group);
        let key = if key == "D6" { "1D6".to_string() } else { key };
        self.conditions
            .iter()
            .find(|r| r.group == key)
            .ok_or_else(|| Error::UnknownLabel(group.to_string()))
    }

    pub fn tits_constructions_for(&self, group: &str) -> Vec<&TitsConstructionRow> {
        let key = normalize_label(group);
        self.tits_constructions.iter().filter(|r| r.group == key).collect()
    }

    pub fn tits_index_for_rost(&self, cond: RostCondition) -> &TitsIndexCase {
        self.tits_indices
            .cases
            .iter()
            .find(|c| c.rost_condition == cond)
            .expect("validated on load")
    }

    /// Checks every J-condition against the J-invariant table: the listed
    /// degrees must match and the profile must be admissible.
    pub fn check_j_conditions(&self, jt: &JTable) -> Result<()> {
        for row in &self.conditions {
            let Some(jc) = &row.j_condition else { continue };
            let label: GroupLabel = row.group.parse()?;
            let entry = jt.entry(label)?;
            if entry.degrees != jc.degrees {
                return Err(Error::InadmissibleProfile(format!(
                    "{}: degrees {:?} disagree with {:?}",
                    row.group, jc.degrees, entry.degrees
                )));
            }
            let admissible = jt.enumerate_admissible(label)?;
            if !admissible.profiles.iter().any(|p| p.values == jc.values) {
                return Err(Error::InadmissibleProfile(format!("{} {:?}", row.group, jc.values)));
            }
        }
        Ok(())
    }
}

pub fn query_magic_square(row: MagicRow, col: MagicCol) -> MagicCell {
    Tables::builtin().cell(row, col)
}

pub fn conditions_for(group: &str) -> Result<&'static GroupConditionRow> {
    Tables::builtin().conditions_for(group)
}

pub fn tits_index_for_rost(cond: RostCondition) -> &'static TitsIndexCase {
    Tables::builtin().tits_index_for_rost(cond)
}

/// Top Tate twist `2^{n−1} − 1` of the binary motive attached to an
/// invariant of degree `n`.
pub fn binary_motive_dimension(degree: u32) -> u64 {
    assert!(degree >= 1, "invariant degrees start at 1");
    (1u64 << (degree - 1)) - 1
}
