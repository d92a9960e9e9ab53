//! Named end-to-end checks with expected and actual values.
//!
//! Each fixture recomputes a published value from scratch and compares it
//! exactly. Fixtures run in parallel; the report is ordered by name.

use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;

use crate::cgmb::{self, express_residual, tate_skeleton, witness_sum, Fixture};
use crate::error::{Error, Result};
use crate::jinv::{self, GroupLabel, JTable};
use crate::magictables::{MagicCol, MagicRow, RostCondition, Tables};
use crate::poincare::{conormed_poincare, dim_flag, poincare_poly, FlagVariety};
use crate::polyring::{divides_ring, divides_semiring, IntPoly};
use crate::qform::{af_e7_input_grid, af_killing_form_e7, CompositionAlgebraR, Sign};
use crate::rootsys::{build_root_system, opposition_involution, CartanType, NodeSet};
use crate::weyl::{double_cosets, parabolic_order, weyl_order};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// Where the expected value comes from.
    pub reference: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Directory holding replacement `jinv_max.json`, `tables.json` or
    /// decomposition fixtures.
    pub fixtures_dir: Option<PathBuf>,
    /// Report every runtime as 0 so that output is byte-stable.
    pub zero_timings: bool,
}

struct Ctx {
    jtable: JTable,
    tables: Tables,
    fixtures_dir: Option<PathBuf>,
}

impl Ctx {
    fn load(opts: &VerifyOptions) -> Result<Ctx> {
        let dir = opts.fixtures_dir.as_deref();
        let pick = |file: &str| dir.map(|d| d.join(file)).filter(|p| p.exists());
        Ok(Ctx {
            jtable: match pick("jinv_max.json") {
                Some(p) => JTable::from_path(&p)?,
                None => JTable::builtin().clone(),
            },
            tables: match pick("tables.json") {
                Some(p) => Tables::from_path(&p)?,
                None => Tables::builtin().clone(),
            },
            fixtures_dir: opts.fixtures_dir.clone(),
        })
    }
}

struct Outcome {
    expected: String,
    actual: String,
    pass: bool,
}

fn eq<T: PartialEq + std::fmt::Debug>(expected: T, actual: T) -> Outcome {
    Outcome {
        pass: expected == actual,
        expected: format!("{expected:?}"),
        actual: format!("{actual:?}"),
    }
}

fn eq_display<T: PartialEq + std::fmt::Display>(expected: T, actual: T) -> Outcome {
    Outcome {
        pass: expected == actual,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

type Runner = fn(&Ctx) -> Result<Outcome>;

struct FixtureDef {
    name: &'static str,
    reference: &'static str,
    run: Runner,
}

fn fv(ambient: &str, circled: &[usize]) -> Result<FlagVariety> {
    FlagVariety::new(ambient.parse()?, circled.iter().copied().collect())
}

fn nodes(v: &[usize]) -> NodeSet {
    v.iter().copied().collect()
}

fn dims(ambient: &str, circled: &[usize], expected: u32) -> Result<Outcome> {
    Ok(eq(expected, dim_flag(&fv(ambient, circled)?)?))
}

fn skeleton(levi: &[usize], expected: [u32; 4]) -> Result<Outcome> {
    let e6 = build_root_system("E6".parse()?)?;
    let star = opposition_involution(&e6);
    let shifts = tate_skeleton(&e6, &nodes(&[3, 4, 5]), &nodes(levi), &star)?;
    Ok(eq(expected.to_vec(), shifts))
}

fn conormed(circled: &[usize], degree: usize) -> Result<Outcome> {
    let p = conormed_poincare(&fv("2E6", circled)?)?;
    let q = IntPoly::one_plus_t_pow(3);
    let ring = divides_ring(&p, &q)?.is_some();
    let semiring = divides_semiring(&p, &q)?.is_some();
    let summary = |nonneg: bool, deg: Option<usize>, ring: bool, semi: bool| {
        format!("nonneg={nonneg} degree={deg:?} ring={ring} semiring={semi}")
    };
    let expected = summary(true, Some(degree), true, false);
    let actual = summary(p.has_nonnegative_coeffs(), p.degree(), ring, semiring);
    Ok(eq_display(expected, actual))
}

fn residual(circled: &[usize], top: usize) -> Result<Outcome> {
    let total = poincare_poly(&fv("E6", circled)?)?;
    let residual = &total - &(&IntPoly::one_plus_t_pow(top) * &IntPoly::one_plus_t_pow(15));
    let blocks = [IntPoly::one_plus_t_pow(3), IntPoly::constant(2)];
    let witness = express_residual(&residual, &blocks)?;
    let actual = match &witness {
        None => "no witness".to_string(),
        Some(w) => format!(
            "witness found, shifts positive={}, round-trip={}",
            w.iter().all(|p| p.shift > 0),
            witness_sum(&blocks, w) == residual
        ),
    };
    Ok(eq_display(
        "witness found, shifts positive=true, round-trip=true".to_string(),
        actual,
    ))
}

fn jinv_poly(ctx: &Ctx, group: GroupLabel, values: Vec<u32>, expected: IntPoly) -> Result<Outcome> {
    let p = ctx.jtable.profile(group, values)?;
    Ok(eq_display(expected, jinv::upper_motive_poly_unchecked(&p)))
}

fn killing(pred: fn(&CompositionAlgebraR, &CompositionAlgebraR) -> bool, f: fn(usize, i64, usize) -> bool) -> Result<(usize, usize)> {
    let mut total = 0;
    let mut ok = 0;
    for (q, o, g) in af_e7_input_grid() {
        if !pred(&q, &o) {
            continue;
        }
        let k = af_killing_form_e7(q, o, g)?;
        total += 1;
        ok += f(k.dim(), k.signature(), k.witt_index()) as usize;
    }
    Ok((ok, total))
}

const PROP_TYPES: [&str; 6] = ["A4", "B4", "D5", "F4", "E6", "E7"];

fn each_single_node_variety(mut f: impl FnMut(&CartanType, usize) -> Result<bool>) -> Result<(usize, usize)> {
    let mut ok = 0;
    let mut total = 0;
    for t in PROP_TYPES {
        let ct: CartanType = t.parse()?;
        for i in 1..=ct.rank {
            total += 1;
            ok += f(&ct, i)? as usize;
        }
    }
    Ok((ok, total))
}

fn counts((ok, total): (usize, usize)) -> Outcome {
    eq_display(format!("{total}/{total}"), format!("{ok}/{total}"))
}

/// Every polynomial with `len` coefficients drawn from `lo..=hi`.
fn small_polys(lo: i64, hi: i64, len: u32) -> Vec<IntPoly> {
    let base = (hi - lo + 1) as usize;
    (0..base.pow(len))
        .map(|mut n| {
            let coeffs: Vec<i64> = (0..len)
                .map(|_| {
                    let c = lo + (n % base) as i64;
                    n /= base;
                    c
                })
                .collect();
            IntPoly::from_i64s(&coeffs)
        })
        .collect()
}

const FIXTURES: &[FixtureDef] = &[
    FixtureDef {
        name: "dims-x2",
        reference: "dimension of the 2E6 variety X_2",
        run: |_| dims("E6", &[2], 21),
    },
    FixtureDef {
        name: "dims-x16",
        reference: "dimension of the 2E6 variety X_{1,6}",
        run: |_| dims("E6", &[1, 6], 24),
    },
    FixtureDef {
        name: "dims-y1",
        reference: "dimension of the E7 variety Y_1",
        run: |_| dims("E7", &[1], 33),
    },
    FixtureDef {
        name: "cgmb-x2",
        reference: "Tate summands of M(X_2) for an isotropic 2E6 with kernel 3,4,5",
        run: |_| skeleton(&[1, 3, 4, 5, 6], [0, 6, 15, 21]),
    },
    FixtureDef {
        name: "cgmb-x16",
        reference: "Tate summands of M(X_{1,6}) for an isotropic 2E6 with kernel 3,4,5",
        run: |_| skeleton(&[2, 3, 4, 5], [0, 9, 15, 24]),
    },
    FixtureDef {
        name: "conormed-x2",
        reference: "conormed Poincaré polynomial of X_2: 1+t^3 divides in Z[t] but not in N[t]",
        run: |_| conormed(&[2], 21),
    },
    FixtureDef {
        name: "conormed-x16",
        reference: "conormed Poincaré polynomial of X_{1,6}: 1+t^3 divides in Z[t] but not in N[t]",
        run: |_| conormed(&[1, 6], 24),
    },
    FixtureDef {
        name: "henke-y1",
        reference: "motivic decomposition of the E7 variety Y_1 with J = (1,0,0,0)",
        run: |ctx| {
            let f = Fixture::load("henke-y1", ctx.fixtures_dir.as_deref())?;
            let check = cgmb::check_decomposition(&f.decomposition()?);
            Ok(eq_display(IntPoly::zero(), check.residual))
        },
    },
    FixtureDef {
        name: "jinv-2e6",
        reference: "upper Borel motive of 2E6 with J = (1,0,0)",
        run: |ctx| jinv_poly(ctx, GroupLabel::E6Outer, vec![1, 0, 0], IntPoly::one_plus_t_pow(3)),
    },
    FixtureDef {
        name: "jinv-e7",
        reference: "upper Borel motive of E7 with J = (0,1,1,1)",
        run: |ctx| {
            let expected = IntPoly::product(&[3, 5, 9].map(IntPoly::one_plus_t_pow));
            jinv_poly(ctx, GroupLabel::E7, vec![0, 1, 1, 1], expected)
        },
    },
    FixtureDef {
        name: "jinv-table",
        reference: "maximal J-invariants and the J-conditions of the group table are admissible",
        run: |ctx| {
            let mut ok = 0;
            for g in GroupLabel::ALL {
                let max = ctx.jtable.max_profile(g)?;
                let adm = ctx.jtable.enumerate_admissible(g)?;
                ok += adm.profiles.contains(&max) as usize;
            }
            let conditions = ctx.tables.check_j_conditions(&ctx.jtable).is_ok();
            Ok(eq_display(
                format!("6/6 maximal profiles admissible, conditions ok={}", true),
                format!("{ok}/6 maximal profiles admissible, conditions ok={conditions}"),
            ))
        },
    },
    FixtureDef {
        name: "residual-x2",
        reference: "P(X_2) - (1+t^6)(1+t^15) splits into shifted 1+t^3 and 2",
        run: |_| residual(&[2], 6),
    },
    FixtureDef {
        name: "residual-x16",
        reference: "P(X_{1,6}) - (1+t^9)(1+t^15) splits into shifted 1+t^3 and 2",
        run: |_| residual(&[1, 6], 9),
    },
    FixtureDef {
        name: "killing-e7-dim",
        reference: "E7 Killing form from quaternions, octonions and three scalars has dimension 133",
        run: |_| Ok(counts(killing(|_, _| true, |d, _, _| d == 133)?)),
    },
    FixtureDef {
        name: "killing-e7-compact",
        reference: "definite algebras give the compact real form: negative definite",
        run: |_| {
            let k = af_killing_form_e7(
                CompositionAlgebraR::quaternion(true),
                CompositionAlgebraR::octonion(true),
                [Sign::Plus; 3],
            )?;
            Ok(eq((-133, 0), (k.signature(), k.witt_index())))
        },
    },
    FixtureDef {
        name: "killing-e7-split",
        reference: "split algebras give an isotropic Killing form",
        run: |_| Ok(counts(killing(|q, o| !q.definite && !o.definite, |_, _, w| w > 0)?)),
    },
    FixtureDef {
        name: "props-palindromic",
        reference: "Poincaré polynomials of smooth projective flag varieties are palindromic",
        run: |_| {
            Ok(counts(each_single_node_variety(|ct, i| {
                Ok(poincare_poly(&FlagVariety::new(*ct, [i].into())?)?.is_palindromic())
            })?))
        },
    },
    FixtureDef {
        name: "props-coset-count",
        reference: "P(X_I, 1) equals |W / W_Θ|",
        run: |_| {
            Ok(counts(each_single_node_variety(|ct, i| {
                let f = FlagVariety::new(*ct, [i].into())?;
                let rs = build_root_system(*ct)?;
                let index = weyl_order(&rs) / parabolic_order(&rs, &f.levi_nodes())?;
                Ok(poincare_poly(&f)?.value_at_one() == index.into())
            })?))
        },
    },
    FixtureDef {
        name: "props-orbit-sizes",
        reference: "double-coset orbit sizes sum to |W / W_Θ|",
        run: |_| {
            let e6 = build_root_system("E6".parse()?)?;
            let kernels = [nodes(&[3, 4, 5]), nodes(&[1, 6]), nodes(&[2, 4]), NodeSet::new()];
            let mut ok = 0;
            let mut total = 0;
            for k in &kernels {
                for i in 1..=6 {
                    let f = FlagVariety::new(e6.ctype(), [i].into())?;
                    let levi = f.levi_nodes();
                    let sum: u64 = double_cosets(&e6, k, &levi, None)?.iter().map(|c| c.orbit_size).sum();
                    let index = weyl_order(&e6) / parabolic_order(&e6, &levi)?;
                    total += 1;
                    ok += (index == sum.into()) as usize;
                }
            }
            Ok(counts((ok, total)))
        },
    },
    FixtureDef {
        name: "props-semiring-ring",
        reference: "divisibility in N[t] implies divisibility in Z[t]",
        run: |_| {
            let divisors: Vec<IntPoly> = small_polys(0, 2, 4).into_iter().filter(|q| !q.is_zero()).collect();
            let dividends = small_polys(0, 2, 5);
            let mut cases = 0usize;
            let mut ok = 0usize;
            let mut test = |p: &IntPoly, q: &IntPoly| -> Result<()> {
                cases += 1;
                let semi = divides_semiring(p, q)?.is_some();
                ok += (!semi || divides_ring(p, q)?.is_some()) as usize;
                Ok(())
            };
            for q in &divisors {
                for r in small_polys(-1, 2, 3) {
                    let p = q * &r;
                    if p.has_nonnegative_coeffs() {
                        test(&p, q)?;
                    }
                }
                for p in &dividends {
                    test(p, q)?;
                }
            }
            let enough = cases >= 10_000;
            Ok(eq_display(
                "all cases hold, at least 10000 cases=true".to_string(),
                format!(
                    "{} cases hold, at least 10000 cases={enough}",
                    if ok == cases { "all".to_string() } else { format!("{ok}/{cases}") }
                ),
            ))
        },
    },
    FixtureDef {
        name: "props-jinv-degrees",
        reference: "upper Borel motive: degree Σ d_i(2^{j_i} - 1) and value Π 2^{j_i} at t = 1",
        run: |ctx| {
            let mut ok = 0;
            let mut total = 0;
            for g in GroupLabel::ALL {
                for p in ctx.jtable.enumerate_admissible(g)?.profiles {
                    let poly = jinv::upper_motive_poly_unchecked(&p);
                    let value: u64 = p.values.iter().map(|&j| 1u64 << j).product();
                    total += 1;
                    ok += (poly.degree() == Some(p.expected_degree() as usize)
                        && poly.value_at_one() == value.into()
                        && poly.is_palindromic()) as usize;
                }
            }
            Ok(counts((ok, total)))
        },
    },
    FixtureDef {
        name: "tables-magic",
        reference: "magic square: E7 sits at (quaternion, F4) with invariant degree 5",
        run: |ctx| {
            let c = ctx.tables.cell(MagicRow::Quaternion, MagicCol::F4);
            Ok(eq(("E7".to_string(), 5), (c.group, c.invariant_degree)))
        },
    },
    FixtureDef {
        name: "tables-tits-index",
        reference: "quasi-split 2E6 has r(G) = 0; split Tits algebras exclude the index with circles 2,4",
        run: |ctx| {
            let z = ctx.tables.tits_index_for_rost(RostCondition::Zero);
            let imp = ctx.tables.tits_index_for_rost(RostCondition::ImpossibleWithSplitTits);
            Ok(eq((true, true), (z.quasi_split, imp.impossible)))
        },
    },
];

/// Names of all fixtures, sorted.
pub fn fixture_names() -> Vec<&'static str> {
    let mut v: Vec<&str> = FIXTURES.iter().map(|s| s.name).collect();
    v.sort_unstable();
    v
}

pub fn run_verify(filter: Option<&str>) -> Result<VerifyReport> {
    run_verify_with(filter, &VerifyOptions::default())
}

/// Runs every fixture whose name matches the glob `filter` (all when
/// `None`).
pub fn run_verify_with(filter: Option<&str>, opts: &VerifyOptions) -> Result<VerifyReport> {
    let selected: Vec<&FixtureDef> = match filter {
        None => FIXTURES.iter().collect(),
        Some(pat) => {
            let glob = glob::Pattern::new(pat).map_err(|e| Error::Parse(format!("bad pattern {pat:?}: {e}")))?;
            FIXTURES.iter().filter(|s| glob.matches(s.name)).collect()
        }
    };
    if selected.is_empty() {
        return Err(Error::UnknownFixture {
            pattern: filter.unwrap_or("").to_string(),
            available: fixture_names().iter().map(|s| s.to_string()).collect(),
        });
    }
    let ctx = Ctx::load(opts)?;
    let mut checks: Vec<Check> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|def| {
                let ctx = &ctx;
                scope.spawn(move || run_one(def, ctx, opts.zero_timings))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("fixture thread panicked"))
            .collect()
    });
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(VerifyReport { checks })
}

fn run_one(def: &FixtureDef, ctx: &Ctx, zero_timings: bool) -> Check {
    let start = Instant::now();
    let outcome = (def.run)(ctx).unwrap_or_else(|e| Outcome {
        expected: "no error".into(),
        actual: format!("error: {e}"),
        pass: false,
    });
    let runtime_ms = if zero_timings { 0 } else { start.elapsed().as_millis() as u64 };
    Check {
        name: def.name.to_string(),
        reference: def.reference.to_string(),
        expected: outcome.expected,
        actual: outcome.actual,
        pass: outcome.pass,
        runtime_ms,
    }
}
