//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any fails.

use std::process::ExitCode;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use magicsq::cgmb::{express_residual, tate_skeleton, witness_sum};
use magicsq::jinv::{self, GroupLabel, JTable};
use magicsq::magictables::Tables;
use magicsq::poincare::{conormed_poincare, dim_flag, poincare_poly, FlagVariety};
use magicsq::polyring::{divides_ring, divides_semiring};
use magicsq::qform::{af_e7_input_grid, af_killing_form_e7, CompositionAlgebraR, Sign};
use magicsq::rootsys::{build_root_system, opposition_involution};
use magicsq::verify::run_verify;
use magicsq::weyl::{double_cosets, parabolic_order, weyl_order};
use magicsq::{CartanType, IntPoly, NodeSet, Result};

fn fv(ambient: &str, circled: &[usize]) -> FlagVariety {
    FlagVariety::new(ambient.parse().unwrap(), circled.iter().copied().collect()).unwrap()
}

fn nodes(v: &[usize]) -> NodeSet {
    v.iter().copied().collect()
}

fn p(s: &str) -> IntPoly {
    s.parse().unwrap()
}

fn flag_dimensions() -> Result<String> {
    let d = (dim_flag(&fv("E6", &[2]))?, dim_flag(&fv("E6", &[1, 6]))?, dim_flag(&fv("E7", &[1]))?);
    ensure(d == (21, 24, 33), format!("dims {d:?}"))
}

fn tate_skeletons() -> Result<String> {
    let e6 = build_root_system("E6".parse()?)?;
    let star = opposition_involution(&e6);
    ensure(star.to_string() == "(1 6)(3 5)", format!("star {star}"))?;
    let k = nodes(&[3, 4, 5]);
    let a = tate_skeleton(&e6, &k, &nodes(&[1, 3, 4, 5, 6]), &star)?;
    let b = tate_skeleton(&e6, &k, &nodes(&[2, 3, 4, 5]), &star)?;
    ensure(a == [0, 6, 15, 21] && b == [0, 9, 15, 24], format!("{a:?} and {b:?}"))
}

fn conormed_dichotomy() -> Result<String> {
    let q = IntPoly::one_plus_t_pow(3);
    let mut seen = vec![];
    for (circled, deg) in [(vec![2], 21), (vec![1, 6], 24)] {
        let pn = conormed_poincare(&fv("2E6", &circled))?;
        let ring = divides_ring(&pn, &q)?;
        let semi = divides_semiring(&pn, &q)?;
        ensure(pn.has_nonnegative_coeffs(), format!("{pn} has a negative coefficient"))?;
        ensure(pn.degree() == Some(deg), format!("degree {:?}", pn.degree()))?;
        let quot = ring.ok_or_else(|| magicsq::Error::Precondition("not divisible in Z[t]".into()))?;
        ensure(&quot * &q == pn, "quotient does not multiply back".into())?;
        ensure(!quot.has_nonnegative_coeffs() && semi.is_none(), "divisible in N[t]".into())?;
        seen.push(format!("deg {deg}, P_N(1) = {}", pn.value_at_one()));
    }
    Ok(seen.join("; "))
}

fn henke_identity() -> Result<String> {
    let total = poincare_poly(&fv("E7", &[1]))?;
    let first = &IntPoly::one_plus_t_pow(9) * &p("1+t+t^4+t^6+t^8+t^12+t^16+t^18+t^20+t^23+t^24");
    let window = IntPoly::from_exponents(2..=14);
    let borel = IntPoly::product(&[3, 5, 9].map(IntPoly::one_plus_t_pow));
    let diff = &(&total - &first) - &(&window * &borel);
    ensure(diff.is_zero(), format!("difference {diff}"))
}

fn j_invariant_polys() -> Result<String> {
    let a = jinv::upper_motive_poly(&jinv::profile(GroupLabel::E6Outer, vec![1, 0, 0])?)?;
    ensure(a == p("1+t^3"), format!("2E6: {a}"))?;
    let b = jinv::upper_motive_poly(&jinv::profile(GroupLabel::E7, vec![0, 1, 1, 1])?)?;
    ensure(b == p("1+t^3") * p("1+t^5") * p("1+t^9"), format!("E7: {b}"))?;
    let jt = JTable::builtin();
    for g in GroupLabel::ALL {
        let adm = jt.enumerate_admissible(g)?;
        ensure(adm.profiles.contains(&jt.max_profile(g)?), format!("{g} maximum not admissible"))?;
        for prof in &adm.profiles {
            let again = jt.profile(g, prof.values.clone())?;
            ensure(&again == prof, format!("{g} {:?} does not round-trip", prof.values))?;
        }
    }
    Tables::builtin().check_j_conditions(jt)?;
    Ok("2E6 and E7 polynomials match; table round-trips".into())
}

fn residual_witnesses() -> Result<String> {
    let blocks = [IntPoly::one_plus_t_pow(3), IntPoly::constant(2)];
    let mut sizes = vec![];
    for (circled, top) in [(vec![1, 6], 9), (vec![2], 6)] {
        let total = poincare_poly(&fv("E6", &circled))?;
        let residual = &total - &(&IntPoly::one_plus_t_pow(top) * &IntPoly::one_plus_t_pow(15));
        let w = express_residual(&residual, &blocks)?
            .ok_or_else(|| magicsq::Error::Precondition(format!("no witness for {residual}")))?;
        ensure(w.iter().all(|pl| pl.shift > 0), "zero shift in witness".into())?;
        ensure(witness_sum(&blocks, &w) == residual, "witness does not round-trip".into())?;
        sizes.push(w.len());
    }
    Ok(format!("witness sizes {sizes:?}"))
}

fn killing_forms() -> Result<String> {
    let mut n = 0;
    for (q, o, g) in af_e7_input_grid() {
        let k = af_killing_form_e7(q, o, g)?;
        ensure(k.dim() == 133, format!("dim {}", k.dim()))?;
        if !q.definite && !o.definite {
            ensure(k.witt_index() > 0, "split input gave an anisotropic form".into())?;
        }
        n += 1;
    }
    ensure(n == 32, format!("{n} configurations"))?;
    let c = af_killing_form_e7(
        CompositionAlgebraR::quaternion(true),
        CompositionAlgebraR::octonion(true),
        [Sign::Plus; 3],
    )?;
    ensure(c.signature() == -133 && c.witt_index() == 0, format!("compact {c:?}"))
}

fn property_suites() -> Result<String> {
    let mut checked = 0usize;
    for t in ["A3", "B3", "C4", "D4", "G2", "F4", "E6", "E7"] {
        let ct: CartanType = t.parse()?;
        let rs = build_root_system(ct)?;
        let order = weyl_order(&rs);
        for mask in 1u32..(1 << ct.rank) {
            if ct.rank == 7 && mask.count_ones() > 2 {
                continue;
            }
            let circled: NodeSet = (1..=ct.rank).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let f = FlagVariety::new(ct, circled)?;
            let poly = poincare_poly(&f)?;
            ensure(poly.is_palindromic(), format!("{} not palindromic", f.label()))?;
            let index = &order / parabolic_order(&rs, &f.levi_nodes())?;
            ensure(poly.value_at_one() == index.clone().into(), format!("{} cell count", f.label()))?;
            if ct.rank <= 6 {
                let left: NodeSet = f.parabolic_type.iter().copied().filter(|i| i % 2 == 1).collect();
                let sum: u64 = double_cosets(&rs, &left, &f.levi_nodes(), None)?.iter().map(|c| c.orbit_size).sum();
                ensure(index == sum.into(), format!("{} orbit sizes", f.label()))?;
            }
            checked += 1;
        }
    }

    let mut runner = TestRunner::new_with_rng(
        Config { cases: 10_000, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    let coeffs = |lo: i64, hi: i64, n: usize| proptest::collection::vec(lo..=hi, 1..=n);
    let fuzz = runner.run(&(coeffs(0, 3, 10), coeffs(0, 2, 5), coeffs(-1, 2, 5)), |(a, b, c)| {
        let q = IntPoly::from_i64s(&b);
        let q = if q.is_zero() { IntPoly::one() } else { q };
        // Half the dividends are multiples of q, so both outcomes occur.
        for pp in [IntPoly::from_i64s(&a), &q * &IntPoly::from_i64s(&c)] {
            if pp.has_nonnegative_coeffs() && divides_semiring(&pp, &q).unwrap().is_some() {
                prop_assert!(divides_ring(&pp, &q).unwrap().is_some());
            }
        }
        Ok(())
    });
    ensure(fuzz.is_ok(), format!("semiring fuzz: {fuzz:?}"))?;

    let mut profiles = 0;
    for g in GroupLabel::ALL {
        for prof in jinv::enumerate_admissible(g)?.profiles {
            let poly = jinv::upper_motive_poly(&prof)?;
            let value: u64 = prof.values.iter().map(|&j| 1u64 << j).product();
            ensure(poly.degree() == Some(prof.expected_degree() as usize), format!("{g} degree"))?;
            ensure(poly.value_at_one() == value.into(), format!("{g} value"))?;
            profiles += 1;
        }
    }
    Ok(format!("{checked} flag varieties, 10000 fuzz cases, {profiles} J profiles"))
}

fn verify_suite() -> Result<String> {
    let start = Instant::now();
    let report = run_verify(None)?;
    let secs = start.elapsed().as_secs_f64();
    let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    ensure(failed.is_empty(), format!("failed {failed:?}"))?;
    ensure(secs < 60.0, format!("took {secs:.1}s"))?;
    Ok(format!("{} checks in {secs:.2}s", report.checks.len()))
}

fn ensure(cond: bool, why: String) -> Result<String> {
    if cond {
        Ok(String::new())
    } else {
        Err(magicsq::Error::Precondition(why))
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<String>); 9] = [
        ("1 flag dimensions 21/24/33", flag_dimensions),
        ("2 Tate skeletons {0,6,15,21} and {0,9,15,24}", tate_skeletons),
        ("3 conormed polynomials: Z[t] yes, N[t] no", conormed_dichotomy),
        ("4 E7 X_1 decomposition identity", henke_identity),
        ("5 J-invariant polynomials and table round-trip", j_invariant_polys),
        ("6 residual witnesses over {1+t^3, 2}", residual_witnesses),
        ("7 E7 Killing form over all 32 inputs", killing_forms),
        ("8 property suites", property_suites),
        ("  full verify suite under 60 s", verify_suite),
    ];
    let mut ok = true;
    for (name, f) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f);
        let ms = start.elapsed().as_millis();
        match result {
            Ok(Ok(detail)) => println!("PASS  {name} ({ms} ms) {detail}"),
            Ok(Err(e)) => {
                ok = false;
                println!("FAIL  {name} ({ms} ms): {e}");
            }
            Err(_) => {
                ok = false;
                println!("FAIL  {name} ({ms} ms): panicked");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
