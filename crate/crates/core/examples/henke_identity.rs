//! The E₇ variety `X_1` splits, at the level of Poincaré polynomials, into
//! one copy of its upper motive and thirteen shifted Borel upper motives.

use magicsq::cgmb::{check_decomposition, Fixture};

fn main() -> magicsq::Result<()> {
    let fixture = Fixture::load("henke-y1", None)?;
    let d = fixture.decomposition()?;
    println!("P(E7 X_1) = {}", d.total);
    for t in &d.terms {
        println!("  + t^{:<2} ({})", t.shift, t.kind.poly());
    }
    let check = check_decomposition(&d);
    println!("holds: {}, residual {}", check.holds, check.residual);
    assert!(check.holds);
    Ok(())
}
