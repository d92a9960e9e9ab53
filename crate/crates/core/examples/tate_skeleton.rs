//! Tate summands of isotropic `²E₆` flag varieties with anisotropic kernel
//! of type `A₃` on nodes 3,4,5.

use magicsq::cgmb::tate_skeleton;
use magicsq::poincare::FlagVariety;
use magicsq::rootsys::{build_root_system, opposition_involution, parse_nodes};

fn main() -> magicsq::Result<()> {
    let e6 = build_root_system("E6".parse()?)?;
    let star = opposition_involution(&e6);
    let kernel = parse_nodes("3,4,5")?;
    for circled in ["2", "1,6"] {
        let fv = FlagVariety::new("2E6".parse()?, parse_nodes(circled)?)?;
        let shifts = tate_skeleton(&e6, &kernel, &fv.levi_nodes(), &star)?;
        println!("M({}) contains Tate motives twisted by {shifts:?}", fv.label());
    }
    Ok(())
}
