//! Root systems in Bourbaki numbering: counts, highest roots, the opposition
//! involution and types of sub-diagrams.

use magicsq::rootsys::{build_root_system, opposition_involution, sub_diagram_type};
use magicsq::weyl::{fundamental_degrees, weyl_order};

fn main() -> magicsq::Result<()> {
    for t in ["A5", "B4", "C4", "D6", "G2", "F4", "E6", "E7", "E8"] {
        let rs = build_root_system(t.parse()?)?;
        let highest = rs.positive_roots().last().expect("nonempty");
        println!(
            "{t:>3}: {:>3} positive roots, |W| = {:>9}, degrees {:?}, highest root {:?}",
            rs.num_positive_roots(),
            weyl_order(&rs).to_string(),
            fundamental_degrees(&rs),
            highest
        );
    }

    let e6 = build_root_system("E6".parse()?)?;
    println!("opposition involution of E6: {}", opposition_involution(&e6));

    let kernel = [3, 4, 5].into();
    let types = sub_diagram_type(&e6, &kernel)?;
    println!("nodes 3,4,5 of E6 span {}", types[0]);
    Ok(())
}
