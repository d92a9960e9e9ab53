//! Admissible J-invariants and the Poincaré polynomials of upper Borel
//! motives.

use magicsq::jinv::{enumerate_admissible, max_profile, profile, upper_motive_poly, GroupLabel};

fn main() -> magicsq::Result<()> {
    for g in GroupLabel::ALL {
        let max = max_profile(g)?;
        let adm = enumerate_admissible(g)?;
        println!(
            "{g:>5}: degrees {:?}, maximal J {:?}, {} admissible values{}",
            max.degrees,
            max.values,
            adm.profiles.len(),
            if adm.unconstrained_by_source { " (caps only)" } else { "" }
        );
    }

    let p = profile(GroupLabel::E7, vec![0, 1, 1, 1])?;
    println!("E7, J = (0,1,1,1): {}", upper_motive_poly(&p)?);

    let bad = profile(GroupLabel::E6Outer, vec![0, 1, 0]);
    println!("2E6, J = (0,1,0): {}", bad.unwrap_err());
    Ok(())
}
