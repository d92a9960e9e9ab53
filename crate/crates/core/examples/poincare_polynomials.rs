//! Poincaré polynomials of flag varieties from Schubert cell counts.

use magicsq::poincare::{borel_product_formula, dim_flag, poincare_poly, FlagVariety};

fn main() -> magicsq::Result<()> {
    for (ambient, circled) in [("E6", vec![2]), ("E6", vec![1, 6]), ("E7", vec![1]), ("F4", vec![4])] {
        let fv = FlagVariety::new(ambient.parse()?, circled.into_iter().collect())?;
        let p = poincare_poly(&fv)?;
        println!("{} (dim {}, {} cells):", fv.label(), dim_flag(&fv)?, p.value_at_one());
        println!("  {p}");
    }

    let g2 = "G2".parse()?;
    let borel = poincare_poly(&FlagVariety::borel(g2))?;
    assert_eq!(borel, borel_product_formula(g2)?);
    println!("G2 Borel variety: {borel}");
    Ok(())
}
