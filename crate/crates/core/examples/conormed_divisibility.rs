//! Conormed Poincaré polynomials of `²E₆` varieties are divisible by `1+t³`
//! over the integers but not over the nonnegative integers.

use magicsq::poincare::{conormed_poincare, FlagVariety};
use magicsq::polyring::{divides_ring, divides_semiring};
use magicsq::IntPoly;

fn main() -> magicsq::Result<()> {
    let q = IntPoly::one_plus_t_pow(3);
    for circled in [vec![2], vec![1, 6]] {
        let fv = FlagVariety::new("2E6".parse()?, circled.into_iter().collect())?;
        let p = conormed_poincare(&fv)?;
        println!("P_N({}) = {p}", fv.label());
        match divides_ring(&p, &q)? {
            Some(quot) => println!("  in Z[t]: quotient {quot}"),
            None => println!("  in Z[t]: not divisible"),
        }
        println!("  in N[t]: divisible = {}", divides_semiring(&p, &q)?.is_some());
    }
    Ok(())
}
