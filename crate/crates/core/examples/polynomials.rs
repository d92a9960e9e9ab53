//! Exact polynomial arithmetic over big integers.

use magicsq::polyring::{divides_ring, divides_semiring, eval_rational};
use magicsq::IntPoly;

fn main() -> magicsq::Result<()> {
    let m = IntPoly::t_pow_minus_one;
    let p = eval_rational(&[m(8), m(12)], &[m(1), m(4)])?;
    println!("(t^8-1)(t^12-1)/((t-1)(t^4-1)) = {p}");

    let big: IntPoly = "1 + t".parse()?;
    let power = (0..64).fold(IntPoly::one(), |acc, _| &acc * &big);
    println!("(1+t)^64 has middle coefficient {}", power.coeff(32));

    let a: IntPoly = "1 + t^3 + t^6".parse()?;
    let c: IntPoly = "1 + t + t^2".parse()?;
    let f = &a * &c;
    println!("({a})({c}) / ({c}): {:?}", divides_ring(&f, &c)?.map(|q| q.to_string()));

    // 1 + t^3 = (1 + t)(1 - t + t^2): a quotient in Z[t] but not in N[t].
    let (p, q): (IntPoly, IntPoly) = ("1 + t^3".parse()?, "1 + t".parse()?);
    println!("({p}) / ({q}) in Z[t]: {:?}", divides_ring(&p, &q)?.map(|x| x.to_string()));
    println!("({p}) / ({q}) in N[t]: {:?}", divides_semiring(&p, &q)?.map(|x| x.to_string()));
    Ok(())
}
