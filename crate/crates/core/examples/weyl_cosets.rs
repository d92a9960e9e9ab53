//! Minimal coset representatives of `W/W_J` and the double cosets
//! `W_I \ W / W_J`.

use magicsq::rootsys::{build_root_system, opposition_involution, parse_nodes};
use magicsq::weyl::{coset_length_counts, double_cosets, minimal_coset_reps};

fn main() -> magicsq::Result<()> {
    let e6 = build_root_system("E6".parse()?)?;
    let levi = parse_nodes("1,3,4,5,6")?;

    println!("cosets of W(E6)/W(A5) by length: {:?}", coset_length_counts(&e6, &levi)?);
    for rep in minimal_coset_reps(&e6, &levi)?.take(5) {
        println!("  length {:>2}: s{:?}", rep.length(), rep.element.reduced_word(&e6));
    }

    let star = opposition_involution(&e6);
    let cells = double_cosets(&e6, &parse_nodes("3,4,5")?, &levi, Some(&star))?;
    println!("W(A3) \\ W(E6) / W(A5) has {} cells", cells.len());
    for c in &cells {
        println!(
            "  length {:>2}, {:>2} cosets, star-invariant {:<5}, stabilizer {:?}",
            c.length,
            c.orbit_size,
            c.star_invariant,
            c.stabilizer_type(&e6).iter().map(|t| t.to_string()).collect::<Vec<_>>()
        );
    }
    Ok(())
}
