//! What is left of `P(X)` after the Tate part and one binary motive, written
//! as shifted copies of `1+t³` and `2`.

use std::collections::BTreeMap;

use magicsq::cgmb::{express_residual, karpenko_blocks, witness_sum};
use magicsq::poincare::{poincare_poly, FlagVariety};
use magicsq::IntPoly;

fn main() -> magicsq::Result<()> {
    let catalog = karpenko_blocks();
    for b in &catalog {
        println!("block {:<20} {}", b.name, b.poly());
    }
    let blocks = [IntPoly::one_plus_t_pow(3), IntPoly::constant(2)];

    for (circled, top) in [(vec![2], 6), (vec![1, 6], 9)] {
        let fv = FlagVariety::new("E6".parse()?, circled.into_iter().collect())?;
        let total = poincare_poly(&fv)?;
        let residual = &total - &(&IntPoly::one_plus_t_pow(top) * &IntPoly::one_plus_t_pow(15));
        let witness = express_residual(&residual, &blocks)?.expect("a witness exists");
        assert_eq!(witness_sum(&blocks, &witness), residual);
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for p in &witness {
            *counts.entry((p.shift, p.block)).or_default() += 1;
        }
        let terms: Vec<String> = counts
            .iter()
            .map(|(&(shift, block), &n)| format!("{n}·({})t^{shift}", blocks[block]))
            .collect();
        println!("{}: residual {residual}", fv.label());
        println!("  = {}", terms.join(" + "));
    }
    Ok(())
}
