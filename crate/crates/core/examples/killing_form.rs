//! Signatures of the Killing form of the E₇ group built from a quaternion
//! algebra, an octonion algebra and three real scalars.

use magicsq::qform::{af_e7_input_grid, af_killing_form_e7};

fn main() -> magicsq::Result<()> {
    println!("Q         O         gamma   dim  signature  witt");
    for (q, o, g) in af_e7_input_grid() {
        let k = af_killing_form_e7(q, o, g)?;
        let kind = |d: bool| if d { "definite" } else { "split" };
        println!(
            "{:<9} {:<9} {}{}{}     {}  {:>9}  {:>4}",
            kind(q.definite),
            kind(o.definite),
            g[0],
            g[1],
            g[2],
            k.dim(),
            k.signature(),
            k.witt_index()
        );
    }
    Ok(())
}
