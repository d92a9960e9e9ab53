//! The Freudenthal magic square, its conditions table and the Tits indices
//! of isotropic `²E₆` groups.

use magicsq::magictables::{binary_motive_dimension, RostCondition, Tables};
use magicsq::output::{emit, Format};

fn main() -> magicsq::Result<()> {
    let t = Tables::builtin();
    print!("{}", emit(&t.cells(), Format::Text)?);

    for row in &t.conditions {
        println!(
            "{:>6}: f_{}, parabolic {:<7} binary motive top twist {}",
            row.group,
            row.degree,
            row.parabolic,
            binary_motive_dimension(row.degree)
        );
    }

    for cond in RostCondition::ALL {
        let case = t.tits_index_for_rost(cond);
        println!("{cond:?}: circled {:?}, kernel {:?}", case.circled_nodes, case.kernel_type);
    }
    Ok(())
}
