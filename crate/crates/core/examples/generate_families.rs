//! Named families, the Mycielski construction and focalization, printed as
//! graph6 and DOT.
//!
//! cargo run --example generate_families

use boxicity::generators::{focalize, mycielski};
use boxicity::{graph6, Family};

fn main() -> Result<(), boxicity::Error> {
    for spec in ["path:4", "cycle:5", "star:3", "multipartite:2,2,1", "mycielski:complete:2:2", "focalize:cycle:4:2"] {
        let g = spec.parse::<Family>()?.build()?;
        println!("{spec:<24} n={:<2} m={:<3} {}", g.n(), g.edge_count(), graph6::encode(&g));
    }

    // The Grötzsch graph is M_2 applied twice to K_2.
    let c5 = Family::Complete(2).build()?;
    let (m, layout) = mycielski(&c5, 2)?;
    let (grotzsch, _) = mycielski(&m, 2)?;
    println!("\nM_2(K_2) apex {} ; Grötzsch graph {}", layout.apex(), graph6::encode(&grotzsch));

    let (m3, layout) = mycielski(&Family::Path(3).build()?, 3)?;
    for i in 1..=layout.r() {
        println!("copy {i} of P_3 in M_3(P_3): {:?}", layout.copy_set(i).to_vec());
    }
    println!("apex {} has neighbours {:?}", layout.apex(), m3.neighbors(layout.apex()).to_vec());

    let f = focalize(&Family::Cycle(4).build()?, 1)?;
    println!("\nC_4 with one focal vertex, as DOT:\n{}", f.to_dot());
    Ok(())
}
