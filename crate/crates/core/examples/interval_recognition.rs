//! Interval recognition with representations, checked against the
//! chordal plus asteroidal-triple-free characterization.
//!
//! cargo run --example interval_recognition

use boxicity::generators::mycielski;
use boxicity::interval::{chordal_at_free_oracle, interval_representation, is_interval, Recognition};
use boxicity::{corpus, Family};

fn main() -> Result<(), boxicity::Error> {
    let p4 = Family::Path(4).build()?;
    let (m, _) = mycielski(&p4, 2)?;
    for (name, g) in [("P_4", p4), ("M_2(P_4)", m), ("C_4", Family::Cycle(4).build()?)] {
        match is_interval(&g)? {
            Recognition::Interval { order } => {
                println!("{name}: interval, clique order {:?}", order.iter().map(|c| c.to_vec()).collect::<Vec<_>>());
                print!("{}", interval_representation(&g)?);
            }
            Recognition::NotInterval { note } => println!("{name}: not interval ({note})"),
        }
    }

    let mut agree = 0;
    let mut intervals = 0;
    for g in corpus::graphs_up_to(6) {
        let fast = is_interval(&g)?.is_interval();
        assert_eq!(fast, chordal_at_free_oracle(&g));
        intervals += fast as usize;
        agree += 1;
    }
    println!("oracle agreement on {agree} graphs with at most 6 vertices ({intervals} interval)");
    Ok(())
}
