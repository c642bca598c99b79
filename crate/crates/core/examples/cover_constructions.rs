//! Explicit cointerval coverings of Mycielski complements, verified and
//! turned into boxes.
//!
//! cargo run --example cover_constructions

use boxicity::bounds::edge_clique_cover;
use boxicity::constructions::{lemma41_cover, thm42_cover};
use boxicity::engine::{cover_to_box_representation, verify_cointerval_cover};
use boxicity::generators::mycielski;
use boxicity::Family;

fn main() -> Result<(), boxicity::Error> {
    for n in 2..=6 {
        let cover = lemma41_cover(n)?;
        println!("K_{n}: {} parts, {}", cover.len(), cover.check());
    }
    print!("\ncertificate for K_3:\n{}", lemma41_cover(3)?);

    for spec in ["cycle:4", "star:3", "path:5", "focalize:cycle:5:2"] {
        let g = spec.parse::<Family>()?.build()?;
        let (theta, cliques) = edge_clique_cover(&g.complement())?;
        let cover = thm42_cover(&g, &cliques)?;
        let (m2, _) = mycielski(&g, 2)?;
        let verdict = verify_cointerval_cover(&m2, &cover)?;
        let boxes = cover_to_box_representation(&m2, &cover)?;
        println!(
            "\n{spec}: theta(complement) = {theta}, focal = {}, cover of {} parts: {verdict}, boxes in dimension {}",
            g.focal_vertices().len(),
            cover.len(),
            boxes.dim()
        );
    }
    Ok(())
}
