//! Bounds on the boxicity of Mycielski graphs next to exact values.
//!
//! cargo run --release --example mycielski_bounds

use boxicity::bounds::{
    bounds_report, chromatic_boxicity_check, multipartite_mycielski_bounds, mycielski_kn_boxicity, REPORT_HEADER,
};
use boxicity::engine::{exact_boxicity, matching_lower_bound, EngineConfig};
use boxicity::generators::mycielski;
use boxicity::Family;

fn main() -> Result<(), boxicity::Error> {
    let cfg = EngineConfig::default();

    println!("box(M_2(K_n)): formula vs engine");
    for n in 2..=5 {
        let (m, _) = mycielski(&Family::Complete(n).build()?, 2)?;
        println!("  n={n}  formula {}  engine {}", mycielski_kn_boxicity(n)?, exact_boxicity(&m, &cfg)?.value);
    }

    println!("\nM_2 of complete multipartite graphs");
    let wide = EngineConfig::with_cap(26);
    for parts in [vec![2, 2], vec![2, 2, 1], vec![1, 1, 2], vec![3, 1, 1, 1]] {
        let b = multipartite_mycielski_bounds(&parts)?;
        let (m, _) = mycielski(&Family::Multipartite(parts.clone()).build()?, 2)?;
        let exact = exact_boxicity(&m, &wide).map(|r| r.value.to_string()).unwrap_or_else(|e| e.to_string());
        println!("  {parts:?}: lower {} upper {} formula-exact {:?} engine {exact}", b.lower, b.upper, b.exact);
    }

    println!("\n{REPORT_HEADER}");
    for spec in ["cycle:4", "star:3", "complete:4", "multipartite:1,1,2", "path:4"] {
        println!("{}", bounds_report(&spec.parse::<Family>()?.build()?, &cfg)?);
    }

    let (m, _) = mycielski(&Family::Complete(5).build()?, 2)?;
    let h0 = m.induced_subgraph(m.vertices().without(m.n() - 1))?;
    let mb = matching_lower_bound(&h0);
    println!("\nmatching bound on M_2(K_5) minus apex: {} from pairs {:?}", mb.value, mb.pairs);

    let c = chromatic_boxicity_check(&Family::Multipartite(vec![2, 2, 2]).build()?, &cfg)?;
    println!("K_(2x3): box {} chi {} s = {} requires chi >= {} -> {}", c.boxicity, c.chi, c.s, c.required, c.holds);
    Ok(())
}
