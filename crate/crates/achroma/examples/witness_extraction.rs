//! Every complete k-colouring is witnessed by an induced subgraph on at most
//! twice as many vertices as the full type multigraph has edges: one edge per
//! type plus one vertex per otherwise-unused colour.

use achroma::colouring::{is_complete, realize, Colouring};
use achroma::graph::{complete_graph, kstar_size, Sign};
use achroma::solver::{psi, witness_subgraph, SearchOptions};

fn main() -> achroma::Result<()> {
    // The all-negative K_7 has achromatic number 2; almost all of it is
    // redundant for witnessing that value.
    let g = complete_graph(7, Sign::Negative);
    let solved = psi(&g, &SearchOptions::default())?;
    let (h, phi) = realize(&g, &solved.witness)?;
    let kept = witness_subgraph(&h, &phi)?;
    let bound = 2 * kstar_size(phi.k());
    println!(
        "order {} at k = {}: witness keeps {:?}, bound {bound}",
        h.order(),
        phi.k(),
        kept
    );
    assert!(kept.len() <= bound);

    let induced = h.induced_subgraph(&kept)?;
    let restricted = Colouring::new(phi.k(), kept.iter().map(|&v| phi.get(v)).collect())?;
    assert!(is_complete(&induced, &restricted)?);
    println!("the induced restriction is still complete");

    // Minus a 2-matching the value rises to 3 and the witness grows a little.
    let mut g = complete_graph(7, Sign::Negative);
    g.remove_edge(0, 1)?;
    g.remove_edge(2, 3)?;
    let solved = psi(&g, &SearchOptions::default())?;
    let (h, phi) = realize(&g, &solved.witness)?;
    let kept = witness_subgraph(&h, &phi)?;
    println!(
        "minus a 2-matching: k = {}, witness keeps {} of {} vertices (bound {})",
        phi.k(),
        kept.len(),
        h.order(),
        2 * kstar_size(phi.k())
    );
    Ok(())
}
