//! Vertex identification and irreducibility. Two non-adjacent vertices with
//! matching signed neighbourhoods (up to switching the pair) can be merged
//! without changing the achromatic number by more than the proven gap; a
//! graph with no such pair is irreducible and its structure is constrained.

use achroma::colouring::is_complete;
use achroma::families::{gen_irreducible_large, irreducible_claimed_psi, irreducible_witness};
use achroma::graph::{Sign, SignedGraph};
use achroma::homomorphism::{congruence_classes, identifiable, identify, is_irreducible, reduced_signed_graph};
use achroma::solver::{psi, SearchOptions};

fn main() -> achroma::Result<()> {
    // Twin endpoints: both see vertex 1 negatively, so they can merge.
    let g = SignedGraph::from_edges(
        3,
        &[(0, 1, Sign::Negative), (1, 2, Sign::Negative)],
    );
    assert!(identifiable(&g, 0, 2));
    let merged = identify(&g, 0, 2)?;
    println!("merging the twin endpoints of a 2-path leaves order {}", merged.order());

    // The congruence classes of a star collapse all leaves into one class.
    let star = SignedGraph::from_edges(
        5,
        &[
            (0, 1, Sign::Positive),
            (0, 2, Sign::Positive),
            (0, 3, Sign::Positive),
            (0, 4, Sign::Positive),
        ],
    );
    println!("star congruence classes: {:?}", congruence_classes(&star));
    let reduced = reduced_signed_graph(&star);
    println!("reduced star has order {}", reduced.order());
    assert!(is_irreducible(&reduced));

    // An irreducible family of unbounded order with pinned value: all-negative
    // K_m plus p disjoint positive edges.
    let (p, m) = (2, 8);
    let g = gen_irreducible_large(p, m)?;
    assert!(is_irreducible(&g));
    let claimed = irreducible_claimed_psi(p, m);
    let witness = irreducible_witness(p, m)?;
    assert!(is_complete(&g, &witness)?);
    let solved = psi(&g, &SearchOptions::default())?;
    assert_eq!(solved.value, claimed);
    println!("irreducible order-{m} graph with {p} positive edges: psi = {claimed}");
    Ok(())
}
