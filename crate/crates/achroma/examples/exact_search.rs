//! The exact solver end to end: achromatic and chromatic numbers with
//! witnesses, node budgets, and parallel search. Values and witnesses do not
//! depend on the worker count.

use achroma::colouring::{is_inferred_complete, is_proper};
use achroma::graph::{complete_graph, Sign};
use achroma::solver::{chi, exists_complete_k, psi, psi_upper_bound, SearchOptions};
use achroma::Error;

fn main() -> achroma::Result<()> {
    let mut g = complete_graph(6, Sign::Negative);
    g.set_sign(0, 1, Sign::Positive)?;
    g.set_sign(2, 3, Sign::Positive)?;

    let sequential = SearchOptions::default();
    let solved = psi(&g, &sequential)?;
    println!(
        "psi = {} (upper bound was {}, {} nodes)",
        solved.value,
        solved.upper_bound,
        solved.nodes
    );
    assert!(solved.value <= psi_upper_bound(&g)?);
    assert!(is_inferred_complete(&g, &solved.witness)?);

    let parallel = SearchOptions { node_budget: None, workers: 4 };
    assert_eq!(psi(&g, &parallel)?.value, solved.value);
    println!("four workers find the same value");

    let coloured = chi(&g, &sequential)?;
    assert!(is_proper(&g, &coloured.witness)?);
    println!("chi = {} with a proper witness", coloured.value);

    // Fixed-palette existence: one search per k instead of the full descent.
    for k in [2, solved.value, solved.value + 1] {
        let found = exists_complete_k(&g, k, &sequential)?.witness.is_some();
        println!("complete {k}-colouring exists: {found}");
    }

    // A tiny budget aborts instead of answering wrong.
    let starved = SearchOptions { node_budget: Some(3), workers: 1 };
    match psi(&g, &starved) {
        Err(Error::ResourceExhausted { nodes }) => {
            println!("budget of 3 exhausted after {nodes} nodes")
        }
        other => panic!("expected exhaustion, got {other:?}"),
    }
    Ok(())
}
