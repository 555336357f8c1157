//! Switching: resigning every edge across a vertex cut. Two signatures of the
//! same graph are equivalent when some switch maps one onto the other; the
//! decision procedure returns the switch set as a checkable certificate.

use achroma::graph::{Sign, SignedGraph};
use achroma::switching::{are_equivalent, canonical_form, switch, SwitchSet};

fn main() -> achroma::Result<()> {
    // A 5-cycle with one negative edge.
    let mut g = SignedGraph::new(5);
    for i in 0..5 {
        let sign = if i == 2 { Sign::Negative } else { Sign::Positive };
        g.add_edge(i, (i + 1) % 5, sign)?;
    }

    // Switching vertex 3 moves the negative edge one step along the cycle.
    let s: SwitchSet = [3].into_iter().collect();
    let h = switch(&g, &s)?;
    println!("switched at {s:?}:");
    for (u, v, sign) in h.edges() {
        println!("  {u} {v} {sign}");
    }

    match are_equivalent(&g, &h)? {
        Some(cert) => {
            println!("equivalent, certificate {cert:?}");
            assert_eq!(switch(&g, &cert)?, h);
        }
        None => unreachable!("h was built by switching g"),
    }

    // An all-positive 5-cycle is balanced; no switch reaches it from g.
    let balanced = {
        let mut b = SignedGraph::new(5);
        for i in 0..5 {
            b.add_edge(i, (i + 1) % 5, Sign::Positive)?;
        }
        b
    };
    assert!(are_equivalent(&g, &balanced)?.is_none());
    println!("the one-negative cycle is not equivalent to the balanced one");

    // Equivalence is exactly equality of canonical forms.
    assert_eq!(canonical_form(&g).0, canonical_form(&h).0);
    assert_ne!(canonical_form(&g).0, canonical_form(&balanced).0);
    println!("canonical forms agree within the class and differ across classes");
    Ok(())
}
