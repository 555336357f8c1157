//! Elementary vertex identification and congruence reduction.
//!
//! Two non-adjacent vertices are identifiable when every common neighbour
//! sees them with the same sign, possibly after switching one of the two.
//! Identifying such a pair is the elementary homomorphism step: it lowers
//! the order by one, raises the proper chromatic number by at most one, and
//! lowers the achromatic number by at most four.
//!
//! Congruence is the stronger relation requiring equal neighbour sets. For
//! non-adjacent `u`, `v` with `N(u) = N(v)` the per-neighbour sign product
//! `sigma(uw) * sigma(vw)` must be one constant `r(u,v)`. The relation is
//! transitive on its own: the constants multiply along chains, and equal
//! neighbour sets already rule out adjacency (an adjacent pair would put
//! `v` inside `N(v)`). Classes are nevertheless computed as connected
//! components of the pairwise relation; tests re-check every within-class
//! pair directly, confirming the closure adds nothing.
//!
//! Contracting every class to its least member gives the reduced signed
//! graph. A member `x` of a class with representative `a` satisfies
//! `sigma(xw) = r(x) * sigma(aw)` for every neighbour `w`; switching exactly
//! the members with `r(x) = -1` aligns all class neighbourhoods at once,
//! because an edge between switched members of two classes is flipped twice.
//! After alignment the contraction is the induced subgraph on the
//! representatives.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::switching::{switch, SwitchSet};
use std::collections::BTreeSet;

/// Neighbours of a vertex paired with their edge signs.
pub type SignedNeighbourhood = BTreeSet<(usize, Sign)>;

/// The signed neighbourhood of `v`.
pub fn signed_neighbourhood(g: &SignedGraph, v: usize) -> SignedNeighbourhood {
    assert!(v < g.order(), "vertex {v} out of range");
    g.edges()
        .filter_map(|(a, b, s)| {
            if a == v {
                Some((b, s))
            } else if b == v {
                Some((a, s))
            } else {
                None
            }
        })
        .collect()
}

/// How the signs towards the common neighbours of a vertex pair compare.
/// `Equal` covers the vacuous case of no common neighbours.
enum CommonSigns {
    Equal,
    Flipped,
    Mixed,
}

fn common_signs(g: &SignedGraph, u: usize, v: usize) -> CommonSigns {
    let mut equal = true;
    let mut flipped = true;
    for (w, su) in signed_neighbourhood(g, u) {
        if let Some(sv) = g.sign(w, v) {
            if su == sv {
                flipped = false;
            } else {
                equal = false;
            }
        }
    }
    if equal {
        CommonSigns::Equal
    } else if flipped {
        CommonSigns::Flipped
    } else {
        CommonSigns::Mixed
    }
}

/// Whether `u` and `v` can be identified: non-adjacent, and their common
/// neighbours all see them with equal signs or all with opposite signs.
/// Switching one endpoint flips its whole side of the comparison and
/// switching both changes nothing, so these two cases are exactly "equal up
/// to switching `u` or `v`".
pub fn identifiable(g: &SignedGraph, u: usize, v: usize) -> bool {
    assert!(u < g.order() && v < g.order(), "vertex pair out of range");
    assert_ne!(u, v, "identifiable needs distinct vertices");
    if g.has_edge(u, v) {
        return false;
    }
    !matches!(common_signs(g, u, v), CommonSigns::Mixed)
}

/// The elementary homomorphic image obtained by merging `v` into `u`. In
/// the flipped case `v` is switched first, so the merged vertex keeps `u`'s
/// signs towards common neighbours. `v` is removed and higher vertices
/// shift down by one.
pub fn identify(g: &SignedGraph, u: usize, v: usize) -> Result<SignedGraph> {
    if u >= g.order() || v >= g.order() || u == v {
        return Err(Error::invalid(format!(
            "cannot identify vertex {u} with vertex {v}"
        )));
    }
    if !identifiable(g, u, v) {
        return Err(Error::invalid(format!(
            "vertices {u} and {v} are not identifiable"
        )));
    }
    let base = match common_signs(g, u, v) {
        CommonSigns::Flipped => switch(g, &SwitchSet::from([v]))?,
        _ => g.clone(),
    };
    let target = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let mut out = SignedGraph::new(g.order() - 1);
    for (x, y, s) in base.edges() {
        let (a, b) = (target(x), target(y));
        match out.sign(a, b) {
            None => out.add_edge(a, b, s)?,
            Some(prev) => debug_assert_eq!(prev, s, "merged edge signs disagree"),
        }
    }
    Ok(out)
}

/// Partition of the vertices into congruence classes: `u` and `v` share a
/// class when they are non-adjacent, have equal neighbour sets, and their
/// sign patterns agree exactly or after flipping one side entirely. Classes
/// are the connected components of this relation, listed sorted by least
/// member, each sorted ascending.
pub fn congruence_classes(g: &SignedGraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let adj = g.adjacency();
    let related = |u: usize, v: usize| -> bool {
        if g.has_edge(u, v) || adj[u].len() != adj[v].len() {
            return false;
        }
        let mut equal = true;
        let mut flipped = true;
        for (&(wu, su), &(wv, sv)) in adj[u].iter().zip(&adj[v]) {
            if wu != wv {
                return false;
            }
            if su == sv {
                flipped = false;
            } else {
                equal = false;
            }
        }
        equal || flipped
    };
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if class_of[s] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[s] = id;
        let mut members = vec![s];
        let mut head = 0;
        while head < members.len() {
            let u = members[head];
            head += 1;
            for (v, slot) in class_of.iter_mut().enumerate() {
                if *slot == usize::MAX && related(u, v) {
                    *slot = id;
                    members.push(v);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

/// The reduced signed graph: every congruence class contracted to its least
/// member. Members whose signs are flipped relative to the representative
/// are switched first, which aligns all class neighbourhoods simultaneously;
/// the contraction is then the induced subgraph on the representatives,
/// relabelled to `0..classes`.
pub fn reduced_signed_graph(g: &SignedGraph) -> SignedGraph {
    let classes = congruence_classes(g);
    let adj = g.adjacency();
    let mut flips = SwitchSet::new();
    let mut reps = Vec::with_capacity(classes.len());
    for class in &classes {
        let rep = class[0];
        reps.push(rep);
        for &x in &class[1..] {
            // One probe fixes the constant sign product towards the
            // representative; empty neighbourhoods need no alignment.
            if let Some(&(w, sx)) = adj[x].first() {
                let sr = g.sign(rep, w).expect("class members share neighbour sets");
                if sx != sr {
                    flips.insert(x);
                }
            }
        }
    }
    let aligned = switch(g, &flips).expect("flip set is in range");
    if cfg!(debug_assertions) {
        for class in &classes {
            let want = signed_neighbourhood(&aligned, class[0]);
            for &x in &class[1..] {
                debug_assert_eq!(
                    signed_neighbourhood(&aligned, x),
                    want,
                    "alignment left a class with unequal neighbourhoods"
                );
            }
        }
    }
    aligned
        .induced_subgraph(&reps)
        .expect("representatives are valid vertices")
}

/// Whether every congruence class is a singleton, i.e. the graph equals its
/// own reduction.
pub fn is_irreducible(g: &SignedGraph) -> bool {
    congruence_classes(g).iter().all(|c| c.len() == 1)
}
