//! Instance generators showing how far one graph operation can move the
//! achromatic number, plus the hardness reduction from unsigned complete
//! colouring.
//!
//! Each [`FamilyInstance`] packages a signed graph, one marked operation, the
//! claimed achromatic values before and after the operation, complete
//! colourings witnessing the lower claims, and a certification chain.
//! [`FamilyInstance::certify`] re-derives every chain step from scratch:
//! witnesses are re-checked for completeness, closed-form bounds are
//! recomputed, and sign-flip normalizations are re-verified up to switching.
//! Steps marked [`Rule::Recorded`] cite arguments outside the mechanical
//! repertoire; they feed the recorded interval only, never the machine one,
//! so every claim states exactly how much of it is machine-certified.

use crate::colouring::{is_inferred_complete, Colouring, Flag, InferredColouring};
use crate::error::{Error, Result};
use crate::formulas::{psi_complete, CompleteVariant};
use crate::graph::{complete_graph, kstar_size, Sign, SignedGraph};
use crate::homomorphism::identify;
use crate::matching::max_matching;
use crate::solver::SearchOptions;
use crate::switching::{are_equivalent, switch, SwitchSet};

/// The single graph operation a family instance demonstrates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    RemoveVertex(usize),
    /// Flips the sign of the given edge.
    FlipEdgeSign(usize, usize),
    RemoveEdge(usize, usize),
    /// Identifies the two (identifiable) vertices.
    IdentifyPair(usize, usize),
}

impl Operation {
    /// Applies the operation, leaving `g` untouched.
    pub fn apply(&self, g: &SignedGraph) -> Result<SignedGraph> {
        match *self {
            Operation::RemoveVertex(v) => g.remove_vertex(v),
            Operation::FlipEdgeSign(u, v) => {
                let mut h = g.clone();
                h.flip_edge(u, v)?;
                Ok(h)
            }
            Operation::RemoveEdge(u, v) => {
                let mut h = g.clone();
                h.remove_edge(u, v)?;
                Ok(h)
            }
            Operation::IdentifyPair(u, v) => identify(g, u, v),
        }
    }

    /// Largest possible decrease of the achromatic number under this operation.
    fn max_drop(&self) -> usize {
        match self {
            Operation::RemoveVertex(_) => 2,
            Operation::FlipEdgeSign(..) => 2,
            Operation::RemoveEdge(..) => 2,
            Operation::IdentifyPair(..) => 4,
        }
    }

    /// Largest possible increase of the achromatic number under this operation.
    fn max_rise(&self) -> usize {
        match self {
            Operation::RemoveVertex(_) => 0,
            Operation::FlipEdgeSign(..) => 2,
            Operation::RemoveEdge(..) => 2,
            Operation::IdentifyPair(..) => 0,
        }
    }
}

/// Which graph a certification step bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Graph,
    Operated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
}

/// One link of a certification chain: `psi(side) >= value` or `<= value`,
/// together with the rule justifying it.
#[derive(Debug, Clone)]
pub struct CertStep {
    pub side: Side,
    pub bound: BoundKind,
    pub value: usize,
    pub rule: Rule,
}

#[derive(Debug, Clone)]
pub enum Rule {
    /// Lower bound: the stored witness for this side is a complete
    /// `value`-colouring.
    Witness,
    /// Upper bound: `value` equals the side's order.
    Order,
    /// Upper bound: `value` equals twice the side's maximum matching plus one.
    Matching,
    /// Upper bound: `value` is the largest `k` whose complete type multigraph
    /// fits in the side's edge count.
    Size,
    /// Upper bound: flipping the listed edges makes the side
    /// switching-equivalent to an all-negative complete graph minus a
    /// matching of size `missing`, and each flip costs at most two, so
    /// `value` is the base value plus twice the flip count.
    SignFlips {
        missing: usize,
        edges: Vec<(usize, usize)>,
    },
    /// Bound transferred across the marked operation from the other side's
    /// current certified bound.
    OperationStep,
    /// Bound backed by an argument outside the mechanical repertoire; it
    /// reaches the recorded interval only.
    Recorded { note: &'static str },
}

/// Certified bounds for one side. The `machine_*` pair comes from re-derived
/// steps only; `lower`/`upper` additionally admit recorded steps.
#[derive(Debug, Clone, Copy)]
pub struct CertInterval {
    pub machine_lower: usize,
    pub machine_upper: usize,
    pub lower: usize,
    pub upper: usize,
}

impl CertInterval {
    fn unconstrained() -> CertInterval {
        CertInterval {
            machine_lower: 1,
            machine_upper: usize::MAX,
            lower: 1,
            upper: usize::MAX,
        }
    }

    fn note_lower(&mut self, value: usize, machine: bool) {
        self.lower = self.lower.max(value);
        if machine {
            self.machine_lower = self.machine_lower.max(value);
        }
    }

    fn note_upper(&mut self, value: usize, machine: bool) {
        self.upper = self.upper.min(value);
        if machine {
            self.machine_upper = self.machine_upper.min(value);
        }
    }

    /// True when the machine bounds alone pin `value` exactly.
    pub fn pins(&self, value: usize) -> bool {
        self.machine_lower == value && self.machine_upper == value
    }

    /// True when `value` lies in the recorded interval.
    pub fn admits(&self, value: usize) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// Outcome of re-deriving a certification chain.
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub graph: CertInterval,
    pub operated: CertInterval,
    /// Notes attached to the recorded (non-mechanical) steps, in chain order.
    pub notes: Vec<&'static str>,
}

/// A generated graph, a marked operation, and certified achromatic claims.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub name: String,
    pub graph: SignedGraph,
    pub operation: Operation,
    /// Claimed achromatic number of `graph`.
    pub claimed_psi: usize,
    /// Claimed achromatic number of the operated graph.
    pub claimed_after: usize,
    /// Complete `claimed_psi`-colouring of `graph`, when one is shipped.
    pub witness: Option<InferredColouring>,
    /// Complete `claimed_after`-colouring of the operated graph, when shipped.
    pub witness_after: Option<InferredColouring>,
    pub chain: Vec<CertStep>,
}

impl FamilyInstance {
    /// The graph after applying the marked operation.
    pub fn operated(&self) -> Result<SignedGraph> {
        self.operation.apply(&self.graph)
    }

    /// Re-derives the certification chain and checks both claims against the
    /// resulting intervals.
    ///
    /// Machine bounds propagate only through machine bounds; an
    /// [`Rule::OperationStep`] whose premise is merely recorded yields a
    /// merely recorded conclusion. Any step whose justification fails to
    /// check out, or a claim escaping its recorded interval, is an error.
    pub fn certify(&self) -> Result<ChainReport> {
        let operated = self.operated()?;
        if let Some(w) = &self.witness {
            if w.k() != self.claimed_psi {
                return Err(Error::invalid(format!(
                    "{}: witness uses {} colours, claim says {}",
                    self.name,
                    w.k(),
                    self.claimed_psi
                )));
            }
            if !is_inferred_complete(&self.graph, w)? {
                return Err(Error::invalid(format!(
                    "{}: witness is not a complete colouring",
                    self.name
                )));
            }
        }
        if let Some(w) = &self.witness_after {
            if w.k() != self.claimed_after {
                return Err(Error::invalid(format!(
                    "{}: operated witness uses {} colours, claim says {}",
                    self.name,
                    w.k(),
                    self.claimed_after
                )));
            }
            if !is_inferred_complete(&operated, w)? {
                return Err(Error::invalid(format!(
                    "{}: operated witness is not a complete colouring",
                    self.name
                )));
            }
        }

        let mut graph_iv = CertInterval::unconstrained();
        let mut op_iv = CertInterval::unconstrained();
        let mut notes = Vec::new();
        for (index, step) in self.chain.iter().enumerate() {
            let fail = |why: String| {
                Err(Error::invalid(format!(
                    "{}: chain step {index} ({:?} {:?} {}): {why}",
                    self.name, step.side, step.bound, step.value
                )))
            };
            let side_graph = match step.side {
                Side::Graph => &self.graph,
                Side::Operated => &operated,
            };
            match &step.rule {
                Rule::Witness => {
                    if step.bound != BoundKind::Lower {
                        return fail("witness rule only yields lower bounds".into());
                    }
                    let witness = match step.side {
                        Side::Graph => &self.witness,
                        Side::Operated => &self.witness_after,
                    };
                    match witness {
                        Some(w) if w.k() == step.value => {}
                        Some(w) => {
                            return fail(format!("witness has {} colours", w.k()));
                        }
                        None => return fail("no witness stored for this side".into()),
                    }
                }
                Rule::Order => {
                    if step.bound != BoundKind::Upper {
                        return fail("order rule only yields upper bounds".into());
                    }
                    if step.value != side_graph.order() {
                        return fail(format!("order is {}", side_graph.order()));
                    }
                }
                Rule::Matching => {
                    if step.bound != BoundKind::Upper {
                        return fail("matching rule only yields upper bounds".into());
                    }
                    let bound = 2 * max_matching(side_graph) + 1;
                    if step.value != bound {
                        return fail(format!("matching bound is {bound}"));
                    }
                }
                Rule::Size => {
                    if step.bound != BoundKind::Upper {
                        return fail("size rule only yields upper bounds".into());
                    }
                    let bound = largest_k_by_size(side_graph.size());
                    if step.value != bound {
                        return fail(format!("size bound is {bound}"));
                    }
                }
                Rule::SignFlips { missing, edges } => {
                    if step.bound != BoundKind::Upper {
                        return fail("sign-flip rule only yields upper bounds".into());
                    }
                    if let Err(e) = check_sign_flips(side_graph, *missing, edges, step.value) {
                        return fail(e.to_string());
                    }
                }
                Rule::OperationStep => {
                    let (other_iv, to_side) = match step.side {
                        Side::Graph => (op_iv, Side::Graph),
                        Side::Operated => (graph_iv, Side::Operated),
                    };
                    // Transferring towards the operated graph crosses the
                    // operation forwards, towards the original backwards.
                    let (shrink, grow) = match to_side {
                        Side::Operated => (self.operation.max_drop(), self.operation.max_rise()),
                        Side::Graph => (self.operation.max_rise(), self.operation.max_drop()),
                    };
                    match step.bound {
                        BoundKind::Lower => {
                            if other_iv.lower < step.value + shrink {
                                return fail(format!(
                                    "needs the other side's lower bound at {}, have {}",
                                    step.value + shrink,
                                    other_iv.lower
                                ));
                            }
                            let machine = other_iv.machine_lower >= step.value + shrink;
                            match step.side {
                                Side::Graph => graph_iv.note_lower(step.value, machine),
                                Side::Operated => op_iv.note_lower(step.value, machine),
                            }
                            continue;
                        }
                        BoundKind::Upper => {
                            if other_iv.upper.saturating_add(grow) > step.value {
                                return fail(format!(
                                    "needs the other side's upper bound at {}, have {}",
                                    step.value.saturating_sub(grow),
                                    other_iv.upper
                                ));
                            }
                            let machine = other_iv.machine_upper.saturating_add(grow) <= step.value;
                            match step.side {
                                Side::Graph => graph_iv.note_upper(step.value, machine),
                                Side::Operated => op_iv.note_upper(step.value, machine),
                            }
                            continue;
                        }
                    }
                }
                Rule::Recorded { note } => {
                    notes.push(*note);
                    let iv = match step.side {
                        Side::Graph => &mut graph_iv,
                        Side::Operated => &mut op_iv,
                    };
                    match step.bound {
                        BoundKind::Lower => iv.note_lower(step.value, false),
                        BoundKind::Upper => iv.note_upper(step.value, false),
                    }
                    continue;
                }
            }
            // Mechanical rules reach both tracks.
            let iv = match step.side {
                Side::Graph => &mut graph_iv,
                Side::Operated => &mut op_iv,
            };
            match step.bound {
                BoundKind::Lower => iv.note_lower(step.value, true),
                BoundKind::Upper => iv.note_upper(step.value, true),
            }
        }

        if !graph_iv.admits(self.claimed_psi) {
            return Err(Error::invalid(format!(
                "{}: claimed psi {} escapes certified interval [{}, {}]",
                self.name, self.claimed_psi, graph_iv.lower, graph_iv.upper
            )));
        }
        if !op_iv.admits(self.claimed_after) {
            return Err(Error::invalid(format!(
                "{}: claimed operated psi {} escapes certified interval [{}, {}]",
                self.name, self.claimed_after, op_iv.lower, op_iv.upper
            )));
        }
        Ok(ChainReport {
            graph: graph_iv,
            operated: op_iv,
            notes,
        })
    }
}

/// Largest `k` whose complete type multigraph fits in `edges` edge slots.
fn largest_k_by_size(edges: usize) -> usize {
    let mut k = 1;
    while kstar_size(k + 1) <= edges {
        k += 1;
    }
    k
}

/// Checks one sign-flip normalization: the flips must land, up to switching,
/// on an all-negative complete graph minus a matching of size `missing`, and
/// `value` must equal the base achromatic number plus two per flip.
fn check_sign_flips(
    side: &SignedGraph,
    missing: usize,
    edges: &[(usize, usize)],
    value: usize,
) -> Result<()> {
    let mut flipped = side.clone();
    for &(u, v) in edges {
        flipped.flip_edge(u, v)?;
    }
    let n = flipped.order();
    let mut absent = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !flipped.has_edge(u, v) {
                absent.push((u, v));
            }
        }
    }
    if absent.len() != missing {
        return Err(Error::invalid(format!(
            "base graph misses {} pairs, step says {missing}",
            absent.len()
        )));
    }
    let mut covered = vec![false; n];
    for &(u, v) in &absent {
        if covered[u] || covered[v] {
            return Err(Error::invalid("missing pairs do not form a matching"));
        }
        covered[u] = true;
        covered[v] = true;
    }
    let mut base = SignedGraph::new(n);
    for (u, v, _) in flipped.edges() {
        base.add_edge(u, v, Sign::Negative)?;
    }
    if are_equivalent(&flipped, &base)?.is_none() {
        return Err(Error::invalid(
            "flips do not normalize to the all-negative base, even up to switching",
        ));
    }
    let base_psi = if n >= 5 {
        if missing == 0 {
            psi_complete(n, CompleteVariant::AllNegative)?
        } else {
            psi_complete(n, CompleteVariant::NegativeMinusMatching(missing))?
        }
    } else {
        crate::solver::psi(&base, &SearchOptions::default())?.value
    };
    let bound = base_psi + 2 * edges.len();
    if value != bound {
        return Err(Error::invalid(format!("flip chain yields bound {bound}")));
    }
    Ok(())
}

/// Builds an inferred colouring from plain integer colours: magnitude and a
/// minus flag exactly when the colour is negative.
fn inferred_from_ints(k: usize, colours: &[i32]) -> Result<InferredColouring> {
    let items = colours
        .iter()
        .map(|&c| {
            (
                c.unsigned_abs(),
                if c < 0 { Flag::Minus } else { Flag::Plus },
            )
        })
        .collect();
    InferredColouring::new(k, items)
}

/// Instance where removing the marked vertex drops the achromatic number by
/// exactly two, the most a single vertex removal can.
///
/// Even `k = 2p`: `K_{p,p}` with `u_i v_j` negative exactly when `i <= j`;
/// assigning `+i` to `u_i` and `v_i` is complete, the order pins `psi = k`,
/// and the size bound pins the graph without `u_1` at `k - 2`. Odd
/// `k = 2p + 1` adds a positive and a negative apex over the `u`-side sharing
/// colour `0`; the size bound pins the graph and the matching bound the
/// operated side. Errors for `k < 3`.
pub fn gen_remove_vertex(k: usize) -> Result<FamilyInstance> {
    if k < 3 {
        return Err(Error::invalid("vertex-removal family requires k >= 3"));
    }
    let p = k / 2;
    let mut chain = vec![CertStep {
        side: Side::Graph,
        bound: BoundKind::Lower,
        value: k,
        rule: Rule::Witness,
    }];
    let (graph, witness) = if k % 2 == 0 {
        let mut g = SignedGraph::new(2 * p);
        for a in 0..p {
            for b in 0..p {
                let sign = if a <= b { Sign::Negative } else { Sign::Positive };
                g.add_edge(a, p + b, sign)?;
            }
        }
        let ints: Vec<i32> = (0..2 * p).map(|t| (t % p + 1) as i32).collect();
        chain.push(CertStep {
            side: Side::Graph,
            bound: BoundKind::Upper,
            value: k,
            rule: Rule::Order,
        });
        (g, inferred_from_ints(k, &ints)?)
    } else {
        let mut g = SignedGraph::new(2 * p + 2);
        for a in 0..p {
            for b in 0..p {
                let sign = if a <= b { Sign::Negative } else { Sign::Positive };
                g.add_edge(a, p + b, sign)?;
            }
        }
        for a in 0..p {
            g.add_edge(2 * p, a, Sign::Positive)?;
            g.add_edge(2 * p + 1, a, Sign::Negative)?;
        }
        let mut ints: Vec<i32> = (0..2 * p).map(|t| (t % p + 1) as i32).collect();
        ints.push(0);
        ints.push(0);
        chain.push(CertStep {
            side: Side::Graph,
            bound: BoundKind::Upper,
            value: k,
            rule: Rule::Size,
        });
        (g, inferred_from_ints(k, &ints)?)
    };
    chain.push(CertStep {
        side: Side::Operated,
        bound: BoundKind::Lower,
        value: k - 2,
        rule: Rule::OperationStep,
    });
    chain.push(CertStep {
        side: Side::Operated,
        bound: BoundKind::Upper,
        value: k - 2,
        rule: if k % 2 == 0 { Rule::Size } else { Rule::Matching },
    });
    Ok(FamilyInstance {
        name: format!("remove-vertex-{k}"),
        graph,
        operation: Operation::RemoveVertex(0),
        claimed_psi: k,
        claimed_after: k - 2,
        witness: Some(witness),
        witness_after: None,
        chain,
    })
}

/// Instance where flipping the marked edge sign drops the achromatic number
/// by exactly two, the most a single sign change can.
///
/// Even `k = 2p`: all-negative `K_{2p}` with a positive partial matching
/// `e_1..e_{p-1}`; the marked edge is `e_1`'s untouched partner pair
/// `(u_1, v_1)` turned positive in the construction, and flip chains pin both
/// sides. Odd `k = 2p + 1` plays the same game on `K_{2p+2}` minus one edge,
/// whose missing pair supplies the zero types. Errors for `k < 4`.
pub fn gen_resign_edge(k: usize) -> Result<FamilyInstance> {
    if k < 4 {
        return Err(Error::invalid("edge-resign family requires k >= 4"));
    }
    let p = k / 2;
    if k % 2 == 0 {
        let mut g = complete_graph(2 * p, Sign::Negative);
        let pairs: Vec<(usize, usize)> = (0..p).map(|t| (t, p + t)).collect();
        for &(u, v) in &pairs[..p - 1] {
            g.set_sign(u, v, Sign::Positive)?;
        }
        let mut ints = vec![0i32; 2 * p];
        for t in 0..p {
            ints[t] = (t + 1) as i32;
            ints[p + t] = if t < p - 1 { -((t + 1) as i32) } else { p as i32 };
        }
        let chain = vec![
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Lower,
                value: k,
                rule: Rule::Witness,
            },
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Upper,
                value: k,
                rule: Rule::SignFlips {
                    missing: 0,
                    edges: pairs[..p - 1].to_vec(),
                },
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Lower,
                value: k - 2,
                rule: Rule::OperationStep,
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Upper,
                value: k - 2,
                rule: Rule::SignFlips {
                    missing: 0,
                    edges: pairs[1..p - 1].to_vec(),
                },
            },
        ];
        Ok(FamilyInstance {
            name: format!("resign-edge-{k}"),
            graph: g,
            operation: Operation::FlipEdgeSign(0, p),
            claimed_psi: k,
            claimed_after: k - 2,
            witness: Some(inferred_from_ints(k, &ints)?),
            witness_after: None,
            chain,
        })
    } else {
        // Vertices: u_0..u_p = 0..p, v_0..v_p = p+1..2p+1; the pair (u_0, v_0)
        // stays a non-edge.
        let n = 2 * p + 2;
        let mut g = SignedGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if (a, b) == (0, p + 1) {
                    continue;
                }
                g.add_edge(a, b, Sign::Negative)?;
            }
        }
        let pairs: Vec<(usize, usize)> = (1..p).map(|t| (t, p + 1 + t)).collect();
        for &(u, v) in &pairs {
            g.set_sign(u, v, Sign::Positive)?;
        }
        // u_t gets +t (u_0 gets 0); v_t gets -t (v_0 gets 0, v_p gets +p).
        let ints: Vec<i32> = (0..=p as i32)
            .chain((0..p as i32).map(|t| -t))
            .chain([p as i32])
            .collect();
        debug_assert_eq!(ints.len(), n);
        // Vertex 0 carries the minus flag so the missing pair splits the zero
        // class by flag.
        let mut witness = inferred_from_ints(k, &ints)?;
        let mut items = witness.items().to_vec();
        items[0] = (0, Flag::Minus);
        witness = InferredColouring::new(k, items)?;
        let chain = vec![
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Lower,
                value: k,
                rule: Rule::Witness,
            },
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Upper,
                value: k,
                rule: Rule::SignFlips {
                    missing: 1,
                    edges: pairs.clone(),
                },
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Lower,
                value: k - 2,
                rule: Rule::OperationStep,
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Upper,
                value: k - 2,
                rule: Rule::SignFlips {
                    missing: 1,
                    edges: pairs[1..].to_vec(),
                },
            },
        ];
        Ok(FamilyInstance {
            name: format!("resign-edge-{k}"),
            graph: g,
            operation: Operation::FlipEdgeSign(1, p + 2),
            claimed_psi: k,
            claimed_after: k - 2,
            witness: Some(witness),
            witness_after: None,
            chain,
        })
    }
}

/// Instance where removing the marked edge drops the achromatic number by
/// exactly two, the most a single edge removal can.
///
/// Even `k = 2p`: a negative clique and a positive clique joined by a
/// negative perfect matching; the marked edge is the only realizer of one
/// positive type, and the size bound plus a recorded argument pin the drop.
/// Odd `k = 2p + 1`: `K_{2p+2}` minus one pair with one vertex switched and a
/// positive partial matching; flip chains pin both sides mechanically.
/// Errors for `k < 5`.
pub fn gen_remove_edge_lower(k: usize) -> Result<FamilyInstance> {
    if k < 5 {
        return Err(Error::invalid("edge-removal drop family requires k >= 5"));
    }
    let p = k / 2;
    if k % 2 == 0 {
        let mut g = SignedGraph::new(2 * p);
        for a in 0..p {
            for b in a + 1..p {
                g.add_edge(a, b, Sign::Negative)?;
                g.add_edge(p + a, p + b, Sign::Positive)?;
            }
        }
        for t in 0..p {
            g.add_edge(t, p + t, Sign::Negative)?;
        }
        let ints: Vec<i32> = (0..2 * p).map(|t| (t % p + 1) as i32).collect();
        let chain = vec![
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Lower,
                value: k,
                rule: Rule::Witness,
            },
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Upper,
                value: k,
                rule: Rule::Size,
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Lower,
                value: k - 2,
                rule: Rule::OperationStep,
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Upper,
                value: k - 1,
                rule: Rule::Size,
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Upper,
                value: k - 2,
                rule: Rule::Recorded {
                    note: "the removed edge was the only realizer of its positive type, \
                           and a parity count over the remaining palette rules out k - 1",
                },
            },
        ];
        Ok(FamilyInstance {
            name: format!("remove-edge-lower-{k}"),
            graph: g,
            operation: Operation::RemoveEdge(p, 2 * p - 1),
            claimed_psi: k,
            claimed_after: k - 2,
            witness: Some(inferred_from_ints(k, &ints)?),
            witness_after: None,
            chain,
        })
    } else {
        // Pairs e_1..e_{p+1} = (0,1), (2,3), ..., (2p, 2p+1); the last pair is
        // a non-edge, vertex 2p is switched, pairs e_2..e_p are positive.
        let n = 2 * p + 2;
        let mut g = SignedGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if (a, b) == (2 * p, 2 * p + 1) {
                    continue;
                }
                g.add_edge(a, b, Sign::Negative)?;
            }
        }
        g = switch(&g, &SwitchSet::from([2 * p]))?;
        let pairs: Vec<(usize, usize)> = (1..p).map(|i| (2 * i, 2 * i + 1)).collect();
        for &(u, v) in &pairs {
            g.set_sign(u, v, Sign::Positive)?;
        }
        let mut ints = vec![0i32; n];
        ints[0] = p as i32;
        ints[1] = p as i32;
        for i in 1..p {
            ints[2 * i] = i as i32;
            ints[2 * i + 1] = -(i as i32);
        }
        ints[2 * p] = 0;
        ints[2 * p + 1] = 0;
        let chain = vec![
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Lower,
                value: k,
                rule: Rule::Witness,
            },
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Upper,
                value: k,
                rule: Rule::SignFlips {
                    missing: 1,
                    edges: pairs.clone(),
                },
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Lower,
                value: k - 2,
                rule: Rule::OperationStep,
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Upper,
                value: k - 2,
                rule: Rule::SignFlips {
                    missing: 2,
                    edges: pairs[..p - 2].to_vec(),
                },
            },
        ];
        Ok(FamilyInstance {
            name: format!("remove-edge-lower-{k}"),
            graph: g,
            operation: Operation::RemoveEdge(2 * p - 2, 2 * p - 1),
            claimed_psi: k,
            claimed_after: k - 2,
            witness: Some(inferred_from_ints(k, &ints)?),
            witness_after: None,
            chain,
        })
    }
}

/// Builds the even edge-removal-rise graph: a negative triangle `k_1 k_2 k_3`
/// with pendant-class vertices `v_1..v_4` under `k_1, k_2` and `w_3` under
/// the triangle, extended one level per extra `k_q`. Returns the graph and
/// the indices of `k_1..k_p`. All edges are negative.
fn rise_even_graph(p: usize) -> Result<(SignedGraph, Vec<usize>)> {
    let mut g = SignedGraph::new(3 * p - 1);
    let mut k_idx = vec![0, 1, 2];
    g.add_edge(0, 1, Sign::Negative)?;
    g.add_edge(0, 2, Sign::Negative)?;
    g.add_edge(1, 2, Sign::Negative)?;
    for v in 3..7 {
        g.add_edge(0, v, Sign::Negative)?;
        g.add_edge(1, v, Sign::Negative)?;
    }
    for t in 0..3 {
        g.add_edge(7, t, Sign::Negative)?;
    }
    for q in 3..p {
        let base = 8 + 3 * (q - 3);
        for &ki in k_idx.iter().take(q) {
            for x in [base, base + 1, base + 2] {
                g.add_edge(ki, x, Sign::Negative)?;
            }
        }
        g.add_edge(base + 1, base + 2, Sign::Negative)?;
        k_idx.push(base + 1);
    }
    Ok((g, k_idx))
}

/// Witness for [`rise_even_graph`] instances: the `base` colours cover the
/// order-8 core, each extension level adds one magnitude on its three new
/// vertices with the first carrying the minus flag.
fn rise_even_witness(p: usize, k: usize, base: [(u32, Flag); 8], start: u32) -> Result<InferredColouring> {
    let mut items = base.to_vec();
    for q in 3..p {
        let m = start + (q as u32 - 3);
        items.push((m, Flag::Minus));
        items.push((m, Flag::Plus));
        items.push((m, Flag::Plus));
    }
    InferredColouring::new(k, items)
}

/// Instance where removing the marked edge raises the achromatic number by
/// exactly two, the most a single edge removal can.
///
/// Even `k = 2p`: an all-negative graph whose marked edge `k_1 v_1` pins
/// `v_1`'s colour; without it a complete `k`-colouring exists while the graph
/// itself stops at `k - 2` (the upper bound on the original side is
/// recorded). Odd `k = 2p + 1`: `K_{p,2p+1}` all negative minus a small
/// matching; the matching bound pins the operated side mechanically. Both
/// claims are stated for the graph before (`claimed_psi = k - 2`) and after
/// (`claimed_after = k`) the removal. Errors for `k < 6`.
pub fn gen_remove_edge_upper(k: usize) -> Result<FamilyInstance> {
    if k < 6 {
        return Err(Error::invalid("edge-removal rise family requires k >= 6"));
    }
    if k % 2 == 0 {
        let p = k / 2;
        let (g, _) = rise_even_graph(p)?;
        let graph_base = [
            (1, Flag::Plus),
            (1, Flag::Plus),
            (2, Flag::Plus),
            (2, Flag::Minus),
            (2, Flag::Minus),
            (2, Flag::Minus),
            (2, Flag::Minus),
            (2, Flag::Plus),
        ];
        let after_base = [
            (1, Flag::Plus),
            (2, Flag::Plus),
            (3, Flag::Plus),
            (1, Flag::Minus),
            (1, Flag::Plus),
            (2, Flag::Plus),
            (3, Flag::Minus),
            (3, Flag::Plus),
        ];
        let witness = rise_even_witness(p, k - 2, graph_base, 3)?;
        let witness_after = rise_even_witness(p, k, after_base, 4)?;
        let chain = vec![
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Lower,
                value: k,
                rule: Rule::Witness,
            },
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Lower,
                value: k - 2,
                rule: Rule::Witness,
            },
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Upper,
                value: k - 2,
                rule: Rule::Recorded {
                    note: "with the marked edge present, the pendant class under k_1 k_2 \
                           cannot split flags, which caps the palette at k - 2",
                },
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Upper,
                value: k,
                rule: Rule::OperationStep,
            },
        ];
        Ok(FamilyInstance {
            name: format!("remove-edge-upper-{k}"),
            graph: g,
            operation: Operation::RemoveEdge(0, 3),
            claimed_psi: k - 2,
            claimed_after: k,
            witness: Some(witness),
            witness_after: Some(witness_after),
            chain,
        })
    } else {
        let p = (k - 1) / 2;
        let n = 3 * p + 1;
        let mut g = SignedGraph::new(n);
        for a in 0..p {
            for j in 1..=2 * p + 1 {
                if j >= 2 && j < p && a == j - 1 {
                    continue;
                }
                g.add_edge(a, p + j - 1, Sign::Negative)?;
            }
        }
        let mut items = vec![(0u32, Flag::Plus); n];
        for i in 1..=p {
            items[i - 1] = (i as u32, Flag::Plus);
        }
        items[p] = (1, Flag::Plus);
        for j in 2..=p {
            items[p + j - 1] = (j as u32, Flag::Minus);
        }
        for j in p + 1..=2 * p - 1 {
            items[p + j - 1] = ((j - p + 1) as u32, Flag::Plus);
        }
        items[3 * p - 1] = (0, Flag::Plus);
        items[3 * p] = (0, Flag::Minus);
        let witness_after = InferredColouring::new(k, items)?;
        let chain = vec![
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Lower,
                value: k,
                rule: Rule::Witness,
            },
            CertStep {
                side: Side::Operated,
                bound: BoundKind::Upper,
                value: k,
                rule: Rule::Matching,
            },
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Lower,
                value: k - 2,
                rule: Rule::OperationStep,
            },
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Upper,
                value: k,
                rule: Rule::Matching,
            },
            CertStep {
                side: Side::Graph,
                bound: BoundKind::Upper,
                value: k - 2,
                rule: Rule::Recorded {
                    note: "with the marked edge present, every zero-class split forces an \
                           improper pair on the small side, which caps the palette at k - 2",
                },
            },
        ];
        Ok(FamilyInstance {
            name: format!("remove-edge-upper-{k}"),
            graph: g,
            operation: Operation::RemoveEdge(p - 1, 2 * p - 1),
            claimed_psi: k - 2,
            claimed_after: k,
            witness: None,
            witness_after: Some(witness_after),
            chain,
        })
    }
}

/// Core of the identification family: all-negative `K_{2p+2}` on
/// `x_1..x_{p+1}, y_1..y_{p+1}` with `x_i y_i` positive for `i < p`, plus an
/// apex `v` under the `x`-side and an apex `w` under the `y`-side. Returns
/// the graph and a complete `(2p + 2)`-colouring of it.
fn drop_core(p: usize) -> Result<(SignedGraph, Vec<i32>)> {
    let n = 2 * p + 4;
    let mut g = SignedGraph::new(n);
    for a in 0..2 * p + 2 {
        for b in a + 1..2 * p + 2 {
            g.add_edge(a, b, Sign::Negative)?;
        }
    }
    for t in 0..p - 1 {
        g.set_sign(t, p + 1 + t, Sign::Positive)?;
    }
    for t in 0..=p {
        g.add_edge(t, 2 * p + 2, Sign::Negative)?;
        g.add_edge(p + 1 + t, 2 * p + 3, Sign::Negative)?;
    }
    let mut ints = vec![0i32; n];
    for t in 0..p - 1 {
        ints[t] = (t + 1) as i32;
        ints[p + 1 + t] = -((t + 1) as i32);
    }
    ints[p - 1] = p as i32;
    ints[p] = p as i32;
    ints[2 * p] = (p + 1) as i32;
    ints[2 * p + 1] = (p + 1) as i32;
    ints[2 * p + 2] = -((p + 1) as i32);
    ints[2 * p + 3] = -(p as i32);
    Ok((g, ints))
}

/// Instance where identifying the marked vertex pair drops the achromatic
/// number by exactly two, beating the one-sided guarantee that an elementary
/// image loses at most four.
///
/// Even `k = 2p`: the identification of the two apexes of [`drop_core`]
/// completes a negative `K_{2p+3}` with a positive partial matching, whose
/// flip chain stops at `k`, while the original graph reaches `k + 2`. Odd
/// `k = 2p + 1` adds a dominating non-adjacent pair `x, y` carrying the zero
/// types. The upper bound `k + 2` on the original side counts positive edges
/// against flag-uniform colour classes and is recorded. Errors for `k < 8`.
pub fn gen_elementary_drop(k: usize) -> Result<FamilyInstance> {
    if k < 8 {
        return Err(Error::invalid("identification family requires k >= 8"));
    }
    let p = k / 2;
    let (graph, ints, order, missing) = if k % 2 == 0 {
        let (g, ints) = drop_core(p)?;
        let order = 2 * p + 4;
        (g, ints, order, 0)
    } else {
        let (core, mut ints) = drop_core(p)?;
        let n = 2 * p + 6;
        let mut g = SignedGraph::new(n);
        for (u, v, sign) in core.edges() {
            g.add_edge(u, v, sign)?;
        }
        for t in 0..2 * p + 4 {
            g.add_edge(t, 2 * p + 4, Sign::Negative)?;
            g.add_edge(t, 2 * p + 5, Sign::Negative)?;
        }
        ints.push(0);
        ints.push(0);
        (g, ints, n, 1)
    };
    let mut witness = inferred_from_ints(k + 2, &ints)?;
    if k % 2 == 1 {
        // The second dominating apex takes the minus flag of the zero class.
        let mut items = witness.items().to_vec();
        items[order - 1] = (0, Flag::Minus);
        witness = InferredColouring::new(k + 2, items)?;
    }
    let pairs: Vec<(usize, usize)> = (0..p - 1).map(|t| (t, p + 1 + t)).collect();
    let chain = vec![
        CertStep {
            side: Side::Graph,
            bound: BoundKind::Lower,
            value: k + 2,
            rule: Rule::Witness,
        },
        CertStep {
            side: Side::Graph,
            bound: BoundKind::Upper,
            value: order,
            rule: Rule::Order,
        },
        CertStep {
            side: Side::Graph,
            bound: BoundKind::Upper,
            value: k + 2,
            rule: Rule::Recorded {
                note: "colour classes must keep one flag except across a positive edge, \
                       and the positive matching is too small to serve every class pair \
                       beyond k + 2 colours",
            },
        },
        CertStep {
            side: Side::Operated,
            bound: BoundKind::Upper,
            value: k,
            rule: Rule::SignFlips {
                missing,
                edges: pairs,
            },
        },
        CertStep {
            side: Side::Operated,
            bound: BoundKind::Lower,
            value: k - 2,
            rule: Rule::OperationStep,
        },
    ];
    Ok(FamilyInstance {
        name: format!("elementary-drop-{k}"),
        graph,
        operation: Operation::IdentifyPair(2 * p + 2, 2 * p + 3),
        claimed_psi: k + 2,
        claimed_after: k,
        witness: Some(witness),
        witness_after: None,
        chain,
    })
}

/// Positive `K_{2k}` with a negative perfect matching. For odd `k >= 3` the
/// proper palette needs only `k + 1` colours while the achromatic number
/// reaches `2k`, so every palette size in between carries a complete
/// colouring by interpolation. Errors unless `k` is odd and at least 3.
pub fn gen_interpolation(k: usize) -> Result<SignedGraph> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::invalid("interpolation family requires odd k >= 3"));
    }
    let mut g = complete_graph(2 * k, Sign::Positive);
    for i in 0..k {
        g.set_sign(2 * i, 2 * i + 1, Sign::Negative)?;
    }
    Ok(g)
}

/// A proper `(k + 1)`-colouring and a complete `2k`-colouring of
/// [`gen_interpolation`]`(k)`.
pub fn interpolation_witnesses(k: usize) -> Result<(Colouring, Colouring)> {
    gen_interpolation(k)?;
    let mut chi_ints = vec![0i32; 2 * k];
    for i in 0..k {
        let j = i + 1;
        let c = if j % 2 == 0 {
            (j / 2) as i32
        } else {
            -(j.div_ceil(2) as i32)
        };
        chi_ints[2 * i] = c;
        chi_ints[2 * i + 1] = c;
    }
    let mut psi_ints = vec![0i32; 2 * k];
    for i in 0..k - 1 {
        psi_ints[2 * i] = (i + 1) as i32;
        psi_ints[2 * i + 1] = -((i + 2) as i32);
    }
    psi_ints[2 * k - 2] = k as i32;
    psi_ints[2 * k - 1] = -1;
    Ok((
        Colouring::from_ints(k + 1, &chi_ints)?,
        Colouring::from_ints(2 * k, &psi_ints)?,
    ))
}

/// Order-6 graph that is perfect as an unsigned graph yet has clique and
/// chromatic number 3 with achromatic number 6, so neither invariant pins
/// the achromatic number on perfect underlying graphs. The shipped complete
/// 4-colouring already separates both pairs.
pub fn gen_perfect_counterexample() -> SignedGraph {
    SignedGraph::from_edges(
        6,
        &[
            (0, 1, Sign::Positive),
            (0, 2, Sign::Negative),
            (0, 3, Sign::Negative),
            (1, 2, Sign::Negative),
            (1, 3, Sign::Negative),
            (3, 4, Sign::Negative),
            (3, 5, Sign::Negative),
            (2, 4, Sign::Positive),
            (2, 5, Sign::Positive),
            (4, 5, Sign::Positive),
        ],
    )
}

/// A proper 3-colouring and a complete 4-colouring of
/// [`gen_perfect_counterexample`].
pub fn perfect_counterexample_witnesses() -> (Colouring, Colouring) {
    let proper = Colouring::from_ints(3, &[1, -1, 0, 0, -1, 1])
        .expect("fixture colouring is valid");
    let complete = Colouring::from_ints(4, &[1, -1, -2, 2, 2, 1])
        .expect("fixture colouring is valid");
    (proper, complete)
}

/// All-negative `K_m` with `p` disjoint positive edges: irreducible for every
/// `m >= 2p` because no two vertices share a signed neighbourhood, with
/// achromatic number `min(2p + 2, m)`. Errors for `p < 1` or `m < 2p`.
pub fn gen_irreducible_large(p: usize, m: usize) -> Result<SignedGraph> {
    if p < 1 {
        return Err(Error::invalid("irreducible family requires p >= 1"));
    }
    if m < 2 * p {
        return Err(Error::invalid("irreducible family requires m >= 2p"));
    }
    let mut g = complete_graph(m, Sign::Negative);
    for i in 0..p {
        g.set_sign(2 * i, 2 * i + 1, Sign::Positive)?;
    }
    Ok(g)
}

/// The achromatic number of [`gen_irreducible_large`]`(p, m)`.
pub fn irreducible_claimed_psi(p: usize, m: usize) -> usize {
    (2 * p + 2).min(m)
}

/// Complete `min(2p + 2, m)`-colouring of [`gen_irreducible_large`]`(p, m)`:
/// opposite colours across each positive edge, colour `0` on a lone spare
/// vertex, and one shared positive colour on all remaining spares.
pub fn irreducible_witness(p: usize, m: usize) -> Result<Colouring> {
    gen_irreducible_large(p, m)?;
    let k = irreducible_claimed_psi(p, m);
    let mut ints = vec![0i32; m];
    for i in 0..p {
        ints[2 * i] = (i + 1) as i32;
        ints[2 * i + 1] = -((i + 1) as i32);
    }
    if m >= 2 * p + 2 {
        ints[2 * p..].fill((p + 1) as i32);
    }
    Colouring::from_ints(k, &ints)
}

/// Signed image of the hardness reduction: deciding whether its achromatic
/// number reaches `2(N + k)` with `N = (n + k)^2` is the same as deciding
/// whether the input graph has a complete unsigned `k`-colouring. The input
/// signature is ignored; only the adjacency enters. Blocks, in index order: a
/// positive copy of `g`, a negative clique `c_1..c_k` joined negatively to
/// it, and negative/positive cliques `v^-, v^+` of order `N` joined by a
/// negative perfect matching, negatively/positively to the `c`-clique.
/// Errors for `k = 0` or an empty input graph.
pub fn gen_np_reduction(g: &SignedGraph, k: usize) -> Result<SignedGraph> {
    if k == 0 {
        return Err(Error::invalid("hardness reduction requires k >= 1"));
    }
    let n = g.order();
    if n == 0 {
        return Err(Error::invalid("hardness reduction requires a non-empty graph"));
    }
    let big = (n + k) * (n + k);
    let c0 = n;
    let vm0 = n + k;
    let vp0 = n + k + big;
    let mut out = SignedGraph::new(n + k + 2 * big);
    for (u, v, _) in g.edges() {
        out.add_edge(u, v, Sign::Positive)?;
    }
    for i in 0..k {
        for j in i + 1..k {
            out.add_edge(c0 + i, c0 + j, Sign::Negative)?;
        }
    }
    for t in 0..n {
        for i in 0..k {
            out.add_edge(t, c0 + i, Sign::Negative)?;
        }
    }
    for i in 0..big {
        for j in i + 1..big {
            out.add_edge(vm0 + i, vm0 + j, Sign::Negative)?;
            out.add_edge(vp0 + i, vp0 + j, Sign::Positive)?;
        }
    }
    for i in 0..big {
        out.add_edge(vm0 + i, vp0 + i, Sign::Negative)?;
        for j in 0..k {
            out.add_edge(vm0 + i, c0 + j, Sign::Negative)?;
            out.add_edge(vp0 + i, c0 + j, Sign::Positive)?;
        }
    }
    Ok(out)
}

/// Lifts a complete unsigned colouring of `g` to a complete
/// `2(N + k)`-colouring of [`gen_np_reduction`]`(g, k)`.
///
/// `phi` must be proper and complete on the underlying graph and use exactly
/// the colours `1..=k'` for some `k' >= k`; it is copied verbatim onto the
/// positive copy of `g`, the `c`-clique takes `+1..+k`, and the matched `v`
/// pairs share `+(k+1)..+(k+N)`.
pub fn np_forward_colouring(g: &SignedGraph, k: usize, phi: &[usize]) -> Result<Colouring> {
    if k == 0 {
        return Err(Error::invalid("hardness reduction requires k >= 1"));
    }
    let n = g.order();
    if n == 0 {
        return Err(Error::invalid("hardness reduction requires a non-empty graph"));
    }
    if phi.len() != n {
        return Err(Error::invalid("colouring length must match the graph order"));
    }
    if phi.contains(&0) {
        return Err(Error::invalid("unsigned colours must be positive"));
    }
    let kp = *phi.iter().max().expect("graph is non-empty");
    if kp < k {
        return Err(Error::invalid(format!(
            "colouring uses {kp} colours, reduction needs at least {k}"
        )));
    }
    let mut used = vec![false; kp + 1];
    for &c in phi {
        used[c] = true;
    }
    if used[1..].iter().any(|&u| !u) {
        return Err(Error::invalid("colour set must be exactly 1..=k'"));
    }
    let mut pair_met = vec![false; (kp + 1) * (kp + 1)];
    for (u, v, _) in g.edges() {
        if phi[u] == phi[v] {
            return Err(Error::invalid("unsigned colouring is not proper"));
        }
        let (a, b) = (phi[u].min(phi[v]), phi[u].max(phi[v]));
        pair_met[a * (kp + 1) + b] = true;
    }
    for a in 1..=kp {
        for b in a + 1..=kp {
            if !pair_met[a * (kp + 1) + b] {
                return Err(Error::invalid(format!(
                    "unsigned colouring is not complete: colours {a} and {b} never meet"
                )));
            }
        }
    }
    let big = (n + k) * (n + k);
    let mut ints = Vec::with_capacity(n + k + 2 * big);
    ints.extend(phi.iter().map(|&c| c as i32));
    ints.extend((1..=k).map(|i| i as i32));
    for _ in 0..2 {
        ints.extend((1..=big).map(|i| (k + i) as i32));
    }
    Colouring::from_ints(2 * (big + k), &ints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{is_complete, is_proper};
    use crate::graph::Sign::{Negative as N, Positive as P};
    use crate::homomorphism::is_irreducible;
    use crate::solver::{exists_complete_k, psi};

    fn solver_psi(g: &SignedGraph) -> usize {
        psi(g, &SearchOptions::default()).unwrap().value
    }

    #[test]
    fn remove_vertex_chain_pins_both_claims() {
        for k in 3..=10 {
            let inst = gen_remove_vertex(k).unwrap();
            let report = inst.certify().unwrap();
            assert!(report.graph.pins(inst.claimed_psi), "k={k}");
            assert!(report.operated.pins(inst.claimed_after), "k={k}");
            assert!(report.notes.is_empty());
        }
    }

    #[test]
    fn remove_vertex_small_matches_solver() {
        for k in 3..=6 {
            let inst = gen_remove_vertex(k).unwrap();
            assert_eq!(solver_psi(&inst.graph), k, "k={k}");
            assert_eq!(solver_psi(&inst.operated().unwrap()), k - 2, "k={k}");
        }
    }

    #[test]
    fn resign_edge_chain_pins_both_claims() {
        for k in 4..=10 {
            let inst = gen_resign_edge(k).unwrap();
            let report = inst.certify().unwrap();
            assert!(report.graph.pins(k), "k={k}");
            assert!(report.operated.pins(k - 2), "k={k}");
            // The marked edge is positive and flips to negative.
            if let Operation::FlipEdgeSign(u, v) = inst.operation {
                assert_eq!(inst.graph.sign(u, v), Some(P));
                assert_eq!(inst.operated().unwrap().sign(u, v), Some(N));
            } else {
                panic!("wrong operation kind");
            }
        }
    }

    #[test]
    fn resign_edge_small_matches_solver() {
        for k in [4, 5] {
            let inst = gen_resign_edge(k).unwrap();
            assert_eq!(solver_psi(&inst.graph), k, "k={k}");
            assert_eq!(solver_psi(&inst.operated().unwrap()), k - 2, "k={k}");
        }
    }

    #[test]
    fn remove_edge_lower_chain_certifies() {
        for k in 5..=10 {
            let inst = gen_remove_edge_lower(k).unwrap();
            let report = inst.certify().unwrap();
            assert!(report.graph.pins(k), "k={k}");
            assert_eq!(report.operated.machine_lower, k - 2, "k={k}");
            if k % 2 == 0 {
                // Even instances close the last gap with a recorded argument.
                assert_eq!(report.operated.machine_upper, k - 1, "k={k}");
                assert_eq!(report.operated.upper, k - 2, "k={k}");
                assert_eq!(report.notes.len(), 1);
            } else {
                assert!(report.operated.pins(k - 2), "k={k}");
            }
        }
    }

    #[test]
    fn remove_edge_lower_small_matches_solver() {
        for k in [5, 6] {
            let inst = gen_remove_edge_lower(k).unwrap();
            assert_eq!(solver_psi(&inst.graph), k, "k={k}");
            assert_eq!(solver_psi(&inst.operated().unwrap()), k - 2, "k={k}");
        }
    }

    #[test]
    fn remove_edge_upper_chain_certifies() {
        for k in 6..=10 {
            let inst = gen_remove_edge_upper(k).unwrap();
            let report = inst.certify().unwrap();
            assert_eq!(inst.claimed_psi, k - 2);
            assert_eq!(inst.claimed_after, k);
            assert_eq!(report.graph.machine_lower, k - 2, "k={k}");
            assert_eq!(report.graph.upper, k - 2, "k={k}");
            assert_eq!(report.operated.machine_lower, k, "k={k}");
            assert_eq!(report.operated.upper, k, "k={k}");
            assert_eq!(report.notes.len(), 1);
        }
    }

    #[test]
    fn remove_edge_upper_small_matches_solver() {
        let inst = gen_remove_edge_upper(6).unwrap();
        assert_eq!(inst.graph.order(), 8);
        assert_eq!(solver_psi(&inst.graph), 4);
        assert_eq!(solver_psi(&inst.operated().unwrap()), 6);
    }

    #[test]
    fn elementary_drop_chain_certifies() {
        for k in 8..=10 {
            let inst = gen_elementary_drop(k).unwrap();
            let report = inst.certify().unwrap();
            assert_eq!(report.graph.machine_lower, k + 2, "k={k}");
            assert_eq!(report.graph.upper, k + 2, "k={k}");
            assert_eq!(report.operated.machine_upper, k, "k={k}");
            assert_eq!(report.operated.machine_lower, k - 2, "k={k}");
            let operated = inst.operated().unwrap();
            assert_eq!(operated.order(), inst.graph.order() - 1);
        }
    }

    // The shape is solver-tractable below the family's parameter floor: the
    // p = 2 core has order 8 and drops from 6 to 4 under identification.
    #[test]
    fn elementary_drop_small_shape_probe() {
        let (g, ints) = drop_core(2).unwrap();
        assert_eq!(g.order(), 8);
        let witness = Colouring::from_ints(6, &ints).unwrap();
        assert!(is_complete(&g, &witness).unwrap());
        assert_eq!(solver_psi(&g), 6);
        let image = identify(&g, 6, 7).unwrap();
        assert_eq!(solver_psi(&image), 4);
    }

    #[test]
    fn interpolation_small_extremes_match_solver() {
        let g = gen_interpolation(3).unwrap();
        assert_eq!(solver_psi(&g), 6);
        let chi = crate::solver::chi(&g, &SearchOptions::default()).unwrap();
        assert_eq!(chi.value, 4);
        // No complete colouring exists at the proper optimum plus the parity
        // gap: palette 3 admits at most five classes on six mutually adjacent
        // vertices.
        let outcome = exists_complete_k(&g, 3, &SearchOptions::default()).unwrap();
        assert!(outcome.witness.is_none());
    }

    #[test]
    fn interpolation_witnesses_hold() {
        for k in [3, 5, 7] {
            let g = gen_interpolation(k).unwrap();
            let (chi_w, psi_w) = interpolation_witnesses(k).unwrap();
            assert_eq!(chi_w.k(), k + 1);
            assert_eq!(psi_w.k(), 2 * k);
            assert!(is_proper(&g, &chi_w).unwrap(), "k={k}");
            assert!(is_complete(&g, &psi_w).unwrap(), "k={k}");
        }
    }

    #[test]
    fn interpolation_rejects_bad_parameters() {
        assert!(gen_interpolation(1).is_err());
        assert!(gen_interpolation(4).is_err());
        assert!(interpolation_witnesses(2).is_err());
    }

    #[test]
    fn perfect_counterexample_fixture_holds() {
        let g = gen_perfect_counterexample();
        assert_eq!(g.order(), 6);
        assert_eq!(g.size(), 10);
        let (proper, complete) = perfect_counterexample_witnesses();
        assert!(is_proper(&g, &proper).unwrap());
        assert!(is_complete(&g, &complete).unwrap());
        assert_eq!(crate::solver::chi(&g, &SearchOptions::default()).unwrap().value, 3);
        // The 4-colouring is only a separating witness; the graph reaches 6.
        assert_eq!(solver_psi(&g), 6);
    }

    #[test]
    fn irreducible_small_matches_solver() {
        for (p, m) in [(1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6)] {
            let g = gen_irreducible_large(p, m).unwrap();
            assert_eq!(solver_psi(&g), irreducible_claimed_psi(p, m), "p={p} m={m}");
        }
    }

    #[test]
    fn irreducible_witness_and_shape_hold() {
        for p in 1..=3 {
            for m in 2 * p..=2 * p + 3 {
                let g = gen_irreducible_large(p, m).unwrap();
                assert_eq!(g.size(), m * (m - 1) / 2);
                assert!(is_irreducible(&g), "p={p} m={m}");
                let w = irreducible_witness(p, m).unwrap();
                assert_eq!(w.k(), irreducible_claimed_psi(p, m));
                assert!(is_complete(&g, &w).unwrap(), "p={p} m={m}");
            }
        }
        assert!(gen_irreducible_large(0, 4).is_err());
        assert!(gen_irreducible_large(2, 3).is_err());
    }

    #[test]
    fn np_reduction_shape_is_frozen() {
        let k1 = SignedGraph::new(1);
        let out = gen_np_reduction(&k1, 1).unwrap();
        assert_eq!(out.order(), 10);
        assert_eq!(out.size(), 25);

        let p3 = crate::graph::path_graph(&[P, P]);
        let out = gen_np_reduction(&p3, 2).unwrap();
        assert_eq!(out.order(), 55);
        assert_eq!(out.size(), 734);
    }

    #[test]
    fn np_forward_lifts_complete_colourings() {
        let cases: Vec<(SignedGraph, usize, Vec<usize>)> = vec![
            (complete_graph(2, P), 2, vec![1, 2]),
            (crate::graph::path_graph(&[N, P]), 2, vec![1, 2, 1]),
            (complete_graph(3, N), 3, vec![1, 2, 3]),
            // More colours than the reduction asks for are used verbatim.
            (crate::graph::path_graph(&[P, P]), 1, vec![1, 2, 1]),
        ];
        for (g, k, phi) in cases {
            let image = gen_np_reduction(&g, k).unwrap();
            let lifted = np_forward_colouring(&g, k, &phi).unwrap();
            let big = (g.order() + k) * (g.order() + k);
            assert_eq!(lifted.k(), 2 * (big + k));
            assert!(is_complete(&image, &lifted).unwrap());
        }
    }

    #[test]
    fn np_forward_rejects_invalid_colourings() {
        let p3 = crate::graph::path_graph(&[P, P]);
        // Improper.
        assert!(np_forward_colouring(&p3, 2, &[1, 1, 2]).is_err());
        // Proper but incomplete: colours 1 and 3 never meet.
        assert!(np_forward_colouring(&p3, 2, &[1, 2, 3]).is_err());
        // Too few colours for the reduction.
        assert!(np_forward_colouring(&complete_graph(2, P), 3, &[1, 2]).is_err());
        // Zero colour and a gap in the colour set.
        assert!(np_forward_colouring(&complete_graph(2, P), 1, &[0, 1]).is_err());
        let gap = SignedGraph::from_edges(2, &[(0, 1, P)]);
        assert!(np_forward_colouring(&gap, 1, &[1, 3]).is_err());
        // Wrong length.
        assert!(np_forward_colouring(&p3, 2, &[1, 2]).is_err());
    }

    #[test]
    fn generator_parameter_floors() {
        assert!(gen_remove_vertex(2).is_err());
        assert!(gen_resign_edge(3).is_err());
        assert!(gen_remove_edge_lower(4).is_err());
        assert!(gen_remove_edge_upper(5).is_err());
        assert!(gen_elementary_drop(7).is_err());
        assert!(gen_np_reduction(&SignedGraph::new(1), 0).is_err());
        assert!(gen_np_reduction(&SignedGraph::new(0), 1).is_err());
    }

    #[test]
    fn certify_rejects_tampering() {
        let mut inst = gen_remove_vertex(4).unwrap();
        inst.claimed_psi = 5;
        assert!(inst.certify().is_err());

        let mut inst = gen_remove_vertex(4).unwrap();
        inst.witness = None;
        assert!(inst.certify().is_err());

        let mut inst = gen_resign_edge(6).unwrap();
        inst.chain[1].value = 42;
        assert!(inst.certify().is_err());

        // An operation step may not run ahead of its premise.
        let mut inst = gen_remove_vertex(6).unwrap();
        inst.chain.swap(0, 2);
        assert!(inst.certify().is_err());
    }
}
