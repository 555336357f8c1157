//! Exact backtracking search for complete and proper colourings.
//!
//! The searches enumerate inferred colourings (magnitude plus switching flag)
//! rather than raw colours, and restrict the tree by two symmetry rules that
//! are sound for both properness and completeness:
//!
//! * nonzero magnitudes first appear in increasing order, since permuting
//!   nonzero magnitude classes is an automorphism of `K*_k`;
//! * the first vertex of each magnitude class carries flag `+` (sign `+` in
//!   the proper search), since flipping a whole class preserves both
//!   properties.
//!
//! Magnitude `0` is exempt from the first rule: it is structurally distinct
//! in `K*_k` and only exists for odd `k`.
//!
//! Node accounting: every candidate tried at any depth costs one node. A
//! configured budget aborts the search with [`Error::ResourceExhausted`]
//! rather than returning a wrong answer. With `workers > 1` and no budget the
//! search fans out over a layer of disjoint prefixes; every branch runs to
//! completion and the lowest-index success is taken, so the reported value
//! and witness are identical for any worker count.

use rayon::prelude::*;

use crate::colouring::{classify_edge, effective_sign, is_complete, Colouring, Flag, InferredColouring};
use crate::graph::{kstar_edge_types, kstar_size, max_magnitude, Colour, Sign, SignedGraph};
use crate::matching::max_matching;
use crate::{Error, Result};

/// Limits and parallelism for a search run.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Abort after this many search nodes. A budgeted search never fans out.
    pub node_budget: Option<u64>,
    /// Worker threads for the top-level fan-out; `1` searches sequentially.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { node_budget: None, workers: 1 }
    }
}

/// Result of a single fixed-`k` existence search.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub witness: Option<InferredColouring>,
    pub nodes: u64,
}

/// An exact achromatic number with a complete witness colouring.
#[derive(Debug, Clone)]
pub struct PsiResult {
    pub value: usize,
    pub witness: InferredColouring,
    /// Where the descent started: `min(order, 2*matching + 1, size bound)`.
    pub upper_bound: usize,
    pub nodes: u64,
}

/// An exact chromatic number with a proper witness colouring.
#[derive(Debug, Clone)]
pub struct ChiResult {
    pub value: usize,
    pub witness: Colouring,
    pub nodes: u64,
}

/// An exact unsigned achromatic number; colours are `1..=value`.
#[derive(Debug, Clone)]
pub struct UnsignedResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub nodes: u64,
}

struct Ctx {
    nodes: u64,
    budget: Option<u64>,
}

impl Ctx {
    fn new(budget: Option<u64>) -> Ctx {
        Ctx { nodes: 0, budget }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(b) if self.nodes > b => Err(Error::ResourceExhausted { nodes: self.nodes }),
            _ => Ok(()),
        }
    }
}

/// Vertices in search order: descending degree, ties by index. Precomputed
/// neighbour lists point only at earlier positions so the properness and
/// type bookkeeping is incremental.
fn search_order(g: &SignedGraph) -> (Vec<usize>, Vec<Vec<(usize, Sign)>>) {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut pos = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut earlier: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); n];
    for (u, v, s) in g.edges() {
        let (a, b) = (pos[u], pos[v]);
        if a < b {
            earlier[b].push((a, s));
        } else {
            earlier[a].push((b, s));
        }
    }
    for row in &mut earlier {
        row.sort_by_key(|e| e.0);
    }
    (order, earlier)
}

struct CompleteState {
    k: usize,
    h: u32,
    zero_allowed: bool,
    n: usize,
    order: Vec<usize>,
    earlier: Vec<Vec<(usize, Sign)>>,
    assigned: Vec<(u32, Flag)>,
    counts_mag: Vec<u32>,
    max_used: u32,
    /// Magnitudes of `M_k` not yet assigned to any vertex.
    unused: usize,
    /// Edges whose endpoints are both assigned.
    closed: usize,
    e_total: usize,
    type_counts: Vec<u32>,
    needed: Vec<bool>,
    /// Edge types of `K*_k` not yet realized by a closed edge.
    missing: usize,
}

impl CompleteState {
    fn new(g: &SignedGraph, k: usize) -> CompleteState {
        let h = max_magnitude(k);
        let (order, earlier) = search_order(g);
        let n = g.order();
        let dim = ((h as usize + 1) * (h as usize + 1)) * 2;
        let mut needed = vec![false; dim];
        for t in kstar_edge_types(k) {
            needed[Self::tidx_raw(h, t.lo, t.hi, t.sign)] = true;
        }
        CompleteState {
            k,
            h,
            zero_allowed: k % 2 == 1,
            n,
            order,
            earlier,
            assigned: vec![(0, Flag::Plus); n],
            counts_mag: vec![0; h as usize + 1],
            max_used: 0,
            unused: if k % 2 == 1 { h as usize + 1 } else { h as usize },
            closed: 0,
            e_total: g.size(),
            type_counts: vec![0; dim],
            needed,
            missing: kstar_size(k),
        }
    }

    fn tidx_raw(h: u32, lo: u32, hi: u32, sign: Sign) -> usize {
        ((lo as usize * (h as usize + 1)) + hi as usize) * 2 + sign.is_negative() as usize
    }

    fn tidx(&self, lo: u32, hi: u32, sign: Sign) -> usize {
        Self::tidx_raw(self.h, lo, hi, sign)
    }

    fn candidates(&self) -> Vec<(u32, Flag)> {
        let limit = self.h.min(self.max_used + 1);
        let mut out = Vec::with_capacity(2 * limit as usize + 2);
        if self.zero_allowed {
            out.push((0, Flag::Plus));
            if self.counts_mag[0] > 0 {
                out.push((0, Flag::Minus));
            }
        }
        for m in 1..=limit {
            out.push((m, Flag::Plus));
            if self.counts_mag[m as usize] > 0 {
                out.push((m, Flag::Minus));
            }
        }
        out
    }

    /// Checks properness against earlier neighbours; applies bookkeeping and
    /// returns true when the assignment is admissible.
    fn try_assign(&mut self, p: usize, mag: u32, flag: Flag) -> bool {
        for &(q, s) in &self.earlier[p] {
            let (mq, fq) = self.assigned[q];
            if mq == mag
                && (mag == 0 || !effective_sign(s, fq, flag).is_negative()) {
                    return false;
                }
        }
        self.assigned[p] = (mag, flag);
        if self.counts_mag[mag as usize] == 0 {
            self.unused -= 1;
            if mag != 0 {
                debug_assert_eq!(mag, self.max_used + 1);
                self.max_used = mag;
            }
        }
        self.counts_mag[mag as usize] += 1;
        self.closed += self.earlier[p].len();
        for i in 0..self.earlier[p].len() {
            let (q, s) = self.earlier[p][i];
            let (mq, fq) = self.assigned[q];
            let t = self.tidx(mq.min(mag), mq.max(mag), effective_sign(s, fq, flag));
            if self.type_counts[t] == 0 && self.needed[t] {
                self.missing -= 1;
            }
            self.type_counts[t] += 1;
        }
        true
    }

    fn unassign(&mut self, p: usize, mag: u32, flag: Flag) {
        for i in 0..self.earlier[p].len() {
            let (q, s) = self.earlier[p][i];
            let (mq, fq) = self.assigned[q];
            let t = self.tidx(mq.min(mag), mq.max(mag), effective_sign(s, fq, flag));
            self.type_counts[t] -= 1;
            if self.type_counts[t] == 0 && self.needed[t] {
                self.missing += 1;
            }
        }
        self.closed -= self.earlier[p].len();
        self.counts_mag[mag as usize] -= 1;
        if self.counts_mag[mag as usize] == 0 {
            self.unused += 1;
            if mag != 0 {
                debug_assert_eq!(mag, self.max_used);
                self.max_used -= 1;
            }
        }
    }

    /// Sound pruning for positions `next..`: every still-open edge realizes
    /// at most one missing type, and every unused magnitude needs a vertex.
    fn viable(&self, next: usize) -> bool {
        self.missing <= self.e_total - self.closed && self.unused <= self.n - next
    }

    fn dfs(&mut self, p: usize, ctx: &mut Ctx) -> Result<bool> {
        if p == self.n {
            return Ok(self.missing == 0 && self.unused == 0);
        }
        for (mag, flag) in self.candidates() {
            ctx.tick()?;
            if self.try_assign(p, mag, flag) {
                if self.viable(p + 1) && self.dfs(p + 1, ctx)? {
                    return Ok(true);
                }
                self.unassign(p, mag, flag);
            }
        }
        Ok(false)
    }

    fn replay(&mut self, prefix: &[(u32, Flag)]) {
        for (p, &(mag, flag)) in prefix.iter().enumerate() {
            let ok = self.try_assign(p, mag, flag);
            debug_assert!(ok, "prefix was admissible when enumerated");
            let _ = ok;
        }
    }

    fn rewind(&mut self, prefix: &[(u32, Flag)]) {
        for (p, &(mag, flag)) in prefix.iter().enumerate().rev() {
            self.unassign(p, mag, flag);
        }
    }

    /// The current full assignment in original vertex order.
    fn witness(&self) -> InferredColouring {
        let mut items = vec![(0, Flag::Plus); self.n];
        for p in 0..self.n {
            items[self.order[p]] = self.assigned[p];
        }
        InferredColouring::new(self.k, items).expect("search assigns only magnitudes of M_k")
    }
}

enum PrefixPlan {
    /// The whole tree fit within the prefix layer.
    Settled(Option<InferredColouring>),
    Branches(Vec<Vec<(u32, Flag)>>),
}

/// Expands the search tree breadth-first until it holds at least `target`
/// live prefixes (or is exhausted). Prefixes are kept in candidate order, so
/// the first success over them matches the sequential search.
fn enumerate_prefixes(
    g: &SignedGraph,
    k: usize,
    target: usize,
    ctx: &mut Ctx,
) -> Result<PrefixPlan> {
    let mut state = CompleteState::new(g, k);
    let n = state.n;
    let mut layer: Vec<Vec<(u32, Flag)>> = vec![Vec::new()];
    let mut depth = 0;
    while depth < n && layer.len() < target && depth < 8 {
        let mut next = Vec::new();
        for prefix in &layer {
            state.replay(prefix);
            for (mag, flag) in state.candidates() {
                ctx.tick()?;
                if state.try_assign(depth, mag, flag) {
                    if state.viable(depth + 1) {
                        let mut extended = prefix.clone();
                        extended.push((mag, flag));
                        next.push(extended);
                    }
                    state.unassign(depth, mag, flag);
                }
            }
            state.rewind(prefix);
        }
        layer = next;
        depth += 1;
        if layer.is_empty() {
            return Ok(PrefixPlan::Settled(None));
        }
    }
    if depth == n {
        // Survivors of the last expansion satisfy `viable(n)`, which at full
        // depth is exactly the completeness condition.
        state.replay(&layer[0]);
        return Ok(PrefixPlan::Settled(Some(state.witness())));
    }
    Ok(PrefixPlan::Branches(layer))
}

fn exists_inner(
    g: &SignedGraph,
    k: usize,
    opts: &SearchOptions,
    ctx: &mut Ctx,
) -> Result<Option<InferredColouring>> {
    // Necessary conditions: each nonzero magnitude class spans an edge and
    // class 0 a vertex, so order >= k; each edge realizes one type, so
    // size >= |E(K*_k)|.
    if g.order() < k || kstar_size(k) > g.size() {
        return Ok(None);
    }
    if opts.workers > 1 && opts.node_budget.is_none() {
        match enumerate_prefixes(g, k, 4 * opts.workers, ctx)? {
            PrefixPlan::Settled(w) => Ok(w),
            PrefixPlan::Branches(branches) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(opts.workers)
                    .build()
                    .map_err(|e| Error::invalid(format!("worker pool: {e}")))?;
                let results: Vec<(Option<InferredColouring>, u64)> = pool.install(|| {
                    branches
                        .par_iter()
                        .map(|prefix| {
                            let mut st = CompleteState::new(g, k);
                            st.replay(prefix);
                            let mut branch_ctx = Ctx::new(None);
                            let found = st
                                .dfs(prefix.len(), &mut branch_ctx)
                                .expect("unbudgeted search cannot exhaust");
                            (found.then(|| st.witness()), branch_ctx.nodes)
                        })
                        .collect()
                });
                for (_, nodes) in &results {
                    ctx.nodes += nodes;
                }
                Ok(results.into_iter().find_map(|(w, _)| w))
            }
        }
    } else {
        let mut state = CompleteState::new(g, k);
        if state.dfs(0, ctx)? {
            Ok(Some(state.witness()))
        } else {
            Ok(None)
        }
    }
}

/// Does `(G, sigma)` admit a complete colouring with exactly `k` colours?
/// Returns the witness found (deterministic for fixed input and options)
/// together with the node count.
pub fn exists_complete_k(g: &SignedGraph, k: usize, opts: &SearchOptions) -> Result<SearchOutcome> {
    if k == 0 {
        return Err(Error::invalid("complete colouring search requires k >= 1"));
    }
    let mut ctx = Ctx::new(opts.node_budget);
    let witness = exists_inner(g, k, opts, &mut ctx)?;
    Ok(SearchOutcome { witness, nodes: ctx.nodes })
}

/// `min(order, 2*matching + 1, max { k : |E(K*_k)| <= size })`; every term
/// dominates the achromatic number.
pub fn psi_upper_bound(g: &SignedGraph) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Err(Error::invalid("achromatic number requires at least one vertex"));
    }
    let e = g.size();
    let by_matching = 2 * max_matching(g) + 1;
    let mut by_size = 1;
    while kstar_size(by_size + 1) <= e {
        by_size += 1;
    }
    Ok(n.min(by_matching).min(by_size))
}

/// Exact achromatic number: descends from [`psi_upper_bound`] to the first
/// `k` admitting a complete colouring. The node budget spans all levels.
pub fn psi(g: &SignedGraph, opts: &SearchOptions) -> Result<PsiResult> {
    let upper_bound = psi_upper_bound(g)?;
    let mut ctx = Ctx::new(opts.node_budget);
    for k in (1..=upper_bound).rev() {
        if let Some(witness) = exists_inner(g, k, opts, &mut ctx)? {
            debug_assert!(matches!(
                crate::colouring::is_inferred_complete(g, &witness),
                Ok(true)
            ));
            return Ok(PsiResult { value: k, witness, upper_bound, nodes: ctx.nodes });
        }
    }
    unreachable!("a proper colouring with fewest colours is complete, so some level succeeds");
}

struct ProperState {
    k: usize,
    h: u32,
    zero_allowed: bool,
    n: usize,
    order: Vec<usize>,
    earlier: Vec<Vec<(usize, Sign)>>,
    assigned: Vec<(u32, Sign)>,
    counts_mag: Vec<u32>,
    max_used: u32,
}

impl ProperState {
    fn new(g: &SignedGraph, k: usize) -> ProperState {
        let h = max_magnitude(k);
        let (order, earlier) = search_order(g);
        ProperState {
            k,
            h,
            zero_allowed: k % 2 == 1,
            n: g.order(),
            order,
            earlier,
            assigned: vec![(0, Sign::Positive); g.order()],
            counts_mag: vec![0; h as usize + 1],
            max_used: 0,
        }
    }

    fn candidates(&self) -> Vec<(u32, Sign)> {
        let limit = self.h.min(self.max_used + 1);
        let mut out = Vec::with_capacity(2 * limit as usize + 1);
        if self.zero_allowed {
            out.push((0, Sign::Positive));
        }
        for m in 1..=limit {
            out.push((m, Sign::Positive));
            if self.counts_mag[m as usize] > 0 {
                out.push((m, Sign::Negative));
            }
        }
        out
    }

    fn conflicts(&self, p: usize, mag: u32, sign: Sign) -> bool {
        for &(q, s) in &self.earlier[p] {
            let (mq, sq) = self.assigned[q];
            if mq != mag {
                continue;
            }
            // phi(u) = sigma * phi(v) is improper: equality of colours on a
            // positive edge, negation on a negative one; 0 is self-negating.
            if mag == 0 || (s.is_negative() == (sq != sign)) {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, p: usize, ctx: &mut Ctx) -> Result<bool> {
        if p == self.n {
            return Ok(true);
        }
        for (mag, sign) in self.candidates() {
            ctx.tick()?;
            if self.conflicts(p, mag, sign) {
                continue;
            }
            self.assigned[p] = (mag, sign);
            let fresh = self.counts_mag[mag as usize] == 0;
            if fresh && mag != 0 {
                self.max_used = mag;
            }
            self.counts_mag[mag as usize] += 1;
            if self.dfs(p + 1, ctx)? {
                return Ok(true);
            }
            self.counts_mag[mag as usize] -= 1;
            if fresh && mag != 0 {
                self.max_used = mag - 1;
            }
        }
        Ok(false)
    }

    fn witness(&self) -> Colouring {
        let mut colours = vec![Colour(0); self.n];
        for p in 0..self.n {
            let (mag, sign) = self.assigned[p];
            let value = if sign.is_negative() { -(mag as i32) } else { mag as i32 };
            colours[self.order[p]] = Colour(value);
        }
        Colouring::new(self.k, colours).expect("search assigns only colours of M_k")
    }
}

/// Exact chromatic number: ascends `k` to the first admitting a proper
/// colouring. `k = 2 * order` always succeeds with all-distinct magnitudes.
pub fn chi(g: &SignedGraph, opts: &SearchOptions) -> Result<ChiResult> {
    if g.order() == 0 {
        return Err(Error::invalid("chromatic number requires at least one vertex"));
    }
    let mut ctx = Ctx::new(opts.node_budget);
    for k in 1..=(2 * g.order()) {
        let mut state = ProperState::new(g, k);
        if state.dfs(0, &mut ctx)? {
            let witness = state.witness();
            debug_assert!(matches!(crate::colouring::is_proper(g, &witness), Ok(true)));
            return Ok(ChiResult { value: k, witness, nodes: ctx.nodes });
        }
    }
    unreachable!("distinct positive magnitudes are proper at k = 2 * order");
}

struct UnsignedState {
    k: usize,
    n: usize,
    order: Vec<usize>,
    earlier: Vec<Vec<(usize, Sign)>>,
    assigned: Vec<usize>,
    counts: Vec<u32>,
    max_used: usize,
    unused: usize,
    closed: usize,
    e_total: usize,
    pair_counts: Vec<u32>,
    missing: usize,
}

impl UnsignedState {
    fn new(g: &SignedGraph, k: usize) -> UnsignedState {
        let (order, earlier) = search_order(g);
        UnsignedState {
            k,
            n: g.order(),
            order,
            earlier,
            assigned: vec![0; g.order()],
            counts: vec![0; k + 1],
            max_used: 0,
            unused: k,
            closed: 0,
            e_total: g.size(),
            pair_counts: vec![0; (k + 1) * (k + 1)],
            missing: k * (k - 1) / 2,
        }
    }

    fn pidx(&self, a: usize, b: usize) -> usize {
        a.min(b) * (self.k + 1) + a.max(b)
    }

    fn dfs(&mut self, p: usize, ctx: &mut Ctx) -> Result<bool> {
        if p == self.n {
            return Ok(self.missing == 0 && self.unused == 0);
        }
        let limit = self.k.min(self.max_used + 1);
        'candidate: for c in 1..=limit {
            ctx.tick()?;
            for &(q, _) in &self.earlier[p] {
                if self.assigned[q] == c {
                    continue 'candidate;
                }
            }
            self.assigned[p] = c;
            let fresh = self.counts[c] == 0;
            if fresh {
                self.unused -= 1;
                self.max_used = c;
            }
            self.counts[c] += 1;
            self.closed += self.earlier[p].len();
            for i in 0..self.earlier[p].len() {
                let q = self.earlier[p][i].0;
                let t = self.pidx(self.assigned[q], c);
                if self.pair_counts[t] == 0 {
                    self.missing -= 1;
                }
                self.pair_counts[t] += 1;
            }
            let viable = self.missing <= self.e_total - self.closed
                && self.unused <= self.n - (p + 1);
            if viable && self.dfs(p + 1, ctx)? {
                return Ok(true);
            }
            for i in 0..self.earlier[p].len() {
                let q = self.earlier[p][i].0;
                let t = self.pidx(self.assigned[q], c);
                self.pair_counts[t] -= 1;
                if self.pair_counts[t] == 0 {
                    self.missing += 1;
                }
            }
            self.closed -= self.earlier[p].len();
            self.counts[c] -= 1;
            if fresh {
                self.unused += 1;
                self.max_used = c - 1;
            }
        }
        Ok(false)
    }

    fn witness(&self) -> Vec<usize> {
        let mut colours = vec![0; self.n];
        for p in 0..self.n {
            colours[self.order[p]] = self.assigned[p];
        }
        colours
    }
}

/// Exact achromatic number of the underlying unsigned graph: the largest `k`
/// admitting a proper surjective colouring realizing every unordered pair of
/// distinct colours on an edge.
pub fn psi_unsigned(g: &SignedGraph, opts: &SearchOptions) -> Result<UnsignedResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::invalid("achromatic number requires at least one vertex"));
    }
    let e = g.size();
    let mut upper = 1;
    while upper < n && (upper + 1) * upper / 2 <= e {
        upper += 1;
    }
    let mut ctx = Ctx::new(opts.node_budget);
    for k in (1..=upper).rev() {
        let mut state = UnsignedState::new(g, k);
        if state.dfs(0, &mut ctx)? {
            return Ok(UnsignedResult { value: k, witness: state.witness(), nodes: ctx.nodes });
        }
    }
    unreachable!("a proper colouring with fewest colours realizes every pair");
}

/// Endpoints of a least set of edges realizing every edge type of `K*_k`,
/// sorted ascending: one lexicographically least edge per type. Restricting
/// `g` and `phi` to these vertices stays complete. Requires `phi` complete.
pub fn witness_subgraph(g: &SignedGraph, phi: &Colouring) -> Result<Vec<usize>> {
    if !is_complete(g, phi)? {
        return Err(Error::invalid("witness extraction requires a complete colouring"));
    }
    let k = phi.k();
    if kstar_size(k) == 0 {
        // k = 1: the single magnitude-0 class; any one vertex carries it.
        return Ok(vec![0]);
    }
    let mut chosen: std::collections::BTreeMap<crate::graph::EdgeType, (usize, usize)> =
        std::collections::BTreeMap::new();
    for (u, v, _) in g.edges() {
        let t = classify_edge(g, phi, u, v)?;
        chosen.entry(t).or_insert((u, v));
    }
    let mut vertices: Vec<usize> = chosen
        .values()
        .flat_map(|&(u, v)| [u, v])
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    Ok(vertices)
}
