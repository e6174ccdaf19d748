//! A truncated model of the infinite cluster algebra attached to the quiver
//! `G^-` of type `A_l`, and the check that the mutation sequence `S` produces
//! Kirillov-Reshetikhin q-characters.
//!
//! Vertices are the points `(i, r)` with `i - r` even and `-2 depth <= r <= 0`.
//! Arrows are `(i,r) -> (i,r+2)` and `(i,r) -> (i+-1,r-1)`. The vertices
//! within undirected distance 2 of the part of the quiver lying below the cut
//! are frozen; only the remaining interior is ever mutated.
//!
//! Cluster variables are stored after the change of variables
//! `z_{i,r} = prod_{j >= 0, r + 2j <= 0} Y_{i,r+2j}`, so every exchange is a
//! division in `Z[Y^{+-1}]`, and an inexact division flags contamination from
//! the truncation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::loopalg::{LatticePoint, LoopMonomial, LoopPolynomial};
use crate::tsys::kr_character;

/// Vertex indices with arrow multiplicities.
type Weighted = Vec<(usize, u32)>;

/// A quiver without loops or 2-cycles, stored as its skew-symmetric exchange
/// matrix: `b[u][v] > 0` means `b[u][v]` arrows `u -> v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    rank: u32,
    vertices: Vec<LatticePoint>,
    index: BTreeMap<LatticePoint, usize>,
    frozen: Vec<bool>,
    b: Vec<i32>,
}

impl Quiver {
    fn with_vertices(rank: u32, vertices: Vec<LatticePoint>, frozen: Vec<bool>) -> Self {
        let n = vertices.len();
        let index = vertices.iter().enumerate().map(|(a, &v)| (v, a)).collect();
        Self {
            rank,
            vertices,
            index,
            frozen,
            b: vec![0; n * n],
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: LatticePoint) -> bool {
        self.index.contains_key(&v)
    }

    pub fn index_of(&self, v: LatticePoint) -> Result<usize> {
        self.index.get(&v).copied().ok_or(Error::UnknownVertex(v))
    }

    pub fn is_frozen(&self, v: LatticePoint) -> Result<bool> {
        Ok(self.frozen[self.index_of(v)?])
    }

    /// Non-frozen vertices in vertex order.
    pub fn interior(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.vertices
            .iter()
            .zip(&self.frozen)
            .filter(|(_, &f)| !f)
            .map(|(&v, _)| v)
    }

    fn entry(&self, u: usize, v: usize) -> i32 {
        self.b[u * self.vertices.len() + v]
    }

    fn set(&mut self, u: usize, v: usize, x: i32) {
        let n = self.vertices.len();
        self.b[u * n + v] = x;
        self.b[v * n + u] = -x;
    }

    /// Number of arrows `u -> v`.
    pub fn arrow_count(&self, u: LatticePoint, v: LatticePoint) -> Result<u32> {
        let x = self.entry(self.index_of(u)?, self.index_of(v)?);
        Ok(x.max(0) as u32)
    }

    /// All arrows as `(source, target, multiplicity)`, sorted.
    pub fn arrows(&self) -> Vec<(LatticePoint, LatticePoint, u32)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                let x = self.entry(u, v);
                if x > 0 {
                    out.push((self.vertices[u], self.vertices[v], x as u32));
                }
            }
        }
        out.sort();
        out
    }

    /// Arrows with both ends in the interior.
    pub fn interior_arrows(&self) -> Vec<(LatticePoint, LatticePoint, u32)> {
        self.arrows()
            .into_iter()
            .filter(|(u, v, _)| !self.frozen[self.index[u]] && !self.frozen[self.index[v]])
            .collect()
    }

    /// Sources of arrows into `k` and targets of arrows out of `k`, with
    /// multiplicities, as vertex indices.
    fn neighbours(&self, k: usize) -> (Weighted, Weighted) {
        let mut ins = Vec::new();
        let mut outs = Vec::new();
        for u in 0..self.vertices.len() {
            let x = self.entry(u, k);
            if x > 0 {
                ins.push((u, x as u32));
            } else if x < 0 {
                outs.push((u, (-x) as u32));
            }
        }
        (ins, outs)
    }

    /// Skew-symmetry of the stored matrix: no loops and no 2-cycles.
    pub fn is_valid(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|u| self.entry(u, u) == 0 && (0..n).all(|v| self.entry(u, v) == -self.entry(v, u)))
    }

    fn mutate_in_place(&mut self, k: usize) {
        let (ins, outs) = self.neighbours(k);
        for &(i, a) in &ins {
            for &(j, c) in &outs {
                // arrows between two frozen vertices carry no information
                if self.frozen[i] && self.frozen[j] {
                    continue;
                }
                let x = self.entry(i, j) + (a * c) as i32;
                self.set(i, j, x);
            }
        }
        for u in 0..self.vertices.len() {
            let x = self.entry(u, k);
            if x != 0 {
                self.set(u, k, -x);
            }
        }
    }

    /// Quiver mutation at a non-frozen vertex.
    pub fn mutate(&self, v: LatticePoint) -> Result<Self> {
        let k = self.index_of(v)?;
        if self.frozen[k] {
            return Err(Error::FrozenVertex(v));
        }
        let mut q = self.clone();
        q.mutate_in_place(k);
        Ok(q)
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .zip(&self.frozen)
            .map(|(v, f)| json!({ "i": v.i, "r": v.k, "frozen": f }))
            .collect();
        let arrows: Vec<Value> = self
            .arrows()
            .into_iter()
            .map(|(u, v, m)| json!({ "from": [u.i, u.k], "to": [v.i, v.k], "multiplicity": m }))
            .collect();
        json!({ "rank": self.rank, "vertices": vertices, "arrows": arrows })
    }
}

fn gminus_arrow_targets(v: LatticePoint) -> [LatticePoint; 3] {
    [
        LatticePoint::new(v.i, v.k + 2),
        LatticePoint::new(v.i - 1, v.k - 1),
        LatticePoint::new(v.i + 1, v.k - 1),
    ]
}

fn gminus_vertices(l: u32, floor: i32) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for i in 1..=l as i32 {
        let top = if i % 2 == 0 { 0 } else { -1 };
        let mut r = top;
        while r >= floor {
            out.push(LatticePoint::new(i, r));
            r -= 2;
        }
    }
    out
}

/// The quiver `G^-` of type `A_l` cut at `r >= -2 depth`, in the component
/// containing `(1,-1)`, with a frozen collar of two layers above the cut.
pub fn build_gminus(l: u32, depth: u32) -> Result<Quiver> {
    if l == 0 {
        return Err(Error::ZeroRank);
    }
    if depth < 4 {
        return Err(Error::Invalid(format!("depth {depth} is below the minimum of 4")));
    }
    let floor = -2 * depth as i32;
    let kept = gminus_vertices(l, floor);

    // distance from the part of G^- below the cut, by breadth-first search in
    // a slightly larger piece of the quiver
    let extended = gminus_vertices(l, floor - 6);
    let present: BTreeSet<LatticePoint> = extended.iter().copied().collect();
    let mut adjacent: BTreeMap<LatticePoint, Vec<LatticePoint>> = BTreeMap::new();
    for &v in &extended {
        for w in gminus_arrow_targets(v) {
            if present.contains(&w) {
                adjacent.entry(v).or_default().push(w);
                adjacent.entry(w).or_default().push(v);
            }
        }
    }
    let mut dist: BTreeMap<LatticePoint, u32> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &v in extended.iter().filter(|v| v.k < floor) {
        dist.insert(v, 0);
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for &w in adjacent.get(&v).into_iter().flatten() {
            if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(d + 1);
                queue.push_back(w);
            }
        }
    }

    let frozen = kept.iter().map(|v| dist.get(v).is_some_and(|&d| d <= 2)).collect();
    let mut q = Quiver::with_vertices(l, kept, frozen);
    for u in 0..q.len() {
        for w in gminus_arrow_targets(q.vertices[u]) {
            if let Some(&t) = q.index.get(&w) {
                q.set(u, t, 1);
            }
        }
    }
    Ok(q)
}

/// The level `k` with `0 < 2k - |r| <= 2`.
pub fn kr_index(r: i32) -> u32 {
    (r.unsigned_abs() + 2) / 2
}

/// The change of variables `z_{i,r} = prod_{j >= 0, r + 2j <= 0} Y_{i,r+2j}`.
pub fn initial_variable(v: LatticePoint, l: u32) -> Result<LoopPolynomial> {
    let m = LoopMonomial::from_triples(l, (0..kr_index(v.k) as i32).map(|j| (v.i, v.k + 2 * j, 1)))?;
    Ok(LoopPolynomial::from_monomial(&m))
}

pub fn initial_variables(l: u32, depth: u32) -> Result<BTreeMap<LatticePoint, LoopPolynomial>> {
    build_gminus(l, depth)?
        .vertices()
        .iter()
        .map(|&v| Ok((v, initial_variable(v, l)?)))
        .collect()
}

fn product(l: u32, factors: impl IntoIterator<Item = (Arc<LoopPolynomial>, u32)>) -> LoopPolynomial {
    let mut acc = LoopPolynomial::one(l);
    for (p, m) in factors {
        acc = &acc * &p.pow(m);
    }
    acc
}

/// `(prod_in + prod_out) / old`, or `None` when the division is not exact.
fn exchange(l: u32, ins: Vec<(Arc<LoopPolynomial>, u32)>, outs: Vec<(Arc<LoopPolynomial>, u32)>, old: &LoopPolynomial) -> Option<LoopPolynomial> {
    let numerator = &product(l, ins) + &product(l, outs);
    numerator.div_exact(old).expect("ranks agree")
}

/// A seed: a quiver together with one cluster variable per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    quiver: Quiver,
    variables: Vec<Arc<LoopPolynomial>>,
}

impl Seed {
    /// The initial seed on the truncated `G^-`.
    pub fn initial(l: u32, depth: u32) -> Result<Self> {
        let quiver = build_gminus(l, depth)?;
        let variables = quiver
            .vertices()
            .iter()
            .map(|&v| initial_variable(v, l).map(Arc::new))
            .collect::<Result<_>>()?;
        Ok(Self { quiver, variables })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn variable(&self, v: LatticePoint) -> Result<&LoopPolynomial> {
        Ok(&self.variables[self.quiver.index_of(v)?])
    }

    /// Seed mutation at a non-frozen vertex.
    pub fn mutate(&self, v: LatticePoint) -> Result<Self> {
        let quiver = self.quiver.mutate(v)?;
        let k = self.quiver.index_of(v)?;
        let (ins, outs) = self.quiver.neighbours(k);
        let pick = |list: Vec<(usize, u32)>| -> Vec<(Arc<LoopPolynomial>, u32)> {
            list.into_iter().map(|(u, m)| (self.variables[u].clone(), m)).collect()
        };
        let new = exchange(self.quiver.rank, pick(ins), pick(outs), &self.variables[k])
            .ok_or(Error::Contamination(v))?;
        let mut variables = self.variables.clone();
        variables[k] = Arc::new(new);
        Ok(Self { quiver, variables })
    }

    pub fn to_json(&self) -> Value {
        let mut value = self.quiver.to_json();
        value["variables"] = self
            .quiver
            .vertices()
            .iter()
            .zip(&self.variables)
            .map(|(v, y)| json!({ "vertex": [v.i, v.k], "variable": y.to_string() }))
            .collect();
        value
    }
}

/// Column indices in the order the label rule of `S` picks them, for the
/// given number of rounds of `l` columns each. Every column starts with the
/// label of its top vertex; the column with the highest label is picked and
/// its label lowered by 2. Ties only occur between non-adjacent columns,
/// whose mutations commute, and are broken by the smaller index.
pub fn column_order(l: u32, rounds: u32) -> Vec<i32> {
    let mut labels: Vec<i32> = (1..=l as i32).map(|i| if i % 2 == 0 { 0 } else { -1 }).collect();
    let mut out = Vec::new();
    for _ in 0..l * rounds {
        let (pos, _) = labels
            .iter()
            .enumerate()
            .max_by_key(|&(a, &r)| (r, std::cmp::Reverse(a)))
            .expect("rank at least 1");
        out.push(pos as i32 + 1);
        labels[pos] -= 2;
    }
    out
}

fn column_interior(q: &Quiver, i: i32) -> Vec<LatticePoint> {
    let mut col: Vec<LatticePoint> = q.interior().filter(|v| v.i == i).collect();
    col.sort_by_key(|v| std::cmp::Reverse(v.k));
    col
}

/// The first `rounds` rounds of the mutation sequence `S` on the truncated
/// quiver: columns in label order, each read top to bottom over its
/// non-frozen vertices.
pub fn sequence_s(l: u32, depth: u32, rounds: u32) -> Result<Vec<LatticePoint>> {
    let q = build_gminus(l, depth)?;
    Ok(column_order(l, rounds)
        .into_iter()
        .flat_map(|i| column_interior(&q, i))
        .collect())
}

#[derive(Clone, Debug)]
enum Node {
    Initial(usize),
    Exchange {
        vertex: usize,
        old: usize,
        ins: Vec<(usize, u32)>,
        outs: Vec<(usize, u32)>,
    },
}

/// A run of mutations on the truncated `G^-` that records the exchange
/// relations and evaluates cluster variables only on demand.
///
/// Deep vertices carry large polynomials but rarely matter for the question
/// being asked, so the quiver is mutated eagerly and the variables lazily.
/// A variable whose computation hits an inexact division is contaminated
/// and reported as `None`.
pub struct MutationRun {
    depth: u32,
    quiver: Quiver,
    nodes: Vec<Node>,
    current: Vec<usize>,
    memo: Vec<Option<Option<Arc<LoopPolynomial>>>>,
}

impl MutationRun {
    pub fn new(l: u32, depth: u32) -> Result<Self> {
        let quiver = build_gminus(l, depth)?;
        let n = quiver.len();
        Ok(Self {
            depth,
            quiver,
            nodes: (0..n).map(Node::Initial).collect(),
            current: (0..n).collect(),
            memo: vec![None; n],
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn mutate(&mut self, v: LatticePoint) -> Result<()> {
        let k = self.quiver.index_of(v)?;
        if self.quiver.frozen[k] {
            return Err(Error::FrozenVertex(v));
        }
        let (ins, outs) = self.quiver.neighbours(k);
        let relabel = |list: Vec<(usize, u32)>| list.into_iter().map(|(u, m)| (self.current[u], m)).collect();
        let node = Node::Exchange {
            vertex: k,
            old: self.current[k],
            ins: relabel(ins),
            outs: relabel(outs),
        };
        self.nodes.push(node);
        self.memo.push(None);
        self.current[k] = self.nodes.len() - 1;
        self.quiver.mutate_in_place(k);
        Ok(())
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Runs rounds of `S` and checks after each one that the quiver is `G^-`
    /// again on the part of the interior the cut cannot have reached yet.
    ///
    /// The bottom interior layer sees frozen neighbours that the infinite
    /// sequence would have mutated, so its arrows come out wrong; each
    /// further round carries that disturbance up by one layer. After round
    /// `t` the comparison is therefore made on the interior vertices with
    /// `r >= r_low + 2t`, where `r_low` is the lowest interior row.
    pub fn run_rounds(&mut self, rounds: u32) -> Result<Vec<RoundCheck>> {
        let l = self.quiver.rank;
        let reference = build_gminus(l, self.depth)?;
        let low = reference.interior().map(|v| v.k).min().unwrap_or(0);
        let order = column_order(l, rounds);
        let mut checks = Vec::new();
        for (t, round) in order.chunks(l as usize).enumerate() {
            for &i in round {
                for v in column_interior(&self.quiver, i) {
                    self.mutate(v)?;
                }
            }
            let floor = low + 2 * (t as i32 + 1);
            let above = |q: &Quiver| -> Vec<(LatticePoint, LatticePoint, u32)> {
                q.interior_arrows()
                    .into_iter()
                    .filter(|(u, v, _)| u.k >= floor && v.k >= floor)
                    .collect()
            };
            checks.push(RoundCheck {
                floor,
                restored: above(&self.quiver) == above(&reference),
            });
        }
        Ok(checks)
    }

    fn evaluate(&mut self, node: usize) -> Option<Arc<LoopPolynomial>> {
        if let Some(done) = &self.memo[node] {
            return done.clone();
        }
        let l = self.quiver.rank;
        let value = match self.nodes[node].clone() {
            Node::Initial(a) => Some(Arc::new(
                initial_variable(self.quiver.vertices[a], l).expect("vertex in range"),
            )),
            Node::Exchange { old, ins, outs, .. } => (|| {
                let mut fetch = |list: Vec<(usize, u32)>| -> Option<Vec<(Arc<LoopPolynomial>, u32)>> {
                    list.into_iter().map(|(u, m)| Some((self.evaluate(u)?, m))).collect()
                };
                let ins = fetch(ins)?;
                let outs = fetch(outs)?;
                let old = self.evaluate(old)?;
                exchange(l, ins, outs, &old).map(Arc::new)
            })(),
        };
        self.memo[node] = Some(value.clone());
        value
    }

    /// The current variable at `v`, or `None` if it is contaminated by the
    /// truncation.
    pub fn value(&mut self, v: LatticePoint) -> Result<Option<Arc<LoopPolynomial>>> {
        let k = self.quiver.index_of(v)?;
        Ok(self.evaluate(self.current[k]))
    }

    /// Vertex where the contamination of `v` first arose, if any.
    pub fn contamination_source(&mut self, v: LatticePoint) -> Result<Option<LatticePoint>> {
        let k = self.quiver.index_of(v)?;
        let mut node = self.current[k];
        if self.evaluate(node).is_some() {
            return Ok(None);
        }
        loop {
            match self.nodes[node].clone() {
                Node::Initial(a) => return Ok(Some(self.quiver.vertices[a])),
                Node::Exchange { vertex, old, ins, outs } => {
                    let bad = ins
                        .iter()
                        .chain(&outs)
                        .map(|&(u, _)| u)
                        .chain([old])
                        .find(|&u| self.evaluate(u).is_none());
                    match bad {
                        Some(u) => node = u,
                        None => return Ok(Some(self.quiver.vertices[vertex])),
                    }
                }
            }
        }
    }

    /// Every variable evaluated, with contaminated ones as `None`, in JSON
    /// form alongside the quiver.
    pub fn seed_json(&mut self) -> Value {
        let mut value = self.quiver.to_json();
        let vertices = self.quiver.vertices.clone();
        value["variables"] = vertices
            .iter()
            .map(|&v| {
                let y = self.value(v).expect("vertex of the quiver");
                json!({
                    "vertex": [v.i, v.k],
                    "variable": y.map(|p| p.to_string()),
                })
            })
            .collect();
        value
    }
}

/// Quiver comparison with `G^-` after one round of `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoundCheck {
    /// Lowest row included in the comparison.
    pub floor: i32,
    pub restored: bool,
}

/// Outcome for one interior vertex in the correspondence check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexStatus {
    /// Stable under doubling the depth and equal to the KR q-character.
    Match,
    /// Stable but different from the KR q-character.
    Mismatch,
    /// Changes when the depth is doubled.
    Unstable,
    /// An exchange feeding this vertex was not exactly divisible.
    Contaminated,
}

impl fmt::Display for VertexStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexStatus::Match => "match",
            VertexStatus::Mismatch => "MISMATCH",
            VertexStatus::Unstable => "unstable",
            VertexStatus::Contaminated => "contaminated",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct VertexCheck {
    pub vertex: LatticePoint,
    /// Level `k_{i,r}` of the expected KR module.
    pub level: u32,
    /// Spectral shift `r - 2m` of the expected KR module.
    pub spectral: i32,
    pub status: VertexStatus,
    pub terms: usize,
}

#[derive(Clone, Debug)]
pub struct KrReport {
    pub rank: u32,
    pub depth: u32,
    pub rounds: u32,
    /// Interior quiver shape after each round.
    pub rounds_checked: Vec<RoundCheck>,
    pub vertices: Vec<VertexCheck>,
}

impl KrReport {
    pub fn stable_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|c| matches!(c.status, VertexStatus::Match | VertexStatus::Mismatch))
            .count()
    }

    /// Lowest `r` such that every interior vertex at or above it is stable,
    /// per column.
    pub fn stable_floor(&self) -> BTreeMap<i32, i32> {
        let mut out = BTreeMap::new();
        for i in 1..=self.rank as i32 {
            let mut col: Vec<&VertexCheck> = self.vertices.iter().filter(|c| c.vertex.i == i).collect();
            col.sort_by_key(|c| std::cmp::Reverse(c.vertex.k));
            let stable = col
                .iter()
                .take_while(|c| matches!(c.status, VertexStatus::Match | VertexStatus::Mismatch))
                .last();
            if let Some(c) = stable {
                out.insert(i, c.vertex.k);
            }
        }
        out
    }

    /// Every round restored the interior quiver, no stable vertex
    /// disagrees with its KR character, and the top vertex of every column
    /// is stable.
    pub fn passed(&self) -> bool {
        self.rounds_checked.iter().all(|c| c.restored)
            && self.vertices.iter().all(|c| c.status != VertexStatus::Mismatch)
            && self.stable_floor().len() == self.rank as usize
    }
}

/// Runs `m` rounds of `S` at `depth` and at `2 depth`, and compares every
/// interior vertex that agrees between the two runs with
/// `chi_q(W_i^{(k_{i,r})}(q^{r-2m}))`.
pub fn verify_kr_correspondence(l: u32, depth: u32, m: u32) -> Result<KrReport> {
    let needed = (l + 2) / 2;
    if m < needed {
        return Err(Error::Invalid(format!("need at least {needed} rounds for rank {l}, got {m}")));
    }
    let mut run = MutationRun::new(l, depth)?;
    let rounds_checked = run.run_rounds(m)?;
    let mut deep = MutationRun::new(l, 2 * depth)?;
    deep.run_rounds(m)?;

    let interior: Vec<LatticePoint> = run.quiver().interior().collect();
    let mut vertices = Vec::new();
    for v in interior {
        let level = kr_index(v.k);
        let spectral = v.k - 2 * m as i32;
        let here = run.value(v)?;
        let (status, terms) = match here {
            None => (VertexStatus::Contaminated, 0),
            Some(y) => {
                if deep.value(v)?.as_deref() != Some(&*y) {
                    (VertexStatus::Unstable, y.len())
                } else if *y == kr_character(v.i, spectral, level, l)? {
                    (VertexStatus::Match, y.len())
                } else {
                    (VertexStatus::Mismatch, y.len())
                }
            }
        };
        vertices.push(VertexCheck {
            vertex: v,
            level,
            spectral,
            status,
            terms,
        });
    }
    Ok(KrReport {
        rank: l,
        depth,
        rounds: m,
        rounds_checked,
        vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(i: i32, k: i32) -> LatticePoint {
        LatticePoint::new(i, k)
    }

    #[test]
    fn a1_chain() {
        let q = build_gminus(1, 4).unwrap();
        assert_eq!(q.vertices(), &[p(1, -1), p(1, -3), p(1, -5), p(1, -7)]);
        assert_eq!(
            q.arrows(),
            vec![(p(1, -7), p(1, -5), 1), (p(1, -5), p(1, -3), 1), (p(1, -3), p(1, -1), 1)]
        );
        assert_eq!(q.interior().collect::<Vec<_>>(), vec![p(1, -1), p(1, -3)]);
    }

    #[test]
    fn a2_arrows_link_columns() {
        let q = build_gminus(2, 6).unwrap();
        assert_eq!(q.arrow_count(p(1, -1), p(2, -2)).unwrap(), 1);
        assert_eq!(q.arrow_count(p(2, 0), p(1, -1)).unwrap(), 1);
        assert_eq!(q.arrow_count(p(1, -3), p(1, -1)).unwrap(), 1);
        for (u, v, _) in q.arrows() {
            assert_eq!((u.i - u.k).rem_euclid(2), (v.i - v.k).rem_euclid(2));
        }
    }

    #[test]
    fn change_of_variables() {
        let vars = initial_variables(1, 4).unwrap();
        assert_eq!(vars[&p(1, -1)].to_string(), "Y[1,-1]");
        assert_eq!(vars[&p(1, -3)].to_string(), "Y[1,-3]*Y[1,-1]");
        assert_eq!(kr_index(-3), 2);
        assert_eq!(kr_index(0), 1);
        assert_eq!(kr_index(-2), 2);
    }

    #[test]
    fn first_a1_exchange() {
        let seed = Seed::initial(1, 4).unwrap();
        let next = seed.mutate(p(1, -1)).unwrap();
        assert_eq!(next.variable(p(1, -1)).unwrap().to_string(), "Y[1,-3] + Y[1,-1]^-1");
        assert_eq!(next.mutate(p(1, -1)).unwrap(), seed);
        assert!(matches!(seed.mutate(p(1, -7)), Err(Error::FrozenVertex(_))));
    }

    #[test]
    fn involution_everywhere() {
        let seed = Seed::initial(3, 6).unwrap();
        for v in seed.quiver().interior().collect::<Vec<_>>() {
            let once = seed.mutate(v).unwrap();
            assert!(once.quiver().is_valid());
            assert_eq!(once.mutate(v).unwrap(), seed, "{v}");
        }
    }

    #[test]
    fn label_rule() {
        assert_eq!(column_order(1, 2), vec![1, 1]);
        assert_eq!(column_order(2, 2), vec![2, 1, 2, 1]);
        assert_eq!(column_order(3, 1), vec![2, 1, 3]);
        assert_eq!(sequence_s(1, 5, 1).unwrap(), vec![p(1, -1), p(1, -3), p(1, -5)]);
    }

    #[test]
    fn lazy_run_matches_eager_seed() {
        let mut run = MutationRun::new(2, 6).unwrap();
        let mut seed = Seed::initial(2, 6).unwrap();
        for v in sequence_s(2, 6, 1).unwrap() {
            run.mutate(v).unwrap();
            seed = seed.mutate(v).unwrap();
        }
        assert_eq!(run.quiver(), seed.quiver());
        for v in [p(1, -1), p(2, 0), p(2, -2)] {
            assert_eq!(*run.value(v).unwrap().unwrap(), *seed.variable(v).unwrap());
        }
    }

    #[test]
    fn kr_correspondence_small() {
        let rep = verify_kr_correspondence(1, 10, 1).unwrap();
        assert!(rep.passed(), "{:?}", rep);
        let rep = verify_kr_correspondence(2, 10, 2).unwrap();
        assert!(rep.passed(), "{:?}", rep);
    }
}
