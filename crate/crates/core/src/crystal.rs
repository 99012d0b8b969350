//! The abstract crystal interface, tensor products, breadth-first graph
//! generation and the canonical isomorphism between connected highest
//! weight crystals.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::Weight;
use crate::error::{Error, Result};
use crate::par::{self, Execution};

/// A crystal for `A_n`. Colors `i` range over `1..=rank()`.
///
/// Elements compare by value; two elements are the same crystal element
/// exactly when they are equal.
pub trait Crystal: Sync {
    type Elem: Clone + Eq + Hash + fmt::Display + Send + Sync;

    fn rank(&self) -> usize;
    fn weight(&self, b: &Self::Elem) -> Weight;
    fn epsilon(&self, b: &Self::Elem, i: usize) -> i64;
    fn phi(&self, b: &Self::Elem, i: usize) -> i64;
    fn e_tilde(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn f_tilde(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;

    fn is_highest(&self, b: &Self::Elem) -> bool {
        (1..=self.rank()).all(|i| self.epsilon(b, i) == 0)
    }
}

/// The vector representation `B(Λ_1)`: letters `1 → 2 → ... → n+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LetterCrystal {
    rank: usize,
}

impl LetterCrystal {
    pub fn new(rank: usize) -> Self {
        LetterCrystal { rank }
    }

    /// All letters `1..=n+1`.
    pub fn letters(&self) -> impl Iterator<Item = usize> {
        1..=self.rank + 1
    }
}

/// Weight of the letter `k`: `Λ_k - Λ_{k-1}` with boundary terms dropped.
pub fn letter_weight(rank: usize, k: usize) -> Weight {
    let mut w = Weight::zero(rank);
    w.add_fundamental(k, 1);
    if k >= 1 {
        w.add_fundamental(k - 1, -1);
    }
    w
}

impl Crystal for LetterCrystal {
    type Elem = usize;

    fn rank(&self) -> usize {
        self.rank
    }

    fn weight(&self, b: &usize) -> Weight {
        letter_weight(self.rank, *b)
    }

    fn epsilon(&self, b: &usize, i: usize) -> i64 {
        (*b == i + 1) as i64
    }

    fn phi(&self, b: &usize, i: usize) -> i64 {
        (*b == i) as i64
    }

    fn e_tilde(&self, b: &usize, i: usize) -> Option<usize> {
        (*b == i + 1).then_some(i)
    }

    fn f_tilde(&self, b: &usize, i: usize) -> Option<usize> {
        (*b == i).then_some(i + 1)
    }
}

/// `b_1 ⊗ b_2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor<L, R>(pub L, pub R);

impl<L: fmt::Display, R: fmt::Display> fmt::Display for Tensor<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

/// Tensor product of two crystals of the same rank.
///
/// `f̃_i` acts on the left factor iff `φ_i(b_1) > ε_i(b_2)`; `ẽ_i` acts on
/// the left factor iff `φ_i(b_1) >= ε_i(b_2)`. The statistics of the pair are
/// `ε_i = max(ε_i(b_1), ε_i(b_2) - ⟨h_i, wt b_1⟩)` and
/// `φ_i = max(φ_i(b_2), φ_i(b_1) + ⟨h_i, wt b_2⟩)`.
#[derive(Debug, Clone)]
pub struct TensorCrystal<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Crystal, B: Crystal> TensorCrystal<A, B> {
    pub fn new(left: A, right: B) -> Result<Self> {
        if left.rank() != right.rank() {
            return Err(Error::domain(format!(
                "cannot tensor crystals of rank {} and {}",
                left.rank(),
                right.rank()
            )));
        }
        Ok(TensorCrystal { left, right })
    }
}

impl<A: Crystal, B: Crystal> Crystal for TensorCrystal<A, B> {
    type Elem = Tensor<A::Elem, B::Elem>;

    fn rank(&self) -> usize {
        self.left.rank()
    }

    fn weight(&self, b: &Self::Elem) -> Weight {
        &self.left.weight(&b.0) + &self.right.weight(&b.1)
    }

    fn epsilon(&self, b: &Self::Elem, i: usize) -> i64 {
        let shifted = self.right.epsilon(&b.1, i) - self.left.weight(&b.0).coeff(i);
        self.left.epsilon(&b.0, i).max(shifted)
    }

    fn phi(&self, b: &Self::Elem, i: usize) -> i64 {
        let shifted = self.left.phi(&b.0, i) + self.right.weight(&b.1).coeff(i);
        self.right.phi(&b.1, i).max(shifted)
    }

    fn e_tilde(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.left.phi(&b.0, i) >= self.right.epsilon(&b.1, i) {
            self.left.e_tilde(&b.0, i).map(|l| Tensor(l, b.1.clone()))
        } else {
            self.right.e_tilde(&b.1, i).map(|r| Tensor(b.0.clone(), r))
        }
    }

    fn f_tilde(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.left.phi(&b.0, i) > self.right.epsilon(&b.1, i) {
            self.left.f_tilde(&b.0, i).map(|l| Tensor(l, b.1.clone()))
        } else {
            self.right.f_tilde(&b.1, i).map(|r| Tensor(b.0.clone(), r))
        }
    }
}

/// `ε_i` of every suffix `b_k ⊗ ... ⊗ b_N` of a tensor word, given the
/// per-factor `(φ_i, ε_i)`. Entry `N` is the empty suffix.
fn suffix_epsilons(stats: &[(i64, i64)]) -> Vec<i64> {
    let mut eps = vec![0; stats.len() + 1];
    for k in (0..stats.len()).rev() {
        let (phi, epsilon) = stats[k];
        eps[k] = epsilon.max(eps[k + 1] - (phi - epsilon));
    }
    eps
}

/// Factor of `b_1 ⊗ ... ⊗ b_N` on which `f̃_i` acts, by splitting off the
/// leftmost factor and applying the two-factor rule repeatedly.
/// `stats[k] = (φ_i(b_k), ε_i(b_k))`.
pub fn tensor_f_position(stats: &[(i64, i64)]) -> Option<usize> {
    let eps = suffix_epsilons(stats);
    for (k, &(phi, _)) in stats.iter().enumerate() {
        if phi > eps[k + 1] {
            return Some(k);
        }
    }
    None
}

/// Factor of `b_1 ⊗ ... ⊗ b_N` on which `ẽ_i` acts; see [`tensor_f_position`].
pub fn tensor_e_position(stats: &[(i64, i64)]) -> Option<usize> {
    let eps = suffix_epsilons(stats);
    for (k, &(phi, epsilon)) in stats.iter().enumerate() {
        if phi >= eps[k + 1] {
            return (epsilon > 0).then_some(k);
        }
    }
    None
}

/// `ε_i` and `φ_i` of a whole tensor word.
pub fn tensor_statistics(stats: &[(i64, i64)]) -> (i64, i64) {
    let eps = suffix_epsilons(stats)[0];
    let total: i64 = stats.iter().map(|(p, e)| p - e).sum();
    (eps, eps + total)
}

/// Words in `B(Λ_1)^{⊗m}` with the iterated tensor rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordCrystal {
    rank: usize,
}

impl WordCrystal {
    pub fn new(rank: usize) -> Self {
        WordCrystal { rank }
    }

    fn stats(&self, w: &Word, i: usize) -> Vec<(i64, i64)> {
        w.0.iter()
            .map(|&k| ((k == i) as i64, (k == i + 1) as i64))
            .collect()
    }
}

/// A word of letters, read as `w_1 ⊗ w_2 ⊗ ... ⊗ w_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_char(' ')?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Crystal for WordCrystal {
    type Elem = Word;

    fn rank(&self) -> usize {
        self.rank
    }

    fn weight(&self, b: &Word) -> Weight {
        let mut w = Weight::zero(self.rank);
        for &k in &b.0 {
            w += &letter_weight(self.rank, k);
        }
        w
    }

    fn epsilon(&self, b: &Word, i: usize) -> i64 {
        tensor_statistics(&self.stats(b, i)).0
    }

    fn phi(&self, b: &Word, i: usize) -> i64 {
        tensor_statistics(&self.stats(b, i)).1
    }

    fn e_tilde(&self, b: &Word, i: usize) -> Option<Word> {
        let pos = tensor_e_position(&self.stats(b, i))?;
        let mut out = b.clone();
        out.0[pos] -= 1;
        Some(out)
    }

    fn f_tilde(&self, b: &Word, i: usize) -> Option<Word> {
        let pos = tensor_f_position(&self.stats(b, i))?;
        let mut out = b.clone();
        out.0[pos] += 1;
        Some(out)
    }
}

/// A colored edge `from --color--> to`, meaning `f̃_color(from) = to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub color: usize,
}

/// Finite connected crystal graph with node `0` as its highest weight
/// element. Node ids follow breadth-first discovery order, children taken
/// in color order `1..=n`.
#[derive(Debug, Clone)]
pub struct CrystalGraph<E> {
    rank: usize,
    nodes: Vec<E>,
    weights: Vec<Weight>,
    edges: Vec<Edge>,
    children: Vec<Vec<Option<usize>>>,
    parents: Vec<Vec<Option<usize>>>,
    index: HashMap<E, usize>,
}

impl<E: Clone + Eq + Hash + fmt::Display> CrystalGraph<E> {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn highest(&self) -> usize {
        0
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.weights[0]
    }

    pub fn nodes(&self) -> &[E] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &E {
        &self.nodes[id]
    }

    pub fn weight_of(&self, id: usize) -> &Weight {
        &self.weights[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, b: &E) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Target of the `color` edge out of `id`.
    pub fn child(&self, id: usize, color: usize) -> Option<usize> {
        self.children[id][color - 1]
    }

    /// Source of the `color` edge into `id`.
    pub fn parent(&self, id: usize, color: usize) -> Option<usize> {
        self.parents[id][color - 1]
    }

    /// Multiplicity of each weight, sorted by weight.
    pub fn weight_multiplicities(&self) -> Vec<(Weight, usize)> {
        let mut counts: HashMap<&Weight, usize> = HashMap::new();
        for w in &self.weights {
            *counts.entry(w).or_default() += 1;
        }
        let mut out: Vec<_> = counts.into_iter().map(|(w, c)| (w.clone(), c)).collect();
        out.sort();
        out
    }

    /// Graphviz rendering: one node per element labeled by its display
    /// string, edges labeled by color.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (id, b) in self.nodes.iter().enumerate() {
            let label = b.to_string().replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  {id} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", e.from, e.to, e.color);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            rank: self.rank,
            weight: self.weights[0].coeffs().to_vec(),
            nodes: self
                .nodes
                .iter()
                .zip(&self.weights)
                .enumerate()
                .map(|(id, (b, w))| NodeJson {
                    id,
                    label: b.to_string(),
                    weight: w.coeffs().to_vec(),
                })
                .collect(),
            edges: self.edges.clone(),
            highest: 0,
        }
    }
}

/// Serialized form of a [`CrystalGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub rank: usize,
    pub weight: Vec<i64>,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<Edge>,
    pub highest: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub label: String,
    pub weight: Vec<i64>,
}

pub const DEFAULT_MAX_NODES: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerateOptions {
    pub max_nodes: usize,
    pub execution: Execution,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions {
            max_nodes: DEFAULT_MAX_NODES,
            execution: Execution::default(),
        }
    }
}

impl GenerateOptions {
    pub fn sequential() -> Self {
        GenerateOptions {
            execution: Execution::Sequential,
            ..Self::default()
        }
    }
}

/// Closure of `seed` under all `f̃_i`.
///
/// Frontiers are expanded level by level; with a parallel execution the
/// `f̃_i` images of a level are computed concurrently and then merged in
/// frontier order, so numbering always matches a sequential FIFO search.
pub fn generate<C: Crystal>(
    crystal: &C,
    seed: C::Elem,
    opts: GenerateOptions,
) -> Result<CrystalGraph<C::Elem>> {
    let rank = crystal.rank();
    if !crystal.is_highest(&seed) {
        return Err(Error::domain(format!(
            "seed {seed} is not a highest weight element"
        )));
    }
    if opts.max_nodes == 0 {
        return Err(Error::NodeLimit { limit: 0 });
    }

    let mut graph = CrystalGraph {
        rank,
        nodes: vec![seed.clone()],
        weights: vec![crystal.weight(&seed)],
        edges: Vec::new(),
        children: vec![vec![None; rank]],
        parents: vec![vec![None; rank]],
        index: HashMap::from([(seed, 0)]),
    };

    let mut frontier: Vec<usize> = vec![0];
    while !frontier.is_empty() {
        let level: Vec<&C::Elem> = frontier.iter().map(|&id| &graph.nodes[id]).collect();
        let images: Vec<Vec<Option<C::Elem>>> = par::map_slice(&level, opts.execution, |b| {
            (1..=rank).map(|i| crystal.f_tilde(b, i)).collect()
        });

        let mut next = Vec::new();
        for (&from, row) in frontier.iter().zip(images) {
            for (slot, image) in row.into_iter().enumerate() {
                let Some(b) = image else { continue };
                let to = match graph.index.get(&b) {
                    Some(&id) => id,
                    None => {
                        let id = graph.nodes.len();
                        if id >= opts.max_nodes {
                            return Err(Error::NodeLimit {
                                limit: opts.max_nodes,
                            });
                        }
                        graph.weights.push(crystal.weight(&b));
                        graph.index.insert(b.clone(), id);
                        graph.nodes.push(b);
                        graph.children.push(vec![None; rank]);
                        graph.parents.push(vec![None; rank]);
                        next.push(id);
                        id
                    }
                };
                if let Some(prev) = graph.parents[to][slot] {
                    return Err(Error::internal(format!(
                        "node {} has two incoming {}-edges (from {} and {})",
                        graph.nodes[to],
                        slot + 1,
                        graph.nodes[prev],
                        graph.nodes[from]
                    )));
                }
                graph.parents[to][slot] = Some(from);
                graph.children[from][slot] = Some(to);
                graph.edges.push(Edge {
                    from,
                    to,
                    color: slot + 1,
                });
            }
        }
        frontier = next;
    }
    Ok(graph)
}

/// Operator string `f̃_{i_k} ⋯ f̃_{i_1}` applied to the highest node; stored
/// in application order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OpPath(pub Vec<usize>);

impl fmt::Display for OpPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("highest")?;
        for i in &self.0 {
            write!(f, " -f{i}->")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("rank mismatch: {left} vs {right}")]
    Rank { left: usize, right: usize },
    #[error("size mismatch: {left} vs {right} nodes")]
    Size { left: usize, right: usize },
    #[error("weight mismatch at {path}: {left} vs {right}")]
    Weight {
        path: OpPath,
        left: Weight,
        right: Weight,
    },
    #[error("edge mismatch at {path}, color {color}: {detail}")]
    Edge {
        path: OpPath,
        color: usize,
        detail: String,
    },
}

/// The unique morphism sending the highest node of `g1` to that of `g2` and
/// commuting with every `f̃_i`. Returns `map[node of g1] = node of g2`.
pub fn canonical_iso<A, B>(
    g1: &CrystalGraph<A>,
    g2: &CrystalGraph<B>,
) -> std::result::Result<Vec<usize>, IsoError>
where
    A: Clone + Eq + Hash + fmt::Display,
    B: Clone + Eq + Hash + fmt::Display,
{
    if g1.rank != g2.rank {
        return Err(IsoError::Rank {
            left: g1.rank,
            right: g2.rank,
        });
    }
    let check_weight = |u: usize, v: usize, path: &OpPath| {
        if g1.weights[u] != g2.weights[v] {
            return Err(IsoError::Weight {
                path: path.clone(),
                left: g1.weights[u].clone(),
                right: g2.weights[v].clone(),
            });
        }
        Ok(())
    };

    let mut paths = vec![None::<OpPath>; g1.len()];
    paths[0] = Some(OpPath::default());
    check_weight(0, 0, &OpPath::default())?;
    if g1.len() != g2.len() {
        return Err(IsoError::Size {
            left: g1.len(),
            right: g2.len(),
        });
    }

    let mut map = vec![usize::MAX; g1.len()];
    let mut taken = vec![false; g2.len()];
    map[0] = 0;
    taken[0] = true;
    // g1 ids are already in BFS order from the highest node.
    for u in 0..g1.len() {
        let path = paths[u].clone().ok_or_else(|| IsoError::Edge {
            path: OpPath::default(),
            color: 0,
            detail: format!("node {u} unreachable from the highest node"),
        })?;
        let v = map[u];
        for color in 1..=g1.rank {
            match (g1.child(u, color), g2.child(v, color)) {
                (None, None) => {}
                (Some(u2), Some(v2)) => {
                    let mut next = path.clone();
                    next.0.push(color);
                    if map[u2] == usize::MAX {
                        if taken[v2] {
                            return Err(IsoError::Edge {
                                path: next,
                                color,
                                detail: "target already matched to another node".into(),
                            });
                        }
                        check_weight(u2, v2, &next)?;
                        map[u2] = v2;
                        taken[v2] = true;
                        paths[u2] = Some(next);
                    } else if map[u2] != v2 {
                        return Err(IsoError::Edge {
                            path: next,
                            color,
                            detail: "edges lead to non-corresponding nodes".into(),
                        });
                    }
                }
                (l, _) => {
                    return Err(IsoError::Edge {
                        path,
                        color,
                        detail: format!(
                            "edge present on {} side only",
                            if l.is_some() { "left" } else { "right" }
                        ),
                    });
                }
            }
        }
    }
    Ok(map)
}
