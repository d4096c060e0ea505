//! Factorized counting of `|F(G)|` and `|D(G)|` over components, blocks and
//! certified cut vertices.
//!
//! Forests always factor over blocks. Degree tuples factor at a cut vertex
//! `v` splitting `G` into `P` and `R` only when `v` is degree-determinable
//! in one of them; otherwise the two pieces are merged and counted whole.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::books::{book_degree_count, book_forest_count, recognize_book};
use super::determinable::{is_degree_determinable_brute, quick_certificate, Certificate};
use crate::budget::Budget;
use crate::census::{count_degree_tuples, count_forests_brute, count_forests_dc};
use crate::error::Result;
use crate::graph::{block_decomposition, is_bipartite, Graph, Vertex};
use crate::scalar::pow2;
use crate::Exact;

/// Brute-force determinability proofs are only attempted on pieces this
/// small, whatever the budget.
const CERTIFICATE_BRUTE_EDGES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Forests,
    DegreeTuples,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Product of the children.
    Product,
    /// No edges: a single empty subgraph.
    Empty,
    Edge,
    Cycle,
    Book,
    Brute,
    DeletionContraction,
}

/// Which side of a cut the certificate was found on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertifiedSide {
    /// The split-off piece (first child).
    Piece,
    /// The remainder (second child).
    Rest,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub vertex: Vertex,
    pub side: CertifiedSide,
    pub kind: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanNode {
    pub method: Method,
    #[serde(with = "crate::scalar::decimal")]
    pub value: Exact,
    /// Edges covered, in the parent graph's labels; written as `"u-v"`.
    #[serde(with = "edge_strings")]
    pub edges: Vec<(Vertex, Vertex)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    /// Set on `Product` nodes of the degree-tuple plan that split at a cut
    /// vertex.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CutCertificate>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub children: Vec<PlanNode>,
}

mod edge_strings {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::graph::Vertex;

    pub fn serialize<S: Serializer>(edges: &[(Vertex, Vertex)], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(edges.iter().map(|(u, v)| format!("{u}-{v}")))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(Vertex, Vertex)>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|e| {
                let (u, v) = e.split_once('-').ok_or_else(|| D::Error::custom(format!("bad edge {e:?}")))?;
                Ok((u.parse().map_err(D::Error::custom)?, v.parse().map_err(D::Error::custom)?))
            })
            .collect()
    }
}

impl PlanNode {
    fn leaf(method: Method, value: Exact, edges: Vec<(Vertex, Vertex)>, detail: Option<String>) -> Self {
        PlanNode { method, value, edges, detail, certificate: None, children: Vec::new() }
    }

    fn product(children: Vec<PlanNode>, certificate: Option<CutCertificate>) -> Self {
        let value = children.iter().fold(BigUint::one(), |acc, c| acc * &c.value);
        let mut edges: Vec<_> = children.iter().flat_map(|c| c.edges.iter().copied()).collect();
        edges.sort_unstable();
        PlanNode { method: Method::Product, value, edges, detail: None, certificate, children }
    }

    /// Leaves in depth-first order.
    pub fn leaves(&self) -> Vec<&PlanNode> {
        if self.children.is_empty() {
            vec![self]
        } else {
            self.children.iter().flat_map(|c| c.leaves()).collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationPlan {
    pub quantity: Quantity,
    pub root: PlanNode,
}

impl FactorizationPlan {
    pub fn value(&self) -> &Exact {
        &self.root.value
    }
}

fn labels(g: &Graph, ids: &[usize]) -> Vec<(Vertex, Vertex)> {
    ids.iter().map(|&e| g.edge(e)).collect()
}

fn is_cycle_graph(h: &Graph) -> bool {
    h.edge_count() >= 3 && h.edge_count() == h.vertex_count() && h.degrees().iter().all(|&d| d == 2) && h.is_connected()
}

fn forest_leaf(g: &Graph, ids: &[usize], budget: Budget) -> Result<PlanNode> {
    let (h, _) = g.edge_induced(ids);
    let edges = labels(g, ids);
    let m = h.edge_count();
    if m == 1 {
        return Ok(PlanNode::leaf(Method::Edge, BigUint::from(2u8), edges, None));
    }
    if is_cycle_graph(&h) {
        let value = pow2::<BigUint>(m as u32) - 1u8;
        return Ok(PlanNode::leaf(Method::Cycle, value, edges, Some(format!("C{m}"))));
    }
    if let Some(spec) = recognize_book(&h) {
        let value = book_forest_count(&spec);
        return Ok(PlanNode::leaf(Method::Book, value, edges, Some(spec.to_string())));
    }
    if m <= 63 && budget.allows(1u128 << m) {
        let value = BigUint::from(count_forests_brute(&h, budget)?);
        return Ok(PlanNode::leaf(Method::Brute, value, edges, None));
    }
    Ok(PlanNode::leaf(Method::DeletionContraction, count_forests_dc(&h), edges, None))
}

/// Forest-count plan: a product over all blocks. Blocks too large for brute
/// force within `budget` are counted by deletion-contraction.
pub fn forest_plan(g: &Graph, budget: Budget) -> Result<FactorizationPlan> {
    let mut children = Vec::new();
    for block in block_decomposition(g) {
        if !block.edges.is_empty() {
            children.push(forest_leaf(g, &block.edges, budget)?);
        }
    }
    Ok(FactorizationPlan { quantity: Quantity::Forests, root: root_of(children) })
}

fn root_of(children: Vec<PlanNode>) -> PlanNode {
    if children.is_empty() {
        PlanNode::leaf(Method::Empty, BigUint::one(), Vec::new(), None)
    } else {
        PlanNode::product(children, None)
    }
}

pub fn count_f_factored(g: &Graph, budget: Budget) -> Result<Exact> {
    Ok(forest_plan(g, budget)?.root.value)
}

fn degree_leaf(g: &Graph, ids: &[usize], budget: Budget) -> Result<PlanNode> {
    let (h, _) = g.edge_induced(ids);
    let edges = labels(g, ids);
    let m = h.edge_count();
    if m == 1 {
        return Ok(PlanNode::leaf(Method::Edge, BigUint::from(2u8), edges, None));
    }
    if is_cycle_graph(&h) {
        // odd cycles realize all 2^m tuples; even ones merge the two
        // perfect matchings
        let value = pow2::<BigUint>(m as u32) - u8::from(m % 2 == 0);
        return Ok(PlanNode::leaf(Method::Cycle, value, edges, Some(format!("C{m}"))));
    }
    if let Some(spec) = recognize_book(&h) {
        let value = book_degree_count(&spec);
        return Ok(PlanNode::leaf(Method::Book, value, edges, Some(spec.to_string())));
    }
    let value = BigUint::from(count_degree_tuples(&h, budget)?);
    Ok(PlanNode::leaf(Method::Brute, value, edges, None))
}

/// Certificate that `v` is degree-determinable in the graph spanned by
/// `ids`, or `None` if none was found.
fn certify(g: &Graph, ids: &[usize], v: Vertex, budget: Budget, allow_brute: bool) -> Result<Option<Certificate>> {
    let (h, map) = g.edge_induced(ids);
    let local = map.iter().position(|&o| o == v).expect("cut vertex lies in the piece");
    if let Some(c) = quick_certificate(&h, local) {
        return Ok(Some(c));
    }
    if allow_brute && h.edge_count() <= CERTIFICATE_BRUTE_EDGES && budget.allows(1u128 << h.edge_count()) {
        return Ok(is_degree_determinable_brute(&h, local, budget)?.then_some(Certificate::Brute));
    }
    Ok(None)
}

fn vertex_sets(g: &Graph, pieces: &[Vec<usize>]) -> Vec<Vec<Vertex>> {
    pieces
        .iter()
        .map(|p| {
            let mut vs: Vec<Vertex> = p.iter().flat_map(|&e| {
                let (u, v) = g.edge(e);
                [u, v]
            }).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect()
}

/// Degree-tuple plan for one connected edge set split into `pieces`
/// (initially its blocks), which form a tree through shared cut vertices.
fn degree_pieces(g: &Graph, mut pieces: Vec<Vec<usize>>, budget: Budget) -> Result<PlanNode> {
    loop {
        if pieces.len() == 1 {
            return degree_leaf(g, &pieces[0], budget);
        }
        let verts = vertex_sets(g, &pieces);
        let mut multiplicity = vec![0usize; g.vertex_count()];
        for vs in &verts {
            for &v in vs {
                multiplicity[v] += 1;
            }
        }
        // leaf pieces: exactly one cut vertex
        let leaves: Vec<(usize, Vertex)> = verts
            .iter()
            .enumerate()
            .filter_map(|(i, vs)| {
                let cuts: Vec<Vertex> = vs.iter().copied().filter(|&v| multiplicity[v] > 1).collect();
                (cuts.len() == 1).then(|| (i, cuts[0]))
            })
            .collect();

        for pass in [false, true] {
            for &(i, v) in &leaves {
                let rest: Vec<usize> = pieces
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .flat_map(|(_, p)| p.iter().copied())
                    .collect();
                let found = match certify(g, &pieces[i], v, budget, pass)? {
                    Some(kind) => Some(CutCertificate { vertex: v, side: CertifiedSide::Piece, kind }),
                    None => certify(g, &rest, v, budget, pass)?
                        .map(|kind| CutCertificate { vertex: v, side: CertifiedSide::Rest, kind }),
                };
                if let Some(cert) = found {
                    let piece = degree_leaf(g, &pieces[i], budget)?;
                    pieces.remove(i);
                    let remainder = degree_pieces(g, pieces, budget)?;
                    return Ok(PlanNode::product(vec![piece, remainder], Some(cert)));
                }
            }
        }
        // no certificate anywhere: merge the first leaf piece into a
        // neighbour sharing its cut vertex
        let (i, v) = leaves[0];
        let j = (0..pieces.len()).find(|&j| j != i && verts[j].binary_search(&v).is_ok()).expect("leaf piece has a neighbour");
        let taken = std::mem::take(&mut pieces[i]);
        pieces[j].extend(taken);
        pieces[j].sort_unstable();
        pieces.remove(i);
    }
}

/// Degree-tuple plan: components multiply; within a component, pieces are
/// split off at certified cut vertices and merged otherwise.
pub fn degree_plan(g: &Graph, budget: Budget) -> Result<FactorizationPlan> {
    let blocks = block_decomposition(g);
    let mut children = Vec::new();
    for comp in g.components() {
        let pieces: Vec<Vec<usize>> = blocks
            .iter()
            .filter(|b| !b.edges.is_empty() && comp.binary_search(&b.vertices[0]).is_ok())
            .map(|b| b.edges.clone())
            .collect();
        if !pieces.is_empty() {
            children.push(degree_pieces(g, pieces, budget)?);
        }
    }
    Ok(FactorizationPlan { quantity: Quantity::DegreeTuples, root: root_of(children) })
}

pub fn count_d_factored(g: &Graph, budget: Budget) -> Result<Exact> {
    Ok(degree_plan(g, budget)?.root.value)
}

/// `true` if the graph is bipartite; convenience for status checks.
pub(crate) fn bipartite(g: &Graph) -> bool {
    is_bipartite(g).is_bipartite()
}
