//! Support τ-rigid and support τ-tilting objects, AIR mutation, and the
//! exchange graph with its σ/μ edge labels.
//!
//! Objects of C(mod Λ) = mod Λ ⊕ (mod Λ)[1] are encoded as catalog ids with a
//! shift flag; a shifted entry must be projective.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::catalog::IndecCatalog;
use crate::error::{Error, Result};
use crate::homalg::{hom_dim, tau};
use crate::rep::Rep;

/// An indecomposable object of C(mod Λ): a module or a shifted projective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedObject {
    pub id: usize,
    pub shifted: bool,
}

impl SignedObject {
    pub fn module(id: usize) -> Self {
        SignedObject { id, shifted: false }
    }

    pub fn shifted(id: usize) -> Self {
        SignedObject { id, shifted: true }
    }

    pub fn display(&self, cat: &IndecCatalog) -> String {
        if self.shifted {
            format!("{}[1]", cat.name(self.id))
        } else {
            cat.name(self.id).to_string()
        }
    }
}

/// Validate the shift-flag invariant: shifted entries must be projective.
pub fn check_signed(cat: &IndecCatalog, so: &SignedObject) -> Result<()> {
    if so.id >= cat.len() {
        return Err(Error::rejected(format!("unknown catalog id {}", so.id)));
    }
    if so.shifted && cat.entries[so.id].projective_vertex.is_none() {
        return Err(Error::InvariantViolation {
            detail: format!(
                "shift flag on non-projective module {}",
                cat.name(so.id)
            ),
        });
    }
    Ok(())
}

/// τ-rigidity of a bare representation: Hom(m, τm) = 0.
pub fn is_tau_rigid(m: &Rep) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    Ok(hom_dim(m, &tau(m))? == 0)
}

/// Support τ-rigidity of a set of signed objects: the module part is
/// pairwise τ-rigid, shifted parts are projective, Hom(P, M) = 0, and the
/// entries are pairwise distinct.
pub fn is_support_tau_rigid(cat: &IndecCatalog, objs: &[SignedObject]) -> Result<bool> {
    for so in objs {
        check_signed(cat, so)?;
    }
    let distinct: BTreeSet<&SignedObject> = objs.iter().collect();
    if distinct.len() != objs.len() {
        return Ok(false);
    }
    let modules: Vec<usize> = objs.iter().filter(|o| !o.shifted).map(|o| o.id).collect();
    let shifted: Vec<usize> = objs.iter().filter(|o| o.shifted).map(|o| o.id).collect();
    for &m in &modules {
        for &n in &modules {
            if cat.hom_tau_dims[m][n] != 0 {
                return Ok(false);
            }
        }
    }
    for &p in &shifted {
        for &m in &modules {
            if cat.hom_dims[p][m] != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An ordered support τ-tilting object: rk Λ pairwise distinct entries whose
/// sum is support τ-tilting.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedSttilt {
    pub entries: Vec<SignedObject>,
}

impl OrderedSttilt {
    pub fn new(cat: &IndecCatalog, entries: Vec<SignedObject>) -> Result<Self> {
        if entries.len() != cat.rank() {
            return Err(Error::rejected(format!(
                "an ordered support τ-tilting object over this algebra has {} entries",
                cat.rank()
            )));
        }
        if !is_support_tau_rigid(cat, &entries)? {
            return Err(Error::rejected(
                "entries do not form a support τ-rigid object",
            ));
        }
        Ok(OrderedSttilt { entries })
    }

    pub fn display(&self, cat: &IndecCatalog) -> String {
        self.entries
            .iter()
            .map(|e| e.display(cat))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn as_set(&self) -> BTreeSet<SignedObject> {
        self.entries.iter().copied().collect()
    }

    pub fn swap_positions(&self, i: usize) -> OrderedSttilt {
        let mut entries = self.entries.clone();
        entries.swap(i, i + 1);
        OrderedSttilt { entries }
    }
}

/// All candidate completions of `rest` to a support τ-tilting object,
/// excluding `exclude` itself.
fn completions(
    cat: &IndecCatalog,
    rest: &[SignedObject],
    exclude: &SignedObject,
) -> Result<Vec<SignedObject>> {
    let mut out = Vec::new();
    for id in 0..cat.len() {
        let mut cands = Vec::new();
        if cat.entries[id].tau_rigid {
            cands.push(SignedObject::module(id));
        }
        if cat.entries[id].projective_vertex.is_some() {
            cands.push(SignedObject::shifted(id));
        }
        for cand in cands {
            if cand == *exclude {
                continue;
            }
            let mut trial: Vec<SignedObject> = rest.to_vec();
            trial.push(cand);
            if is_support_tau_rigid(cat, &trial)? {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

/// AIR mutation at position `pos` (0-based): replace the entry by the unique
/// other completion of the rest.
pub fn mutate(cat: &IndecCatalog, t: &OrderedSttilt, pos: usize) -> Result<OrderedSttilt> {
    if pos >= t.entries.len() {
        return Err(Error::rejected(format!(
            "mutation position {} out of range",
            pos + 1
        )));
    }
    let removed = t.entries[pos];
    let rest: Vec<SignedObject> = t
        .entries
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pos)
        .map(|(_, e)| *e)
        .collect();
    let cands = completions(cat, &rest, &removed)?;
    match cands.len() {
        1 => {
            let mut entries = t.entries.clone();
            entries[pos] = cands[0];
            Ok(OrderedSttilt { entries })
        }
        0 => {
            if cat.is_windowed() {
                Err(Error::MutationLeavesWindow { position: pos + 1 })
            } else {
                Err(Error::internal(
                    "mutate",
                    "no completion found over a closed catalog",
                ))
            }
        }
        _ => Err(Error::internal(
            "mutate",
            format!(
                "non-unique completion ({} candidates) at position {}",
                cands.len(),
                pos + 1
            ),
        )),
    }
}

/// Unordered support τ-tilting objects by mutation closure from Λ.
/// The flag reports whether the closure was truncated by the window.
pub fn sttilt_enumerate(cat: &IndecCatalog) -> Result<(Vec<BTreeSet<SignedObject>>, bool)> {
    let start: BTreeSet<SignedObject> = cat
        .projectives()
        .into_iter()
        .map(SignedObject::module)
        .collect();
    let mut partial = false;
    let mut seen: BTreeSet<BTreeSet<SignedObject>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        let cur_vec: Vec<SignedObject> = cur.iter().copied().collect();
        for (i, removed) in cur_vec.iter().enumerate() {
            let rest: Vec<SignedObject> = cur_vec
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, e)| *e)
                .collect();
            let cands = completions(cat, &rest, removed)?;
            match cands.len() {
                1 => {
                    let mut next: BTreeSet<SignedObject> = rest.iter().copied().collect();
                    next.insert(cands[0]);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
                0 => {
                    if cat.is_windowed() {
                        partial = true;
                    } else {
                        return Err(Error::internal(
                            "sttilt_enumerate",
                            "no completion over a closed catalog",
                        ));
                    }
                }
                _ => {
                    return Err(Error::internal(
                        "sttilt_enumerate",
                        "non-unique completion",
                    ))
                }
            }
        }
    }
    Ok((seen.into_iter().collect(), partial))
}

/// Edge label in the exchange graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EdgeLabel {
    /// Mutation at the (1-based) position.
    Mu(usize),
    /// Adjacent transposition at the (1-based) position.
    Pi(usize),
}

impl std::fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeLabel::Mu(i) => write!(f, "mu{i}"),
            EdgeLabel::Pi(i) => write!(f, "pi{i}"),
        }
    }
}

#[derive(Debug)]
pub struct ExchangeGraph {
    pub vertices: Vec<OrderedSttilt>,
    /// Undirected labelled edges (i, j, label), i < j, vertex indices.
    pub edges: Vec<(usize, usize, EdgeLabel)>,
    pub partial: bool,
}

/// Exchange graph on ordered support τ-tilting objects reachable from the
/// orderings of Λ, with μ and π edges, up to `max_depth` steps (unlimited
/// when `None`). Vertices come out sorted by display name.
pub fn exchange_graph(
    cat: &IndecCatalog,
    max_depth: Option<usize>,
) -> Result<ExchangeGraph> {
    let n = cat.rank();
    let projs: Vec<SignedObject> = cat
        .projectives()
        .into_iter()
        .map(SignedObject::module)
        .collect();
    let mut starts = Vec::new();
    permutations(&projs, &mut Vec::new(), &mut vec![false; n], &mut starts);
    let mut partial = false;
    let mut dist: BTreeMap<OrderedSttilt, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let mut edges: BTreeSet<(OrderedSttilt, OrderedSttilt, EdgeLabel)> = BTreeSet::new();
    for s in starts {
        let t = OrderedSttilt { entries: s };
        if dist.insert(t.clone(), 0).is_none() {
            queue.push_back(t);
        }
    }
    while let Some(cur) = queue.pop_front() {
        let d = dist[&cur];
        if let Some(cap) = max_depth {
            if d >= cap {
                continue;
            }
        }
        let mut neighbors: Vec<(OrderedSttilt, EdgeLabel)> = Vec::new();
        for i in 0..n {
            match mutate(cat, &cur, i) {
                Ok(next) => neighbors.push((next, EdgeLabel::Mu(i + 1))),
                Err(Error::MutationLeavesWindow { .. }) => partial = true,
                Err(e) => return Err(e),
            }
        }
        for i in 0..n.saturating_sub(1) {
            neighbors.push((cur.swap_positions(i), EdgeLabel::Pi(i + 1)));
        }
        for (next, label) in neighbors {
            let (a, b) = if cur <= next {
                (cur.clone(), next.clone())
            } else {
                (next.clone(), cur.clone())
            };
            edges.insert((a, b, label));
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    let mut vertices: Vec<OrderedSttilt> = dist.keys().cloned().collect();
    vertices.sort_by_key(|v| v.display(cat));
    let index: BTreeMap<&OrderedSttilt, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edge_list: Vec<(usize, usize, EdgeLabel)> = edges
        .iter()
        .map(|(a, b, l)| {
            let (i, j) = (index[a], index[b]);
            if i <= j {
                (i, j, *l)
            } else {
                (j, i, *l)
            }
        })
        .collect();
    edge_list.sort();
    edge_list.dedup();
    Ok(ExchangeGraph {
        vertices,
        edges: edge_list,
        partial,
    })
}

fn permutations(
    items: &[SignedObject],
    cur: &mut Vec<SignedObject>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<SignedObject>>,
) {
    if cur.len() == items.len() {
        out.push(cur.clone());
        return;
    }
    for i in 0..items.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        cur.push(items[i]);
        permutations(items, cur, used, out);
        cur.pop();
        used[i] = false;
    }
}

/// DOT rendering of the exchange graph (undirected, labelled, deterministic).
pub fn graph_to_dot(cat: &IndecCatalog, g: &ExchangeGraph) -> String {
    let mut out = String::from("graph exchange {\n");
    for v in &g.vertices {
        out.push_str(&format!("  \"{}\";\n", v.display(cat)));
    }
    for (i, j, l) in &g.edges {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
            g.vertices[*i].display(cat),
            g.vertices[*j].display(cat),
            l
        ));
    }
    if g.partial {
        out.push_str("  // truncated at the catalog window boundary\n");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
pub struct GraphJson {
    pub vertices: Vec<Vec<String>>,
    pub edges: Vec<GraphEdgeJson>,
    pub partial: bool,
}

#[derive(Serialize)]
pub struct GraphEdgeJson {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

pub fn graph_to_json(cat: &IndecCatalog, g: &ExchangeGraph) -> GraphJson {
    GraphJson {
        vertices: g
            .vertices
            .iter()
            .map(|v| v.entries.iter().map(|e| e.display(cat)).collect())
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|(i, j, l)| GraphEdgeJson {
                from: *i,
                to: *j,
                label: l.to_string(),
            })
            .collect(),
        partial: g.partial,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::prefab;
    use crate::catalog::knit;

    fn names(cat: &IndecCatalog, set: &BTreeSet<SignedObject>) -> BTreeSet<String> {
        set.iter().map(|o| o.display(cat)).collect()
    }

    #[test]
    fn gamma_rigidity_flags() {
        let alg = prefab::gamma();
        let cat = knit(&alg, 64).unwrap();
        assert!(cat.entries[cat.by_name("P2").unwrap()].tau_rigid);
        assert!(cat.entries[cat.by_name("S1").unwrap()].tau_rigid);
        assert!(!cat.entries[cat.by_name("I1").unwrap()].tau_rigid); // 2/1
    }

    #[test]
    fn gamma_support_pairs() {
        let alg = prefab::gamma();
        let cat = knit(&alg, 64).unwrap();
        let id = |n: &str| cat.by_name(n).unwrap();
        let m = SignedObject::module;
        let sh = SignedObject::shifted;
        assert!(is_support_tau_rigid(&cat, &[m(id("P1")), m(id("P2"))]).unwrap());
        assert!(!is_support_tau_rigid(&cat, &[m(id("S1")), m(id("P2"))]).unwrap());
        assert!(is_support_tau_rigid(&cat, &[m(id("S1")), sh(id("P2"))]).unwrap());
        // Shift flag on a non-projective is an invariant violation.
        let err = is_support_tau_rigid(&cat, &[sh(id("S1"))]).unwrap_err();
        assert!(matches!(err, Error::InvariantViolation { .. }));
    }

    #[test]
    fn gamma_sttilt_list() {
        let alg = prefab::gamma();
        let cat = knit(&alg, 64).unwrap();
        let (objs, partial) = sttilt_enumerate(&cat).unwrap();
        assert!(!partial);
        let got: BTreeSet<BTreeSet<String>> =
            objs.iter().map(|o| names(&cat, o)).collect();
        let expect: BTreeSet<BTreeSet<String>> = [
            vec!["P1", "P2"],
            vec!["P1", "S1"],
            vec!["P2", "S2"],
            vec!["S1", "P2[1]"],
            vec!["S2", "P1[1]"],
            vec!["P1[1]", "P2[1]"],
        ]
        .iter()
        .map(|v| v.iter().map(|s| s.to_string()).collect())
        .collect();
        assert_eq!(got, expect);
        // Exactly three of them are τ-tilting modules (no shifted part).
        let tilting = objs
            .iter()
            .filter(|o| o.iter().all(|e| !e.shifted))
            .count();
        assert_eq!(tilting, 3);
    }

    #[test]
    fn gamma_mutations() {
        let alg = prefab::gamma();
        let cat = knit(&alg, 64).unwrap();
        let id = |n: &str| cat.by_name(n).unwrap();
        let lambda = OrderedSttilt::new(
            &cat,
            vec![
                SignedObject::module(id("P1")),
                SignedObject::module(id("P2")),
            ],
        )
        .unwrap();
        let m1 = mutate(&cat, &lambda, 0).unwrap();
        assert_eq!(m1.display(&cat), "S2,P2");
        let m2 = mutate(&cat, &lambda, 1).unwrap();
        assert_eq!(m2.display(&cat), "P1,S1");
        // Involution.
        assert_eq!(mutate(&cat, &m1, 0).unwrap(), lambda);
        assert_eq!(mutate(&cat, &m2, 1).unwrap(), lambda);
    }

    #[test]
    fn permutation_mutation_compatibility() {
        // σ(μ_i T) = μ_{σ(i)}(σ T) for the adjacent transposition.
        let alg = prefab::gamma();
        let cat = knit(&alg, 64).unwrap();
        let g = exchange_graph(&cat, None).unwrap();
        for t in &g.vertices {
            for i in 0..2 {
                let lhs = mutate(&cat, t, i).unwrap().swap_positions(0);
                let rhs = mutate(&cat, &t.swap_positions(0), 1 - i).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn gamma_exchange_graph_is_a_six_cycle_doubled() {
        let alg = prefab::gamma();
        let cat = knit(&alg, 64).unwrap();
        let g = exchange_graph(&cat, None).unwrap();
        assert!(!g.partial);
        assert_eq!(g.vertices.len(), 12);
        // Unordered quotient: 6 objects, each with mutation degree 2.
        let (objs, _) = sttilt_enumerate(&cat).unwrap();
        assert_eq!(objs.len(), 6);
        let mut degree: BTreeMap<BTreeSet<SignedObject>, BTreeSet<BTreeSet<SignedObject>>> =
            BTreeMap::new();
        for (i, j, l) in &g.edges {
            if matches!(l, EdgeLabel::Mu(_)) {
                let a = g.vertices[*i].as_set();
                let b = g.vertices[*j].as_set();
                if a != b {
                    degree.entry(a.clone()).or_default().insert(b.clone());
                    degree.entry(b).or_default().insert(a);
                }
            }
        }
        assert_eq!(degree.len(), 6);
        assert!(degree.values().all(|nb| nb.len() == 2), "six-cycle");
    }

    #[test]
    fn one_vertex_graph() {
        let alg = prefab::single_vertex();
        let cat = knit(&alg, 8).unwrap();
        let (objs, _) = sttilt_enumerate(&cat).unwrap();
        assert_eq!(objs.len(), 2); // {P}, {P[1]}
        let g = exchange_graph(&cat, None).unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges.len(), 1);
        assert_eq!(g.edges[0].2, EdgeLabel::Mu(1));
    }

    #[test]
    fn kronecker_figure_ladder_mutations() {
        let alg = prefab::kronecker();
        let cat = knit(&alg, 4).unwrap();
        let id = |n: &str| cat.by_name(n).unwrap();
        let lambda = OrderedSttilt::new(
            &cat,
            vec![
                SignedObject::module(id("P1")),
                SignedObject::module(id("P2")),
            ],
        )
        .unwrap();
        let down = mutate(&cat, &lambda, 0).unwrap();
        assert_eq!(down.display(&cat), "P1[1],P2");
        let up = mutate(&cat, &lambda, 1).unwrap();
        assert_eq!(up.display(&cat), "P1,tau^-1P2");
        let down2 = mutate(&cat, &down, 1).unwrap();
        assert_eq!(down2.display(&cat), "P1[1],P2[1]");
        let down3 = mutate(&cat, &down2, 0).unwrap();
        assert_eq!(down3.display(&cat), "I1,P2[1]");
        let down4 = mutate(&cat, &down3, 1).unwrap();
        assert_eq!(down4.display(&cat), "I1,I2");
    }

    #[test]
    fn kronecker_window_sttilt() {
        let alg = prefab::kronecker();
        let cat = knit(&alg, 4).unwrap();
        let (objs, partial) = sttilt_enumerate(&cat).unwrap();
        assert!(partial);
        // 11 rungs in the depth-4 window.
        assert_eq!(objs.len(), 11);
        let got: BTreeSet<BTreeSet<String>> =
            objs.iter().map(|o| names(&cat, o)).collect();
        for expect in [
            vec!["P1", "P2"],
            vec!["P1", "tau^-1P2"],
            vec!["tau^-1P1", "tau^-1P2"],
            vec!["tau^-1P1", "tau^-2P2"],
            vec!["I1", "I2"],
            vec!["tau^1I1", "I2"],
            vec!["tau^1I1", "tau^1I2"],
            vec!["tau^2I1", "tau^1I2"],
            vec!["I1", "P2[1]"],
            vec!["P1[1]", "P2"],
            vec!["P1[1]", "P2[1]"],
        ] {
            let e: BTreeSet<String> = expect.iter().map(|s| s.to_string()).collect();
            assert!(got.contains(&e), "missing {e:?}");
        }
    }
}
