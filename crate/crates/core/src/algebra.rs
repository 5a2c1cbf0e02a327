//! Quivers with admissible relations and the resulting path-basis algebras.
//!
//! A presentation is built by closing the set of irreducible paths under the
//! rewriting system derived from the relations: enumerate paths by length,
//! discard any path containing the leading word of a relation, stop at the
//! first empty length level. The closure is rejected if the rewriting system
//! is not confluent under the fixed order, or if paths survive past the cap.
//!
//! Composition convention: a path stores its arrows in application order, so
//! the composite "β after α" is `[α, β]`. Textual relation syntax (`"b*a"`)
//! is right-to-left and gets reversed at the parse boundary.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::Zero;
use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::linalg::QRat;

/// Default cap on surviving path length before the build gives up on
/// verifying finite-dimensionality.
pub const DEFAULT_PATH_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Arrow order is normalized to name order on construction
/// so that every downstream ordering is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, mut arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::InvalidPresentation {
                    detail: format!("duplicate vertex name `{v}`"),
                });
            }
        }
        arrows.sort_by(|a, b| a.name.cmp(&b.name));
        let mut names = BTreeSet::new();
        for a in &arrows {
            if seen.contains(&a.name) || !names.insert(a.name.clone()) {
                return Err(Error::InvalidPresentation {
                    detail: format!("arrow name `{}` is not distinct", a.name),
                });
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidPresentation {
                    detail: format!("arrow `{}` has an endpoint outside the vertex list", a.name),
                });
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// A path in the quiver: starting vertex plus arrows in application order.
/// Trivial paths have an empty arrow list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWord {
    pub src: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn trivial(v: usize) -> Self {
        PathWord {
            src: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.src, |&a| quiver.arrows[a].target)
    }
}

// Degree-lexicographic order: length first, then the arrow sequence (arrow
// ids are name-sorted), then the source vertex.
impl Ord for PathWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.arrows.len(), &self.arrows, self.src).cmp(&(
            other.arrows.len(),
            &other.arrows,
            other.src,
        ))
    }
}

impl PartialOrd for PathWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Q-linear combination of paths.
pub type PathCombo = BTreeMap<PathWord, QRat>;

fn combo_insert(combo: &mut PathCombo, path: PathWord, coeff: QRat) {
    if coeff.is_zero() {
        return;
    }
    let entry = combo.entry(path).or_insert_with(QRat::zero);
    *entry = entry.clone() + coeff;
    if entry.is_zero() {
        // re-fetch to remove; avoids holding the borrow
    }
    combo.retain(|_, c| !c.is_zero());
}

/// One admissible relation: a Q-linear combination of parallel paths of
/// length at least two that vanishes in the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(QRat, PathWord)>,
}

#[derive(Debug, Clone)]
struct RewriteRule {
    lhs: Vec<usize>,
    lhs_src: usize,
    rhs: PathCombo,
}

/// A finite-dimensional path algebra presentation: quiver, relations, the
/// path basis modulo the relation ideal, and the multiplication table.
pub struct AlgebraPresentation {
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<PathWord>,
    basis_index: BTreeMap<PathWord, usize>,
    by_pair: BTreeMap<(usize, usize), Vec<usize>>,
    /// Normal form of (arrow ∘ basis path), as a combination of basis paths.
    left_mul: Vec<BTreeMap<usize, Vec<(usize, QRat)>>>,
    op_cache: OnceCell<Arc<AlgebraPresentation>>,
}

impl std::fmt::Debug for AlgebraPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "AlgebraPresentation({} vertices, {} arrows, dim {})",
            self.quiver.vertices.len(),
            self.quiver.arrows.len(),
            self.dim()
        )
    }
}

impl AlgebraPresentation {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }

    pub fn basis_paths_between(&self, source: usize, target: usize) -> &[usize] {
        self.by_pair
            .get(&(source, target))
            .map_or(&[], Vec::as_slice)
    }

    pub fn path_target(&self, p: &PathWord) -> usize {
        p.target(&self.quiver)
    }

    /// Pretty form of a basis path in right-to-left composition order.
    pub fn path_display(&self, p: &PathWord) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.quiver.vertices[p.src])
        } else {
            p.arrows
                .iter()
                .rev()
                .map(|&a| self.quiver.arrows[a].name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

fn normalize_relation(quiver: &Quiver, rel: &Relation) -> Result<Option<Relation>> {
    if rel.terms.is_empty() {
        return Ok(None);
    }
    let mut combined: PathCombo = BTreeMap::new();
    let mut endpoints: Option<(usize, usize)> = None;
    for (c, p) in &rel.terms {
        for w in p.arrows.windows(2) {
            if quiver.arrows[w[0]].target != quiver.arrows[w[1]].source {
                return Err(Error::InvalidPresentation {
                    detail: "relation contains a non-composable path".into(),
                });
            }
        }
        if let Some(&a0) = p.arrows.first() {
            if quiver.arrows[a0].source != p.src {
                return Err(Error::InvalidPresentation {
                    detail: "relation path source does not match its first arrow".into(),
                });
            }
        }
        if p.len() < 2 {
            return Err(Error::InvalidPresentation {
                detail: "relation path of length < 2 (not admissible)".into(),
            });
        }
        let ends = (p.src, p.target(quiver));
        match endpoints {
            None => endpoints = Some(ends),
            Some(e) if e == ends => {}
            Some(_) => {
                return Err(Error::InvalidPresentation {
                    detail: "relation terms are not parallel".into(),
                })
            }
        }
        combo_insert(&mut combined, p.clone(), c.clone());
    }
    if combined.is_empty() {
        return Ok(None);
    }
    Ok(Some(Relation {
        terms: combined
            .into_iter()
            .map(|(p, c)| (c, p))
            .collect(),
    }))
}

fn rules_from_relations(relations: &[Relation]) -> Vec<RewriteRule> {
    let mut rules = Vec::new();
    for rel in relations {
        // Leading term: the largest path in the fixed order.
        let (lead_coeff, lead_path) = rel
            .terms
            .iter()
            .max_by(|a, b| a.1.cmp(&b.1))
            .expect("nonempty relation")
            .clone();
        let mut rhs: PathCombo = BTreeMap::new();
        for (c, p) in &rel.terms {
            if *p == lead_path {
                continue;
            }
            combo_insert(&mut rhs, p.clone(), -(c / &lead_coeff));
        }
        rules.push(RewriteRule {
            lhs_src: lead_path.src,
            lhs: lead_path.arrows,
            rhs,
        });
    }
    rules
}

fn path_is_irreducible(p: &PathWord, rules: &[RewriteRule]) -> bool {
    !rules.iter().any(|rule| {
        p.arrows
            .windows(rule.lhs.len())
            .any(|w| w == rule.lhs.as_slice())
    })
}

/// Rewrite one occurrence of a rule inside `p` at the given position.
fn rewrite_at(quiver: &Quiver, p: &PathWord, rule: &RewriteRule, pos: usize) -> PathCombo {
    let prefix = &p.arrows[..pos];
    let suffix = &p.arrows[pos + rule.lhs.len()..];
    let mut out: PathCombo = BTreeMap::new();
    for (t, c) in &rule.rhs {
        let mut arrows = prefix.to_vec();
        arrows.extend_from_slice(&t.arrows);
        arrows.extend_from_slice(suffix);
        let src = if pos > 0 { p.src } else { t.src };
        let q = PathWord {
            src: if arrows.is_empty() { p.src } else { src },
            arrows,
        };
        debug_assert!(q.is_empty() || quiver.arrows[q.arrows[0]].source == q.src);
        combo_insert(&mut out, q, c.clone());
    }
    out
}

/// Full normal form of a combination: repeatedly rewrite the largest
/// reducible monomial, scanning occurrences left to right and rules in order.
fn normal_form(quiver: &Quiver, rules: &[RewriteRule], combo: &PathCombo) -> PathCombo {
    let mut work = combo.clone();
    loop {
        let Some((path, coeff)) = work
            .iter()
            .rev()
            .find(|(p, _)| !path_is_irreducible(p, rules))
            .map(|(p, c)| (p.clone(), c.clone()))
        else {
            return work;
        };
        work.remove(&path);
        let (rule, pos) = rules
            .iter()
            .find_map(|rule| {
                path.arrows
                    .windows(rule.lhs.len())
                    .position(|w| w == rule.lhs.as_slice())
                    .map(|pos| (rule, pos))
            })
            .expect("reducible path has an occurrence");
        for (q, c) in rewrite_at(quiver, &path, rule, pos) {
            combo_insert(&mut work, q, c * &coeff);
        }
    }
}

/// Build the algebra: path-basis closure, multiplication data, confluence and
/// finiteness checks.
pub fn build_algebra(
    quiver: Quiver,
    relations: Vec<Relation>,
    path_cap: usize,
) -> Result<Arc<AlgebraPresentation>> {
    let mut normalized = Vec::new();
    for rel in &relations {
        if let Some(r) = normalize_relation(&quiver, rel)? {
            normalized.push(r);
        }
    }
    let rules = rules_from_relations(&normalized);

    // Confluence of the fixed rewriting order: every overlap of two leading
    // words must reduce to the same normal form both ways.
    check_confluence(&quiver, &rules)?;

    // Level-by-level closure of irreducible paths.
    let mut basis: Vec<PathWord> = (0..quiver.vertices.len()).map(PathWord::trivial).collect();
    let mut frontier = basis.clone();
    let mut length = 0usize;
    while !frontier.is_empty() {
        length += 1;
        let mut next = Vec::new();
        for p in &frontier {
            let t = p.target(&quiver);
            for (aid, arrow) in quiver.arrows.iter().enumerate() {
                if arrow.source != t {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(aid);
                let q = PathWord { src: p.src, arrows };
                if path_is_irreducible(&q, &rules) {
                    next.push(q);
                }
            }
        }
        next.sort();
        next.dedup();
        if !next.is_empty() && length > path_cap {
            return Err(Error::NotFiniteDimensional {
                cap: path_cap,
                length,
            });
        }
        basis.extend(next.iter().cloned());
        frontier = next;
    }
    basis.sort();

    let basis_index: BTreeMap<PathWord, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, p) in basis.iter().enumerate() {
        by_pair
            .entry((p.src, p.target(&quiver)))
            .or_default()
            .push(i);
    }

    // left_mul[a][i] = arrow_a ∘ basis_i in the basis.
    let mut left_mul: Vec<BTreeMap<usize, Vec<(usize, QRat)>>> =
        vec![BTreeMap::new(); quiver.arrows.len()];
    for (aid, arrow) in quiver.arrows.iter().enumerate() {
        for (i, p) in basis.iter().enumerate() {
            if p.target(&quiver) != arrow.source {
                continue;
            }
            let mut arrows = p.arrows.clone();
            arrows.push(aid);
            let q = PathWord { src: p.src, arrows };
            let mut start: PathCombo = BTreeMap::new();
            combo_insert(&mut start, q, QRat::from_integer(1.into()));
            let nf = normal_form(&quiver, &rules, &start);
            let mut entry = Vec::new();
            for (path, c) in nf {
                let id = *basis_index.get(&path).ok_or_else(|| {
                    Error::internal(
                        "build_algebra",
                        "normal form left the discovered basis; closure incomplete",
                    )
                })?;
                entry.push((id, c));
            }
            left_mul[aid].insert(i, entry);
        }
    }

    let alg = AlgebraPresentation {
        quiver,
        relations: normalized,
        basis,
        basis_index,
        by_pair,
        left_mul,
        op_cache: OnceCell::new(),
    };
    alg.verify_table()?;
    Ok(Arc::new(alg))
}

pub fn build_algebra_default(quiver: Quiver, relations: Vec<Relation>) -> Result<Arc<AlgebraPresentation>> {
    build_algebra(quiver, relations, DEFAULT_PATH_CAP)
}

fn check_confluence(quiver: &Quiver, rules: &[RewriteRule]) -> Result<()> {
    let nf_of_word = |word: &PathWord, first: (&RewriteRule, usize)| -> PathCombo {
        let mut combo = rewrite_at(quiver, word, first.0, first.1);
        combo = normal_form(quiver, rules, &combo);
        combo
    };
    for r1 in rules {
        for r2 in rules {
            // Overlaps: a suffix of r1.lhs equals a prefix of r2.lhs, or
            // r2.lhs occurs strictly inside r1.lhs.
            for k in 1..=r1.lhs.len().min(r2.lhs.len()) {
                if r1.lhs[r1.lhs.len() - k..] != r2.lhs[..k] {
                    continue;
                }
                let mut arrows = r1.lhs.clone();
                arrows.extend_from_slice(&r2.lhs[k..]);
                let word = PathWord {
                    src: r1.lhs_src,
                    arrows,
                };
                let a = nf_of_word(&word, (r1, 0));
                let b = nf_of_word(&word, (r2, r1.lhs.len() - k));
                if a != b {
                    return Err(Error::NonConfluentPresentation {
                        detail: "overlap of two leading words reduces to different normal forms"
                            .into(),
                    });
                }
            }
            if r2.lhs.len() < r1.lhs.len() {
                for pos in 0..=r1.lhs.len() - r2.lhs.len() {
                    if r1.lhs[pos..pos + r2.lhs.len()] != r2.lhs[..] {
                        continue;
                    }
                    let word = PathWord {
                        src: r1.lhs_src,
                        arrows: r1.lhs.clone(),
                    };
                    let a = nf_of_word(&word, (r1, 0));
                    let b = nf_of_word(&word, (r2, pos));
                    if a != b {
                        return Err(Error::NonConfluentPresentation {
                            detail: "nested leading words reduce to different normal forms".into(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

impl AlgebraPresentation {
    /// Normal form of (arrow ∘ basis path), empty when not composable.
    pub fn left_mul(&self, arrow: usize, basis_id: usize) -> &[(usize, QRat)] {
        self.left_mul[arrow]
            .get(&basis_id)
            .map_or(&[], Vec::as_slice)
    }

    /// Product of basis elements j ∘ i ("i first"), as basis coordinates.
    /// Empty when the endpoints do not compose.
    pub fn basis_product(&self, j: usize, i: usize) -> Vec<(usize, QRat)> {
        let pj = &self.basis[j];
        let pi = &self.basis[i];
        if pj.src != pi.target(&self.quiver) {
            return Vec::new();
        }
        let mut acc: Vec<(usize, QRat)> = vec![(i, QRat::from_integer(1.into()))];
        for &a in &pj.arrows {
            let mut next: BTreeMap<usize, QRat> = BTreeMap::new();
            for (bid, c) in &acc {
                if let Some(step) = self.left_mul[a].get(bid) {
                    for (nid, nc) in step {
                        let e = next.entry(*nid).or_insert_with(QRat::zero);
                        *e = e.clone() + c * nc;
                    }
                }
            }
            acc = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if acc.is_empty() {
                break;
            }
        }
        acc
    }

    /// Associativity (and therefore soundness of the table) over all
    /// composable basis triples, plus vanishing of every relation.
    pub fn verify_table(&self) -> Result<()> {
        let n = self.dim();
        for k in 0..n {
            for j in 0..n {
                let kj = self.basis_product(k, j);
                for i in 0..n {
                    let ji = self.basis_product(j, i);
                    // (k∘j)∘i
                    let mut left: BTreeMap<usize, QRat> = BTreeMap::new();
                    for (m, c) in &kj {
                        for (r, d) in self.basis_product(*m, i) {
                            let e = left.entry(r).or_insert_with(QRat::zero);
                            *e = e.clone() + c * &d;
                        }
                    }
                    left.retain(|_, c| !c.is_zero());
                    // k∘(j∘i)
                    let mut right: BTreeMap<usize, QRat> = BTreeMap::new();
                    for (m, c) in &ji {
                        for (r, d) in self.basis_product(k, *m) {
                            let e = right.entry(r).or_insert_with(QRat::zero);
                            *e = e.clone() + c * &d;
                        }
                    }
                    right.retain(|_, c| !c.is_zero());
                    if left != right {
                        return Err(Error::NonConfluentPresentation {
                            detail: "multiplication table is not associative".into(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The opposite presentation (arrows reversed, relation words reversed),
    /// built once and cached.
    pub fn opposite(self: &Arc<Self>) -> Arc<AlgebraPresentation> {
        self.op_cache
            .get_or_init(|| {
                let arrows = self
                    .quiver
                    .arrows
                    .iter()
                    .map(|a| Arrow {
                        name: a.name.clone(),
                        source: a.target,
                        target: a.source,
                    })
                    .collect();
                let quiver = Quiver::new(self.quiver.vertices.clone(), arrows)
                    .expect("opposite of a valid quiver is valid");
                let relations = self
                    .relations
                    .iter()
                    .map(|r| Relation {
                        terms: r
                            .terms
                            .iter()
                            .map(|(c, p)| {
                                let mut arrows = p.arrows.clone();
                                arrows.reverse();
                                let src = p.target(&self.quiver);
                                (c.clone(), PathWord { src, arrows })
                            })
                            .collect(),
                    })
                    .collect();
                let op = build_algebra(quiver, relations, DEFAULT_PATH_CAP)
                    .expect("opposite of a finite-dimensional presentation builds");
                // Point the new presentation back at us, so that taking the
                // opposite twice returns the original Arc.
                let _ = op.op_cache.set(self.clone());
                op
            })
            .clone()
    }

    /// Quotient by the idempotent at `kill`: the presentation on the full
    /// subquiver of surviving vertices, with relations projected (terms using
    /// a dead arrow dropped). Returns the quotient and the map from its
    /// vertex indices to the original ones.
    pub fn idempotent_quotient(
        self: &Arc<Self>,
        kill: &BTreeSet<usize>,
    ) -> Result<(Arc<AlgebraPresentation>, Vec<usize>)> {
        for &v in kill {
            if v >= self.vertex_count() {
                return Err(Error::rejected(format!(
                    "idempotent_quotient: vertex {v} out of range"
                )));
            }
        }
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !kill.contains(v)).collect();
        let old_to_new: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let vertices = keep.iter().map(|&v| self.quiver.vertices[v].clone()).collect();
        let mut arrow_map: BTreeMap<usize, usize> = BTreeMap::new();
        let mut arrows = Vec::new();
        for (aid, a) in self.quiver.arrows.iter().enumerate() {
            if kill.contains(&a.source) || kill.contains(&a.target) {
                continue;
            }
            arrow_map.insert(aid, arrows.len());
            arrows.push(Arrow {
                name: a.name.clone(),
                source: old_to_new[&a.source],
                target: old_to_new[&a.target],
            });
        }
        // The subquiver arrows stay name-sorted, so indices transfer directly.
        let quiver = Quiver::new(vertices, arrows)?;
        let relations = self
            .relations
            .iter()
            .filter_map(|r| {
                let terms: Vec<(QRat, PathWord)> = r
                    .terms
                    .iter()
                    .filter_map(|(c, p)| {
                        let arrows: Option<Vec<usize>> =
                            p.arrows.iter().map(|a| arrow_map.get(a).copied()).collect();
                        arrows.map(|arrows| {
                            (
                                c.clone(),
                                PathWord {
                                    src: old_to_new[&p.src],
                                    arrows,
                                },
                            )
                        })
                    })
                    .collect();
                if terms.is_empty() {
                    None
                } else {
                    Some(Relation { terms })
                }
            })
            .collect();
        let alg = build_algebra(quiver, relations, DEFAULT_PATH_CAP)?;
        Ok((alg, keep))
    }

    /// Evaluate a path combo as a set of (basis id, coefficient) pairs. Used
    /// when reading presentation maps back as algebra elements.
    pub fn combo_in_basis(&self, combo: &PathCombo) -> Option<Vec<(usize, QRat)>> {
        let mut out = Vec::new();
        for (p, c) in combo {
            out.push((*self.basis_index.get(p)?, c.clone()));
        }
        Some(out)
    }
}

/// Builders for the bundled/worked quivers; tests and the CLI share them.
pub mod prefab {
    use super::*;

    pub fn single_vertex() -> Arc<AlgebraPresentation> {
        let q = Quiver::new(vec!["1".into()], vec![]).unwrap();
        build_algebra_default(q, vec![]).unwrap()
    }

    /// Two vertices, two parallel arrows a, b : 1 → 2.
    pub fn kronecker() -> Arc<AlgebraPresentation> {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 0,
                    target: 1,
                },
            ],
        )
        .unwrap();
        build_algebra_default(q, vec![]).unwrap()
    }

    /// 1 ⇄ 2 with arrows a : 1 → 2 and b : 2 → 1 subject to b∘a = 0.
    pub fn gamma() -> Arc<AlgebraPresentation> {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 1,
                    target: 0,
                },
            ],
        )
        .unwrap();
        // b∘a ("a first") is the word [a, b].
        let rel = Relation {
            terms: vec![(
                QRat::from_integer(1.into()),
                PathWord {
                    src: 0,
                    arrows: vec![0, 1],
                },
            )],
        };
        build_algebra_default(q, vec![rel]).unwrap()
    }

    /// Linear A_n quiver 1 → 2 → ... → n, no relations.
    pub fn linear_a(n: usize) -> Arc<AlgebraPresentation> {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (0..n - 1)
            .map(|i| Arrow {
                name: format!("a{}", i + 1),
                source: i,
                target: i + 1,
            })
            .collect();
        let q = Quiver::new(vertices, arrows).unwrap();
        build_algebra_default(q, vec![]).unwrap()
    }

    /// Cyclic Nakayama algebra on n vertices with radical square zero:
    /// arrows i → i+1 (mod n), all length-two paths zero.
    pub fn nakayama_cycle_rad_square_zero(n: usize) -> Arc<AlgebraPresentation> {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows: Vec<Arrow> = (0..n)
            .map(|i| Arrow {
                name: format!("a{}", i + 1),
                source: i,
                target: (i + 1) % n,
            })
            .collect();
        let q = Quiver::new(vertices, arrows).unwrap();
        let mut relations = Vec::new();
        for i in 0..n {
            relations.push(Relation {
                terms: vec![(
                    QRat::from_integer(1.into()),
                    PathWord {
                        src: i,
                        arrows: vec![i, (i + 1) % n],
                    },
                )],
            });
        }
        build_algebra_default(q, relations).unwrap()
    }
}
