//! Finite-dimensional representations of a presented algebra, morphisms
//! between them, and the basic sub/quotient constructions everything else is
//! assembled from.

use std::collections::BTreeSet;
use std::sync::Arc;


use crate::algebra::{AlgebraPresentation, PathWord};
use crate::error::{Error, Result};
use crate::linalg::{coords_in_basis, QMatrix, QRat};

/// A representation: one Q-vector space per vertex and one matrix per arrow,
/// satisfying every relation of the algebra.
#[derive(Clone)]
pub struct Rep {
    pub algebra: Arc<AlgebraPresentation>,
    pub dims: Vec<usize>,
    /// `arrow_maps[a]` is (dim at target) × (dim at source).
    pub arrow_maps: Vec<QMatrix>,
}

impl std::fmt::Debug for Rep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rep{:?}", self.dims)
    }
}

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
            && self.dims == other.dims
            && self.arrow_maps == other.arrow_maps
    }
}

impl Rep {
    pub fn new(
        algebra: Arc<AlgebraPresentation>,
        dims: Vec<usize>,
        arrow_maps: Vec<QMatrix>,
    ) -> Result<Rep> {
        let q = algebra.quiver();
        if dims.len() != q.vertices.len() || arrow_maps.len() != q.arrows.len() {
            return Err(Error::DimensionMismatch {
                detail: "representation data does not match the quiver".into(),
            });
        }
        for (a, m) in q.arrows.iter().zip(&arrow_maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::DimensionMismatch {
                    detail: format!("arrow `{}` matrix has the wrong shape", a.name),
                });
            }
        }
        let rep = Rep {
            algebra,
            dims,
            arrow_maps,
        };
        for rel in rep.algebra.relations() {
            let (src, tgt) = {
                let (_, p) = &rel.terms[0];
                (p.src, rep.algebra.path_target(p))
            };
            let mut acc = QMatrix::zero(rep.dims[tgt], rep.dims[src]);
            for (c, p) in &rel.terms {
                acc = acc.add(&rep.act_path(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::InvariantViolation {
                    detail: "a relation does not evaluate to zero on the representation".into(),
                });
            }
        }
        Ok(rep)
    }

    pub fn zero(algebra: &Arc<AlgebraPresentation>) -> Rep {
        let n = algebra.vertex_count();
        let maps = algebra
            .quiver()
            .arrows
            .iter()
            .map(|_| QMatrix::zero(0, 0))
            .collect();
        Rep {
            algebra: algebra.clone(),
            dims: vec![0; n],
            arrow_maps: maps,
        }
    }

    pub fn simple(algebra: &Arc<AlgebraPresentation>, v: usize) -> Rep {
        let n = algebra.vertex_count();
        let mut dims = vec![0; n];
        dims[v] = 1;
        let maps = algebra
            .quiver()
            .arrows
            .iter()
            .map(|a| QMatrix::zero(dims[a.target], dims[a.source]))
            .collect();
        Rep {
            algebra: algebra.clone(),
            dims,
            arrow_maps: maps,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of a path acting on the representation (target-dim × source-dim).
    pub fn act_path(&self, p: &PathWord) -> QMatrix {
        let mut m = QMatrix::identity(self.dims[p.src]);
        for &a in &p.arrows {
            m = self.arrow_maps[a].mul(&m);
        }
        m
    }

    pub fn same_algebra(&self, other: &Rep) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }
}

/// A morphism of representations: one block per vertex, commuting with every
/// arrow action.
#[derive(Clone)]
pub struct RepMap {
    pub source: Rep,
    pub target: Rep,
    pub blocks: Vec<QMatrix>,
}

impl std::fmt::Debug for RepMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RepMap{:?} -> {:?}", self.source.dims, self.target.dims)
    }
}

impl RepMap {
    pub fn new(source: Rep, target: Rep, blocks: Vec<QMatrix>) -> Result<RepMap> {
        let m = RepMap {
            source,
            target,
            blocks,
        };
        m.verify()?;
        Ok(m)
    }

    pub fn verify(&self) -> Result<()> {
        if self.blocks.len() != self.source.dims.len() {
            return Err(Error::DimensionMismatch {
                detail: "morphism block count".into(),
            });
        }
        for (v, b) in self.blocks.iter().enumerate() {
            if b.rows() != self.target.dims[v] || b.cols() != self.source.dims[v] {
                return Err(Error::DimensionMismatch {
                    detail: format!("morphism block at vertex {v}"),
                });
            }
        }
        for (a, arr) in self.source.algebra.quiver().arrows.iter().enumerate() {
            let lhs = self.blocks[arr.target].mul(&self.source.arrow_maps[a]);
            let rhs = self.target.arrow_maps[a].mul(&self.blocks[arr.source]);
            if lhs != rhs {
                return Err(Error::InvariantViolation {
                    detail: format!(
                        "morphism does not commute with arrow `{}`",
                        arr.name
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn identity(rep: &Rep) -> RepMap {
        RepMap {
            source: rep.clone(),
            target: rep.clone(),
            blocks: rep.dims.iter().map(|&d| QMatrix::identity(d)).collect(),
        }
    }

    pub fn zero(source: &Rep, target: &Rep) -> RepMap {
        RepMap {
            source: source.clone(),
            target: target.clone(),
            blocks: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| QMatrix::zero(t, s))
                .collect(),
        }
    }

    /// self ∘ other (other first).
    pub fn compose(&self, other: &RepMap) -> RepMap {
        debug_assert_eq!(other.target.dims, self.source.dims);
        RepMap {
            source: other.source.clone(),
            target: self.target.clone(),
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &QRat) -> RepMap {
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.source.dims == self.target.dims && self.blocks.iter().all(QMatrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<RepMap> {
        if !self.is_invertible() {
            return None;
        }
        Some(RepMap {
            source: self.target.clone(),
            target: self.source.clone(),
            blocks: self
                .blocks
                .iter()
                .map(|b| b.inverse().expect("checked invertible"))
                .collect(),
        })
    }

    pub fn is_zero_map(&self) -> bool {
        self.blocks.iter().all(QMatrix::is_zero)
    }

    /// Per-vertex surjectivity.
    pub fn is_surjective(&self) -> bool {
        self.blocks
            .iter()
            .zip(&self.target.dims)
            .all(|(b, &d)| b.rank() == d)
    }

    pub fn is_injective(&self) -> bool {
        self.blocks
            .iter()
            .zip(&self.source.dims)
            .all(|(b, &d)| b.rank() == d)
    }
}

/// Per-vertex subspace of a representation, given by basis-column matrices.
#[derive(Clone, Debug)]
pub struct Subspaces {
    pub bases: Vec<QMatrix>,
}

impl Subspaces {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(QMatrix::cols).collect()
    }

    pub fn full(rep: &Rep) -> Subspaces {
        Subspaces {
            bases: rep.dims.iter().map(|&d| QMatrix::identity(d)).collect(),
        }
    }

    pub fn zero(rep: &Rep) -> Subspaces {
        Subspaces {
            bases: rep.dims.iter().map(|&d| QMatrix::zero(d, 0)).collect(),
        }
    }

    /// Sum of two subspaces of the same representation.
    pub fn sum(&self, other: &Subspaces) -> Subspaces {
        Subspaces {
            bases: self
                .bases
                .iter()
                .zip(&other.bases)
                .map(|(a, b)| a.hstack(b).column_space_basis())
                .collect(),
        }
    }

    pub fn contains(&self, other: &Subspaces) -> bool {
        self.bases.iter().zip(&other.bases).all(|(a, b)| {
            if b.cols() == 0 {
                return true;
            }
            a.hstack(b).rank() == a.rank()
        })
    }
}

/// Extend a set of independent columns to a full basis by standard vectors,
/// scanning e_0, e_1, ... in order. Returns the complement columns.
pub fn complement_columns(partial: &QMatrix) -> QMatrix {
    let dim = partial.rows();
    let mut acc = partial.clone();
    let mut chosen = Vec::new();
    let mut rank = acc.rank();
    for i in 0..dim {
        if rank == dim {
            break;
        }
        let mut e = QMatrix::zero(dim, 1);
        e.set(i, 0, QRat::from_integer(1.into()));
        let cand = acc.hstack(&e);
        let r = cand.rank();
        if r > rank {
            acc = cand;
            rank = r;
            chosen.push(i);
        }
    }
    let mut c = QMatrix::zero(dim, chosen.len());
    for (k, &i) in chosen.iter().enumerate() {
        c.set(i, k, QRat::from_integer(1.into()));
    }
    c
}

/// The subrepresentation spanned by arrow-closed subspaces, together with its
/// inclusion. Errors if the subspaces are not arrow-closed.
pub fn sub_rep(rep: &Rep, spaces: &Subspaces) -> Result<(Rep, RepMap)> {
    let q = rep.algebra.quiver();
    let dims: Vec<usize> = spaces.dims();
    let mut arrow_maps = Vec::new();
    for (a, arr) in q.arrows.iter().enumerate() {
        let img = rep.arrow_maps[a].mul(&spaces.bases[arr.source]);
        let coords = coords_in_basis(&spaces.bases[arr.target], &img).ok_or_else(|| {
            Error::InvariantViolation {
                detail: "subspaces are not closed under the arrow action".into(),
            }
        })?;
        arrow_maps.push(coords);
    }
    let sub = Rep::new(rep.algebra.clone(), dims, arrow_maps)?;
    let incl = RepMap::new(sub.clone(), rep.clone(), spaces.bases.clone())?;
    Ok((sub, incl))
}

/// Quotient by an arrow-closed subspace, with the projection map.
pub fn quotient_rep(rep: &Rep, spaces: &Subspaces) -> Result<(Rep, RepMap)> {
    let q = rep.algebra.quiver();
    let mut proj = Vec::new(); // qdim × dim
    let mut sect = Vec::new(); // dim × qdim
    for (v, s) in spaces.bases.iter().enumerate() {
        let c = complement_columns(s);
        let t = s.hstack(&c);
        let tinv = if t.rows() == 0 {
            QMatrix::zero(0, 0)
        } else {
            t.inverse().ok_or_else(|| Error::InvariantViolation {
                detail: "subspace basis columns are dependent".into(),
            })?
        };
        let k = s.cols();
        let qdim = rep.dims[v] - k;
        let mut p = QMatrix::zero(qdim, rep.dims[v]);
        for r in 0..qdim {
            for cix in 0..rep.dims[v] {
                p.set(r, cix, tinv.at(k + r, cix).clone());
            }
        }
        proj.push(p);
        sect.push(c);
    }
    let mut arrow_maps = Vec::new();
    for (a, arr) in q.arrows.iter().enumerate() {
        arrow_maps.push(
            proj[arr.target]
                .mul(&rep.arrow_maps[a])
                .mul(&sect[arr.source]),
        );
    }
    let dims = proj.iter().map(QMatrix::rows).collect();
    let quot = Rep::new(rep.algebra.clone(), dims, arrow_maps)?;
    let pmap = RepMap::new(rep.clone(), quot.clone(), proj)?;
    Ok((quot, pmap))
}

/// Kernel of a morphism as a subrepresentation with inclusion.
pub fn kernel_rep(f: &RepMap) -> Result<(Rep, RepMap)> {
    let bases = f.blocks.iter().map(QMatrix::kernel_basis).collect();
    sub_rep(&f.source, &Subspaces { bases })
}

/// Image of a morphism as a subrepresentation of the target.
pub fn image_subspaces(f: &RepMap) -> Subspaces {
    Subspaces {
        bases: f.blocks.iter().map(QMatrix::column_space_basis).collect(),
    }
}

/// Direct sum with per-summand, per-vertex offsets.
pub fn direct_sum(reps: &[Rep]) -> (Rep, Vec<Vec<usize>>) {
    assert!(!reps.is_empty(), "direct_sum of an empty family");
    let alg = reps[0].algebra.clone();
    let n = alg.vertex_count();
    let mut offsets = Vec::with_capacity(reps.len());
    let mut dims = vec![0usize; n];
    for r in reps {
        offsets.push(dims.clone());
        for v in 0..n {
            dims[v] += r.dims[v];
        }
    }
    let mut arrow_maps = Vec::new();
    for (a, arr) in alg.quiver().arrows.iter().enumerate() {
        let mut m = QMatrix::zero(dims[arr.target], dims[arr.source]);
        for (s, r) in reps.iter().enumerate() {
            let blk = &r.arrow_maps[a];
            for i in 0..blk.rows() {
                for j in 0..blk.cols() {
                    m.set(
                        offsets[s][arr.target] + i,
                        offsets[s][arr.source] + j,
                        blk.at(i, j).clone(),
                    );
                }
            }
        }
        arrow_maps.push(m);
    }
    let rep = Rep::new(alg, dims, arrow_maps).expect("direct sum of valid reps is valid");
    (rep, offsets)
}

/// Inclusion of one summand into a direct sum built by `direct_sum`.
pub fn summand_inclusion(sum: &Rep, offsets: &[Vec<usize>], parts: &[Rep], s: usize) -> RepMap {
    let part = &parts[s];
    let blocks = (0..sum.dims.len())
        .map(|v| {
            let mut m = QMatrix::zero(sum.dims[v], part.dims[v]);
            for i in 0..part.dims[v] {
                m.set(offsets[s][v] + i, i, QRat::from_integer(1.into()));
            }
            m
        })
        .collect();
    RepMap {
        source: part.clone(),
        target: sum.clone(),
        blocks,
    }
}

/// Dual representation over the given opposite presentation: same dimensions,
/// transposed arrow matrices.
pub fn dual(rep: &Rep, opposite: &Arc<AlgebraPresentation>) -> Rep {
    debug_assert_eq!(opposite.vertex_count(), rep.dims.len());
    let arrow_maps = rep.arrow_maps.iter().map(QMatrix::transpose).collect();
    Rep::new(opposite.clone(), rep.dims.clone(), arrow_maps)
        .expect("dual of a valid representation is valid over the opposite")
}

/// Left projective module Λe_v as a representation: the space at w is spanned
/// by the basis paths v → w, and arrows act by post-composition.
pub fn projective(alg: &Arc<AlgebraPresentation>, v: usize) -> Rep {
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|w| alg.basis_paths_between(v, w).len()).collect();
    let mut arrow_maps = Vec::new();
    for (a, arr) in alg.quiver().arrows.iter().enumerate() {
        let src_paths = alg.basis_paths_between(v, arr.source).to_vec();
        let tgt_paths = alg.basis_paths_between(v, arr.target).to_vec();
        let mut m = QMatrix::zero(tgt_paths.len(), src_paths.len());
        for (j, &pid) in src_paths.iter().enumerate() {
            for (bid, coeff) in alg.left_mul(a, pid) {
                let i = tgt_paths
                    .iter()
                    .position(|t| t == bid)
                    .expect("left multiple lands among paths to the arrow target");
                m.set(i, j, coeff.clone());
            }
        }
        arrow_maps.push(m);
    }
    Rep::new(alg.clone(), dims, arrow_maps).expect("projective representation is valid")
}

/// Injective module D(e_vΛ): the dual of the opposite projective at v.
pub fn injective(alg: &Arc<AlgebraPresentation>, v: usize) -> Rep {
    let op = alg.opposite();
    let p = projective(&op, v);
    dual(&p, &op.opposite())
}

/// Index of the generator coordinate e_v inside the vertex-v space of
/// `projective(alg, v)`.
pub fn projective_generator_index(alg: &AlgebraPresentation, v: usize) -> usize {
    let paths = alg.basis_paths_between(v, v);
    paths
        .iter()
        .position(|&pid| alg.basis()[pid].is_empty())
        .expect("trivial path present")
}

/// Morphism of projectives P_a → P_b determined by an algebra element with
/// source b and target a (the image of the generator e_a).
pub fn projective_map_from_element(
    alg: &Arc<AlgebraPresentation>,
    a: usize,
    b: usize,
    elem: &[(usize, QRat)],
) -> RepMap {
    let pa = projective(alg, a);
    let pb = projective(alg, b);
    let n = alg.vertex_count();
    let mut blocks = Vec::new();
    for w in 0..n {
        let rows = alg.basis_paths_between(b, w).to_vec();
        let cols = alg.basis_paths_between(a, w).to_vec();
        let mut m = QMatrix::zero(rows.len(), cols.len());
        for (j, &pid) in cols.iter().enumerate() {
            for (zid, zc) in elem {
                for (rid, rc) in alg.basis_product(pid, *zid) {
                    let i = rows
                        .iter()
                        .position(|&t| t == rid)
                        .expect("product lands among paths from b");
                    let cur = m.at(i, j).clone();
                    m.set(i, j, cur + zc * &rc);
                }
            }
        }
        blocks.push(m);
    }
    RepMap::new(pa, pb, blocks).expect("projective map from an element commutes")
}

/// Radical subspaces: at each vertex, the span of all incoming arrow images.
pub fn radical_subspaces(rep: &Rep) -> Subspaces {
    let n = rep.dims.len();
    let mut bases = Vec::with_capacity(n);
    for v in 0..n {
        let mut stacked: Option<QMatrix> = None;
        for (a, arr) in rep.algebra.quiver().arrows.iter().enumerate() {
            if arr.target != v {
                continue;
            }
            let m = &rep.arrow_maps[a];
            stacked = Some(match stacked {
                None => m.clone(),
                Some(s) => s.hstack(m),
            });
        }
        bases.push(match stacked {
            None => QMatrix::zero(rep.dims[v], 0),
            Some(s) => s.column_space_basis(),
        });
    }
    Subspaces { bases }
}

/// Socle subspaces: at each vertex, the intersection of outgoing-arrow kernels.
pub fn socle_subspaces(rep: &Rep) -> Subspaces {
    let n = rep.dims.len();
    let mut bases = Vec::with_capacity(n);
    for v in 0..n {
        let mut stacked: Option<QMatrix> = None;
        for (a, arr) in rep.algebra.quiver().arrows.iter().enumerate() {
            if arr.source != v {
                continue;
            }
            let m = &rep.arrow_maps[a];
            stacked = Some(match stacked {
                None => m.clone(),
                Some(s) => s.vstack(m),
            });
        }
        bases.push(match stacked {
            None => QMatrix::identity(rep.dims[v]),
            Some(s) => s.kernel_basis(),
        });
    }
    Subspaces { bases }
}

/// Convenience: all projectives, in vertex order.
pub fn all_projectives(alg: &Arc<AlgebraPresentation>) -> Vec<Rep> {
    (0..alg.vertex_count()).map(|v| projective(alg, v)).collect()
}

pub fn all_injectives(alg: &Arc<AlgebraPresentation>) -> Vec<Rep> {
    (0..alg.vertex_count()).map(|v| injective(alg, v)).collect()
}

/// Restrict a representation vanishing on `kill` to the idempotent quotient
/// algebra (vertex indices compressed via `keep`).
pub fn restrict_to_quotient(
    rep: &Rep,
    quotient: &Arc<AlgebraPresentation>,
    keep: &[usize],
) -> Result<Rep> {
    let killed: BTreeSet<usize> =
        (0..rep.dims.len()).filter(|v| !keep.contains(v)).collect();
    if killed.iter().any(|&v| rep.dims[v] != 0) {
        return Err(Error::rejected(
            "representation does not vanish on the killed vertices",
        ));
    }
    let dims: Vec<usize> = keep.iter().map(|&v| rep.dims[v]).collect();
    let mut arrow_maps = Vec::new();
    for arr in &quotient.quiver().arrows {
        let orig = rep
            .algebra
            .quiver()
            .arrow_index(&arr.name)
            .expect("quotient arrows exist upstream");
        arrow_maps.push(rep.arrow_maps[orig].clone());
    }
    Rep::new(quotient.clone(), dims, arrow_maps)
}
