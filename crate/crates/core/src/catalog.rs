//! Enumeration of indecomposable modules by AR-quiver knitting, isomorphism
//! testing, decomposition into indecomposables, and canonical names.
//!
//! Knitting starts from the projectives and injectives, closes under τ⁻ and τ
//! and under middle terms of almost-split sequences, and stops either when
//! closed or at a depth cap (windowed catalogs). Middle terms are constructed
//! honestly: a socle class of Ext¹(N, τN) under the End(N)-action, realized
//! as a pushout, then split into indecomposable summands.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::homalg::{hom, min_projective_presentation, tau, tau_minus, HomSpace};
use crate::linalg::{coords_in_basis, QMatrix, QRat};
use crate::rep::{
    all_injectives, all_projectives, direct_sum, image_subspaces, kernel_rep,
    projective_generator_index, quotient_rep, radical_subspaces, socle_subspaces, sub_rep, Rep,
    RepMap, Subspaces,
};

/// Radical of the endomorphism algebra spanned by `end.basis`, as coefficient
/// vectors in that basis. Uses the characteristic-zero trace-form criterion.
pub fn end_radical(end: &HomSpace) -> Vec<Vec<QRat>> {
    let e = end.dim();
    if e == 0 {
        return Vec::new();
    }
    // Structure constants c[i][j][k]: f_i ∘ f_j = Σ_k c f_k.
    let mut c = vec![vec![vec![QRat::zero(); e]; e]; e];
    for i in 0..e {
        for j in 0..e {
            let comp = end.basis[i].compose(&end.basis[j]);
            let coords = end.coords_of(&comp).expect("End is closed under composition");
            for (k, v) in coords.into_iter().enumerate() {
                c[i][j][k] = v;
            }
        }
    }
    // tr(L_k) where L_k is left multiplication by f_k.
    let mut trace_l = vec![QRat::zero(); e];
    for k in 0..e {
        let mut t = QRat::zero();
        for j in 0..e {
            t = t + c[k][j][j].clone();
        }
        trace_l[k] = t;
    }
    // Trace form T[i][j] = tr(L_{f_i f_j}).
    let mut t = QMatrix::zero(e, e);
    for i in 0..e {
        for j in 0..e {
            let mut s = QRat::zero();
            for k in 0..e {
                s = s + c[i][j][k].clone() * &trace_l[k];
            }
            t.set(i, j, s);
        }
    }
    let k = t.kernel_basis();
    (0..k.cols()).map(|c| k.column(c)).collect()
}

fn end_is_local(end: &HomSpace) -> bool {
    end.dim() > 0 && end.dim() - end_radical(end).len() == 1
}

/// Deterministic small coefficient vectors for bounded searches: all vectors
/// in {-bound..bound}^d, skipping zero, in a fixed order.
fn coefficient_box(d: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    let width = (2 * bound + 1) as usize;
    let total = width.pow(d as u32);
    (1..total).map(move |mut idx| {
        let mut v = Vec::with_capacity(d);
        for _ in 0..d {
            let digit = (idx % width) as i64 - bound;
            v.push(digit);
            idx /= width;
        }
        v
    })
}

fn combo_map(space: &HomSpace, coeffs: &[i64]) -> RepMap {
    let mut f = RepMap::zero(&space.source, &space.target);
    for (c, b) in coeffs.iter().zip(&space.basis) {
        if *c != 0 {
            f = f.add(&b.scale(&QRat::from_integer((*c).into())));
        }
    }
    f
}

/// Isomorphism test. For indecomposables the single-composite criterion is
/// conclusive (some g∘f is invertible iff the modules are isomorphic, since
/// the radical is an ideal); the bounded combination search with an
/// escalating bound handles decomposable inputs, and exhaustion with a
/// matching hom profile is reported rather than guessed.
pub fn iso(x: &Rep, y: &Rep) -> Result<bool> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch);
    }
    if x.dims != y.dims {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    let fwd = hom(x, y)?;
    if fwd.dim() == 0 {
        return Ok(false);
    }
    let bwd = hom(y, x)?;
    if bwd.dim() == 0 {
        return Ok(false);
    }
    for f in &fwd.basis {
        for g in &bwd.basis {
            if g.compose(f).is_invertible() {
                return Ok(true);
            }
        }
    }
    // No invertible single composite: conclusive for indecomposables.
    let ex = hom(x, x)?;
    let ey = hom(y, y)?;
    if end_is_local(&ex) && end_is_local(&ey) {
        return Ok(false);
    }
    for bound in [2i64, 8] {
        for coeffs in coefficient_box(fwd.dim(), bound) {
            if combo_map(&fwd, &coeffs).is_invertible() {
                return Ok(true);
            }
        }
    }
    if fwd.dim() == bwd.dim() && fwd.dim() == ex.dim() {
        return Err(Error::IsoInconclusive {
            left: format!("{:?}", x.dims),
            right: format!("{:?}", y.dims),
        });
    }
    Ok(false)
}

/// One Fitting split: an endomorphism that is neither nilpotent nor
/// invertible yields ker(f^∞) ⊕ im(f^∞).
fn fitting_split(x: &Rep) -> Result<Option<(Rep, Rep)>> {
    let total = x.total_dim();
    if total == 0 {
        return Ok(None);
    }
    let end = hom(x, x)?;
    let d = end.dim();
    if d <= 1 {
        return Ok(None);
    }
    let try_split = |f: &RepMap| -> Result<Option<(Rep, Rep)>> {
        let power: Vec<QMatrix> = f.blocks.iter().map(|b| b.pow(total)).collect();
        let ker_dims: usize = power.iter().map(|b| b.kernel_basis().cols()).sum();
        if ker_dims == 0 || ker_dims == total {
            return Ok(None);
        }
        let fp = RepMap {
            source: x.clone(),
            target: x.clone(),
            blocks: power,
        };
        let (a, _) = kernel_rep(&fp)?;
        let (b, _) = sub_rep(x, &image_subspaces(&fp))?;
        Ok(Some((a, b)))
    };
    for f in &end.basis {
        if let Some(split) = try_split(f)? {
            return Ok(Some(split));
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            for (ci, cj) in [(1i64, 1i64), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1)] {
                let f = end.basis[i]
                    .scale(&QRat::from_integer(ci.into()))
                    .add(&end.basis[j].scale(&QRat::from_integer(cj.into())));
                if let Some(split) = try_split(&f)? {
                    return Ok(Some(split));
                }
            }
        }
    }
    if d >= 3 {
        for coeffs in coefficient_box(d.min(4), 1) {
            let mut f = RepMap::zero(x, x);
            for (k, c) in coeffs.iter().enumerate() {
                if *c != 0 {
                    f = f.add(&end.basis[k].scale(&QRat::from_integer((*c).into())));
                }
            }
            if let Some(split) = try_split(&f)? {
                return Ok(Some(split));
            }
        }
    }
    Ok(None)
}

/// Split into indecomposable summands. Indecomposability is certified by
/// locality of the endomorphism algebra; an unsplittable non-local module is
/// reported as a diagnostic instead of being returned wrong.
pub fn indec_summands(x: &Rep) -> Result<Vec<Rep>> {
    if x.is_zero() {
        return Ok(Vec::new());
    }
    if let Some((a, b)) = fitting_split(x)? {
        let mut out = indec_summands(&a)?;
        out.extend(indec_summands(&b)?);
        return Ok(out);
    }
    let end = hom(x, x)?;
    if end_is_local(&end) {
        Ok(vec![x.clone()])
    } else {
        Err(Error::SplitSearchExhausted {
            dims: x.dims.clone(),
        })
    }
}

/// The almost-split sequence 0 → τN → E → N → 0 for a non-projective
/// indecomposable N: returns (τN, E).
pub fn almost_split_ending_at(n: &Rep) -> Result<(Rep, Rep)> {
    let tn = tau(n);
    if tn.is_zero() {
        return Err(Error::rejected(
            "almost-split sequence requested for a projective module",
        ));
    }
    let pres = min_projective_presentation(n);
    let hom_k = hom(&pres.kernel, &tn)?;
    let hom_p0 = hom(&pres.cover.p0, &tn)?;
    // Image of the restriction map inside Hom(K, τN) coordinates.
    let mut image_cols = Vec::new();
    for b in &hom_p0.basis {
        let r = b.compose(&pres.kernel_incl);
        image_cols.push(hom_k.coords_of(&r).expect("restriction in Hom(K, τN)"));
    }
    let image = if image_cols.is_empty() {
        QMatrix::zero(hom_k.dim(), 0)
    } else {
        QMatrix::from_columns(hom_k.dim(), image_cols)
    };

    // Socle of Ext¹(N, τN) under the right End(N)-action.
    let end_n = hom(n, n)?;
    let rad = end_radical(&end_n);
    let perp = image.transpose().kernel_basis().transpose();
    let mut conditions: Vec<QMatrix> = Vec::new();
    for rvec in &rad {
        let mut e = RepMap::zero(n, n);
        for (c, b) in rvec.iter().zip(&end_n.basis) {
            if !c.is_zero() {
                e = e.add(&b.scale(c));
            }
        }
        let khat = lift_to_syzygy(&pres, &e)?;
        let mut cols = Vec::new();
        for b in &hom_k.basis {
            let comp = b.compose(&khat);
            cols.push(hom_k.coords_of(&comp).expect("action stays in Hom(K, τN)"));
        }
        let act = QMatrix::from_columns(hom_k.dim(), cols);
        if perp.rows() > 0 {
            conditions.push(perp.mul(&act));
        }
    }
    let socle_space = if conditions.is_empty() {
        QMatrix::identity(hom_k.dim())
    } else {
        let mut stacked = conditions[0].clone();
        for c in &conditions[1..] {
            stacked = stacked.vstack(c);
        }
        stacked.kernel_basis()
    };
    // First socle class outside the image of the restriction map.
    let image_basis = image.column_space_basis();
    let mut chosen: Option<Vec<QRat>> = None;
    for c in 0..socle_space.cols() {
        let col = socle_space.column(c);
        let v = QMatrix::from_columns(hom_k.dim(), vec![col.clone()]);
        if coords_in_basis(&image_basis, &v).is_none() {
            chosen = Some(col);
            break;
        }
    }
    let Some(cocycle_coords) = chosen else {
        return Err(Error::internal(
            "almost_split",
            "no nonzero socle class in Ext¹(N, τN)",
        ));
    };
    let g = hom_k.from_coords(&cocycle_coords);

    // Pushout of (ι : K → P0, g : K → τN): quotient of τN ⊕ P0 by the
    // antidiagonal image of K.
    let (sum, offs) = direct_sum(&[tn.clone(), pres.cover.p0.clone()]);
    let nverts = sum.dims.len();
    let mut bases = Vec::with_capacity(nverts);
    for v in 0..nverts {
        let kdim = pres.kernel.dims[v];
        let mut m = QMatrix::zero(sum.dims[v], kdim);
        for c in 0..kdim {
            for r in 0..tn.dims[v] {
                m.set(offs[0][v] + r, c, g.blocks[v].at(r, c).clone());
            }
            for r in 0..pres.cover.p0.dims[v] {
                m.set(
                    offs[1][v] + r,
                    c,
                    -pres.kernel_incl.blocks[v].at(r, c).clone(),
                );
            }
        }
        bases.push(m.column_space_basis());
    }
    let (middle, _) = quotient_rep(&sum, &Subspaces { bases })?;
    if middle.total_dim() != tn.total_dim() + n.total_dim() {
        return Err(Error::internal(
            "almost_split",
            "pushout middle term has the wrong dimension",
        ));
    }
    Ok((tn, middle))
}

/// Lift an endomorphism of N to the cover P0 and restrict it to the syzygy.
fn lift_to_syzygy(pres: &crate::homalg::Presentation, e: &RepMap) -> Result<RepMap> {
    let p0 = &pres.cover.p0;
    let alg = &p0.algebra;
    let x = &pres.cover.map.target;
    let mut gen_images: Vec<(usize, Vec<QRat>)> = Vec::new();
    for (k, &ak) in pres.cover.vertices.iter().enumerate() {
        let gen_local = projective_generator_index(alg, ak);
        let col = pres.cover.offsets[k][ak] + gen_local;
        let covered = pres.cover.map.blocks[ak].column(col);
        let rhs = e.blocks[ak].mul(&QMatrix::from_columns(x.dims[ak], vec![covered]));
        let w = pres.cover.map.blocks[ak]
            .solve(&rhs)?
            .ok_or_else(|| Error::internal("lift_to_syzygy", "cover not surjective"))?;
        gen_images.push((ak, w.column(0)));
    }
    let nverts = p0.dims.len();
    let mut blocks: Vec<QMatrix> = (0..nverts)
        .map(|v| QMatrix::zero(p0.dims[v], p0.dims[v]))
        .collect();
    for (k, (ak, w)) in gen_images.iter().enumerate() {
        let wvec = QMatrix::from_columns(p0.dims[*ak], vec![w.clone()]);
        for v in 0..nverts {
            for (local, &pid) in alg.basis_paths_between(*ak, v).iter().enumerate() {
                let img = p0.act_path(&alg.basis()[pid]).mul(&wvec);
                for r in 0..p0.dims[v] {
                    let cur = blocks[v].at(r, pres.cover.offsets[k][v] + local).clone();
                    blocks[v].set(
                        r,
                        pres.cover.offsets[k][v] + local,
                        cur + img.at(r, 0).clone(),
                    );
                }
            }
        }
    }
    let ehat = RepMap::new(p0.clone(), p0.clone(), blocks)?;
    let mut kblocks = Vec::with_capacity(nverts);
    for v in 0..nverts {
        let rhs = ehat.blocks[v].mul(&pres.kernel_incl.blocks[v]);
        let kb = coords_in_basis(&pres.kernel_incl.blocks[v], &rhs).ok_or_else(|| {
            Error::internal("lift_to_syzygy", "lift does not preserve the syzygy")
        })?;
        kblocks.push(kb);
    }
    RepMap::new(pres.kernel.clone(), pres.kernel.clone(), kblocks)
}

/// Completeness of a knitted catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Completeness {
    Closed,
    Windowed(usize),
}

#[derive(Clone)]
pub struct CatEntry {
    pub rep: Rep,
    pub name: String,
    pub level: usize,
    pub projective_vertex: Option<usize>,
    pub injective_vertex: Option<usize>,
    /// τ of this entry as an explicit representation (zero for projectives);
    /// kept even when it falls outside a window.
    pub tau_rep: Rep,
    pub tau: Option<usize>,
    pub tau_minus: Option<usize>,
    pub tau_rigid: bool,
}

pub struct IndecCatalog {
    pub algebra: Arc<AlgebraPresentation>,
    pub entries: Vec<CatEntry>,
    pub completeness: Completeness,
    // Pairwise tables, indexed [i][j].
    pub hom_dims: Vec<Vec<usize>>,
    pub hom_tau_dims: Vec<Vec<usize>>,
    pub ext1_dims: Vec<Vec<usize>>,
    pub gen_table: Vec<Vec<bool>>,
}

impl std::fmt::Debug for IndecCatalog {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "IndecCatalog({} entries, {:?})",
            self.entries.len(),
            self.completeness
        )
    }
}

impl IndecCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_windowed(&self) -> bool {
        matches!(self.completeness, Completeness::Windowed(_))
    }

    pub fn rep(&self, id: usize) -> &Rep {
        &self.entries[id].rep
    }

    pub fn name(&self, id: usize) -> &str {
        &self.entries[id].name
    }

    pub fn by_name(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.name == name)
    }

    pub fn find_iso(&self, rep: &Rep) -> Result<Option<usize>> {
        for (i, e) in self.entries.iter().enumerate() {
            if e.rep.dims == rep.dims && iso(&e.rep, rep)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Ids of projective entries, in vertex order.
    pub fn projectives(&self) -> Vec<usize> {
        let mut v: Vec<(usize, usize)> = self
            .entries
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.projective_vertex.map(|p| (p, i)))
            .collect();
        v.sort();
        v.into_iter().map(|(_, i)| i).collect()
    }

    pub fn rank(&self) -> usize {
        self.algebra.vertex_count()
    }
}

struct Knitter {
    entries: Vec<CatEntry>,
    windowed: bool,
    cap: usize,
}

impl Knitter {
    fn find(&self, rep: &Rep) -> Result<Option<usize>> {
        for (i, e) in self.entries.iter().enumerate() {
            if e.rep.dims == rep.dims && iso(&e.rep, rep)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn insert(&mut self, rep: Rep, level: usize) -> Result<usize> {
        let tau_rep = tau(&rep);
        let tau_rigid = crate::homalg::hom_dim(&rep, &tau_rep)? == 0;
        self.entries.push(CatEntry {
            tau_rep,
            rep,
            name: String::new(),
            level,
            projective_vertex: None,
            injective_vertex: None,
            tau: None,
            tau_minus: None,
            tau_rigid,
        });
        Ok(self.entries.len() - 1)
    }

    /// Insert if new (up to iso); respects the level cap and records a window
    /// boundary when the cap refuses an insertion.
    fn insert_if_new(&mut self, rep: &Rep, level: usize) -> Result<Option<usize>> {
        if let Some(i) = self.find(rep)? {
            if level < self.entries[i].level {
                self.entries[i].level = level;
            }
            return Ok(Some(i));
        }
        if level > self.cap {
            self.windowed = true;
            return Ok(None);
        }
        Ok(Some(self.insert(rep.clone(), level)?))
    }
}

/// Levels of the projectives along the "summand of rad P" dependency order
/// (acyclic case); vertices in dependency cycles keep level 0.
fn projective_levels(projs: &[Rep]) -> Result<Vec<usize>> {
    let n = projs.len();
    let mut deps: Vec<Vec<usize>> = Vec::with_capacity(n);
    for p in projs {
        let rad = radical_subspaces(p);
        let (radrep, _) = sub_rep(p, &rad)?;
        let mut dep = Vec::new();
        if !radrep.is_zero() {
            for s in indec_summands(&radrep)? {
                for (j, q) in projs.iter().enumerate() {
                    if s.dims == q.dims && iso(&s, q)? {
                        dep.push(j);
                        break;
                    }
                }
            }
        }
        deps.push(dep);
    }
    let mut level = vec![0usize; n];
    for _ in 0..n {
        for i in 0..n {
            let m = deps[i].iter().map(|&j| level[j] + 1).max().unwrap_or(0);
            if m > level[i] && m <= n {
                level[i] = m;
            }
        }
    }
    Ok(level)
}

fn injective_colevels(injs: &[Rep]) -> Result<Vec<usize>> {
    let n = injs.len();
    let mut deps: Vec<Vec<usize>> = Vec::with_capacity(n);
    for i in injs {
        let soc = socle_subspaces(i);
        let (quot, _) = quotient_rep(i, &soc)?;
        let mut dep = Vec::new();
        if !quot.is_zero() {
            for s in indec_summands(&quot)? {
                for (j, q) in injs.iter().enumerate() {
                    if s.dims == q.dims && iso(&s, q)? {
                        dep.push(j);
                        break;
                    }
                }
            }
        }
        deps.push(dep);
    }
    let mut level = vec![0usize; n];
    for _ in 0..n {
        for i in 0..n {
            let m = deps[i].iter().map(|&j| level[j] + 1).max().unwrap_or(0);
            if m > level[i] && m <= n {
                level[i] = m;
            }
        }
    }
    Ok(level)
}

/// Knit the AR quiver: every projective and injective appears; closure under
/// τ, τ⁻ and almost-split middle terms, capped at `depth_cap`.
pub fn knit(alg: &Arc<AlgebraPresentation>, depth_cap: usize) -> Result<IndecCatalog> {
    let projs = all_projectives(alg);
    let injs = all_injectives(alg);
    let plevels = projective_levels(&projs)?;
    let ilevels = injective_colevels(&injs)?;

    let mut knitter = Knitter {
        entries: Vec::new(),
        windowed: false,
        cap: depth_cap,
    };
    for (v, p) in projs.iter().enumerate() {
        let id = match knitter.find(p)? {
            Some(i) => i,
            None => knitter.insert(p.clone(), plevels[v])?,
        };
        knitter.entries[id].projective_vertex = Some(v);
    }
    for (v, i) in injs.iter().enumerate() {
        let id = match knitter.find(i)? {
            Some(x) => x,
            None => knitter.insert(i.clone(), ilevels[v])?,
        };
        knitter.entries[id].injective_vertex = Some(v);
    }
    // Radical summands of projectives and socle quotients of injectives seed
    // the components that never meet a projective (stable τ-orbits, as for
    // self-injective algebras).
    for (v, p) in projs.iter().enumerate() {
        let (radrep, _) = sub_rep(p, &radical_subspaces(p))?;
        for s in indec_summands(&radrep)? {
            knitter.insert_if_new(&s, plevels[v].saturating_sub(1))?;
        }
    }
    for (v, i) in injs.iter().enumerate() {
        let (quot, _) = quotient_rep(i, &socle_subspaces(i))?;
        for s in indec_summands(&quot)? {
            knitter.insert_if_new(&s, ilevels[v].saturating_sub(1))?;
        }
    }

    let mut processed: Vec<bool> = Vec::new();
    loop {
        processed.resize(knitter.entries.len(), false);
        let next = (0..knitter.entries.len())
            .filter(|&i| !processed[i])
            .min_by_key(|&i| (knitter.entries[i].level, i));
        let Some(cur) = next else { break };
        processed[cur] = true;
        let level = knitter.entries[cur].level;
        let rep = knitter.entries[cur].rep.clone();

        // Forward: τ⁻ and the mesh ending there.
        let fwd = tau_minus(&rep);
        if !fwd.is_zero() {
            if let Some(nid) = knitter.insert_if_new(&fwd, level + 2)? {
                knitter.entries[cur].tau_minus = Some(nid);
                knitter.entries[nid].tau = Some(cur);
                let target = knitter.entries[nid].rep.clone();
                let (_, middle) = almost_split_ending_at(&target)?;
                for s in indec_summands(&middle)? {
                    knitter.insert_if_new(&s, level + 1)?;
                }
            }
        }
        // Backward: τ and the mesh ending at this entry.
        let bwd = tau(&rep);
        if !bwd.is_zero() {
            if let Some(mid) = knitter.insert_if_new(&bwd, level + 2)? {
                knitter.entries[cur].tau = Some(mid);
                knitter.entries[mid].tau_minus = Some(cur);
                let (_, middle) = almost_split_ending_at(&rep)?;
                for s in indec_summands(&middle)? {
                    knitter.insert_if_new(&s, level + 1)?;
                }
            }
        }
    }

    let completeness = if knitter.windowed {
        Completeness::Windowed(depth_cap)
    } else {
        Completeness::Closed
    };
    let mut entries = knitter.entries;
    assign_names(alg, &mut entries);

    let n = entries.len();
    let mut hom_dims = vec![vec![0usize; n]; n];
    let mut hom_tau_dims = vec![vec![0usize; n]; n];
    let mut ext1_dims = vec![vec![0usize; n]; n];
    let mut gen_table = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            hom_dims[i][j] = crate::homalg::hom_dim(&entries[i].rep, &entries[j].rep)?;
            hom_tau_dims[i][j] = crate::homalg::hom_dim(&entries[i].rep, &entries[j].tau_rep)?;
            ext1_dims[i][j] = crate::homalg::ext1_dim(&entries[i].rep, &entries[j].rep)?;
            gen_table[i][j] = crate::homalg::gen_member(&entries[i].rep, &entries[j].rep)?;
        }
    }

    Ok(IndecCatalog {
        algebra: alg.clone(),
        entries,
        completeness,
        hom_dims,
        hom_tau_dims,
        ext1_dims,
        gen_table,
    })
}

pub fn knit_default(alg: &Arc<AlgebraPresentation>) -> Result<IndecCatalog> {
    knit(alg, 4)
}

fn assign_names(alg: &Arc<AlgebraPresentation>, entries: &mut [CatEntry]) {
    let vname = |v: usize| alg.quiver().vertices[v].clone();
    for e in entries.iter_mut() {
        if let Some(v) = e.projective_vertex {
            e.name = format!("P{}", vname(v));
        }
    }
    for e in entries.iter_mut() {
        if e.name.is_empty() {
            if let Some(v) = e.injective_vertex {
                e.name = format!("I{}", vname(v));
            }
        }
    }
    for e in entries.iter_mut() {
        if e.name.is_empty() && e.rep.total_dim() == 1 {
            let v = e.rep.dims.iter().position(|&d| d == 1).unwrap();
            e.name = format!("S{}", vname(v));
        }
    }
    // τ-orbit names from the projectives and injectives.
    let n = entries.len();
    let proj_ids: Vec<(usize, usize)> = entries
        .iter()
        .enumerate()
        .filter_map(|(i, e)| e.projective_vertex.map(|v| (i, v)))
        .collect();
    for (pid, v) in proj_ids {
        let mut cur = pid;
        let mut r = 0usize;
        while let Some(next) = entries[cur].tau_minus {
            r += 1;
            cur = next;
            if entries[cur].name.is_empty() {
                entries[cur].name = format!("tau^-{}P{}", r, vname(v));
            }
            if r > n {
                break;
            }
        }
    }
    let inj_ids: Vec<(usize, usize)> = entries
        .iter()
        .enumerate()
        .filter_map(|(i, e)| e.injective_vertex.map(|v| (i, v)))
        .collect();
    for (iid, v) in inj_ids {
        let mut cur = iid;
        let mut r = 0usize;
        while let Some(next) = entries[cur].tau {
            r += 1;
            cur = next;
            if entries[cur].name.is_empty() {
                entries[cur].name = format!("tau^{}I{}", r, vname(v));
            }
            if r > n {
                break;
            }
        }
    }
    for (k, e) in entries.iter_mut().enumerate() {
        if e.name.is_empty() {
            let dims: Vec<String> = e.rep.dims.iter().map(|d| d.to_string()).collect();
            e.name = format!("X({})#{}", dims.join(","), k);
        }
    }
}

/// Decompose a representation into catalog entries by greedy peeling: find an
/// entry N with maps f : N → x and g : x → N whose composite is invertible,
/// split off, recurse.
pub fn decompose(x: &Rep, cat: &IndecCatalog) -> Result<BTreeMap<usize, usize>> {
    let mut multiset = BTreeMap::new();
    let mut rest = x.clone();
    'peel: while !rest.is_zero() {
        for (id, entry) in cat.entries.iter().enumerate() {
            let n = &entry.rep;
            if n.is_zero() || n.dims.iter().zip(&rest.dims).any(|(a, b)| a > b) {
                continue;
            }
            let fwd = hom(n, &rest)?;
            if fwd.dim() == 0 {
                continue;
            }
            let bwd = hom(&rest, n)?;
            let mut found: Option<(RepMap, RepMap)> = None;
            'search: for f in &fwd.basis {
                for g in &bwd.basis {
                    if g.compose(f).is_invertible() {
                        found = Some((f.clone(), g.clone()));
                        break 'search;
                    }
                }
            }
            if found.is_none() {
                'combos: for coeffs in coefficient_box(fwd.dim(), 2) {
                    let f = combo_map(&fwd, &coeffs);
                    for g in &bwd.basis {
                        if g.compose(&f).is_invertible() {
                            found = Some((f.clone(), g.clone()));
                            break 'combos;
                        }
                    }
                }
            }
            let Some((f, g)) = found else { continue };
            let gf = g.compose(&f);
            let gfinv = gf.inverse().expect("checked invertible");
            let retraction = gfinv.compose(&g); // retraction ∘ f = id_N
            let (complement, _) = kernel_rep(&retraction)?;
            *multiset.entry(id).or_insert(0) += 1;
            rest = complement;
            continue 'peel;
        }
        return Err(if cat.is_windowed() {
            Error::SummandOutsideWindow {
                detail: format!("no catalog entry splits off of {:?}", rest.dims),
            }
        } else {
            Error::SplitSearchExhausted {
                dims: rest.dims.clone(),
            }
        });
    }
    Ok(multiset)
}

/// JSON-facing catalog dump row.
#[derive(Serialize)]
pub struct CatalogRow {
    pub id: usize,
    pub name: String,
    pub dims: Vec<usize>,
    pub level: usize,
    pub projective: bool,
    pub injective: bool,
    pub tau_rigid: bool,
    pub tau: Option<String>,
    pub tau_minus: Option<String>,
    pub arrow_matrices: Vec<Vec<Vec<String>>>,
}

pub fn catalog_rows(cat: &IndecCatalog) -> Vec<CatalogRow> {
    cat.entries
        .iter()
        .enumerate()
        .map(|(id, e)| CatalogRow {
            id,
            name: e.name.clone(),
            dims: e.rep.dims.clone(),
            level: e.level,
            projective: e.projective_vertex.is_some(),
            injective: e.injective_vertex.is_some(),
            tau_rigid: e.tau_rigid,
            tau: e.tau.map(|t| cat.entries[t].name.clone()),
            tau_minus: e.tau_minus.map(|t| cat.entries[t].name.clone()),
            arrow_matrices: e
                .rep
                .arrow_maps
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
                        .collect()
                })
                .collect(),
        })
        .collect()
}
