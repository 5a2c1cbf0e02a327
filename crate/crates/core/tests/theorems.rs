//! Cross-module invariants exercised over the battery algebras: the
//! reduction formulas, the commuting double reductions, symmetric-group
//! relations at rank three, the Ext-criterion equivalence, and monotonicity
//! of nested subcategories.

use std::sync::Arc;

use tauseq_core::algebra::{prefab, AlgebraPresentation};
use tauseq_core::catalog::{knit, IndecCatalog};
use tauseq_core::homalg::{hom_dim, tau};
use tauseq_core::sequences::{
    all_ordered_sttilt, all_signed_sequences, e_reduce, mutate_seq, psi, transpose_seq,
};
use tauseq_core::taurigid::{is_support_tau_rigid, SignedObject};
use tauseq_core::tauperp::{j_of, j_of_in, rigid_in, WideSubcat};

fn battery() -> Vec<(&'static str, Arc<AlgebraPresentation>)> {
    vec![
        ("gamma", prefab::gamma()),
        ("a2", prefab::linear_a(2)),
        ("a3", prefab::linear_a(3)),
        ("nakayama3", prefab::nakayama_cycle_rad_square_zero(3)),
    ]
}

/// All indecomposable signed objects of C(mod Λ) over a catalog.
fn signed_objects(cat: &IndecCatalog) -> Vec<SignedObject> {
    let mut out = Vec::new();
    for id in 0..cat.len() {
        if cat.entries[id].tau_rigid {
            out.push(SignedObject::module(id));
        }
        if cat.entries[id].projective_vertex.is_some() {
            out.push(SignedObject::shifted(id));
        }
    }
    out
}

#[test]
fn reduction_formula_member_sets() {
    // J_{J(u)}(E_u(v)) = J(u ⊕ v) for every compatible pair.
    for (name, alg) in battery() {
        let cat = knit(&alg, 64).unwrap();
        let whole = WideSubcat::whole(&cat);
        let objs = signed_objects(&cat);
        for u in &objs {
            for v in &objs {
                if !is_support_tau_rigid(&cat, &[*u, *v]).unwrap() {
                    continue;
                }
                let ju = j_of(&cat, &[*u]).unwrap();
                let ev = e_reduce(&cat, &whole, u, v).unwrap();
                let lhs = j_of_in(&cat, &ju, &ev).unwrap();
                let rhs = j_of(&cat, &[*u, *v]).unwrap();
                assert_eq!(
                    lhs.members, rhs.members,
                    "{name}: member sets differ for u={u:?}, v={v:?}"
                );
                assert_eq!(lhs.rank, rhs.rank);
            }
        }
    }
}

#[test]
fn double_reductions_commute() {
    // E^{J(c)}_{E_c(b)} E_c = E^{J(b)}_{E_b(c)} E_b on every admissible y.
    for (name, alg) in battery() {
        let cat = knit(&alg, 64).unwrap();
        let whole = WideSubcat::whole(&cat);
        let objs = signed_objects(&cat);
        for b in &objs {
            for c in &objs {
                if !is_support_tau_rigid(&cat, &[*b, *c]).unwrap() {
                    continue;
                }
                for y in &objs {
                    if !is_support_tau_rigid(&cat, &[*b, *c, *y]).unwrap() {
                        continue;
                    }
                    let jc = j_of(&cat, &[*c]).unwrap();
                    let ecb = e_reduce(&cat, &whole, c, b).unwrap();
                    let ecy = e_reduce(&cat, &whole, c, y).unwrap();
                    let left = e_reduce(&cat, &jc, &ecb, &ecy).unwrap();

                    let jb = j_of(&cat, &[*b]).unwrap();
                    let ebc = e_reduce(&cat, &whole, b, c).unwrap();
                    let eby = e_reduce(&cat, &whole, b, y).unwrap();
                    let right = e_reduce(&cat, &jb, &ebc, &eby).unwrap();
                    assert_eq!(
                        left, right,
                        "{name}: routes through {b:?} and {c:?} disagree on {y:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn symmetric_group_relations_rank_three() {
    for alg in [prefab::linear_a(3), prefab::nakayama_cycle_rad_square_zero(3)] {
        let cat = knit(&alg, 64).unwrap();
        for seq in all_signed_sequences(&cat).unwrap() {
            // Involutions.
            for i in 0..2 {
                let once = transpose_seq(&cat, &seq, i).unwrap();
                assert_eq!(transpose_seq(&cat, &once, i).unwrap(), seq);
            }
            for j in 0..3 {
                let once = mutate_seq(&cat, &seq, j).unwrap();
                assert_eq!(mutate_seq(&cat, &once, j).unwrap(), seq);
            }
            // Braid-free relation (π̃₁ π̃₂)³ = id.
            let mut cur = seq.clone();
            for _ in 0..3 {
                cur = transpose_seq(&cat, &cur, 1).unwrap();
                cur = transpose_seq(&cat, &cur, 0).unwrap();
            }
            assert_eq!(cur, seq, "(π̃₁π̃₂)³ = id");
            // Semidirect relation: π̃_i s_i π̃_i = s_{i+1}.
            for i in 0..2 {
                let lhs = transpose_seq(
                    &cat,
                    &mutate_seq(&cat, &transpose_seq(&cat, &seq, i).unwrap(), i).unwrap(),
                    i,
                )
                .unwrap();
                let rhs = mutate_seq(&cat, &seq, i + 1).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn ext_criterion_equivalence() {
    // Hom(x, τx) = 0 iff Ext¹(x, Gen x ∩ catalog) = 0, over every entry of
    // every battery catalog.
    for (name, alg) in battery() {
        let cat = knit(&alg, 64).unwrap();
        for x in 0..cat.len() {
            let ambient = hom_dim(cat.rep(x), &cat.entries[x].tau_rep).unwrap() == 0;
            let ext_route = (0..cat.len())
                .all(|z| !cat.gen_table[x][z] || cat.ext1_dims[x][z] == 0);
            assert_eq!(ambient, ext_route, "{name}: entry {x}");
        }
    }
}

#[test]
fn tau_zero_iff_projective() {
    for (name, alg) in battery() {
        let cat = knit(&alg, 64).unwrap();
        for e in &cat.entries {
            assert_eq!(
                tau(&e.rep).is_zero(),
                e.projective_vertex.is_some(),
                "{name}"
            );
        }
    }
}

#[test]
fn nested_rigidity_descends_along_chains() {
    // Along every chain of an ordered support τ-tilting object: W' ⊆ W, and
    // members of W' rigid in W are rigid in W'.
    for (name, alg) in battery() {
        let cat = knit(&alg, 64).unwrap();
        let (all_t, _) = all_ordered_sttilt(&cat).unwrap();
        for t in &all_t {
            let seq = psi(&cat, t).unwrap();
            let homes = &seq.homes;
            for k in 1..homes.len() {
                let big = &homes[k];
                let small = &homes[k - 1];
                assert!(
                    small.members.iter().all(|m| big.contains(*m)),
                    "{name}: chain not nested"
                );
                assert!(small.rank <= big.rank);
                if small.rank == big.rank {
                    assert_eq!(small.members, big.members);
                }
                for &x in &small.members {
                    if rigid_in(&cat, big, x).unwrap() {
                        assert!(rigid_in(&cat, small, x).unwrap(), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn relative_j_shrinks_into_smaller_ambient() {
    // J_W(x) ⊆ J_{W'}(x) for nested W' ⊆ W and x support τ-rigid in both.
    for (name, alg) in battery() {
        let cat = knit(&alg, 64).unwrap();
        let whole = WideSubcat::whole(&cat);
        for id in 0..cat.len() {
            if !cat.entries[id].tau_rigid {
                continue;
            }
            let u = SignedObject::module(id);
            let w_small = j_of(&cat, &[u]).unwrap();
            for &x in &w_small.members {
                let v = SignedObject::module(x);
                let in_whole = j_of_in(&cat, &whole, &v);
                let in_small = j_of_in(&cat, &w_small, &v);
                let (Ok(a), Ok(b)) = (in_whole, in_small) else {
                    continue;
                };
                // Members of the ambient reduction that happen to lie in the
                // smaller subcategory survive into the relative reduction.
                assert!(
                    a.members
                        .iter()
                        .filter(|m| w_small.contains(**m))
                        .all(|m| b.members.contains(m)),
                    "{name}: J_W(x) ∩ W' ⊄ J_W'(x)"
                );
            }
        }
    }
}

#[test]
fn kronecker_windowed_ar_duality() {
    let alg = prefab::kronecker();
    let cat = knit(&alg, 3).unwrap();
    for x in 0..cat.len() {
        for y in 0..cat.len() {
            let lhs = cat.hom_tau_dims[x][y]; // dim Hom(x, τy)
            let ext = cat.ext1_dims[y][x];
            assert!(lhs >= ext, "AR inequality");
        }
    }
}
