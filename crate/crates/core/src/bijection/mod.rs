//! The bijection `Θ` between partitioned 3-cacti and 7-tuples
//! `(τ, S₀, S₁, S₂, χ, σ₁, σ₂)`, and its inverse.
//!
//! Forward: build the last-passage tree of the blocks, flag its triangles,
//! reverse-label each color, relabel `[N]` so that blocks become intervals, and
//! record the marker images and the residual permutations. Inverse: read the
//! marker images back off the tree shape, rebuild `σ̄₁`, `σ̄₂`, then recover the
//! relabelings one element at a time.

mod forward;
mod image;
mod inverse;
mod labeled;
mod tuple;

pub use forward::{
    label_markers, relabelings, sigma_permutations, support_sets, theta_forward, theta_forward_traced, ForwardTrace,
    LabelMarkers, RelabelingTriple, SigmaParts, SupportSets,
};
pub use image::{arrangements, combinations, image_set_size, visit_image_set};
pub use inverse::{resolve_markers, theta_inverse, theta_inverse_traced, InverseTrace, ResolvedMarkers};
pub use labeled::{build_labeled_tree, LabeledTree, LabeledVertex};
pub use tuple::{ImageTuple, TupleSizes};

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::algebra::Permutation;
    use crate::tree::{CactusTree, Color};
    use alloc::vec;

    /// `W → B → G → W* → B → G`.
    pub fn chain_tree() -> CactusTree {
        let deep = CactusTree::node(
            Color::White,
            true,
            vec![CactusTree::node(
                Color::Black,
                false,
                vec![CactusTree::leaf(Color::Grey)],
            )],
        );
        CactusTree::node(
            Color::White,
            false,
            vec![CactusTree::node(
                Color::Black,
                false,
                vec![CactusTree::node(Color::Grey, false, vec![deep])],
            )],
        )
    }

    /// The worked inverse example on `N = 4`.
    pub fn inverse_example() -> ImageTuple {
        ImageTuple {
            n: 4,
            p: [2, 2, 2],
            tau: chain_tree(),
            s0: vec![1, 4],
            s1: vec![2, 3, 4],
            s2: vec![1, 2, 3, 4],
            chi: vec![2, 3],
            sigma1: Permutation::identity(1),
            sigma2: Permutation::identity(0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::algebra::Permutation;
    use crate::cactus::fixtures::{part, pc1, perm};
    use crate::cactus::{enumerate_cc, PartitionedCactus};
    use crate::tree::{CactusTree, Color, TreeProfile};
    use alloc::vec;
    use alloc::vec::Vec;

    fn images(p: &Permutation) -> Vec<u32> {
        p.images().to_vec()
    }

    #[test]
    fn forward_running_example() {
        let (tup, trace) = theta_forward_traced(&pc1()).unwrap();
        assert_eq!(images(&trace.lambdas.lambda1), vec![4, 1, 5, 2, 3]);
        assert_eq!(images(&trace.lambdas.lambda2), vec![1, 3, 4, 2, 5]);
        assert_eq!(images(&trace.lambdas.lambda3), vec![2, 3, 1, 4, 5]);
        assert_eq!(tup.tau.profile(), TreeProfile::new(2, 2, 2, 1, 1, 0));
        assert_eq!(tup.s0, vec![3, 4]);
        assert_eq!(tup.s1, vec![1, 2, 5]);
        assert_eq!(tup.s2, vec![2, 3, 5]);
        assert_eq!(tup.chi, vec![5]);
        assert_eq!(tup.sigma1, Permutation::identity(2));
        assert_eq!(tup.sigma2, perm(2, &[&[1, 2]]));
        assert_eq!(trace.e1, vec![1, 2]);
        assert_eq!(trace.sigma_tilde1, vec![(1, 3), (2, 4)]);
        assert_eq!(trace.s1_complement, vec![3, 4]);
        assert_eq!(trace.e2, vec![1, 2]);
        assert_eq!(trace.sigma_tilde2, vec![(1, 4), (2, 1)]);
        assert_eq!(trace.s2_complement, vec![1, 4]);
    }

    #[test]
    fn inverse_worked_example() {
        let tup = inverse_example();
        let m = resolve_markers(&tup).unwrap();
        assert_eq!(m.black_l1[0], 1);
        assert_eq!(m.white_l1[0], 1);
        assert_eq!((m.grey_l3[0], m.white_l3[0], m.grey_l3[1]), (2, 3, 4));
        assert_eq!(m.grey_l1, vec![2, 3]);

        let (pc, trace) = theta_inverse_traced(&tup).unwrap();
        assert_eq!(images(&trace.lambda1), vec![2, 3, 4, 1]);
        assert_eq!(images(&trace.lambda2), vec![3, 1, 2, 4]);
        assert_eq!(images(&trace.lambda3), vec![1, 3, 2, 4]);
        assert_eq!(images(&trace.sigma_bar1), vec![3, 2, 4, 1]);
        assert_eq!(images(&trace.sigma_bar2), vec![2, 1, 3, 4]);
        assert_eq!(pc.pi1(), &part(4, &[&[4], &[1, 2, 3]]));
        assert_eq!(pc.pi2(), &part(4, &[&[1, 4], &[2, 3]]));
        assert_eq!(pc.pi3(), &part(4, &[&[1, 3], &[2, 4]]));
        assert_eq!(pc.alpha1(), &perm(4, &[&[1, 3]]));
        assert_eq!(pc.alpha2(), &perm(4, &[&[1, 4], &[2, 3]]));
        assert_eq!(theta_forward(&pc).unwrap(), tup);
    }

    #[test]
    fn inverse_of_running_example() {
        let pc = pc1();
        assert_eq!(theta_inverse(&theta_forward(&pc).unwrap()).unwrap(), pc);
    }

    #[test]
    fn single_triangle() {
        let pc = PartitionedCactus::new(
            Permutation::identity(1),
            Permutation::identity(1),
            part(1, &[&[1]]),
            part(1, &[&[1]]),
            part(1, &[&[1]]),
        )
        .unwrap();
        let tup = theta_forward(&pc).unwrap();
        let chain = CactusTree::node(
            Color::White,
            false,
            vec![CactusTree::node(
                Color::Black,
                true,
                vec![CactusTree::leaf(Color::Grey)],
            )],
        );
        assert_eq!(tup.tau, chain);
        assert_eq!(
            (tup.s0.clone(), tup.s1.clone(), tup.s2.clone()),
            (vec![1], vec![1], vec![1])
        );
        assert!(tup.chi.is_empty());
        assert_eq!((tup.sigma1.degree(), tup.sigma2.degree()), (0, 0));
        assert_eq!(theta_inverse(&tup).unwrap(), pc);
    }

    #[test]
    fn single_blocks_give_a_chain() {
        for pc in enumerate_cc([1, 1, 1], 3, 7).unwrap() {
            let t = build_labeled_tree(&pc).unwrap();
            let shape = t.to_cactus_tree();
            assert_eq!(shape.children.len(), 1);
            assert_eq!(shape.children[0].children.len(), 1);
            assert!(shape.children[0].children[0].children.is_empty());
        }
    }

    #[test]
    fn round_trips_small() {
        for n in 1..=4 {
            for p1 in 1..=n {
                for p2 in 1..=n {
                    for p3 in 1..=n {
                        for pc in enumerate_cc([p1, p2, p3], n, 7).unwrap() {
                            let tup = theta_forward(&pc).unwrap();
                            assert_eq!(theta_inverse(&tup).unwrap(), pc);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn branch_maxima_increase_toward_root() {
        for pc in (1..=3).flat_map(|k| enumerate_cc([k, 2, k], 5, 7).unwrap()) {
            let t = build_labeled_tree(&pc).unwrap();
            let m = pc.markers();
            let marker = |v: usize| {
                let x = &t.vertices[v];
                let b = x.block.unwrap();
                match x.color {
                    Color::White => m.white[b],
                    Color::Black => m.black[b],
                    Color::Grey => m.grey[b],
                }
            };
            for v in 0..t.vertices.len() {
                let mut u = v;
                // the nearest same-color ancestor is three levels up
                while let Some(p) = t.vertices[u]
                    .parent
                    .and_then(|p| t.vertices[p].parent)
                    .and_then(|p| t.vertices[p].parent)
                {
                    // the root block holds 1, so its maximum is not comparable
                    if p != t.root() {
                        assert!(marker(p) > marker(u));
                    }
                    u = p;
                }
            }
        }
    }

    #[test]
    fn rejects_invalid_tuples() {
        let mut tup = inverse_example();
        tup.chi = vec![1, 2];
        assert!(theta_inverse(&tup).is_err());
    }
}
