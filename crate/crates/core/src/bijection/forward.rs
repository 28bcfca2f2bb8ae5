use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::labeled::{build_with_markers, LabeledTree};
use super::tuple::ImageTuple;
use crate::algebra::Permutation;
use crate::cactus::PartitionedCactus;
use crate::tree::Color;
use crate::{Error, Result};

/// `λ₁, λ₂, λ₃`: each sends the concatenated ascending block strings, in reverse
/// label order, positionally onto `1..=N`. `λ₁` uses the blocks of `π₁`, `λ₂`
/// the sets `α₃⁻¹(π₂ʲ)`, `λ₃` the blocks of `π₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelabelingTriple {
    pub lambda1: Permutation,
    pub lambda2: Permutation,
    pub lambda3: Permutation,
}

/// Markers re-indexed by reverse label: entry `ℓ − 1` belongs to the block labeled `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMarkers {
    pub m1: Vec<u32>,
    pub m2p: Vec<u32>,
    pub m3: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSets {
    pub s0: Vec<u32>,
    pub s1: Vec<u32>,
    pub s2: Vec<u32>,
    pub chi: Vec<u32>,
}

/// Every intermediate object of the forward map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForwardTrace {
    pub tree: LabeledTree,
    pub markers: LabelMarkers,
    pub lambdas: RelabelingTriple,
    pub supports: SupportSets,
    /// Domain of `σ̃₁`, ascending; `ρ₁` is the rank map of this list.
    pub e1: Vec<u32>,
    /// Domain of `σ̃₂`, ascending; `ρ₂` is the rank map of this list.
    pub e2: Vec<u32>,
    /// `[N] \ S₁`, ascending (`ρ₃`).
    pub s1_complement: Vec<u32>,
    /// `[N] \ S₂`, ascending (`ρ₄`).
    pub s2_complement: Vec<u32>,
    /// `σ̃₁` as `(x, σ̃₁(x))` for `x ∈ E₁` ascending.
    pub sigma_tilde1: Vec<(u32, u32)>,
    pub sigma_tilde2: Vec<(u32, u32)>,
    /// `σ̄₁ = λ₃α₃⁻¹λ₁⁻¹` on all of `[N]`.
    pub sigma_bar1: Permutation,
    /// `σ̄₂ = λ₂α₃⁻¹α₂⁻¹λ₁⁻¹` on all of `[N]`.
    pub sigma_bar2: Permutation,
}

/// Markers listed by reverse label.
pub fn label_markers(pc: &PartitionedCactus, t: &LabeledTree) -> LabelMarkers {
    let m = pc.markers();
    let by = |color: Color, values: &[u32]| -> Vec<u32> {
        t.labeled(color)
            .iter()
            .map(|&v| values[t.vertices[v].block.expect("tree built from a cactus")])
            .collect()
    };
    LabelMarkers {
        m1: by(Color::White, &m.white),
        m2p: by(Color::Black, &m.black),
        m3: by(Color::Grey, &m.grey),
    }
}

fn positional(n: usize, blocks: impl Iterator<Item = Vec<u32>>) -> Permutation {
    let mut images = vec![0u32; n];
    let mut pos = 0u32;
    for block in blocks {
        for x in block {
            pos += 1;
            images[x as usize - 1] = pos;
        }
    }
    Permutation::from_images(images).expect("blocks partition [N]")
}

pub fn relabelings(pc: &PartitionedCactus, t: &LabeledTree) -> RelabelingTriple {
    let n = pc.n();
    let a3_inv = pc.alpha3().inverse();
    let block_of = |_: Color, v: usize| t.vertices[v].block.expect("tree built from a cactus");
    let lambda1 = positional(
        n,
        t.labeled(Color::White)
            .iter()
            .map(|&v| pc.pi1().blocks()[block_of(Color::White, v)].clone()),
    );
    let lambda2 = positional(
        n,
        t.labeled(Color::Black).iter().map(|&v| {
            let mut b: Vec<u32> = pc.pi2().blocks()[block_of(Color::Black, v)]
                .iter()
                .map(|&x| a3_inv.apply(x))
                .collect();
            b.sort_unstable();
            b
        }),
    );
    let lambda3 = positional(
        n,
        t.labeled(Color::Grey)
            .iter()
            .map(|&v| pc.pi3().blocks()[block_of(Color::Grey, v)].clone()),
    );
    RelabelingTriple {
        lambda1,
        lambda2,
        lambda3,
    }
}

fn sorted_dedup(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v.dedup();
    v
}

fn complement(n: usize, set: &[u32]) -> Vec<u32> {
    let mut member = vec![false; n + 1];
    for &x in set {
        member[x as usize] = true;
    }
    (1..=n as u32).filter(|&x| !member[x as usize]).collect()
}

pub fn support_sets(pc: &PartitionedCactus, lambdas: &RelabelingTriple, m: &LabelMarkers) -> SupportSets {
    let (a2, a3) = (pc.alpha2(), pc.alpha3());
    let (a2_inv, a3_inv) = (a2.inverse(), a3.inverse());
    let RelabelingTriple {
        lambda1: l1,
        lambda2: l2,
        lambda3: l3,
    } = lambdas;
    let whites = &m.m1[..m.m1.len() - 1];
    let black_tri: Vec<u32> = m.m2p.iter().map(|&x| a2.apply(a3.apply(x))).collect();

    let s0_pre: Vec<u32> = whites.iter().chain(&black_tri).copied().collect();
    let s0 = sorted_dedup(s0_pre.iter().map(|&x| l1.apply(x)).collect());
    let s1 = sorted_dedup(
        m.m3.iter()
            .copied()
            .chain(whites.iter().map(|&x| a3_inv.apply(x)))
            .map(|x| l3.apply(x))
            .collect(),
    );
    let s2 = sorted_dedup(
        m.m2p
            .iter()
            .copied()
            .chain(m.m3.iter().map(|&x| a3_inv.apply(a2_inv.apply(a3.apply(x)))))
            .map(|x| l2.apply(x))
            .collect(),
    );
    let chi =
        m.m3.iter()
            .map(|&x| a3.apply(x))
            .filter(|t| !s0_pre.contains(t))
            .map(|t| l1.apply(t))
            .collect();
    SupportSets { s0, s1, s2, chi }
}

/// `σᵢ = ρ ∘ σ̃ ∘ ρ⁻¹`: the permutation `r ↦ rank of f(domain[r]) in codomain`.
fn rank_conjugate(n: usize, domain: &[u32], codomain: &[u32], f: impl Fn(u32) -> u32) -> Result<Permutation> {
    let mut rank = vec![0u32; n + 1];
    for (r, &y) in codomain.iter().enumerate() {
        rank[y as usize] = r as u32 + 1;
    }
    let images: Vec<u32> = domain.iter().map(|&x| rank[f(x) as usize]).collect();
    Permutation::from_images(images)
        .map_err(|e| Error::Internal(format!("partial permutation is not onto its range: {e}")))
}

pub fn sigma_permutations(
    pc: &PartitionedCactus,
    lambdas: &RelabelingTriple,
    m: &LabelMarkers,
    supports: &SupportSets,
) -> Result<(Permutation, Permutation, SigmaParts)> {
    let n = pc.n();
    let (a2, a3) = (pc.alpha2(), pc.alpha3());
    let (a2_inv, a3_inv) = (a2.inverse(), a3.inverse());
    let RelabelingTriple {
        lambda1: l1,
        lambda2: l2,
        lambda3: l3,
    } = lambdas;
    let l1_inv = l1.inverse();
    let whites = &m.m1[..m.m1.len() - 1];
    let grey_tri: Vec<u32> = m.m3.iter().map(|&x| a3.apply(x)).collect();
    let black_tri: Vec<u32> = m.m2p.iter().map(|&x| a2.apply(a3.apply(x))).collect();

    let removed1: Vec<u32> = whites.iter().chain(&grey_tri).map(|&x| l1.apply(x)).collect();
    let removed2: Vec<u32> = black_tri.iter().chain(&grey_tri).map(|&x| l1.apply(x)).collect();
    let e1 = complement(n, &removed1);
    let e2 = complement(n, &removed2);
    let s1c = complement(n, &supports.s1);
    let s2c = complement(n, &supports.s2);

    let bar1 = |x: u32| l3.apply(a3_inv.apply(l1_inv.apply(x)));
    let bar2 = |x: u32| l2.apply(a3_inv.apply(a2_inv.apply(l1_inv.apply(x))));
    let sigma1 = rank_conjugate(n, &e1, &s1c, bar1)?;
    let sigma2 = rank_conjugate(n, &e2, &s2c, bar2)?;
    let parts = SigmaParts {
        sigma_tilde1: e1.iter().map(|&x| (x, bar1(x))).collect(),
        sigma_tilde2: e2.iter().map(|&x| (x, bar2(x))).collect(),
        sigma_bar1: Permutation::from_images((1..=n as u32).map(bar1).collect())?,
        sigma_bar2: Permutation::from_images((1..=n as u32).map(bar2).collect())?,
        e1,
        e2,
        s1_complement: s1c,
        s2_complement: s2c,
    };
    Ok((sigma1, sigma2, parts))
}

/// Domains, ranges and partial permutations behind `σ₁` and `σ₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaParts {
    pub e1: Vec<u32>,
    pub e2: Vec<u32>,
    pub s1_complement: Vec<u32>,
    pub s2_complement: Vec<u32>,
    pub sigma_tilde1: Vec<(u32, u32)>,
    pub sigma_tilde2: Vec<(u32, u32)>,
    pub sigma_bar1: Permutation,
    pub sigma_bar2: Permutation,
}

/// The forward map from a partitioned cactus to its 7-tuple.
pub fn theta_forward(pc: &PartitionedCactus) -> Result<ImageTuple> {
    theta_forward_traced(pc).map(|(tuple, _)| tuple)
}

pub fn theta_forward_traced(pc: &PartitionedCactus) -> Result<(ImageTuple, ForwardTrace)> {
    pc.validate()?;
    let tree = build_with_markers(pc, &pc.markers())?;
    let markers = label_markers(pc, &tree);
    let lambdas = relabelings(pc, &tree);
    let supports = support_sets(pc, &lambdas, &markers);
    let (sigma1, sigma2, parts) = sigma_permutations(pc, &lambdas, &markers, &supports)?;
    let [p1, p2, p3] = pc.block_counts();
    let tuple = ImageTuple {
        n: pc.n(),
        p: [p1 as u32, p2 as u32, p3 as u32],
        tau: tree.to_cactus_tree(),
        s0: supports.s0.clone(),
        s1: supports.s1.clone(),
        s2: supports.s2.clone(),
        chi: supports.chi.clone(),
        sigma1,
        sigma2,
    };
    tuple
        .validate()
        .map_err(|e| Error::Internal(format!("forward image fails validation: {e}")))?;
    let trace = ForwardTrace {
        tree,
        markers,
        lambdas,
        supports,
        e1: parts.e1,
        e2: parts.e2,
        s1_complement: parts.s1_complement,
        s2_complement: parts.s2_complement,
        sigma_tilde1: parts.sigma_tilde1,
        sigma_tilde2: parts.sigma_tilde2,
        sigma_bar1: parts.sigma_bar1,
        sigma_bar2: parts.sigma_bar2,
    };
    Ok((tuple, trace))
}
