use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::labeled::LabeledTree;
use super::tuple::ImageTuple;
use crate::algebra::{Permutation, SetPartition};
use crate::cactus::PartitionedCactus;
use crate::tree::Color;
use crate::{Error, Result};

/// Relabeled marker images recovered from a tuple. Every vector is indexed by
/// reverse label minus one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedMarkers {
    /// `λ₁(m₁ⁱ)`, the last entry being `N`.
    pub white_l1: Vec<u32>,
    /// `λ₃(α₃⁻¹(m₁ⁱ))` for the `p₁ − 1` non-root white blocks.
    pub white_l3: Vec<u32>,
    /// `λ₁(α₂α₃(m₂'ʲ))`.
    pub black_l1: Vec<u32>,
    /// `λ₂(m₂'ʲ)`.
    pub black_l2: Vec<u32>,
    /// `λ₁(α₃(m₃ᵏ))`.
    pub grey_l1: Vec<u32>,
    /// `λ₂(α₃⁻¹α₂⁻¹α₃(m₃ᵏ))`.
    pub grey_l2: Vec<u32>,
    /// `λ₃(m₃ᵏ)`.
    pub grey_l3: Vec<u32>,
}

/// Intermediate objects of the inverse map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseTrace {
    pub markers: ResolvedMarkers,
    pub sigma_bar1: Permutation,
    pub sigma_bar2: Permutation,
    pub lambda1: Permutation,
    pub lambda2: Permutation,
    pub lambda3: Permutation,
}

fn inconsistent(what: &str) -> Error {
    Error::InvalidTuple(format!("inconsistent tuple: {what}"))
}

/// Hands out the values of a sorted set to slots in order.
struct Slots<'a> {
    values: &'a [u32],
    next: usize,
}

impl<'a> Slots<'a> {
    fn new(values: &'a [u32]) -> Self {
        Self { values, next: 0 }
    }

    fn take(&mut self, name: &str) -> Result<u32> {
        let v = self
            .values
            .get(self.next)
            .copied()
            .ok_or_else(|| inconsistent(&format!("{name} has too few elements")))?;
        self.next += 1;
        Ok(v)
    }

    fn finish(self, name: &str) -> Result<()> {
        if self.next == self.values.len() {
            Ok(())
        } else {
            Err(inconsistent(&format!("{name} has unused elements")))
        }
    }
}

/// Reads the relabeled marker images off `τ`, `S₀`, `S₁`, `S₂` and `χ`.
pub fn resolve_markers(tup: &ImageTuple) -> Result<ResolvedMarkers> {
    tup.validate()?;
    resolve_on(&LabeledTree::from_shape(&tup.tau), tup)
}

fn resolve_on(t: &LabeledTree, tup: &ImageTuple) -> Result<ResolvedMarkers> {
    let [p1, p2, p3] = tup.p.map(|x| x as usize);
    let label = |v: usize| t.vertices[v].label as usize - 1;

    // S₀: per white block in label order, its black children, then its own marker
    let mut white_l1 = vec![0u32; p1];
    let mut black_l1 = vec![0u32; p2];
    let mut slots = Slots::new(&tup.s0);
    for (i, &v) in t.labeled(Color::White).iter().enumerate() {
        for &c in &t.vertices[v].children {
            black_l1[label(c)] = slots.take("s0")?;
        }
        if i + 1 < p1 {
            white_l1[i] = match (t.vertices[v].flag, t.last_child(v)) {
                (true, Some(c)) => black_l1[label(c)],
                _ => slots.take("s0")?,
            };
        }
    }
    slots.finish("s0")?;
    white_l1[p1 - 1] = tup.n as u32;

    // S₁: per grey block, its white children, then its own marker
    let mut white_l3 = vec![0u32; p1 - 1];
    let mut grey_l3 = vec![0u32; p3];
    let mut slots = Slots::new(&tup.s1);
    for (k, &v) in t.labeled(Color::Grey).iter().enumerate() {
        for &c in &t.vertices[v].children {
            white_l3[label(c)] = slots.take("s1")?;
        }
        grey_l3[k] = match (t.vertices[v].flag, t.last_child(v)) {
            (true, Some(c)) => white_l3[label(c)],
            _ => slots.take("s1")?,
        };
    }
    slots.finish("s1")?;

    // S₂: per black block, its grey children, then its own marker
    let mut grey_l2 = vec![0u32; p3];
    let mut black_l2 = vec![0u32; p2];
    let mut slots = Slots::new(&tup.s2);
    for (j, &v) in t.labeled(Color::Black).iter().enumerate() {
        for &c in &t.vertices[v].children {
            grey_l2[label(c)] = slots.take("s2")?;
        }
        black_l2[j] = match (t.vertices[v].flag, t.last_child(v)) {
            (true, Some(c)) => grey_l2[label(c)],
            _ => slots.take("s2")?,
        };
    }
    slots.finish("s2")?;

    // λ₁(α₃(m₃ᵏ)): forced by a triangle through grey k, otherwise the next entry of χ
    let mut grey_l1 = vec![0u32; p3];
    let mut chi = Slots::new(&tup.chi);
    for (k, &v) in t.labeled(Color::Grey).iter().enumerate() {
        grey_l1[k] = if let Some(u) = t.triangle_parent(v) {
            black_l1[label(u)]
        } else if let (true, Some(c)) = (t.vertices[v].flag, t.last_child(v)) {
            white_l1[label(c)]
        } else {
            chi.take("chi")?
        };
    }
    chi.finish("chi")?;

    Ok(ResolvedMarkers {
        white_l1,
        white_l3,
        black_l1,
        black_l2,
        grey_l1,
        grey_l2,
        grey_l3,
    })
}

/// Extends the marker pairs `x ↦ y` by `σ` on the remaining points, matched by rank.
fn extend(
    n: usize,
    pairs: &[(u32, u32)],
    sigma: &Permutation,
    codomain_set: &[u32],
    name: &str,
) -> Result<Permutation> {
    let mut images = vec![0u32; n];
    for &(x, y) in pairs {
        let slot = &mut images[x as usize - 1];
        if *slot != 0 && *slot != y {
            return Err(inconsistent(&format!("{name} is assigned twice at {x}")));
        }
        *slot = y;
    }
    let domain: Vec<u32> = (1..=n as u32).filter(|&x| images[x as usize - 1] == 0).collect();
    let mut in_set = vec![false; n + 1];
    for &y in codomain_set {
        in_set[y as usize] = true;
    }
    let codomain: Vec<u32> = (1..=n as u32).filter(|&y| !in_set[y as usize]).collect();
    if domain.len() != sigma.degree() || codomain.len() != sigma.degree() {
        return Err(inconsistent(&format!(
            "{name} leaves {} points for a permutation of degree {}",
            domain.len(),
            sigma.degree()
        )));
    }
    for (r, &x) in domain.iter().enumerate() {
        images[x as usize - 1] = codomain[sigma.images()[r] as usize - 1];
    }
    Permutation::from_images(images).map_err(|_| inconsistent(&format!("{name} is not a bijection")))
}

/// Interval index of every value in `1..=n`, for the intervals `(ends[i−1], ends[i]]`.
fn interval_index(n: usize, ends: &[u32]) -> Result<Vec<usize>> {
    let mut idx = vec![usize::MAX; n + 1];
    let mut lo = 0u32;
    for (i, &hi) in ends.iter().enumerate() {
        if hi <= lo {
            return Err(inconsistent("marker images are not increasing"));
        }
        for x in lo + 1..=hi {
            idx[x as usize] = i;
        }
        lo = hi;
    }
    if lo as usize != n {
        return Err(inconsistent("intervals do not cover [N]"));
    }
    Ok(idx)
}

fn starts(ends: &[u32]) -> Vec<u32> {
    core::iter::once(0)
        .chain(ends.iter().copied())
        .take(ends.len())
        .map(|x| x + 1)
        .collect()
}

/// The inverse map from a 7-tuple back to its partitioned cactus.
pub fn theta_inverse(tup: &ImageTuple) -> Result<PartitionedCactus> {
    theta_inverse_traced(tup).map(|(pc, _)| pc)
}

pub fn theta_inverse_traced(tup: &ImageTuple) -> Result<(PartitionedCactus, InverseTrace)> {
    tup.validate()?;
    let n = tup.n;
    let t = LabeledTree::from_shape(&tup.tau);
    let m = resolve_on(&t, tup)?;
    let p1 = tup.p[0] as usize;

    let pairs1: Vec<(u32, u32)> = m
        .grey_l1
        .iter()
        .zip(&m.grey_l3)
        .chain(m.white_l1[..p1 - 1].iter().zip(&m.white_l3))
        .map(|(&x, &y)| (x, y))
        .collect();
    let bar1 = extend(n, &pairs1, &tup.sigma1, &tup.s1, "σ̄₁")?;
    let pairs2: Vec<(u32, u32)> = m
        .black_l1
        .iter()
        .zip(&m.black_l2)
        .chain(m.grey_l1.iter().zip(&m.grey_l2))
        .map(|(&x, &y)| (x, y))
        .collect();
    let bar2 = extend(n, &pairs2, &tup.sigma2, &tup.s2, "σ̄₂")?;
    let (bar1_inv, bar2_inv) = (bar1.inverse(), bar2.inverse());

    // blocks as intervals of relabeled values
    let white_of = interval_index(n, &m.white_l1)?;
    let grey_of_l3 = interval_index(n, &m.grey_l3)?;
    let black_of_l2 = interval_index(n, &m.black_l2)?;
    let grey_of = |x: u32| grey_of_l3[bar1.apply(x) as usize];
    let black_of = |y: u32| black_of_l2[bar2.apply(y) as usize];

    let mut l3_next = starts(&m.grey_l3);
    let mut l2_next = starts(&m.black_l2);
    let mut l1_used = vec![false; n + 1];
    let mut l1 = vec![0u32; n];
    let mut l2 = vec![0u32; n];
    let mut l3 = vec![0u32; n];
    let stall = |what: &str, i: usize| Error::Internal(format!("reconstruction stalls at {i}: {what}"));

    let root_start = if p1 == 1 { 1 } else { m.white_l1[p1 - 2] + 1 };
    l1[0] = root_start;
    l1_used[root_start as usize] = true;
    for i in 1..=n {
        let x = l1[i - 1];
        let k = grey_of(x);
        let v3 = l3_next[k];
        if v3 > m.grey_l3[k] {
            return Err(stall("grey block exhausted", i));
        }
        l3_next[k] += 1;
        l3[i - 1] = v3;
        let y = bar1_inv.apply(v3);
        let j = black_of(y);
        let v2 = l2_next[j];
        if v2 > m.black_l2[j] {
            return Err(stall("black block exhausted", i));
        }
        l2_next[j] += 1;
        l2[i - 1] = v2;
        if i == n {
            break;
        }
        let z = bar2_inv.apply(v2);
        let w = white_of[z as usize];
        let lo = if w == 0 { 1 } else { m.white_l1[w - 1] + 1 };
        let next = (lo..=m.white_l1[w])
            .find(|&v| !l1_used[v as usize])
            .ok_or_else(|| stall("white block exhausted", i))?;
        l1_used[next as usize] = true;
        l1[i] = next;
    }
    let as_perm = |v: Vec<u32>, name: &str| {
        Permutation::from_images(v).map_err(|_| stall(&format!("{name} is not a bijection"), n))
    };
    let lambda1 = as_perm(l1, "λ₁")?;
    let lambda2 = as_perm(l2, "λ₂")?;
    let lambda3 = as_perm(l3, "λ₃")?;

    let l1_inv = lambda1.inverse();
    let gamma = Permutation::long_cycle(n);
    // α₁ = γλ₂⁻¹σ̄₂λ₁ and α₂ = λ₁⁻¹σ̄₂⁻¹λ₂λ₃⁻¹σ̄₁λ₁
    let alpha1 = gamma.compose(&lambda2.inverse().compose(&bar2.compose(&lambda1)?)?)?;
    let alpha2 =
        l1_inv.compose(&bar2_inv.compose(&lambda2.compose(&lambda3.inverse().compose(&bar1.compose(&lambda1)?)?)?)?)?;

    let partition = |labels: Vec<usize>| SetPartition::from_labels(&labels);
    let pi1 = partition((1..=n as u32).map(|e| white_of[lambda1.apply(e) as usize]).collect());
    let pi2 = partition((1..=n as u32).map(|e| black_of(lambda1.apply(e))).collect());
    let pi3 = partition((1..=n as u32).map(|e| grey_of(lambda1.apply(e))).collect());
    let pc = PartitionedCactus::assemble(alpha1, alpha2, pi1, pi2, pi3)?;
    pc.validate_counts(tup.p.map(|x| x as usize))
        .map_err(|e| Error::Internal(format!("reconstructed cactus is invalid: {e}")))?;
    Ok((
        pc,
        InverseTrace {
            markers: m,
            sigma_bar1: bar1,
            sigma_bar2: bar2,
            lambda1,
            lambda2,
            lambda3,
        },
    ))
}
