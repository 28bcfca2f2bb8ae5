use alloc::vec::Vec;

use super::PartitionedCactus;

/// Last-passage markers of every block, indexed by canonical block order.
///
/// - `white[i] = max π₁⁽ⁱ⁾`
/// - `black[j] = max α₃⁻¹(π₂⁽ʲ⁾)` (written `m₂'`)
/// - `grey[k]  = max π₃⁽ᵏ⁾`
///
/// The `*_triangles` vectors hold the triangle carrying each block's last-passage
/// vertex: `m₁`, `α₂α₃(m₂')` and `α₃(m₃)` respectively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkerSet {
    pub white: Vec<u32>,
    pub black: Vec<u32>,
    pub grey: Vec<u32>,
    pub white_triangles: Vec<u32>,
    pub black_triangles: Vec<u32>,
    pub grey_triangles: Vec<u32>,
}

impl MarkerSet {
    pub(crate) fn compute(pc: &PartitionedCactus) -> Self {
        let a2 = pc.alpha2();
        let a3 = pc.alpha3();
        let a3_inv = a3.inverse();
        let max_of = |block: &Vec<u32>| *block.iter().max().expect("blocks are nonempty");

        let white: Vec<u32> = pc.pi1().blocks().iter().map(max_of).collect();
        let black: Vec<u32> = pc
            .pi2()
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&x| a3_inv.apply(x)).max().expect("blocks are nonempty"))
            .collect();
        let grey: Vec<u32> = pc.pi3().blocks().iter().map(max_of).collect();

        let white_triangles = white.clone();
        let black_triangles = black.iter().map(|&m| a2.apply(a3.apply(m))).collect();
        let grey_triangles = grey.iter().map(|&m| a3.apply(m)).collect();
        Self {
            white,
            black,
            grey,
            white_triangles,
            black_triangles,
            grey_triangles,
        }
    }
}
