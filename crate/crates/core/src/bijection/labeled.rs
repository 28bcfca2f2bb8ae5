use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cactus::{MarkerSet, PartitionedCactus};
use crate::tree::{CactusTree, Color};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledVertex {
    pub color: Color,
    /// Canonical block index of the partition matching `color`, if known.
    pub block: Option<usize>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub depth: usize,
    pub flag: bool,
    /// Reverse label in `1..=p_color`.
    pub label: u32,
}

/// Arena form of a cactus tree in breadth-first order (index 0 is the root),
/// carrying reverse labels and, when built from a partitioned cactus, the block
/// each vertex stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledTree {
    pub vertices: Vec<LabeledVertex>,
    /// `by_label[c][ℓ - 1]` is the vertex of color `c` with label `ℓ`.
    by_label: [Vec<usize>; 3],
}

impl LabeledTree {
    pub fn root(&self) -> usize {
        0
    }

    pub fn count(&self, color: Color) -> usize {
        self.by_label[color.index()].len()
    }

    pub fn vertex_by_label(&self, color: Color, label: u32) -> usize {
        self.by_label[color.index()][label as usize - 1]
    }

    /// Vertices of `color` in label order `1, 2, …`.
    pub fn labeled(&self, color: Color) -> &[usize] {
        &self.by_label[color.index()]
    }

    /// Rightmost child of `v`.
    pub fn last_child(&self, v: usize) -> Option<usize> {
        self.vertices[v].children.last().copied()
    }

    /// The flagged-vertex parent whose triangle ends at `v`, if `v` is the
    /// rightmost child of a flagged vertex.
    pub fn triangle_parent(&self, v: usize) -> Option<usize> {
        let p = self.vertices[v].parent?;
        (self.vertices[p].flag && self.last_child(p) == Some(v)).then_some(p)
    }

    /// Unlabeled plane tree with flags.
    pub fn to_cactus_tree(&self) -> CactusTree {
        fn go(t: &LabeledTree, v: usize) -> CactusTree {
            let x = &t.vertices[v];
            CactusTree::node(x.color, x.flag, x.children.iter().map(|&c| go(t, c)).collect())
        }
        go(self, 0)
    }

    /// Arena over a bare tree shape; blocks are unknown.
    pub fn from_shape(t: &CactusTree) -> Self {
        let mut vertices = vec![LabeledVertex {
            color: t.color,
            block: None,
            parent: None,
            children: Vec::new(),
            depth: 0,
            flag: t.flag,
            label: 0,
        }];
        let mut queue = VecDeque::from([(0usize, t)]);
        while let Some((v, node)) = queue.pop_front() {
            for child in &node.children {
                let idx = vertices.len();
                vertices.push(LabeledVertex {
                    color: child.color,
                    block: None,
                    parent: Some(v),
                    children: Vec::new(),
                    depth: vertices[v].depth + 1,
                    flag: child.flag,
                    label: 0,
                });
                vertices[v].children.push(idx);
                queue.push_back((idx, child));
            }
        }
        Self::finish(vertices)
    }

    /// Computes reverse labels: per color, by depth ascending and right to left
    /// within a depth, labels run from `p_color` down to 1.
    fn finish(mut vertices: Vec<LabeledVertex>) -> Self {
        let mut by_label: [Vec<usize>; 3] = Default::default();
        for color in Color::ALL {
            let mut order: Vec<usize> = (0..vertices.len()).filter(|&v| vertices[v].color == color).collect();
            // breadth-first indices increase left to right within a depth
            order.sort_by(|&u, &v| vertices[u].depth.cmp(&vertices[v].depth).then(v.cmp(&u)));
            let p = order.len() as u32;
            for (k, &v) in order.iter().enumerate() {
                vertices[v].label = p - k as u32;
            }
            order.reverse();
            by_label[color.index()] = order;
        }
        Self { vertices, by_label }
    }
}

/// Last-passage tree of a partitioned cactus, with triangle flags attached.
///
/// White block `i` is the parent of black block `j` when `α₂α₃(m₂'ʲ) ∈ π₁ⁱ`;
/// black `j` is the parent of grey `k` when `α₃(m₃ᵏ) ∈ π₂ʲ`; grey `k` is the
/// parent of non-root white `i` when `m₁ⁱ ∈ π₃ᵏ`. Siblings are ordered by
/// `α₂α₃(m₂')`, `α₃⁻¹α₂⁻¹α₃(m₃)` and `α₃⁻¹(m₁)` respectively.
pub fn build_labeled_tree(pc: &PartitionedCactus) -> Result<LabeledTree> {
    let m = pc.markers();
    build_with_markers(pc, &m)
}

pub(crate) fn build_with_markers(pc: &PartitionedCactus, m: &MarkerSet) -> Result<LabeledTree> {
    let [p1, p2, p3] = pc.block_counts();
    let a2_inv = pc.alpha2().inverse();
    let a3_inv = pc.alpha3().inverse();
    let white_of = pc.pi1().block_index();
    let black_of = pc.pi2().block_index();
    let grey_of = pc.pi3().block_index();
    let root = pc.root_block();
    let at = |idx: &Vec<usize>, x: u32| idx[x as usize - 1];

    let mut white_children: Vec<Vec<(u32, usize)>> = vec![Vec::new(); p1];
    for (j, &t) in m.black_triangles.iter().enumerate() {
        white_children[at(&white_of, t)].push((t, j));
    }
    let mut black_children: Vec<Vec<(u32, usize)>> = vec![Vec::new(); p2];
    for (k, &t) in m.grey_triangles.iter().enumerate() {
        black_children[at(&black_of, t)].push((a3_inv.apply(a2_inv.apply(t)), k));
    }
    let mut grey_children: Vec<Vec<(u32, usize)>> = vec![Vec::new(); p3];
    for (i, &t) in m.white_triangles.iter().enumerate() {
        if i != root {
            grey_children[at(&grey_of, t)].push((a3_inv.apply(t), i));
        }
    }
    for lists in [&mut white_children, &mut black_children, &mut grey_children] {
        for l in lists.iter_mut() {
            l.sort_unstable();
        }
    }

    let mut vertices = vec![LabeledVertex {
        color: Color::White,
        block: Some(root),
        parent: None,
        children: Vec::new(),
        depth: 0,
        flag: false,
        label: 0,
    }];
    let mut head = 0;
    while head < vertices.len() {
        let (color, block) = (vertices[head].color, vertices[head].block.expect("set"));
        let kids = match color {
            Color::White => &white_children[block],
            Color::Black => &black_children[block],
            Color::Grey => &grey_children[block],
        };
        for &(_, b) in kids {
            let idx = vertices.len();
            vertices.push(LabeledVertex {
                color: color.next(),
                block: Some(b),
                parent: Some(head),
                children: Vec::new(),
                depth: vertices[head].depth + 1,
                flag: false,
                label: 0,
            });
            vertices[head].children.push(idx);
        }
        head += 1;
    }
    if vertices.len() != p1 + p2 + p3 {
        return Err(Error::Internal(format!(
            "last-passage tree reaches {} of {} blocks",
            vertices.len(),
            p1 + p2 + p3
        )));
    }

    // a triangle sits on v when the last-passage triangles of v and its rightmost child coincide
    let a3 = pc.alpha3();
    for v in 1..vertices.len() {
        let Some(&last) = vertices[v].children.last() else {
            continue;
        };
        let (b, c) = (vertices[v].block.expect("set"), vertices[last].block.expect("set"));
        vertices[v].flag = match vertices[v].color {
            Color::White => m.black_triangles[c] == m.white[b],
            Color::Black => a3.apply(m.grey[c]) == m.black_triangles[b],
            Color::Grey => m.white[c] == a3.apply(m.grey[b]),
        };
    }
    Ok(LabeledTree::finish(vertices))
}
