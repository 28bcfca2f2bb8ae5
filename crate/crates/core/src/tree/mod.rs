//! Rooted plane cactus trees.
//!
//! Levels are colored cyclically white → black → grey → white, starting from a
//! white root. A triangle is recorded as a flag on its middle vertex `v`: the
//! triangle joins the parent of `v`, `v` and the rightmost child of `v`. Two
//! triangles never share a tree edge, so the rightmost child of a flagged vertex
//! is itself unflagged.

mod enumerate;
mod formula;
mod gf;

use alloc::vec::Vec;
use core::fmt;

pub use enumerate::{enumerate_ct, enumerate_ct_with_limit};
pub use formula::ct_count_formula;
pub use gf::{gf_coefficients, GfCaps, GF_TERM_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    White,
    Black,
    Grey,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::White, Color::Black, Color::Grey];

    /// Color of the children of a vertex of this color.
    pub fn next(self) -> Self {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::Grey,
            Color::Grey => Color::White,
        }
    }

    /// 0, 1, 2 for white, black, grey.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::White => "white",
            Color::Black => "black",
            Color::Grey => "grey",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CactusTree {
    pub color: Color,
    pub flag: bool,
    pub children: Vec<CactusTree>,
}

impl CactusTree {
    pub fn leaf(color: Color) -> Self {
        Self {
            color,
            flag: false,
            children: Vec::new(),
        }
    }

    pub fn node(color: Color, flag: bool, children: Vec<CactusTree>) -> Self {
        Self { color, flag, children }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(CactusTree::vertex_count).sum::<usize>()
    }

    /// Counts colors and flags. Meaningful on valid trees.
    pub fn profile(&self) -> TreeProfile {
        let mut counts = [0u32; 6];
        self.tally(&mut counts);
        TreeProfile::from_array(counts)
    }

    fn tally(&self, counts: &mut [u32; 6]) {
        let c = self.color.index();
        counts[c] += 1;
        if self.flag {
            counts[3 + c] += 1;
        }
        for child in &self.children {
            child.tally(counts);
        }
    }

    /// Checks every structural invariant, reporting the first offending vertex.
    pub fn validate(&self) -> Result<(), TreeViolation> {
        if self.color != Color::White {
            return Err(TreeViolation::new(Vec::new(), TreeViolationKind::RootNotWhite));
        }
        if self.flag {
            return Err(TreeViolation::new(Vec::new(), TreeViolationKind::FlaggedRoot));
        }
        let mut path = Vec::new();
        self.check_below(&mut path)
    }

    fn check_below(&self, path: &mut Vec<usize>) -> Result<(), TreeViolation> {
        if self.flag && self.children.is_empty() {
            return Err(TreeViolation::new(path.clone(), TreeViolationKind::FlaggedLeaf));
        }
        for (k, child) in self.children.iter().enumerate() {
            path.push(k);
            if child.color != self.color.next() {
                return Err(TreeViolation::new(
                    path.clone(),
                    TreeViolationKind::WrongColor {
                        expected: self.color.next(),
                        found: child.color,
                    },
                ));
            }
            if self.flag && child.flag && k + 1 == self.children.len() {
                return Err(TreeViolation::new(path.clone(), TreeViolationKind::SharedTriangleEdge));
            }
            child.check_below(path)?;
            path.pop();
        }
        Ok(())
    }
}

/// Free-function form of [`CactusTree::validate`].
pub fn validate_tree(t: &CactusTree) -> Result<(), TreeViolation> {
    t.validate()
}

/// Free-function form of [`CactusTree::profile`].
pub fn profile(t: &CactusTree) -> TreeProfile {
    t.profile()
}

/// Vertex counts per color and triangle counts: `a`, `b`, `c` count flagged
/// white, black and grey vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeProfile {
    pub p1: u32,
    pub p2: u32,
    pub p3: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl TreeProfile {
    pub const fn new(p1: u32, p2: u32, p3: u32, a: u32, b: u32, c: u32) -> Self {
        Self { p1, p2, p3, a, b, c }
    }

    pub fn from_array([p1, p2, p3, a, b, c]: [u32; 6]) -> Self {
        Self { p1, p2, p3, a, b, c }
    }

    pub fn to_array(self) -> [u32; 6] {
        [self.p1, self.p2, self.p3, self.a, self.b, self.c]
    }

    pub fn vertex_count(self) -> usize {
        (self.p1 + self.p2 + self.p3) as usize
    }
}

impl fmt::Display for TreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{})",
            self.p1, self.p2, self.p3, self.a, self.b, self.c
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeViolationKind {
    RootNotWhite,
    FlaggedRoot,
    FlaggedLeaf,
    WrongColor { expected: Color, found: Color },
    SharedTriangleEdge,
    ProfileMismatch { expected: TreeProfile, found: TreeProfile },
}

impl fmt::Display for TreeViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RootNotWhite => f.write_str("root is not white"),
            Self::FlaggedRoot => f.write_str("root carries a triangle flag"),
            Self::FlaggedLeaf => f.write_str("flagged vertex has no children"),
            Self::WrongColor { expected, found } => write!(f, "expected a {expected} child, found {found}"),
            Self::SharedTriangleEdge => f.write_str("rightmost child of a flagged vertex is flagged"),
            Self::ProfileMismatch { expected, found } => {
                write!(f, "profile {found} does not match declared {expected}")
            }
        }
    }
}

/// Invalid tree. `path` lists child indices from the root to the offending vertex.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("tree vertex at {path:?}: {kind}")]
pub struct TreeViolation {
    pub path: Vec<usize>,
    pub kind: TreeViolationKind,
}

impl TreeViolation {
    pub fn new(path: Vec<usize>, kind: TreeViolationKind) -> Self {
        Self { path, kind }
    }
}
