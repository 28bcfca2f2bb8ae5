//! JSON documents for partitioned cacti, cactus trees and image tuples.
//!
//! Permutations are one-line image arrays (`[2,3,4,1]`), partitions are arrays
//! of blocks, sets are ascending arrays. Unknown fields are rejected.

use cactus3_core::algebra::{Permutation, SetPartition};
use cactus3_core::bijection::ImageTuple;
use cactus3_core::cactus::{FactorTriple, PartitionedCactus};
use cactus3_core::tree::{CactusTree, Color, TreeProfile, TreeViolation, TreeViolationKind};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CactusDoc {
    pub n: usize,
    pub alpha1: Vec<u32>,
    pub alpha2: Vec<u32>,
    pub pi1: Vec<Vec<u32>>,
    pub pi2: Vec<Vec<u32>>,
    pub pi3: Vec<Vec<u32>>,
    /// Index into `pi1`, as written, of the block containing 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_block_hint: Option<usize>,
}

/// Just the factors; any extra fields (such as partitions) are ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleDoc {
    pub n: usize,
    pub alpha1: Vec<u32>,
    pub alpha2: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorDoc {
    White,
    Black,
    Grey,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeNodeDoc {
    pub color: ColorDoc,
    pub flag: bool,
    #[serde(default)]
    pub children: Vec<TreeNodeDoc>,
}

/// A tree with its profile `[p1, p2, p3, a, b, c]` as a header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeDoc {
    pub profile: [u32; 6],
    pub tree: TreeNodeDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleDoc {
    pub n: usize,
    pub p: [u32; 3],
    pub tree: TreeNodeDoc,
    pub s0: Vec<u32>,
    pub s1: Vec<u32>,
    pub s2: Vec<u32>,
    pub chi: Vec<u32>,
    pub sigma1: Vec<u32>,
    pub sigma2: Vec<u32>,
}

fn permutation(field: &'static str, n: usize, images: &[u32]) -> Result<Permutation> {
    if images.len() != n {
        return Err(Error::field(
            field,
            format!("has {} entries, expected {n}", images.len()),
        ));
    }
    Permutation::from_images(images.to_vec()).map_err(|e| Error::field(field, e))
}

fn partition(field: &'static str, n: usize, blocks: &[Vec<u32>]) -> Result<SetPartition> {
    SetPartition::from_blocks(n, blocks.to_vec()).map_err(|e| Error::field(field, e))
}

impl CactusDoc {
    pub fn from_cactus(pc: &PartitionedCactus) -> Self {
        let blocks = |p: &SetPartition| p.blocks().to_vec();
        Self {
            n: pc.n(),
            alpha1: pc.alpha1().images().to_vec(),
            alpha2: pc.alpha2().images().to_vec(),
            pi1: blocks(pc.pi1()),
            pi2: blocks(pc.pi2()),
            pi3: blocks(pc.pi3()),
            root_block_hint: Some(pc.root_block()),
        }
    }

    pub fn to_cactus(&self) -> Result<PartitionedCactus> {
        let n = self.n;
        if n == 0 {
            return Err(Error::field("n", "must be at least 1"));
        }
        if let Some(hint) = self.root_block_hint {
            match self.pi1.get(hint) {
                Some(block) if block.contains(&1) => {}
                _ => {
                    return Err(Error::field(
                        "root_block_hint",
                        format!("block {hint} of pi1 does not contain 1"),
                    ))
                }
            }
        }
        let pc = PartitionedCactus::assemble(
            permutation("alpha1", n, &self.alpha1)?,
            permutation("alpha2", n, &self.alpha2)?,
            partition("pi1", n, &self.pi1)?,
            partition("pi2", n, &self.pi2)?,
            partition("pi3", n, &self.pi3)?,
        )?;
        pc.validate().map_err(cactus3_core::Error::from)?;
        Ok(pc)
    }
}

impl TripleDoc {
    pub fn to_triple(&self) -> Result<FactorTriple> {
        let n = self.n;
        Ok(FactorTriple::new(
            permutation("alpha1", n, &self.alpha1)?,
            permutation("alpha2", n, &self.alpha2)?,
        )?)
    }
}

impl From<Color> for ColorDoc {
    fn from(c: Color) -> Self {
        match c {
            Color::White => Self::White,
            Color::Black => Self::Black,
            Color::Grey => Self::Grey,
        }
    }
}

impl From<ColorDoc> for Color {
    fn from(c: ColorDoc) -> Self {
        match c {
            ColorDoc::White => Self::White,
            ColorDoc::Black => Self::Black,
            ColorDoc::Grey => Self::Grey,
        }
    }
}

impl From<&CactusTree> for TreeNodeDoc {
    fn from(t: &CactusTree) -> Self {
        Self {
            color: t.color.into(),
            flag: t.flag,
            children: t.children.iter().map(Self::from).collect(),
        }
    }
}

impl From<&TreeNodeDoc> for CactusTree {
    fn from(t: &TreeNodeDoc) -> Self {
        CactusTree::node(
            t.color.into(),
            t.flag,
            t.children.iter().map(CactusTree::from).collect(),
        )
    }
}

impl TreeDoc {
    pub fn from_tree(t: &CactusTree) -> Self {
        Self {
            profile: t.profile().to_array(),
            tree: t.into(),
        }
    }

    /// Validates the tree and checks it against the header.
    pub fn to_tree(&self) -> Result<CactusTree> {
        let t = CactusTree::from(&self.tree);
        t.validate().map_err(cactus3_core::Error::from)?;
        let expected = TreeProfile::from_array(self.profile);
        let found = t.profile();
        if found != expected {
            let v = TreeViolation::new(Vec::new(), TreeViolationKind::ProfileMismatch { expected, found });
            return Err(Error::field("profile", v));
        }
        Ok(t)
    }
}

impl TupleDoc {
    pub fn from_tuple(t: &ImageTuple) -> Self {
        Self {
            n: t.n,
            p: t.p,
            tree: (&t.tau).into(),
            s0: t.s0.clone(),
            s1: t.s1.clone(),
            s2: t.s2.clone(),
            chi: t.chi.clone(),
            sigma1: t.sigma1.images().to_vec(),
            sigma2: t.sigma2.images().to_vec(),
        }
    }

    pub fn to_tuple(&self) -> Result<ImageTuple> {
        let perm = |field, images: &[u32]| permutation(field, images.len(), images);
        let t = ImageTuple {
            n: self.n,
            p: self.p,
            tau: CactusTree::from(&self.tree),
            s0: self.s0.clone(),
            s1: self.s1.clone(),
            s2: self.s2.clone(),
            chi: self.chi.clone(),
            sigma1: perm("sigma1", &self.sigma1)?,
            sigma2: perm("sigma2", &self.sigma2)?,
        };
        t.validate()?;
        Ok(t)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(what: &'static str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|source| Error::Json { what, source })
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn parse_cactus(text: &str) -> Result<PartitionedCactus> {
    parse::<CactusDoc>("cactus", text)?.to_cactus()
}

pub fn parse_triple(text: &str) -> Result<FactorTriple> {
    parse::<TripleDoc>("cactus", text)?.to_triple()
}

pub fn parse_tree(text: &str) -> Result<CactusTree> {
    parse::<TreeDoc>("tree", text)?.to_tree()
}

pub fn parse_tuple(text: &str) -> Result<ImageTuple> {
    parse::<TupleDoc>("tuple", text)?.to_tuple()
}

pub fn cactus_to_json(pc: &PartitionedCactus) -> String {
    render(&CactusDoc::from_cactus(pc))
}

pub fn tree_to_json(t: &CactusTree) -> String {
    render(&TreeDoc::from_tree(t))
}

pub fn tuple_to_json(t: &ImageTuple) -> String {
    render(&TupleDoc::from_tuple(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cactus3_core::bijection::theta_forward;
    use cactus3_core::cactus::enumerate_cc;
    use cactus3_core::tree::enumerate_ct;

    const PC1: &str = r#"{"n":5,"alpha1":[1,4,3,2,5],"alpha2":[1,3,2,5,4],
        "pi1":[[2,4,5],[1,3]],"pi2":[[1,2,3],[4,5]],"pi3":[[3],[1,2,4,5]],"root_block_hint":1}"#;

    #[test]
    fn cactus_round_trip() {
        let pc = parse_cactus(PC1).unwrap();
        assert_eq!(pc.block_counts(), [2, 2, 2]);
        let text = cactus_to_json(&pc);
        assert!(text.contains("\"root_block_hint\": 0"));
        assert_eq!(parse_cactus(&text).unwrap(), pc);
        for pc in enumerate_cc([2, 1, 2], 3, 7).unwrap() {
            assert_eq!(parse_cactus(&cactus_to_json(&pc)).unwrap(), pc);
        }
    }

    #[test]
    fn cactus_errors_name_the_field() {
        let bad_hint = PC1.replace("\"root_block_hint\":1", "\"root_block_hint\":0");
        assert!(parse_cactus(&bad_hint)
            .unwrap_err()
            .to_string()
            .contains("root_block_hint"));
        let bad_perm = PC1.replace("[1,4,3,2,5]", "[1,4,3,2,2]");
        assert!(parse_cactus(&bad_perm).unwrap_err().to_string().contains("alpha1"));
        let short = PC1.replace("[1,3,2,5,4]", "[1,3,2,5]");
        assert!(parse_cactus(&short).unwrap_err().to_string().contains("alpha2"));
        let missing = r#"{"n":1,"alpha1":[1],"pi1":[[1]],"pi2":[[1]],"pi3":[[1]]}"#;
        assert!(parse_cactus(missing).unwrap_err().to_string().contains("alpha2"));
        let straddle = PC1.replace("[[3],[1,2,4,5]]", "[[3,5],[1,2,4]]");
        assert!(matches!(parse_cactus(&straddle), Err(Error::Core(_))));
    }

    #[test]
    fn tree_round_trip_and_header() {
        for t in enumerate_ct(TreeProfile::new(2, 2, 2, 1, 0, 0)).unwrap() {
            let text = tree_to_json(&t);
            assert_eq!(parse_tree(&text).unwrap(), t);
        }
        let text = r#"{"profile":[1,1,2,0,0,0],"tree":{"color":"white","flag":false,
            "children":[{"color":"black","flag":false,"children":[{"color":"grey","flag":false}]}]}}"#;
        assert!(parse_tree(text).unwrap_err().to_string().contains("profile"));
        let purple = text.replace("\"grey\"", "\"purple\"");
        assert!(matches!(parse_tree(&purple), Err(Error::Json { .. })));
    }

    #[test]
    fn tuple_round_trip() {
        let pc = parse_cactus(PC1).unwrap();
        let tup = theta_forward(&pc).unwrap();
        let text = tuple_to_json(&tup);
        assert_eq!(parse_tuple(&text).unwrap(), tup);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["s0"], serde_json::json!([3, 4]));
        assert_eq!(doc["chi"], serde_json::json!([5]));
        assert_eq!(doc["sigma2"], serde_json::json!([2, 1]));
        assert_eq!(doc["tree"]["color"], "white");
    }

    #[test]
    fn triple_ignores_partitions() {
        let t = parse_triple(PC1).unwrap();
        assert_eq!(t.cycle_type(), [4, 3, 4]);
    }
}
