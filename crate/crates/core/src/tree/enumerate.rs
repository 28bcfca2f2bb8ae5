use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use super::{CactusTree, Color, TreeProfile};
use crate::{Error, Result, DEFAULT_MAX_TREE_VERTICES};

type Counts = [u8; 6];

/// Every valid cactus tree with exactly profile `pr`, with the default vertex limit.
pub fn enumerate_ct(pr: TreeProfile) -> Result<Vec<CactusTree>> {
    enumerate_ct_with_limit(pr, DEFAULT_MAX_TREE_VERTICES)
}

/// Every valid cactus tree with exactly profile `pr`.
///
/// Trees are built recursively: a vertex, then its ordered forest of children,
/// the forest being split into a prefix forest and its last tree. Results are
/// memoized per (color, root flag, remaining profile), so the output order is
/// deterministic and duplicate-free.
pub fn enumerate_ct_with_limit(pr: TreeProfile, limit: usize) -> Result<Vec<CactusTree>> {
    if pr.vertex_count() > limit {
        return Err(Error::LimitExceeded {
            requested: pr.vertex_count(),
            limit,
        });
    }
    let arr = pr.to_array();
    if arr.iter().any(|&x| x > u8::MAX as u32) {
        return Err(Error::LimitExceeded {
            requested: *arr.iter().max().unwrap() as usize,
            limit: u8::MAX as usize,
        });
    }
    let counts = arr.map(|x| x as u8);
    let mut gen = Generator::default();
    Ok(gen.vertex(Color::White, false, counts).as_ref().clone())
}

/// `(color, flag, counts)`; for forests the flag slot holds `last_plain`.
type Key = (Color, bool, Counts);

#[derive(Default)]
struct Generator {
    vertices: BTreeMap<Key, Rc<Vec<CactusTree>>>,
    forests: BTreeMap<Key, Rc<Vec<Vec<CactusTree>>>>,
}

impl Generator {
    /// Subtrees rooted at a `color` vertex with the given root flag using exactly `k`.
    fn vertex(&mut self, color: Color, flag: bool, k: Counts) -> Rc<Vec<CactusTree>> {
        if let Some(hit) = self.vertices.get(&(color, flag, k)) {
            return hit.clone();
        }
        let c = color.index();
        let mut out = Vec::new();
        if k[c] >= 1 && (!flag || k[3 + c] >= 1) {
            let mut rest = k;
            rest[c] -= 1;
            if flag {
                rest[3 + c] -= 1;
            }
            let forests = self.forest(color.next(), flag, rest);
            for children in forests.iter() {
                if flag && children.is_empty() {
                    continue;
                }
                out.push(CactusTree::node(color, flag, children.clone()));
            }
        }
        let out = Rc::new(out);
        self.vertices.insert((color, flag, k), out.clone());
        out
    }

    /// Ordered forests of `color` trees using exactly `k`; when `last_plain`, the
    /// last tree's root is unflagged.
    fn forest(&mut self, color: Color, last_plain: bool, k: Counts) -> Rc<Vec<Vec<CactusTree>>> {
        if let Some(hit) = self.forests.get(&(color, last_plain, k)) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if k == [0; 6] {
            out.push(Vec::new());
        } else if k[color.index()] >= 1 {
            for last in sub_vectors(k) {
                if last[color.index()] == 0 {
                    continue;
                }
                let mut prefix = [0u8; 6];
                for i in 0..6 {
                    prefix[i] = k[i] - last[i];
                }
                let flags: &[bool] = if last_plain { &[false] } else { &[false, true] };
                for &flag in flags {
                    let tails = self.vertex(color, flag, last);
                    if tails.is_empty() {
                        continue;
                    }
                    let heads = self.forest(color, false, prefix);
                    for head in heads.iter() {
                        for tail in tails.iter() {
                            let mut f = head.clone();
                            f.push(tail.clone());
                            out.push(f);
                        }
                    }
                }
            }
        }
        let out = Rc::new(out);
        self.forests.insert((color, last_plain, k), out.clone());
        out
    }
}

/// All `v` with `0 ≤ v ≤ k` componentwise, in lexicographic order.
fn sub_vectors(k: Counts) -> Vec<Counts> {
    let mut out = vec![[0u8; 6]];
    for i in 0..6 {
        let mut next = Vec::with_capacity(out.len() * (k[i] as usize + 1));
        for v in &out {
            for x in 0..=k[i] {
                let mut w = *v;
                w[i] = x;
                next.push(w);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    /// Independent oracle: generate every tree with at most `v` vertices by
    /// brute-force growth (adding one child at any position), then all flag
    /// assignments, and keep the valid ones.
    fn all_trees_oracle(max_vertices: usize) -> BTreeSet<CactusTree> {
        fn grow(t: &CactusTree) -> Vec<CactusTree> {
            let mut out = Vec::new();
            for pos in 0..=t.children.len() {
                let mut u = t.clone();
                u.children.insert(pos, CactusTree::leaf(t.color.next()));
                out.push(u);
            }
            for i in 0..t.children.len() {
                for g in grow(&t.children[i]) {
                    let mut u = t.clone();
                    u.children[i] = g;
                    out.push(u);
                }
            }
            out
        }
        fn flaggings(t: &CactusTree) -> Vec<CactusTree> {
            let mut forests: Vec<Vec<CactusTree>> = vec![Vec::new()];
            for child in &t.children {
                let options = flaggings(child);
                let mut next = Vec::new();
                for f in &forests {
                    for o in &options {
                        let mut g = f.clone();
                        g.push(o.clone());
                        next.push(g);
                    }
                }
                forests = next;
            }
            let mut out = Vec::new();
            for f in forests {
                for flag in [false, true] {
                    out.push(CactusTree::node(t.color, flag, f.clone()));
                }
            }
            out
        }
        let mut shapes = BTreeSet::new();
        let mut frontier = vec![CactusTree::leaf(Color::White)];
        shapes.insert(frontier[0].clone());
        for _ in 1..max_vertices {
            let mut next = Vec::new();
            for t in &frontier {
                for g in grow(t) {
                    if shapes.insert(g.clone()) {
                        next.push(g);
                    }
                }
            }
            frontier = next;
        }
        shapes
            .iter()
            .flat_map(flaggings)
            .filter(|t| t.validate().is_ok())
            .collect()
    }

    #[test]
    fn spot_values() {
        assert_eq!(enumerate_ct(TreeProfile::new(1, 1, 1, 0, 0, 0)).unwrap().len(), 1);
        assert_eq!(enumerate_ct(TreeProfile::new(2, 1, 1, 0, 1, 1)).unwrap().len(), 0);
        for k in 0..6 {
            assert_eq!(enumerate_ct(TreeProfile::new(1, k, 0, 0, 0, 0)).unwrap().len(), 1);
        }
        assert_eq!(enumerate_ct(TreeProfile::new(0, 1, 0, 0, 0, 0)).unwrap().len(), 0);
        assert!(enumerate_ct(TreeProfile::new(4, 4, 3, 0, 0, 0)).is_err());
    }

    #[test]
    fn matches_brute_force_growth() {
        let oracle = all_trees_oracle(6);
        let mut by_profile: BTreeMap<TreeProfile, BTreeSet<CactusTree>> = BTreeMap::new();
        for t in oracle {
            by_profile.entry(t.profile()).or_default().insert(t);
        }
        let mut seen = 0;
        for p1 in 0..=6u32 {
            for p2 in 0..=6 - p1 {
                for p3 in 0..=6 - p1 - p2 {
                    for a in 0..3 {
                        for b in 0..3 {
                            for c in 0..3 {
                                let pr = TreeProfile::new(p1, p2, p3, a, b, c);
                                let got = enumerate_ct(pr).unwrap();
                                let set: BTreeSet<_> = got.iter().cloned().collect();
                                assert_eq!(set.len(), got.len(), "duplicates at {pr}");
                                let expected = by_profile.remove(&pr).unwrap_or_default();
                                assert_eq!(set, expected, "profile {pr}");
                                seen += got.len();
                            }
                        }
                    }
                }
            }
        }
        assert!(by_profile.is_empty());
        assert!(seen > 100);
    }

    #[test]
    fn deterministic_order() {
        let pr = TreeProfile::new(2, 2, 2, 1, 1, 0);
        let first = enumerate_ct(pr).unwrap();
        assert_eq!(first, enumerate_ct(pr).unwrap());
        assert!(first.iter().all(|t| t.validate().is_ok() && t.profile() == pr));
    }
}
