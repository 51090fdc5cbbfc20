//! Independent reference enumerations.
//!
//! These are deliberately naive constructions used to validate the
//! closed-form counting routines and the census machinery. They share no
//! code with the paths they check.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

/// Counts perfect matchings on `m` points by direct recursion.
pub fn count_matchings_brute(m: usize) -> u64 {
    fn go(free: &mut Vec<bool>) -> u64 {
        let s = match free.iter().position(|&f| f) {
            None => return 1,
            Some(s) => s,
        };
        free[s] = false;
        let mut total = 0;
        for t in s + 1..free.len() {
            if free[t] {
                free[t] = false;
                total += go(free);
                free[t] = true;
            }
        }
        free[s] = true;
        total
    }
    if m % 2 != 0 {
        return 0;
    }
    go(&mut vec![true; m])
}

/// Visits every fixed-point-free involution on `m` points, in
/// lexicographic order of the pairing table.
pub fn for_each_matching<F: FnMut(&[usize])>(m: usize, mut f: F) {
    fn go<F: FnMut(&[usize])>(pairing: &mut Vec<usize>, f: &mut F) {
        let s = match pairing.iter().position(|&x| x == usize::MAX) {
            None => {
                f(pairing);
                return;
            }
            Some(s) => s,
        };
        for t in s + 1..pairing.len() {
            if pairing[t] == usize::MAX {
                pairing[s] = t;
                pairing[t] = s;
                go(pairing, f);
                pairing[s] = usize::MAX;
                pairing[t] = usize::MAX;
            }
        }
    }
    if m % 2 != 0 {
        return;
    }
    go(&mut vec![usize::MAX; m], &mut f);
}

/// All fixed-point-free involutions on `m` points.
pub fn all_matchings(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_matching(m, |p| out.push(p.to_vec()));
    out
}

/// Counts rooted simplicial triangulations of the disk with `n` triangles
/// and `j + 3` boundary vertices by exhaustive construction.
///
/// Objects are peeled at the root: the triangle on the current root edge
/// either has a fresh apex or an apex on the region boundary, splitting
/// the region in two. Each triangulation corresponds to exactly one
/// construction path, so no isomorphism rejection is needed. Simpliciality
/// is enforced explicitly: no loops (vertex labels never repeat within a
/// region) and no two edges with the same endpoints.
pub fn count_rooted_disk_triangulations(n: usize, j: usize) -> u64 {
    struct State {
        edges: BTreeSet<(u32, u32)>,
        next_vertex: u32,
        count: u64,
    }

    fn edge_key(a: u32, b: u32) -> (u32, u32) {
        (a.min(b), a.max(b))
    }

    fn min_triangles(regions: &[Vec<u32>]) -> usize {
        regions.iter().map(|r| r.len() - 2).sum()
    }

    fn go(regions: &mut Vec<Vec<u32>>, budget: usize, st: &mut State) {
        let region = match regions.pop() {
            None => {
                if budget == 0 {
                    st.count += 1;
                }
                return;
            }
            Some(r) => r,
        };
        let m = region.len();
        let need = (m - 2) + min_triangles(regions);
        if budget < need || (budget - need) % 2 != 0 {
            regions.push(region);
            return;
        }
        let x = region[0];
        let y = region[1];

        // Case A: fresh apex z; the region keeps one boundary component,
        // one vertex longer, rooted at (x, z).
        {
            let z = st.next_vertex;
            st.next_vertex += 1;
            st.edges.insert(edge_key(x, z));
            st.edges.insert(edge_key(z, y));
            let mut grown = Vec::with_capacity(m + 1);
            grown.push(x);
            grown.push(z);
            grown.extend_from_slice(&region[1..]);
            regions.push(grown);
            go(regions, budget - 1, st);
            regions.pop();
            st.edges.remove(&edge_key(x, z));
            st.edges.remove(&edge_key(z, y));
            st.next_vertex -= 1;
        }

        // Case B: apex z = region[i]. The edges (y, z) and (z, x) are
        // either existing boundary edges (when adjacent) or new chords.
        for i in 2..m {
            let z = region[i];
            let chord_yz = i > 2;
            let chord_zx = i < m - 1;
            if chord_yz && st.edges.contains(&edge_key(y, z)) {
                continue;
            }
            if chord_zx && st.edges.contains(&edge_key(z, x)) {
                continue;
            }
            if chord_yz {
                st.edges.insert(edge_key(y, z));
            }
            if chord_zx {
                st.edges.insert(edge_key(z, x));
            }
            let mut pushed = 0;
            if chord_yz {
                // Sub-region y .. z closed by the chord, rooted (z, y).
                let mut r1 = Vec::with_capacity(i + 1);
                r1.push(z);
                r1.extend_from_slice(&region[1..i]);
                regions.push(r1);
                pushed += 1;
            }
            if chord_zx {
                // Sub-region z .. x closed by the chord, rooted (x, z).
                let mut r2 = Vec::with_capacity(m - i + 1);
                r2.push(x);
                r2.extend_from_slice(&region[i..]);
                regions.push(r2);
                pushed += 1;
            }
            go(regions, budget - 1, st);
            for _ in 0..pushed {
                regions.pop();
            }
            if chord_yz {
                st.edges.remove(&edge_key(y, z));
            }
            if chord_zx {
                st.edges.remove(&edge_key(z, x));
            }
        }
        regions.push(region);
    }

    if n == 0 || j > n - 1 || (n - 1 - j) % 2 != 0 {
        return 0;
    }
    let b = (j + 3) as u32;
    let polygon: Vec<u32> = (0..b).collect();
    let mut edges = BTreeSet::new();
    for i in 0..b {
        edges.insert(edge_key(i, (i + 1) % b));
    }
    let mut st = State {
        edges,
        next_vertex: b,
        count: 0,
    };
    go(&mut vec![polygon], n, &mut st);
    st.count
}

/// A labeled multigraph with loops, used by the trivalent enumeration.
struct MultiGraph {
    v: usize,
    loops: Vec<u8>,
    adj: Vec<Vec<u8>>,
}

impl MultiGraph {
    /// Lexicographically minimal encoding over all vertex relabelings,
    /// built one vertex at a time with prefix pruning.
    fn canonical_form(&self) -> Vec<u8> {
        fn dfs(
            g: &MultiGraph,
            perm: &mut Vec<usize>,
            used: &mut [bool],
            encoding: &mut Vec<u8>,
            best: &mut Option<Vec<u8>>,
        ) {
            let d = perm.len();
            if d == g.v {
                match best {
                    None => *best = Some(encoding.clone()),
                    Some(b) => {
                        if encoding.as_slice() < b.as_slice() {
                            *b = encoding.clone();
                        }
                    }
                }
                return;
            }
            for cand in 0..g.v {
                if used[cand] {
                    continue;
                }
                let mark = encoding.len();
                encoding.push(g.loops[cand]);
                for &p in perm.iter() {
                    encoding.push(g.adj[p][cand]);
                }
                let keep = match best {
                    None => true,
                    Some(b) => encoding.as_slice() <= &b[..encoding.len()],
                };
                if keep {
                    perm.push(cand);
                    used[cand] = true;
                    dfs(g, perm, used, encoding, best);
                    used[cand] = false;
                    perm.pop();
                }
                encoding.truncate(mark);
            }
        }

        let mut best: Option<Vec<u8>> = None;
        let mut perm = Vec::with_capacity(self.v);
        let mut used = vec![false; self.v];
        let mut encoding = Vec::with_capacity(self.v * (self.v + 1) / 2);
        dfs(self, &mut perm, &mut used, &mut encoding, &mut best);
        best.expect("at least one labeling")
    }
}

/// Counts trivalent multigraphs (loops and parallel edges allowed, loops
/// contributing two to the degree) on `v` vertices, up to isomorphism.
/// Disconnected graphs are included, matching the gluing model.
pub fn count_trivalent_multigraphs(v: usize) -> u64 {
    assert!(v >= 2 && v % 2 == 0 && v <= 8, "enumeration guard");

    fn vertex_done(
        g: &mut MultiGraph,
        rem: &mut Vec<u8>,
        i: usize,
        classes: &mut BTreeSet<Vec<u8>>,
    ) {
        if rem[i] != 0 {
            return;
        }
        let next = i + 1;
        if next == g.v {
            if rem.iter().all(|&r| r == 0) {
                classes.insert(g.canonical_form());
            }
        } else {
            start_vertex(g, rem, next, classes);
        }
    }

    fn start_vertex(
        g: &mut MultiGraph,
        rem: &mut Vec<u8>,
        i: usize,
        classes: &mut BTreeSet<Vec<u8>>,
    ) {
        // Loop multiplicity at vertex i, then edges to later vertices.
        for l in 0..=1u8 {
            if 2 * l > rem[i] {
                break;
            }
            g.loops[i] = l;
            rem[i] -= 2 * l;
            fill_edges(g, rem, i, i + 1, classes);
            rem[i] += 2 * l;
            g.loops[i] = 0;
        }
    }

    fn fill_edges(
        g: &mut MultiGraph,
        rem: &mut Vec<u8>,
        i: usize,
        j: usize,
        classes: &mut BTreeSet<Vec<u8>>,
    ) {
        if j == g.v {
            vertex_done(g, rem, i, classes);
            return;
        }
        let max = rem[i].min(rem[j]);
        for k in 0..=max {
            g.adj[i][j] = k;
            g.adj[j][i] = k;
            rem[i] -= k;
            rem[j] -= k;
            fill_edges(g, rem, i, j + 1, classes);
            rem[i] += k;
            rem[j] += k;
            g.adj[i][j] = 0;
            g.adj[j][i] = 0;
        }
    }

    let mut classes = BTreeSet::new();
    let mut g = MultiGraph {
        v,
        loops: vec![0; v],
        adj: vec![vec![0; v]; v],
    };
    let mut rem = vec![3u8; v];
    start_vertex(&mut g, &mut rem, 0, &mut classes);
    classes.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        assert_eq!(count_matchings_brute(0), 1);
        assert_eq!(count_matchings_brute(2), 1);
        assert_eq!(count_matchings_brute(6), 15);
        assert_eq!(count_matchings_brute(8), 105);
        assert_eq!(all_matchings(6).len(), 15);
    }

    #[test]
    fn matchings_are_involutions() {
        for p in all_matchings(8) {
            for s in 0..8 {
                assert_ne!(p[s], s);
                assert_eq!(p[p[s]], s);
            }
        }
    }

    #[test]
    fn rooted_disk_triangulations_tiny() {
        // Bare triangle, rooted square, stellated triangle.
        assert_eq!(count_rooted_disk_triangulations(1, 0), 1);
        assert_eq!(count_rooted_disk_triangulations(2, 1), 2);
        assert_eq!(count_rooted_disk_triangulations(3, 0), 1);
        // Parity violations enumerate nothing.
        assert_eq!(count_rooted_disk_triangulations(2, 0), 0);
    }

    #[test]
    fn trivalent_two_vertices() {
        // Theta and dumbbell.
        assert_eq!(count_trivalent_multigraphs(2), 2);
    }
}
