//! Independent brute-force oracles. None of these call into the solvers or
//! the canonical search they are used to check.

#![allow(dead_code)]

use bkcheck::Graph;

/// Largest clique by scanning every vertex subset.
pub fn brute_omega(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 0u64..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let clique = vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if clique {
            best = size;
        }
    }
    best
}

/// Whether some assignment of `k` colours, vertex by vertex, is proper.
pub fn brute_colorable(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, k: usize, v: usize, colors: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|w| !g.has_edge(v, w) || colors[w] != c) {
                colors.push(c);
                if rec(g, k, v + 1, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    rec(g, k, 0, &mut Vec::new())
}

pub fn brute_chi(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| brute_colorable(g, k)).expect("n colours always suffice")
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

#[allow(clippy::needless_range_loop)]
fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

/// Number of labelled graphs on `n` vertices up to isomorphism, counted by
/// averaging `2^(pair orbits)` over all permutations.
pub fn burnside_count(n: usize) -> u64 {
    let idx = pair_index(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let perms = permutations(n);
    let mut total: u64 = 0;
    for p in &perms {
        let mut seen = vec![false; pairs];
        let mut orbits = 0;
        for i in 0..n {
            for j in i + 1..n {
                if seen[idx[i][j]] {
                    continue;
                }
                orbits += 1;
                let (mut a, mut b) = (i, j);
                while !seen[idx[a][b]] {
                    seen[idx[a][b]] = true;
                    (a, b) = (p[a], p[b]);
                }
            }
        }
        total += 1 << orbits;
    }
    total / perms.len() as u64
}

/// Every labelled graph on `n` vertices reduced to its least relabelled
/// pair mask; the distinct values are the isomorphism classes.
pub fn brute_min_masks(n: usize) -> std::collections::BTreeSet<u64> {
    let idx = pair_index(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let perms = permutations(n);
    let mut out = std::collections::BTreeSet::new();
    let mut done = vec![false; 1 << pairs];
    for mask in 0u64..1 << pairs {
        if done[mask as usize] {
            continue;
        }
        let mut orbit = Vec::with_capacity(perms.len());
        for p in &perms {
            let mut m = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    if mask >> idx[i][j] & 1 == 1 {
                        m |= 1 << idx[p[i]][p[j]];
                    }
                }
            }
            orbit.push(m);
        }
        for &m in &orbit {
            done[m as usize] = true;
        }
        out.insert(*orbit.iter().min().unwrap());
    }
    out
}

/// The least relabelled pair mask of one graph, comparable with
/// [`brute_min_masks`].
pub fn min_mask(g: &Graph) -> u64 {
    let n = g.n();
    let idx = pair_index(n);
    permutations(n)
        .iter()
        .map(|p| {
            let mut m = 0u64;
            for (a, b) in g.edges() {
                m |= 1 << idx[p[a]][p[b]];
            }
            m
        })
        .min()
        .unwrap()
}

/// Whether `pattern` occurs induced in `g`, by trying every injective map.
pub fn brute_contains(g: &Graph, pattern: &Graph) -> bool {
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| h.has_edge(i, j) == g.has_edge(v, map[j])) {
                map.push(v);
                if rec(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(g, pattern, &mut Vec::new())
}
