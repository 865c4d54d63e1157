//! Literal, loop-based evaluations of every formula the library computes.
//!
//! Nothing here shares code with `mplex-core`: graphs are dense 0/1
//! matrices, sums run over all indices exactly as written, and shortest
//! paths come from Floyd–Warshall. Slow by design; meant for n ≤ 50.

#![allow(clippy::needless_range_loop)]

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

/// Dense adjacency matrix `x[i][j] ∈ {0, 1}` with a zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub n: usize,
    pub x: Vec<Vec<u8>>,
}

impl Matrix {
    pub fn empty(n: usize) -> Self {
        Matrix { n, x: vec![vec![0; n]; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = Matrix::empty(n);
        for &(i, j) in edges {
            assert!(i != j);
            m.x[i][j] = 1;
        }
        m
    }

    pub fn union(&self, other: &Matrix) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                m.x[i][j] |= other.x[i][j];
            }
        }
        m
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.x[i][j] == 1 {
                    e.push((i, j));
                }
            }
        }
        e
    }

    pub fn x(&self, i: usize, j: usize) -> f64 {
        f64::from(self.x[i][j])
    }

    pub fn d_out(&self, i: usize) -> f64 {
        (0..self.n).map(|j| self.x(i, j)).sum()
    }

    pub fn d_in(&self, i: usize) -> f64 {
        (0..self.n).map(|j| self.x(j, i)).sum()
    }

    /// Same graph with node `i` renamed `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Matrix {
        let mut m = Matrix::empty(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.x[perm[i]][perm[j]] = self.x[i][j];
            }
        }
        m
    }
}

/// `a / b`, or 0 when `b = 0` (both-empty Jaccard and empty denominators).
fn ratio(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        0.0
    } else {
        a / b
    }
}

pub fn rec(g: &Matrix, i: usize) -> f64 {
    (0..g.n).map(|j| g.x(i, j) * g.x(j, i)).sum()
}

/// `r_i(α, β) = Σ_j xα_ij xβ_ji / (dα_out(i) + dβ_in(i) − Σ_j xα_ij xβ_ji)`.
pub fn cross_r(a: &Matrix, b: &Matrix, i: usize) -> f64 {
    let common: f64 = (0..a.n).map(|j| a.x(i, j) * b.x(j, i)).sum();
    ratio(common, a.d_out(i) + b.d_in(i) - common)
}

pub fn r(g: &Matrix, i: usize) -> f64 {
    cross_r(g, g, i)
}

pub fn cyc(g: &Matrix, i: usize) -> f64 {
    let mut s = 0.0;
    for j in 0..g.n {
        for h in 0..g.n {
            s += g.x(i, j) * g.x(j, h) * g.x(h, i);
        }
    }
    s
}

/// `tc_i(α, β) = (1/dw_in(i)) Σ_h xw_hi · Σ_j xα_ij xβ_jh / (dα_out(i) + dβ_in(h) − Σ_j xα_ij xβ_jh)`.
pub fn cross_tc(a: &Matrix, b: &Matrix, w: &Matrix, i: usize) -> f64 {
    let mut s = 0.0;
    for h in 0..a.n {
        let common: f64 = (0..a.n).map(|j| a.x(i, j) * b.x(j, h)).sum();
        s += w.x(h, i) * ratio(common, a.d_out(i) + b.d_in(h) - common);
    }
    ratio(s, w.d_in(i))
}

pub fn tc(g: &Matrix, i: usize) -> f64 {
    cross_tc(g, g, g, i)
}

pub fn plt(g: &Matrix, i: usize) -> f64 {
    let mut s = 0.0;
    for j in 0..g.n {
        for h in 0..g.n {
            s += g.x(i, j) * g.x(j, h) * g.x(i, h);
        }
    }
    s
}

/// `tp_i(α, β) = (1/dw_out(i)) Σ_j xw_ij · Σ_h xα_ih xβ_jh / (dα_out(i) + dβ_out(j) − Σ_h xα_ih xβ_jh)`.
pub fn cross_tp(a: &Matrix, b: &Matrix, w: &Matrix, i: usize) -> f64 {
    let mut s = 0.0;
    for j in 0..a.n {
        let common: f64 = (0..a.n).map(|h| a.x(i, h) * b.x(j, h)).sum();
        s += w.x(i, j) * ratio(common, a.d_out(i) + b.d_out(j) - common);
    }
    ratio(s, w.d_out(i))
}

pub fn tp(g: &Matrix, i: usize) -> f64 {
    cross_tp(g, g, g, i)
}

pub fn oi_out(a: &Matrix, b: &Matrix, i: usize) -> f64 {
    let common: f64 = (0..a.n).map(|j| a.x(i, j) * b.x(i, j)).sum();
    ratio(common, a.d_out(i) + b.d_out(i) - common)
}

pub fn oi_in(a: &Matrix, b: &Matrix, i: usize) -> f64 {
    let common: f64 = (0..a.n).map(|j| a.x(j, i) * b.x(j, i)).sum();
    ratio(common, a.d_in(i) + b.d_in(i) - common)
}

/// Number of distinct directed 3-cycles (as vertex-rotation classes).
pub fn distinct_three_cycles(g: &Matrix) -> usize {
    let mut count = 0;
    for i in 0..g.n {
        for j in 0..g.n {
            for h in 0..g.n {
                // count each cycle once, from its smallest vertex
                if i < j && i < h && j != h && g.x[i][j] == 1 && g.x[j][h] == 1 && g.x[h][i] == 1 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Attribute sets as sorted token lists.
pub fn attr_jaccard(a: &[String], b: &[String]) -> f64 {
    let common = a.iter().filter(|t| b.contains(t)).count() as f64;
    ratio(common, a.len() as f64 + b.len() as f64 - common)
}

pub fn att_out(g: &Matrix, attrs: &[Vec<String>], i: usize) -> f64 {
    let s: f64 = (0..g.n).map(|j| g.x(i, j) * attr_jaccard(&attrs[i], &attrs[j])).sum();
    ratio(s, g.d_out(i))
}

pub fn att_in(g: &Matrix, attrs: &[Vec<String>], i: usize) -> f64 {
    let s: f64 = (0..g.n).map(|j| g.x(j, i) * attr_jaccard(&attrs[i], &attrs[j])).sum();
    ratio(s, g.d_in(i))
}

pub fn att_baseline(attrs: &[Vec<String>]) -> f64 {
    let n = attrs.len();
    if n < 2 {
        return 0.0;
    }
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += attr_jaccard(&attrs[i], &attrs[j]);
        }
    }
    2.0 / (n as f64 * (n as f64 - 1.0)) * s
}

/// `reach[i][j]`: a directed path of length ≥ 0 leads from `i` to `j`.
pub fn reachability(g: &Matrix) -> Vec<Vec<bool>> {
    let n = g.n;
    let mut reach: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j || g.x[i][j] == 1).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    reach
}

/// SCC partition from mutual reachability, each class sorted, classes
/// ordered by smallest member.
pub fn scc_partition(g: &Matrix) -> Vec<Vec<usize>> {
    let reach = reachability(g);
    let mut assigned = vec![false; g.n];
    let mut classes = Vec::new();
    for i in 0..g.n {
        if assigned[i] {
            continue;
        }
        let class: Vec<usize> = (0..g.n).filter(|&j| reach[i][j] && reach[j][i]).collect();
        for &j in &class {
            assigned[j] = true;
        }
        classes.push(class);
    }
    classes
}

/// Floyd–Warshall over the subgraph induced by `members`; returns
/// (average over ordered distinct pairs, diameter), or `None` if some pair
/// is unreachable.
pub fn path_stats(g: &Matrix, members: &[usize]) -> Option<(f64, usize)> {
    let k = members.len();
    if k < 2 {
        return Some((0.0, 0));
    }
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; k]; k];
    for a in 0..k {
        d[a][a] = 0;
        for b in 0..k {
            if g.x[members[a]][members[b]] == 1 {
                d[a][b] = 1;
            }
        }
    }
    for m in 0..k {
        for a in 0..k {
            for b in 0..k {
                if d[a][m] + d[m][b] < d[a][b] {
                    d[a][b] = d[a][m] + d[m][b];
                }
            }
        }
    }
    let mut total = 0usize;
    let mut diam = 0usize;
    for a in 0..k {
        for b in 0..k {
            if a != b {
                if d[a][b] >= INF {
                    return None;
                }
                total += d[a][b];
                diam = diam.max(d[a][b]);
            }
        }
    }
    Some((total as f64 / (k * (k - 1)) as f64, diam))
}

pub fn undirected(g: &Matrix, i: usize, j: usize) -> bool {
    g.x[i][j] == 1 || g.x[j][i] == 1
}

/// `(total, closed per closing layer, closed by any)` by enumerating every
/// center and every unordered endpoint pair.
pub fn wedges(wedge: &Matrix, closing: &[&Matrix]) -> (u64, Vec<u64>, u64) {
    let n = wedge.n;
    let mut total = 0;
    let mut closed = vec![0u64; closing.len()];
    let mut any = 0;
    for c in 0..n {
        for i in 0..n {
            for k in i + 1..n {
                if i == c || k == c || !undirected(wedge, c, i) || !undirected(wedge, c, k) {
                    continue;
                }
                total += 1;
                let mut hit = false;
                for (l, m) in closing.iter().enumerate() {
                    if undirected(m, i, k) {
                        closed[l] += 1;
                        hit = true;
                    }
                }
                any += u64::from(hit);
            }
        }
    }
    (total, closed, any)
}

/// Pearson correlation of endpoint degrees over both orientations of every
/// undirected edge, from means and centered sums.
pub fn assortativity(g: &Matrix) -> Option<f64> {
    let n = g.n;
    let deg: Vec<f64> = (0..n).map(|i| (0..n).filter(|&j| undirected(g, i, j)).count() as f64).collect();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && undirected(g, i, j) {
                xs.push(deg[i]);
                ys.push(deg[j]);
            }
        }
    }
    if xs.is_empty() {
        return None;
    }
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let vx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let vy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    if vx == 0.0 || vy == 0.0 {
        None
    } else {
        Some(cov / (vx * vy).sqrt())
    }
}

/// Deterministic test-corpus source, deliberately a different generator
/// from the library's.
pub struct Corpus {
    rng: ChaCha20Rng,
}

impl Corpus {
    pub fn new(seed: u64) -> Self {
        Corpus { rng: ChaCha20Rng::seed_from_u64(seed) }
    }

    pub fn below(&mut self, k: usize) -> usize {
        (self.rng.next_u64() % k as u64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        ((self.rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64) < p
    }

    /// Each ordered pair `i ≠ j` is an edge with probability `p`.
    pub fn digraph(&mut self, n: usize, p: f64) -> Matrix {
        let mut m = Matrix::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && self.chance(p) {
                    m.x[i][j] = 1;
                }
            }
        }
        m
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.below(i + 1);
            p.swap(i, j);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_values() {
        let cycle = Matrix::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!((r(&cycle, 0), tc(&cycle, 0), tp(&cycle, 0), cyc(&cycle, 0)), (0.0, 1.0, 0.0, 1.0));
        let trip = Matrix::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!((tp(&trip, 0), plt(&trip, 0), tc(&trip, 2)), (0.25, 1.0, 0.0));
        let k3 = Matrix::from_edges(3, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]);
        assert_eq!(tp(&k3, 0), 1.0 / 3.0);
        assert_eq!(distinct_three_cycles(&k3), 2);
        assert_eq!(path_stats(&cycle, &[0, 1, 2]), Some((1.5, 2)));
        assert_eq!(scc_partition(&trip), vec![vec![0], vec![1], vec![2]]);
    }
}
