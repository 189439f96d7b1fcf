//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the algorithms under test; graphs are plain `(n, edges)` pairs with
//! nodes `0..n` that map to fault ids `1..=n`.

#![allow(dead_code)]

use faultrank_core::{FaultGraph, FaultId};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Edges = Vec<(usize, usize)>;

pub fn to_graph(n: usize, edges: &Edges) -> FaultGraph {
    let id = |i: usize| FaultId(i as u32 + 1);
    FaultGraph::new((0..n).map(id), edges.iter().map(|&(a, b)| (id(a), id(b)))).unwrap()
}

/// Each ordered pair becomes an edge with probability `p`.
pub fn random_edges(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Edges {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// In-degree of every column of a 0/1 matrix CSV with a header row and column.
pub fn column_sums(csv: &str) -> Vec<usize> {
    let rows: Vec<Vec<&str>> = csv
        .lines()
        .filter(|l| !l.trim().is_empty())
        .skip(1)
        .map(|l| l.split(',').skip(1).map(str::trim).collect())
        .collect();
    let n = rows[0].len();
    (0..n)
        .map(|c| rows.iter().filter(|r| r[c] == "1").count())
        .collect()
}

fn adjacency(n: usize, edges: &Edges, undirected: bool) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for &(x, y) in edges {
        a[x][y] = true;
        if undirected {
            a[y][x] = true;
        }
    }
    a
}

/// Betweenness by listing every simple path between every pair and keeping
/// the shortest ones. Unordered pairs when `undirected`.
#[allow(clippy::needless_range_loop)]
pub fn brute_betweenness(n: usize, edges: &Edges, undirected: bool) -> Vec<f64> {
    let a = adjacency(n, edges, undirected);
    let mut bc = vec![0.0; n];
    for s in 0..n {
        let mut paths: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        let mut stack = vec![s];
        let mut on = vec![false; n];
        on[s] = true;
        simple_paths(&a, &mut stack, &mut on, &mut paths);
        for t in 0..n {
            if t == s || (undirected && t < s) || paths[t].is_empty() {
                continue;
            }
            let best = paths[t].iter().map(Vec::len).min().unwrap();
            let shortest: Vec<&Vec<usize>> = paths[t].iter().filter(|p| p.len() == best).collect();
            let total = shortest.len() as f64;
            for v in 0..n {
                if v != s && v != t {
                    let through = shortest.iter().filter(|p| p.contains(&v)).count() as f64;
                    bc[v] += through / total;
                }
            }
        }
    }
    bc
}

fn simple_paths(
    a: &[Vec<bool>],
    stack: &mut Vec<usize>,
    on: &mut [bool],
    out: &mut [Vec<Vec<usize>>],
) {
    let v = *stack.last().unwrap();
    for w in 0..a.len() {
        if a[v][w] && !on[w] {
            stack.push(w);
            on[w] = true;
            out[w].push(stack.clone());
            simple_paths(a, stack, on, out);
            on[w] = false;
            stack.pop();
        }
    }
}

/// Local clustering of each node on the undirected projection, counted
/// pair by pair.
pub fn brute_clustering(n: usize, edges: &Edges) -> Vec<f64> {
    let a = adjacency(n, edges, true);
    (0..n)
        .map(|v| {
            let nb: Vec<usize> = (0..n).filter(|&u| a[v][u]).collect();
            let k = nb.len();
            if k < 2 {
                return 0.0;
            }
            let mut linked = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if a[nb[i]][nb[j]] {
                        linked += 1;
                    }
                }
            }
            linked as f64 / (k * (k - 1) / 2) as f64
        })
        .collect()
}

/// Directed modularity straight from the double sum over node pairs.
pub fn modularity(n: usize, edges: &Edges, community: &[usize]) -> f64 {
    let m = edges.len() as f64;
    let a = adjacency(n, edges, false);
    let kout: Vec<f64> = (0..n)
        .map(|i| a[i].iter().filter(|&&x| x).count() as f64)
        .collect();
    let kin: Vec<f64> = (0..n)
        .map(|j| (0..n).filter(|&i| a[i][j]).count() as f64)
        .collect();
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if community[i] == community[j] {
                q += f64::from(u8::from(a[i][j])) - kout[i] * kin[j] / m;
            }
        }
    }
    q / m
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(current: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for c in 0..=max + 1 {
            current.push(c);
            grow(current, max.max(c), n, out);
            current.pop();
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut current = vec![0];
    grow(&mut current, 0, n, &mut out);
    out
}

pub fn best_modularity(n: usize, edges: &Edges) -> f64 {
    set_partitions(n)
        .iter()
        .map(|p| modularity(n, edges, p))
        .fold(f64::NEG_INFINITY, f64::max)
}
