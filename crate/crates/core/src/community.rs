//! Directed modularity and a seeded two-phase Louvain optimiser.
//!
//! For a partition into communities `c`,
//!
//! ```text
//! Q = sum_c [ L_c / m  -  gamma * Kout_c * Kin_c / m^2 ]
//! ```
//!
//! where `L_c` counts edges with both ends in `c` and `Kout_c`, `Kin_c` are the
//! summed out- and in-degrees of its members. The double sum over node pairs
//! collapses to this form whichever endpoint carries the out-degree, so edge
//! orientation of the null term does not matter. `gamma = 1` is the plain
//! directed modularity.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::graph::FaultGraph;
use crate::ids::FaultId;

/// Minimum modularity gain for a node move.
pub const MIN_GAIN: f64 = 1e-12;

pub const DEFAULT_PERTURBATIONS: usize = 64;

/// A fine-tuning pass gives up after this many forced moves without a new
/// best; graphs this small or smaller are always swept in full.
const KL_PATIENCE: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    /// Fault to community id; ids are dense from 0, ordered by community
    /// size (descending) then smallest member.
    pub assignment: BTreeMap<FaultId, usize>,
    /// Directed modularity of `assignment` at resolution 1.
    pub q: f64,
}

impl Partition {
    /// Relabels `assignment` canonically and evaluates its modularity.
    pub fn from_assignment(g: &FaultGraph, assignment: &BTreeMap<FaultId, usize>) -> Result<Self> {
        let assignment = canonical_labels(assignment);
        let q = directed_modularity(g, &assignment)?;
        Ok(Self { assignment, q })
    }

    /// Member lists indexed by community id.
    pub fn communities(&self) -> Vec<Vec<FaultId>> {
        let k = self.assignment.values().max().map_or(0, |&c| c + 1);
        let mut out = vec![Vec::new(); k];
        for (&f, &c) in &self.assignment {
            out[c].push(f);
        }
        out
    }

    pub fn community_count(&self) -> usize {
        self.communities().len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.communities().iter().map(Vec::len).collect()
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Partition", 2)?;
        s.serialize_field("q", &self.q)?;
        s.serialize_field("communities", &self.communities())?;
        s.end()
    }
}

fn canonical_labels(assignment: &BTreeMap<FaultId, usize>) -> BTreeMap<FaultId, usize> {
    let mut groups: BTreeMap<usize, Vec<FaultId>> = BTreeMap::new();
    for (&f, &c) in assignment {
        groups.entry(c).or_default().push(f);
    }
    let mut groups: Vec<Vec<FaultId>> = groups.into_values().collect();
    groups.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    groups
        .into_iter()
        .enumerate()
        .flat_map(|(c, members)| members.into_iter().map(move |f| (f, c)))
        .collect()
}

pub fn directed_modularity(g: &FaultGraph, assignment: &BTreeMap<FaultId, usize>) -> Result<f64> {
    directed_modularity_with_resolution(g, assignment, 1.0)
}

pub fn directed_modularity_with_resolution(
    g: &FaultGraph,
    assignment: &BTreeMap<FaultId, usize>,
    resolution: f64,
) -> Result<f64> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::NoEdges(
            "modularity is undefined for a graph without edges",
        ));
    }
    let comm: Vec<usize> = g
        .nodes()
        .iter()
        .map(|f| {
            assignment
                .get(f)
                .copied()
                .ok_or_else(|| Error::InvalidParameter(format!("fault {f} has no community")))
        })
        .collect::<Result<_>>()?;

    // (internal edges, out-degree total, in-degree total) per community
    let mut totals: BTreeMap<usize, (f64, f64, f64)> = BTreeMap::new();
    for i in 0..g.node_count() {
        let t = totals.entry(comm[i]).or_default();
        t.1 += g.out_degree(i) as f64;
        t.2 += g.in_degree(i) as f64;
        t.0 += g
            .successors(i)
            .iter()
            .filter(|&&j| comm[j] == comm[i])
            .count() as f64;
    }
    let m = m as f64;
    Ok(totals
        .values()
        .map(|&(internal, k_out, k_in)| internal / m - resolution * k_out * k_in / (m * m))
        .sum())
}

/// Faults sharing `fault`'s community, including `fault`.
pub fn community_of(p: &Partition, fault: FaultId) -> Result<BTreeSet<FaultId>> {
    let c = *p.assignment.get(&fault).ok_or(Error::UnknownFault(fault))?;
    Ok(p.assignment
        .iter()
        .filter(|(_, &x)| x == c)
        .map(|(&f, _)| f)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LouvainConfig {
    pub seed: u64,
    pub resolution: f64,
    /// Visit nodes in seeded random order; when false, ascending index order.
    pub shuffle: bool,
    /// Random split-or-merge perturbations tried after convergence; each is
    /// followed by local search and kept only if it raises the objective.
    pub perturbations: usize,
}

impl Default for LouvainConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            resolution: 1.0,
            shuffle: true,
            perturbations: DEFAULT_PERTURBATIONS,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LouvainRun {
    /// One partition of the original faults per aggregation level, finest
    /// first. Never empty.
    pub levels: Vec<Partition>,
    /// Objective (at the configured resolution) after every local-moving
    /// pass, in execution order.
    pub pass_objective: Vec<f64>,
}

impl LouvainRun {
    pub fn partition(&self) -> &Partition {
        self.levels.last().expect("at least one level")
    }

    pub fn into_partition(mut self) -> Partition {
        self.levels.pop().expect("at least one level")
    }
}

/// Weighted directed graph of one aggregation level. Self-loop weight is held
/// apart from the adjacency lists.
struct Level {
    out: Vec<Vec<(usize, f64)>>,
    inc: Vec<Vec<(usize, f64)>>,
    self_w: Vec<f64>,
    k_out: Vec<f64>,
    k_in: Vec<f64>,
}

impl Level {
    fn from_graph(g: &FaultGraph) -> Self {
        let n = g.node_count();
        let out: Vec<Vec<(usize, f64)>> = (0..n)
            .map(|i| g.successors(i).iter().map(|&j| (j, 1.0)).collect())
            .collect();
        let inc: Vec<Vec<(usize, f64)>> = (0..n)
            .map(|i| g.predecessors(i).iter().map(|&j| (j, 1.0)).collect())
            .collect();
        Self {
            k_out: (0..n).map(|i| g.out_degree(i) as f64).collect(),
            k_in: (0..n).map(|i| g.in_degree(i) as f64).collect(),
            self_w: vec![0.0; n],
            out,
            inc,
        }
    }

    fn len(&self) -> usize {
        self.self_w.len()
    }

    /// Collapses each community into one node. `comm` must be dense.
    fn aggregate(&self, comm: &[usize], k: usize) -> Self {
        let mut out: Vec<BTreeMap<usize, f64>> = vec![BTreeMap::new(); k];
        let mut self_w = vec![0.0; k];
        let mut k_out = vec![0.0; k];
        let mut k_in = vec![0.0; k];
        for i in 0..self.len() {
            let ci = comm[i];
            self_w[ci] += self.self_w[i];
            k_out[ci] += self.k_out[i];
            k_in[ci] += self.k_in[i];
            for &(j, w) in &self.out[i] {
                let cj = comm[j];
                if ci == cj {
                    self_w[ci] += w;
                } else {
                    *out[ci].entry(cj).or_default() += w;
                }
            }
        }
        let mut inc: Vec<Vec<(usize, f64)>> = vec![Vec::new(); k];
        let out: Vec<Vec<(usize, f64)>> = out
            .into_iter()
            .map(|row| row.into_iter().collect())
            .collect();
        for (i, row) in out.iter().enumerate() {
            for &(j, w) in row {
                inc[j].push((i, w));
            }
        }
        Self {
            out,
            inc,
            self_w,
            k_out,
            k_in,
        }
    }
}

struct LocalMoving<'a> {
    level: &'a Level,
    m: f64,
    resolution: f64,
    comm: Vec<usize>,
    tot_out: Vec<f64>,
    tot_in: Vec<f64>,
}

impl<'a> LocalMoving<'a> {
    fn new(level: &'a Level, m: f64, resolution: f64) -> Self {
        Self::from_assignment(level, m, resolution, (0..level.len()).collect())
    }

    /// Starts from an existing assignment; ids must be below `level.len()`.
    fn from_assignment(level: &'a Level, m: f64, resolution: f64, comm: Vec<usize>) -> Self {
        let mut tot_out = vec![0.0; level.len()];
        let mut tot_in = vec![0.0; level.len()];
        for (i, &c) in comm.iter().enumerate() {
            tot_out[c] += level.k_out[i];
            tot_in[c] += level.k_in[i];
        }
        Self {
            comm,
            tot_out,
            tot_in,
            level,
            m,
            resolution,
        }
    }

    fn gain(&self, i: usize, c: usize, links: f64) -> f64 {
        let l = self.level;
        links / self.m
            - self.resolution * (l.k_out[i] * self.tot_in[c] + l.k_in[i] * self.tot_out[c])
                / (self.m * self.m)
    }

    /// One sweep over `order`; returns whether any node changed community.
    fn sweep(&mut self, order: &[usize], links: &mut [f64], touched: &mut Vec<usize>) -> bool {
        let l = self.level;
        let mut moved = false;
        for &i in order {
            let old = self.comm[i];
            self.gather(i, links, touched);
            self.tot_out[old] -= l.k_out[i];
            self.tot_in[old] -= l.k_in[i];

            let stay = self.gain(i, old, links[old]);
            let mut best = old;
            let mut best_gain = f64::NEG_INFINITY;
            for &c in touched.iter() {
                if c == old {
                    continue;
                }
                let g = self.gain(i, c, links[c]);
                if g > best_gain {
                    best_gain = g;
                    best = c;
                }
            }
            if best == old || best_gain <= stay + MIN_GAIN {
                best = old;
            }

            self.comm[i] = best;
            self.tot_out[best] += l.k_out[i];
            self.tot_in[best] += l.k_in[i];
            moved |= best != old;
            for &c in touched.iter() {
                links[c] = 0.0;
            }
        }
        moved
    }

    /// Kernighan-Lin style fine-tuning. Each pass moves every node at most
    /// once (stopping early after [`KL_PATIENCE`] moves without a new best),
    /// always taking the best available move even when it lowers the
    /// objective (an empty community is a valid target), then rewinds to the
    /// best state seen. Passes repeat while they improve; returns the
    /// objective after each improving pass.
    fn fine_tune(&mut self, links: &mut [f64], touched: &mut Vec<usize>) -> Vec<f64> {
        let l = self.level;
        let n = l.len();
        let mut improvements = Vec::new();
        loop {
            let start_q = self.objective();
            let (mut q, mut best_q) = (start_q, start_q);
            let mut best_comm = self.comm.clone();
            let mut size = vec![0usize; n];
            self.comm.iter().for_each(|&c| size[c] += 1);
            let mut locked = vec![false; n];
            let mut since_best = 0;
            for _ in 0..n {
                if since_best == KL_PATIENCE {
                    break;
                }
                let empty = size.iter().position(|&k| k == 0);
                // (delta, node, target)
                let mut step: Option<(f64, usize, usize)> = None;
                for i in (0..n).filter(|&i| !locked[i]) {
                    let old = self.comm[i];
                    self.gather(i, links, touched);
                    self.tot_out[old] -= l.k_out[i];
                    self.tot_in[old] -= l.k_in[i];
                    let stay = self.gain(i, old, links[old]);
                    let alone = if size[old] > 1 { empty } else { None };
                    let targets = touched.iter().copied().filter(|&c| c != old).chain(alone);
                    for c in targets {
                        let delta = self.gain(i, c, links[c]) - stay;
                        if step.is_none_or(|(d, _, _)| delta > d) {
                            step = Some((delta, i, c));
                        }
                    }
                    self.tot_out[old] += l.k_out[i];
                    self.tot_in[old] += l.k_in[i];
                    touched.iter().for_each(|&c| links[c] = 0.0);
                }
                let Some((delta, i, c)) = step else { break };
                let old = self.comm[i];
                self.move_node(i, old, c);
                size[old] -= 1;
                size[c] += 1;
                locked[i] = true;
                q += delta;
                if q > best_q + MIN_GAIN {
                    best_q = q;
                    best_comm.clone_from(&self.comm);
                    since_best = 0;
                } else {
                    since_best += 1;
                }
            }
            self.reset(best_comm);
            let q = self.objective();
            if q > start_q + MIN_GAIN {
                improvements.push(q);
            } else {
                return improvements;
            }
        }
    }

    /// Fills `links` with the edge weight between `i` and each neighbouring
    /// community; `touched` lists the communities set.
    fn gather(&self, i: usize, links: &mut [f64], touched: &mut Vec<usize>) {
        touched.clear();
        for &(j, w) in self.level.out[i].iter().chain(&self.level.inc[i]) {
            let c = self.comm[j];
            if links[c] == 0.0 {
                touched.push(c);
            }
            links[c] += w;
        }
    }

    fn move_node(&mut self, i: usize, from: usize, to: usize) {
        let l = self.level;
        self.tot_out[from] -= l.k_out[i];
        self.tot_in[from] -= l.k_in[i];
        self.tot_out[to] += l.k_out[i];
        self.tot_in[to] += l.k_in[i];
        self.comm[i] = to;
    }

    fn reset(&mut self, comm: Vec<usize>) {
        *self = Self::from_assignment(self.level, self.m, self.resolution, comm);
    }

    fn objective(&self) -> f64 {
        let l = self.level;
        let mut internal = vec![0.0; l.len()];
        for i in 0..l.len() {
            internal[self.comm[i]] += l.self_w[i];
            for &(j, w) in &l.out[i] {
                if self.comm[j] == self.comm[i] {
                    internal[self.comm[i]] += w;
                }
            }
        }
        (0..l.len())
            .map(|c| {
                internal[c] / self.m
                    - self.resolution * self.tot_out[c] * self.tot_in[c] / (self.m * self.m)
            })
            .sum()
    }

    /// Dense relabelling in order of first appearance.
    fn dense(&self) -> (Vec<usize>, usize) {
        let mut map = vec![usize::MAX; self.comm.len()];
        let mut next = 0;
        let dense = self
            .comm
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        (dense, next)
    }
}

/// Either splits a random community with at least two members at random, or
/// merges two random communities. Returned ids stay below `membership.len()`.
fn perturb(membership: &[usize], rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = membership.len();
    let mut comm = membership.to_vec();
    let mut used: Vec<usize> = comm.clone();
    used.sort_unstable();
    used.dedup();
    let splittable: Vec<usize> = used
        .iter()
        .copied()
        .filter(|&c| comm.iter().filter(|&&x| x == c).count() > 1)
        .collect();
    if rng.gen_bool(1.0 / 3.0) {
        let v = rng.gen_range(0..n);
        let fresh = (0..n).find(|x| used.binary_search(x).is_err());
        let targets: Vec<usize> = used
            .iter()
            .copied()
            .filter(|&c| c != comm[v])
            .chain(fresh)
            .collect();
        if let Some(&c) = targets.choose(rng) {
            comm[v] = c;
        }
    } else if used.len() < 2 || (!splittable.is_empty() && rng.gen_bool(0.5)) {
        let Some(&c) = splittable.choose(rng) else {
            return comm;
        };
        let fresh = (0..n)
            .find(|x| used.binary_search(x).is_err())
            .expect("a free id");
        for x in comm.iter_mut().filter(|x| **x == c) {
            if rng.gen_bool(0.5) {
                *x = fresh;
            }
        }
    } else {
        let pair: Vec<&usize> = used.choose_multiple(rng, 2).collect();
        let (a, b) = (*pair[0], *pair[1]);
        comm.iter_mut().filter(|x| **x == b).for_each(|x| *x = a);
    }
    comm
}

/// Seeded Louvain with default resolution handling; returns the coarsest level.
pub fn louvain(g: &FaultGraph, seed: u64, resolution: f64) -> Result<Partition> {
    let config = LouvainConfig {
        seed,
        resolution,
        ..LouvainConfig::default()
    };
    Ok(louvain_run(g, &config)?.into_partition())
}

/// Full Louvain run: local moving until a sweep moves nothing, then
/// aggregation, repeated until a level makes no move at all. The result is
/// then refined by single-fault moves on the original graph; if any fault
/// moves, aggregation resumes from the refined partition.
pub fn louvain_run(g: &FaultGraph, config: &LouvainConfig) -> Result<LouvainRun> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::NoEdges(
            "modularity is undefined for a graph without edges",
        ));
    }
    if !(config.resolution.is_finite() && config.resolution > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "resolution must be positive, got {}",
            config.resolution
        )));
    }
    let m = m as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let base = Level::from_graph(g);
    // Community of every original node at the current level.
    let mut membership: Vec<usize> = (0..g.node_count()).collect();
    let mut levels = Vec::new();
    let mut pass_objective = Vec::new();
    let mut links = vec![0.0; base.len()];
    let mut touched = Vec::new();
    let shuffled = |len: usize, rng: &mut ChaCha8Rng| {
        let mut order: Vec<usize> = (0..len).collect();
        if config.shuffle {
            order.shuffle(rng);
        }
        order
    };
    let record = |membership: &[usize], levels: &mut Vec<Partition>| -> Result<()> {
        let assignment: BTreeMap<FaultId, usize> = g
            .nodes()
            .iter()
            .copied()
            .zip(membership.iter().copied())
            .collect();
        levels.push(Partition::from_assignment(g, &assignment)?);
        Ok(())
    };

    let mut level = base.aggregate(&membership, base.len());
    loop {
        loop {
            let order = shuffled(level.len(), &mut rng);
            let mut mover = LocalMoving::new(&level, m, config.resolution);
            let mut any_move = false;
            while mover.sweep(&order, &mut links, &mut touched) {
                any_move = true;
                pass_objective.push(mover.objective());
            }
            if !any_move && !levels.is_empty() {
                break;
            }
            let (dense, k) = mover.dense();
            membership.iter_mut().for_each(|c| *c = dense[*c]);
            record(&membership, &mut levels)?;
            if !any_move {
                break;
            }
            level = level.aggregate(&dense, k);
        }

        let order = shuffled(base.len(), &mut rng);
        let mut mover =
            LocalMoving::from_assignment(&base, m, config.resolution, membership.clone());
        let mut any_move = false;
        while mover.sweep(&order, &mut links, &mut touched) {
            any_move = true;
            pass_objective.push(mover.objective());
        }
        let tuned = mover.fine_tune(&mut links, &mut touched);
        any_move |= !tuned.is_empty();
        pass_objective.extend(tuned);
        if !any_move {
            break;
        }
        let (dense, k) = mover.dense();
        membership = dense;
        record(&membership, &mut levels)?;
        level = base.aggregate(&membership, k);
    }

    let mut best_q =
        LocalMoving::from_assignment(&base, m, config.resolution, membership.clone()).objective();
    for _ in 0..config.perturbations {
        let kicked = perturb(&membership, &mut rng);
        let mut mover = LocalMoving::from_assignment(&base, m, config.resolution, kicked);
        let order = shuffled(base.len(), &mut rng);
        while mover.sweep(&order, &mut links, &mut touched) {}
        mover.fine_tune(&mut links, &mut touched);
        let q = mover.objective();
        if q > best_q + MIN_GAIN {
            best_q = q;
            pass_objective.push(q);
            membership = mover.dense().0;
            record(&membership, &mut levels)?;
        }
    }
    Ok(LouvainRun {
        levels,
        pass_objective,
    })
}

/// Best partition over seeds `base_seed .. base_seed + restarts`; ties keep
/// the earliest seed. Returns the winning seed alongside.
pub fn louvain_restarts(
    g: &FaultGraph,
    base_seed: u64,
    restarts: usize,
    resolution: f64,
) -> Result<(u64, Partition)> {
    if restarts == 0 {
        return Err(Error::InvalidParameter(
            "restarts must be at least 1".into(),
        ));
    }
    let mut best: Option<(u64, Partition)> = None;
    for k in 0..restarts as u64 {
        let seed = base_seed.wrapping_add(k);
        let p = louvain(g, seed, resolution)?;
        if best.as_ref().is_none_or(|(_, b)| p.q > b.q + MIN_GAIN) {
            best = Some((seed, p));
        }
    }
    Ok(best.expect("restarts >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;

    fn f(i: u32) -> FaultId {
        FaultId(i)
    }

    fn two_cycles() -> FaultGraph {
        load_edge_list("1,2\n2,3\n3,1\n4,5\n5,6\n6,4\n").unwrap()
    }

    fn assign(g: &FaultGraph, comm: impl Fn(u32) -> usize) -> BTreeMap<FaultId, usize> {
        g.nodes().iter().map(|&id| (id, comm(id.get()))).collect()
    }

    #[test]
    fn whole_graph_community_has_zero_q() {
        let g = load_edge_list("2,1\n3,1\n3,2\n4,3\n").unwrap();
        let q = directed_modularity(&g, &assign(&g, |_| 0)).unwrap();
        assert!(q.abs() < 1e-12);
    }

    #[test]
    fn singleton_partition_keeps_diagonal_terms() {
        let g = load_edge_list("1,2\n2,1\n2,3\n").unwrap();
        let q = directed_modularity(&g, &assign(&g, |i| i as usize)).unwrap();
        // k_out = [1,2,0], k_in = [1,1,1]
        assert!((q - (-(1.0 + 2.0 + 0.0) / 9.0)).abs() < 1e-12);
    }

    #[test]
    fn split_cycles_score_one_half() {
        let g = two_cycles();
        let q = directed_modularity(&g, &assign(&g, |i| (i > 3) as usize)).unwrap();
        assert!((q - 0.5).abs() < 1e-12);
    }

    #[test]
    fn louvain_recovers_the_cycles() {
        let g = two_cycles();
        for seed in 0..10 {
            let p = louvain(&g, seed, 1.0).unwrap();
            assert_eq!(
                p.communities(),
                vec![vec![f(1), f(2), f(3)], vec![f(4), f(5), f(6)]]
            );
            assert!((p.q - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn single_edge_is_order_independent() {
        let g = load_edge_list("1,2\n").unwrap();
        let stable = louvain_run(
            &g,
            &LouvainConfig {
                shuffle: false,
                ..LouvainConfig::default()
            },
        )
        .unwrap();
        for seed in 0..8 {
            assert_eq!(louvain(&g, seed, 1.0).unwrap().q, stable.partition().q);
        }
    }

    #[test]
    fn isolated_faults_stay_alone() {
        let g = FaultGraph::new(
            [f(1), f(2), f(3), f(9)],
            [(f(2), f(1)), (f(3), f(1)), (f(3), f(2))],
        )
        .unwrap();
        let p = louvain(&g, 3, 1.0).unwrap();
        assert_eq!(community_of(&p, f(9)).unwrap(), BTreeSet::from([f(9)]));
    }

    #[test]
    fn errors() {
        let g = FaultGraph::new([f(1), f(2)], []).unwrap();
        assert!(matches!(louvain(&g, 1, 1.0), Err(Error::NoEdges(_))));
        assert!(matches!(
            directed_modularity(&g, &BTreeMap::new()),
            Err(Error::NoEdges(_))
        ));
        let g = two_cycles();
        assert!(directed_modularity(&g, &BTreeMap::from([(f(1), 0)])).is_err());
        let p = louvain(&g, 1, 1.0).unwrap();
        assert_eq!(community_of(&p, f(99)), Err(Error::UnknownFault(f(99))));
        assert!(louvain(&g, 1, 0.0).is_err());
    }

    #[test]
    fn community_of_trivial_partitions() {
        let g = two_cycles();
        let singles = Partition::from_assignment(&g, &assign(&g, |i| i as usize)).unwrap();
        assert_eq!(
            community_of(&singles, f(4)).unwrap(),
            BTreeSet::from([f(4)])
        );
        let whole = Partition::from_assignment(&g, &assign(&g, |_| 7)).unwrap();
        assert_eq!(community_of(&whole, f(4)).unwrap().len(), 6);
        assert_eq!(whole.assignment[&f(1)], 0);
    }

    #[test]
    fn serializes_sorted_communities() {
        let g = two_cycles();
        let p = louvain(&g, 1, 1.0).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"q":0.5,"communities":[[1,2,3],[4,5,6]]}"#);
    }
}
