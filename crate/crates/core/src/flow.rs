//! Small max-flow solver used for degree-constrained assignment inside the
//! brute-force oracles.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

struct Edge {
    to: usize,
    cap: usize,
}

pub(crate) struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl FlowNetwork {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            adj: alloc::vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Adds a directed edge and its residual; returns the edge id.
    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: usize) -> usize {
        let id = self.edges.len();
        self.adj[from].push(id);
        self.edges.push(Edge { to, cap });
        self.adj[to].push(id + 1);
        self.edges.push(Edge { to: from, cap: 0 });
        id
    }

    /// Flow currently on the edge with the given id.
    pub(crate) fn flow_on(&self, id: usize) -> usize {
        self.edges[id ^ 1].cap
    }

    /// Edmonds–Karp max flow from `s` to `t`.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut total = 0;
        loop {
            let mut pred: Vec<Option<usize>> = alloc::vec![None; self.adj.len()];
            let mut queue = VecDeque::new();
            queue.push_back(s);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &eid in &self.adj[u] {
                    let e = &self.edges[eid];
                    if e.cap > 0 && pred[e.to].is_none() && e.to != s {
                        pred[e.to] = Some(eid);
                        if e.to == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(e.to);
                    }
                }
            }
            if !reached {
                return total;
            }
            let mut bottleneck = usize::MAX;
            let mut v = t;
            while v != s {
                let eid = pred[v].unwrap();
                bottleneck = bottleneck.min(self.edges[eid].cap);
                v = self.edges[eid ^ 1].to;
            }
            let mut v = t;
            while v != s {
                let eid = pred[v].unwrap();
                self.edges[eid].cap -= bottleneck;
                self.edges[eid ^ 1].cap += bottleneck;
                v = self.edges[eid ^ 1].to;
            }
            total += bottleneck;
        }
    }
}

/// Assigns to every left node `v` exactly `demand[v]` distinct right nodes
/// drawn from `allowed[v]`, where right node `j` must receive between
/// `low[j]` and `high[j]` assignments in total. Returns, per right node, the
/// sorted list of assigned left nodes, or `None` if no assignment exists.
pub(crate) fn assign_with_bounds(
    demand: &[usize],
    allowed: &[Vec<usize>],
    low: &[usize],
    high: &[usize],
) -> Option<Vec<Vec<usize>>> {
    let l = demand.len();
    let r = low.len();
    if low.iter().zip(high).any(|(&a, &b)| a > b) {
        return None;
    }
    // Circulation with lower bounds: source 0, sink 1, left 2.., right 2+l..,
    // then the auxiliary source/sink pair for lower-bound excesses.
    let (s, t) = (0, 1);
    let left = |v: usize| 2 + v;
    let right = |j: usize| 2 + l + j;
    let ss = 2 + l + r;
    let tt = ss + 1;
    let mut net = FlowNetwork::new(tt + 1);
    let mut excess: Vec<isize> = alloc::vec![0; tt + 1];
    // s -> left v with exact bound demand[v]: zero free capacity.
    for v in 0..l {
        excess[left(v)] += demand[v] as isize;
        excess[s] -= demand[v] as isize;
    }
    let mut choice_edges: Vec<(usize, usize, usize)> = Vec::new();
    for (v, opts) in allowed.iter().enumerate() {
        for &j in opts {
            let id = net.add_edge(left(v), right(j), 1);
            choice_edges.push((v, j, id));
        }
    }
    for j in 0..r {
        net.add_edge(right(j), t, high[j] - low[j]);
        excess[t] += low[j] as isize;
        excess[right(j)] -= low[j] as isize;
    }
    net.add_edge(t, s, usize::MAX / 2);
    let mut need = 0;
    for x in 0..=tt {
        if excess[x] > 0 {
            net.add_edge(ss, x, excess[x] as usize);
            need += excess[x] as usize;
        } else if excess[x] < 0 {
            net.add_edge(x, tt, (-excess[x]) as usize);
        }
    }
    if net.max_flow(ss, tt) != need {
        return None;
    }
    let mut out: Vec<Vec<usize>> = alloc::vec![Vec::new(); r];
    for &(v, j, id) in &choice_edges {
        if net.flow_on(id) == 1 {
            out[j].push(v);
        }
    }
    for lst in out.iter_mut() {
        lst.sort_unstable();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_assignment() {
        // Two left nodes each needing one right node out of {0,1}; right
        // nodes each take at most one.
        let allowed = alloc::vec![alloc::vec![0, 1], alloc::vec![0, 1]];
        let res = assign_with_bounds(&[1, 1], &allowed, &[0, 0], &[1, 1]).unwrap();
        assert_eq!(res[0].len() + res[1].len(), 2);
    }

    #[test]
    fn lower_bounds_force_spread() {
        let allowed = alloc::vec![alloc::vec![0, 1], alloc::vec![0, 1]];
        let res = assign_with_bounds(&[1, 1], &allowed, &[1, 1], &[2, 2]).unwrap();
        assert_eq!(res[0].len(), 1);
        assert_eq!(res[1].len(), 1);
    }

    #[test]
    fn infeasible_demand() {
        let allowed = alloc::vec![alloc::vec![0], alloc::vec![0]];
        assert!(assign_with_bounds(&[1, 1], &allowed, &[0], &[1]).is_none());
    }

    #[test]
    fn infeasible_lower_bound() {
        let allowed = alloc::vec![alloc::vec![0]];
        assert!(assign_with_bounds(&[1], &allowed, &[2], &[2]).is_none());
    }
}
