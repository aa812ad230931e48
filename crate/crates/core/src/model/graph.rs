use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::Pmc;

/// SCC decomposition of the underlying graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInfo {
    /// SCC index of every state.
    pub scc_of: Vec<usize>,
    /// SCCs in topological order: an edge leaving an SCC always points to a
    /// later one. States inside an SCC are sorted by index.
    pub sccs: Vec<Vec<usize>>,
    /// Per SCC: no edge leaves it.
    pub bottom: Vec<bool>,
    /// States without outgoing edges.
    pub traps: Vec<usize>,
}

impl GraphInfo {
    pub fn bsccs(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.sccs.iter().zip(&self.bottom).filter(|(_, &b)| b).map(|(c, _)| c)
    }
}

impl Pmc {
    pub fn graph_info(&self) -> GraphInfo {
        let n = self.num_states();
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, self.num_edges());
        for _ in 0..n {
            g.add_node(());
        }
        for (s, t, _) in self.edges() {
            g.add_edge(NodeIndex::new(s), NodeIndex::new(t), ());
        }
        // Tarjan emits SCCs sinks first.
        let mut sccs: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .rev()
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(NodeIndex::index).collect();
                v.sort_unstable();
                v
            })
            .collect();
        sccs.shrink_to_fit();
        let mut scc_of = vec![0; n];
        for (k, c) in sccs.iter().enumerate() {
            for &s in c {
                scc_of[s] = k;
            }
        }
        let bottom = sccs
            .iter()
            .enumerate()
            .map(|(k, c)| c.iter().all(|&s| self.successors(s).keys().all(|&t| scc_of[t] == k)))
            .collect();
        let traps = (0..n).filter(|&s| self.is_trap(s)).collect();
        GraphInfo {
            scc_of,
            sccs,
            bottom,
            traps,
        }
    }

    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pre = vec![Vec::new(); self.num_states()];
        for (s, t, _) in self.edges() {
            pre[t].push(s);
        }
        pre
    }

    /// States with a path into `targets` whose states before the target all
    /// lie in `through`. Targets are included.
    pub fn reach_backward(&self, targets: &[bool], through: &[bool]) -> Vec<bool> {
        let pre = self.predecessors();
        let mut seen = targets.to_vec();
        let mut stack: Vec<usize> = (0..seen.len()).filter(|&s| seen[s]).collect();
        while let Some(t) = stack.pop() {
            for &s in &pre[t] {
                if !seen[s] && through[s] {
                    seen[s] = true;
                    stack.push(s);
                }
            }
        }
        seen
    }

    /// States reachable from `from` (included).
    pub fn reach_forward(&self, from: &[bool]) -> Vec<bool> {
        let mut seen = from.to_vec();
        let mut stack: Vec<usize> = (0..seen.len()).filter(|&s| seen[s]).collect();
        while let Some(s) = stack.pop() {
            for &t in self.successors(s).keys() {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }
}
