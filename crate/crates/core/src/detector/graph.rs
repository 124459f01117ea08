//! Package dependency graph and cycle detection.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{refs, Corpus};

/// Directed dependency graph over the packages of a corpus. Nodes are the
/// packages that own at least one source unit; references to packages
/// outside the corpus are ignored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependencyGraph {
    pub nodes: Vec<String>,
    /// Deduplicated `(from, to)` package edges; never self-loops.
    pub edges: BTreeSet<(String, String)>,
}

/// One elementary dependency cycle: its member packages, sorted.
pub type Cycle = Vec<String>;

pub fn build_dependency_graph(corpus: &Corpus) -> DependencyGraph {
    let nodes: BTreeSet<String> = corpus.units.iter().map(|u| u.package.clone()).collect();
    let mut edges = BTreeSet::new();

    // Class-simple-name -> owning packages, for cross-package reference edges.
    let mut class_home: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for unit in &corpus.units {
        for class in &unit.classes {
            class_home
                .entry(class.name.as_str())
                .or_default()
                .insert(unit.package.as_str());
        }
    }

    let index = refs::build(corpus);
    for unit in &corpus.units {
        let from = unit.package.as_str();
        for import in &unit.imports {
            let target = import.as_str();
            if target != from && nodes.contains(target) {
                edges.insert((from.to_string(), target.to_string()));
            }
        }
        for class in &unit.classes {
            for referenced in index.classes_referenced_by(&class.name) {
                if let Some(homes) = class_home.get(referenced.as_str()) {
                    for home in homes {
                        if *home != from {
                            edges.insert((from.to_string(), (*home).to_string()));
                        }
                    }
                }
            }
        }
    }

    DependencyGraph { nodes: nodes.into_iter().collect(), edges }
}

/// Strongly connected components with two or more members, each sorted
/// internally, the list sorted lexicographically. Computed with Kosaraju's
/// two-pass algorithm on explicit stacks.
pub fn find_cycles(graph: &DependencyGraph) -> Vec<Cycle> {
    let n = graph.nodes.len();
    let id: BTreeMap<&str, usize> = graph
        .nodes
        .iter()
        .enumerate()
        .map(|(i, name)| (name.as_str(), i))
        .collect();
    let mut fwd: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (from, to) in &graph.edges {
        let (Some(&a), Some(&b)) = (id.get(from.as_str()), id.get(to.as_str())) else {
            continue;
        };
        fwd[a].push(b);
        rev[b].push(a);
    }

    // Pass 1: forward DFS, record nodes in order of completion.
    let mut finished = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        seen[start] = true;
        while let Some(&mut (node, ref mut edge)) = stack.last_mut() {
            if let Some(&next) = fwd[node].get(*edge) {
                *edge += 1;
                if !seen[next] {
                    seen[next] = true;
                    stack.push((next, 0));
                }
            } else {
                finished.push(node);
                stack.pop();
            }
        }
    }

    // Pass 2: reverse DFS in reverse finish order; each tree is one SCC.
    let mut component = vec![usize::MAX; n];
    let mut current = 0usize;
    for &root in finished.iter().rev() {
        if component[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![root];
        component[root] = current;
        while let Some(node) = stack.pop() {
            for &prev in &rev[node] {
                if component[prev] == usize::MAX {
                    component[prev] = current;
                    stack.push(prev);
                }
            }
        }
        current += 1;
    }

    let mut groups: Vec<Vec<String>> = vec![Vec::new(); current];
    for (node, &comp) in component.iter().enumerate() {
        groups[comp].push(graph.nodes[node].clone());
    }
    let mut cycles: Vec<Cycle> = groups.into_iter().filter(|g| g.len() >= 2).collect();
    for cycle in &mut cycles {
        cycle.sort();
    }
    cycles.sort();
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn graph_of(nodes: &[&str], edges: &[(&str, &str)]) -> DependencyGraph {
        DependencyGraph {
            nodes: nodes.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }

    #[test]
    fn dag_has_no_cycles() {
        let g = graph_of(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        assert!(find_cycles(&g).is_empty());
    }

    #[test]
    fn two_node_cycle_excludes_tail() {
        let g = graph_of(&["a", "b", "c"], &[("a", "b"), ("b", "a"), ("b", "c")]);
        assert_eq!(find_cycles(&g), vec![vec!["a".to_string(), "b".to_string()]]);
    }

    #[test]
    fn disjoint_cycles_sorted() {
        let g = graph_of(
            &["a", "b", "x", "y", "z"],
            &[("x", "y"), ("y", "z"), ("z", "x"), ("b", "a"), ("a", "b")],
        );
        let cycles = find_cycles(&g);
        assert_eq!(
            cycles,
            vec![
                vec!["a".to_string(), "b".to_string()],
                vec!["x".to_string(), "y".to_string(), "z".to_string()],
            ]
        );
    }

    /// Brute-force reference: nodes are in a common cycle iff each reaches
    /// the other. Groups by mutual reachability.
    fn cycles_by_reachability(g: &DependencyGraph) -> Vec<Cycle> {
        let n = g.nodes.len();
        let idx = |name: &str| g.nodes.iter().position(|x| x == name).unwrap();
        let mut reach = vec![vec![false; n]; n];
        for (a, b) in &g.edges {
            reach[idx(a)][idx(b)] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    reach[i][j] |= reach[i][k] && reach[k][j];
                }
            }
        }
        let mut assigned = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let mut group = vec![i];
            for j in i + 1..n {
                if reach[i][j] && reach[j][i] {
                    group.push(j);
                    assigned[j] = true;
                }
            }
            if group.len() >= 2 {
                let mut names: Vec<String> =
                    group.iter().map(|&k| g.nodes[k].clone()).collect();
                names.sort();
                out.push(names);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn matches_reachability_oracle_on_random_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(90125);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8usize);
            let nodes: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let mut edges = BTreeSet::new();
            for a in 0..n {
                for b in 0..n {
                    if a != b && rng.gen_bool(0.25) {
                        edges.insert((nodes[a].clone(), nodes[b].clone()));
                    }
                }
            }
            let g = DependencyGraph { nodes, edges };
            assert_eq!(find_cycles(&g), cycles_by_reachability(&g), "graph: {g:?}");
        }
    }
}
