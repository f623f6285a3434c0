//! DOT (Graphviz) rendering of instances and solutions.

use std::collections::HashSet;

use crate::instance::ClusteredInstance;
use crate::solution::{PathSolution, TreeSolution};

/// What to emphasize on top of the plain graph.
#[derive(Clone, Copy, Debug, Default)]
pub enum Emphasis<'a> {
    /// Just the graph.
    #[default]
    None,
    /// Draw this tree's edges bold.
    Tree(&'a TreeSolution),
    /// Draw this path's edges bold.
    Path(&'a PathSolution),
}

/// Renders the instance as an undirected DOT graph.
///
/// Each cluster becomes a `subgraph cluster_i` block, the source vertex
/// gets a double border, weighted instances label their edges, and the
/// emphasized tree or path edges are drawn bold.
pub fn render(inst: &ClusteredInstance, emphasis: Emphasis<'_>) -> String {
    let mut bold: HashSet<(usize, usize)> = HashSet::new();
    match emphasis {
        Emphasis::None => {}
        Emphasis::Tree(tree) => {
            for (u, v) in tree.tree_pairs(inst) {
                bold.insert((u.min(v), u.max(v)));
            }
        }
        Emphasis::Path(path) => {
            for pair in path.path.windows(2) {
                bold.insert((pair[0].min(pair[1]), pair[0].max(pair[1])));
            }
        }
    }

    let mut out = String::from("graph clustered {\n");
    out.push_str("  node [shape=circle];\n");
    for (i, cluster) in inst.clusters.iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{i} {{\n"));
        out.push_str(&format!("    label=\"cluster {i}\";\n"));
        for &v in cluster {
            if v == inst.source {
                out.push_str(&format!("    {v} [peripheries=2];\n"));
            } else {
                out.push_str(&format!("    {v};\n"));
            }
        }
        out.push_str("  }\n");
    }
    for &(u, v, w) in &inst.edges {
        let mut attrs: Vec<String> = Vec::new();
        if inst.weighted {
            attrs.push(format!("label=\"{w}\""));
        }
        if bold.contains(&(u.min(v), u.max(v))) {
            attrs.push("style=bold".into());
            attrs.push("penwidth=2.5".into());
        }
        if attrs.is_empty() {
            out.push_str(&format!("  {u} -- {v};\n"));
        } else {
            out.push_str(&format!("  {u} -- {v} [{}];\n", attrs.join(", ")));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::fixtures;

    #[test]
    fn plain_render_lists_every_cluster_and_edge() {
        let inst = fixtures::twin_triangles();
        let dot = render(&inst, Emphasis::None);
        assert!(dot.starts_with("graph clustered {"));
        assert!(dot.ends_with("}\n"));
        for i in 0..inst.k() {
            assert!(dot.contains(&format!("subgraph cluster_{i} {{")));
        }
        assert_eq!(dot.matches(" -- ").count(), inst.m());
        assert!(dot.contains("0 [peripheries=2];"));
        // Unit-weight instances skip edge labels.
        assert!(!dot.contains("label=\"1\""));
    }

    #[test]
    fn tree_emphasis_bolds_exactly_the_tree_edges() {
        let inst = fixtures::twin_triangles();
        let tree = TreeSolution::from_parent(&inst, vec![0, 0, 0, 2, 3, 3]).unwrap();
        let dot = render(&inst, Emphasis::Tree(&tree));
        assert_eq!(dot.matches("style=bold").count(), inst.n - 1);
    }

    #[test]
    fn path_emphasis_bolds_the_walk_and_weights_are_labeled() {
        let mut inst = fixtures::split_path();
        inst.weighted = true;
        inst.edges = vec![(0, 1, 2), (1, 2, 3), (2, 3, 4)];
        let path = PathSolution::found(9, vec![0, 1, 2, 3]);
        let dot = render(&inst, Emphasis::Path(&path));
        assert_eq!(dot.matches("style=bold").count(), 3);
        assert!(dot.contains("label=\"3\""));
    }
}
