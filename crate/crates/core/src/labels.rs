use std::collections::HashMap;

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;

/// A graph together with a bijection between vertex ids and label strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGem {
    graph: ColoredGraph,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl LabeledGem {
    pub fn new(graph: ColoredGraph, labels: Vec<String>) -> Result<Self> {
        if labels.len() != graph.num_vertices() {
            return Err(GemError::InvalidLabel(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.num_vertices()
            )));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (v, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(GemError::InvalidLabel(format!("bad label `{l}`")));
            }
            if index.insert(l.clone(), v).is_some() {
                return Err(GemError::InvalidLabel(format!("duplicate label `{l}`")));
            }
        }
        Ok(Self {
            graph,
            labels,
            index,
        })
    }

    /// Labels each vertex by its decimal id.
    pub fn unlabeled(graph: ColoredGraph) -> Self {
        let labels = (0..graph.num_vertices()).map(|v| v.to_string()).collect();
        Self::new(graph, labels).expect("decimal labels are unique")
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn into_graph(self) -> ColoredGraph {
        self.graph
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| GemError::UnknownLabel(label.to_string()))
    }

    pub fn has_default_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(v, l)| *l == v.to_string())
    }

    /// True when both gems have the same label set and the same colored edges
    /// between equally-labeled vertices.
    pub fn same_edges_by_label(&self, other: &LabeledGem) -> bool {
        let (a, b) = (&self.graph, &other.graph);
        if a.n_colors() != b.n_colors() || a.num_vertices() != b.num_vertices() {
            return false;
        }
        (0..a.num_vertices()).all(|v| {
            let Ok(w) = other.vertex(self.label(v)) else {
                return false;
            };
            (0..a.n_colors()).all(|c| self.label(a.neighbor(c, v)) == other.label(b.neighbor(c, w)))
        })
    }

    /// Carries labels over to a graph derived from this one, where
    /// `old_to_new[v]` is the new id of old vertex v, if it survived.
    pub fn remap(&self, graph: ColoredGraph, old_to_new: &[Option<usize>]) -> Result<Self> {
        let mut labels = vec![String::new(); graph.num_vertices()];
        for (old, new) in old_to_new.iter().enumerate() {
            if let Some(new) = *new {
                labels[new] = self.labels[old].clone();
            }
        }
        Self::new(graph, labels)
    }
}
