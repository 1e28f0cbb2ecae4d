use serde::Serialize;

/// A partition of `0..n` into non-empty blocks.
///
/// Block ids are canonical: blocks are numbered in order of their smallest
/// member, so two partitions are equal iff their `block_of` arrays are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VertexPartition {
    block_of: Vec<usize>,
    #[serde(skip)]
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Canonicalizes arbitrary labels into a partition.
    pub fn from_labels<L: Copy + Eq + std::hash::Hash>(labels: &[L]) -> Self {
        let mut seen = std::collections::HashMap::new();
        let mut block_of = Vec::with_capacity(labels.len());
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let id = *seen.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[id].push(v);
            block_of.push(id);
        }
        Self { block_of, blocks }
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn single_block(n: usize) -> Self {
        Self::from_labels(&vec![0usize; n])
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, id: usize) -> &[usize] {
        &self.blocks[id]
    }
}
