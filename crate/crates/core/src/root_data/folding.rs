use alloc::vec::Vec;

/// How the fixed-point subalgebra `g` sits in its untwisted parent:
/// node `i` of `g` corresponds to the `sigma`-orbit `orbits[i-1]` of
/// parent nodes (1-based), whose first element is the representative `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Folding {
    parent_rank: usize,
    orbits: Vec<Vec<usize>>,
}

impl Folding {
    pub fn new(parent_rank: usize, orbits: Vec<Vec<usize>>) -> Self {
        debug_assert!(orbits.iter().enumerate().all(|(i, o)| o[0] == i + 1));
        Folding { parent_rank, orbits }
    }

    pub fn rank(&self) -> usize {
        self.orbits.len()
    }

    pub fn parent_rank(&self) -> usize {
        self.parent_rank
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// The diagram automorphism as a permutation of parent nodes, 1-based.
    /// Within an orbit `[i, j, k]` it maps `i -> j -> k -> i`.
    pub fn sigma(&self, node: usize) -> usize {
        for orbit in &self.orbits {
            if let Some(pos) = orbit.iter().position(|&j| j == node) {
                return orbit[(pos + 1) % orbit.len()];
            }
        }
        node
    }
}
