//! Augmenting-path bipartite matching between blocks (left) and vertices
//! (right). Matchings can be grown incrementally: augmenting never unmatches
//! a right vertex, so a matching built on a restricted vertex set and then
//! extended keeps every vertex it already covered.

pub(crate) struct BlockMatching {
    /// `left_of[v]` is the left index matched to vertex `v`.
    left_of: Vec<Option<usize>>,
    right_of: Vec<Option<usize>>,
}

impl BlockMatching {
    pub fn new(left: usize, vertices: usize) -> Self {
        Self { left_of: vec![None; vertices], right_of: vec![None; left] }
    }

    /// Tries to match every unmatched left node along edges accepted by
    /// `allowed`. `candidates[l]` lists the vertices adjacent to left node
    /// `l`, in preference order.
    pub fn grow(&mut self, candidates: &[Vec<usize>], allowed: impl Fn(usize) -> bool + Copy) {
        let mut visited = vec![false; self.left_of.len()];
        for l in 0..candidates.len() {
            if self.right_of[l].is_none() {
                visited.iter_mut().for_each(|x| *x = false);
                self.augment(l, candidates, allowed, &mut visited);
            }
        }
    }

    fn augment(
        &mut self,
        l: usize,
        candidates: &[Vec<usize>],
        allowed: impl Fn(usize) -> bool + Copy,
        visited: &mut [bool],
    ) -> bool {
        for &v in &candidates[l] {
            if !allowed(v) || visited[v] {
                continue;
            }
            visited[v] = true;
            let free = match self.left_of[v] {
                None => true,
                Some(other) => self.augment(other, candidates, allowed, visited),
            };
            if free {
                self.left_of[v] = Some(l);
                self.right_of[l] = Some(v);
                return true;
            }
        }
        false
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.right_of.iter().enumerate().filter_map(|(l, v)| v.map(|v| (l, v)))
    }

    #[cfg(test)]
    pub fn size(&self) -> usize {
        self.right_of.iter().filter(|v| v.is_some()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching_found() {
        let cands = vec![vec![0, 1], vec![0], vec![1, 2]];
        let mut m = BlockMatching::new(3, 3);
        m.grow(&cands, |_| true);
        assert_eq!(m.size(), 3);
    }

    #[test]
    fn restricted_then_extended_keeps_cover() {
        // left 0 can take 0 or 1, left 1 only 1; first pass forbids vertex 1
        let cands = vec![vec![1, 0], vec![1]];
        let mut m = BlockMatching::new(2, 2);
        m.grow(&cands, |v| v != 1);
        assert_eq!(m.pairs().collect::<Vec<_>>(), vec![(0, 0)]);
        m.grow(&cands, |_| true);
        assert_eq!(m.size(), 2);
        assert!(m.pairs().any(|(_, v)| v == 0));
    }
}
