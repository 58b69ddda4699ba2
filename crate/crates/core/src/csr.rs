/// Compressed rows: row `i` is `targets[offsets[i]..offsets[i + 1]]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Csr {
    /// Entries keep the iteration order within each row.
    pub(crate) fn from_entries<I>(rows: usize, entries: I) -> Self
    where
        I: Iterator<Item = (usize, usize)> + Clone,
    {
        let mut offsets = vec![0usize; rows + 1];
        for (r, _) in entries.clone() {
            offsets[r + 1] += 1;
        }
        for i in 0..rows {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; offsets[rows]];
        for (r, t) in entries {
            targets[fill[r]] = t;
            fill[r] += 1;
        }
        Self { offsets, targets }
    }

    pub(crate) fn row(&self, i: usize) -> &[usize] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub(crate) fn row_len(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub(crate) fn rows(&self) -> usize {
        self.offsets.len() - 1
    }

    pub(crate) fn entries(&self) -> usize {
        self.targets.len()
    }
}
