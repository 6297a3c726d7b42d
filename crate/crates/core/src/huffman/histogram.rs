/// Occurrence count of every byte value in a message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolHistogram {
    counts: [u64; 256],
    total: u64,
}

impl SymbolHistogram {
    pub fn counts(&self) -> &[u64; 256] {
        &self.counts
    }

    pub fn count(&self, symbol: u8) -> u64 {
        self.counts[usize::from(symbol)]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn distinct_count(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    /// `(symbol, count)` for every symbol present, in ascending byte order.
    pub fn present(&self) -> impl Iterator<Item = (u8, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(s, &c)| (s as u8, c))
    }

    pub fn from_counts(counts: [u64; 256]) -> Self {
        let total = counts.iter().sum();
        Self { counts, total }
    }
}

impl Default for SymbolHistogram {
    fn default() -> Self {
        Self {
            counts: [0; 256],
            total: 0,
        }
    }
}

pub fn histogram(message: &[u8]) -> SymbolHistogram {
    let mut counts = [0u64; 256];
    for &b in message {
        counts[usize::from(b)] += 1;
    }
    SymbolHistogram {
        counts,
        total: message.len() as u64,
    }
}
