//! Small shared helpers: subset iteration and exact binomials.

/// Iterator over all k-element subsets of `0..n` in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    k: usize,
    idx: Vec<usize>,
    started: bool,
}

pub(crate) fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        k,
        idx: (0..k).collect(),
        started: false,
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.idx.clone());
        }
        // advance the rightmost index that still has room
        let k = self.k;
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] + (k - i) < self.n {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
    }
}

/// Exact binomial coefficient; 0 when k > n.
pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
