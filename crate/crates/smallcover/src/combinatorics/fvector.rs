//! Face counting and the f/h-vector transforms.
//!
//! Counting follows the simplicial convention on the dual: the
//! codimension-k faces of the simple polytope are the (k-1)-faces of its
//! dual, so `f_i` is the number of (i+1)-subsets of facet labels contained
//! in at least one vertex set.

use super::polytope::SimplePolytope;
use crate::util::binomial;

/// f-vector of the dual simplicial polytope: entries `f_-1, f_0, ..., f_{n-1}`
/// with `f_-1 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// Builds from the entries `f_-1, f_0, ..., f_{n-1}`; `f_-1` must be 1.
    pub fn new(entries: Vec<u64>) -> Self {
        assert!(!entries.is_empty() && entries[0] == 1, "f_-1 must be 1");
        Self(entries)
    }

    /// Dimension n of the polytope (number of entries minus one).
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// `f_i` for `i` in `-1..=n-1`.
    pub fn get(&self, i: isize) -> u64 {
        self.0[(i + 1) as usize]
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }
}

/// h-vector entries `h_0, ..., h_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(!entries.is_empty());
        Self(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

/// Counts faces of the dual simplicial polytope by direct enumeration of the
/// downward closure of the vertex family.
pub fn f_vector(p: &SimplePolytope) -> FVector {
    let n = p.dim();
    let mut counts = vec![0u64; n + 1];
    for &face in p.faces() {
        let k = face.count_ones() as usize;
        if k <= n {
            counts[k] += 1;
        }
    }
    debug_assert_eq!(counts[0], 1, "the empty face");
    FVector::new(counts)
}

/// Binomial transform of the f-vector:
/// `h_k = sum_i (-1)^(k-i) C(n-i, n-k) f_{i-1}`.
pub fn h_vector(f: &FVector) -> HVector {
    let n = f.dim();
    let mut h = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let sign = if (k - i) % 2 == 0 { 1i128 } else { -1i128 };
            let coeff = binomial((n - i) as u64, (n - k) as u64) as i128;
            acc += sign * coeff * f.get(i as isize - 1) as i128;
        }
        h.push(i64::try_from(acc).expect("h-vector entry fits in i64"));
    }
    HVector::new(h)
}

/// Inverse transform: `f_{n-k-1} = sum_{j=k}^{n} C(j, k) h_{n-j}`.
pub fn f_from_h(h: &HVector) -> FVector {
    let n = h.dim();
    let mut f = vec![0u64; n + 1];
    for k in 0..=n {
        let mut acc: i128 = 0;
        for j in k..=n {
            acc += binomial(j as u64, k as u64) as i128 * h.get(n - j) as i128;
        }
        // f index n-k-1 lives at slot n-k
        f[n - k] = u64::try_from(acc).expect("f-vector entry is nonnegative");
    }
    FVector::new(f)
}

/// Dehn-Sommerville check: `h_i = h_{n-i}` for all i.
pub fn check_dehn_sommerville(h: &HVector) -> bool {
    let n = h.dim();
    (0..=n / 2).all(|i| h.get(i) == h.get(n - i))
}

/// g-theorem validity: Dehn-Sommerville, unimodality up to the middle, and
/// the pseudo-power growth condition on the g-vector.
pub fn gtheorem_valid(h: &HVector) -> bool {
    let n = h.dim();
    if h.get(0) != 1 || !check_dehn_sommerville(h) {
        return false;
    }
    let mid = n / 2;
    if (1..=mid).any(|i| h.get(i) < h.get(i - 1)) {
        return false;
    }
    // g_{i+1} <= g_i^<i> for 1 <= i <= mid-1; the i = 0 step only needs
    // g_1 >= 0, which unimodality already gives.
    for i in 1..mid {
        let g_i = h.get(i) - h.get(i - 1);
        let g_next = h.get(i + 1) - h.get(i);
        if g_next > pseudo_power(g_i, i as u64) {
            return false;
        }
    }
    true
}

/// McMullen's pseudo-power `a^<i>`: write `a = C(a_i, i) + ... + C(a_j, j)`
/// as the unique binomial i-expansion, then bump every term to
/// `C(a_s + 1, s + 1)`. By convention `0^<i> = 0`.
fn pseudo_power(a: i64, i: u64) -> i64 {
    debug_assert!(a >= 0 && i >= 1);
    if a == 0 {
        return 0;
    }
    let mut rest = a as u128;
    let mut s = i;
    let mut result: u128 = 0;
    while rest > 0 {
        // largest a_s with C(a_s, s) <= rest
        let mut top = s;
        while binomial(top + 1, s) <= rest {
            top += 1;
        }
        result += binomial(top + 1, s + 1);
        rest -= binomial(top, s);
        if s == 1 {
            debug_assert_eq!(rest, 0, "expansion terminates at index 1");
            break;
        }
        s -= 1;
    }
    i64::try_from(result).expect("pseudo-power fits in i64")
}

/// True iff every k-subset of facets is contained in some vertex set
/// (equivalently, spans a face of the dual simplicial polytope).
pub fn is_k_neighborly(p: &SimplePolytope, k: usize) -> bool {
    assert!(k >= 1 && k <= p.dim(), "1 <= k <= n");
    let count = p
        .faces()
        .iter()
        .filter(|f| f.count_ones() as usize == k)
        .count();
    count as u128 == binomial(p.num_facets() as u64, k as u64)
}

/// Largest k for which the polytope is k-neighborly.
pub fn neighborliness(p: &SimplePolytope) -> usize {
    (1..=p.dim())
        .take_while(|&k| is_k_neighborly(p, k))
        .last()
        .unwrap_or(0)
}
