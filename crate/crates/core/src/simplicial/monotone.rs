//! Monotone maps `[m] → [n]` as value sequences, the morphisms of Δ.

/// All monotone maps `[m] → [n]`, lexicographically ordered.
pub fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m + 1);
    fn rec(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            rec(m, n, v, cur, out);
            cur.pop();
        }
    }
    rec(m, n, 0, &mut cur, &mut out);
    out
}

/// Monotone surjections `[m] ↠ [k]` in lexicographic order.
pub fn surjections(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k > m {
        return Vec::new();
    }
    monotone_maps(m, k).into_iter().filter(|f| is_surjective(f, k)).collect()
}

pub fn is_surjective(f: &[usize], n: usize) -> bool {
    f.first() == Some(&0) && f.last() == Some(&n) && f.windows(2).all(|w| w[1] - w[0] <= 1)
}

pub fn is_injective(f: &[usize]) -> bool {
    f.windows(2).all(|w| w[0] < w[1])
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..=n).collect()
}

/// `δⁱ : [n−1] → [n]`, skipping `i`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|j| if j < i { j } else { j + 1 }).collect()
}

/// `σⁱ : [n+1] → [n]`, hitting `i` twice.
pub fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect()
}

/// `f ∘ g` (apply `g` first).
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// Epi-mono factorization `f = mono ∘ epi` with `epi : [m] ↠ [j]`.
pub fn epi_mono(f: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut image: Vec<usize> = f.to_vec();
    image.dedup();
    let epi = f.iter().map(|v| image.iter().position(|x| x == v).unwrap()).collect();
    (epi, image)
}

/// Index of `f` in [`monotone_maps`]`(f.len() − 1, n)`.
pub fn monotone_index(f: &[usize], n: usize) -> usize {
    // count sequences lexicographically smaller, position by position
    let m = f.len() - 1;
    let mut idx = 0;
    let mut lo = 0;
    for (pos, &v) in f.iter().enumerate() {
        let remaining = m - pos;
        for smaller in lo..v {
            idx += count_monotone(remaining, smaller, n);
        }
        lo = v;
    }
    idx
}

/// Number of monotone sequences of length `len` with values in `[lo, n]`.
fn count_monotone(len: usize, lo: usize, n: usize) -> usize {
    binomial(len + (n - lo), len)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_indices() {
        let maps = monotone_maps(2, 1);
        assert_eq!(maps, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
        for m in 0..4 {
            for n in 0..4 {
                let all = monotone_maps(m, n);
                assert_eq!(all.len(), binomial(m + n + 1, m + 1));
                for (i, f) in all.iter().enumerate() {
                    assert_eq!(monotone_index(f, n), i);
                }
            }
        }
        assert_eq!(surjections(3, 1).len(), 3);
    }

    #[test]
    fn cosimplicial_identities() {
        // σʲ δʲ = id = σʲ δʲ⁺¹
        for n in 1..4 {
            for j in 0..n {
                assert_eq!(compose(&codegeneracy(n - 1, j), &coface(n, j)), identity(n - 1));
                assert_eq!(compose(&codegeneracy(n - 1, j), &coface(n, j + 1)), identity(n - 1));
            }
        }
        let (e, m) = epi_mono(&[1, 1, 3]);
        assert_eq!(e, vec![0, 0, 1]);
        assert_eq!(m, vec![1, 3]);
    }
}
