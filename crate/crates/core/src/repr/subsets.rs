/// All `k`-element subsets of `0..m` in lexicographic order.
pub fn lex_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k > m {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Rightmost position that can still advance.
        let Some(i) = (0..k).rev().find(|&i| cur[i] < m - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Sign bits of `j` over `width` positions, most significant first.
/// A set bit stands for a `-1` coefficient.
pub fn sign_bits(j: usize, width: usize) -> impl Iterator<Item = bool> {
    (0..width).map(move |i| (j >> (width - 1 - i)) & 1 == 1)
}

pub fn binomial(m: usize, k: usize) -> usize {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}
