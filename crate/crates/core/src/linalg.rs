//! Dense linear algebra over a field, and enumeration of subspaces and
//! subsets with a deterministic parallel reduction.

use rayon::prelude::*;

use crate::field::Field;

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
pub fn rref<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(top, p);
        let inv = field.inv(&rows[top][col]);
        for x in rows[top].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[top].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != top && !field.is_zero(&row[col]) {
                let c = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let v = field.mul(&c, p);
                    *x = field.sub(x, &v);
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    pivots
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of the null space `{x : A x = 0}` for `A` with `ncols` columns.
pub fn kernel<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = field.neg(&row[f]);
            }
            v
        })
        .collect()
}

/// Number of `r`-dimensional subspaces of `GF(q)^n`, saturating.
pub fn gaussian_binomial(n: usize, r: usize, q: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let q = q as u128;
    // row[j] = [m, j]_q, updated by [m, j] = [m-1, j-1] + q^j [m-1, j]
    let mut row = vec![0u128; r + 1];
    row[0] = 1;
    for m in 1..=n {
        for j in (1..=r.min(m)).rev() {
            let qj = q.saturating_pow(j as u32);
            row[j] = row[j - 1].saturating_add(qj.saturating_mul(row[j]));
        }
    }
    row[r]
}

/// `C(n, r)`, saturating.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - r + i {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Best score found with the earliest position in the stream attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Best<W> {
    pub score: i64,
    pub index: (usize, u64),
    pub witness: W,
}

fn better<W>(a: Option<Best<W>>, b: Option<Best<W>>) -> Option<Best<W>> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if a.score > b.score || (a.score == b.score && a.index < b.index) {
                Some(a)
            } else {
                Some(b)
            }
        }
    }
}

const CHUNK: u64 = 2048;

/// Walks every `r × n` matrix in reduced row echelon form over the field
/// whose elements are `elems` (zero first, one second), and returns the
/// maximal score of `eval` with the first maximizing matrix. Matrices
/// with `eval = None` are skipped. The result does not depend on the
/// number of worker threads.
pub fn max_over_subspaces<E, FN>(elems: &[E], n: usize, r: usize, eval: FN) -> Option<Best<Vec<Vec<E>>>>
where
    E: Clone + Send + Sync,
    FN: Fn(&[Vec<E>]) -> Option<i64> + Sync,
{
    if r == 0 || r > n {
        return None;
    }
    let q = elems.len() as u64;
    let pivot_sets = subsets(n, r);
    // free positions per pivot set: (row, column)
    let frees: Vec<Vec<(usize, usize)>> = pivot_sets
        .iter()
        .map(|piv| {
            let mut f = Vec::new();
            for (i, &p) in piv.iter().enumerate() {
                for c in p + 1..n {
                    if !piv.contains(&c) {
                        f.push((i, c));
                    }
                }
            }
            f
        })
        .collect();
    let mut tasks: Vec<(usize, u64, u64)> = Vec::new();
    for (k, f) in frees.iter().enumerate() {
        let total = q.pow(f.len() as u32);
        let mut start = 0;
        while start < total {
            let len = CHUNK.min(total - start);
            tasks.push((k, start, len));
            start += len;
        }
    }
    tasks
        .par_iter()
        .map(|&(k, start, len)| {
            let piv = &pivot_sets[k];
            let free = &frees[k];
            let mut m = vec![vec![elems[0].clone(); n]; r];
            for (i, &p) in piv.iter().enumerate() {
                m[i][p] = elems[1].clone();
            }
            let mut best: Option<Best<Vec<Vec<E>>>> = None;
            for idx in start..start + len {
                let mut x = idx;
                for &(i, c) in free.iter().rev() {
                    m[i][c] = elems[(x % q) as usize].clone();
                    x /= q;
                }
                if let Some(score) = eval(&m) {
                    if best.as_ref().is_none_or(|b| score > b.score) {
                        best = Some(Best {
                            score,
                            index: (k, idx),
                            witness: m.clone(),
                        });
                    }
                }
            }
            best
        })
        .reduce(|| None, better)
}

/// Same reduction over all `r`-subsets of `0..n`.
pub fn max_over_subsets<FN>(n: usize, r: usize, eval: FN) -> Option<Best<Vec<usize>>>
where
    FN: Fn(&[usize]) -> Option<i64> + Sync,
{
    let all = subsets(n, r);
    all.par_chunks(CHUNK as usize)
        .enumerate()
        .map(|(c, chunk)| {
            let mut best: Option<Best<Vec<usize>>> = None;
            for (j, s) in chunk.iter().enumerate() {
                if let Some(score) = eval(s) {
                    if best.as_ref().is_none_or(|b| score > b.score) {
                        best = Some(Best {
                            score,
                            index: (0, c as u64 * CHUNK + j as u64),
                            witness: s.clone(),
                        });
                    }
                }
            }
            best
        })
        .reduce(|| None, better)
}
