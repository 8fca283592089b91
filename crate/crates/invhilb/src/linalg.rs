//! Exact dense linear algebra over a [`Field`].

use crate::scalar::Field;

/// Row-reduces `m` in place and returns its rank.
pub fn row_reduce<F: Field>(m: &mut [Vec<F>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][c].inv();
        for v in m[rank].iter_mut() {
            *v = v.mul_ref(&inv);
        }
        for r in 0..rows {
            if r == rank || m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone();
            for k in c..cols {
                let d = f.mul_ref(&m[rank][k]);
                m[r][k] = m[r][k].sub_ref(&d);
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut work = m.to_vec();
    row_reduce(&mut work)
}

/// Dimension of the kernel of `m` acting on column vectors.
pub fn nullity<F: Field>(m: &[Vec<F>], ncols: usize) -> usize {
    ncols - rank(m)
}

/// A basis of the kernel of `m` acting on column vectors of length `ncols`.
pub fn kernel<F: Field>(m: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut work = m.to_vec();
    let rank = row_reduce(&mut work);
    let mut pivots = Vec::with_capacity(rank);
    for row in work.iter().take(rank) {
        pivots.push(row.iter().position(|v| !v.is_zero()).unwrap_or(ncols));
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -work[r][free].clone();
        }
        out.push(v);
    }
    out
}
