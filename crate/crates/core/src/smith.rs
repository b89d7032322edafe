//! Smith normal form of small integer matrices, used to read off finitely
//! generated abelian groups from relation matrices.

/// Returns the nonzero diagonal entries `d_1 | d_2 | ...` of the Smith normal
/// form of `m` (all positive).
pub fn invariant_factors(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| a[r][c] != 0)
            .min_by_key(|&(r, c)| a[r][c].unsigned_abs())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for r in t + 1..rows {
                let q = a[r][t].div_euclid(p);
                if q != 0 {
                    for c in t..cols {
                        a[r][c] -= q * a[t][c];
                    }
                }
                dirty |= a[r][t] != 0;
            }
            for c in t + 1..cols {
                let q = a[t][c].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[c] -= q * row[t];
                    }
                }
                dirty |= a[t][c] != 0;
            }
            if !dirty {
                // divisibility of the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                    .find(|&(r, c)| a[r][c] % p != 0);
                match bad {
                    None => break,
                    Some((r, _)) => {
                        for c in t..cols {
                            a[t][c] += a[r][c];
                        }
                        continue;
                    }
                }
            }
            // move the smallest remainder into the pivot position
            let (pr, pc) = (t..rows)
                .map(|r| (r, t))
                .chain((t..cols).map(|c| (t, c)))
                .filter(|&(r, c)| a[r][c] != 0)
                .min_by_key(|&(r, c)| a[r][c].unsigned_abs())
                .expect("pivot row/column cannot vanish");
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::invariant_factors;

    #[test]
    fn diagonal_examples() {
        assert_eq!(invariant_factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(invariant_factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(invariant_factors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(invariant_factors(&[]), Vec::<i64>::new());
        assert_eq!(invariant_factors(&[vec![0, 2, 0], vec![0, 0, 0]]), vec![2]);
    }
}
