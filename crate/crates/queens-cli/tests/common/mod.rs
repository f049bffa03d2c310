//! Independent oracles for the acceptance suite: geometric board scanners
//! and a permutation-filter counter with no pruning. These deliberately
//! avoid the sum/difference calculus used by the library verifiers.

use queens::Placement;

/// Plain row/column/diagonal scan.
pub fn standard_scanner(p: &Placement) -> bool {
    let queens = p.queens();
    for (idx, &(r1, c1)) in queens.iter().enumerate() {
        for &(r2, c2) in &queens[idx + 1..] {
            if r1 == r2 || c1 == c2 {
                return false;
            }
            let dr = r1 as i64 - r2 as i64;
            let dc = c1 as i64 - c2 as i64;
            if dr.abs() == dc.abs() {
                return false;
            }
        }
    }
    true
}

/// Scan with wrap-around diagonals.
pub fn toroidal_scanner(p: &Placement) -> bool {
    let n = p.n() as i64;
    let queens = p.queens();
    for (idx, &(r1, c1)) in queens.iter().enumerate() {
        for &(r2, c2) in &queens[idx + 1..] {
            let (r1, c1, r2, c2) = (r1 as i64, c1 as i64, r2 as i64, c2 as i64);
            if r1 == r2 || c1 == c2 {
                return false;
            }
            if (r1 + c1).rem_euclid(n) == (r2 + c2).rem_euclid(n) {
                return false;
            }
            if (r1 - c1).rem_euclid(n) == (r2 - c2).rem_euclid(n) {
                return false;
            }
        }
    }
    true
}

fn permutation_is_solution(cols: &[usize], modular: bool) -> bool {
    let n = cols.len() as i64;
    for i in 0..cols.len() {
        for j in i + 1..cols.len() {
            let (r1, c1) = (i as i64 + 1, cols[i] as i64);
            let (r2, c2) = (j as i64 + 1, cols[j] as i64);
            if modular {
                if (r1 + c1).rem_euclid(n) == (r2 + c2).rem_euclid(n)
                    || (r1 - c1).rem_euclid(n) == (r2 - c2).rem_euclid(n)
                {
                    return false;
                }
            } else if (r1 - r2).abs() == (c1 - c2).abs() {
                return false;
            }
        }
    }
    true
}

/// Counts solutions by filtering every permutation, generated with Heap's
/// algorithm. No pruning, no shared code with the backtracking enumerator.
pub fn naive_count(n: usize, modular: bool) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut cols: Vec<usize> = (1..=n).collect();
    let mut stack = vec![0usize; n];
    let mut count = u64::from(permutation_is_solution(&cols, modular));
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                cols.swap(0, i);
            } else {
                cols.swap(stack[i], i);
            }
            if permutation_is_solution(&cols, modular) {
                count += 1;
            }
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    count
}
