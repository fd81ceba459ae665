//! Closed-form descriptions of the canonical and symmetric canonical sets
//! of the classical groups and their quotients, plus the closed-form uniton
//! numbers for the odd orthogonal family.
//!
//! These formulas are kept strictly independent of the box-search
//! enumerator in [`crate::canonical`]; the two are compared set-for-set in
//! the acceptance suite.
//!
//! Node sets are 0-based here as everywhere in the crate; parity conditions
//! refer to the 1-based node number, written out explicitly below.

use std::collections::BTreeSet;

type Coords = Vec<i64>;

fn base(n: usize, support: &[usize]) -> Coords {
    let mut v = vec![0i64; n];
    for &i in support {
        v[i] = 1;
    }
    v
}

fn node_number(i: usize) -> usize {
    i + 1
}

fn sorted(set: BTreeSet<Coords>) -> Vec<Coords> {
    set.into_iter().collect()
}

fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

// ---------------------------------------------------------------------
// B_n = so(2n+1)
// ---------------------------------------------------------------------

/// I-canonical elements of `Spin(2n+1)`: the unique `xi_I` when the node
/// sum of `I` is even, otherwise `xi_I + H_j` over odd nodes `j` of `I`.
pub fn spin_odd_canonical(n: usize, support: &[usize]) -> Vec<Coords> {
    let s: usize = support.iter().map(|&i| node_number(i)).sum();
    let mut out = BTreeSet::new();
    if s % 2 == 0 {
        out.insert(base(n, support));
    } else {
        for &j in support {
            if node_number(j) % 2 == 1 {
                let mut v = base(n, support);
                v[j] += 1;
                out.insert(v);
            }
        }
    }
    sorted(out)
}

/// I-canonical elements of `SO(2n+1)`: always the single `xi_I`.
pub fn so_odd_canonical(n: usize, support: &[usize]) -> Vec<Coords> {
    vec![base(n, support)]
}

/// Symmetric canonical elements of `Spin(2n+1)`: for every even-node-sum
/// `I`, the elements `xi_I` and `xi_I + 2 H_j` over all odd nodes `j`.
pub fn spin_odd_symmetric(n: usize) -> Vec<Coords> {
    let mut out = BTreeSet::new();
    for support in all_subsets(n) {
        let s: usize = support.iter().map(|&i| node_number(i)).sum();
        if s % 2 != 0 {
            continue;
        }
        let b = base(n, &support);
        out.insert(b.clone());
        for j in 0..n {
            if node_number(j) % 2 == 1 {
                let mut v = b.clone();
                v[j] += 2;
                out.insert(v);
            }
        }
    }
    sorted(out)
}

/// Symmetric canonical elements of a trivial-centre group of rank `n`:
/// all the `xi_I`.
pub fn trivial_centre_symmetric(n: usize) -> Vec<Coords> {
    let mut out = BTreeSet::new();
    for support in all_subsets(n) {
        out.insert(base(n, &support));
    }
    sorted(out)
}

// ---------------------------------------------------------------------
// C_n = sp(n)
// ---------------------------------------------------------------------

/// I-canonical elements of `Sp(n)`: the unique `xi_I + delta_I(n) H_n`.
pub fn sp_canonical(n: usize, support: &[usize]) -> Vec<Coords> {
    let mut v = base(n, support);
    if support.contains(&(n - 1)) {
        v[n - 1] += 1;
    }
    vec![v]
}

/// Symmetric canonical elements of `Sp(n)`: `xi_I + delta_I(n) H_n` over
/// all subsets `I`.
pub fn sp_symmetric(n: usize) -> Vec<Coords> {
    let mut out = BTreeSet::new();
    for support in all_subsets(n) {
        let mut v = base(n, &support);
        if support.contains(&(n - 1)) {
            v[n - 1] += 1;
        }
        out.insert(v);
    }
    sorted(out)
}

// ---------------------------------------------------------------------
// D_n = so(2n)
// ---------------------------------------------------------------------

fn tail_and_odds(n: usize, support: &[usize]) -> (Vec<usize>, Vec<usize>, usize) {
    let tail: Vec<usize> = support.iter().copied().filter(|&i| i >= n - 2).collect();
    let body: Vec<usize> = support.iter().copied().filter(|&i| i < n - 2).collect();
    let odds: Vec<usize> =
        body.iter().copied().filter(|&j| node_number(j) % 2 == 1).collect();
    let body_sum: usize = body.iter().map(|&i| node_number(i)).sum();
    (tail, odds, body_sum)
}

/// I-canonical elements of `Spin(2n)`.
pub fn spin_even_canonical(n: usize, support: &[usize]) -> Vec<Coords> {
    let (tail, odds, body_sum) = tail_and_odds(n, support);
    let b = base(n, support);
    let mut out = BTreeSet::new();
    let mut add = |bumps: &[(usize, i64)]| {
        let mut v = b.clone();
        for &(node, c) in bumps {
            v[node] += c;
        }
        out.insert(v);
    };
    if n % 2 == 1 {
        if body_sum % 2 == 0 {
            if tail.len() == 1 {
                let s = tail[0];
                add(&[(s, 3)]);
                for &j in &odds {
                    add(&[(s, 1), (j, 1)]);
                }
            } else {
                add(&[]);
            }
        } else {
            for &j in &odds {
                match tail.len() {
                    0 => add(&[(j, 1)]),
                    1 => add(&[(tail[0], 1)]),
                    _ => {
                        for &s in &tail {
                            add(&[(s, 2)]);
                        }
                        add(&[(j, 1)]);
                    }
                }
            }
        }
    } else if body_sum % 2 == 0 {
        match tail.len() {
            0 => add(&[]),
            1 => add(&[(tail[0], 1)]),
            _ => {
                for &j in &odds {
                    add(&[(j, 1)]);
                }
                add(&[(n - 2, 1), (n - 1, 1)]);
            }
        }
    } else {
        for &j in &odds {
            match tail.len() {
                0 => add(&[(j, 1)]),
                1 => add(&[(tail[0], 1), (j, 1)]),
                _ => add(&[]),
            }
        }
    }
    sorted(out)
}

/// I-canonical elements of `SO(2n)`: the unique `xi_I + eps^1_I H_s`.
pub fn so_even_canonical(n: usize, support: &[usize]) -> Vec<Coords> {
    let (tail, _, _) = tail_and_odds(n, support);
    let mut v = base(n, support);
    if tail.len() == 1 {
        v[tail[0]] += 1;
    }
    vec![v]
}

/// Symmetric canonical elements of `SO(2n)`: `xi_I + eps^1_I H_s` and
/// `xi_I + eps^1_I H_s + 2 eps^2_I H_s`.
pub fn so_even_symmetric(n: usize) -> Vec<Coords> {
    let mut out = BTreeSet::new();
    for support in all_subsets(n) {
        let (tail, _, _) = tail_and_odds(n, &support);
        let b = base(n, &support);
        match tail.len() {
            1 => {
                let mut v = b;
                v[tail[0]] += 1;
                out.insert(v);
            }
            2 => {
                out.insert(b.clone());
                for &s in &tail {
                    let mut v = b.clone();
                    v[s] += 2;
                    out.insert(v);
                }
            }
            _ => {
                out.insert(b);
            }
        }
    }
    sorted(out)
}

/// I-canonical elements of `Spin(2n)/{1,w}` (`n` even, `w = [H_n]`).
pub fn spin_even_mod_w_canonical(n: usize, support: &[usize]) -> Vec<Coords> {
    debug_assert!(n % 2 == 0);
    let (tail, odds, body_sum) = tail_and_odds(n, support);
    let b = base(n, support);
    let mut out = BTreeSet::new();
    if body_sum % 2 == 0 {
        if support.contains(&(n - 2)) {
            let mut v = b.clone();
            v[n - 2] += 1;
            out.insert(v);
            for &j in &odds {
                let mut v = b.clone();
                v[j] += 1;
                out.insert(v);
            }
        } else {
            out.insert(b);
        }
    } else {
        let has_n = support.contains(&(n - 1));
        for &j in &odds {
            let bump = match tail.len() {
                0 => 1,
                1 if has_n => 1,
                _ => 0,
            };
            let mut v = b.clone();
            v[j] += bump;
            out.insert(v);
        }
    }
    sorted(out)
}

/// I-canonical elements of `Spin(2n)/{1,-w}` (`n` even, `-w = [H_{n-1}]`).
/// The diagram swap of the two fork nodes exchanges `w` and `-w`, so this
/// set is the swap-image of the `{1,w}` set for the swapped support.
pub fn spin_even_mod_minus_w_canonical(n: usize, support: &[usize]) -> Vec<Coords> {
    debug_assert!(n % 2 == 0);
    let swap_node = |i: usize| -> usize {
        if i == n - 1 {
            n - 2
        } else if i == n - 2 {
            n - 1
        } else {
            i
        }
    };
    let swapped: Vec<usize> = support.iter().map(|&i| swap_node(i)).collect();
    let mut out: Vec<Coords> = spin_even_mod_w_canonical(n, &swapped)
        .into_iter()
        .map(|v| {
            let mut w = v.clone();
            w.swap(n - 2, n - 1);
            w
        })
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------
// uniton numbers for B_n
// ---------------------------------------------------------------------

/// Closed-form uniton number of `xi_I` (or `xi_I + H_j` when `j` is given)
/// for the fundamental representation `rho_k` of the odd orthogonal family:
/// `2|I| + 2|I cap {2..n}| + ... + 2|I cap {k..n}|`, plus `2 min(j,k)` for
/// the bumped element, the whole value halved for the spinor case `k = n`.
/// `support` is 0-based, `j` and `k` are 1-based node numbers.
pub fn uniton_b_closed_form(n: usize, support: &[usize], j: Option<usize>, k: usize) -> u64 {
    assert!(k >= 1 && k <= n);
    if let Some(j) = j {
        assert!(j % 2 == 1 && support.contains(&(j - 1)), "j must be an odd node of I");
    }
    let mut total: u64 = 0;
    for t in 1..=k {
        let count = support.iter().filter(|&&i| node_number(i) >= t).count() as u64;
        total += 2 * count;
    }
    if let Some(j) = j {
        total += 2 * j.min(k) as u64;
    }
    if k == n {
        debug_assert!(total % 2 == 0);
        total /= 2;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin7_closed_forms() {
        assert_eq!(spin_odd_canonical(3, &[0, 1, 2]), vec![vec![1, 1, 1]]);
        assert_eq!(spin_odd_canonical(3, &[0, 1]), vec![vec![2, 1, 0]]);
        assert_eq!(spin_odd_canonical(3, &[1, 2]), vec![vec![0, 1, 2]]);
        assert_eq!(spin_odd_canonical(3, &[0]), vec![vec![2, 0, 0]]);
    }

    #[test]
    fn spin9_odd_sum_has_one_element_per_odd_node() {
        // I = {1,2}: node sum 3, only j = 1 is odd
        assert_eq!(spin_odd_canonical(4, &[0, 1]), vec![vec![2, 1, 0, 0]]);
        // I = {1,2,3}: node sum 6 even
        assert_eq!(spin_odd_canonical(4, &[0, 1, 2]), vec![vec![1, 1, 1, 0]]);
        // I = {1,3,4}: node sum 8 even
        assert_eq!(spin_odd_canonical(4, &[0, 2, 3]), vec![vec![1, 0, 1, 1]]);
        // I = {3}: two odd-node bumps never arise; j must lie in I
        assert_eq!(spin_odd_canonical(4, &[2]), vec![vec![0, 0, 2, 0]]);
    }

    #[test]
    fn sp_closed_forms() {
        assert_eq!(sp_canonical(2, &[0, 1]), vec![vec![1, 2]]);
        assert_eq!(sp_canonical(2, &[1]), vec![vec![0, 2]]);
        assert_eq!(sp_canonical(2, &[0]), vec![vec![1, 0]]);
        assert_eq!(sp_symmetric(2), vec![vec![0, 0], vec![0, 2], vec![1, 0], vec![1, 2]]);
    }

    #[test]
    fn spin6_closed_forms() {
        assert_eq!(
            spin_even_canonical(3, &[0, 1, 2]),
            vec![vec![1, 1, 3], vec![1, 3, 1], vec![2, 1, 1]]
        );
        assert_eq!(spin_even_canonical(3, &[1]), vec![vec![0, 4, 0]]);
        assert_eq!(spin_even_canonical(3, &[0, 1]), vec![vec![1, 2, 0]]);
        assert_eq!(spin_even_canonical(3, &[1, 2]), vec![vec![0, 1, 1]]);
    }

    #[test]
    fn spin8_mod_w_examples() {
        // I = {1,3}: body sum 1 odd, tail = {3}, n not in I: no bump
        assert_eq!(spin_even_mod_w_canonical(4, &[0, 2]), vec![vec![1, 0, 1, 0]]);
        // I = {4} alone
        assert_eq!(spin_even_mod_w_canonical(4, &[3]), vec![vec![0, 0, 0, 1]]);
        // -w quotient is the fork-swap image
        assert_eq!(spin_even_mod_minus_w_canonical(4, &[2]), vec![vec![0, 0, 1, 0]]);
        assert_eq!(spin_even_mod_minus_w_canonical(4, &[0, 2]), vec![vec![2, 0, 1, 0]]);
    }

    #[test]
    fn uniton_closed_form_values() {
        // n=3, I={1,2,3}, k=1
        assert_eq!(uniton_b_closed_form(3, &[0, 1, 2], None, 1), 6);
        // n=3, I={2}, k=3 (spinor halving)
        assert_eq!(uniton_b_closed_form(3, &[1], None, 3), 2);
        // empty support
        assert_eq!(uniton_b_closed_form(3, &[], None, 1), 0);
        // bumped element adds 2 min(j,k)
        assert_eq!(
            uniton_b_closed_form(3, &[0, 1], Some(1), 1)
                - uniton_b_closed_form(3, &[0, 1], None, 1),
            2
        );
    }
}
