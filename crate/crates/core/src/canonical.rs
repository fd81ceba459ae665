//! The partial orders on dominant lattice elements and the enumeration of
//! canonical elements.
//!
//! For `xi = sum n_i H_i` and `xi' = sum n'_i H_i` dominant, `xi <= xi'`
//! holds exactly when `n'_i <= n_i` for all `i`; maximal elements therefore
//! have componentwise-minimal coefficients. I-canonical elements are found
//! by an exhaustive search over the box `1 <= n_i <= m_i` (support exactly
//! `I`), symmetric canonical elements over `0 <= n_i <= 2 m_i - 1`, where
//! `m_i` is the minimal multiplier of the node. The boxes can be enlarged
//! for sanity sweeps.

use crate::error::{Error, Result};
use crate::lattice::GroupSpec;
use crate::rat::dot_int;
use crate::rootdata::{CoweightVec, RootDatum};
use rayon::prelude::*;

/// The eigenspace-inclusion order, evaluated rootwise: `xi <= xi'` iff for
/// every root `alpha`, `alpha(xi') <= max(alpha(xi), 0)`. On dominant
/// integral elements this coincides with the componentwise test.
pub fn preceq(datum: &RootDatum, xi: &CoweightVec, xi2: &CoweightVec) -> Result<bool> {
    let a = xi.integer_coords().ok_or(Error::NonIntegralEigenvalue)?;
    let b = xi2.integer_coords().ok_or(Error::NonIntegralEigenvalue)?;
    if a.len() != datum.rank() || b.len() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), got: a.len().max(b.len()) });
    }
    for root in datum.roots() {
        let pa = dot_int(root, &a);
        let pb = dot_int(root, &b);
        if pb > pa.max(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The refined order: `xi <=_I xi'` iff `xi <= xi'` and `xi - xi'` lies in
/// `I^2(G) = 2 I(G)`.
pub fn preceq_symmetric(spec: &GroupSpec, xi: &CoweightVec, xi2: &CoweightVec) -> Result<bool> {
    if !preceq(spec.datum(), xi, xi2)? {
        return Ok(false);
    }
    Ok(spec.contains_i2(&xi.sub(xi2)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalKind {
    /// Maximal elements of the dominant lattice cone with support exactly `I`
    /// (0-based node set).
    I(Vec<usize>),
    /// Maximal elements under the refined order.
    Symmetric,
}

/// A complete, deduplicated, lexicographically sorted set of canonical
/// elements of one kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSet {
    pub kind: CanonicalKind,
    pub elements: Vec<CoweightVec>,
}

const BOX_CAP: u128 = 8_000_000;

/// All I-canonical elements of `spec` for the support set `support`
/// (0-based, nonempty).
pub fn i_canonical_elements(spec: &GroupSpec, support: &[usize]) -> Result<CanonicalSet> {
    i_canonical_elements_boxed(spec, support, 1)
}

/// Same search over the box `1 <= n_i <= scale * m_i`; `scale > 1` is a
/// sanity sweep and must return the same set.
pub fn i_canonical_elements_boxed(
    spec: &GroupSpec,
    support: &[usize],
    scale: u64,
) -> Result<CanonicalSet> {
    let k = spec.datum().rank();
    let mut support: Vec<usize> = support.to_vec();
    support.sort_unstable();
    support.dedup();
    if support.is_empty() {
        return Err(Error::EmptySupport { rank: k });
    }
    if let Some(&bad) = support.iter().find(|&&i| i >= k) {
        return Err(Error::NodeOutOfRange { index: bad + 1, rank: k });
    }

    let bounds: Vec<u64> = support
        .iter()
        .map(|&i| spec.minimal_multiplier(i).map(|m| m * scale))
        .collect::<Result<_>>()?;
    let size: u128 = bounds.iter().map(|&b| b as u128).product();
    if size > BOX_CAP {
        return Err(Error::EnumerationTooLarge { size });
    }

    let mut members: Vec<Vec<i64>> = Vec::new();
    let mut counters: Vec<u64> = vec![1; support.len()];
    loop {
        let mut coords = vec![0i64; k];
        for (pos, &node) in support.iter().enumerate() {
            coords[node] = counters[pos] as i64;
        }
        if spec.contains(&CoweightVec::from_ints(&coords)) {
            members.push(coords);
        }
        // odometer over the box
        let mut pos = 0;
        loop {
            if pos == support.len() {
                break;
            }
            if counters[pos] < bounds[pos] {
                counters[pos] += 1;
                break;
            }
            counters[pos] = 1;
            pos += 1;
        }
        if pos == support.len() {
            break;
        }
    }

    let elements = keep_componentwise_minimal(members);
    Ok(CanonicalSet {
        kind: CanonicalKind::I(support),
        elements: elements.into_iter().map(|v| CoweightVec::from_ints(&v)).collect(),
    })
}

/// Keeps the componentwise-minimal vectors (the maximal elements of the
/// order). Scanning in increasing coordinate-sum order guarantees every
/// dominating member is seen before anything it dominates.
fn keep_componentwise_minimal(mut members: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    members.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    let mut minimal: Vec<Vec<i64>> = Vec::new();
    'outer: for cand in members {
        for kept in &minimal {
            if kept.iter().zip(&cand).all(|(a, b)| a <= b) {
                continue 'outer;
            }
        }
        minimal.push(cand);
    }
    minimal.sort();
    minimal
}

/// All symmetric canonical elements of `spec`.
pub fn symmetric_canonical_elements(spec: &GroupSpec) -> Result<CanonicalSet> {
    symmetric_canonical_elements_boxed(spec, 1)
}

/// Same search over the box `0 <= n_i <= scale * (2 m_i - 1)`.
pub fn symmetric_canonical_elements_boxed(spec: &GroupSpec, scale: u64) -> Result<CanonicalSet> {
    let k = spec.datum().rank();
    let bounds: Vec<u64> = (0..k)
        .map(|i| spec.minimal_multiplier(i).map(|m| (2 * m - 1) * scale))
        .collect::<Result<_>>()?;
    let size: u128 = bounds.iter().map(|&b| b as u128 + 1).product();
    if size > BOX_CAP {
        return Err(Error::EnumerationTooLarge { size });
    }

    let mut members: Vec<Vec<i64>> = Vec::new();
    let mut counters: Vec<u64> = vec![0; k];
    loop {
        let coords: Vec<i64> = counters.iter().map(|&c| c as i64).collect();
        if spec.contains(&CoweightVec::from_ints(&coords)) {
            members.push(coords);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                break;
            }
            if counters[pos] < bounds[pos] {
                counters[pos] += 1;
                break;
            }
            counters[pos] = 0;
            pos += 1;
        }
        if pos == k {
            break;
        }
    }

    // xi is dominated iff some member y <= xi componentwise has (xi-y)/2 in
    // I(G); such y shares xi's coordinate parities.
    let mut by_parity: std::collections::BTreeMap<Vec<i64>, Vec<usize>> = Default::default();
    for (i, m) in members.iter().enumerate() {
        by_parity.entry(m.iter().map(|x| x & 1).collect()).or_default().push(i);
    }
    let mut elements: Vec<Vec<i64>> = Vec::new();
    for (i, cand) in members.iter().enumerate() {
        let class = &by_parity[&cand.iter().map(|x| x & 1).collect::<Vec<_>>()];
        let dominated = class.iter().any(|&j| {
            if j == i {
                return false;
            }
            let other = &members[j];
            if !other.iter().zip(cand).all(|(a, b)| a <= b) {
                return false;
            }
            let half: Vec<i64> = cand.iter().zip(other).map(|(a, b)| (a - b) / 2).collect();
            spec.contains(&CoweightVec::from_ints(&half))
        });
        if !dominated {
            elements.push(cand.clone());
        }
    }
    elements.sort();
    Ok(CanonicalSet {
        kind: CanonicalKind::Symmetric,
        elements: elements.into_iter().map(|v| CoweightVec::from_ints(&v)).collect(),
    })
}

/// I-canonical sets for every nonempty support, in (size, support) order.
/// The searches run in parallel; the output order is fixed by the support
/// list, not the schedule.
pub fn all_i_canonical(spec: &GroupSpec) -> Result<Vec<(Vec<usize>, CanonicalSet)>> {
    let k = spec.datum().rank();
    let mut supports: Vec<Vec<usize>> = (1u32..(1 << k))
        .map(|mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();
    supports.sort_by_key(|s| (s.len(), s.clone()));
    supports
        .par_iter()
        .map(|s| i_canonical_elements(spec, s).map(|set| (s.clone(), set)))
        .collect()
}

/// Orbit representatives (lexicographically smallest) of a set of elements
/// under the diagram automorphisms.
pub fn reduce_mod_diagram_autos(datum: &RootDatum, elements: &[CoweightVec]) -> Vec<CoweightVec> {
    let mut out: Vec<CoweightVec> = elements
        .iter()
        .map(|xi| {
            datum
                .diagram_autos()
                .iter()
                .map(|sigma| datum.permute_coweight(sigma, xi))
                .min()
                .expect("identity is always present")
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The canonical filtration of a unit-coefficient element
/// `xi_I = sum_{j in I} H_j`: the chain obtained by dropping the support
/// indices from the smallest up, ending at zero.
pub fn canonical_filtration(xi: &CoweightVec) -> Result<Vec<CoweightVec>> {
    let coords = xi.integer_coords().ok_or(Error::NotUnitCoefficients)?;
    if coords.iter().any(|&c| c != 0 && c != 1) {
        return Err(Error::NotUnitCoefficients);
    }
    let support: Vec<usize> = (0..coords.len()).filter(|&i| coords[i] == 1).collect();
    let mut chain = Vec::with_capacity(support.len() + 1);
    for t in 0..=support.len() {
        let mut v = vec![0i64; coords.len()];
        for &j in &support[t..] {
            v[j] = 1;
        }
        chain.push(CoweightVec::from_ints(&v));
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::GroupSpec;
    use crate::rootdata::{AlgebraKind, Family};

    fn spin(n: usize) -> GroupSpec {
        GroupSpec::simply_connected(AlgebraKind::new(Family::B, n).unwrap())
    }

    fn xi(coords: &[i64]) -> CoweightVec {
        CoweightVec::from_ints(coords)
    }

    #[test]
    fn preceq_examples() {
        let spec = spin(3);
        let d = spec.datum();
        // reflexivity
        assert!(preceq(d, &xi(&[2, 1, 0]), &xi(&[2, 1, 0])).unwrap());
        // componentwise: 2H_1+H_2 <= H_2, not conversely
        assert!(preceq(d, &xi(&[2, 1, 0]), &xi(&[0, 1, 0])).unwrap());
        assert!(!preceq(d, &xi(&[0, 1, 0]), &xi(&[2, 1, 0])).unwrap());
        // zero is the top element
        assert!(preceq(d, &xi(&[1, 1, 1]), &xi(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn preceq_rejects_non_integral() {
        let spec = spin(2);
        let half = CoweightVec::new(vec![crate::rat::ratio(1, 2), crate::rat::rat(0)]);
        assert_eq!(
            preceq(spec.datum(), &half, &xi(&[0, 0])),
            Err(Error::NonIntegralEigenvalue)
        );
    }

    #[test]
    fn preceq_symmetric_spin() {
        let spec = spin(3);
        // xi_I and xi_I + 2H_j are both symmetric canonical for j odd, so
        // they must be unrelated: 2H_j is in I^2 only for j even.
        let base = xi(&[0, 1, 0]); // H_2
        assert!(!preceq_symmetric(&spec, &xi(&[2, 1, 0]), &base).unwrap());
        assert!(!preceq_symmetric(&spec, &xi(&[0, 1, 2]), &base).unwrap());
        assert!(preceq_symmetric(&spec, &xi(&[0, 3, 0]), &base).unwrap());
        // reflexivity
        assert!(preceq_symmetric(&spec, &base, &base).unwrap());
    }

    #[test]
    fn preceq_symmetric_sp() {
        let sp2 = GroupSpec::simply_connected(AlgebraKind::new(Family::C, 2).unwrap());
        // H_1 + 2H_2 vs H_1: the difference 2H_2 halves to H_2, not in I(Sp(2))
        assert!(!preceq_symmetric(&sp2, &xi(&[1, 2]), &xi(&[1, 0])).unwrap());
        assert!(preceq_symmetric(&sp2, &xi(&[1, 4]), &xi(&[1, 0])).unwrap());
    }

    #[test]
    fn spin7_table() {
        let spec = spin(3);
        let cases: Vec<(Vec<usize>, Vec<Vec<i64>>)> = vec![
            (vec![0, 1, 2], vec![vec![1, 1, 1]]),
            (vec![0, 1], vec![vec![2, 1, 0]]),
            (vec![0, 2], vec![vec![1, 0, 1]]),
            (vec![1, 2], vec![vec![0, 1, 2]]),
            (vec![0], vec![vec![2, 0, 0]]),
            (vec![1], vec![vec![0, 1, 0]]),
            (vec![2], vec![vec![0, 0, 2]]),
        ];
        for (support, expect) in cases {
            let set = i_canonical_elements(&spec, &support).unwrap();
            let got: Vec<Vec<i64>> =
                set.elements.iter().map(|e| e.integer_coords().unwrap()).collect();
            assert_eq!(got, expect, "I={support:?}");
        }
    }

    #[test]
    fn spin6_full_support() {
        let spec = GroupSpec::simply_connected(AlgebraKind::new(Family::D, 3).unwrap());
        let set = i_canonical_elements(&spec, &[0, 1, 2]).unwrap();
        let got: Vec<Vec<i64>> =
            set.elements.iter().map(|e| e.integer_coords().unwrap()).collect();
        assert_eq!(got, vec![vec![1, 1, 3], vec![1, 3, 1], vec![2, 1, 1]]);
    }

    #[test]
    fn sp_unique_canonical() {
        let sp3 = GroupSpec::simply_connected(AlgebraKind::new(Family::C, 3).unwrap());
        for support in [vec![0usize], vec![2], vec![0, 2], vec![0, 1, 2]] {
            let set = i_canonical_elements(&sp3, &support).unwrap();
            assert_eq!(set.elements.len(), 1, "I={support:?}");
            let coords = set.elements[0].integer_coords().unwrap();
            for (i, &c) in coords.iter().enumerate() {
                let expect = if !support.contains(&i) {
                    0
                } else if i == 2 {
                    2
                } else {
                    1
                };
                assert_eq!(c, expect);
            }
        }
    }

    #[test]
    fn empty_support_rejected() {
        let spec = spin(3);
        assert!(matches!(
            i_canonical_elements(&spec, &[]),
            Err(Error::EmptySupport { .. })
        ));
    }

    #[test]
    fn spin7_symmetric_set() {
        let spec = spin(3);
        let set = symmetric_canonical_elements(&spec).unwrap();
        let got: Vec<Vec<i64>> =
            set.elements.iter().map(|e| e.integer_coords().unwrap()).collect();
        // xi_I for even-sum I, plus xi_I + 2H_j for odd j
        let mut expect = vec![];
        for i in [vec![], vec![1usize], vec![0, 2], vec![0, 1, 2]] {
            let base: Vec<i64> = (0..3).map(|t| i.contains(&t) as i64).collect();
            expect.push(base.clone());
            for j in [0usize, 2] {
                let mut b = base.clone();
                b[j] += 2;
                expect.push(b);
            }
        }
        expect.sort();
        expect.dedup();
        assert_eq!(got, expect);
    }

    #[test]
    fn sp_symmetric_set() {
        let sp2 = GroupSpec::simply_connected(AlgebraKind::new(Family::C, 2).unwrap());
        let set = symmetric_canonical_elements(&sp2).unwrap();
        let got: Vec<Vec<i64>> =
            set.elements.iter().map(|e| e.integer_coords().unwrap()).collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 2], vec![1, 0], vec![1, 2]]);
    }

    #[test]
    fn wider_box_changes_nothing() {
        for spec in [
            spin(4),
            GroupSpec::simply_connected(AlgebraKind::new(Family::D, 4).unwrap()),
            GroupSpec::quotient_by_names(AlgebraKind::new(Family::D, 4).unwrap(), &["w"]).unwrap(),
        ] {
            let a = symmetric_canonical_elements(&spec).unwrap();
            let b = symmetric_canonical_elements_boxed(&spec, 2).unwrap();
            assert_eq!(a.elements, b.elements, "{spec}");
            for support in [vec![0usize, 1], vec![0, 2, 3], vec![3]] {
                let a = i_canonical_elements(&spec, &support).unwrap();
                let b = i_canonical_elements_boxed(&spec, &support, 2).unwrap();
                assert_eq!(a.elements, b.elements, "{spec} I={support:?}");
            }
        }
    }

    #[test]
    fn trivial_centre_unique_canonical() {
        let so7 = GroupSpec::adjoint(AlgebraKind::new(Family::B, 3).unwrap());
        for (support, expect) in [
            (vec![0usize, 1, 2], vec![1i64, 1, 1]),
            (vec![1], vec![0, 1, 0]),
        ] {
            let set = i_canonical_elements(&so7, &support).unwrap();
            assert_eq!(set.elements.len(), 1);
            assert_eq!(set.elements[0].integer_coords().unwrap(), expect);
        }
    }

    #[test]
    fn filtration_chain() {
        let chain = canonical_filtration(&xi(&[1, 1, 1])).unwrap();
        let coords: Vec<Vec<i64>> =
            chain.iter().map(|c| c.integer_coords().unwrap()).collect();
        assert_eq!(
            coords,
            vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1], vec![0, 0, 0]]
        );
        // single-index chain
        let chain = canonical_filtration(&xi(&[0, 1, 0])).unwrap();
        assert_eq!(chain.len(), 2);
        // consecutive steps are related by preceq
        let so7 = GroupSpec::adjoint(AlgebraKind::new(Family::B, 3).unwrap());
        let chain = canonical_filtration(&xi(&[1, 1, 1])).unwrap();
        for pair in chain.windows(2) {
            assert!(preceq(so7.datum(), &pair[0], &pair[1]).unwrap());
        }
    }

    #[test]
    fn filtration_rejects_non_unit() {
        assert!(matches!(
            canonical_filtration(&xi(&[2, 0, 0])),
            Err(Error::NotUnitCoefficients)
        ));
    }

    #[test]
    fn sp_variant_chain_is_preceq_chain() {
        // xi_i = H_{i+1} + ... + H_{n-1} + 2 H_n is a filtration of
        // xi_0 = H_1 + .. + H_{n-1} + 2H_n down to 2H_n and then 0
        let n = 4;
        let sp = GroupSpec::simply_connected(AlgebraKind::new(Family::C, n).unwrap());
        let mut chain: Vec<CoweightVec> = Vec::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            for j in i..n - 1 {
                v[j] = 1;
            }
            v[n - 1] = 2;
            chain.push(xi(&v));
        }
        chain.push(CoweightVec::zero(n));
        for pair in chain.windows(2) {
            assert!(preceq(sp.datum(), &pair[0], &pair[1]).unwrap());
            assert!(sp.contains(&pair[0]));
        }
    }

    #[test]
    fn diagram_auto_reduction() {
        let d3 = GroupSpec::simply_connected(AlgebraKind::new(Family::D, 3).unwrap());
        let els = vec![xi(&[1, 3, 1]), xi(&[1, 1, 3]), xi(&[2, 1, 1])];
        let reduced = reduce_mod_diagram_autos(d3.datum(), &els);
        let got: Vec<Vec<i64>> =
            reduced.iter().map(|e| e.integer_coords().unwrap()).collect();
        assert_eq!(got, vec![vec![1, 1, 3], vec![2, 1, 1]]);
    }

    #[test]
    fn all_i_deterministic() {
        let spec = spin(3);
        let a = all_i_canonical(&spec).unwrap();
        let b = all_i_canonical(&spec).unwrap();
        assert_eq!(a.len(), 7);
        for ((sa, ca), (sb, cb)) in a.iter().zip(&b) {
            assert_eq!(sa, sb);
            assert_eq!(ca.elements, cb.elements);
        }
    }
}
