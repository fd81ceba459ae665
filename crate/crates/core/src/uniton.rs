//! Uniton numbers of canonical elements and their maxima over groups and
//! inner symmetric spaces.
//!
//! For a representation with highest weight `w*` and lowest weight `v*`,
//! the uniton number of the normalized extended solutions attached to a
//! canonical element `xi` is the Fourier width `w*(xi) - v*(xi)`.

use crate::canonical::{all_i_canonical, symmetric_canonical_elements};
use crate::error::{Error, Result};
use crate::lattice::GroupSpec;
use crate::rat::{as_integer, format_rat, is_integer};
use crate::rootdata::{pairing, CoweightVec, Family, RootDatum, Weight};
use crate::symmspace::{identify_inner_symmetric_space, SpaceLabel};

/// Checks that the irreducible module with the given highest weight is a
/// representation of the quotient group: the highest weight must pair
/// integrally with every element of the central subgroup.
pub fn validate_representation(spec: &GroupSpec, highest: &Weight) -> Result<()> {
    if !highest.is_dominant() {
        return Err(Error::NotDominant);
    }
    if !highest.is_integral() {
        return Err(Error::NotIntegral);
    }
    for &e in &spec.subgroup().elements {
        if e == 0 {
            continue;
        }
        let zeta = spec.center_group().element(e);
        let p = pairing(highest, &zeta)?;
        if !is_integer(&p) {
            let name = spec
                .center_group()
                .name_of(e)
                .map(String::from)
                .unwrap_or_else(|| zeta.to_string());
            return Err(Error::NotARepresentation { element: name, value: format_rat(&p) });
        }
    }
    Ok(())
}

/// The uniton number `w*(xi) - v*(xi)` of the canonical element `xi` under
/// the representation with highest weight `highest`.
pub fn uniton_number(spec: &GroupSpec, highest: &Weight, xi: &CoweightVec) -> Result<u64> {
    validate_representation(spec, highest)?;
    if !spec.contains_dominant(xi) {
        return Err(Error::NotInDominantLattice);
    }
    let lowest = spec.datum().lowest_weight(highest)?;
    let r = pairing(highest, xi)? - pairing(&lowest, xi)?;
    let r = as_integer(&r).expect("width of a representation of G on I(G) is integral");
    debug_assert!(r >= 0);
    Ok(r as u64)
}

/// Outcome of a maximization of uniton numbers over a set of canonical
/// elements.
#[derive(Debug, Clone)]
pub struct UnitonReport {
    pub value: u64,
    /// lexicographically smallest element attaining the maximum
    pub witness: CoweightVec,
    /// every element inspected, with its uniton number, sorted
    pub per_element: Vec<(CoweightVec, u64)>,
}

fn report_from(per_element: Vec<(CoweightVec, u64)>) -> UnitonReport {
    let mut per_element = per_element;
    per_element.sort_by(|a, b| a.0.cmp(&b.0));
    per_element.dedup();
    let value = per_element.iter().map(|&(_, r)| r).max().unwrap_or(0);
    let witness = per_element
        .iter()
        .find(|&&(_, r)| r == value)
        .map(|(xi, _)| xi.clone())
        .unwrap_or_else(|| CoweightVec::zero(0));
    UnitonReport { value, witness, per_element }
}

/// Minimal uniton number of the group: the maximum of `uniton_number` over
/// the I-canonical elements of every nonempty support.
pub fn group_minimal_uniton(spec: &GroupSpec, highest: &Weight) -> Result<UnitonReport> {
    validate_representation(spec, highest)?;
    let mut rows = Vec::new();
    for (_, set) in all_i_canonical(spec)? {
        for xi in set.elements {
            let r = uniton_number(spec, highest, &xi)?;
            rows.push((xi, r));
        }
    }
    Ok(report_from(rows))
}

/// Minimal uniton number for maps into one inner symmetric space: the
/// maximum over the symmetric canonical elements identified with `target`.
pub fn space_minimal_uniton(
    spec: &GroupSpec,
    highest: &Weight,
    target: &SpaceLabel,
) -> Result<UnitonReport> {
    validate_representation(spec, highest)?;
    let mut rows = Vec::new();
    let mut reachable: Vec<String> = Vec::new();
    for xi in symmetric_canonical_elements(spec)?.elements {
        let id = identify_inner_symmetric_space(spec, &xi)?;
        if id.label == *target {
            let r = uniton_number(spec, highest, &xi)?;
            rows.push((xi, r));
        } else {
            reachable.push(id.label.to_string());
        }
    }
    if rows.is_empty() {
        reachable.sort();
        reachable.dedup();
        return Err(Error::UnreachableSpace { target: target.to_string(), reachable });
    }
    Ok(report_from(rows))
}

/// The lowest-dimensional representation used in the exceptional tables:
/// the 7-dimensional fundamental of G2, the 26-dimensional fundamental of
/// F4, `omega_1` for E6, `omega_7` for E7 and the adjoint for E8.
pub fn lowest_dim_rep(datum: &RootDatum) -> Result<Weight> {
    let fam = datum.kind().family();
    match fam {
        Family::G2 => fundamental_with_dimension(datum, 7),
        Family::F4 => fundamental_with_dimension(datum, 26),
        Family::E6 => datum.fundamental_weight(0),
        Family::E7 => datum.fundamental_weight(6),
        Family::E8 => Ok(datum.adjoint_highest_weight()),
        _ => Err(Error::RepUnavailable { family: fam.name(), label: "rho_L".into() }),
    }
}

fn fundamental_with_dimension(datum: &RootDatum, dim: u128) -> Result<Weight> {
    for i in 0..datum.rank() {
        let w = datum.fundamental_weight(i)?;
        if datum.weyl_dimension(&w)? == dim {
            return Ok(w);
        }
    }
    Err(Error::RepUnavailable {
        family: datum.kind().family().name(),
        label: format!("fundamental of dimension {dim}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::AlgebraKind;

    fn spec_sc(f: Family, n: usize) -> GroupSpec {
        GroupSpec::simply_connected(AlgebraKind::new(f, n).unwrap())
    }

    fn xi(coords: &[i64]) -> CoweightVec {
        CoweightVec::from_ints(coords)
    }

    #[test]
    fn spin7_spinor_values() {
        let spec = spec_sc(Family::B, 3);
        let spinor = spec.datum().fundamental_weight(2).unwrap();
        assert_eq!(uniton_number(&spec, &spinor, &xi(&[2, 0, 0])).unwrap(), 2);
        assert_eq!(uniton_number(&spec, &spinor, &xi(&[0, 1, 0])).unwrap(), 2);
        assert_eq!(uniton_number(&spec, &spinor, &xi(&[0, 1, 2])).unwrap(), 8);
    }

    #[test]
    fn sp2_standard_values() {
        let spec = spec_sc(Family::C, 2);
        let std = spec.datum().fundamental_weight(0).unwrap();
        assert_eq!(uniton_number(&spec, &std, &xi(&[1, 0])).unwrap(), 2);
        assert_eq!(uniton_number(&spec, &std, &xi(&[0, 2])).unwrap(), 2);
        assert_eq!(uniton_number(&spec, &std, &xi(&[1, 2])).unwrap(), 4);
    }

    #[test]
    fn f4_26_dim_values() {
        let spec = spec_sc(Family::F4, 4);
        let rho = lowest_dim_rep(spec.datum()).unwrap();
        assert_eq!(uniton_number(&spec, &rho, &xi(&[0, 0, 0, 1])).unwrap(), 4);
        assert_eq!(uniton_number(&spec, &rho, &xi(&[0, 0, 1, 0])).unwrap(), 6);
        assert_eq!(uniton_number(&spec, &rho, &xi(&[0, 0, 1, 1])).unwrap(), 10);
    }

    #[test]
    fn spinor_rejected_on_so() {
        let so7 = GroupSpec::adjoint(AlgebraKind::new(Family::B, 3).unwrap());
        let spinor = so7.datum().fundamental_weight(2).unwrap();
        let err = uniton_number(&so7, &spinor, &xi(&[0, 1, 0])).unwrap_err();
        match err {
            Error::NotARepresentation { element, .. } => assert_eq!(element, "-1"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn element_outside_lattice_rejected() {
        let spec = spec_sc(Family::B, 3);
        let std = spec.datum().fundamental_weight(0).unwrap();
        // H_1 is not in I(Spin(7))
        assert_eq!(
            uniton_number(&spec, &std, &xi(&[1, 0, 0])),
            Err(Error::NotInDominantLattice)
        );
    }

    #[test]
    fn e7_group_maxima() {
        let spec = spec_sc(Family::E7, 7);
        let omega7 = spec.datum().fundamental_weight(6).unwrap();
        let adj = spec.datum().adjoint_highest_weight();
        let r7 = group_minimal_uniton(&spec, &omega7).unwrap();
        let ra = group_minimal_uniton(&spec, &adj).unwrap();
        assert_eq!(r7.value, 32);
        assert_eq!(ra.value, 40);
        let expect = xi(&[1, 1, 1, 1, 2, 1, 1]);
        assert_eq!(r7.witness, expect);
        assert_eq!(ra.witness, expect);
    }

    #[test]
    fn g2_group_maxima() {
        let spec = spec_sc(Family::G2, 2);
        let rho_l = lowest_dim_rep(spec.datum()).unwrap();
        let adj = spec.datum().adjoint_highest_weight();
        assert_eq!(group_minimal_uniton(&spec, &rho_l).unwrap().value, 6);
        assert_eq!(group_minimal_uniton(&spec, &adj).unwrap().value, 10);
    }

    #[test]
    fn monotone_under_preceq() {
        let spec = spec_sc(Family::B, 3);
        let std = spec.datum().fundamental_weight(0).unwrap();
        // componentwise smaller coefficients give smaller uniton numbers
        let big = xi(&[2, 1, 2]);
        let small = xi(&[0, 1, 0]);
        assert!(crate::canonical::preceq(spec.datum(), &big, &small).unwrap());
        assert!(
            uniton_number(&spec, &std, &small).unwrap()
                <= uniton_number(&spec, &std, &big).unwrap()
        );
    }

    #[test]
    fn zero_element_zero_width() {
        let spec = spec_sc(Family::C, 2);
        let std = spec.datum().fundamental_weight(0).unwrap();
        assert_eq!(uniton_number(&spec, &std, &CoweightVec::zero(2)).unwrap(), 0);
    }
}
