//! Identification of the inner symmetric space attached to a canonical
//! element, and the Grassmannian-model flag shapes of the associated
//! circle-invariant extended solutions.
//!
//! The conjugation class of `gamma_xi(-1)` is controlled by root parities:
//! its dimension is the number of roots with odd eigenvalue on `xi`
//! (complex root-space count, which equals the real dimension of the
//! symmetric space). For the classical families the space is pinned down by
//! the parity split `m^+/m^-` of the standard-representation weights; for
//! the exceptional ones by matching the odd-root count against the inner
//! involution classes.

use crate::error::{Error, Result};
use crate::lattice::GroupSpec;
use crate::rat::{as_integer, is_integer, Rat};
use crate::rootdata::{pairing, CoweightVec, Family, RepLabel, RootDatum, Weight};
use crate::uniton::validate_representation;
use std::collections::BTreeMap;
use std::fmt;

/// Structured identification of an inner symmetric space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceLabel {
    /// real Grassmannian `G^R_m(ambient)`
    RealGrassmannian { m: u64, ambient: u64 },
    /// quaternionic Grassmannian `G^H_m(n)`
    QuaternionicGrassmannian { m: u64, n: u64 },
    /// complex Lagrangian subspaces `Sp(n)/U(n)`
    ComplexLagrangian { n: u64 },
    /// positive orthogonal complex structures `J_+(R^{2n})`
    PlusComplexStructures { n: u64 },
    /// the Cayley plane `F_4/Spin(9)`
    CayleyPlane,
    F4Sp3Sp1,
    ExceptionalInner { name: &'static str },
    /// `gamma_xi(-1)` is central; the conjugation class degenerates
    GroupPoint,
}

impl fmt::Display for SpaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceLabel::RealGrassmannian { m, ambient } => write!(f, "G^R_{m}({ambient})"),
            SpaceLabel::QuaternionicGrassmannian { m, n } => write!(f, "G^H_{m}({n})"),
            SpaceLabel::ComplexLagrangian { n } => write!(f, "Sp({n})/U({n})"),
            SpaceLabel::PlusComplexStructures { n } => write!(f, "J_+(R^{})", 2 * n),
            SpaceLabel::CayleyPlane => f.write_str("F_4/Spin(9)"),
            SpaceLabel::F4Sp3Sp1 => f.write_str("F_4/Sp(3)Sp(1)"),
            SpaceLabel::ExceptionalInner { name } => f.write_str(name),
            SpaceLabel::GroupPoint => f.write_str("point"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSpaceId {
    pub label: SpaceLabel,
    /// odd-eigenvalue root count = real dimension of the space
    pub dim: u64,
    pub m_plus: Option<u64>,
    pub m_minus: Option<u64>,
}

/// Number of roots with odd eigenvalue on `xi`; the dimension of `N_xi`.
pub fn odd_dimension(datum: &RootDatum, xi: &CoweightVec) -> Result<u64> {
    let h = xi.integer_coords().ok_or(Error::NonIntegralEigenvalue)?;
    if h.len() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), got: h.len() });
    }
    Ok(datum
        .roots()
        .iter()
        .filter(|r| crate::rat::dot_int(r, &h) % 2 != 0)
        .count() as u64)
}

/// Parity split of the standard-representation weights against `xi`:
/// `m^+` counts odd pairings, `m^-` even ones (with multiplicity).
pub fn m_plus_minus(spec: &GroupSpec, xi: &CoweightVec) -> Result<(u64, u64)> {
    let datum = spec.datum();
    let fam = datum.kind().family();
    if !fam.is_classical() {
        return Err(Error::MPlusMinusUndefined { family: fam.name() });
    }
    let ws = datum.weight_system(&RepLabel::Standard)?;
    let mut plus = 0u64;
    let mut minus = 0u64;
    for (w, mult) in &ws.entries {
        let p = pairing(w, xi)?;
        let p = as_integer(&p).ok_or(Error::NonIntegralPairings)?;
        if p % 2 != 0 {
            plus += mult;
        } else {
            minus += mult;
        }
    }
    Ok((plus, minus))
}

/// The inner symmetric spaces of an exceptional algebra together with their
/// odd-root-count signatures. The signatures are computed from the inner
/// involution representatives `H_i` (nodes whose highest-root mark is 1 or
/// 2) and matched against the known space list by dimension.
pub fn exceptional_inner_table(datum: &RootDatum) -> Vec<(u64, SpaceLabel)> {
    let named: Vec<(u64, SpaceLabel)> = match datum.kind().family() {
        Family::G2 => vec![(8, SpaceLabel::ExceptionalInner { name: "G_2/SO(4)" })],
        Family::F4 => vec![(16, SpaceLabel::CayleyPlane), (28, SpaceLabel::F4Sp3Sp1)],
        Family::E6 => vec![
            (32, SpaceLabel::ExceptionalInner { name: "E_6/Spin(10)U(1)" }),
            (40, SpaceLabel::ExceptionalInner { name: "E_6/SU(6)Sp(1)" }),
        ],
        Family::E7 => vec![
            (54, SpaceLabel::ExceptionalInner { name: "E_7/E_6U(1)" }),
            (64, SpaceLabel::ExceptionalInner { name: "E_7/Spin(12)Sp(1)" }),
            (70, SpaceLabel::ExceptionalInner { name: "E_7/(SU(8)/Z_2)" }),
        ],
        Family::E8 => vec![
            (112, SpaceLabel::ExceptionalInner { name: "E_8/E_7Sp(1)" }),
            (128, SpaceLabel::ExceptionalInner { name: "E_8/Spin(16)/Z_2" }),
        ],
        _ => panic!("exceptional_inner_table is exceptional-only"),
    };
    // cross-check the signatures against the involution representatives
    let theta = datum.highest_root();
    let mut computed: Vec<u64> = (0..datum.rank())
        .filter(|&i| theta[i] <= 2)
        .map(|i| {
            let mut h = vec![0i64; datum.rank()];
            h[i] = 1;
            odd_dimension(datum, &CoweightVec::from_ints(&h)).unwrap()
        })
        .filter(|&d| d > 0)
        .collect();
    computed.sort_unstable();
    computed.dedup();
    let expected: Vec<u64> = named.iter().map(|(d, _)| *d).collect();
    assert_eq!(computed, expected, "involution signatures match the space table");
    named
}

/// Identifies the inner symmetric space `N_xi` attached to a dominant
/// lattice element.
pub fn identify_inner_symmetric_space(
    spec: &GroupSpec,
    xi: &CoweightVec,
) -> Result<SymmetricSpaceId> {
    if !spec.contains_dominant(xi) {
        return Err(Error::NotInDominantLattice);
    }
    let datum = spec.datum();
    let n = datum.rank() as u64;
    let fam = datum.kind().family();
    let dim = odd_dimension(datum, xi)?;

    let mpm = if fam.is_classical() {
        match m_plus_minus(spec, xi) {
            Ok(v) => Some(v),
            Err(Error::NonIntegralPairings) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };

    if dim == 0 {
        return Ok(SymmetricSpaceId {
            label: SpaceLabel::GroupPoint,
            dim: 0,
            m_plus: mpm.map(|v| v.0),
            m_minus: mpm.map(|v| v.1),
        });
    }

    let label = match fam {
        Family::B => {
            let (p, m) = mpm.expect("standard pairings of the B family are integral");
            SpaceLabel::RealGrassmannian { m: p.min(m), ambient: 2 * n + 1 }
        }
        Family::C => match mpm {
            Some((p, m)) => {
                let small = p.min(m);
                debug_assert!(small % 2 == 0);
                SpaceLabel::QuaternionicGrassmannian { m: small / 2, n }
            }
            None => {
                // the eigenvalues are half-integers exactly for the classes
                // squaring to -1, whose fixed set is U(n)
                if dim != n * (n + 1) {
                    return Err(Error::UnknownInnerSpace { family: fam.name(), count: dim });
                }
                SpaceLabel::ComplexLagrangian { n }
            }
        },
        Family::D => match mpm {
            Some((p, m)) => SpaceLabel::RealGrassmannian { m: p.min(m), ambient: 2 * n },
            None => {
                if dim != n * (n - 1) {
                    return Err(Error::UnknownInnerSpace { family: fam.name(), count: dim });
                }
                SpaceLabel::PlusComplexStructures { n }
            }
        },
        Family::A => {
            return Err(Error::RepUnavailable {
                family: fam.name(),
                label: "inner symmetric space identification".into(),
            })
        }
        _ => {
            let table = exceptional_inner_table(datum);
            match table.iter().find(|(d, _)| *d == dim) {
                Some((_, label)) => label.clone(),
                None => return Err(Error::UnknownInnerSpace { family: fam.name(), count: dim }),
            }
        }
    };
    Ok(SymmetricSpaceId {
        label,
        dim,
        m_plus: mpm.map(|v| v.0),
        m_minus: mpm.map(|v| v.1),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagSymmetry {
    None,
    Orthogonal,
    Symplectic,
}

/// Exponent histogram of the loop `gamma_xi` in a representation: the
/// Grassmannian-model shape `W = lambda^s A_s + ... + lambda^r H_+`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagShape {
    pub s: i64,
    pub r: i64,
    /// nonzero multiplicities by exponent, ascending
    pub steps: Vec<(i64, u64)>,
    /// cumulative dimensions `dim A_i` for `i = s..=r`
    pub cumulative: Vec<(i64, u64)>,
    pub symmetry: FlagSymmetry,
    pub display: String,
}

/// Computes the flag shape of `gamma_xi` under a named representation.
pub fn flag_shape(spec: &GroupSpec, label: &RepLabel, xi: &CoweightVec) -> Result<FlagShape> {
    let datum = spec.datum();
    let ws = datum.weight_system(label)?;
    validate_representation(spec, ws.highest())?;
    if !spec.contains_dominant(xi) {
        return Err(Error::NotInDominantLattice);
    }

    let mut hist: BTreeMap<i64, u64> = BTreeMap::new();
    for (w, mult) in &ws.entries {
        let p = pairing(w, xi)?;
        let p = as_integer(&p)
            .expect("weights of a representation of G pair integrally with I(G)");
        *hist.entry(p).or_insert(0) += mult;
    }
    let s = *hist.keys().next().unwrap();
    let r = *hist.keys().last().unwrap();
    let steps: Vec<(i64, u64)> = hist.iter().map(|(&i, &m)| (i, m)).collect();

    let mut cumulative = Vec::new();
    let mut acc = 0u64;
    for i in s..=r {
        acc += hist.get(&i).copied().unwrap_or(0);
        cumulative.push((i, acc));
    }

    let n = datum.rank();
    let symmetry = match (datum.kind().family(), label) {
        (Family::B | Family::D, RepLabel::Standard) => FlagSymmetry::Orthogonal,
        (Family::C, RepLabel::Standard) => FlagSymmetry::Symplectic,
        (Family::B, RepLabel::Spinor) => {
            if n % 4 == 0 || n % 4 == 3 {
                FlagSymmetry::Orthogonal
            } else {
                FlagSymmetry::Symplectic
            }
        }
        _ => FlagSymmetry::None,
    };

    let display = render_flag(&cumulative, s, r);
    Ok(FlagShape { s, r, steps, cumulative, symmetry, display })
}

/// `W = λ^-1A + A + λH_+` style rendering: one term per exponent, proper
/// subspaces named by cumulative dimension, the top step written `H_+`.
fn render_flag(cumulative: &[(i64, u64)], s: i64, r: i64) -> String {
    let mut names: BTreeMap<u64, String> = BTreeMap::new();
    for &(i, d) in cumulative {
        if i == r {
            break;
        }
        if !names.contains_key(&d) {
            let idx = names.len();
            let name = if idx < 26 {
                ((b'A' + idx as u8) as char).to_string()
            } else {
                format!("X{}", idx + 1)
            };
            names.insert(d, name);
        }
    }
    let power = |i: i64| -> String {
        match i {
            0 => String::new(),
            1 => "λ".to_string(),
            _ => format!("λ^{i}"),
        }
    };
    let mut terms = Vec::new();
    for &(i, d) in cumulative {
        if i == r {
            break;
        }
        terms.push(format!("{}{}", power(i), names[&d]));
    }
    terms.push(format!("{}H_+", power(r)));
    format!("W = {}", terms.join(" + "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::AlgebraKind;

    fn sc(f: Family, n: usize) -> GroupSpec {
        GroupSpec::simply_connected(AlgebraKind::new(f, n).unwrap())
    }

    fn adj(f: Family, n: usize) -> GroupSpec {
        GroupSpec::adjoint(AlgebraKind::new(f, n).unwrap())
    }

    fn xi(coords: &[i64]) -> CoweightVec {
        CoweightVec::from_ints(coords)
    }

    #[test]
    fn odd_dimensions() {
        let f4 = sc(Family::F4, 4);
        assert_eq!(odd_dimension(f4.datum(), &xi(&[0, 0, 0, 1])).unwrap(), 16);
        assert_eq!(odd_dimension(f4.datum(), &xi(&[0, 0, 0, 2])).unwrap(), 0);
        let g2 = sc(Family::G2, 2);
        assert_eq!(odd_dimension(g2.datum(), &xi(&[1, 0])).unwrap(), 8);
    }

    #[test]
    fn m_plus_minus_examples() {
        // SO(2n+1), xi = H_n: weights +-L_i pair +-1, zero pairs 0
        let so9 = adj(Family::B, 4);
        assert_eq!(m_plus_minus(&so9, &xi(&[0, 0, 0, 1])).unwrap(), (8, 1));
        // Sp(n), xi = H_1
        let sp4 = sc(Family::C, 4);
        assert_eq!(m_plus_minus(&sp4, &xi(&[1, 0, 0, 0])).unwrap(), (2, 6));
        // exceptional families are rejected
        let e6 = sc(Family::E6, 6);
        assert!(matches!(
            m_plus_minus(&e6, &xi(&[0, 1, 0, 0, 0, 0])),
            Err(Error::MPlusMinusUndefined { .. })
        ));
    }

    #[test]
    fn identify_projective_space() {
        let so9 = adj(Family::B, 4);
        let id = identify_inner_symmetric_space(&so9, &xi(&[0, 0, 0, 1])).unwrap();
        assert_eq!(id.label, SpaceLabel::RealGrassmannian { m: 1, ambient: 9 });
        assert_eq!(id.dim, 8); // RP^8
    }

    #[test]
    fn identify_quaternionic_projective_space() {
        let sp3 = sc(Family::C, 3);
        for v in [vec![1i64, 0, 0], vec![1, 1, 0], vec![0, 1, 2]] {
            let id = identify_inner_symmetric_space(&sp3, &xi(&v)).unwrap();
            assert_eq!(
                id.label,
                SpaceLabel::QuaternionicGrassmannian { m: 1, n: 3 },
                "{v:?}"
            );
        }
    }

    #[test]
    fn identify_complex_lagrangian() {
        let psp3 = adj(Family::C, 3);
        let id = identify_inner_symmetric_space(&psp3, &xi(&[0, 0, 1])).unwrap();
        assert_eq!(id.label, SpaceLabel::ComplexLagrangian { n: 3 });
        assert_eq!(id.dim, 12);
        assert_eq!(id.m_plus, None);
    }

    #[test]
    fn identify_plus_complex_structures() {
        let pso8 = adj(Family::D, 4);
        let id = identify_inner_symmetric_space(&pso8, &xi(&[0, 0, 0, 1])).unwrap();
        assert_eq!(id.label, SpaceLabel::PlusComplexStructures { n: 4 });
        assert_eq!(id.dim, 12);
    }

    #[test]
    fn identify_f4_split() {
        let f4 = sc(Family::F4, 4);
        for v in [vec![0i64, 0, 1, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 1]] {
            let id = identify_inner_symmetric_space(&f4, &xi(&v)).unwrap();
            assert_eq!(id.label, SpaceLabel::CayleyPlane, "{v:?}");
        }
        for v in [vec![1i64, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 1, 1, 1]] {
            let id = identify_inner_symmetric_space(&f4, &xi(&v)).unwrap();
            assert_eq!(id.label, SpaceLabel::F4Sp3Sp1, "{v:?}");
        }
    }

    #[test]
    fn identify_group_point() {
        let f4 = sc(Family::F4, 4);
        let id = identify_inner_symmetric_space(&f4, &xi(&[0, 0, 0, 2])).unwrap();
        assert_eq!(id.label, SpaceLabel::GroupPoint);
    }

    #[test]
    fn exceptional_tables_build() {
        for (f, n) in [
            (Family::G2, 2),
            (Family::F4, 4),
            (Family::E6, 6),
            (Family::E7, 7),
            (Family::E8, 8),
        ] {
            let spec = sc(f, n);
            let table = exceptional_inner_table(spec.datum());
            assert!(!table.is_empty());
        }
    }

    #[test]
    fn spin7_spinor_flags() {
        let spin7 = sc(Family::B, 3);
        let shape = flag_shape(&spin7, &RepLabel::Spinor, &xi(&[2, 0, 0])).unwrap();
        assert_eq!(shape.steps, vec![(-1, 4), (1, 4)]);
        assert_eq!(shape.display, "W = λ^-1A + A + λH_+");
        assert_eq!(shape.symmetry, FlagSymmetry::Orthogonal);

        let shape = flag_shape(&spin7, &RepLabel::Spinor, &xi(&[0, 1, 0])).unwrap();
        assert_eq!(shape.steps, vec![(-1, 2), (0, 4), (1, 2)]);

        let shape = flag_shape(&spin7, &RepLabel::Spinor, &xi(&[0, 1, 2])).unwrap();
        assert_eq!(
            shape.steps,
            vec![(-4, 1), (-2, 1), (-1, 2), (1, 2), (2, 1), (4, 1)]
        );
        assert_eq!(shape.r - shape.s, 8);
    }

    #[test]
    fn flag_width_is_uniton_number() {
        let spin7 = sc(Family::B, 3);
        let spinor = spin7.datum().fundamental_weight(2).unwrap();
        for v in [vec![2i64, 0, 0], vec![0, 1, 0], vec![0, 1, 2], vec![1, 0, 1]] {
            let shape = flag_shape(&spin7, &RepLabel::Spinor, &xi(&v)).unwrap();
            let r = crate::uniton::uniton_number(&spin7, &spinor, &xi(&v)).unwrap();
            assert_eq!((shape.r - shape.s) as u64, r, "{v:?}");
        }
    }

    #[test]
    fn orthogonal_flags_are_mirror_symmetric() {
        let spec = GroupSpec::quotient_by_names(
            AlgebraKind::new(Family::D, 4).unwrap(),
            &["-1"],
        )
        .unwrap();
        let shape = flag_shape(&spec, &RepLabel::Standard, &xi(&[1, 1, 0, 0])).unwrap();
        assert_eq!(shape.symmetry, FlagSymmetry::Orthogonal);
        for &(i, m) in &shape.steps {
            let mirror = shape.steps.iter().find(|&&(j, _)| j == -i).map(|&(_, m)| m);
            assert_eq!(mirror, Some(m));
        }
    }

    #[test]
    fn zero_element_flag() {
        let sp2 = sc(Family::C, 2);
        let shape = flag_shape(&sp2, &RepLabel::Standard, &CoweightVec::zero(2)).unwrap();
        assert_eq!((shape.s, shape.r), (0, 0));
        assert_eq!(shape.display, "W = H_+");
    }
}
