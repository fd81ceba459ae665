//! Weights, irreducible representations and their weight systems.

use super::{Family, RootDatum};
use crate::error::{Error, Result};
use crate::rat::{as_integer, is_integer, rat, ratio, Rat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A weight, stored both as simple-root coefficients and as
/// fundamental-weight coefficients (the two are related by the Cartan
/// matrix and kept consistent by construction).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    alpha: Vec<Rat>,
    fw: Vec<Rat>,
}

impl Weight {
    pub fn from_fw(datum: &RootDatum, fw: Vec<Rat>) -> Result<Weight> {
        if fw.len() != datum.rank() {
            return Err(Error::RankMismatch { expected: datum.rank(), got: fw.len() });
        }
        // fw = C^T alpha  =>  alpha = (C^T)^{-1} fw
        let alpha = crate::intlin::mat_vec(datum.dual_basis_matrix(), &fw);
        Ok(Weight { alpha, fw })
    }

    pub fn from_fw_ints(datum: &RootDatum, fw: &[i64]) -> Result<Weight> {
        Weight::from_fw(datum, fw.iter().map(|&x| rat(x)).collect())
    }

    pub fn from_alpha(datum: &RootDatum, alpha: Vec<Rat>) -> Result<Weight> {
        if alpha.len() != datum.rank() {
            return Err(Error::RankMismatch { expected: datum.rank(), got: alpha.len() });
        }
        let k = datum.rank();
        let cartan = datum.cartan_matrix();
        let fw = (0..k)
            .map(|j| (0..k).map(|i| alpha[i] * rat(cartan[i][j])).sum())
            .collect();
        Ok(Weight { alpha, fw })
    }

    pub fn from_alpha_ints(datum: &RootDatum, alpha: &[i64]) -> Result<Weight> {
        Weight::from_alpha(datum, alpha.iter().map(|&x| rat(x)).collect())
    }

    pub fn alpha_coords(&self) -> &[Rat] {
        &self.alpha
    }

    pub fn fw_coords(&self) -> &[Rat] {
        &self.fw
    }

    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.fw.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.fw.iter().all(is_integer)
    }

    pub fn is_zero(&self) -> bool {
        self.fw.iter().all(|c| c.is_zero())
    }

    pub fn negated(&self) -> Weight {
        Weight {
            alpha: self.alpha.iter().map(|x| -x).collect(),
            fw: self.fw.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Weight {
    /// Renders in the fundamental-weight basis: `w_1+2w_3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.fw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if *c != rat(1) {
                write!(f, "{}", crate::rat::format_rat(c))?;
            }
            write!(f, "w_{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl RootDatum {
    pub fn fundamental_weight(&self, node: usize) -> Result<Weight> {
        if node >= self.rank() {
            return Err(Error::NodeOutOfRange { index: node + 1, rank: self.rank() });
        }
        let mut fw = vec![0i64; self.rank()];
        fw[node] = 1;
        Weight::from_fw_ints(self, &fw)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight { alpha: vec![Rat::zero(); self.rank()], fw: vec![Rat::zero(); self.rank()] }
    }

    /// Highest weight of the adjoint representation (the highest root).
    pub fn adjoint_highest_weight(&self) -> Weight {
        Weight::from_alpha_ints(self, &self.highest_root().to_vec()).unwrap()
    }

    /// The unique anti-dominant weight in the Weyl orbit of a dominant
    /// weight, reached by simple reflections; for a highest weight this is
    /// the lowest weight of the irreducible representation.
    pub fn lowest_weight(&self, highest: &Weight) -> Result<Weight> {
        if highest.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: highest.rank() });
        }
        if !highest.is_dominant() {
            return Err(Error::NotDominant);
        }
        let k = self.rank();
        let cartan = self.cartan_matrix();
        let mut c = highest.fw_coords().to_vec();
        loop {
            match (0..k).find(|&i| c[i] > Rat::zero()) {
                None => break,
                Some(i) => {
                    // s_i: c -> c - c_i * (row i of C); strictly lowers height
                    let ci = c[i];
                    for j in 0..k {
                        c[j] -= ci * rat(cartan[i][j]);
                    }
                }
            }
        }
        Weight::from_fw(self, c)
    }

    /// Dimension of the irreducible representation with the given highest
    /// weight, by the Weyl product formula over positive roots.
    pub fn weyl_dimension(&self, highest: &Weight) -> Result<u128> {
        if !highest.is_dominant() {
            return Err(Error::NotDominant);
        }
        if !highest.is_integral() {
            return Err(Error::NotIntegral);
        }
        let k = self.rank();
        let delta = Weight::from_fw(self, vec![Rat::one(); k])?;
        let lam_delta: Vec<Rat> = highest
            .alpha_coords()
            .iter()
            .zip(delta.alpha_coords())
            .map(|(a, b)| a + b)
            .collect();
        let mut acc = BigRational::one();
        for root in self.positive_roots() {
            let alpha: Vec<Rat> = root.iter().map(|&x| rat(x)).collect();
            let num = self.inner(&lam_delta, &alpha);
            let den = self.inner(delta.alpha_coords(), &alpha);
            acc *= big(num) / big(den);
        }
        debug_assert!(acc.is_integer());
        acc.to_integer().to_u128().ok_or(Error::DimensionOverflow)
    }

    /// The weight system of a named irreducible representation: every
    /// weight with its multiplicity.
    pub fn weight_system(&self, label: &RepLabel) -> Result<WeightSystem> {
        let n = self.rank();
        let fam = self.kind().family();
        let mut entries: Vec<(Weight, u64)> = match (label, fam) {
            (RepLabel::Standard, Family::A) => {
                let mut out = Vec::new();
                let mut cur = self.fundamental_weight(0)?.fw_coords().to_vec();
                out.push((Weight::from_fw(self, cur.clone())?, 1));
                for i in 0..n {
                    for j in 0..n {
                        cur[j] -= rat(self.cartan_matrix()[i][j]);
                    }
                    out.push((Weight::from_fw(self, cur.clone())?, 1));
                }
                out
            }
            (RepLabel::Standard, Family::B) => {
                let mut out = plus_minus_l(self, n);
                out.push((self.zero_weight(), 1));
                out
            }
            (RepLabel::Standard, Family::C | Family::D) => plus_minus_l(self, n),
            (RepLabel::Spinor, Family::B) => sign_vector_weights(self, n, None),
            (RepLabel::HalfSpinorPlus, Family::D) => sign_vector_weights(self, n, Some(0)),
            (RepLabel::HalfSpinorMinus, Family::D) => sign_vector_weights(self, n, Some(1)),
            (RepLabel::Adjoint, _) => {
                let mut out: Vec<(Weight, u64)> = self
                    .roots()
                    .iter()
                    .map(|r| (Weight::from_alpha_ints(self, r).unwrap(), 1))
                    .collect();
                out.push((self.zero_weight(), n as u64));
                out
            }
            (RepLabel::HighestWeight(fw), _) => freudenthal(self, fw)?,
            (label, _) => {
                return Err(Error::RepUnavailable {
                    family: fam.name(),
                    label: label.to_string(),
                })
            }
        };
        entries.sort_by(|a, b| b.0.alpha.cmp(&a.0.alpha));
        Ok(WeightSystem { label: label.clone(), entries })
    }

    /// Highest weight of a named representation.
    pub fn rep_highest_weight(&self, label: &RepLabel) -> Result<Weight> {
        let n = self.rank();
        let fam = self.kind().family();
        match (label, fam) {
            (RepLabel::Standard, Family::A | Family::B | Family::C | Family::D) => {
                self.fundamental_weight(0)
            }
            (RepLabel::Spinor, Family::B) => self.fundamental_weight(n - 1),
            (RepLabel::HalfSpinorPlus, Family::D) => self.fundamental_weight(n - 1),
            (RepLabel::HalfSpinorMinus, Family::D) => self.fundamental_weight(n - 2),
            (RepLabel::Adjoint, _) => Ok(self.adjoint_highest_weight()),
            (RepLabel::HighestWeight(fw), _) => {
                let w = Weight::from_fw_ints(self, fw)?;
                if !w.is_dominant() {
                    return Err(Error::NotDominant);
                }
                Ok(w)
            }
            (label, _) => {
                Err(Error::RepUnavailable { family: fam.name(), label: label.to_string() })
            }
        }
    }
}

/// `L_i` in simple-root coordinates, for the classical families B, C, D.
fn l_vector(datum: &RootDatum, i: usize) -> Vec<Rat> {
    let n = datum.rank();
    let half = ratio(1, 2);
    let mut v = vec![Rat::zero(); n];
    match datum.kind().family() {
        Family::B => {
            for e in v.iter_mut().take(n).skip(i) {
                *e = rat(1);
            }
        }
        Family::C => {
            for e in v.iter_mut().take(n - 1).skip(i) {
                *e = rat(1);
            }
            v[n - 1] = half;
        }
        Family::D => {
            if i == n - 1 {
                v[n - 2] = -half;
                v[n - 1] = half;
            } else {
                for e in v.iter_mut().take(n - 2).skip(i) {
                    *e = rat(1);
                }
                v[n - 2] = half;
                v[n - 1] = half;
            }
        }
        _ => unreachable!("l_vector is classical-only"),
    }
    v
}

fn plus_minus_l(datum: &RootDatum, n: usize) -> Vec<(Weight, u64)> {
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let l = l_vector(datum, i);
        let neg: Vec<Rat> = l.iter().map(|x| -x).collect();
        out.push((Weight::from_alpha(datum, l).unwrap(), 1));
        out.push((Weight::from_alpha(datum, neg).unwrap(), 1));
    }
    out
}

/// Spinor-type weights `(s_1 L_1 + .. + s_n L_n)/2` over sign vectors;
/// `minus_parity` restricts the number of minus signs mod 2.
fn sign_vector_weights(
    datum: &RootDatum,
    n: usize,
    minus_parity: Option<usize>,
) -> Vec<(Weight, u64)> {
    let ls: Vec<Vec<Rat>> = (0..n).map(|i| l_vector(datum, i)).collect();
    let half = ratio(1, 2);
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let minuses = mask.count_ones() as usize;
        if let Some(p) = minus_parity {
            if minuses % 2 != p {
                continue;
            }
        }
        let mut v = vec![Rat::zero(); n];
        for (i, l) in ls.iter().enumerate() {
            let sign = if mask >> i & 1 == 1 { -half } else { half };
            for j in 0..n {
                v[j] += sign * l[j];
            }
        }
        out.push((Weight::from_alpha(datum, v).unwrap(), 1));
    }
    out
}

/// Weight multiplicities of the irreducible module with dominant integral
/// highest weight `fw`, by Freudenthal's recursion over the saturated
/// weight set, processed in increasing depth below the highest weight.
fn freudenthal(datum: &RootDatum, fw: &[i64]) -> Result<Vec<(Weight, u64)>> {
    let k = datum.rank();
    if fw.len() != k {
        return Err(Error::RankMismatch { expected: k, got: fw.len() });
    }
    if fw.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant);
    }
    let cartan = datum.cartan_matrix();

    // saturated weight set: iterate string closure to a fixpoint. For a
    // weight nu and simple root alpha_i, the string reaches p steps up and
    // p + <nu, alpha_i^vee> steps down.
    let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut weights: Vec<Vec<i64>> = Vec::new();
    let lam = fw.to_vec();
    index.insert(lam.clone(), 0);
    weights.push(lam.clone());
    const CAP: usize = 2_000_000;
    let mut changed = true;
    while changed {
        changed = false;
        let mut cursor = 0;
        while cursor < weights.len() {
            let nu = weights[cursor].clone();
            cursor += 1;
            for i in 0..k {
                let mut up = 0i64;
                let mut probe = nu.clone();
                loop {
                    for j in 0..k {
                        probe[j] += cartan[i][j];
                    }
                    if index.contains_key(&probe) {
                        up += 1;
                    } else {
                        break;
                    }
                }
                let down = up + nu[i];
                let mut step = nu.clone();
                for _t in 0..down.max(0) {
                    for j in 0..k {
                        step[j] -= cartan[i][j];
                    }
                    if !index.contains_key(&step) {
                        if weights.len() >= CAP {
                            return Err(Error::EnumerationTooLarge { size: CAP as u128 });
                        }
                        index.insert(step.clone(), weights.len());
                        weights.push(step.clone());
                        changed = true;
                    }
                }
            }
        }
    }

    // depth of mu = sum of simple-root coefficients of lambda - mu
    let depth_of = |mu: &[i64]| -> i64 {
        let diff: Vec<Rat> = (0..k).map(|j| rat(fw[j] - mu[j])).collect();
        let a = crate::intlin::mat_vec(datum.dual_basis_matrix(), &diff);
        let mut d = 0i64;
        for x in &a {
            let v = as_integer(x).expect("weight lattice difference lies in the root lattice");
            debug_assert!(v >= 0);
            d += v;
        }
        d
    };
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by_key(|&i| (depth_of(&weights[i]), weights[i].clone()));

    let alpha_of = |mu: &[i64]| -> Vec<Rat> {
        let v: Vec<Rat> = mu.iter().map(|&x| rat(x)).collect();
        crate::intlin::mat_vec(datum.dual_basis_matrix(), &v)
    };
    let pos_roots: Vec<(Vec<i64>, Vec<Rat>, Rat)> = datum
        .positive_roots()
        .iter()
        .map(|r| {
            let fw_r: Vec<i64> =
                (0..k).map(|j| (0..k).map(|i| r[i] * cartan[i][j]).sum()).collect();
            let a: Vec<Rat> = r.iter().map(|&x| rat(x)).collect();
            let norm = datum.inner(&a, &a);
            (fw_r, a, norm)
        })
        .collect();

    let lam_alpha = alpha_of(&lam);
    let delta_alpha = alpha_of(&vec![1i64; k]);
    let mut mult = vec![0u64; weights.len()];
    for &wi in &order {
        let mu = &weights[wi];
        if *mu == lam {
            mult[wi] = 1;
            continue;
        }
        let mu_alpha = alpha_of(mu);
        let mut num = Rat::zero();
        for (fw_r, a, norm) in &pos_roots {
            // (mu + t a, a) = (mu, a) + t (a, a)
            let base = datum.inner(&mu_alpha, a);
            let mut nu = mu.clone();
            let mut t = 1i64;
            loop {
                for j in 0..k {
                    nu[j] += fw_r[j];
                }
                match index.get(&nu) {
                    Some(&ni) if mult[ni] > 0 => {
                        num += rat(mult[ni] as i64) * (base + rat(t) * norm);
                    }
                    Some(_) => {}
                    None => break,
                }
                t += 1;
            }
        }
        // (lam+delta, lam+delta) - (mu+delta, mu+delta)
        //   = (lam+mu+2delta, lam-mu)
        let sum: Vec<Rat> = (0..k)
            .map(|j| lam_alpha[j] + mu_alpha[j] + rat(2) * delta_alpha[j])
            .collect();
        let dif: Vec<Rat> = (0..k).map(|j| lam_alpha[j] - mu_alpha[j]).collect();
        let den = datum.inner(&sum, &dif);
        let m = rat(2) * num / den;
        let m = as_integer(&m).expect("Freudenthal multiplicity is a positive integer");
        debug_assert!(m > 0);
        mult[wi] = m as u64;
    }

    Ok(weights
        .into_iter()
        .zip(mult)
        .map(|(muf, m)| (Weight::from_fw_ints(datum, &muf).unwrap(), m))
        .collect())
}

fn big(x: Rat) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

/// Named irreducible representations understood by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepLabel {
    Standard,
    Spinor,
    HalfSpinorPlus,
    HalfSpinorMinus,
    Adjoint,
    /// Arbitrary dominant integral highest weight in fundamental-weight
    /// coordinates.
    HighestWeight(Vec<i64>),
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Standard => f.write_str("standard"),
            RepLabel::Spinor => f.write_str("spinor"),
            RepLabel::HalfSpinorPlus => f.write_str("half-spinor-plus"),
            RepLabel::HalfSpinorMinus => f.write_str("half-spinor-minus"),
            RepLabel::Adjoint => f.write_str("adjoint"),
            RepLabel::HighestWeight(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "hw:{}", parts.join(","))
            }
        }
    }
}

/// Multiset of weights of an irreducible representation.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    pub label: RepLabel,
    pub entries: Vec<(Weight, u64)>,
}

impl WeightSystem {
    pub fn dimension(&self) -> u128 {
        self.entries.iter().map(|(_, m)| *m as u128).sum()
    }

    /// The unique dominant weight of maximal height, which must carry
    /// multiplicity one.
    pub fn highest(&self) -> &Weight {
        self.entries
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .max_by(|a, b| a.0.alpha.cmp(&b.0.alpha))
            .map(|(w, _)| w)
            .expect("weight system is nonempty")
    }
}
