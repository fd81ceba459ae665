//! Root-system data for the simple Lie algebras, in exact arithmetic.
//!
//! Everything is expressed against the dual pair (simple roots `alpha_i`,
//! fundamental coweights `H_i`): a root is an integer vector of
//! `alpha`-coefficients, a torus element is a rational vector of
//! `H`-coefficients, and the pairing `alpha_i(H_j) = delta_ij` makes
//! evaluation a dot product. The imaginary unit carried by eigenvalues is
//! stripped throughout: a stored value `a` stands for the eigenvalue
//! `sqrt(-1) * a`.
//!
//! Node numbering is Bourbaki's for every family. For the classical
//! families the usual orthogonal coordinates (`L_i` in the dual, `E_i` in
//! the torus) are kept as a display layer.

mod weights;

pub use weights::{RepLabel, Weight, WeightSystem};

use crate::error::{Error, Result};
use crate::intlin;
use crate::rat::{dot, rat, ratio, Rat};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A simple Lie algebra type: family plus rank, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraKind {
    family: Family,
    rank: usize,
}

impl AlgebraKind {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::G2 => rank == 2,
            Family::F4 => rank == 4,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
        };
        if ok {
            Ok(AlgebraKind { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.name(), rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => {
                write!(f, "{}{}", self.family, self.rank)
            }
            _ => write!(f, "{}", self.family),
        }
    }
}

/// An element of the torus algebra in fundamental-coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoweightVec {
    h: Vec<Rat>,
}

impl CoweightVec {
    pub fn new(h: Vec<Rat>) -> Self {
        CoweightVec { h }
    }

    pub fn from_ints(h: &[i64]) -> Self {
        CoweightVec { h: h.iter().map(|&x| rat(x)).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        CoweightVec { h: vec![Rat::zero(); rank] }
    }

    pub fn h_coords(&self) -> &[Rat] {
        &self.h
    }

    pub fn rank(&self) -> usize {
        self.h.len()
    }

    /// The coordinates as integers, when the element lies in the coweight
    /// lattice `Lambda_R`.
    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        self.h.iter().map(crate::rat::as_integer).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().all(|x| x.is_zero())
    }

    pub fn is_dominant(&self) -> bool {
        self.h.iter().all(crate::rat::is_nonneg)
    }

    /// Index set `{i : h_i != 0}` (0-based).
    pub fn support(&self) -> Vec<usize> {
        (0..self.h.len()).filter(|&i| !self.h[i].is_zero()).collect()
    }

    pub fn add(&self, other: &CoweightVec) -> CoweightVec {
        CoweightVec { h: self.h.iter().zip(&other.h).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &CoweightVec) -> CoweightVec {
        CoweightVec { h: self.h.iter().zip(&other.h).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: Rat) -> CoweightVec {
        CoweightVec { h: self.h.iter().map(|a| a * c).collect() }
    }
}

impl fmt::Display for CoweightVec {
    /// Renders in the `H`-basis: `2H_1+H_3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.h.iter().enumerate() {
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
            write!(f, "H_{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Orthogonal-coordinate display layer for the classical families.
#[derive(Debug, Clone)]
struct ClassicalCoords {
    /// column j = `alpha_j` in `L`-coordinates
    l_of_alpha: Vec<Vec<Rat>>,
    /// column j = `H_j` in `E`-coordinates
    e_of_h: Vec<Vec<Rat>>,
}

/// Complete combinatorial data of a simple Lie algebra.
#[derive(Debug, Clone)]
pub struct RootDatum {
    kind: AlgebraKind,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    highest_root: Vec<i64>,
    /// `(C^T)^{-1}`; row i gives `H_i` in the `eta`-basis
    dual_basis: Vec<Vec<Rat>>,
    /// `C^{-1}`; row i gives `omega_i` in simple-root coordinates
    cartan_inv: Vec<Vec<Rat>>,
    diagram_autos: Vec<Vec<usize>>,
    /// `(alpha_i, alpha_i)` in the invariant form used for Freudenthal
    root_norms: Vec<Rat>,
    classical: Option<ClassicalCoords>,
}

impl RootDatum {
    /// Builds the full root datum for `kind`.
    pub fn new(kind: AlgebraKind) -> RootDatum {
        let cartan = cartan_matrix(kind);
        let k = kind.rank();

        let roots = generate_roots(&cartan);
        let mut positive_roots: Vec<Vec<i64>> = roots
            .iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .cloned()
            .collect();
        positive_roots.sort();
        let highest_root = positive_roots
            .iter()
            .max_by_key(|r| (r.iter().sum::<i64>(), (*r).clone()))
            .expect("nonempty root system")
            .clone();

        let cartan_rat: Vec<Vec<Rat>> =
            cartan.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect();
        let cartan_inv = intlin::invert(&cartan_rat).expect("Cartan matrix is invertible");
        let dual_basis = intlin::invert(&intlin::transpose(&cartan_rat))
            .expect("Cartan matrix is invertible");

        let diagram_autos = diagram_automorphisms(&cartan);
        let root_norms = simple_root_norms(kind);
        let classical = classical_coords(kind);

        debug_assert_eq!(roots.len(), expected_root_count(kind));
        let _ = k;

        RootDatum {
            kind,
            cartan,
            roots,
            positive_roots,
            highest_root,
            dual_basis,
            cartan_inv,
            diagram_autos,
            root_norms,
            classical,
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// All roots, as integer vectors of simple-root coefficients.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    /// `(C^T)^{-1}`: row i expresses `H_i` in the basis `eta_1..eta_k`.
    pub fn dual_basis_matrix(&self) -> &[Vec<Rat>] {
        &self.dual_basis
    }

    /// `C^{-1}`: row i expresses `omega_i` in simple-root coordinates.
    pub fn cartan_inverse(&self) -> &[Vec<Rat>] {
        &self.cartan_inv
    }

    /// Permutations of the nodes preserving the Cartan matrix.
    pub fn diagram_autos(&self) -> &[Vec<usize>] {
        &self.diagram_autos
    }

    pub(crate) fn root_norms(&self) -> &[Rat] {
        &self.root_norms
    }

    /// Invariant inner product of two vectors in simple-root coordinates.
    pub(crate) fn inner(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let k = self.rank();
        let mut acc = Rat::zero();
        for i in 0..k {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..k {
                if !y[j].is_zero() && self.cartan[i][j] != 0 {
                    // (alpha_i, alpha_j) = C_ij (alpha_j, alpha_j) / 2
                    acc += x[i] * y[j] * rat(self.cartan[i][j]) * self.root_norms[j] / rat(2);
                }
            }
        }
        acc
    }

    /// `L`-coordinates of a weight, for classical families.
    pub fn weight_l_coords(&self, w: &Weight) -> Option<Vec<Rat>> {
        let cc = self.classical.as_ref()?;
        Some(apply_cols(&cc.l_of_alpha, w.alpha_coords()))
    }

    /// `E`-coordinates of a torus element, for classical families.
    pub fn coweight_e_coords(&self, xi: &CoweightVec) -> Option<Vec<Rat>> {
        let cc = self.classical.as_ref()?;
        Some(apply_cols(&cc.e_of_h, xi.h_coords()))
    }

    /// Applies a node permutation to a coweight: `sigma(H_i) = H_{sigma(i)}`.
    pub fn permute_coweight(&self, sigma: &[usize], xi: &CoweightVec) -> CoweightVec {
        let mut h = vec![Rat::zero(); self.rank()];
        for (i, c) in xi.h_coords().iter().enumerate() {
            h[sigma[i]] = *c;
        }
        CoweightVec::new(h)
    }
}

/// Evaluates the weight on a torus element (imaginary unit stripped):
/// the dot product of the `alpha`-coefficients against the `H`-coefficients.
pub fn pairing(w: &Weight, xi: &CoweightVec) -> Result<Rat> {
    if w.rank() != xi.rank() {
        return Err(Error::RankMismatch { expected: w.rank(), got: xi.rank() });
    }
    Ok(dot(w.alpha_coords(), xi.h_coords()))
}

/// Fast path for integer data: pairing of a root with an integer coweight.
pub(crate) fn pairing_root_int(root: &[i64], h: &[i64]) -> i64 {
    crate::rat::dot_int(root, h)
}

fn apply_cols(cols: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    let n = cols[0].len();
    let mut out = vec![Rat::zero(); n];
    for (j, c) in v.iter().enumerate() {
        if !c.is_zero() {
            for i in 0..n {
                out[i] += cols[j][i] * c;
            }
        }
    }
    out
}

/// Cartan matrix with the convention `alpha_i = sum_j C_ij omega_j`,
/// i.e. `C_ij = 2(alpha_i, alpha_j) / (alpha_j, alpha_j)`.
fn cartan_matrix(kind: AlgebraKind) -> Vec<Vec<i64>> {
    let n = kind.rank();
    let chain = |n: usize| -> Vec<Vec<i64>> {
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c
    };
    match kind.family() {
        Family::A => chain(n),
        Family::B => {
            // alpha_n is short: C_{n-1,n} = -2
            let mut c = chain(n);
            c[n - 2][n - 1] = -2;
            c
        }
        Family::C => {
            // alpha_n is long: C_{n,n-1} = -2
            let mut c = chain(n);
            c[n - 1][n - 2] = -2;
            c
        }
        Family::D => {
            let mut c = chain(n);
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            c
        }
        Family::G2 => vec![vec![2, -1], vec![-3, 2]],
        Family::F4 => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        Family::E6 | Family::E7 | Family::E8 => {
            // chain 1-3-4-5-6(-7)(-8) with node 2 attached to node 4
            let mut c = vec![vec![0i64; n]; n];
            for i in 0..n {
                c[i][i] = 2;
            }
            let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if n >= 7 {
                edges.push((6, 7));
            }
            if n >= 8 {
                edges.push((7, 8));
            }
            for (a, b) in edges {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            }
            c
        }
    }
}

/// Norms `(alpha_i, alpha_i)`: the orthogonal-coordinate form for classical
/// families, the `(theta, theta) = 2` normalization for exceptional ones.
/// Freudenthal's formula only uses ratios, so the global scale is free.
fn simple_root_norms(kind: AlgebraKind) -> Vec<Rat> {
    let n = kind.rank();
    match kind.family() {
        Family::A | Family::D | Family::E6 | Family::E7 | Family::E8 => vec![rat(2); n],
        Family::B => {
            let mut v = vec![rat(2); n];
            v[n - 1] = rat(1);
            v
        }
        Family::C => {
            let mut v = vec![rat(2); n];
            v[n - 1] = rat(4);
            v
        }
        Family::F4 => vec![rat(2), rat(2), rat(1), rat(1)],
        Family::G2 => vec![ratio(2, 3), rat(2)],
    }
}

fn expected_root_count(kind: AlgebraKind) -> usize {
    let n = kind.rank();
    match kind.family() {
        Family::A => n * (n + 1),
        Family::B | Family::C => 2 * n * n,
        Family::D => 2 * n * (n - 1),
        Family::G2 => 12,
        Family::F4 => 48,
        Family::E6 => 72,
        Family::E7 => 126,
        Family::E8 => 240,
    }
}

/// Closure of the simple roots under simple reflections.
fn generate_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let k = cartan.len();
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..k {
        let mut e = vec![0i64; k];
        e[i] = 1;
        roots.insert(e.clone());
        frontier.push(e.clone());
        let neg: Vec<i64> = e.iter().map(|&x| -x).collect();
        roots.insert(neg.clone());
        frontier.push(neg);
    }
    while let Some(beta) = frontier.pop() {
        for i in 0..k {
            // <beta, alpha_i^vee> = sum_j beta_j C_ji
            let pair: i64 = (0..k).map(|j| beta[j] * cartan[j][i]).sum();
            let mut refl = beta.clone();
            refl[i] -= pair;
            if roots.insert(refl.clone()) {
                frontier.push(refl);
            }
        }
    }
    roots.into_iter().collect()
}

/// All node permutations preserving the Cartan matrix, by backtracking.
fn diagram_automorphisms(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let k = cartan.len();
    let mut out = Vec::new();
    let mut sigma = vec![usize::MAX; k];
    let mut used = vec![false; k];

    fn rec(
        cartan: &[Vec<i64>],
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = cartan.len();
        if depth == k {
            out.push(sigma.clone());
            return;
        }
        for cand in 0..k {
            if used[cand] {
                continue;
            }
            let ok = (0..depth).all(|j| {
                cartan[depth][j] == cartan[cand][sigma[j]]
                    && cartan[j][depth] == cartan[sigma[j]][cand]
            });
            if ok {
                sigma[depth] = cand;
                used[cand] = true;
                rec(cartan, sigma, used, depth + 1, out);
                used[cand] = false;
                sigma[depth] = usize::MAX;
            }
        }
    }
    rec(cartan, &mut sigma, &mut used, 0, &mut out);
    out.sort();
    out
}

fn classical_coords(kind: AlgebraKind) -> Option<ClassicalCoords> {
    let n = kind.rank();
    let half = ratio(1, 2);
    match kind.family() {
        Family::B => {
            // alpha_i = L_i - L_{i+1} (i < n), alpha_n = L_n; H_i = E_1+..+E_i
            let mut l = vec![vec![Rat::zero(); n]; n];
            for j in 0..n - 1 {
                l[j][j] = rat(1);
                l[j][j + 1] = rat(-1);
            }
            l[n - 1][n - 1] = rat(1);
            let mut e = vec![vec![Rat::zero(); n]; n];
            for j in 0..n {
                for i in 0..=j {
                    e[j][i] = rat(1);
                }
            }
            Some(ClassicalCoords { l_of_alpha: l, e_of_h: e })
        }
        Family::C => {
            // alpha_n = 2 L_n; H_n = (E_1+..+E_n)/2
            let mut l = vec![vec![Rat::zero(); n]; n];
            for j in 0..n - 1 {
                l[j][j] = rat(1);
                l[j][j + 1] = rat(-1);
            }
            l[n - 1][n - 1] = rat(2);
            let mut e = vec![vec![Rat::zero(); n]; n];
            for j in 0..n - 1 {
                for i in 0..=j {
                    e[j][i] = rat(1);
                }
            }
            for i in 0..n {
                e[n - 1][i] = half;
            }
            Some(ClassicalCoords { l_of_alpha: l, e_of_h: e })
        }
        Family::D => {
            // alpha_n = L_{n-1} + L_n;
            // H_{n-1} = (E_1+..+E_{n-1}-E_n)/2, H_n = (E_1+..+E_{n-1}+E_n)/2
            let mut l = vec![vec![Rat::zero(); n]; n];
            for j in 0..n - 1 {
                l[j][j] = rat(1);
                l[j][j + 1] = rat(-1);
            }
            l[n - 1][n - 2] = rat(1);
            l[n - 1][n - 1] = rat(1);
            let mut e = vec![vec![Rat::zero(); n]; n];
            for j in 0..n - 2 {
                for i in 0..=j {
                    e[j][i] = rat(1);
                }
            }
            for i in 0..n - 1 {
                e[n - 2][i] = half;
                e[n - 1][i] = half;
            }
            e[n - 2][n - 1] = -half;
            e[n - 1][n - 1] = half;
            Some(ClassicalCoords { l_of_alpha: l, e_of_h: e })
        }
        _ => None,
    }
}
