//! The centre of the simply connected group and the lattices attached to a
//! quotient `G = G~/C`.
//!
//! In `H`-coordinates the coweight lattice `Lambda_R` is `Z^k` and the
//! coroot lattice `Lambda_W` is spanned by the columns of the Cartan
//! matrix, so the centre `Z(G~) = Lambda_R / Lambda_W` is a plain integer
//! quotient. Membership in `I(G) = (2 pi)^{-1} exp_G^{-1}(e)` then reads:
//! integer `H`-coordinates whose coset modulo `Lambda_W` lies in `C`.

use crate::error::{Error, Result};
use crate::intlin::{self, Snf};
use crate::rat::{as_integer, rat, Rat};
use crate::rootdata::{AlgebraKind, CoweightVec, Family, RootDatum, Weight};
use num_integer::Integer;
use std::collections::BTreeMap;
use std::fmt;

/// The centre `Lambda_R / Lambda_W` of the simply connected group, with
/// canonical coset representatives and family-specific element names.
#[derive(Debug, Clone)]
pub struct CenterGroup {
    /// invariant factors of the Cartan transpose acting `Lambda_R -> Lambda_W`,
    /// nontrivial ones only (e.g. `[2]`, `[2,2]`, `[4]`, `[3]`)
    structure: Vec<i64>,
    /// canonical coset representatives in `H`-coordinates; index 0 is the identity
    elements: Vec<Vec<i64>>,
    names: Vec<Option<String>>,
    add_table: Vec<Vec<usize>>,
    hermite: Vec<Vec<i128>>,
    index: BTreeMap<Vec<i64>, usize>,
}

impl CenterGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn structure(&self) -> &[i64] {
        &self.structure
    }

    /// `"Z_2 x Z_2"`, `"Z_4"`, ..., `"trivial"`.
    pub fn structure_name(&self) -> String {
        if self.structure.is_empty() {
            "trivial".to_string()
        } else {
            self.structure
                .iter()
                .map(|d| format!("Z_{d}"))
                .collect::<Vec<_>>()
                .join(" x ")
        }
    }

    /// Canonical representative of element `i` as a coweight.
    pub fn element(&self, i: usize) -> CoweightVec {
        CoweightVec::from_ints(&self.elements[i])
    }

    pub fn elements(&self) -> &[Vec<i64>] {
        &self.elements
    }

    pub fn name_of(&self, i: usize) -> Option<&str> {
        self.names[i].as_deref()
    }

    pub fn element_named(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n.as_deref() == Some(name))
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add_table[i][j]
    }

    pub fn order_of(&self, i: usize) -> usize {
        let mut acc = i;
        let mut ord = 1;
        while acc != 0 {
            acc = self.add(acc, i);
            ord += 1;
        }
        ord
    }

    /// Coset of an integral coweight, or `None` off the coweight lattice.
    pub fn coset_of(&self, xi: &CoweightVec) -> Option<usize> {
        let ints = xi.integer_coords()?;
        let rep = intlin::reduce_mod(&self.hermite, &ints);
        Some(*self.index.get(&rep).expect("reduction lands on a listed representative"))
    }

    /// All subgroups, deduplicated, ordered by size then element list.
    pub fn subgroups(&self) -> Vec<CentralSubgroup> {
        let n = self.order();
        let mut out: Vec<CentralSubgroup> = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue; // must contain the identity
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| members.contains(&self.add(a, b))));
            if closed {
                out.push(CentralSubgroup {
                    generators: minimal_generators(self, &members),
                    elements: members,
                });
            }
        }
        out.sort_by(|a, b| {
            (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements))
        });
        out
    }
}

fn minimal_generators(center: &CenterGroup, members: &[usize]) -> Vec<usize> {
    if members.len() == 1 {
        return vec![];
    }
    let nontrivial: Vec<usize> = members.iter().copied().filter(|&i| i != 0).collect();
    for size in 1..=nontrivial.len() {
        let mut best: Option<Vec<usize>> = None;
        subsets_of_size(&nontrivial, size, &mut |gens| {
            if best.is_some() {
                return;
            }
            let closure = close_under_add(center, gens);
            if closure == members {
                best = Some(gens.to_vec());
            }
        });
        if let Some(g) = best {
            return g;
        }
    }
    nontrivial
}

fn subsets_of_size(items: &[usize], size: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut Vec::new(), f);
}

fn close_under_add(center: &CenterGroup, gens: &[usize]) -> Vec<usize> {
    let mut set = vec![0usize];
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = center.add(x, g);
            if !set.contains(&y) {
                set.push(y);
                frontier.push(y);
            }
        }
    }
    set.sort_unstable();
    set
}

/// A subgroup of the centre, stored by element indices into [`CenterGroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralSubgroup {
    pub generators: Vec<usize>,
    pub elements: Vec<usize>,
}

impl CentralSubgroup {
    pub fn trivial() -> CentralSubgroup {
        CentralSubgroup { generators: vec![], elements: vec![0] }
    }

    pub fn full(center: &CenterGroup) -> CentralSubgroup {
        let all: Vec<usize> = (0..center.order()).collect();
        CentralSubgroup { generators: minimal_generators(center, &all), elements: all }
    }

    pub fn from_generators(center: &CenterGroup, gens: &[usize]) -> CentralSubgroup {
        let elements = close_under_add(center, gens);
        CentralSubgroup { generators: gens.to_vec(), elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.elements.contains(&idx)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Computes the centre of the simply connected group over `datum`.
pub fn center(datum: &RootDatum) -> CenterGroup {
    let k = datum.rank();
    let cartan = datum.cartan_matrix();

    // Lambda_W is spanned by the columns of the Cartan matrix
    let basis: Vec<Vec<i64>> = cartan.to_vec();
    let hermite = intlin::hermite_lower(&basis);

    // enumerate cosets: the classes of the unit vectors generate
    let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut elements: Vec<Vec<i64>> = Vec::new();
    let zero = intlin::reduce_mod(&hermite, &vec![0; k]);
    index.insert(zero.clone(), 0);
    elements.push(zero);
    let mut frontier = vec![0usize];
    while let Some(e) = frontier.pop() {
        for i in 0..k {
            let mut v = elements[e].clone();
            v[i] += 1;
            let rep = intlin::reduce_mod(&hermite, &v);
            if !index.contains_key(&rep) {
                index.insert(rep.clone(), elements.len());
                elements.push(rep.clone());
                frontier.push(elements.len() - 1);
            }
        }
    }
    // canonical order: identity first, then lexicographic
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by(|&a, &b| (elements[a] != vec![0; k], &elements[a]).cmp(&(elements[b] != vec![0; k], &elements[b])));
    let elements: Vec<Vec<i64>> = order.iter().map(|&i| elements[i].clone()).collect();
    let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (i, e) in elements.iter().enumerate() {
        index.insert(e.clone(), i);
    }

    let det = intlin::det_int(cartan).unsigned_abs() as usize;
    assert_eq!(elements.len(), det, "|Lambda_R / Lambda_W| equals det C");

    let add_table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| {
                    let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    index[&intlin::reduce_mod(&hermite, &sum)]
                })
                .collect()
        })
        .collect();

    // invariant factors from the Smith normal form of C^T
    let ct: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| cartan[j][i]).collect()).collect();
    let Snf { d, .. } = intlin::smith_normal_form(&ct);
    let structure: Vec<i64> = d.iter().filter(|&&x| x > 1).map(|&x| x as i64).collect();

    let mut cg = CenterGroup {
        structure,
        elements,
        names: Vec::new(),
        add_table,
        hermite,
        index,
    };
    cg.names = vec![None; cg.order()];
    cg.names[0] = Some("1".to_string());
    assign_names(datum, &mut cg);
    cg
}

/// Family conventions for naming central elements by their cosets:
/// `-1 = [H_1]`, `w = [H_n]`, `-w = [H_{n-1}]` for family D, and the
/// evident `-1` / `z` for the other families with nontrivial centre.
fn assign_names(datum: &RootDatum, cg: &mut CenterGroup) {
    let k = datum.rank();
    let class_of_node = |cg: &CenterGroup, node: usize| -> usize {
        let mut v = vec![0i64; k];
        v[node] = 1;
        cg.coset_of(&CoweightVec::from_ints(&v)).unwrap()
    };
    match datum.kind().family() {
        Family::B => {
            let c = class_of_node(cg, 0);
            if c != 0 {
                cg.names[c] = Some("-1".into());
            }
        }
        Family::C => {
            let c = class_of_node(cg, k - 1);
            if c != 0 {
                cg.names[c] = Some("-1".into());
            }
        }
        Family::D => {
            let m1 = class_of_node(cg, 0);
            let w = class_of_node(cg, k - 1);
            let mw = class_of_node(cg, k - 2);
            cg.names[m1] = Some("-1".into());
            cg.names[w] = Some("w".into());
            cg.names[mw] = Some("-w".into());
        }
        Family::E7 => {
            let c = class_of_node(cg, 6);
            cg.names[c] = Some("-1".into());
        }
        Family::E6 => {
            let z = class_of_node(cg, 0);
            cg.names[z] = Some("z".into());
            cg.names[cg.add_table[z][z]] = Some("z^2".into());
        }
        Family::A => {
            let z = class_of_node(cg, 0);
            let mut acc = z;
            let mut p = 1;
            while acc != 0 {
                if cg.names[acc].is_none() {
                    cg.names[acc] =
                        Some(if p == 1 { "z".into() } else { format!("z^{p}") });
                }
                acc = cg.add_table[acc][z];
                p += 1;
            }
        }
        _ => {}
    }
}

/// A quotient group `G = G~/C`: the root datum plus a central subgroup.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    datum: RootDatum,
    center: CenterGroup,
    subgroup: CentralSubgroup,
}

impl GroupSpec {
    pub fn new(datum: RootDatum, subgroup: CentralSubgroup) -> GroupSpec {
        let center = center(&datum);
        for &e in &subgroup.elements {
            assert!(e < center.order(), "subgroup indices must refer to centre elements");
        }
        GroupSpec { datum, center, subgroup }
    }

    pub fn simply_connected(kind: AlgebraKind) -> GroupSpec {
        GroupSpec::new(RootDatum::new(kind), CentralSubgroup::trivial())
    }

    pub fn adjoint(kind: AlgebraKind) -> GroupSpec {
        let datum = RootDatum::new(kind);
        let c = center(&datum);
        let full = CentralSubgroup::full(&c);
        GroupSpec { datum, center: c, subgroup: full }
    }

    /// Quotient by the subgroup generated by named central elements.
    pub fn quotient_by_names(kind: AlgebraKind, names: &[&str]) -> Result<GroupSpec> {
        let datum = RootDatum::new(kind);
        let c = center(&datum);
        let mut gens = Vec::new();
        for name in names {
            let idx = c.element_named(name).ok_or_else(|| Error::InvalidSubgroup {
                token: name.to_string(),
                valid: (0..c.order()).filter_map(|i| c.name_of(i).map(String::from)).collect(),
            })?;
            gens.push(idx);
        }
        let sub = CentralSubgroup::from_generators(&c, &gens);
        Ok(GroupSpec { datum, center: c, subgroup: sub })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn center_group(&self) -> &CenterGroup {
        &self.center
    }

    pub fn subgroup(&self) -> &CentralSubgroup {
        &self.subgroup
    }

    /// Membership in `I(G)`: integer `H`-coordinates whose coset lies in `C`.
    pub fn contains(&self, xi: &CoweightVec) -> bool {
        match self.center.coset_of(xi) {
            Some(c) => self.subgroup.contains(c),
            None => false,
        }
    }

    /// Membership in the dominant slice `I'(G)`.
    pub fn contains_dominant(&self, xi: &CoweightVec) -> bool {
        xi.is_dominant() && self.contains(xi)
    }

    /// Membership in `I^2(G) = 2 I(G)`.
    pub fn contains_i2(&self, xi: &CoweightVec) -> bool {
        let half = xi.scale(crate::rat::ratio(1, 2));
        half.integer_coords().is_some() && self.contains(&half)
    }

    /// Least `m >= 1` with `m H_node` in `I(G)` (`node` is 0-based).
    pub fn minimal_multiplier(&self, node: usize) -> Result<u64> {
        let k = self.datum.rank();
        if node >= k {
            return Err(Error::NodeOutOfRange { index: node + 1, rank: k });
        }
        let mut v = vec![0i64; k];
        v[node] = 1;
        let bound = self.center.order_of(self.center.coset_of(&CoweightVec::from_ints(&v)).unwrap());
        for m in 1..=bound as i64 {
            v[node] = m;
            if self.contains(&CoweightVec::from_ints(&v)) {
                return Ok(m as u64);
            }
        }
        unreachable!("the coset order always bounds the multiplier")
    }

    /// A basis of the character lattice of `G`: the dominant-integral span
    /// of all weights pairing integrally with every element of `C`.
    pub fn character_lattice_basis(&self) -> Vec<Weight> {
        let k = self.datum.rank();
        let cartan_inv = self.datum.cartan_inverse();
        // constraint vectors v = C^{-1} h for each subgroup element h
        let mut vs: Vec<Vec<Rat>> = Vec::new();
        for &e in &self.subgroup.elements {
            let h: Vec<Rat> = self.center.elements[e].iter().map(|&x| rat(x)).collect();
            let v: Vec<Rat> = (0..k)
                .map(|i| (0..k).map(|j| cartan_inv[i][j] * h[j]).sum())
                .collect();
            vs.push(v);
        }
        let mut denom: i128 = 1;
        for v in &vs {
            for x in v {
                denom = denom.lcm(x.denom());
            }
        }
        let rows: Vec<Vec<i64>> = vs
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| {
                        let scaled = x * rat(denom as i64);
                        as_integer(&scaled).unwrap()
                    })
                    .collect()
            })
            .collect();
        // solve M c = 0 mod denom via the Smith form of M
        let Snf { d, v, .. } = intlin::smith_normal_form(&rows);
        let mut basis = Vec::new();
        for i in 0..k {
            let di = if i < d.len() { d[i] } else { 0 };
            let g = di.gcd(&denom);
            let t = denom / if g == 0 { denom } else { g };
            let col: Vec<i64> = (0..k).map(|r| (t * v[r][i]) as i64).collect();
            basis.push(Weight::from_fw_ints(&self.datum, &col).unwrap());
        }
        basis
    }

    /// Character-based membership test, the cross-check for [`Self::contains`]:
    /// integer coordinates and integral pairing with a character-lattice basis.
    pub fn contains_via_characters(&self, xi: &CoweightVec) -> bool {
        if xi.integer_coords().is_none() {
            return false;
        }
        self.character_lattice_basis().iter().all(|w| {
            let p = crate::rootdata::pairing(w, xi).unwrap();
            crate::rat::is_integer(&p)
        })
    }

    /// Conventional display name, e.g. `Spin(7)`, `SO(12)/{1,w}` or `E7~`.
    pub fn display_name(&self) -> String {
        let n = self.datum.rank();
        let fam = self.datum.kind().family();
        let sub = &self.subgroup;
        let full = sub.order() == self.center.order();
        let named: Vec<&str> = sub
            .elements
            .iter()
            .filter(|&&e| e != 0)
            .map(|&e| self.center.name_of(e).unwrap_or("?"))
            .collect();
        match fam {
            Family::A => {
                if sub.is_trivial() {
                    format!("SU({})", n + 1)
                } else if full {
                    format!("PSU({})", n + 1)
                } else {
                    format!("SU({})/Z_{}", n + 1, sub.order())
                }
            }
            Family::B => {
                if sub.is_trivial() {
                    format!("Spin({})", 2 * n + 1)
                } else {
                    format!("SO({})", 2 * n + 1)
                }
            }
            Family::C => {
                if sub.is_trivial() {
                    format!("Sp({n})")
                } else {
                    format!("PSp({n})")
                }
            }
            Family::D => {
                if sub.is_trivial() {
                    format!("Spin({})", 2 * n)
                } else if full {
                    format!("PSO({})", 2 * n)
                } else if named == ["-1"] {
                    format!("SO({})", 2 * n)
                } else {
                    format!("Spin({})/{{1,{}}}", 2 * n, named.join(","))
                }
            }
            Family::G2 | Family::F4 | Family::E8 => fam.name().to_string(),
            Family::E6 | Family::E7 => {
                if sub.is_trivial() {
                    format!("{}~", fam.name())
                } else {
                    fam.name().to_string()
                }
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_name())
    }
}
