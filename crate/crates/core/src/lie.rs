//! Root systems, weight lattices, centres, and small-rank canonicalization.
//!
//! Everything here is exact: the bilinear form is normalized so the highest
//! root has squared length 2, and all inner products are `Rational64`.
//! Weights are stored as Dynkin labels (coordinates in the fundamental-weight
//! basis), roots as coordinates in the simple-root basis. Node numbering is
//! Bourbaki throughout.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exact scalar used for all form arithmetic.
pub type Q = Rational64;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// The nine series of simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleSeries {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl SimpleSeries {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "A" | "a" => Some(Self::A),
            "B" | "b" => Some(Self::B),
            "C" | "c" => Some(Self::C),
            "D" | "d" => Some(Self::D),
            "E6" | "e6" => Some(Self::E6),
            "E7" | "e7" => Some(Self::E7),
            "E8" | "e8" => Some(Self::E8),
            "F4" | "f4" => Some(Self::F4),
            "G2" | "g2" => Some(Self::G2),
            _ => None,
        }
    }

    /// Rank forced by the series, for the exceptional types.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Self::E6 => Some(6),
            Self::E7 => Some(7),
            Self::E8 => Some(8),
            Self::F4 => Some(4),
            Self::G2 => Some(2),
            _ => None,
        }
    }

    /// Smallest rank accepted by [`RootSystem::build`].
    pub fn min_rank(self) -> usize {
        match self {
            Self::A => 1,
            Self::B | Self::C => 2,
            Self::D => 3,
            _ => self.fixed_rank().unwrap(),
        }
    }
}

impl fmt::Display for SimpleSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
            Self::E6 => "E6",
            Self::E7 => "E7",
            Self::E8 => "E8",
            Self::F4 => "F4",
            Self::G2 => "G2",
        };
        f.write_str(s)
    }
}

/// Nominal name of a WZW factor: series, rank and level.
///
/// Unlike [`RootSystem::build`], a `FactorName` may carry the small ranks
/// B1, C1, D2, D3 that only make sense as names for isomorphic algebras;
/// [`canonicalize`] rewrites those.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FactorName {
    pub series: SimpleSeries,
    pub rank: usize,
    pub level: u32,
}

impl FactorName {
    pub fn new(series: SimpleSeries, rank: usize, level: u32) -> Self {
        Self { series, rank, level }
    }

    /// Group-style display name: `Spin(12)_2`, `Sp(2x6)_1`, `SU(12)_1`, `E7_2`.
    ///
    /// Rank-one factors of type A or C print as `Sp(2x1)` to match the usual
    /// convention for the quaternionic normalization of su(2) levels.
    pub fn display(&self) -> String {
        match self.series {
            SimpleSeries::A => {
                if self.rank == 1 {
                    format!("Sp(2x1)_{}", self.level)
                } else {
                    format!("SU({})_{}", self.rank + 1, self.level)
                }
            }
            SimpleSeries::B => format!("Spin({})_{}", 2 * self.rank + 1, self.level),
            SimpleSeries::C => format!("Sp(2x{})_{}", self.rank, self.level),
            SimpleSeries::D => format!("Spin({})_{}", 2 * self.rank, self.level),
            s => format!("{}_{}", s, self.level),
        }
    }
}

/// The centre of the simply connected group, as an abstract finite group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CenterGroup {
    Trivial,
    /// Cyclic of the given order.
    Cyclic(u32),
    /// Z2 x Z2 (type D, even rank).
    Klein,
}

impl CenterGroup {
    pub fn order(self) -> u32 {
        match self {
            Self::Trivial => 1,
            Self::Cyclic(n) => n,
            Self::Klein => 4,
        }
    }
}

/// An element of the centre.
///
/// `Cyclic(i)` is the residue i in Z_n; for type D with even rank the Klein
/// four-group is coordinatized so that `s+ = (1,0)`, `s- = (0,1)`, `v = (1,1)`.
/// For type D with odd rank the centre is Z4 with `s+ = 1`, `v = 2`, `s- = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CenterCharge {
    Cyclic(u32),
    Klein(u8, u8),
}

impl CenterCharge {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Self::Cyclic(0) | Self::Klein(0, 0))
    }

    pub fn order_in(&self, group: CenterGroup) -> u32 {
        match (self, group) {
            (Self::Cyclic(i), CenterGroup::Cyclic(n)) => {
                if *i == 0 {
                    1
                } else {
                    n / num_integer::gcd(*i, n)
                }
            }
            (Self::Klein(a, b), CenterGroup::Klein) => {
                if *a == 0 && *b == 0 {
                    1
                } else {
                    2
                }
            }
            (Self::Cyclic(0), CenterGroup::Trivial) => 1,
            _ => panic!("charge does not lie in the declared centre"),
        }
    }

    pub fn add(&self, other: &Self, group: CenterGroup) -> Self {
        match (self, other, group) {
            (Self::Cyclic(i), Self::Cyclic(j), CenterGroup::Cyclic(n)) => Self::Cyclic((i + j) % n),
            (Self::Cyclic(0), Self::Cyclic(0), CenterGroup::Trivial) => Self::Cyclic(0),
            (Self::Klein(a, b), Self::Klein(c, d), CenterGroup::Klein) => {
                Self::Klein((a + c) % 2, (b + d) % 2)
            }
            _ => panic!("charge does not lie in the declared centre"),
        }
    }

    /// Conventional label: `v`, `s+`, `s-` in type D, the residue otherwise.
    pub fn label(&self, series: SimpleSeries, rank: usize) -> String {
        match (series, self) {
            (SimpleSeries::D, ch) => {
                let name = if rank % 2 == 0 {
                    match ch {
                        Self::Klein(0, 0) => "1",
                        Self::Klein(1, 1) => "v",
                        Self::Klein(1, 0) => "s+",
                        Self::Klein(0, 1) => "s-",
                        _ => unreachable!(),
                    }
                } else {
                    match ch {
                        Self::Cyclic(0) => "1",
                        Self::Cyclic(1) => "s+",
                        Self::Cyclic(2) => "v",
                        Self::Cyclic(3) => "s-",
                        _ => unreachable!(),
                    }
                };
                name.to_string()
            }
            (SimpleSeries::B | SimpleSeries::C | SimpleSeries::E7, Self::Cyclic(1)) => {
                match series {
                    SimpleSeries::B => "v".to_string(),
                    SimpleSeries::C => "c".to_string(),
                    _ => "c".to_string(),
                }
            }
            (_, Self::Cyclic(i)) => i.to_string(),
            _ => unreachable!(),
        }
    }
}

/// A weight in the fundamental-weight basis of an ambient root system.
#[derive(Debug, Clone)]
pub struct Weight {
    pub rs: Arc<RootSystem>,
    pub labels: Vec<i64>,
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.rs.series == other.rs.series
            && self.rs.rank == other.rs.rank
            && self.labels == other.labels
    }
}

impl Eq for Weight {}

impl std::hash::Hash for Weight {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rs.series.hash(state);
        self.rs.rank.hash(state);
        self.labels.hash(state);
    }
}

impl Weight {
    pub fn new(rs: &Arc<RootSystem>, labels: Vec<i64>) -> Self {
        assert_eq!(labels.len(), rs.rank);
        Self { rs: Arc::clone(rs), labels }
    }

    pub fn zero(rs: &Arc<RootSystem>) -> Self {
        Self::new(rs, vec![0; rs.rank])
    }

    pub fn fundamental(rs: &Arc<RootSystem>, node: usize) -> Self {
        let mut labels = vec![0; rs.rank];
        labels[node - 1] = 1;
        Self::new(rs, labels)
    }

    pub fn is_dominant(&self) -> bool {
        self.labels.iter().all(|&c| c >= 0)
    }

    /// Level of the weight: its pairing with the highest coroot.
    pub fn level(&self) -> Q {
        self.rs.inner_labels(&self.labels, &self.rs.theta_labels)
    }
}

/// Shared Bourbaki data for one simple root system.
///
/// Built once per (series, rank) and cached behind an `Arc`; all fields are
/// immutable after construction.
#[derive(Debug)]
pub struct RootSystem {
    pub series: SimpleSeries,
    pub rank: usize,
    /// Cartan matrix a_ij = <alpha_i, alpha_j^vee>, row-major.
    pub cartan: Vec<i64>,
    /// Half squared lengths (alpha_i, alpha_i)/2 under (theta,theta) = 2.
    pub eps: Vec<Q>,
    /// Gram matrix (omega_i, omega_j) of the fundamental weights.
    pub gram: Vec<Q>,
    /// Positive roots in simple-root coordinates, by increasing height.
    pub pos_roots: Vec<Vec<i64>>,
    /// Dynkin labels of each positive root (same order as `pos_roots`).
    pub pos_root_labels: Vec<Vec<i64>>,
    /// Highest root, Dynkin labels.
    pub theta_labels: Vec<i64>,
    /// Highest root, simple-root coordinates.
    pub theta_coords: Vec<i64>,
    pub dual_coxeter: u64,
    pub dim_g: u64,
    pub weyl_order: BigUint,
    pub center: CenterGroup,
    /// (A^T)^{-1} columns: root-basis coordinates of each fundamental weight.
    coweight_coords: Vec<Q>,
}

fn rs_cache() -> &'static Mutex<HashMap<(SimpleSeries, usize), Arc<RootSystem>>> {
    static CACHE: OnceLock<Mutex<HashMap<(SimpleSeries, usize), Arc<RootSystem>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl RootSystem {
    /// Build (or fetch from the cache) the root system for a series and rank.
    pub fn build(series: SimpleSeries, rank: usize) -> Result<Arc<Self>> {
        if let Some(fixed) = series.fixed_rank() {
            if rank != fixed {
                return Err(Error::InvalidRank { series, rank });
            }
        }
        if rank < series.min_rank() || rank > 512 {
            return Err(Error::InvalidRank { series, rank });
        }
        if let Some(rs) = rs_cache().lock().unwrap().get(&(series, rank)) {
            return Ok(Arc::clone(rs));
        }
        let rs = Arc::new(Self::construct(series, rank));
        rs_cache()
            .lock()
            .unwrap()
            .insert((series, rank), Arc::clone(&rs));
        Ok(rs)
    }

    fn construct(series: SimpleSeries, rank: usize) -> Self {
        let cartan = cartan_matrix(series, rank);
        let eps = root_half_lengths(series, rank);

        // Gram matrix of fundamental weights: G = A^{-1} diag(eps).
        let a_inv = invert_rational(&cartan.iter().map(|&x| Q::from_integer(x)).collect::<Vec<_>>(), rank);
        let mut gram = vec![Q::zero(); rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                gram[i * rank + j] = a_inv[i * rank + j] * eps[j];
            }
        }

        // Row j of A^{-1} holds the simple-root coordinates of omega_j.
        let coweight_coords = a_inv.clone();

        let pos_roots = generate_positive_roots(&cartan, rank);
        let pos_root_labels: Vec<Vec<i64>> = pos_roots
            .iter()
            .map(|c| root_labels(&cartan, rank, c))
            .collect();
        let theta_coords = pos_roots.last().unwrap().clone();
        let theta_labels = pos_root_labels.last().unwrap().clone();

        let dim_g = (rank + 2 * pos_roots.len()) as u64;
        // h^vee = (rho, theta) + 1 with rho = sum of fundamental weights.
        let rho = vec![1i64; rank];
        let mut rho_theta = Q::zero();
        for (k, &c) in theta_coords.iter().enumerate() {
            rho_theta += Q::from_integer(c) * eps[k] * Q::from_integer(rho[k]);
        }
        debug_assert!(rho_theta.is_integer());
        let dual_coxeter = (rho_theta.to_integer() + 1) as u64;

        let weyl_order = weyl_group_order(series, rank);
        let center = center_group(series, rank);

        Self {
            series,
            rank,
            cartan,
            eps,
            gram,
            pos_roots,
            pos_root_labels,
            theta_labels,
            theta_coords,
            dual_coxeter,
            dim_g,
            weyl_order,
            center,
            coweight_coords,
        }
    }

    pub fn name(&self, level: u32) -> FactorName {
        FactorName::new(self.series, self.rank, level)
    }

    /// Inner product of two weights given by Dynkin labels.
    pub fn inner_labels(&self, a: &[i64], b: &[i64]) -> Q {
        let n = self.rank;
        let mut acc = Q::zero();
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            let mut row = Q::zero();
            for j in 0..n {
                if b[j] != 0 {
                    row += self.gram[i * n + j] * Q::from_integer(b[j]);
                }
            }
            acc += Q::from_integer(a[i]) * row;
        }
        acc
    }

    /// Inner product of a weight (labels) with a root (simple-root coords).
    pub fn inner_weight_root(&self, labels: &[i64], root_coords: &[i64]) -> Q {
        let mut acc = Q::zero();
        for (k, &c) in root_coords.iter().enumerate() {
            if c != 0 && labels[k] != 0 {
                acc += Q::from_integer(c) * self.eps[k] * Q::from_integer(labels[k]);
            }
        }
        acc
    }

    /// Squared length of a root given in simple-root coordinates.
    pub fn root_norm(&self, coords: &[i64]) -> Q {
        let labels = root_labels(&self.cartan, self.rank, coords);
        self.inner_weight_root(&labels, coords)
    }

    /// Reflect Dynkin labels in the i-th simple root (0-based node index).
    pub fn reflect(&self, labels: &mut [i64], i: usize) {
        let c = labels[i];
        if c == 0 {
            return;
        }
        let n = self.rank;
        for j in 0..n {
            labels[j] -= c * self.cartan[i * n + j];
        }
    }

    /// Dominant representative of the Weyl orbit of `labels`.
    pub fn dominant_rep(&self, labels: &[i64]) -> Vec<i64> {
        let mut w = labels.to_vec();
        loop {
            match w.iter().position(|&c| c < 0) {
                Some(i) => self.reflect(&mut w, i),
                None => return w,
            }
        }
    }

    /// Orbit size of a dominant weight, via the parabolic stabilizer.
    pub fn orbit_size(&self, dominant: &[i64]) -> BigUint {
        let fixed: Vec<usize> = (0..self.rank).filter(|&i| dominant[i] == 0).collect();
        let stab = parabolic_weyl_order(self, &fixed);
        &self.weyl_order / stab
    }

    /// Root-basis coordinate k of the fundamental weight omega_j (0-based).
    pub fn fundamental_root_coord(&self, j: usize, k: usize) -> Q {
        self.coweight_coords[j * self.rank + k]
    }

    /// Whether `labels` lies in the root lattice.
    pub fn in_root_lattice(&self, labels: &[i64]) -> bool {
        // Coordinates in the simple-root basis are sum_j labels_j * coweight_coords[j][k].
        let n = self.rank;
        for k in 0..n {
            let mut x = Q::zero();
            for j in 0..n {
                if labels[j] != 0 {
                    x += Q::from_integer(labels[j]) * self.coweight_coords[j * n + k];
                }
            }
            if !x.is_integer() {
                return false;
            }
        }
        true
    }

    /// All elements of the centre, the identity first.
    pub fn center_elements(&self) -> Vec<CenterCharge> {
        match self.center {
            CenterGroup::Trivial => vec![CenterCharge::Cyclic(0)],
            CenterGroup::Cyclic(n) => (0..n).map(CenterCharge::Cyclic).collect(),
            CenterGroup::Klein => vec![
                CenterCharge::Klein(0, 0),
                CenterCharge::Klein(1, 1),
                CenterCharge::Klein(1, 0),
                CenterCharge::Klein(0, 1),
            ],
        }
    }

    /// Cominuscule node attached to a nontrivial centre element (1-based).
    pub fn cominuscule_node(&self, a: &CenterCharge) -> Result<usize> {
        if a.is_trivial() {
            return Err(Error::TrivialCurrent);
        }
        let n = self.rank;
        let node = match (self.series, a) {
            (SimpleSeries::A, CenterCharge::Cyclic(i)) => *i as usize,
            (SimpleSeries::B, CenterCharge::Cyclic(1)) => 1,
            (SimpleSeries::C, CenterCharge::Cyclic(1)) => n,
            (SimpleSeries::D, CenterCharge::Klein(1, 1)) => 1,
            (SimpleSeries::D, CenterCharge::Klein(1, 0)) => n,
            (SimpleSeries::D, CenterCharge::Klein(0, 1)) => n - 1,
            (SimpleSeries::D, CenterCharge::Cyclic(2)) => 1,
            (SimpleSeries::D, CenterCharge::Cyclic(1)) => n,
            (SimpleSeries::D, CenterCharge::Cyclic(3)) => n - 1,
            (SimpleSeries::E6, CenterCharge::Cyclic(1)) => 1,
            (SimpleSeries::E6, CenterCharge::Cyclic(2)) => 6,
            (SimpleSeries::E7, CenterCharge::Cyclic(1)) => 7,
            _ => return Err(Error::TrivialCenter(self.series)),
        };
        Ok(node)
    }

    /// Highest weight of the abelian anyon labelled by `a` at level `k`.
    pub fn current_weight(self: &Arc<Self>, a: &CenterCharge, k: u32) -> Result<Weight> {
        let node = self.cominuscule_node(a)?;
        let mut labels = vec![0i64; self.rank];
        labels[node - 1] = k as i64;
        Ok(Weight::new(self, labels))
    }

    /// Centre charge of a weight, i.e. its class in P/Q.
    pub fn charge_of_weight(&self, labels: &[i64]) -> CenterCharge {
        let trivial = match self.center {
            CenterGroup::Klein => CenterCharge::Klein(0, 0),
            _ => CenterCharge::Cyclic(0),
        };
        if self.in_root_lattice(labels) {
            return trivial;
        }
        for a in self.center_elements().into_iter().skip(1) {
            let node = self.cominuscule_node(&a).unwrap();
            let mut diff = labels.to_vec();
            diff[node - 1] -= 1;
            if self.in_root_lattice(&diff) {
                return a;
            }
        }
        unreachable!("weight charge not matched by any centre element")
    }
}

/// Output of [`canonicalize`]: one or two canonical factors plus a triality
/// flag for type D rank 4, where the three order-two charges are identified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub parts: Vec<(FactorName, CenterCharge)>,
    pub d4_triality: bool,
}

/// Rewrite a nominal factor (with a centre charge) through the exceptional
/// isomorphisms of small spin and symplectic groups:
/// B1 -> A1 at doubled level, C1 -> A1, B2 -> C2, D2 -> A1 x A1, D3 -> A3.
/// Idempotent on canonical input; D4 is canonical but flagged for triality.
pub fn canonicalize(name: FactorName, charge: CenterCharge) -> CanonicalForm {
    let FactorName { series, rank, level } = name;
    let one = |n: FactorName, c: CenterCharge, tri: bool| CanonicalForm {
        parts: vec![(n, c)],
        d4_triality: tri,
    };
    match (series, rank) {
        (SimpleSeries::B, 1) => one(
            FactorName::new(SimpleSeries::A, 1, 2 * level),
            charge, // Z2 -> Z2
            false,
        ),
        (SimpleSeries::C, 1) => one(FactorName::new(SimpleSeries::A, 1, level), charge, false),
        (SimpleSeries::B, 2) => {
            // Spin(5) = Sp(2x2); the vector charge maps to the C2 centre charge.
            one(FactorName::new(SimpleSeries::C, 2, level), charge, false)
        }
        (SimpleSeries::D, 2) => {
            // Spin(4) = SU(2) x SU(2); v = (1,1), s+ = (1,0), s- = (0,1).
            let (a, b) = match charge {
                CenterCharge::Klein(a, b) => (a, b),
                CenterCharge::Cyclic(0) => (0, 0),
                _ => unreachable!(),
            };
            CanonicalForm {
                parts: vec![
                    (FactorName::new(SimpleSeries::A, 1, level), CenterCharge::Cyclic(a as u32)),
                    (FactorName::new(SimpleSeries::A, 1, level), CenterCharge::Cyclic(b as u32)),
                ],
                d4_triality: false,
            }
        }
        (SimpleSeries::D, 3) => {
            // Spin(6) = SU(4); v -> i=2, s+ -> i=1, s- -> i=3.
            let i = match charge {
                CenterCharge::Cyclic(0) => 0,
                CenterCharge::Cyclic(1) => 1,
                CenterCharge::Cyclic(2) => 2,
                CenterCharge::Cyclic(3) => 3,
                _ => unreachable!(),
            };
            one(FactorName::new(SimpleSeries::A, 3, level), CenterCharge::Cyclic(i), false)
        }
        (SimpleSeries::D, 4) => one(name, charge, true),
        _ => one(name, charge, false),
    }
}

// ---------------------------------------------------------------------------
// construction helpers

fn cartan_matrix(series: SimpleSeries, n: usize) -> Vec<i64> {
    let mut a = vec![0i64; n * n];
    let mut set = |i: usize, j: usize, v: i64| a[(i - 1) * n + (j - 1)] = v;
    for i in 1..=n {
        set(i, i, 2);
    }
    let mut chain = |edges: &[(usize, usize)]| {
        for &(i, j) in edges {
            set(i, j, -1);
            set(j, i, -1);
        }
    };
    match series {
        SimpleSeries::A => {
            chain(&(1..n).map(|i| (i, i + 1)).collect::<Vec<_>>());
        }
        SimpleSeries::B => {
            chain(&(1..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            // alpha_{n-1} long, alpha_n short
            set(n - 1, n, -2);
            set(n, n - 1, -1);
        }
        SimpleSeries::C => {
            chain(&(1..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            // alpha_{n-1} short, alpha_n long
            set(n - 1, n, -1);
            set(n, n - 1, -2);
        }
        SimpleSeries::D => {
            chain(&(1..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            chain(&[(n - 2, n)]);
        }
        SimpleSeries::E6 => chain(&[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]),
        SimpleSeries::E7 => chain(&[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]),
        SimpleSeries::E8 => chain(&[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]),
        SimpleSeries::F4 => {
            chain(&[(1, 2), (3, 4)]);
            set(2, 3, -2);
            set(3, 2, -1);
        }
        SimpleSeries::G2 => {
            set(1, 2, -1);
            set(2, 1, -3);
        }
    }
    a
}

fn root_half_lengths(series: SimpleSeries, n: usize) -> Vec<Q> {
    let mut eps = vec![Q::one(); n];
    match series {
        SimpleSeries::B => eps[n - 1] = q(1, 2),
        SimpleSeries::C => {
            for e in eps.iter_mut().take(n - 1) {
                *e = q(1, 2);
            }
        }
        SimpleSeries::F4 => {
            eps[2] = q(1, 2);
            eps[3] = q(1, 2);
        }
        SimpleSeries::G2 => eps[0] = q(1, 3),
        _ => {}
    }
    eps
}

/// Exact inverse of an n x n rational matrix (row-major).
fn invert_rational(m: &[Q], n: usize) -> Vec<Q> {
    let mut a = m.to_vec();
    let mut inv = vec![Q::zero(); n * n];
    for i in 0..n {
        inv[i * n + i] = Q::one();
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r * n + col].is_zero())
            .expect("singular matrix");
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
                inv.swap(col * n + j, pivot * n + j);
            }
        }
        let p = a[col * n + col];
        for j in 0..n {
            a[col * n + j] /= p;
            inv[col * n + j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r * n + col].is_zero() {
                let f = a[r * n + col];
                for j in 0..n {
                    let t = a[col * n + j] * f;
                    a[r * n + j] -= t;
                    let t = inv[col * n + j] * f;
                    inv[r * n + j] -= t;
                }
            }
        }
    }
    inv
}

fn root_labels(cartan: &[i64], n: usize, coords: &[i64]) -> Vec<i64> {
    // labels_j = sum_k coords_k a_kj
    (0..n)
        .map(|j| (0..n).map(|k| coords[k] * cartan[k * n + j]).sum())
        .collect()
}

/// Positive roots by the root-string closure, sorted by height.
fn generate_positive_roots(cartan: &[i64], n: usize) -> Vec<Vec<i64>> {
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    for i in 0..n {
        let mut c = vec![0i64; n];
        c[i] = 1;
        seen.insert(c.clone(), roots.len());
        roots.push(c);
    }
    let mut frontier: Vec<Vec<i64>> = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            let labels = root_labels(cartan, n, beta);
            for i in 0..n {
                // p = largest t with beta - t alpha_i a root (or beta = alpha_i).
                let mut p = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe.iter().all(|&x| x == 0) || seen.contains_key(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - labels[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !seen.contains_key(&up) {
                        seen.insert(up.clone(), roots.len());
                        roots.push(up.clone());
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    roots.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    roots
}

fn factorial(n: u64) -> BigUint {
    let mut f = BigUint::one();
    for k in 2..=n {
        f *= k;
    }
    f
}

fn weyl_group_order(series: SimpleSeries, n: usize) -> BigUint {
    let two = BigUint::from(2u32);
    match series {
        SimpleSeries::A => factorial(n as u64 + 1),
        SimpleSeries::B | SimpleSeries::C => factorial(n as u64) * two.pow(n as u32),
        SimpleSeries::D => factorial(n as u64) * two.pow(n as u32 - 1),
        SimpleSeries::E6 => BigUint::from(51_840u64),
        SimpleSeries::E7 => BigUint::from(2_903_040u64),
        SimpleSeries::E8 => BigUint::from(696_729_600u64),
        SimpleSeries::F4 => BigUint::from(1152u32),
        SimpleSeries::G2 => BigUint::from(12u32),
    }
}

fn center_group(series: SimpleSeries, n: usize) -> CenterGroup {
    match series {
        SimpleSeries::A => CenterGroup::Cyclic(n as u32 + 1),
        SimpleSeries::B | SimpleSeries::C | SimpleSeries::E7 => CenterGroup::Cyclic(2),
        SimpleSeries::D => {
            if n % 2 == 0 {
                CenterGroup::Klein
            } else {
                CenterGroup::Cyclic(4)
            }
        }
        SimpleSeries::E6 => CenterGroup::Cyclic(3),
        SimpleSeries::E8 | SimpleSeries::F4 | SimpleSeries::G2 => CenterGroup::Trivial,
    }
}

/// Weyl order of the parabolic generated by the simple reflections in `nodes`.
fn parabolic_weyl_order(rs: &RootSystem, nodes: &[usize]) -> BigUint {
    if nodes.is_empty() {
        return BigUint::one();
    }
    let n = rs.rank;
    let node_set: Vec<usize> = nodes.to_vec();
    let mut visited = vec![false; node_set.len()];
    let mut order = BigUint::one();
    for start in 0..node_set.len() {
        if visited[start] {
            continue;
        }
        // collect the connected component in the induced subdiagram
        let mut comp = vec![start];
        visited[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..node_set.len() {
                if !visited[v] && rs.cartan[node_set[u] * n + node_set[v]] != 0 {
                    visited[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        let comp_nodes: Vec<usize> = comp.iter().map(|&u| node_set[u]).collect();
        order *= component_weyl_order(rs, &comp_nodes);
    }
    order
}

/// Identify the type of a connected induced subdiagram and return its Weyl order.
fn component_weyl_order(rs: &RootSystem, comp: &[usize]) -> BigUint {
    let k = comp.len();
    let n = rs.rank;
    if k == 1 {
        return BigUint::from(2u32);
    }
    let entry = |i: usize, j: usize| rs.cartan[comp[i] * n + comp[j]];
    let mut degs = vec![0usize; k];
    let mut has_triple = false;
    let mut has_double = false;
    for i in 0..k {
        for j in 0..k {
            if i != j && entry(i, j) != 0 {
                degs[i] += 1;
                match entry(i, j) * entry(j, i) {
                    2 => has_double = true,
                    3 => has_triple = true,
                    _ => {}
                }
            }
        }
    }
    let branch = degs.iter().filter(|&&d| d >= 3).count();
    if has_triple {
        return BigUint::from(12u32); // G2
    }
    if has_double {
        if k == 4 {
            // F4 has the double edge between the two middle nodes
            let mid_double = (0..k).any(|i| {
                degs[i] == 2 && (0..k).any(|j| i != j && entry(i, j) * entry(j, i) == 2 && degs[j] == 2)
            });
            if mid_double {
                return BigUint::from(1152u32);
            }
        }
        // B_k or C_k: same Weyl order
        return factorial(k as u64) * BigUint::from(2u32).pow(k as u32);
    }
    if branch == 0 {
        return factorial(k as u64 + 1); // A_k
    }
    // simply laced with one branch node: D or E
    let arms = arm_lengths(&|i, j| entry(i, j) != 0, k);
    match arms.as_slice() {
        [1, 1, _] => factorial(k as u64) * BigUint::from(2u32).pow(k as u32 - 1), // D_k
        [1, 2, 2] => BigUint::from(51_840u64),                                    // E6
        [1, 2, 3] => BigUint::from(2_903_040u64),                                 // E7
        [1, 2, 4] => BigUint::from(696_729_600u64),                               // E8
        _ => panic!("unrecognized subdiagram"),
    }
}

/// Sorted arm lengths of a simply-laced diagram with exactly one branch node.
fn arm_lengths(adj: &dyn Fn(usize, usize) -> bool, k: usize) -> Vec<usize> {
    let degs: Vec<usize> = (0..k)
        .map(|i| (0..k).filter(|&j| j != i && adj(i, j)).count())
        .collect();
    let b = degs.iter().position(|&d| d >= 3).unwrap();
    let mut arms = Vec::new();
    for s in 0..k {
        if s != b && adj(b, s) {
            let mut len = 1;
            let mut prev = b;
            let mut cur = s;
            loop {
                let next = (0..k).find(|&j| j != prev && j != cur && adj(cur, j));
                match next {
                    Some(j) => {
                        len += 1;
                        prev = cur;
                        cur = j;
                    }
                    None => break,
                }
            }
            arms.push(len);
        }
    }
    arms.sort_unstable();
    arms
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(series: SimpleSeries, rank: usize) -> Arc<RootSystem> {
        RootSystem::build(series, rank).unwrap()
    }

    #[test]
    fn standard_tables_small() {
        let d12 = rs(SimpleSeries::D, 12);
        assert_eq!(d12.dual_coxeter, 22);
        assert_eq!(d12.dim_g, 276);
        assert_eq!(d12.center, CenterGroup::Klein);

        let a1 = rs(SimpleSeries::A, 1);
        assert_eq!(a1.dual_coxeter, 2);
        assert_eq!(a1.dim_g, 3);
        assert_eq!(a1.center, CenterGroup::Cyclic(2));

        let e8 = rs(SimpleSeries::E8, 8);
        assert_eq!(e8.dual_coxeter, 30);
        assert_eq!(e8.dim_g, 248);
        assert_eq!(e8.center, CenterGroup::Trivial);

        let e7 = rs(SimpleSeries::E7, 7);
        assert_eq!(e7.dual_coxeter, 18);
        assert_eq!(e7.dim_g, 133);
        let f4 = rs(SimpleSeries::F4, 4);
        assert_eq!(f4.dual_coxeter, 9);
        assert_eq!(f4.dim_g, 52);
        let g2 = rs(SimpleSeries::G2, 2);
        assert_eq!(g2.dual_coxeter, 4);
        assert_eq!(g2.dim_g, 14);
    }

    #[test]
    fn theta_normalization() {
        for (series, rank) in [
            (SimpleSeries::A, 5),
            (SimpleSeries::B, 6),
            (SimpleSeries::C, 3),
            (SimpleSeries::D, 7),
            (SimpleSeries::E6, 6),
            (SimpleSeries::E7, 7),
            (SimpleSeries::E8, 8),
            (SimpleSeries::F4, 4),
            (SimpleSeries::G2, 2),
        ] {
            let r = rs(series, rank);
            let tt = r.inner_labels(&r.theta_labels, &r.theta_labels);
            assert_eq!(tt, Q::from_integer(2), "(theta,theta) != 2 for {series}{rank}");
        }
    }

    #[test]
    fn rho_theta_and_root_count_match_tables_up_to_rank_24() {
        let mut cases: Vec<(SimpleSeries, usize)> = Vec::new();
        for n in 1..=24 {
            cases.push((SimpleSeries::A, n));
        }
        for n in 2..=24 {
            cases.push((SimpleSeries::B, n));
            cases.push((SimpleSeries::C, n));
        }
        for n in 3..=24 {
            cases.push((SimpleSeries::D, n));
        }
        cases.extend([
            (SimpleSeries::E6, 6),
            (SimpleSeries::E7, 7),
            (SimpleSeries::E8, 8),
            (SimpleSeries::F4, 4),
            (SimpleSeries::G2, 2),
        ]);
        for (series, n) in cases {
            let r = rs(series, n);
            // closed-form h^vee per series
            let expected_hv = match series {
                SimpleSeries::A => n as u64 + 1,
                SimpleSeries::B => 2 * n as u64 - 1,
                SimpleSeries::C => n as u64 + 1,
                SimpleSeries::D => 2 * n as u64 - 2,
                SimpleSeries::E6 => 12,
                SimpleSeries::E7 => 18,
                SimpleSeries::E8 => 30,
                SimpleSeries::F4 => 9,
                SimpleSeries::G2 => 4,
            };
            assert_eq!(r.dual_coxeter, expected_hv, "{series}{n}");
            let expected_dim = match series {
                SimpleSeries::A => n as u64 * (n as u64 + 2),
                SimpleSeries::B | SimpleSeries::C => n as u64 * (2 * n as u64 + 1),
                SimpleSeries::D => n as u64 * (2 * n as u64 - 1),
                SimpleSeries::E6 => 78,
                SimpleSeries::E7 => 133,
                SimpleSeries::E8 => 248,
                SimpleSeries::F4 => 52,
                SimpleSeries::G2 => 14,
            };
            assert_eq!(r.dim_g, expected_dim, "{series}{n}");
            assert_eq!(r.dim_g, r.rank as u64 + 2 * r.pos_roots.len() as u64);
            // (rho, theta) = h^vee - 1 is how dual_coxeter is derived; cross-check
            // against the table value above.
            let rho = vec![1i64; n];
            let rt = r.inner_weight_root(&rho, &r.theta_coords);
            assert_eq!(rt, Q::from_integer(expected_hv as i64 - 1));
        }
    }

    #[test]
    fn a11_inner_product_example() {
        let a11 = rs(SimpleSeries::A, 11);
        let mut w6 = vec![0i64; 11];
        w6[5] = 1;
        let mut w6_2rho = vec![2i64; 11];
        w6_2rho[5] += 1;
        assert_eq!(a11.inner_labels(&w6, &w6_2rho), Q::from_integer(39));
        let zero = vec![0i64; 11];
        assert_eq!(a11.inner_labels(&zero, &w6), Q::zero());
    }

    #[test]
    fn current_weights_and_levels() {
        let a11 = rs(SimpleSeries::A, 11);
        let w = a11.current_weight(&CenterCharge::Cyclic(6), 1).unwrap();
        assert_eq!(w.labels[5], 1);
        assert_eq!(w.level(), Q::one());

        let d12 = rs(SimpleSeries::D, 12);
        let w = d12.current_weight(&CenterCharge::Klein(1, 0), 1).unwrap();
        assert_eq!(w.labels[11], 1);
        assert_eq!(w.level(), Q::one());

        let c3 = rs(SimpleSeries::C, 3);
        let w = c3.current_weight(&CenterCharge::Cyclic(1), 2).unwrap();
        assert_eq!(w.labels, vec![0, 0, 2]);
        assert_eq!(w.level(), Q::from_integer(2));

        // cominuscule nodes pair to one with the highest coroot at any level
        for (series, rank) in [(SimpleSeries::E7, 7), (SimpleSeries::B, 5), (SimpleSeries::E6, 6)] {
            let r = rs(series, rank);
            for a in r.center_elements().into_iter().skip(1) {
                for k in 1..=4 {
                    let w = r.current_weight(&a, k).unwrap();
                    assert_eq!(w.level(), Q::from_integer(k as i64));
                    assert!(w.is_dominant());
                }
            }
        }
    }

    #[test]
    fn charge_of_weight_roundtrip() {
        for (series, rank) in [
            (SimpleSeries::A, 5),
            (SimpleSeries::D, 6),
            (SimpleSeries::D, 5),
            (SimpleSeries::E6, 6),
            (SimpleSeries::E7, 7),
        ] {
            let r = rs(series, rank);
            for a in r.center_elements() {
                if a.is_trivial() {
                    continue;
                }
                let w = r.current_weight(&a, 3).unwrap();
                // charge(k omega) = k * charge(omega)
                let mut acc = a;
                for _ in 1..3 {
                    acc = acc.add(&a, r.center);
                }
                assert_eq!(r.charge_of_weight(&w.labels), acc, "{series}{rank} {a:?}");
            }
            // the adjoint weight is in the root lattice
            assert!(r.charge_of_weight(&r.theta_labels).is_trivial());
        }
    }

    #[test]
    fn orbit_sizes() {
        let d12 = rs(SimpleSeries::D, 12);
        let mut spinor = vec![0i64; 12];
        spinor[11] = 1;
        assert_eq!(d12.orbit_size(&spinor), BigUint::from(2048u32));
        // roots of E8 form one orbit of size 240
        let e8 = rs(SimpleSeries::E8, 8);
        assert_eq!(e8.orbit_size(&e8.theta_labels.clone()), BigUint::from(240u32));
        // generic weight: full Weyl group
        let a3 = rs(SimpleSeries::A, 3);
        assert_eq!(a3.orbit_size(&[1, 1, 1]), BigUint::from(24u32));
    }

    #[test]
    fn canonicalize_small_ranks() {
        // "Spin(3)_3" = SU(2)_6
        let c = canonicalize(
            FactorName::new(SimpleSeries::B, 1, 3),
            CenterCharge::Cyclic(1),
        );
        assert_eq!(c.parts, vec![(
            FactorName::new(SimpleSeries::A, 1, 6),
            CenterCharge::Cyclic(1)
        )]);

        // Spin(5)_3 = Sp(2x2)_3
        let c = canonicalize(
            FactorName::new(SimpleSeries::B, 2, 3),
            CenterCharge::Cyclic(1),
        );
        assert_eq!(c.parts[0].0, FactorName::new(SimpleSeries::C, 2, 3));

        // SU(4)_3 is already canonical
        let c = canonicalize(
            FactorName::new(SimpleSeries::A, 3, 3),
            CenterCharge::Cyclic(2),
        );
        assert_eq!(c.parts[0].0, FactorName::new(SimpleSeries::A, 3, 3));
        assert!(!c.d4_triality);

        // Spin(4)_3 = Sp(2x1)_3^2 with the vector charge splitting diagonally
        let c = canonicalize(
            FactorName::new(SimpleSeries::D, 2, 3),
            CenterCharge::Klein(1, 1),
        );
        assert_eq!(c.parts.len(), 2);
        assert!(c.parts.iter().all(|(n, ch)| {
            *n == FactorName::new(SimpleSeries::A, 1, 3) && *ch == CenterCharge::Cyclic(1)
        }));

        // idempotence on canonical forms
        for (name, ch) in [
            (FactorName::new(SimpleSeries::A, 1, 6), CenterCharge::Cyclic(1)),
            (FactorName::new(SimpleSeries::C, 2, 3), CenterCharge::Cyclic(1)),
            (FactorName::new(SimpleSeries::A, 3, 3), CenterCharge::Cyclic(2)),
        ] {
            let once = canonicalize(name, ch);
            let twice = canonicalize(once.parts[0].0, once.parts[0].1);
            assert_eq!(once.parts, twice.parts);
        }

        let c = canonicalize(
            FactorName::new(SimpleSeries::D, 4, 3),
            CenterCharge::Klein(1, 0),
        );
        assert!(c.d4_triality);
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(RootSystem::build(SimpleSeries::B, 1).is_err());
        assert!(RootSystem::build(SimpleSeries::C, 1).is_err());
        assert!(RootSystem::build(SimpleSeries::D, 2).is_err());
        assert!(RootSystem::build(SimpleSeries::E6, 7).is_err());
        assert!(RootSystem::build(SimpleSeries::A, 0).is_err());
        assert!(RootSystem::build(SimpleSeries::D, 3).is_ok());
    }
}
