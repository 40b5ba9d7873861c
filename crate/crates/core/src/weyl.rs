//! Finite-dimensional representation calculus.
//!
//! Multiplicities are computed by Freudenthal recursion on the dominant
//! chamber and memoized; full weight systems are reconstructed by Weyl-orbit
//! expansion on demand. Tensor products use the Klimyk reflection rule and
//! restrictions are done by projecting the formal character and extracting
//! highest weights until nothing is left.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::lie::{Q, RootSystem, SimpleSeries};
use crate::{Error, Result};

/// Default cap on module dimensions for character-level work.
pub const DEFAULT_DIM_CAP: u128 = 5000;

/// Weyl dimension of the irreducible with highest weight `labels`.
pub fn weyl_dim(rs: &RootSystem, labels: &[i64]) -> Result<u128> {
    if labels.iter().any(|&c| c < 0) {
        return Err(Error::NonDominant(labels.to_vec()));
    }
    let rho = vec![1i64; rs.rank];
    let lam_rho: Vec<i64> = labels.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for coords in &rs.pos_roots {
        let a = rs.inner_weight_root(&lam_rho, coords);
        let b = rs.inner_weight_root(&rho, coords);
        num *= BigInt::from(*a.numer()) * BigInt::from(*b.denom());
        den *= BigInt::from(*a.denom()) * BigInt::from(*b.numer());
    }
    let r = BigRational::new(num, den);
    debug_assert!(r.is_integer());
    Ok(r.to_integer().to_u128().expect("dimension overflow"))
}

/// Dimension of a product-module given per-factor highest weights.
pub fn weyl_dim_product(spaces: &[Arc<RootSystem>], labels: &[i64]) -> Result<u128> {
    let mut dim: u128 = 1;
    let mut off = 0;
    for rs in spaces {
        dim = dim
            .checked_mul(weyl_dim(rs, &labels[off..off + rs.rank])?)
            .expect("dimension overflow");
        off += rs.rank;
    }
    Ok(dim)
}

type DomChar = Arc<HashMap<Vec<i64>, u64>>;

fn freudenthal_cache() -> &'static Mutex<HashMap<(SimpleSeries, usize, Vec<i64>), DomChar>> {
    static CACHE: OnceLock<Mutex<HashMap<(SimpleSeries, usize, Vec<i64>), DomChar>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Multiplicities of the dominant weights of the irreducible L(labels).
///
/// Freudenthal recursion, processed by increasing height drop from the
/// highest weight so every lookup is already resolved.
pub fn dominant_multiplicities(rs: &Arc<RootSystem>, labels: &[i64]) -> Result<DomChar> {
    if labels.iter().any(|&c| c < 0) {
        return Err(Error::NonDominant(labels.to_vec()));
    }
    let key = (rs.series, rs.rank, labels.to_vec());
    if let Some(hit) = freudenthal_cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(hit));
    }

    let n = rs.rank;
    let rho = vec![1i64; n];
    let lam_rho: Vec<i64> = labels.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let top_norm = rs.inner_labels(&lam_rho, &lam_rho);

    let candidates = dominant_weights_below(rs, labels);
    let mut order: Vec<(i64, Vec<i64>)> = candidates.into_iter().map(|(m, h)| (h, m)).collect();
    order.sort();

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for (height, mu) in order {
        if height == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let mu_rho: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let denom = top_norm - rs.inner_labels(&mu_rho, &mu_rho);
        debug_assert!(denom > Q::zero());
        let mut acc = Q::zero();
        for coords in &rs.pos_roots {
            let alpha_labels = labels_of_root(rs, coords);
            let mut shifted = mu.clone();
            loop {
                for (s, a) in shifted.iter_mut().zip(&alpha_labels) {
                    *s += a;
                }
                let rep = rs.dominant_rep(&shifted);
                let m = match mult.get(&rep) {
                    Some(&m) if m > 0 => m,
                    _ => break,
                };
                let pairing = rs.inner_weight_root(&shifted, coords);
                acc += Q::from_integer(m as i64) * pairing;
            }
        }
        let m = Q::from_integer(2) * acc / denom;
        debug_assert!(m.is_integer() && !m.is_negative());
        let m = m.to_integer() as u64;
        if m > 0 {
            mult.insert(mu, m);
        }
    }

    let arc = Arc::new(mult);
    freudenthal_cache().lock().unwrap().insert(key, Arc::clone(&arc));
    Ok(arc)
}

fn labels_of_root(rs: &RootSystem, coords: &[i64]) -> Vec<i64> {
    let n = rs.rank;
    (0..n)
        .map(|j| (0..n).map(|k| coords[k] * rs.cartan[k * n + j]).sum())
        .collect()
}

/// Dominant weights mu with lambda - mu a non-negative integer combination of
/// simple roots, paired with the combination's height.
fn dominant_weights_below(rs: &Arc<RootSystem>, labels: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let n = rs.rank;
    let rho = vec![1i64; n];
    let lam_rho: Vec<i64> = labels.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let bound = rs.inner_labels(&lam_rho, &lam_rho);
    let rho_cap = rs.inner_labels(labels, &rho);

    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    dfs_dominant(rs, 0, &mut cur, &bound, &rho_cap, &mut |mu| {
        if let Some(h) = drop_height(rs, labels, mu) {
            out.push((mu.to_vec(), h));
        }
    });
    out
}

// DFS over dominant label vectors; the Gram matrix has positive entries, so
// the rho-shifted norm and the rho pairing grow with every coordinate and
// prefixes prune on both.
fn dfs_dominant(
    rs: &RootSystem,
    i: usize,
    cur: &mut Vec<i64>,
    bound: &Q,
    rho_cap: &Q,
    emit: &mut dyn FnMut(&[i64]),
) {
    let n = rs.rank;
    if i == n {
        emit(cur);
        return;
    }
    let rho = vec![1i64; n];
    let mut c = 0;
    loop {
        cur[i] = c;
        let shifted: Vec<i64> = cur.iter().map(|x| x + 1).collect();
        if rs.inner_labels(&shifted, &shifted) > *bound || rs.inner_labels(cur, &rho) > *rho_cap {
            cur[i] = 0;
            return;
        }
        dfs_dominant(rs, i + 1, cur, bound, rho_cap, emit);
        c += 1;
    }
}

/// Height of lambda - mu in the simple-root basis, if that difference is a
/// non-negative integer combination of simple roots.
fn drop_height(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Option<i64> {
    let n = rs.rank;
    let mut height = 0i64;
    for k in 0..n {
        let mut x = Q::zero();
        for j in 0..n {
            let d = lambda[j] - mu[j];
            if d != 0 {
                x += Q::from_integer(d) * rs.fundamental_root_coord(j, k);
            }
        }
        if !x.is_integer() || x.is_negative() {
            return None;
        }
        height += x.to_integer();
    }
    Some(height)
}

/// A formal character over a product of root systems: finitely many weights
/// (concatenated Dynkin labels) with integer multiplicities.
#[derive(Debug, Clone)]
pub struct FormalCharacter {
    pub spaces: Vec<Arc<RootSystem>>,
    pub mults: HashMap<Vec<i64>, i64>,
}

impl FormalCharacter {
    pub fn new(spaces: Vec<Arc<RootSystem>>) -> Self {
        Self { spaces, mults: HashMap::new() }
    }

    pub fn total_rank(&self) -> usize {
        self.spaces.iter().map(|rs| rs.rank).sum()
    }

    pub fn dim(&self) -> i64 {
        self.mults.values().sum()
    }

    /// Full weight system of a single irreducible, by orbit expansion.
    pub fn of_irrep(rs: &Arc<RootSystem>, labels: &[i64]) -> Result<Self> {
        let dom = dominant_multiplicities(rs, labels)?;
        let mut chi = Self::new(vec![Arc::clone(rs)]);
        for (mu, &m) in dom.iter() {
            for w in weyl_orbit(rs, mu) {
                chi.mults.insert(w, m as i64);
            }
        }
        Ok(chi)
    }

    /// Full weight system of an outer product of irreducibles.
    pub fn of_product_irrep(spaces: &[Arc<RootSystem>], labels: &[i64]) -> Result<Self> {
        let mut parts: Vec<Self> = Vec::new();
        let mut off = 0;
        for rs in spaces {
            parts.push(Self::of_irrep(rs, &labels[off..off + rs.rank])?);
            off += rs.rank;
        }
        let mut chi = Self::new(spaces.to_vec());
        let mut acc: Vec<(Vec<i64>, i64)> = vec![(Vec::new(), 1)];
        for part in &parts {
            let mut next = Vec::with_capacity(acc.len() * part.mults.len());
            for (prefix, m) in &acc {
                for (w, pm) in &part.mults {
                    let mut lab = prefix.clone();
                    lab.extend_from_slice(w);
                    next.push((lab, m * pm));
                }
            }
            acc = next;
        }
        for (lab, m) in acc {
            chi.mults.insert(lab, m);
        }
        Ok(chi)
    }

    fn rho_pairing(&self, labels: &[i64]) -> Q {
        let mut acc = Q::zero();
        let mut off = 0;
        for rs in &self.spaces {
            let rho = vec![1i64; rs.rank];
            acc += rs.inner_labels(&labels[off..off + rs.rank], &rho);
            off += rs.rank;
        }
        acc
    }

    /// Decompose into irreducibles by iterated highest-weight extraction.
    pub fn decompose(mut self) -> Result<Vec<(Vec<i64>, u64)>> {
        let mut out: Vec<(Vec<i64>, u64)> = Vec::new();
        loop {
            self.mults.retain(|_, m| *m != 0);
            if self.mults.is_empty() {
                break;
            }
            // a maximal weight under the rho pairing is dominant in a genuine
            // character; anything else flags a wrong projection
            let (top, &top_mult) = self
                .mults
                .iter()
                .max_by(|(a, _), (b, _)| {
                    self.rho_pairing(a)
                        .cmp(&self.rho_pairing(b))
                        .then_with(|| a.cmp(b))
                })
                .unwrap();
            let top = top.clone();
            if top.iter().any(|&c| c < 0) || top_mult < 0 {
                return Err(Error::BadResidue);
            }
            let irrep = Self::of_product_irrep(&self.spaces, &top)?;
            for (w, m) in &irrep.mults {
                *self.mults.entry(w.clone()).or_insert(0) -= top_mult * m;
            }
            if self.mults.values().any(|&m| m < 0) {
                return Err(Error::BadResidue);
            }
            out.push((top, top_mult as u64));
        }
        out.sort();
        Ok(out)
    }
}

/// Weyl orbit of a dominant weight, as label vectors.
pub fn weyl_orbit(rs: &RootSystem, dominant: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut stack = vec![dominant.to_vec()];
    seen.insert(dominant.to_vec(), ());
    let mut out = Vec::new();
    while let Some(w) = stack.pop() {
        for i in 0..rs.rank {
            if w[i] > 0 {
                let mut r = w.clone();
                rs.reflect(&mut r, i);
                if !seen.contains_key(&r) {
                    seen.insert(r.clone(), ());
                    stack.push(r);
                }
            }
        }
        out.push(w);
    }
    out
}

/// Weight multiplicities of L(labels) as a formal character, with a cap on
/// the dimension (the cap guards the full orbit expansion).
pub fn weight_multiplicities(
    rs: &Arc<RootSystem>,
    labels: &[i64],
    cap: u128,
) -> Result<FormalCharacter> {
    let dim = weyl_dim(rs, labels)?;
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    FormalCharacter::of_irrep(rs, labels)
}

/// Tensor product decomposition by the Klimyk reflection rule.
pub fn tensor_decompose(
    rs: &Arc<RootSystem>,
    lambda: &[i64],
    mu: &[i64],
    cap: u128,
) -> Result<Vec<(Vec<i64>, u64)>> {
    let dl = weyl_dim(rs, lambda)?;
    let dm = weyl_dim(rs, mu)?;
    if dl.checked_mul(dm).is_none_or(|d| d > cap.saturating_mul(cap)) {
        return Err(Error::CapExceeded {
            dim: dl.saturating_mul(dm),
            cap: cap.saturating_mul(cap),
        });
    }
    let (small, big) = if dl <= dm { (lambda, mu) } else { (mu, lambda) };
    let chi = FormalCharacter::of_irrep(rs, small)?;
    let n = rs.rank;
    let mut acc: HashMap<Vec<i64>, i64> = HashMap::new();
    for (nu, &m) in &chi.mults {
        // xi = nu + big + rho, reflected to the dominant chamber with sign
        let mut xi: Vec<i64> = (0..n).map(|j| nu[j] + big[j] + 1).collect();
        let mut sign = 1i64;
        let ok = loop {
            if let Some(i) = xi.iter().position(|&c| c < 0) {
                rs.reflect(&mut xi, i);
                sign = -sign;
            } else if xi.contains(&0) {
                break false;
            } else {
                break true;
            }
        };
        if ok {
            let w: Vec<i64> = xi.iter().map(|c| c - 1).collect();
            *acc.entry(w).or_insert(0) += sign * m;
        }
    }
    let mut out: Vec<(Vec<i64>, u64)> = acc
        .into_iter()
        .filter(|(_, m)| *m != 0)
        .map(|(w, m)| {
            debug_assert!(m > 0);
            (w, m as u64)
        })
        .collect();
    out.sort();
    Ok(out)
}

// ---------------------------------------------------------------------------
// embeddings

/// One WZW factor in an embedding data record.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorSpec {
    pub series: String,
    pub rank: usize,
    pub level: u32,
    /// Highest weight of the factor's distinguished anyon module.
    pub current: Vec<i64>,
}

impl FactorSpec {
    pub fn root_system(&self) -> Result<Arc<RootSystem>> {
        let series = SimpleSeries::parse(&self.series)
            .ok_or_else(|| Error::Data(format!("unknown series `{}`", self.series)))?;
        RootSystem::build(series, self.rank)
    }
}

/// A declared embedding of one product of simple algebras into another.
///
/// `projection` maps target Dynkin labels to source Dynkin labels (row-major,
/// rows = total source rank). `expected_index` is the Dynkin index matrix,
/// indexed `[source factor][target factor]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingSpec {
    pub name: String,
    pub source: Vec<FactorSpec>,
    pub target: Vec<FactorSpec>,
    pub projection: Vec<i64>,
    pub expected_index: Vec<Vec<u32>>,
    /// Set when a triality twist is folded into the projection matrix.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Whether the restricted target current must contain the source current.
    pub expect_contains: bool,
    /// Frozen decomposition of the restricted target current, if pinned.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<Vec<(Vec<i64>, u64)>>,
}

impl EmbeddingSpec {
    pub fn source_spaces(&self) -> Result<Vec<Arc<RootSystem>>> {
        self.source.iter().map(|f| f.root_system()).collect()
    }

    pub fn target_spaces(&self) -> Result<Vec<Arc<RootSystem>>> {
        self.target.iter().map(|f| f.root_system()).collect()
    }

    pub fn source_rank(&self) -> usize {
        self.source.iter().map(|f| f.rank).sum()
    }

    pub fn target_rank(&self) -> usize {
        self.target.iter().map(|f| f.rank).sum()
    }

    pub fn source_current(&self) -> Vec<i64> {
        self.source.iter().flat_map(|f| f.current.clone()).collect()
    }

    pub fn target_current(&self) -> Vec<i64> {
        self.target.iter().flat_map(|f| f.current.clone()).collect()
    }

    pub fn validate_shape(&self) -> Result<()> {
        if self.projection.len() != self.source_rank() * self.target_rank() {
            return Err(Error::BadEmbedding {
                name: self.name.clone(),
                reason: format!(
                    "projection is {} entries, want {} x {}",
                    self.projection.len(),
                    self.source_rank(),
                    self.target_rank()
                ),
            });
        }
        Ok(())
    }

    /// Apply the projection to a target weight (concatenated labels).
    pub fn project(&self, target_labels: &[i64]) -> Vec<i64> {
        let rows = self.source_rank();
        let cols = self.target_rank();
        (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| self.projection[r * cols + c] * target_labels[c])
                    .sum()
            })
            .collect()
    }

    /// Identity embedding of a single factor, mostly for tests.
    pub fn identity(rs: &Arc<RootSystem>, level: u32, current: Vec<i64>) -> Self {
        let n = rs.rank;
        let mut projection = vec![0i64; n * n];
        for i in 0..n {
            projection[i * n + i] = 1;
        }
        let f = FactorSpec {
            series: rs.series.to_string(),
            rank: n,
            level,
            current,
        };
        Self {
            name: format!("identity_{}{}", rs.series, rs.rank),
            source: vec![f.clone()],
            target: vec![f],
            projection,
            expected_index: vec![vec![1]],
            note: None,
            expect_contains: true,
            fixture: None,
        }
    }

    /// Compose with an inner embedding whose target is this spec's source,
    /// giving the projection of `inner.source inside self.target`.
    pub fn compose(&self, inner: &EmbeddingSpec) -> Result<EmbeddingSpec> {
        let mid = self.source_rank();
        if inner.target_rank() != mid {
            return Err(Error::BadEmbedding {
                name: format!("{}*{}", inner.name, self.name),
                reason: "rank mismatch in composition".into(),
            });
        }
        let rows = inner.source_rank();
        let cols = self.target_rank();
        let mut projection = vec![0i64; rows * cols];
        for r in 0..rows {
            for c in 0..cols {
                let mut acc = 0i64;
                for k in 0..mid {
                    acc += inner.projection[r * mid + k] * self.projection[k * cols + c];
                }
                projection[r * cols + c] = acc;
            }
        }
        // index matrix composes as a product
        let mut index = vec![vec![0u32; self.target.len()]; inner.source.len()];
        for i in 0..inner.source.len() {
            for f in 0..self.target.len() {
                let mut acc = 0u32;
                for k in 0..self.source.len() {
                    acc += inner.expected_index[i][k] * self.expected_index[k][f];
                }
                index[i][f] = acc;
            }
        }
        Ok(EmbeddingSpec {
            name: format!("{}*{}", inner.name, self.name),
            source: inner.source.clone(),
            target: self.target.clone(),
            projection,
            expected_index: index,
            note: None,
            expect_contains: true,
            fixture: None,
        })
    }
}

/// Restrict the irreducible target module `labels` (concatenated per-factor
/// highest weights) along the embedding and decompose over the source.
pub fn restrict(
    spec: &EmbeddingSpec,
    target_labels: &[i64],
    cap: u128,
) -> Result<Vec<(Vec<i64>, u64)>> {
    spec.validate_shape()?;
    let tspaces = spec.target_spaces()?;
    let dim = weyl_dim_product(&tspaces, target_labels)?;
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    let chi = FormalCharacter::of_product_irrep(&tspaces, target_labels)?;
    let sspaces = spec.source_spaces()?;
    let mut projected = FormalCharacter::new(sspaces.clone());
    for (w, m) in &chi.mults {
        let p = spec.project(w);
        *projected.mults.entry(p).or_insert(0) += m;
    }
    let parts = projected.decompose()?;
    let mut total: u128 = 0;
    for (w, m) in &parts {
        total += weyl_dim_product(&sspaces, w)? * *m as u128;
    }
    if total != dim {
        return Err(Error::BadEmbedding {
            name: spec.name.clone(),
            reason: format!("restriction changed dimension: {total} vs {dim}"),
        });
    }
    Ok(parts)
}

/// Rep index from the weight-sum rule: the sum of (w,w) over the full weight
/// system equals 2 * rank * index.
fn weight_sum_index(rs: &Arc<RootSystem>, chi: &HashMap<Vec<i64>, i64>, offset: usize) -> Q {
    let mut acc = Q::zero();
    for (w, &m) in chi {
        let part = &w[offset..offset + rs.rank];
        acc += Q::from_integer(m) * rs.inner_labels(part, part);
    }
    acc / Q::from_integer(2 * rs.rank as i64)
}

/// Dynkin index of an irrep from its highest weight:
/// dim * (lambda, lambda + 2 rho) / (2 dim g).
pub fn irrep_index(rs: &RootSystem, labels: &[i64]) -> Result<Q> {
    let dim = weyl_dim(rs, labels)? as i64;
    let rho2: Vec<i64> = labels.iter().map(|c| c + 2).collect();
    let ip = rs.inner_labels(labels, &rho2);
    Ok(Q::from_integer(dim) * ip / Q::from_integer(2 * rs.dim_g as i64))
}

/// Dynkin index matrix of the embedding, `[source factor][target factor]`,
/// computed from the weight-sum index of one probe rep per target factor.
/// `probe` overrides the default probe (the first fundamental weight).
pub fn dynkin_index(spec: &EmbeddingSpec, probe: Option<&[Vec<i64>]>) -> Result<Vec<Vec<u32>>> {
    spec.validate_shape()?;
    let tspaces = spec.target_spaces()?;
    let sspaces = spec.source_spaces()?;
    let mut matrix = vec![vec![0u32; tspaces.len()]; sspaces.len()];
    for (f, trs) in tspaces.iter().enumerate() {
        let probe_labels: Vec<i64> = match probe {
            Some(p) => p[f].clone(),
            None => {
                let mut l = vec![0i64; trs.rank];
                l[0] = 1;
                l
            }
        };
        let mut full = Vec::new();
        for (g, t) in tspaces.iter().enumerate() {
            if g == f {
                full.extend_from_slice(&probe_labels);
            } else {
                full.extend(std::iter::repeat(0i64).take(t.rank));
            }
        }
        let chi = FormalCharacter::of_product_irrep(&tspaces, &full)?;
        let target_index = {
            let off: usize = tspaces[..f].iter().map(|t| t.rank).sum();
            weight_sum_index(trs, &chi.mults, off)
        };
        let mut projected: HashMap<Vec<i64>, i64> = HashMap::new();
        for (w, m) in &chi.mults {
            *projected.entry(spec.project(w)).or_insert(0) += m;
        }
        let mut off = 0;
        for (i, srs) in sspaces.iter().enumerate() {
            let source_index = weight_sum_index(srs, &projected, off);
            let ratio = source_index / target_index;
            if !ratio.is_integer() || ratio.is_negative() {
                return Err(Error::BadEmbedding {
                    name: spec.name.clone(),
                    reason: format!("non-integral Dynkin index {ratio} at [{i}][{f}]"),
                });
            }
            matrix[i][f] = ratio.to_integer() as u32;
            off += srs.rank;
        }
    }
    Ok(matrix)
}

/// Check the declared index matrix and the level bookkeeping of an embedding.
pub fn validate_embedding(spec: &EmbeddingSpec) -> Result<()> {
    let computed = dynkin_index(spec, None)?;
    if computed != spec.expected_index {
        return Err(Error::BadEmbedding {
            name: spec.name.clone(),
            reason: format!(
                "Dynkin index mismatch: computed {computed:?}, declared {:?}",
                spec.expected_index
            ),
        });
    }
    for (i, src) in spec.source.iter().enumerate() {
        let pulled: u32 = spec
            .target
            .iter()
            .enumerate()
            .map(|(f, t)| computed[i][f] * t.level)
            .sum();
        if pulled != src.level {
            return Err(Error::BadEmbedding {
                name: spec.name.clone(),
                reason: format!(
                    "level mismatch on source factor {i}: pulled back {pulled}, declared {}",
                    src.level
                ),
            });
        }
    }
    Ok(())
}

/// Load an embeddings data file (JSON).
pub fn load_embeddings(path: &std::path::Path) -> Result<Vec<EmbeddingSpec>> {
    #[derive(Deserialize)]
    struct File {
        version: u32,
        edges: Vec<EmbeddingSpec>,
    }
    let text = std::fs::read_to_string(path)?;
    let file: File = serde_json::from_str(&text)?;
    if file.version != 1 {
        return Err(Error::Data(format!(
            "unsupported embeddings version {}",
            file.version
        )));
    }
    Ok(file.edges)
}

pub fn orbit_size_biguint(rs: &RootSystem, dominant: &[i64]) -> BigUint {
    rs.orbit_size(dominant)
}
