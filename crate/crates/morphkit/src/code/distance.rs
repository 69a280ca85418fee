//! Minimum-distance search for CSS codes: exhaustive by weight, CSS-split
//! exhaustive, and a randomized information-set upper bound.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{PauliType, StabilizerCode};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::pauli::PauliString;

/// Search strategy for [`distance`].
#[derive(Clone, Copy, Debug)]
pub enum DistanceMode {
    /// All Pauli errors (X, Y, Z mixtures) up to the given weight.
    Exhaustive { w_max: usize },
    /// Pure-X and pure-Z errors searched separately up to the given weight.
    CssExhaustive { w_max: usize },
    /// Randomized information-set upper bound; reproducible per seed.
    RandomInformationSet { iters: u64, seed: u64 },
}

/// Explicit distance value; no sentinel integers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DistanceValue {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Debug)]
pub struct DistanceReport {
    /// No logical of weight <= this value exists within the searched class.
    pub lower_certified: usize,
    /// Lightest logical found, if any.
    pub upper_witness: Option<(usize, PauliString)>,
}

impl DistanceReport {
    /// The distance when the search pinned it exactly.
    pub fn certified_exact(&self) -> Option<usize> {
        match &self.upper_witness {
            Some((w, _)) if *w == self.lower_certified + 1 => Some(*w),
            _ => None,
        }
    }

    pub fn value(&self) -> DistanceValue {
        match &self.upper_witness {
            Some((w, _)) => DistanceValue::Finite(*w),
            None => DistanceValue::Infinite,
        }
    }
}

fn combinations(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

pub const DEFAULT_BUDGET_CAP: u128 = 4_000_000_000;

/// Minimum-distance search over a code.
pub fn distance(code: &StabilizerCode, mode: DistanceMode) -> Result<DistanceReport> {
    distance_with_budget(code, mode, DEFAULT_BUDGET_CAP)
}

pub fn distance_with_budget(
    code: &StabilizerCode,
    mode: DistanceMode,
    cap: u128,
) -> Result<DistanceReport> {
    match mode {
        DistanceMode::CssExhaustive { w_max } => {
            let required = 2 * combinations(code.n, w_max);
            if required > cap {
                return Err(Error::BudgetExceeded { required, cap });
            }
            let x = css_type_search(code, PauliType::X, w_max);
            let z = css_type_search(code, PauliType::Z, w_max);
            Ok(merge_reports(x, z, w_max))
        }
        DistanceMode::Exhaustive { w_max } => {
            let required = combinations(code.n, w_max).saturating_mul(3u128.pow(w_max as u32));
            if required > cap {
                return Err(Error::BudgetExceeded { required, cap });
            }
            Ok(general_search(code, w_max))
        }
        DistanceMode::RandomInformationSet { iters, seed } => {
            Ok(information_set_search(code, iters, seed))
        }
    }
}

fn merge_reports(a: DistanceReport, b: DistanceReport, w_max: usize) -> DistanceReport {
    let lower = a.lower_certified.min(b.lower_certified);
    let upper = match (a.upper_witness, b.upper_witness) {
        (Some(x), Some(z)) => Some(if z.0 < x.0 { z } else { x }),
        (Some(x), None) => Some(x),
        (None, z) => z,
    };
    let lower = match &upper {
        Some((w, _)) => lower.min(w - 1),
        None => lower.min(w_max),
    };
    DistanceReport { lower_certified: lower, upper_witness: upper }
}

/// Pure-type exhaustive search: error patterns of type `t`, syndrome from the
/// opposite checks, logical iff syndrome is zero and the pattern is outside
/// the own-type stabiliser row space.
fn css_type_search(code: &StabilizerCode, t: PauliType, w_max: usize) -> DistanceReport {
    let syndrome_cols = syndrome_columns(code, t);
    let own = code.check_matrix(t).row_space_canonical();
    let n = code.n;

    for w in 1..=w_max {
        let hit = (0..n)
            .into_par_iter()
            .filter_map(|first| {
                let mut support = Vec::with_capacity(w);
                support.push(first);
                let mut syn = syndrome_cols[first].clone();
                search_level(&syndrome_cols, n, w, &mut support, &mut syn, &|v: &[usize]| {
                    let bits = BitVec::from_indices(n, v.iter().copied());
                    !own.row_space_contains(&bits)
                })
            })
            .min();
        if let Some(support) = hit {
            let p = match t {
                PauliType::X => PauliString::x_on(n, support.iter().copied()),
                PauliType::Z => PauliString::z_on(n, support.iter().copied()),
            };
            return DistanceReport { lower_certified: w - 1, upper_witness: Some((w, p)) };
        }
    }
    DistanceReport { lower_certified: w_max, upper_witness: None }
}

/// Columns of the opposite-type check matrix, one syndrome word-vector per qubit.
fn syndrome_columns(code: &StabilizerCode, t: PauliType) -> Vec<BitVec> {
    let opp = code.check_matrix(t.other());
    let m = opp.num_rows();
    (0..code.n)
        .map(|q| {
            BitVec::from_indices(
                m,
                opp.rows.iter().enumerate().filter_map(|(i, r)| r.get(q).then_some(i)),
            )
        })
        .collect()
}

/// Depth-first enumeration of supports extending `support` to weight `w`,
/// maintaining the partial syndrome; returns the first (lex-least) logical.
fn search_level(
    cols: &[BitVec],
    n: usize,
    w: usize,
    support: &mut Vec<usize>,
    syn: &mut BitVec,
    is_logical: &dyn Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if support.len() == w {
        if syn.is_zero() && is_logical(support) {
            return Some(support.clone());
        }
        return None;
    }
    let start = support.last().copied().map_or(0, |l| l + 1);
    for next in start..n {
        support.push(next);
        syn.xor_assign(&cols[next]);
        if let Some(hit) = search_level(cols, n, w, support, syn, is_logical) {
            return Some(hit);
        }
        syn.xor_assign(&cols[next]);
        support.pop();
    }
    None
}

/// Full Pauli-group exhaustive search (X/Y/Z per support qubit).
fn general_search(code: &StabilizerCode, w_max: usize) -> DistanceReport {
    let n = code.n;
    let hx = code.check_matrix(PauliType::X);
    let hz = code.check_matrix(PauliType::Z);
    // Stabiliser symplectic row space for membership tests.
    let group = stabilizer_rows(code);

    for w in 1..=w_max {
        let hit = (0..n)
            .into_par_iter()
            .filter_map(|first| {
                let mut support = Vec::with_capacity(w);
                support.push(first);
                general_level(code, &hx, &hz, &group, n, w, &mut support)
            })
            .min();
        if let Some(key) = hit {
            let p = pauli_from_key(n, &key);
            return DistanceReport { lower_certified: w - 1, upper_witness: Some((w, p)) };
        }
    }
    DistanceReport { lower_certified: w_max, upper_witness: None }
}

type PauliKey = Vec<(usize, u8)>; // (qubit, 1=X 2=Z 3=Y)

fn pauli_from_key(n: usize, key: &PauliKey) -> PauliString {
    let mut p = PauliString::identity(n);
    for &(q, t) in key {
        p.set_component(q, t & 1 == 1, t & 2 == 2);
    }
    p
}

fn stabilizer_rows(code: &StabilizerCode) -> BitMatrix {
    let n = code.n;
    let mut m = BitMatrix::new(2 * n);
    for c in code.x_checks.iter().chain(&code.z_checks) {
        let mut row = BitVec::zeros(2 * n);
        for i in c.x_bits().iter_ones() {
            row.set(i, true);
        }
        for i in c.z_bits().iter_ones() {
            row.set(n + i, true);
        }
        m.push_row(row);
    }
    m.row_space_canonical()
}

fn general_level(
    code: &StabilizerCode,
    hx: &BitMatrix,
    hz: &BitMatrix,
    group: &BitMatrix,
    n: usize,
    w: usize,
    support: &mut Vec<usize>,
) -> Option<PauliKey> {
    // Enumerate type assignments for this support, then recurse on supports.
    fn assign(
        code: &StabilizerCode,
        hx: &BitMatrix,
        hz: &BitMatrix,
        group: &BitMatrix,
        support: &[usize],
        key: &mut PauliKey,
        i: usize,
    ) -> Option<PauliKey> {
        if i == support.len() {
            let n = code.n;
            let p = pauli_from_key(n, key);
            // Commutes with all checks?
            let syn_z = hx.rows.iter().any(|r| r.dot(p.z_bits()));
            if syn_z {
                return None;
            }
            let syn_x = hz.rows.iter().any(|r| r.dot(p.x_bits()));
            if syn_x {
                return None;
            }
            let mut row = BitVec::zeros(2 * n);
            for b in p.x_bits().iter_ones() {
                row.set(b, true);
            }
            for b in p.z_bits().iter_ones() {
                row.set(n + b, true);
            }
            if group.row_space_contains(&row) {
                return None;
            }
            return Some(key.clone());
        }
        for t in 1..=3u8 {
            key.push((support[i], t));
            if let Some(hit) = assign(code, hx, hz, group, support, key, i + 1) {
                return Some(hit);
            }
            key.pop();
        }
        None
    }

    if support.len() == w {
        let mut key = PauliKey::new();
        return assign(code, hx, hz, group, support, &mut key, 0);
    }
    let start = support.last().copied().map_or(0, |l| l + 1);
    for next in start..n {
        support.push(next);
        if let Some(hit) = general_level(code, hx, hz, group, n, w, support) {
            return Some(hit);
        }
        support.pop();
    }
    None
}

/// Column permutations + Gaussian elimination, fixed seed: reproducible
/// low-weight logical representatives.
fn information_set_search(code: &StabilizerCode, iters: u64, seed: u64) -> DistanceReport {
    let mut best: Option<(usize, PauliString)> = None;
    for t in [PauliType::X, PauliType::Z] {
        let own = code.check_matrix(t).row_space_canonical();
        // Generators of the type-t codeword space: stabilisers + logical reps.
        let mut gen = own.clone();
        for v in code.type_logical_space(t) {
            gen.push_row(v);
        }
        let n = code.n;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (t as u64).wrapping_mul(0x9e37_79b9));
        for _ in 0..iters {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let mut m = BitMatrix::from_rows(
                n,
                gen.rows.iter().map(|r| permute_bits(r, &perm)).collect(),
            );
            let (rank, _) = m.row_reduce();
            m.rows.truncate(rank);
            let inv = invert_perm(&perm);
            for row in &m.rows {
                let v = permute_bits(row, &inv);
                let w = v.count_ones();
                if w == 0 {
                    continue;
                }
                if best.as_ref().is_some_and(|(bw, _)| *bw <= w) {
                    continue;
                }
                if !own.row_space_contains(&v) {
                    let p = match t {
                        PauliType::X => PauliString::x_on(n, v.iter_ones()),
                        PauliType::Z => PauliString::z_on(n, v.iter_ones()),
                    };
                    best = Some((w, p));
                }
            }
        }
    }
    DistanceReport { lower_certified: 0, upper_witness: best }
}

fn permute_bits(v: &BitVec, perm: &[usize]) -> BitVec {
    let mut out = BitVec::zeros(v.len());
    for i in v.iter_ones() {
        out.set(perm[i], true);
    }
    out
}

fn invert_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bga;

    #[test]
    fn toric_d2_distance_both_modes() {
        let code = bga::toric_code(2).unwrap();
        let r = distance(&code, DistanceMode::CssExhaustive { w_max: 2 }).unwrap();
        assert_eq!(r.certified_exact(), Some(2));
        let r = distance(&code, DistanceMode::Exhaustive { w_max: 2 }).unwrap();
        assert_eq!(r.certified_exact(), Some(2));
    }

    #[test]
    fn budget_refusal_reports_required_count() {
        let code = bga::toric_code(2).unwrap();
        let err =
            distance_with_budget(&code, DistanceMode::CssExhaustive { w_max: 4 }, 10).unwrap_err();
        match err {
            Error::BudgetExceeded { required, cap } => {
                assert_eq!(cap, 10);
                assert_eq!(required, 2 * 70); // 2 * C(8,4)
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn information_set_finds_toric_logical() {
        let code = bga::toric_code(3).unwrap();
        let r = distance(&code, DistanceMode::RandomInformationSet { iters: 50, seed: 7 })
            .unwrap();
        let (w, p) = r.upper_witness.expect("should find a witness");
        assert_eq!(w, 3);
        assert_eq!(p.weight(), 3);
    }

    #[test]
    fn information_set_reproducible() {
        let code = bga::toric_code(3).unwrap();
        let a = distance(&code, DistanceMode::RandomInformationSet { iters: 20, seed: 3 })
            .unwrap();
        let b = distance(&code, DistanceMode::RandomInformationSet { iters: 20, seed: 3 })
            .unwrap();
        assert_eq!(
            a.upper_witness.map(|(w, p)| (w, p.to_string())),
            b.upper_witness.map(|(w, p)| (w, p.to_string()))
        );
    }

    #[test]
    fn no_logical_reports_infinite() {
        // k = 0 code: single qubit fixed by Z.
        let code = StabilizerCode::new(
            1,
            vec![],
            vec![crate::pauli::PauliString::parse("+Z").unwrap()],
        )
        .unwrap();
        let r = distance(&code, DistanceMode::CssExhaustive { w_max: 1 }).unwrap();
        assert_eq!(r.value(), DistanceValue::Infinite);
    }
}
