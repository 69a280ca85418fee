//! CSS stabiliser codes: parameters `[[n, k, d]]`, logical operators,
//! redundancies, and the code text format.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::pauli::{symplectic_commutes, PauliString};

pub mod distance;
pub use distance::{distance, DistanceMode, DistanceReport, DistanceValue};

/// Which Pauli type a check or error pattern is made of.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PauliType {
    X,
    Z,
}

impl PauliType {
    pub fn other(self) -> PauliType {
        match self {
            PauliType::X => PauliType::Z,
            PauliType::Z => PauliType::X,
        }
    }
}

impl std::fmt::Display for PauliType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PauliType::X => write!(f, "X"),
            PauliType::Z => write!(f, "Z"),
        }
    }
}

/// A CSS code: pure-X checks and pure-Z checks over `n` qubits.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    pub n: usize,
    pub x_checks: Vec<PauliString>,
    pub z_checks: Vec<PauliString>,
    pub qubit_labels: Option<Vec<String>>,
}

/// A subset of same-type check indices whose product is the identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Redundancy {
    pub pauli_type: PauliType,
    pub members: Vec<usize>,
}

impl StabilizerCode {
    pub fn new(
        n: usize,
        x_checks: Vec<PauliString>,
        z_checks: Vec<PauliString>,
    ) -> Result<Self> {
        for c in &x_checks {
            if c.n() != n {
                return Err(Error::DimensionMismatch { left: c.n(), right: n });
            }
            if !c.is_pure_x() {
                return Err(Error::InvalidCode(format!("mixed-type X check: {c}")));
            }
        }
        for c in &z_checks {
            if c.n() != n {
                return Err(Error::DimensionMismatch { left: c.n(), right: n });
            }
            if !c.is_pure_z() {
                return Err(Error::InvalidCode(format!("mixed-type Z check: {c}")));
            }
        }
        for x in &x_checks {
            for z in &z_checks {
                if !symplectic_commutes(x, z)? {
                    return Err(Error::InvalidCode(format!(
                        "checks anticommute: {x} vs {z}"
                    )));
                }
            }
        }
        Ok(StabilizerCode { n, x_checks, z_checks, qubit_labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.n);
        self.qubit_labels = Some(labels);
        self
    }

    pub fn checks(&self, t: PauliType) -> &[PauliString] {
        match t {
            PauliType::X => &self.x_checks,
            PauliType::Z => &self.z_checks,
        }
    }

    /// Check matrix of one type: one row per check, one column per qubit.
    pub fn check_matrix(&self, t: PauliType) -> BitMatrix {
        let rows = self
            .checks(t)
            .iter()
            .map(|c| {
                let bits = if t == PauliType::X { c.x_bits() } else { c.z_bits() };
                bits.clone()
            })
            .collect();
        BitMatrix::from_rows(self.n, rows)
    }

    pub fn rank(&self, t: PauliType) -> usize {
        self.check_matrix(t).rank()
    }

    /// Number of logical qubits: k = n - rank(X) - rank(Z).
    pub fn logical_count(&self) -> usize {
        self.n - self.rank(PauliType::X) - self.rank(PauliType::Z)
    }

    /// Paired logical representatives: `x_logicals[i]` anticommutes with
    /// `z_logicals[i]` and commutes with everything else.
    pub fn logical_operators(&self) -> Result<(Vec<PauliString>, Vec<PauliString>)> {
        let x_reps = self.type_logical_space(PauliType::X);
        let z_reps = self.type_logical_space(PauliType::Z);
        let k = self.logical_count();
        debug_assert_eq!(x_reps.len(), k);
        debug_assert_eq!(z_reps.len(), k);
        if k == 0 {
            return Ok((Vec::new(), Vec::new()));
        }
        // Gram matrix over GF(2): g[i][j] = <x_i, z_j> anticommutation.
        let mut gram = BitMatrix::new(k);
        for xi in &x_reps {
            let mut row = BitVec::zeros(k);
            for (j, zj) in z_reps.iter().enumerate() {
                if xi.dot(zj) {
                    row.set(j, true);
                }
            }
            gram.push_row(row);
        }
        // Invert the Gram matrix and mix the Z side so pairing is the identity.
        let inv = invert_gf2(&gram).ok_or_else(|| {
            Error::InvalidCode("logical pairing matrix is singular".into())
        })?;
        // New z_i = sum_j inv[j][i] z_j  gives x_i · z_j' pairing = delta_ij.
        let mut z_paired = Vec::with_capacity(k);
        for i in 0..k {
            let mut acc = BitVec::zeros(self.n);
            for j in 0..k {
                if inv.rows[j].get(i) {
                    acc.xor_assign(&z_reps[j]);
                }
            }
            z_paired.push(acc);
        }
        let x_out = x_reps
            .into_iter()
            .map(|bits| PauliString::from_bits(self.n, bits, BitVec::zeros(self.n)))
            .collect();
        let z_out = z_paired
            .into_iter()
            .map(|bits| PauliString::from_bits(self.n, BitVec::zeros(self.n), bits))
            .collect();
        Ok((x_out, z_out))
    }

    /// Representatives of the type-t logical space: vectors commuting with the
    /// opposite checks, modulo own-type stabilisers.
    fn type_logical_space(&self, t: PauliType) -> Vec<BitVec> {
        let opp = self.check_matrix(t.other());
        let own = self.check_matrix(t);
        let null = opp.kernel();
        let mut own_red = own.clone();
        let (_, own_pivots) = own_red.row_reduce();
        let mut reps = BitMatrix::new(self.n);
        for v in null {
            let r = own_red.reduce_vector(&v, &own_pivots);
            if !r.is_zero() {
                reps.push_row(r);
            }
        }
        let (rank, _) = reps.row_reduce();
        reps.rows.truncate(rank);
        reps.rows
    }

    /// Basis of the redundancies of one Pauli type: subsets of checks whose
    /// product is the identity.
    pub fn redundancy_basis(&self, t: PauliType) -> Vec<Redundancy> {
        self.check_matrix(t)
            .left_kernel()
            .into_iter()
            .map(|v| Redundancy { pauli_type: t, members: v.iter_ones().collect() })
            .collect()
    }

    /// Canonical row spaces of both check types, for equality comparisons.
    pub fn canonical_form(&self) -> (BitMatrix, BitMatrix) {
        (
            self.check_matrix(PauliType::X).row_space_canonical(),
            self.check_matrix(PauliType::Z).row_space_canonical(),
        )
    }

    pub fn equals_code(&self, other: &StabilizerCode) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }

    /// Equality after relabeling our qubit `i` to `perm[i]` of `other`.
    pub fn equals_up_to_permutation(&self, other: &StabilizerCode, perm: &[usize]) -> bool {
        if self.n != other.n || perm.len() != self.n {
            return false;
        }
        let map = |checks: &[PauliString]| {
            checks.iter().map(|c| c.embed(self.n, perm)).collect::<Vec<_>>()
        };
        match StabilizerCode::new(self.n, map(&self.x_checks), map(&self.z_checks)) {
            Ok(mapped) => mapped.equals_code(other),
            Err(_) => false,
        }
    }

    /// Serialise to the text code format.
    pub fn to_text(&self) -> String {
        let mut out = String::from("#v1\n");
        out.push_str(&format!("QECC n={}\n", self.n));
        for c in &self.x_checks {
            out.push_str(&format!("X: {c}\n"));
        }
        for c in &self.z_checks {
            out.push_str(&format!("Z: {c}\n"));
        }
        if let Some(labels) = &self.qubit_labels {
            for (i, l) in labels.iter().enumerate() {
                out.push_str(&format!("LABEL {i} {l}\n"));
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |d: String| Error::Parse { what: "code file", detail: d };
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        match lines.next() {
            Some("#v1") => {}
            Some(v) => return Err(bad(format!("unknown version line '{v}'"))),
            None => return Err(bad("empty file".into())),
        }
        let header = lines.next().ok_or_else(|| bad("missing QECC header".into()))?;
        let n: usize = header
            .strip_prefix("QECC n=")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad(format!("bad header '{header}'")))?;
        let mut x_checks = Vec::new();
        let mut z_checks = Vec::new();
        let mut labels: Vec<(usize, String)> = Vec::new();
        for line in lines {
            if let Some(rest) = line.strip_prefix("X:") {
                x_checks.push(PauliString::parse(rest.trim())?);
            } else if let Some(rest) = line.strip_prefix("Z:") {
                z_checks.push(PauliString::parse(rest.trim())?);
            } else if let Some(rest) = line.strip_prefix("LABEL ") {
                let (idx, label) = rest
                    .split_once(' ')
                    .ok_or_else(|| bad(format!("bad label line '{line}'")))?;
                let idx: usize =
                    idx.parse().map_err(|_| bad(format!("bad label index '{idx}'")))?;
                labels.push((idx, label.to_string()));
            } else {
                return Err(bad(format!("unrecognised line '{line}'")));
            }
        }
        let mut code = StabilizerCode::new(n, x_checks, z_checks)?;
        if !labels.is_empty() {
            let mut full = vec![String::new(); n];
            for (i, l) in labels {
                if i >= n {
                    return Err(bad(format!("label index {i} out of range")));
                }
                full[i] = l;
            }
            code = code.with_labels(full);
        }
        Ok(code)
    }
}

/// Maximum over qubits of the number of distinct two-qubit-gate partners.
pub fn connectivity_degree(gates: impl IntoIterator<Item = (usize, usize)>, n: usize) -> usize {
    let mut partners: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for (a, b) in gates {
        if a != b {
            partners[a].insert(b);
            partners[b].insert(a);
        }
    }
    partners.iter().map(|s| s.len()).max().unwrap_or(0)
}

fn invert_gf2(m: &BitMatrix) -> Option<BitMatrix> {
    let k = m.cols;
    if m.rows.len() != k {
        return None;
    }
    let mut aug = BitMatrix::new(2 * k);
    for (i, row) in m.rows.iter().enumerate() {
        let mut a = BitVec::zeros(2 * k);
        for j in row.iter_ones() {
            a.set(j, true);
        }
        a.set(k + i, true);
        aug.push_row(a);
    }
    let (rank, _) = aug.row_reduce();
    if rank < k {
        return None;
    }
    let cols: Vec<usize> = (k..2 * k).collect();
    Some(BitMatrix::from_rows(
        k,
        aug.rows.iter().take(k).map(|r| r.select(&cols)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bga;

    #[test]
    fn single_qubit_no_checks() {
        let code = StabilizerCode::new(1, vec![], vec![]).unwrap();
        assert_eq!(code.logical_count(), 1);
        let (xl, zl) = code.logical_operators().unwrap();
        assert_eq!(xl.len(), 1);
        assert!(!symplectic_commutes(&xl[0], &zl[0]).unwrap());
    }

    #[test]
    fn mixed_checks_rejected() {
        let y = PauliString::parse("+Y").unwrap();
        assert!(StabilizerCode::new(1, vec![y], vec![]).is_err());
    }

    #[test]
    fn anticommuting_checks_rejected() {
        let x = PauliString::parse("+XI").unwrap();
        let z = PauliString::parse("+ZI").unwrap();
        assert!(StabilizerCode::new(2, vec![x], vec![z]).is_err());
    }

    #[test]
    fn toric_d2_parameters_and_redundancies() {
        let code = bga::toric_code(2).unwrap();
        assert_eq!(code.n, 8);
        assert_eq!(code.logical_count(), 2);
        assert_eq!(code.redundancy_basis(PauliType::X).len(), 1);
        assert_eq!(code.redundancy_basis(PauliType::Z).len(), 1);
        // Every redundancy multiplies to the identity.
        for t in [PauliType::X, PauliType::Z] {
            for r in code.redundancy_basis(t) {
                let mut acc = PauliString::identity(code.n);
                for &i in &r.members {
                    acc.mul_assign(&code.checks(t)[i]).unwrap();
                }
                assert!(acc.is_identity_up_to_sign());
            }
        }
    }

    #[test]
    fn toric_d2_z_generator_rank_oracle() {
        // Exhaustive subset check: kernel of the 8 Z-generators (as rows) has
        // dimension exactly 1 (the product of all plaquettes).
        let code = bga::toric_code(2).unwrap();
        let m = code.check_matrix(PauliType::Z);
        let mut kernel_count = 0u32;
        for mask in 1u32..(1 << 4) {
            // d=2 toric: 4 Z-checks
            let mut acc = BitVec::zeros(code.n);
            for i in 0..4 {
                if mask >> i & 1 == 1 {
                    acc.xor_assign(&m.rows[i]);
                }
            }
            if acc.is_zero() {
                kernel_count += 1;
            }
        }
        assert_eq!(kernel_count, 1);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn toric_d2_logicals_weight_oracle() {
        // Exhaustive search over pure-X patterns of weight <= 2 on 8 qubits:
        // minimum-weight X logicals have weight exactly 2 (the two cycles).
        let code = bga::toric_code(2).unwrap();
        let hz = code.check_matrix(PauliType::Z);
        let hx = code.check_matrix(PauliType::X).row_space_canonical();
        let mut found = Vec::new();
        for a in 0..code.n {
            for b in a..code.n {
                let v = if a == b {
                    BitVec::from_indices(code.n, [a])
                } else {
                    BitVec::from_indices(code.n, [a, b])
                };
                let commutes = hz.rows.iter().all(|row| !row.dot(&v));
                if commutes && !hx.row_space_contains(&v) {
                    found.push(v.count_ones());
                }
            }
        }
        assert!(!found.is_empty());
        assert_eq!(found.iter().min(), Some(&2));
        // And the paired logical_operators agree with the symplectic pairing.
        let (xl, zl) = code.logical_operators().unwrap();
        assert_eq!(xl.len(), 2);
        for (i, x) in xl.iter().enumerate() {
            for (j, z) in zl.iter().enumerate() {
                let commutes = symplectic_commutes(x, z).unwrap();
                assert_eq!(commutes, i != j);
            }
            for c in code.x_checks.iter().chain(&code.z_checks) {
                assert!(symplectic_commutes(x, c).unwrap());
            }
        }
    }

    #[test]
    fn code_text_roundtrip() {
        let code = bga::toric_code(2).unwrap();
        let text = code.to_text();
        let back = StabilizerCode::from_text(&text).unwrap();
        assert!(code.equals_code(&back));
        assert_eq!(code.qubit_labels, back.qubit_labels);
    }

    #[test]
    fn k_plus_ranks_equals_n() {
        for code in [bga::toric_code(2).unwrap(), bga::toric_code(3).unwrap()] {
            assert_eq!(
                code.logical_count() + code.rank(PauliType::X) + code.rank(PauliType::Z),
                code.n
            );
        }
    }
}
