//! Stabiliser-group views and Gottesman-Knill measurement updates.
//!
//! [`StabilizerGroupView`] is a plain generator list with a cached rank; it is
//! the working representation for boundary creation and end-cycle derivation.
//! [`StabilizerSim`] adds signed outcome resolution on top for the noiseless
//! determinism checks.

use crate::clifford::{conjugate_in_place, CliffordGate};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::pauli::{symplectic_commutes, PauliString};

#[derive(Clone, Debug)]
pub struct StabilizerGroupView {
    n: usize,
    generators: Vec<PauliString>,
    rank: usize,
}

/// Row of the symplectic generator matrix: x bits then z bits.
fn symplectic_row(p: &PauliString) -> BitVec {
    let n = p.n();
    let mut row = BitVec::zeros(2 * n);
    for i in p.x_bits().iter_ones() {
        row.set(i, true);
    }
    for i in p.z_bits().iter_ones() {
        row.set(n + i, true);
    }
    row
}

fn symplectic_rank(n: usize, gens: &[PauliString]) -> usize {
    BitMatrix::from_rows(2 * n, gens.iter().map(symplectic_row).collect()).rank()
}

impl StabilizerGroupView {
    pub fn new(n: usize, generators: Vec<PauliString>) -> Result<Self> {
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch { left: g.n(), right: n });
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if !symplectic_commutes(a, b)? {
                    return Err(Error::InvalidCode(format!(
                        "generators anticommute: {a} vs {b}"
                    )));
                }
            }
        }
        let rank = symplectic_rank(n, &generators);
        Ok(StabilizerGroupView { n, generators, rank })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True if `p` is a product of the generators (ignoring sign).
    pub fn contains_up_to_sign(&self, p: &PauliString) -> bool {
        let m = BitMatrix::from_rows(
            2 * self.n,
            self.generators.iter().map(symplectic_row).collect(),
        );
        m.row_space_contains(&symplectic_row(p))
    }

    /// Gottesman-Knill projective measurement of a Pauli.
    ///
    /// Returns the updated group and whether the outcome is deterministic.
    /// Deterministic means `measured` commutes with every generator and lies
    /// in the group span; the group is then unchanged. Otherwise one
    /// anticommuting generator is replaced by `measured` (other anticommuting
    /// generators are multiplied by the replaced one), or `measured` is
    /// appended if it commutes with everything but is independent.
    pub fn gk_project(&self, measured: &PauliString) -> Result<(StabilizerGroupView, bool)> {
        if measured.n() != self.n {
            return Err(Error::DimensionMismatch { left: measured.n(), right: self.n });
        }
        let anti: Vec<usize> = self
            .generators
            .iter()
            .enumerate()
            .filter_map(|(i, g)| (!symplectic_commutes(g, measured).ok()?).then_some(i))
            .collect();
        if anti.is_empty() {
            if self.contains_up_to_sign(measured) {
                return Ok((self.clone(), true));
            }
            let mut gens = self.generators.clone();
            gens.push(measured.clone());
            let rank = self.rank + 1;
            return Ok((StabilizerGroupView { n: self.n, generators: gens, rank }, false));
        }
        let pivot = anti[0];
        let pivot_gen = self.generators[pivot].clone();
        let mut gens = self.generators.clone();
        for &i in &anti[1..] {
            let fixed = gens[i].mul(&pivot_gen)?;
            gens[i] = fixed;
        }
        gens[pivot] = measured.clone();
        let rank = symplectic_rank(self.n, &gens);
        Ok((StabilizerGroupView { n: self.n, generators: gens, rank }, false))
    }

    /// Canonical reduced echelon form of the symplectic row space, for
    /// group-equality comparisons.
    pub fn canonical_rows(&self) -> BitMatrix {
        BitMatrix::from_rows(2 * self.n, self.generators.iter().map(symplectic_row).collect())
            .row_space_canonical()
    }

    pub fn equals_group(&self, other: &StabilizerGroupView) -> bool {
        self.n == other.n && self.canonical_rows() == other.canonical_rows()
    }
}

/// A signed stabiliser tableau for pure product-state simulations.
///
/// Holds exactly `n` independent signed generators; supports Clifford gates,
/// single-qubit resets and signed Pauli measurements with externally injected
/// randomness (the caller provides the coin for non-deterministic outcomes).
#[derive(Clone, Debug)]
pub struct StabilizerSim {
    n: usize,
    gens: Vec<PauliString>,
}

impl StabilizerSim {
    /// All qubits in |0>.
    pub fn all_zero(n: usize) -> Self {
        StabilizerSim { n, gens: (0..n).map(|q| PauliString::z_on(n, [q])).collect() }
    }

    /// Initialise each qubit in the basis given by `plus_basis[q]`:
    /// false = |0> (Z), true = |+> (X).
    pub fn product_state(bases: &[bool]) -> Self {
        let n = bases.len();
        let gens = bases
            .iter()
            .enumerate()
            .map(|(q, &plus)| {
                if plus {
                    PauliString::x_on(n, [q])
                } else {
                    PauliString::z_on(n, [q])
                }
            })
            .collect();
        StabilizerSim { n, gens }
    }

    pub fn apply(&mut self, gate: &CliffordGate) -> Result<()> {
        for g in &mut self.gens {
            conjugate_in_place(g, gate)?;
        }
        Ok(())
    }

    /// Measure a Pauli; `coin` supplies the outcome when non-deterministic.
    /// Returns the measured eigenvalue as a bool (true = -1 outcome).
    pub fn measure(&mut self, p: &PauliString, coin: impl FnOnce() -> bool) -> Result<bool> {
        let anti: Vec<usize> = self
            .gens
            .iter()
            .enumerate()
            .filter_map(|(i, g)| (!symplectic_commutes(g, p).ok()?).then_some(i))
            .collect();
        if let Some(&pivot) = anti.first() {
            let pivot_gen = self.gens[pivot].clone();
            for &i in &anti[1..] {
                let fixed = self.gens[i].mul(&pivot_gen)?;
                self.gens[i] = fixed;
            }
            let flip = coin();
            let mut new_gen = p.clone();
            if flip {
                new_gen.negate();
            }
            self.gens[pivot] = new_gen;
            return Ok(flip);
        }
        // Deterministic: resolve the sign by reducing p against the tableau.
        let sign = self.resolve_sign(p)?;
        Ok(sign < 0)
    }

    /// Reset a qubit to |0> (basis = Z) or |+> (basis = X).
    pub fn reset(&mut self, q: usize, plus_basis: bool) -> Result<()> {
        let p = if plus_basis {
            PauliString::x_on(self.n, [q])
        } else {
            PauliString::z_on(self.n, [q])
        };
        let outcome = self.measure(&p, || false)?;
        if outcome {
            // Flip back to the +1 eigenstate: replace the generator equal to -p.
            for g in &mut self.gens {
                if g.x_bits() == p.x_bits() && g.z_bits() == p.z_bits() {
                    g.negate();
                    return Ok(());
                }
            }
            // Deterministic -1 outcome: conjugate by the anticommuting
            // single-qubit Pauli to flip the eigenvalue.
            let flip = if plus_basis {
                PauliString::z_on(self.n, [q])
            } else {
                PauliString::x_on(self.n, [q])
            };
            for g in &mut self.gens {
                if !symplectic_commutes(g, &flip)? {
                    g.negate();
                }
            }
        }
        Ok(())
    }

    /// Sign of a Pauli known to be in the stabiliser group.
    fn resolve_sign(&self, p: &PauliString) -> Result<i8> {
        // Gaussian elimination over the symplectic rows with sign tracking.
        let mut rows: Vec<(BitVec, PauliString)> =
            self.gens.iter().map(|g| (symplectic_row(g), g.clone())).collect();
        let mut target = symplectic_row(p);
        let mut acc = PauliString::identity(self.n);
        let width = 2 * self.n;
        let mut r = 0;
        for c in 0..width {
            let Some(idx) = (r..rows.len()).find(|&i| rows[i].0.get(c)) else {
                continue;
            };
            rows.swap(r, idx);
            let (prow, pgen) = rows[r].clone();
            for (row, gen) in rows.iter_mut().skip(r + 1) {
                if row.get(c) {
                    row.xor_assign(&prow);
                    let m = gen.mul(&pgen)?;
                    *gen = m;
                }
            }
            if target.get(c) {
                target.xor_assign(&prow);
                acc.mul_assign(&pgen)?;
            }
            r += 1;
        }
        if !target.is_zero() {
            return Err(Error::InvalidCode("operator not in stabiliser group".into()));
        }
        // acc equals p up to sign; compare.
        Ok(acc.sign() * p.sign())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn view(n: usize, gens: &[&str]) -> StabilizerGroupView {
        StabilizerGroupView::new(
            n,
            gens.iter().map(|s| PauliString::parse(s).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn measure_z0_on_z0z1() {
        // Z0 commutes with ZZ but is independent: non-deterministic, and the
        // updated group gains Z0 (so it now contains Z1 as well).
        let g = view(2, &["+ZZ"]);
        let (updated, det) = g.gk_project(&PauliString::parse("+ZI").unwrap()).unwrap();
        assert!(!det);
        assert_eq!(updated.rank(), 2);
        assert!(updated.contains_up_to_sign(&PauliString::parse("+IZ").unwrap()));
        // Measuring X0 anticommutes: generator replaced.
        let (updated, det) = g.gk_project(&PauliString::parse("+XI").unwrap()).unwrap();
        assert!(!det);
        assert_eq!(updated.generators().len(), 1);
        assert_eq!(updated.generators()[0].to_string(), "+XI");
    }

    #[test]
    fn measure_in_span_deterministic() {
        let g = view(1, &["+Z"]);
        let (updated, det) = g.gk_project(&PauliString::parse("+Z").unwrap()).unwrap();
        assert!(det);
        assert_eq!(updated.generators().len(), 1);
    }

    #[test]
    fn independent_commuting_measurement_appends() {
        let g = view(2, &["+ZI"]);
        let (updated, det) = g.gk_project(&PauliString::parse("+IZ").unwrap()).unwrap();
        assert!(!det);
        assert_eq!(updated.rank(), 2);
    }

    #[test]
    fn gk_rank_changes_by_at_most_one_and_commutes() {
        let g = view(3, &["+ZZI", "+IZZ"]);
        for m in ["+XII", "+ZII", "+IIZ", "+XXX", "+ZZZ"] {
            let p = PauliString::parse(m).unwrap();
            let (updated, _) = g.gk_project(&p).unwrap();
            assert!(updated.rank().abs_diff(g.rank()) <= 1);
            for (i, a) in updated.generators().iter().enumerate() {
                for b in &updated.generators()[i + 1..] {
                    assert!(symplectic_commutes(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn sim_bell_pair_outcomes_correlate() {
        let mut sim = StabilizerSim::all_zero(2);
        sim.apply(&CliffordGate::H(0)).unwrap();
        sim.apply(&CliffordGate::Cnot { control: 0, target: 1 }).unwrap();
        // ZZ and XX are now deterministic +1.
        let zz = sim.measure(&PauliString::parse("+ZZ").unwrap(), || panic!()).unwrap();
        let xx = sim.measure(&PauliString::parse("+XX").unwrap(), || panic!()).unwrap();
        assert!(!zz);
        assert!(!xx);
        // Z0 is random; inject outcome -1 and check Z1 follows.
        let z0 = sim.measure(&PauliString::parse("+ZI").unwrap(), || true).unwrap();
        assert!(z0);
        let z1 = sim.measure(&PauliString::parse("+IZ").unwrap(), || panic!()).unwrap();
        assert!(z1);
    }

    #[test]
    fn sim_reset_forces_plus_eigenstate() {
        let mut sim = StabilizerSim::all_zero(1);
        sim.apply(&CliffordGate::H(0)).unwrap();
        sim.reset(0, false).unwrap();
        let z = sim.measure(&PauliString::parse("+Z").unwrap(), || panic!()).unwrap();
        assert!(!z);
    }
}
