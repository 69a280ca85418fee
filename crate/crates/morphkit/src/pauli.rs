//! Length-n Pauli operators as paired X/Z bit vectors with a tracked phase.
//!
//! The operator represented is `i^phase · X^x · Z^z` (qubit-wise), with
//! `phase` kept mod 4 so that S-gate conjugation composes correctly. Hermitian
//! Pauli strings expose their sign as ±1 through [`PauliString::sign`].

use crate::error::{Error, Result};
use crate::gf2::BitVec;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x_bits: BitVec,
    z_bits: BitVec,
    /// Power of `i` in front of `X^x Z^z`, mod 4.
    phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString { n, x_bits: BitVec::zeros(n), z_bits: BitVec::zeros(n), phase: 0 }
    }

    pub fn from_bits(n: usize, x_bits: BitVec, z_bits: BitVec) -> Self {
        debug_assert_eq!(x_bits.len(), n);
        debug_assert_eq!(z_bits.len(), n);
        // Normalise phase so the operator is the Hermitian +1-signed string.
        let n_y = x_bits.and_count(&z_bits);
        PauliString { n, x_bits, z_bits, phase: (n_y % 4) as u8 }
    }

    pub fn x_on(n: usize, qubits: impl IntoIterator<Item = usize>) -> Self {
        Self::from_bits(n, BitVec::from_indices(n, qubits), BitVec::zeros(n))
    }

    pub fn z_on(n: usize, qubits: impl IntoIterator<Item = usize>) -> Self {
        Self::from_bits(n, BitVec::zeros(n), BitVec::from_indices(n, qubits))
    }

    pub fn y_on(n: usize, qubits: impl IntoIterator<Item = usize>) -> Self {
        let bits: Vec<usize> = qubits.into_iter().collect();
        Self::from_bits(
            n,
            BitVec::from_indices(n, bits.iter().copied()),
            BitVec::from_indices(n, bits),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x_bits
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z_bits
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        let mut w = 0;
        for (a, b) in self.x_bits.words().iter().zip(self.z_bits.words()) {
            w += (a | b).count_ones() as usize;
        }
        w
    }

    pub fn is_identity_up_to_sign(&self) -> bool {
        self.x_bits.is_zero() && self.z_bits.is_zero()
    }

    /// Support as sorted qubit indices.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.x_bits.get(i) || self.z_bits.get(i)).collect()
    }

    /// True if the string is a tensor product of I and X only.
    pub fn is_pure_x(&self) -> bool {
        self.z_bits.is_zero()
    }

    pub fn is_pure_z(&self) -> bool {
        self.x_bits.is_zero()
    }

    /// Single-qubit component at `i`: (x, z) bits.
    pub fn component(&self, i: usize) -> (bool, bool) {
        (self.x_bits.get(i), self.z_bits.get(i))
    }

    /// Set the single-qubit component, preserving the exposed Hermitian sign.
    pub fn set_component(&mut self, i: usize, x: bool, z: bool) {
        let was_y = self.x_bits.get(i) && self.z_bits.get(i);
        self.x_bits.set(i, x);
        self.z_bits.set(i, z);
        let is_y = x && z;
        if was_y != is_y {
            self.phase = (self.phase + if is_y { 1 } else { 3 }) % 4;
        }
    }

    /// Sign of the Hermitian string: +1 or -1.
    ///
    /// Panics if the tracked phase is inconsistent with a Hermitian operator
    /// (can only happen through internal misuse).
    pub fn sign(&self) -> i8 {
        let n_y = self.x_bits.and_count(&self.z_bits);
        let rel = (self.phase + 4 - (n_y % 4) as u8) % 4;
        match rel {
            0 => 1,
            2 => -1,
            _ => panic!("non-Hermitian phase on PauliString"),
        }
    }

    pub fn negate(&mut self) {
        self.phase = (self.phase + 2) % 4;
    }

    /// Multiply in place: `self <- self · other`. Associative; p·p = +identity.
    pub fn mul_assign(&mut self, other: &PauliString) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        // (i^p1 X^x1 Z^z1)(i^p2 X^x2 Z^z2)
        //   = i^(p1+p2) (-1)^(z1·x2) X^(x1+x2) Z^(z1+z2)
        let anti = self.z_bits.and_count(&other.x_bits);
        self.phase = (self.phase + other.phase + 2 * (anti % 2) as u8) % 4;
        self.x_bits.xor_assign(&other.x_bits);
        self.z_bits.xor_assign(&other.z_bits);
        Ok(())
    }

    pub fn mul(&self, other: &PauliString) -> Result<PauliString> {
        let mut out = self.clone();
        out.mul_assign(other)?;
        Ok(out)
    }

    /// Keep only the components on `positions`, reindexed in order.
    pub fn restrict(&self, positions: &[usize]) -> PauliString {
        PauliString::from_bits(
            positions.len(),
            self.x_bits.select(positions),
            self.z_bits.select(positions),
        )
    }

    /// Embed into a larger register, qubit `i` of self landing on `map[i]`.
    pub fn embed(&self, n: usize, map: &[usize]) -> PauliString {
        let mut out = PauliString::identity(n);
        for i in 0..self.n {
            let (x, z) = self.component(i);
            out.set_component(map[i], x, z);
        }
        if self.sign() < 0 {
            out.negate();
        }
        out
    }

    /// Parse the text form: sign prefix then one of I, X, Y, Z per qubit.
    pub fn parse(text: &str) -> Result<PauliString> {
        let bad = |detail: &str| Error::Parse { what: "pauli", detail: detail.to_string() };
        let mut chars = text.chars();
        let first = chars.next().ok_or_else(|| bad("empty string"))?;
        let (negative, body): (bool, Vec<char>) = match first {
            '+' => (false, chars.collect()),
            '-' => (true, chars.collect()),
            c => (false, std::iter::once(c).chain(chars).collect()),
        };
        let n = body.len();
        let mut p = PauliString::identity(n);
        for (i, c) in body.iter().enumerate() {
            match c {
                'I' => {}
                'X' => p.set_component(i, true, false),
                'Y' => p.set_component(i, true, true),
                'Z' => p.set_component(i, false, true),
                _ => return Err(bad(&format!("invalid character '{c}'"))),
            }
        }
        if negative {
            p.negate();
        }
        Ok(p)
    }
}

impl std::fmt::Display for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", if self.sign() < 0 { '-' } else { '+' })?;
        for i in 0..self.n {
            let c = match self.component(i) {
                (false, false) => 'I',
                (true, false) => 'X',
                (true, true) => 'Y',
                (false, true) => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// GF(2) symplectic inner product: 0 (true return) means the pair commutes.
pub fn symplectic_commutes(p: &PauliString, q: &PauliString) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch { left: p.n(), right: q.n() });
    }
    Ok(!(p.x_bits.dot(&q.z_bits) ^ p.z_bits.dot(&q.x_bits)))
}
