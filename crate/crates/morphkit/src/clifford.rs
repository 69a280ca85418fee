//! Clifford conjugation of Pauli strings: CNOT, H, S, SWAP and CXSWAP.
//!
//! CXSWAP(a, b) is the CNOT(a, b) preceded by SWAP(a, b), the
//! ISWAP-equivalent gate the compiler can target. Phase bookkeeping follows
//! the usual tableau update rules, kept mod 4.

use crate::error::{Error, Result};
use crate::pauli::PauliString;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CliffordGate {
    Cnot { control: usize, target: usize },
    H(usize),
    S(usize),
    Swap(usize, usize),
    CxSwap { control: usize, target: usize },
}

impl CliffordGate {
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            CliffordGate::Cnot { control, target } => vec![control, target],
            CliffordGate::H(q) | CliffordGate::S(q) => vec![q],
            CliffordGate::Swap(a, b) => vec![a, b],
            CliffordGate::CxSwap { control, target } => vec![control, target],
        }
    }

    pub fn inverse(&self) -> Vec<CliffordGate> {
        match *self {
            CliffordGate::S(q) => vec![CliffordGate::S(q), CliffordGate::S(q), CliffordGate::S(q)],
            CliffordGate::CxSwap { control, target } => vec![
                // (CNOT · SWAP)^-1 = SWAP · CNOT
                CliffordGate::Cnot { control, target },
                CliffordGate::Swap(control, target),
            ],
            g => vec![g],
        }
    }
}

/// Returns `U p U†` with the sign tracked exactly.
pub fn conjugate(p: &PauliString, gate: &CliffordGate) -> Result<PauliString> {
    let mut out = p.clone();
    conjugate_in_place(&mut out, gate)?;
    Ok(out)
}

pub fn conjugate_in_place(p: &mut PauliString, gate: &CliffordGate) -> Result<()> {
    let n = p.n();
    let check = |q: usize| -> Result<()> {
        if q >= n {
            Err(Error::IndexOutOfRange { index: q, len: n })
        } else {
            Ok(())
        }
    };
    match *gate {
        CliffordGate::H(q) => {
            check(q)?;
            let (x, z) = p.component(q);
            if x && z {
                p.negate();
            }
            p.set_component(q, z, x);
        }
        CliffordGate::S(q) => {
            check(q)?;
            // S X S† = Y, S Y S† = -X, S Z S† = Z.
            let (x, z) = p.component(q);
            if x {
                if z {
                    p.negate();
                }
                p.set_component(q, x, !z);
            }
        }
        CliffordGate::Cnot { control, target } => {
            check(control)?;
            check(target)?;
            if control == target {
                return Err(Error::IndexOutOfRange { index: target, len: n });
            }
            let (xc, zc) = p.component(control);
            let (xt, zt) = p.component(target);
            if xc && zt && (xt == zc) {
                p.negate();
            }
            p.set_component(control, xc, zc ^ zt);
            p.set_component(target, xt ^ xc, zt);
        }
        CliffordGate::Swap(a, b) => {
            check(a)?;
            check(b)?;
            let ca = p.component(a);
            let cb = p.component(b);
            p.set_component(a, cb.0, cb.1);
            p.set_component(b, ca.0, ca.1);
        }
        CliffordGate::CxSwap { control, target } => {
            conjugate_in_place(p, &CliffordGate::Swap(control, target))?;
            conjugate_in_place(p, &CliffordGate::Cnot { control, target })?;
        }
    }
    Ok(())
}

/// Conjugate through a sequence of gates applied in circuit order.
pub fn conjugate_through(p: &PauliString, gates: &[CliffordGate]) -> Result<PauliString> {
    let mut out = p.clone();
    for g in gates {
        conjugate_in_place(&mut out, g)?;
    }
    Ok(out)
}

/// Conjugate through the inverse circuit (gates reversed and inverted).
pub fn conjugate_through_inverse(p: &PauliString, gates: &[CliffordGate]) -> Result<PauliString> {
    let mut out = p.clone();
    for g in gates.iter().rev() {
        for inv in g.inverse() {
            conjugate_in_place(&mut out, &inv)?;
        }
    }
    Ok(out)
}
