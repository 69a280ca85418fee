//! Dense-matrix oracle for Clifford conjugation: every gate's action on every
//! small Pauli is checked against exact Gaussian-integer unitaries, kept
//! independent of the tableau rules it verifies.

use morphkit::clifford::{conjugate, conjugate_through, conjugate_through_inverse, CliffordGate};
use morphkit::pauli::{symplectic_commutes, PauliString};
use proptest::prelude::*;

/// Gaussian integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct G(i64, i64);

impl G {
    const ZERO: G = G(0, 0);
    const ONE: G = G(1, 0);
    const I: G = G(0, 1);

    fn mul(self, other: G) -> G {
        G(
            self.0 * other.0 - self.1 * other.1,
            self.0 * other.1 + self.1 * other.0,
        )
    }

    fn add(self, other: G) -> G {
        G(self.0 + other.0, self.1 + other.1)
    }

    fn conj(self) -> G {
        G(self.0, -self.1)
    }

    fn neg(self) -> G {
        G(-self.0, -self.1)
    }

    fn scale(self, k: i64) -> G {
        G(self.0 * k, self.1 * k)
    }
}

/// Dense square matrix over Gaussian integers, with a power-of-two scale so
/// the Hadamard (sqrt(2) entries) stays exact: the represented matrix is
/// `data / sqrt(2)^half_powers`.
#[derive(Clone, Debug)]
struct Mat {
    dim: usize,
    data: Vec<G>,
    half_powers: u32,
}

impl Mat {
    fn zeros(dim: usize) -> Mat {
        Mat { dim, data: vec![G::ZERO; dim * dim], half_powers: 0 }
    }

    fn identity(dim: usize) -> Mat {
        let mut m = Mat::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = G::ONE;
        }
        m
    }

    fn get(&self, i: usize, j: usize) -> G {
        self.data[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, v: G) {
        self.data[i * self.dim + j] = v;
    }

    fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.dim, other.dim);
        let mut out = Mat::zeros(self.dim);
        out.half_powers = self.half_powers + other.half_powers;
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a == G::ZERO {
                    continue;
                }
                for j in 0..self.dim {
                    let v = out.get(i, j).add(a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn dagger(&self) -> Mat {
        let mut out = Mat::zeros(self.dim);
        out.half_powers = self.half_powers;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    fn kron(&self, other: &Mat) -> Mat {
        let d = self.dim * other.dim;
        let mut out = Mat::zeros(d);
        out.half_powers = self.half_powers + other.half_powers;
        for i1 in 0..self.dim {
            for j1 in 0..self.dim {
                let a = self.get(i1, j1);
                if a == G::ZERO {
                    continue;
                }
                for i2 in 0..other.dim {
                    for j2 in 0..other.dim {
                        out.set(
                            i1 * other.dim + i2,
                            j1 * other.dim + j2,
                            a.mul(other.get(i2, j2)),
                        );
                    }
                }
            }
        }
        out
    }

    /// Equality of the represented matrices, normalising scale differences.
    fn represents_same(&self, other: &Mat) -> bool {
        if self.dim != other.dim {
            return false;
        }
        // data / sqrt2^a == other.data / sqrt2^b; sqrt2^2 = 2.
        let (a, b) = (self.half_powers, other.half_powers);
        let diff = a.abs_diff(b);
        if diff % 2 != 0 {
            // One side would need an irrational factor; only equal if both zero.
            return self.data.iter().all(|&v| v == G::ZERO)
                && other.data.iter().all(|&v| v == G::ZERO);
        }
        let k = 1i64 << (diff / 2);
        self.data.iter().zip(&other.data).all(|(&x, &y)| {
            if a >= b {
                x == y.scale(k)
            } else {
                x.scale(k) == y
            }
        })
    }
}

fn single(vals: [[G; 2]; 2], half_powers: u32) -> Mat {
    let mut m = Mat::zeros(2);
    m.half_powers = half_powers;
    for i in 0..2 {
        for j in 0..2 {
            m.set(i, j, vals[i][j]);
        }
    }
    m
}

fn pauli_matrix_1q(x: bool, z: bool) -> Mat {
    match (x, z) {
        (false, false) => Mat::identity(2),
        (true, false) => single([[G::ZERO, G::ONE], [G::ONE, G::ZERO]], 0),
        (false, true) => single([[G::ONE, G::ZERO], [G::ZERO, G::ONE.neg()]], 0),
        (true, true) => single([[G::ZERO, G::I.neg()], [G::I, G::ZERO]], 0),
    }
}

fn pauli_matrix(p: &PauliString) -> Mat {
    let mut m = Mat::identity(1);
    for q in 0..p.n() {
        let (x, z) = p.component(q);
        m = m.kron(&pauli_matrix_1q(x, z));
    }
    if p.sign() < 0 {
        for v in &mut m.data {
            *v = v.neg();
        }
    }
    m
}

/// Embed a k-qubit gate matrix acting on the listed qubits into n qubits.
fn gate_matrix(gate: &CliffordGate, n: usize) -> Mat {
    let h = single([[G::ONE, G::ONE], [G::ONE, G::ONE.neg()]], 1);
    let s = single([[G::ONE, G::ZERO], [G::ZERO, G::I]], 0);
    let dim = 1 << n;
    let mut m = Mat::zeros(dim);
    match *gate {
        CliffordGate::H(q) | CliffordGate::S(q) => {
            let g1 = if matches!(gate, CliffordGate::H(_)) { h } else { s };
            m = Mat::identity(1);
            for i in 0..n {
                m = if i == q { m.kron(&g1) } else { m.kron(&Mat::identity(2)) };
            }
        }
        CliffordGate::Cnot { control, target } => {
            for basis in 0..dim {
                let cbit = basis >> (n - 1 - control) & 1;
                let out = if cbit == 1 { basis ^ (1 << (n - 1 - target)) } else { basis };
                m.set(out, basis, G::ONE);
            }
        }
        CliffordGate::Swap(a, b) => {
            for basis in 0..dim {
                let ab = basis >> (n - 1 - a) & 1;
                let bb = basis >> (n - 1 - b) & 1;
                let mut out = basis & !(1 << (n - 1 - a)) & !(1 << (n - 1 - b));
                out |= bb << (n - 1 - a);
                out |= ab << (n - 1 - b);
                m.set(out, basis, G::ONE);
            }
        }
        CliffordGate::CxSwap { control, target } => {
            // CNOT after SWAP.
            let sw = gate_matrix(&CliffordGate::Swap(control, target), n);
            let cx = gate_matrix(&CliffordGate::Cnot { control, target }, n);
            m = cx.mul(&sw);
        }
    }
    m
}

fn oracle_conjugate_matches(p: &PauliString, gate: &CliffordGate) {
    let n = p.n();
    let claimed = conjugate(p, gate).unwrap();
    let u = gate_matrix(gate, n);
    let lhs = u.mul(&pauli_matrix(p)).mul(&u.dagger());
    let mut rhs = pauli_matrix(&claimed);
    // U has scale sqrt2^a; U P U† carries 2a half powers, so scale rhs to match.
    rhs.half_powers += 2 * u.half_powers;
    // rhs entries must be multiplied by the norm 2^a of U U†.
    let norm = 1i64 << u.half_powers; // (sqrt2^a)^2 = 2^a
    for v in &mut rhs.data {
        *v = v.scale(norm);
    }
    assert!(
        lhs.represents_same(&rhs),
        "oracle mismatch: {p} under {gate:?} claimed {claimed}"
    );
}

#[test]
fn all_two_qubit_paulis_under_all_gates() {
    let gates = [
        CliffordGate::H(0),
        CliffordGate::H(1),
        CliffordGate::S(0),
        CliffordGate::S(1),
        CliffordGate::Cnot { control: 0, target: 1 },
        CliffordGate::Cnot { control: 1, target: 0 },
        CliffordGate::Swap(0, 1),
        CliffordGate::CxSwap { control: 0, target: 1 },
        CliffordGate::CxSwap { control: 1, target: 0 },
    ];
    let paulis = ["I", "X", "Y", "Z"];
    for a in paulis {
        for b in paulis {
            for sign in ["+", "-"] {
                let p = PauliString::parse(&format!("{sign}{a}{b}")).unwrap();
                for g in &gates {
                    oracle_conjugate_matches(&p, g);
                }
            }
        }
    }
}

#[test]
fn cxswap_equals_cnot_after_swap_oracle() {
    // The defining decomposition, checked on the full 2-qubit unitary.
    let cxswap = gate_matrix(&CliffordGate::CxSwap { control: 0, target: 1 }, 2);
    let composed = gate_matrix(&CliffordGate::Cnot { control: 0, target: 1 }, 2)
        .mul(&gate_matrix(&CliffordGate::Swap(0, 1), 2));
    assert!(cxswap.represents_same(&composed));
    // Spot-check the propagation rules the compiler relies on.
    let g = CliffordGate::CxSwap { control: 0, target: 1 };
    let xa = PauliString::parse("+XI").unwrap();
    assert_eq!(conjugate(&xa, &g).unwrap().to_string(), "+IX");
    let zb = PauliString::parse("+IZ").unwrap();
    assert_eq!(conjugate(&zb, &g).unwrap().to_string(), "+ZI");
}

#[test]
fn three_qubit_random_circuits_against_oracle() {
    // Deterministic pseudo-random circuit set on 3 qubits.
    let gates = [
        CliffordGate::H(2),
        CliffordGate::Cnot { control: 0, target: 2 },
        CliffordGate::S(1),
        CliffordGate::CxSwap { control: 2, target: 1 },
        CliffordGate::Swap(0, 1),
        CliffordGate::Cnot { control: 1, target: 0 },
        CliffordGate::S(0),
        CliffordGate::H(0),
    ];
    let paulis = ["+XIZ", "-YYI", "+IZY", "-ZXZ", "+YXY"];
    for text in paulis {
        let mut p = PauliString::parse(text).unwrap();
        let mut u = Mat::identity(8);
        for g in &gates {
            u = gate_matrix(g, 3).mul(&u);
            p = conjugate(&p, g).unwrap();
        }
        let lhs = u.mul(&pauli_matrix(&PauliString::parse(text).unwrap())).mul(&u.dagger());
        let mut rhs = pauli_matrix(&p);
        rhs.half_powers += 2 * u.half_powers;
        let norm = 1i64 << u.half_powers;
        for v in &mut rhs.data {
            *v = v.scale(norm);
        }
        assert!(lhs.represents_same(&rhs), "circuit oracle mismatch for {text}");
    }
}

fn arb_gate(n: usize) -> impl Strategy<Value = CliffordGate> {
    prop_oneof![
        (0..n).prop_map(CliffordGate::H),
        (0..n).prop_map(CliffordGate::S),
        (0..n, 0..n)
            .prop_filter("distinct", |(a, b)| a != b)
            .prop_map(|(a, b)| CliffordGate::Cnot { control: a, target: b }),
        (0..n, 0..n)
            .prop_filter("distinct", |(a, b)| a != b)
            .prop_map(|(a, b)| CliffordGate::Swap(a, b)),
        (0..n, 0..n)
            .prop_filter("distinct", |(a, b)| a != b)
            .prop_map(|(a, b)| CliffordGate::CxSwap { control: a, target: b }),
    ]
}

fn arb_pauli(n: usize) -> impl Strategy<Value = PauliString> {
    (proptest::collection::vec(0u8..4, n), proptest::bool::ANY).prop_map(move |(comps, neg)| {
        let mut p = PauliString::identity(n);
        for (q, c) in comps.iter().enumerate() {
            p.set_component(q, c & 1 == 1, c & 2 == 2);
        }
        let mut p = PauliString::parse(&p.to_string()).unwrap();
        if neg {
            p.negate();
        }
        p
    })
}

proptest! {
    // Conjugation is a group homomorphism: U(pq)U† = (UpU†)(UqU†).
    #[test]
    fn conjugation_is_homomorphism(
        n in 2usize..=8,
        seed_gates in proptest::collection::vec(0usize..5, 1..12),
        pa in 0u64..u64::MAX,
        pb in 0u64..u64::MAX,
    ) {
        let gate_pool: Vec<CliffordGate> = {
            let mut pool = Vec::new();
            for q in 0..n {
                pool.push(CliffordGate::H(q));
                pool.push(CliffordGate::S(q));
            }
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        pool.push(CliffordGate::Cnot { control: a, target: b });
                        pool.push(CliffordGate::CxSwap { control: a, target: b });
                    }
                }
            }
            pool
        };
        let gates: Vec<CliffordGate> = seed_gates
            .iter()
            .enumerate()
            .map(|(i, &s)| gate_pool[(s * 31 + i * 7) % gate_pool.len()])
            .collect();
        let mk = |mut seed: u64| {
            let mut p = PauliString::identity(n);
            for q in 0..n {
                let c = (seed & 3) as u8;
                seed >>= 2;
                p.set_component(q, c & 1 == 1, c & 2 == 2);
            }
            PauliString::parse(&p.to_string()).unwrap()
        };
        let p = mk(pa);
        let q = mk(pb);
        let pq = p.mul(&q).unwrap();
        let lhs = conjugate_through(&pq, &gates).unwrap();
        let rhs = conjugate_through(&p, &gates)
            .unwrap()
            .mul(&conjugate_through(&q, &gates).unwrap())
            .unwrap();
        // Exact equality including the tracked phase.
        prop_assert_eq!(lhs, rhs);
    }

    // Round trip: conjugating through U then U† restores the input exactly.
    #[test]
    fn conjugation_round_trip(n in 1usize..=8, gsel in proptest::collection::vec(any::<prop::sample::Index>(), 0..10), p in (1usize..=8).prop_flat_map(arb_pauli)) {
        prop_assume!(p.n() <= n);
        let p = {
            let map: Vec<usize> = (0..p.n()).collect();
            p.embed(n, &map)
        };
        let mut pool = Vec::new();
        for q in 0..n {
            pool.push(CliffordGate::H(q));
            pool.push(CliffordGate::S(q));
        }
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    pool.push(CliffordGate::Cnot { control: a, target: b });
                    pool.push(CliffordGate::Swap(a, b));
                    pool.push(CliffordGate::CxSwap { control: a, target: b });
                }
            }
        }
        let gates: Vec<CliffordGate> = gsel.iter().map(|ix| *ix.get(&pool)).collect();
        let there = conjugate_through(&p, &gates).unwrap();
        let back = conjugate_through_inverse(&there, &gates).unwrap();
        prop_assert_eq!(back.to_string(), p.to_string());
    }

    // Commutation is a symplectic-form identity: conjugation preserves it.
    #[test]
    fn conjugation_preserves_commutation(n in 2usize..=6, pa in 0u64..u64::MAX, pb in 0u64..u64::MAX, g in (2usize..=6).prop_flat_map(arb_gate)) {
        prop_assume!(g.qubits().iter().all(|&q| q < n));
        let mk = |mut seed: u64| {
            let mut p = PauliString::identity(n);
            for q in 0..n {
                let c = (seed & 3) as u8;
                seed >>= 2;
                p.set_component(q, c & 1 == 1, c & 2 == 2);
            }
            PauliString::parse(&p.to_string()).unwrap()
        };
        let p = mk(pa);
        let q = mk(pb);
        let before = symplectic_commutes(&p, &q).unwrap();
        let after = symplectic_commutes(
            &conjugate(&p, &g).unwrap(),
            &conjugate(&q, &g).unwrap(),
        ).unwrap();
        prop_assert_eq!(before, after);
    }
}
