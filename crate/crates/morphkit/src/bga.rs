//! Abelian two-block group-algebra (2BGA) codes in group and lattice
//! presentations, conversions between them, and enumeration over
//! Hermite-Normal-Form lattices.
//!
//! A group presentation is `(G, A, B)` with `G` a finite Abelian group and
//! `A`, `B` subsets of `G`; the code has qubits `(L, g)` and `(R, g)`,
//! X-checks `s(X, g) = prod_a X_{L,a+g} prod_b X_{R,b+g}` and Z-checks
//! `s(Z, g) = prod_b Z_{L,-b+g} prod_a Z_{R,-a+g}` (written additively).
//! The lattice presentation `(m_A, m_B, HNF, n_copies)` encodes the same code
//! as `G = Z^m / Lambda`, quotienting away translation and automorphism
//! symmetry.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::intmat::{hnf_lower, left_kernel, smith_normal_form, IntMat};
use crate::pauli::PauliString;

pub type GroupElement = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    /// G = Z_{n1} x Z_{n2} x ...; empty means the trivial group.
    pub cyclic_orders: Vec<i64>,
    pub a_set: Vec<GroupElement>,
    pub b_set: Vec<GroupElement>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticePresentation {
    pub m_a: usize,
    pub m_b: usize,
    /// Lower-triangular HNF, rows are lattice generators.
    pub hnf: IntMat,
    pub n_copies: i64,
}

impl GroupPresentation {
    pub fn new(
        cyclic_orders: Vec<i64>,
        a_set: Vec<GroupElement>,
        b_set: Vec<GroupElement>,
    ) -> Result<Self> {
        if cyclic_orders.iter().any(|&o| o <= 0) {
            return Err(Error::InvalidCode("cyclic orders must be positive".into()));
        }
        let mut gp = GroupPresentation { cyclic_orders, a_set, b_set };
        gp.a_set = dedupe_elements(gp.a_set.iter().map(|e| gp.reduce(e)));
        gp.b_set = dedupe_elements(gp.b_set.iter().map(|e| gp.reduce(e)));
        Ok(gp)
    }

    pub fn reduce(&self, e: &[i64]) -> GroupElement {
        debug_assert_eq!(e.len(), self.cyclic_orders.len());
        e.iter().zip(&self.cyclic_orders).map(|(&v, &o)| v.rem_euclid(o)).collect()
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> GroupElement {
        self.reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: &[i64]) -> GroupElement {
        self.reduce(&a.iter().map(|x| -x).collect::<Vec<_>>())
    }

    pub fn order(&self) -> i64 {
        self.cyclic_orders.iter().product()
    }

    pub fn weight(&self) -> usize {
        self.a_set.len() + self.b_set.len()
    }

    /// All group elements in lexicographic order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![vec![]];
        for &o in &self.cyclic_orders {
            let mut next = Vec::with_capacity(out.len() * o as usize);
            for prefix in &out {
                for v in 0..o {
                    let mut e = prefix.clone();
                    e.push(v);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    pub fn element_index(&self, e: &[i64]) -> usize {
        let e = self.reduce(e);
        let mut idx: i64 = 0;
        for (v, &o) in e.iter().zip(&self.cyclic_orders) {
            idx = idx * o + v;
        }
        idx as usize
    }

    /// Subgroup generated by the given elements, as a sorted element set.
    pub fn subgroup(&self, gens: &[GroupElement]) -> BTreeSet<GroupElement> {
        let zero = vec![0; self.cyclic_orders.len()];
        let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
        seen.insert(zero.clone());
        let mut queue: VecDeque<GroupElement> = VecDeque::new();
        queue.push_back(zero);
        while let Some(e) = queue.pop_front() {
            for g in gens {
                let f = self.add(&e, g);
                if seen.insert(f.clone()) {
                    queue.push_back(f);
                }
            }
        }
        seen
    }
}

fn dedupe_elements(iter: impl Iterator<Item = GroupElement>) -> Vec<GroupElement> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in iter {
        if seen.insert(e.clone()) {
            out.push(e);
        }
    }
    out
}

impl LatticePresentation {
    pub fn new(m_a: usize, m_b: usize, hnf: IntMat, n_copies: i64) -> Result<Self> {
        let m = m_a + m_b;
        if hnf.rows != m || hnf.cols != m {
            return Err(Error::InvalidCode(format!(
                "lattice matrix must be {m}x{m}, got {}x{}",
                hnf.rows, hnf.cols
            )));
        }
        if n_copies < 1 {
            return Err(Error::InvalidCode("n_copies must be >= 1".into()));
        }
        for i in 0..m {
            for j in 0..m {
                let v = hnf[(i, j)];
                if j > i && v != 0 {
                    return Err(Error::InvalidCode("matrix not lower-triangular".into()));
                }
                if j == i && v <= 0 {
                    return Err(Error::InvalidCode("diagonal must be positive".into()));
                }
                if j < i && (v < 0 || v >= hnf[(j, j)]) {
                    return Err(Error::InvalidCode(
                        "below-diagonal entries must lie in [0, diagonal)".into(),
                    ));
                }
            }
        }
        Ok(LatticePresentation { m_a, m_b, hnf, n_copies })
    }

    pub fn det(&self) -> i64 {
        (0..self.hnf.rows).map(|i| self.hnf[(i, i)]).product()
    }

    /// Total qubit count of the code this lattice presents.
    pub fn qubit_count(&self) -> i64 {
        2 * self.det() * self.n_copies
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("#v1\n");
        out.push_str(&format!(
            "2BGA mA={} mB={} copies={}\n",
            self.m_a, self.m_b, self.n_copies
        ));
        for i in 0..self.hnf.rows {
            let row: Vec<String> = self.hnf.row(i).iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |d: String| Error::Parse { what: "lattice file", detail: d };
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        match lines.next() {
            Some("#v1") => {}
            Some(v) => return Err(bad(format!("unknown version line '{v}'"))),
            None => return Err(bad("empty file".into())),
        }
        let header = lines.next().ok_or_else(|| bad("missing 2BGA header".into()))?;
        let rest = header.strip_prefix("2BGA ").ok_or_else(|| bad(format!("bad header '{header}'")))?;
        let mut m_a = None;
        let mut m_b = None;
        let mut copies = 1i64;
        for field in rest.split_whitespace() {
            if let Some(v) = field.strip_prefix("mA=") {
                m_a = v.parse().ok();
            } else if let Some(v) = field.strip_prefix("mB=") {
                m_b = v.parse().ok();
            } else if let Some(v) = field.strip_prefix("copies=") {
                copies = v.parse().map_err(|_| bad(format!("bad copies '{v}'")))?;
            }
        }
        let (m_a, m_b) =
            (m_a.ok_or_else(|| bad("missing mA".into()))?, m_b.ok_or_else(|| bad("missing mB".into()))?);
        let m = m_a + m_b;
        let mut rows = Vec::new();
        for line in lines.take(m) {
            let row: std::result::Result<Vec<i64>, _> =
                line.split_whitespace().map(|t| t.parse()).collect();
            rows.push(row.map_err(|_| bad(format!("bad matrix line '{line}'")))?);
        }
        if rows.len() != m || rows.iter().any(|r| r.len() != m) {
            return Err(bad(format!("expected {m}x{m} matrix")));
        }
        LatticePresentation::new(m_a, m_b, IntMat::from_rows(&rows), copies)
    }
}

/// Lattice presentation to group presentation via Smith Normal Form.
pub fn group_from_lattice(lp: &LatticePresentation) -> Result<GroupPresentation> {
    let m = lp.m_a + lp.m_b;
    if lp.hnf.det() == 0 {
        return Err(Error::InfiniteGroup(
            "rank-deficient lattice; use the infinite template path".into(),
        ));
    }
    let (d, _u, v) = smith_normal_form(&lp.hnf);
    // Z^m / Lambda: coordinates of [w] are (w . V) mod diag(d), keeping
    // components with d_i > 1.
    let kept: Vec<usize> = (0..m).filter(|&i| d[(i, i)] != 1).collect();
    let mut orders: Vec<i64> = kept.iter().map(|&i| d[(i, i)]).collect();
    let class_of = |w: &[i64]| -> GroupElement {
        kept.iter()
            .map(|&i| {
                let mut acc = 0i64;
                for (j, &wj) in w.iter().enumerate() {
                    acc += wj * v[(j, i)];
                }
                acc.rem_euclid(d[(i, i)])
            })
            .collect()
    };
    let zero = vec![0i64; m];
    let mut a_set: Vec<GroupElement> = vec![class_of(&zero)];
    for i in 0..lp.m_a {
        let mut e = zero.clone();
        e[i] = 1;
        a_set.push(class_of(&e));
    }
    let mut b_set: Vec<GroupElement> = vec![class_of(&zero)];
    for i in lp.m_a..m {
        let mut e = zero.clone();
        e[i] = 1;
        b_set.push(class_of(&e));
    }
    if lp.n_copies > 1 {
        orders.push(lp.n_copies);
        for e in a_set.iter_mut().chain(b_set.iter_mut()) {
            e.push(0);
        }
    }
    GroupPresentation::new(orders, a_set, b_set)
}

/// Group presentation to lattice presentation: translate A and B to contain
/// the identity, take the relation lattice of the non-identity generators,
/// and reduce to HNF. Translated presentations of the same code map to the
/// same lattice.
pub fn lattice_from_group(gp: &GroupPresentation) -> Result<LatticePresentation> {
    if gp.a_set.is_empty() || gp.b_set.is_empty() {
        return Err(Error::InvalidCode("A and B must be non-empty".into()));
    }
    let a0 = gp.neg(&gp.a_set[0]);
    let b0 = gp.neg(&gp.b_set[0]);
    let a_gens: Vec<GroupElement> = gp.a_set[1..].iter().map(|e| gp.add(e, &a0)).collect();
    let b_gens: Vec<GroupElement> = gp.b_set[1..].iter().map(|e| gp.add(e, &b0)).collect();
    let gens: Vec<GroupElement> = a_gens.iter().chain(&b_gens).cloned().collect();
    let m = gens.len();
    let k = gp.cyclic_orders.len();
    let subgroup = gp.subgroup(&gens);
    let n_copies = gp.order() / subgroup.len() as i64;

    if m == 0 {
        return LatticePresentation::new(0, 0, IntMat::zeros(0, 0), n_copies);
    }
    // Relation lattice: kernel of Z^m -> G, x -> sum x_i gens_i.
    // Stack [M; diag(orders)] and project the integer kernel onto x.
    let mut stacked = IntMat::zeros(m + k, k);
    for (i, g) in gens.iter().enumerate() {
        for j in 0..k {
            stacked[(i, j)] = g[j];
        }
    }
    for j in 0..k {
        stacked[(m + j, j)] = gp.cyclic_orders[j];
    }
    let kernel = left_kernel(&stacked);
    let mut rel_rows = Vec::new();
    for i in 0..kernel.rows {
        rel_rows.push(kernel.row(i)[..m].to_vec());
    }
    let (h, _) = hnf_lower(&IntMat::from_rows(&rel_rows));
    // Drop zero rows at the top; the relation lattice is full rank m.
    let nonzero: Vec<Vec<i64>> = (0..h.rows)
        .filter(|&i| h.row(i).iter().any(|&v| v != 0))
        .map(|i| h.row(i).to_vec())
        .collect();
    if nonzero.len() != m {
        return Err(Error::InvalidCode("relation lattice is rank-deficient".into()));
    }
    LatticePresentation::new(a_gens.len(), b_gens.len(), IntMat::from_rows(&nonzero), n_copies)
}

/// Build the CSS code of a finite group presentation.
pub fn build_code(gp: &GroupPresentation) -> Result<StabilizerCode> {
    let g_order = gp.order() as usize;
    let n = 2 * g_order;
    let elements = gp.elements();
    let mut labels = vec![String::new(); n];
    for e in &elements {
        let idx = gp.element_index(e);
        let tag = |e: &[i64]| {
            e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        };
        labels[idx] = format!("L,({})", tag(e));
        labels[g_order + idx] = format!("R,({})", tag(e));
    }
    let mut x_checks = Vec::with_capacity(g_order);
    let mut z_checks = Vec::with_capacity(g_order);
    for g in &elements {
        let mut x_bits = BitVec::zeros(n);
        for a in &gp.a_set {
            x_bits.set(gp.element_index(&gp.add(a, g)), true);
        }
        for b in &gp.b_set {
            x_bits.set(g_order + gp.element_index(&gp.add(b, g)), true);
        }
        x_checks.push(PauliString::from_bits(n, x_bits, BitVec::zeros(n)));
        let mut z_bits = BitVec::zeros(n);
        for b in &gp.b_set {
            z_bits.set(gp.element_index(&gp.add(&gp.neg(b), g)), true);
        }
        for a in &gp.a_set {
            z_bits.set(g_order + gp.element_index(&gp.add(&gp.neg(a), g)), true);
        }
        z_checks.push(PauliString::from_bits(n, BitVec::zeros(n), z_bits));
    }
    Ok(StabilizerCode::new(n, x_checks, z_checks)?.with_labels(labels))
}

/// The qubit permutation realising ZX-duality: q(L, g) <-> q(R, -g).
/// Conjugating by transversal Hadamard and this permutation maps the code to
/// the code of `(G, B^{ -1}, A^{-1})`.
pub fn zx_dual_permutation(gp: &GroupPresentation) -> Vec<usize> {
    let g_order = gp.order() as usize;
    let elements = gp.elements();
    let mut perm = vec![0; 2 * g_order];
    for e in &elements {
        let i = gp.element_index(e);
        let j = gp.element_index(&gp.neg(e));
        perm[i] = g_order + j;
        perm[g_order + i] = j;
    }
    perm
}

pub fn zx_dual_presentation(gp: &GroupPresentation) -> GroupPresentation {
    GroupPresentation::new(
        gp.cyclic_orders.clone(),
        gp.b_set.iter().map(|b| gp.neg(b)).collect(),
        gp.a_set.iter().map(|a| gp.neg(a)).collect(),
    )
    .expect("dual of valid presentation is valid")
}

/// Enumerate canonical lattice presentations of dimension `m_a + m_b` with
/// determinant in `det_range`. Every HNF matrix with determinant in range is
/// generated exactly once; residual symmetries (ZX-duality when
/// `m_a == m_b`, element reorderings within A and within B) are removed by
/// keeping only lexicographically-minimal representatives.
pub fn enumerate_lattices(
    m_a: usize,
    m_b: usize,
    det_range: std::ops::RangeInclusive<i64>,
) -> Vec<LatticePresentation> {
    let m = m_a + m_b;
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    for det in det_range {
        if det <= 0 {
            continue;
        }
        for h in hnf_matrices_with_det(m, det) {
            let canon = canonical_lattice_matrix(m_a, m_b, &h);
            if seen.insert(canon.data.clone()) {
                // Emit the canonical representative itself.
                out.push(
                    LatticePresentation::new(m_a, m_b, canon, 1)
                        .expect("canonical form is a valid HNF"),
                );
            }
        }
    }
    out
}

/// All lower-triangular HNF matrices of size m with the given determinant.
pub fn hnf_matrices_with_det(m: usize, det: i64) -> Vec<IntMat> {
    let mut out = Vec::new();
    let mut diag = vec![0i64; m];
    fill_diagonal(m, det, 0, &mut diag, &mut out);
    out
}

fn fill_diagonal(m: usize, remaining: i64, i: usize, diag: &mut Vec<i64>, out: &mut Vec<IntMat>) {
    if i == m {
        if remaining == 1 {
            emit_below_diagonal(m, diag, out);
        }
        return;
    }
    let mut d = 1;
    while d <= remaining {
        if remaining % d == 0 {
            diag[i] = d;
            fill_diagonal(m, remaining / d, i + 1, diag, out);
        }
        d += 1;
    }
}

fn emit_below_diagonal(m: usize, diag: &[i64], out: &mut Vec<IntMat>) {
    // Below-diagonal slots (i, j), i > j, each in [0, diag[j]).
    let slots: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    let mut values = vec![0i64; slots.len()];
    loop {
        let mut h = IntMat::zeros(m, m);
        for i in 0..m {
            h[(i, i)] = diag[i];
        }
        for (s, &(i, j)) in slots.iter().enumerate() {
            h[(i, j)] = values[s];
        }
        out.push(h);
        // Odometer increment.
        let mut s = 0;
        loop {
            if s == slots.len() {
                return;
            }
            values[s] += 1;
            if values[s] < diag[slots[s].1] {
                break;
            }
            values[s] = 0;
            s += 1;
        }
    }
}

/// Lexicographically-minimal HNF over the residual symmetry orbit.
pub fn canonical_lattice_matrix(m_a: usize, m_b: usize, h: &IntMat) -> IntMat {
    let mut best: Option<IntMat> = None;
    for t in symmetry_transforms(m_a, m_b) {
        let transformed = transform_lattice(h, &t);
        let (hn, _) = hnf_lower(&transformed);
        if best.as_ref().is_none_or(|b| hn.data < b.data) {
            best = Some(hn);
        }
    }
    best.expect("orbit is non-empty")
}

/// Change-of-generator transforms: for each block, the full symmetric group
/// on the block's `m + 1` defining elements (identity plus generators),
/// realised as unimodular matrices; plus the block swap when sizes match.
fn symmetry_transforms(m_a: usize, m_b: usize) -> Vec<IntMat> {
    let a_ms = affine_symmetries(m_a);
    let b_ms = affine_symmetries(m_b);
    let m = m_a + m_b;
    let mut out = Vec::new();
    for am in &a_ms {
        for bm in &b_ms {
            // Block diagonal.
            let mut t = IntMat::zeros(m, m);
            for i in 0..m_a {
                for j in 0..m_a {
                    t[(i, j)] = am[(i, j)];
                }
            }
            for i in 0..m_b {
                for j in 0..m_b {
                    t[(m_a + i, m_a + j)] = bm[(i, j)];
                }
            }
            out.push(t.clone());
            if m_a == m_b {
                // Compose with the block swap (ZX-duality; the inversion part
                // preserves the lattice and is dropped).
                let mut s = IntMat::zeros(m, m);
                for i in 0..m_a {
                    for j in 0..m_a {
                        s[(i, m_a + j)] = t[(i, j)];
                        s[(m_a + i, j)] = t[(m_a + i, m_a + j)];
                    }
                }
                out.push(s);
            }
        }
    }
    out
}

/// The symmetric group on the m+1 points {0, e_1, ..., e_m} acting by
/// "permute then translate the image of 0 back to 0", as matrices whose row i
/// is the old-coordinate vector of the new generator i.
fn affine_symmetries(m: usize) -> Vec<IntMat> {
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..=m).collect();
    permutations(&mut p, 0, &mut perms);
    let coord = |point: usize| -> Vec<i64> {
        let mut v = vec![0i64; m];
        if point > 0 {
            v[point - 1] = 1;
        }
        v
    };
    perms
        .into_iter()
        .map(|perm| {
            let origin = coord(perm[0]);
            let rows: Vec<Vec<i64>> = (1..=m)
                .map(|i| {
                    coord(perm[i])
                        .iter()
                        .zip(&origin)
                        .map(|(a, b)| a - b)
                        .collect()
                })
                .collect();
            IntMat::from_rows(&rows)
        })
        .collect()
}

fn permutations(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, out);
        p.swap(k, i);
    }
}

/// New-coordinate lattice generators: rows transform as v_new = v_old · Tinv,
/// but since we only need the lattice (row space over Z), applying the
/// inverse-transpose is equivalent to right-multiplying by the adjugate up to
/// unimodular factors; we use exact inverse via the unimodular property.
fn transform_lattice(h: &IntMat, t: &IntMat) -> IntMat {
    // t rows = old coords of new generators; v_old = v_new · t, so
    // v_new = v_old · t^{-1}. t is unimodular; invert over the integers.
    let tinv = unimodular_inverse(t);
    h.mul(&tinv)
}

fn unimodular_inverse(t: &IntMat) -> IntMat {
    let n = t.rows;
    // Gauss-Jordan over the rationals would do; integer-safe approach:
    // use the HNF machinery on [t | I] row-style. For unimodular t the HNF
    // of t is I and the transform matrix is t^{-1}.
    let (h, u) = hnf_lower(t);
    debug_assert_eq!(h, IntMat::identity(n), "transform not unimodular");
    u
}

/// Translation-invariant template on G = Z x Z whose checks are generated on
/// demand for any finite window of group elements.
#[derive(Clone, Debug)]
pub struct InfiniteTemplate {
    pub a_set: Vec<[i64; 2]>,
    pub b_set: Vec<[i64; 2]>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TemplateKind {
    Surface,
    HexColour,
}

/// Labels for infinite-template qubits: side and plane coordinate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PlaneQubit {
    pub right: bool,
    pub pos: [i64; 2],
}

pub fn infinite_template(kind: TemplateKind) -> InfiniteTemplate {
    match kind {
        TemplateKind::Surface => InfiniteTemplate {
            a_set: vec![[0, 0], [1, 0]],
            b_set: vec![[0, 0], [0, 1]],
        },
        TemplateKind::HexColour => InfiniteTemplate {
            a_set: vec![[0, 0], [1, 0], [0, 1]],
            b_set: vec![[0, 0], [-1, 0], [0, -1]],
        },
    }
}

impl InfiniteTemplate {
    /// Support of the X-check at g, as plane qubits.
    pub fn x_check(&self, g: [i64; 2]) -> Vec<PlaneQubit> {
        let mut out: Vec<PlaneQubit> = self
            .a_set
            .iter()
            .map(|a| PlaneQubit { right: false, pos: [a[0] + g[0], a[1] + g[1]] })
            .collect();
        out.extend(
            self.b_set
                .iter()
                .map(|b| PlaneQubit { right: true, pos: [b[0] + g[0], b[1] + g[1]] }),
        );
        out
    }

    /// Support of the Z-check at g.
    pub fn z_check(&self, g: [i64; 2]) -> Vec<PlaneQubit> {
        let mut out: Vec<PlaneQubit> = self
            .b_set
            .iter()
            .map(|b| PlaneQubit { right: false, pos: [g[0] - b[0], g[1] - b[1]] })
            .collect();
        out.extend(
            self.a_set
                .iter()
                .map(|a| PlaneQubit { right: true, pos: [g[0] - a[0], g[1] - a[1]] }),
        );
        out
    }

    /// Stabiliser weight (identical for every check).
    pub fn check_weight(&self) -> usize {
        self.a_set.len() + self.b_set.len()
    }
}

// Named constructors for the code families used throughout the tests.

/// Unrotated toric code: G = Z_d x Z_d, A = {1, x}, B = {1, y}; [[2d^2, 2, d]].
pub fn toric_presentation(d: i64) -> GroupPresentation {
    GroupPresentation::new(
        vec![d, d],
        vec![vec![0, 0], vec![1, 0]],
        vec![vec![0, 0], vec![0, 1]],
    )
    .expect("valid toric presentation")
}

pub fn toric_code(d: i64) -> Result<StabilizerCode> {
    build_code(&toric_presentation(d))
}

/// Rotated toric code, even d: G = Z_d x Z_{d/2}, A = {1, x}, B = {1, xy}.
pub fn rotated_toric_presentation(d: i64) -> GroupPresentation {
    assert!(d % 2 == 0, "rotated toric presentation needs even d");
    GroupPresentation::new(
        vec![d, d / 2],
        vec![vec![0, 0], vec![1, 0]],
        vec![vec![0, 0], vec![1, 1]],
    )
    .expect("valid rotated toric presentation")
}

/// Rotated toric code, odd d: G = Z_{(d^2+1)/2}, A = {1, x}, B = {1, x^d}.
pub fn rotated_toric_odd_presentation(d: i64) -> GroupPresentation {
    assert!(d % 2 == 1);
    GroupPresentation::new(
        vec![(d * d + 1) / 2],
        vec![vec![0], vec![1]],
        vec![vec![0], vec![d]],
    )
    .expect("valid odd rotated toric presentation")
}

/// Hex colour code on a torus, d = 0 mod 4: G = Z_{3d/4} x Z_{3d/4},
/// A = {1, x, y}, B = A^{-1}; [[9d^2/8, 4, d]].
pub fn colour_torus_presentation(d: i64) -> GroupPresentation {
    assert!(d % 4 == 0, "colour torus presentation needs d = 0 mod 4");
    let s = 3 * d / 4;
    GroupPresentation::new(
        vec![s, s],
        vec![vec![0, 0], vec![1, 0], vec![0, 1]],
        vec![vec![0, 0], vec![s - 1, 0], vec![0, s - 1]],
    )
    .expect("valid colour torus presentation")
}

/// The [[72, 12, 6]] bivariate bicycle code in its lattice presentation.
pub fn half_gross_lattice() -> LatticePresentation {
    LatticePresentation::new(
        2,
        2,
        IntMat::from_rows(&[
            vec![6, 0, 0, 0],
            vec![2, 2, 0, 0],
            vec![3, 0, 3, 0],
            vec![4, 1, 1, 1],
        ]),
        1,
    )
    .expect("valid half-gross lattice")
}
