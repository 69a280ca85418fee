//! Contraction-tree diagrams and morphing circuits.
//!
//! A contraction tree is a rooted, layer-labelled tree over a stabiliser's
//! support; its edges are the CNOTs that compress the stabiliser onto the
//! root for measurement. A diagram assigns every mid-cycle check to at least
//! one contraction round; compiling it yields a [`MorphingCircuit`] whose
//! measurement round `t` applies `R_{t-1 mod J}`, `F_{t-1 mod J}^dag`,
//! `F_{t mod J}`, `M_{t mod J}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::clifford::{conjugate_in_place, CliffordGate};
use crate::code::{PauliType, StabilizerCode};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::pauli::PauliString;

pub mod boundary;
pub mod normal;
pub mod transform;

/// Reference to a mid-cycle check by type and index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CheckRef {
    pub pauli_type: PauliType,
    pub index: usize,
}

impl std::fmt::Display for CheckRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.pauli_type, self.index)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub layer: u32,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractionTree {
    pub check: CheckRef,
    pub root: usize,
    pub edges: Vec<TreeEdge>,
}

impl ContractionTree {
    pub fn depth(&self) -> u32 {
        self.edges.iter().map(|e| e.layer).max().unwrap_or(0)
    }

    /// Vertices of the tree (root plus edge endpoints).
    pub fn vertices(&self) -> BTreeSet<usize> {
        let mut v: BTreeSet<usize> = self.edges.iter().flat_map(|e| [e.a, e.b]).collect();
        v.insert(self.root);
        v
    }

    /// Orient each edge away from the root: (parent, child, layer).
    /// Fails if the edges do not form a tree rooted at `root`.
    pub fn oriented_edges(&self) -> Result<Vec<(usize, usize, u32)>> {
        let mut adj: BTreeMap<usize, Vec<(usize, u32)>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(e.a).or_default().push((e.b, e.layer));
            adj.entry(e.b).or_default().push((e.a, e.layer));
        }
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        seen.insert(self.root);
        let mut stack = vec![self.root];
        while let Some(p) = stack.pop() {
            if let Some(neigh) = adj.get(&p) {
                for &(c, layer) in neigh {
                    if seen.insert(c) {
                        out.push((p, c, layer));
                        stack.push(c);
                    }
                }
            }
        }
        if out.len() != self.edges.len() {
            return Err(Error::InvalidDiagram(format!(
                "edges of {} do not form a tree rooted at {}",
                self.check, self.root
            )));
        }
        Ok(out)
    }

    /// The CNOT realising one oriented edge, with the orientation forced by
    /// the check type: X-contraction puts the control root-ward, Z-contraction
    /// mirrors it.
    pub fn edge_gate(&self, parent: usize, child: usize) -> CliffordGate {
        match self.check.pauli_type {
            PauliType::X => CliffordGate::Cnot { control: parent, target: child },
            PauliType::Z => CliffordGate::Cnot { control: child, target: parent },
        }
    }

    /// Gates of this tree grouped by layer, 1-indexed.
    pub fn gates_by_layer(&self) -> Result<BTreeMap<u32, Vec<CliffordGate>>> {
        let mut out: BTreeMap<u32, Vec<CliffordGate>> = BTreeMap::new();
        for (p, c, layer) in self.oriented_edges()? {
            out.entry(layer).or_default().push(self.edge_gate(p, c));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct ContractionTreeDiagram {
    pub mid_cycle: StabilizerCode,
    pub rounds: usize,
    /// (round in 1..=rounds, tree) for every contracting occurrence.
    pub assignment: Vec<(usize, ContractionTree)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    NotATree { check: CheckRef, detail: String },
    SupportMismatch { check: CheckRef, detail: String },
    Parallelisability { round: usize, layer: u32, first: CheckRef, second: CheckRef },
    Properness { round: usize, layer: u32, check: CheckRef },
    GateContractsNothing { round: usize, layer: u32, gate: (usize, usize) },
    Expansion { round: usize, layer: u32, check: CheckRef },
    DependentRound { round: usize },
    Uncovered { check: CheckRef },
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// One measurement/reset basis entry.
pub type BasisQubit = (usize, PauliType);

#[derive(Clone, Debug)]
pub struct Round {
    pub resets: Vec<BasisQubit>,
    pub layers: Vec<Vec<CliffordGate>>,
    pub measurements: Vec<BasisQubit>,
    /// Mid-cycle check contracted onto each measurement, aligned by index.
    pub contracts: Vec<CheckRef>,
}

#[derive(Clone, Debug)]
pub struct MorphingCircuit {
    pub n: usize,
    pub mid_cycle: StabilizerCode,
    pub rounds: Vec<Round>,
}

impl MorphingCircuit {
    pub fn num_rounds(&self) -> usize {
        self.rounds.len()
    }

    pub fn check(&self, c: CheckRef) -> &PauliString {
        &self.mid_cycle.checks(c.pauli_type)[c.index]
    }

    /// Conjugate a mid-cycle Pauli forward through round j's contraction
    /// circuit F_j (rounds are 1-indexed).
    pub fn conjugate_forward(&self, p: &PauliString, round: usize) -> Result<PauliString> {
        let mut out = p.clone();
        for layer in &self.rounds[round - 1].layers {
            for g in layer {
                conjugate_in_place(&mut out, g)?;
            }
        }
        Ok(out)
    }

    /// All two-qubit couplings used anywhere in the circuit.
    pub fn couplings(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in &self.rounds {
            for layer in &r.layers {
                for g in layer {
                    let qs = g.qubits();
                    if qs.len() == 2 {
                        out.push((qs[0], qs[1]));
                    }
                }
            }
        }
        out
    }

    /// Maximum number of distinct two-qubit partners over all qubits.
    pub fn connectivity_degree(&self) -> usize {
        crate::code::connectivity_degree(self.couplings(), self.n)
    }

    /// Checks contracting in round j, in measurement order.
    pub fn contracting_set(&self, round: usize) -> &[CheckRef] {
        &self.rounds[round - 1].contracts
    }
}

/// Validate a contraction-tree diagram: tree structure, per-round
/// parallelisability and properness, the purely-contracting conditions,
/// round independence, and coverage.
pub fn validate_diagram(diagram: &ContractionTreeDiagram) -> ValidationReport {
    let mut report = ValidationReport::default();
    let code = &diagram.mid_cycle;

    // Tree structure and support.
    for (_, tree) in &diagram.assignment {
        let check = code.checks(tree.check.pauli_type).get(tree.check.index);
        let Some(check) = check else {
            report.violations.push(Violation::SupportMismatch {
                check: tree.check,
                detail: "check index out of range".into(),
            });
            continue;
        };
        let support: BTreeSet<usize> = check.support().into_iter().collect();
        if tree.oriented_edges().is_err() {
            report.violations.push(Violation::NotATree {
                check: tree.check,
                detail: "edges not a tree rooted at root".into(),
            });
            continue;
        }
        if tree.vertices() != support {
            report.violations.push(Violation::SupportMismatch {
                check: tree.check,
                detail: format!(
                    "tree vertices {:?} != check support {:?}",
                    tree.vertices(),
                    support
                ),
            });
        }
    }
    if !report.is_valid() {
        return report;
    }

    for round in 1..=diagram.rounds {
        let trees: Vec<&ContractionTree> = diagram
            .assignment
            .iter()
            .filter(|(r, _)| *r == round)
            .map(|(_, t)| t)
            .collect();
        if trees.is_empty() {
            continue;
        }
        validate_round(code, round, &trees, &mut report);

        // Independence of the round's contracting set.
        let mut rows = BitMatrix::new(2 * code.n);
        for t in &trees {
            let c = &code.checks(t.check.pauli_type)[t.check.index];
            let mut row = crate::gf2::BitVec::zeros(2 * code.n);
            for i in c.x_bits().iter_ones() {
                row.set(i, true);
            }
            for i in c.z_bits().iter_ones() {
                row.set(code.n + i, true);
            }
            rows.push_row(row);
        }
        if rows.rank() != trees.len() {
            report.violations.push(Violation::DependentRound { round });
        }
    }

    // Coverage: every check contracted somewhere.
    let covered: BTreeSet<CheckRef> =
        diagram.assignment.iter().map(|(_, t)| t.check).collect();
    for t in [PauliType::X, PauliType::Z] {
        for i in 0..code.checks(t).len() {
            let c = CheckRef { pauli_type: t, index: i };
            if !covered.contains(&c) {
                report.violations.push(Violation::Uncovered { check: c });
            }
        }
    }
    report
}

fn validate_round(
    code: &StabilizerCode,
    round: usize,
    trees: &[&ContractionTree],
    report: &mut ValidationReport,
) {
    let max_layer = trees.iter().map(|t| t.depth()).max().unwrap_or(0);
    let per_tree_layers: Vec<BTreeMap<u32, Vec<CliffordGate>>> =
        trees.iter().map(|t| t.gates_by_layer().expect("validated above")).collect();

    // Parallelisability: overlapping same-layer gates must be identical.
    for layer in 1..=max_layer {
        let mut owner: HashMap<usize, (CheckRef, CliffordGate)> = HashMap::new();
        for (t, layers) in trees.iter().zip(&per_tree_layers) {
            for g in layers.get(&layer).map_or(&[][..], |v| v) {
                for q in g.qubits() {
                    match owner.get(&q) {
                        Some((other, og)) if og != g => {
                            report.violations.push(Violation::Parallelisability {
                                round,
                                layer,
                                first: *other,
                                second: t.check,
                            });
                        }
                        _ => {
                            owner.insert(q, (t.check, *g));
                        }
                    }
                }
            }
        }
    }

    // Combined layers: dedup identical gates.
    let combined: Vec<Vec<CliffordGate>> = (1..=max_layer)
        .map(|layer| {
            let mut seen = BTreeSet::new();
            let mut gates = Vec::new();
            for layers in &per_tree_layers {
                for g in layers.get(&layer).map_or(&[][..], |v| v) {
                    let key = format!("{g:?}");
                    if seen.insert(key) {
                        gates.push(*g);
                    }
                }
            }
            gates
        })
        .collect();

    // Properness + non-expansion + per-gate contraction, layer by layer.
    let mut combined_state: Vec<PauliString> = trees
        .iter()
        .map(|t| code.checks(t.check.pauli_type)[t.check.index].clone())
        .collect();
    let mut own_state = combined_state.clone();
    for (layer_idx, gates) in combined.iter().enumerate() {
        let layer = layer_idx as u32 + 1;
        // Per-gate condition: each gate shrinks at least one contracting check.
        for g in gates {
            let mut contracts_something = false;
            for s in &combined_state {
                let before = s.weight();
                let mut after = s.clone();
                if conjugate_in_place(&mut after, g).is_err() {
                    continue;
                }
                if after.weight() < before {
                    contracts_something = true;
                    break;
                }
            }
            if !contracts_something {
                let qs = g.qubits();
                report.violations.push(Violation::GateContractsNothing {
                    round,
                    layer,
                    gate: (qs[0], qs[1.min(qs.len() - 1)]),
                });
            }
        }
        for (i, t) in trees.iter().enumerate() {
            let before = combined_state[i].weight();
            for g in gates {
                conjugate_in_place(&mut combined_state[i], g).ok();
            }
            if combined_state[i].weight() > before {
                report.violations.push(Violation::Expansion {
                    round,
                    layer,
                    check: t.check,
                });
            }
            for g in per_tree_layers[i].get(&layer).map_or(&[][..], |v| v) {
                conjugate_in_place(&mut own_state[i], g).ok();
            }
            if combined_state[i].x_bits() != own_state[i].x_bits()
                || combined_state[i].z_bits() != own_state[i].z_bits()
            {
                report.violations.push(Violation::Properness {
                    round,
                    layer,
                    check: t.check,
                });
            }
        }
    }
}

/// Compile a validated diagram into a morphing circuit.
pub fn compile(diagram: &ContractionTreeDiagram) -> Result<MorphingCircuit> {
    let report = validate_diagram(diagram);
    if !report.is_valid() {
        return Err(Error::InvalidDiagram(format!(
            "{} violation(s), first: {:?}",
            report.violations.len(),
            report.violations[0]
        )));
    }
    let code = &diagram.mid_cycle;
    let mut rounds = Vec::new();
    for round in 1..=diagram.rounds {
        let trees: Vec<&ContractionTree> = diagram
            .assignment
            .iter()
            .filter(|(r, _)| *r == round)
            .map(|(_, t)| t)
            .collect();
        let max_layer = trees.iter().map(|t| t.depth()).max().unwrap_or(0);
        let mut layers: Vec<Vec<CliffordGate>> = vec![Vec::new(); max_layer as usize];
        let mut seen: Vec<BTreeSet<String>> = vec![BTreeSet::new(); max_layer as usize];
        for t in &trees {
            for (layer, gates) in t.gates_by_layer()? {
                for g in gates {
                    let key = format!("{g:?}");
                    if seen[layer as usize - 1].insert(key) {
                        layers[layer as usize - 1].push(g);
                    }
                }
            }
        }
        let mut measurements = Vec::new();
        let mut contracts = Vec::new();
        for t in &trees {
            measurements.push((t.root, t.check.pauli_type));
            contracts.push(t.check);
        }
        rounds.push(Round { resets: measurements.clone(), layers, measurements, contracts });
    }
    let circuit = MorphingCircuit { n: code.n, mid_cycle: code.clone(), rounds };
    // Contraction assertion: every contracted stabiliser ends as the
    // single-qubit measured Pauli on its root.
    for round in 1..=circuit.num_rounds() {
        assert_contractions(&circuit, round)?;
    }
    Ok(circuit)
}

/// Assert round j contracts each of its checks onto its measured qubit.
pub fn assert_contractions(circuit: &MorphingCircuit, round: usize) -> Result<()> {
    let r = &circuit.rounds[round - 1];
    for ((q, basis), check) in r.measurements.iter().zip(&r.contracts) {
        let contracted = circuit.conjugate_forward(circuit.check(*check), round)?;
        let expected = match basis {
            PauliType::X => PauliString::x_on(circuit.n, [*q]),
            PauliType::Z => PauliString::z_on(circuit.n, [*q]),
        };
        if contracted.weight() != 1
            || contracted.x_bits() != expected.x_bits()
            || contracted.z_bits() != expected.z_bits()
        {
            return Err(Error::Compilation(format!(
                "check {check} in round {round} contracts to {contracted}, expected {expected}"
            )));
        }
    }
    Ok(())
}

/// The end-cycle code of round j: expanding stabilisers conjugated through
/// F_j, projected onto the unmeasured qubits. Returns the code and the
/// original indices of the surviving qubits.
pub fn end_cycle_code(
    circuit: &MorphingCircuit,
    round: usize,
) -> Result<(StabilizerCode, Vec<usize>)> {
    let r = &circuit.rounds[round - 1];
    let measured: BTreeMap<usize, PauliType> = r.measurements.iter().copied().collect();
    let surviving: Vec<usize> = (0..circuit.n).filter(|q| !measured.contains_key(q)).collect();
    let contracted: BTreeSet<CheckRef> = r.contracts.iter().copied().collect();

    let mut x_checks = Vec::new();
    let mut z_checks = Vec::new();
    for t in [PauliType::X, PauliType::Z] {
        for (i, _) in circuit.mid_cycle.checks(t).iter().enumerate() {
            let cref = CheckRef { pauli_type: t, index: i };
            if contracted.contains(&cref) {
                continue;
            }
            let conj = circuit.conjugate_forward(circuit.check(cref), round)?;
            // Gottesman-Knill projection: components on measured qubits must
            // match the measured basis (they commute with the contracted
            // single-qubit stabilisers), and are stripped by multiplying with
            // those stabilisers.
            for (&q, &basis) in &measured {
                let (x, z) = conj.component(q);
                let clash = match basis {
                    PauliType::X => z,
                    PauliType::Z => x,
                };
                if clash {
                    return Err(Error::Compilation(format!(
                        "expanding check {cref} anticommutes with measurement at qubit {q}"
                    )));
                }
            }
            let restricted = conj.restrict(&surviving);
            if restricted.is_identity_up_to_sign() {
                continue; // fully measured away
            }
            match t {
                PauliType::X => x_checks.push(restricted),
                PauliType::Z => z_checks.push(restricted),
            }
        }
    }
    let labels = circuit.mid_cycle.qubit_labels.as_ref().map(|ls| {
        surviving.iter().map(|&q| ls[q].clone()).collect::<Vec<_>>()
    });
    let mut code = StabilizerCode::new(surviving.len(), x_checks, z_checks)?;
    if let Some(labels) = labels {
        code = code.with_labels(labels);
    }
    Ok((code, surviving))
}

/// Exact rational lower bound `mid_d / 2^depth` on the end-cycle distance.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den != 0);
        let g = gcd(num.max(1), den);
        Ratio { num: num / g, den: den / g }
    }

    pub fn le_int(&self, v: u64) -> bool {
        self.num <= v.saturating_mul(self.den)
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn end_cycle_distance_bound(mid_d: u64, depth: u32) -> Ratio {
    Ratio::new(mid_d, 1u64 << depth)
}

/// Disjoint morphing construction: greedy colouring of the check-overlap
/// graph defines the rounds; each check contracts through a balanced fan-in
/// tree of depth ceil(log2 w).
pub fn disjoint_construction(code: &StabilizerCode) -> Result<ContractionTreeDiagram> {
    let all_checks: Vec<CheckRef> = (0..code.x_checks.len())
        .map(|i| CheckRef { pauli_type: PauliType::X, index: i })
        .chain(
            (0..code.z_checks.len()).map(|i| CheckRef { pauli_type: PauliType::Z, index: i }),
        )
        .collect();
    let supports: Vec<BTreeSet<usize>> = all_checks
        .iter()
        .map(|c| code.checks(c.pauli_type)[c.index].support().into_iter().collect())
        .collect();
    // Greedy colouring in listed order.
    let mut colours: Vec<usize> = Vec::with_capacity(all_checks.len());
    for i in 0..all_checks.len() {
        let mut used = BTreeSet::new();
        for j in 0..i {
            if !supports[i].is_disjoint(&supports[j]) {
                used.insert(colours[j]);
            }
        }
        let mut c = 0;
        while used.contains(&c) {
            c += 1;
        }
        colours.push(c);
    }
    let rounds = colours.iter().max().map_or(0, |m| m + 1);
    let mut assignment = Vec::new();
    for (i, &cref) in all_checks.iter().enumerate() {
        let support: Vec<usize> = supports[i].iter().copied().collect();
        assignment.push((colours[i] + 1, fan_in_tree(cref, &support)));
    }
    Ok(ContractionTreeDiagram { mid_cycle: code.clone(), rounds, assignment })
}

/// Balanced binary fan-in tree on a support: blocks merge pairwise per layer.
pub fn fan_in_tree(check: CheckRef, support: &[usize]) -> ContractionTree {
    let mut leaders: Vec<usize> = support.to_vec();
    let mut edges = Vec::new();
    let mut layer = 1;
    while leaders.len() > 1 {
        let mut next = Vec::new();
        for pair in leaders.chunks(2) {
            if pair.len() == 2 {
                edges.push(TreeEdge { a: pair[0], b: pair[1], layer });
            }
            next.push(pair[0]);
        }
        leaders = next;
        layer += 1;
    }
    ContractionTree { check, root: support[0], edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bga;

    fn single_stab_diagram(
        n: usize,
        checks: Vec<(&str, usize, Vec<(usize, usize, u32)>)>,
    ) -> ContractionTreeDiagram {
        // checks: (pauli text, root, edges); all in round 1.
        let mut x_checks = Vec::new();
        let mut z_checks = Vec::new();
        let mut refs = Vec::new();
        for (text, _, _) in &checks {
            let p = PauliString::parse(text).unwrap();
            if p.is_pure_x() {
                refs.push(CheckRef { pauli_type: PauliType::X, index: x_checks.len() });
                x_checks.push(p);
            } else {
                refs.push(CheckRef { pauli_type: PauliType::Z, index: z_checks.len() });
                z_checks.push(p);
            }
        }
        let code = StabilizerCode::new(n, x_checks, z_checks).unwrap();
        let assignment = checks
            .iter()
            .zip(refs)
            .map(|((_, root, edges), check)| {
                (
                    1usize,
                    ContractionTree {
                        check,
                        root: *root,
                        edges: edges
                            .iter()
                            .map(|&(a, b, layer)| TreeEdge { a, b, layer })
                            .collect(),
                    },
                )
            })
            .collect();
        ContractionTreeDiagram { mid_cycle: code, rounds: 1, assignment }
    }

    #[test]
    fn overlapping_cnots_flagged() {
        // Two different CNOTs touching qubit 0 in the same layer.
        let d = single_stab_diagram(
            3,
            vec![
                ("+XXI", 0, vec![(0, 1, 1)]),
                ("+XIX", 2, vec![(2, 0, 1)]),
            ],
        );
        let report = validate_diagram(&d);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Parallelisability { .. })));
    }

    #[test]
    fn properness_counterexample_four_qubits() {
        // s1 = X0X1 contracts with edge (0,1)@1; s2 = X0X1X2X3 reuses that
        // edge and adds (2,3)@1, (0,2)@2. Layer 2's CNOT(0 -> 2) expands the
        // already-contracted s1 from X0 to X0X2: a properness violation.
        let d = single_stab_diagram(
            4,
            vec![
                ("+XXII", 0, vec![(0, 1, 1)]),
                ("+XXXX", 0, vec![(0, 1, 1), (2, 3, 1), (0, 2, 2)]),
            ],
        );
        let report = validate_diagram(&d);
        assert!(report.violations.iter().any(
            |v| matches!(v, Violation::Properness { layer: 2, .. } | Violation::Expansion { layer: 2, .. })
        ));
    }

    #[test]
    fn shared_identical_gate_is_parallelisable() {
        // Both trees use the same CNOT(0 -> 1) in layer 1; s2 continues in
        // layer 2 with an edge that doesn't disturb s1's contracted X0.
        let d = single_stab_diagram(
            4,
            vec![
                ("+XXII", 0, vec![(0, 1, 1)]),
                ("+XXXX", 2, vec![(0, 1, 1), (2, 3, 1), (2, 0, 2)]),
            ],
        );
        let report = validate_diagram(&d);
        assert!(report.is_valid(), "unexpected violations: {:?}", report.violations);
        let circuit = compile(&d).unwrap();
        assert_eq!(circuit.rounds[0].layers.len(), 2);
        assert_eq!(circuit.rounds[0].layers[0].len(), 2);
    }

    #[test]
    fn single_weight_one_stabiliser() {
        let d = single_stab_diagram(1, vec![("+X", 0, vec![])]);
        let circuit = compile(&d).unwrap();
        assert_eq!(circuit.rounds[0].layers.len(), 0);
        assert_eq!(circuit.rounds[0].measurements, vec![(0, PauliType::X)]);
    }

    #[test]
    fn disjoint_toric_round_count() {
        let code = bga::toric_code(4).unwrap();
        let diagram = disjoint_construction(&code).unwrap();
        assert_eq!(diagram.rounds, 4);
        let report = validate_diagram(&diagram);
        assert!(report.is_valid(), "{:?}", report.violations);
        let circuit = compile(&diagram).unwrap();
        // Fan-in trees on weight-4 checks: 2 layers per round.
        for r in &circuit.rounds {
            assert_eq!(r.layers.len(), 2);
        }
    }

    #[test]
    fn disjoint_colour_torus_round_count() {
        let code = bga::build_code(&bga::colour_torus_presentation(4)).unwrap();
        let diagram = disjoint_construction(&code).unwrap();
        assert_eq!(diagram.rounds, 6);
        assert!(validate_diagram(&diagram).is_valid());
    }

    #[test]
    fn mutually_disjoint_checks_single_round_per_type() {
        // Two disjoint X-checks and two disjoint Z-checks on 8 qubits:
        // X and Z overlap pairwise? Here they don't overlap at all, so one
        // round total.
        let code = StabilizerCode::new(
            8,
            vec![
                PauliString::parse("+XXIIIIII").unwrap(),
                PauliString::parse("+IIXXIIII").unwrap(),
            ],
            vec![
                PauliString::parse("+IIIIZZII").unwrap(),
                PauliString::parse("+IIIIIIZZ").unwrap(),
            ],
        )
        .unwrap();
        let diagram = disjoint_construction(&code).unwrap();
        assert_eq!(diagram.rounds, 1);
        assert!(validate_diagram(&diagram).is_valid());
    }

    #[test]
    fn distance_bound_values() {
        assert_eq!(end_cycle_distance_bound(4, 2), Ratio::new(1, 1));
        assert_eq!(end_cycle_distance_bound(8, 0), Ratio::new(8, 1));
        assert_eq!(end_cycle_distance_bound(5, 1).to_string(), "5/2");
    }

    #[test]
    fn end_cycle_keeps_k_and_qubit_count() {
        let code = bga::toric_code(4).unwrap();
        let diagram = disjoint_construction(&code).unwrap();
        let circuit = compile(&diagram).unwrap();
        for round in 1..=circuit.num_rounds() {
            let (end, surviving) = end_cycle_code(&circuit, round).unwrap();
            assert_eq!(end.n, circuit.n - circuit.rounds[round - 1].measurements.len());
            assert_eq!(surviving.len(), end.n);
            assert_eq!(end.logical_count(), code.logical_count());
        }
    }
}
