//! Eulerian circuit extraction and cycle assembly.
//!
//! The construction is the classical chain: build the transition digraph,
//! test the Eulerian conditions, extract a circuit, and fold the circuit's
//! edge words into a cyclic string by keeping each word's first letter.
//!
//! Circuit extraction is deterministic. The walk starts at the least-rank
//! vertex, always follows the unused edge of least word rank, and splices
//! detours at the earliest position where the main circuit touches a vertex
//! with unused edges. Running it twice on the same class gives the same
//! circuit, so generated cycles are reproducible byte for byte.

use crate::classes::ClassSpec;
use crate::digraph::{BalanceWitness, ConnectivityReport, TransitionDigraph};
use crate::error::{Error, Result};
use crate::word::{CyclicString, Word};

/// Why a class admits no universal cycle: its transition digraph fails one
/// of the Eulerian conditions. The checks run in this order and the first
/// failure is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonEulerianReason {
    /// The class has no words at all.
    Empty,
    /// Some vertex has unequal in- and out-degree.
    Unbalanced(BalanceWitness),
    /// The digraph splits into several weak components.
    Disconnected(ConnectivityReport),
}

impl NonEulerianReason {
    pub fn label(&self) -> &'static str {
        match self {
            NonEulerianReason::Empty => "empty",
            NonEulerianReason::Unbalanced(_) => "unbalanced",
            NonEulerianReason::Disconnected(_) => "disconnected",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EulerOutcome {
    /// Edge words in circuit order; every member word appears exactly once.
    Circuit(Vec<Word>),
    NonEulerian(NonEulerianReason),
}

/// Extracts the canonical Eulerian circuit, or reports which Eulerian
/// condition fails.
pub fn eulerian_circuit(digraph: &TransitionDigraph) -> Result<EulerOutcome> {
    if digraph.is_empty() {
        return Ok(EulerOutcome::NonEulerian(NonEulerianReason::Empty));
    }
    let balance = digraph.check_balance();
    if let Some(witness) = balance.witness {
        return Ok(EulerOutcome::NonEulerian(NonEulerianReason::Unbalanced(
            witness,
        )));
    }
    let connectivity = digraph.check_connectivity();
    if !connectivity.weakly_connected {
        return Ok(EulerOutcome::NonEulerian(NonEulerianReason::Disconnected(
            connectivity,
        )));
    }

    let vertex_count = digraph.vertex_count();
    let edge_count = digraph.edge_count();
    let mut slot_source = vec![0usize; edge_count];
    let mut cursor = vec![0usize; vertex_count];
    let mut limit = vec![0usize; vertex_count];
    for v in 0..vertex_count {
        let slots = digraph.edge_slots(v);
        cursor[v] = slots.start;
        limit[v] = slots.end;
        for slot in slots {
            slot_source[slot] = v;
        }
    }

    // next_slot threads the circuit through the edge slots; usize::MAX ends
    // the chain
    let mut next_slot = vec![usize::MAX; edge_count];
    let mut used = 0usize;

    // greedy walk from `start`: in a balanced digraph it can only get stuck
    // back at `start`, closing a subcircuit; returns its head and tail slots
    let walk = |start: usize,
                cursor: &mut Vec<usize>,
                next_slot: &mut Vec<usize>,
                used: &mut usize|
     -> (usize, usize) {
        debug_assert!(cursor[start] < limit[start]);
        let head = cursor[start];
        cursor[start] += 1;
        *used += 1;
        let mut tail = head;
        let mut at = digraph.slot_target(head);
        while cursor[at] < limit[at] {
            let slot = cursor[at];
            cursor[at] += 1;
            *used += 1;
            next_slot[tail] = slot;
            tail = slot;
            at = digraph.slot_target(slot);
        }
        debug_assert_eq!(at, start);
        (head, tail)
    };

    let mut head = {
        let (h, _) = walk(0, &mut cursor, &mut next_slot, &mut used);
        h
    };
    let mut prev: Option<usize> = None;
    let mut cur = head;
    loop {
        let v = slot_source[cur];
        if cursor[v] < limit[v] {
            let (h2, t2) = walk(v, &mut cursor, &mut next_slot, &mut used);
            next_slot[t2] = cur;
            match prev {
                Some(p) => next_slot[p] = h2,
                None => head = h2,
            }
            cur = h2;
        } else {
            prev = Some(cur);
            if next_slot[cur] == usize::MAX {
                break;
            }
            cur = next_slot[cur];
        }
    }
    assert_eq!(used, edge_count, "circuit must use every edge");

    let mut circuit = Vec::with_capacity(edge_count);
    let mut slot = head;
    loop {
        circuit.push(digraph.slot_word(slot)?);
        slot = next_slot[slot];
        if slot == usize::MAX {
            break;
        }
    }
    Ok(EulerOutcome::Circuit(circuit))
}

/// Collapses a circuit of overlapping words into the cyclic string of their
/// first letters, checking that consecutive words (and the wrap from last to
/// first) really overlap in all but one letter.
pub fn fold(circuit: &[Word]) -> Result<CyclicString> {
    if circuit.is_empty() {
        return Err(Error::EmptyCircuit);
    }
    let k = circuit[0].len();
    if k < 2 {
        return Err(Error::WordLengthTooShort(k));
    }
    for word in circuit {
        if word.len() != k {
            return Err(Error::WordLengthMismatch {
                expected: k,
                actual: word.len(),
            });
        }
    }
    let count = circuit.len();
    for position in 0..count {
        let next = (position + 1) % count;
        let here = circuit[position].letters();
        let there = circuit[next].letters();
        if here[1..] != there[..k - 1] {
            return Err(Error::BrokenOverlap { position, next });
        }
    }
    Ok(CyclicString::from_raw(
        circuit.iter().map(|w| w.letters()[0]).collect(),
    ))
}

/// A constructed universal cycle with the data needed to audit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UCycleReport {
    pub spec: ClassSpec,
    /// The cycle itself, in canonical (least) rotation when `canonical`.
    pub cycle: CyclicString,
    pub canonical: bool,
    /// The Eulerian circuit the cycle was folded from, when constructed.
    pub construction_trace: Option<Vec<Word>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenerateOutcome {
    Cycle(UCycleReport),
    NonEulerian(NonEulerianReason),
}

/// End-to-end construction: digraph, Eulerian test, circuit, fold. The
/// returned cycle is in canonical rotation.
pub fn generate(spec: &ClassSpec, budget: u64) -> Result<GenerateOutcome> {
    let digraph = TransitionDigraph::build(spec, budget)?;
    match eulerian_circuit(&digraph)? {
        EulerOutcome::NonEulerian(reason) => Ok(GenerateOutcome::NonEulerian(reason)),
        EulerOutcome::Circuit(circuit) => {
            let cycle = fold(&circuit)?.canonical();
            Ok(GenerateOutcome::Cycle(UCycleReport {
                spec: spec.clone(),
                cycle,
                canonical: true,
                construction_trace: Some(circuit),
            }))
        }
    }
}
