//! Word-overlap transition digraphs.
//!
//! Vertices are the length k-1 strings that occur as the prefix or suffix of
//! some member word; each member word is one edge from its prefix to its
//! suffix. A universal cycle of the class is exactly an Eulerian circuit of
//! this digraph, so existence reduces to the classical test: nonempty,
//! balanced, and weakly connected.
//!
//! Storage is compressed sparse rows keyed by vertex index, where vertices
//! are numbered in increasing rank order and the out-edges of each vertex are
//! kept in increasing word-rank order. That ordering is what makes circuit
//! extraction deterministic.

use std::collections::BTreeMap;

use crate::classes::ClassSpec;
use crate::error::{Error, Result};
use crate::word::{rank_space, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionDigraph {
    spec: ClassSpec,
    /// Sorted ranks of the (k-1)-windows that appear.
    vertex_ranks: Vec<u64>,
    /// CSR offsets, length `vertex_count() + 1`.
    out_offsets: Vec<usize>,
    /// Target vertex index per edge slot.
    out_targets: Vec<usize>,
    /// Rank of the member word each edge slot carries.
    out_word_ranks: Vec<u64>,
    in_degrees: Vec<usize>,
}

/// A vertex whose in- and out-degree differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceWitness {
    pub vertex: Word,
    pub in_degree: usize,
    pub out_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    /// Least-rank unbalanced vertex, when any.
    pub witness: Option<BalanceWitness>,
    /// How many vertices have each (in, out) degree pair.
    pub degree_histogram: BTreeMap<(usize, usize), usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub weakly_connected: bool,
    pub component_count: usize,
    /// Component sizes, ordered by each component's least-rank vertex.
    pub component_sizes: Vec<usize>,
    /// The least-rank vertex of each component, same order.
    pub sample_vertices: Vec<Word>,
}

impl TransitionDigraph {
    /// Enumerates the class and assembles its transition digraph. Words must
    /// be at least two letters long for prefix and suffix windows to exist.
    pub fn build(spec: &ClassSpec, budget: u64) -> Result<Self> {
        let k = spec.word_length();
        if k < 2 {
            return Err(Error::WordLengthTooShort(k));
        }
        let n = spec.alphabet().len() as u64;
        let suffix_space = match rank_space(spec.alphabet().len(), k - 1) {
            Some(space) => space,
            // if even the window space overflows, the word space certainly
            // exceeds any budget
            None => {
                return Err(Error::BudgetExceeded {
                    required: u64::MAX,
                    budget,
                })
            }
        };
        let mut sources: Vec<u64> = Vec::new();
        let mut targets: Vec<u64> = Vec::new();
        let mut word_ranks: Vec<u64> = Vec::new();
        spec.for_each_member(budget, |rank, _| {
            sources.push(rank / n);
            targets.push(rank % suffix_space);
            word_ranks.push(rank);
        })?;

        let mut vertex_ranks: Vec<u64> = sources.iter().chain(targets.iter()).copied().collect();
        vertex_ranks.sort_unstable();
        vertex_ranks.dedup();
        let vertex_count = vertex_ranks.len();
        let edge_count = sources.len();
        let index_of = |rank: u64| {
            vertex_ranks
                .binary_search(&rank)
                .expect("every endpoint rank was collected")
        };

        let mut out_offsets = vec![0usize; vertex_count + 1];
        for &s in &sources {
            out_offsets[index_of(s) + 1] += 1;
        }
        for i in 0..vertex_count {
            out_offsets[i + 1] += out_offsets[i];
        }
        // word rank order visits sources in non-decreasing order, so filling
        // slots left to right keeps each vertex's edges sorted by word rank
        let mut cursor = out_offsets[..vertex_count].to_vec();
        let mut out_targets = vec![0usize; edge_count];
        let mut out_word_ranks = vec![0u64; edge_count];
        let mut in_degrees = vec![0usize; vertex_count];
        for i in 0..edge_count {
            let s = index_of(sources[i]);
            let t = index_of(targets[i]);
            out_targets[cursor[s]] = t;
            out_word_ranks[cursor[s]] = word_ranks[i];
            cursor[s] += 1;
            in_degrees[t] += 1;
        }

        Ok(TransitionDigraph {
            spec: spec.clone(),
            vertex_ranks,
            out_offsets,
            out_targets,
            out_word_ranks,
            in_degrees,
        })
    }

    pub fn spec(&self) -> &ClassSpec {
        &self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ranks.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out_targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out_targets.is_empty()
    }

    fn check_vertex(&self, index: usize) -> Result<()> {
        if index < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex {
                index,
                count: self.vertex_count(),
            })
        }
    }

    /// The (k-1)-window at a vertex index.
    pub fn vertex_word(&self, index: usize) -> Result<Word> {
        self.check_vertex(index)?;
        Word::unrank(
            self.vertex_ranks[index],
            self.spec.word_length() - 1,
            self.spec.alphabet(),
        )
    }

    /// Index of a (k-1)-window, if it occurs in the digraph.
    pub fn vertex_index(&self, window: &Word) -> Option<usize> {
        if window.len() + 1 != self.spec.word_length() {
            return None;
        }
        let rank = window.rank(self.spec.alphabet()).ok()?;
        self.vertex_ranks.binary_search(&rank).ok()
    }

    pub fn out_degree(&self, index: usize) -> Result<usize> {
        self.check_vertex(index)?;
        Ok(self.out_offsets[index + 1] - self.out_offsets[index])
    }

    pub fn in_degree(&self, index: usize) -> Result<usize> {
        self.check_vertex(index)?;
        Ok(self.in_degrees[index])
    }

    /// Outgoing edges as (target vertex index, member word), in word rank
    /// order.
    pub fn out_edges(&self, index: usize) -> Result<Vec<(usize, Word)>> {
        self.check_vertex(index)?;
        let mut edges = Vec::with_capacity(self.out_offsets[index + 1] - self.out_offsets[index]);
        for slot in self.out_offsets[index]..self.out_offsets[index + 1] {
            let word = Word::unrank(
                self.out_word_ranks[slot],
                self.spec.word_length(),
                self.spec.alphabet(),
            )?;
            edges.push((self.out_targets[slot], word));
        }
        Ok(edges)
    }

    pub(crate) fn edge_slots(&self, index: usize) -> std::ops::Range<usize> {
        self.out_offsets[index]..self.out_offsets[index + 1]
    }

    pub(crate) fn slot_target(&self, slot: usize) -> usize {
        self.out_targets[slot]
    }

    pub(crate) fn slot_word(&self, slot: usize) -> Result<Word> {
        Word::unrank(
            self.out_word_ranks[slot],
            self.spec.word_length(),
            self.spec.alphabet(),
        )
    }

    /// Checks in-degree equals out-degree at every vertex.
    pub fn check_balance(&self) -> BalanceReport {
        let mut witness = None;
        let mut histogram: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for v in 0..self.vertex_count() {
            let out = self.out_offsets[v + 1] - self.out_offsets[v];
            let inn = self.in_degrees[v];
            *histogram.entry((inn, out)).or_insert(0) += 1;
            if inn != out && witness.is_none() {
                witness = Some(BalanceWitness {
                    vertex: self.vertex_word(v).expect("index in range"),
                    in_degree: inn,
                    out_degree: out,
                });
            }
        }
        BalanceReport {
            balanced: witness.is_none(),
            witness,
            degree_histogram: histogram,
        }
    }

    /// Checks weak connectivity and reports the component structure. An
    /// empty digraph counts as not connected: it has no circuit to offer.
    pub fn check_connectivity(&self) -> ConnectivityReport {
        let v = self.vertex_count();
        let mut parent: Vec<usize> = (0..v).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for s in 0..v {
            for slot in self.out_offsets[s]..self.out_offsets[s + 1] {
                let a = find(&mut parent, s);
                let b = find(&mut parent, self.out_targets[slot]);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut first_seen: Vec<usize> = Vec::new();
        let mut sizes: Vec<usize> = Vec::new();
        let mut slot_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        for x in 0..v {
            let root = find(&mut parent, x);
            let slot = *slot_of_root.entry(root).or_insert_with(|| {
                first_seen.push(x);
                sizes.push(0);
                sizes.len() - 1
            });
            sizes[slot] += 1;
        }
        let sample_vertices = first_seen
            .iter()
            .map(|&x| self.vertex_word(x).expect("index in range"))
            .collect();
        ConnectivityReport {
            weakly_connected: sizes.len() == 1,
            component_count: sizes.len(),
            component_sizes: sizes,
            sample_vertices,
        }
    }

    /// Whether some vertex satisfying `target` is reachable from `from` by a
    /// directed path, including the empty path.
    pub fn reaches<F>(&self, from: usize, target: F) -> Result<bool>
    where
        F: Fn(usize) -> bool,
    {
        self.check_vertex(from)?;
        if target(from) {
            return Ok(true);
        }
        let mut seen = vec![false; self.vertex_count()];
        seen[from] = true;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for slot in self.out_offsets[x]..self.out_offsets[x + 1] {
                let next = self.out_targets[slot];
                if seen[next] {
                    continue;
                }
                if target(next) {
                    return Ok(true);
                }
                seen[next] = true;
                queue.push_back(next);
            }
        }
        Ok(false)
    }

    /// Whether every vertex reaches some vertex satisfying `target`.
    /// Searches backwards from the target set so one sweep answers for all
    /// vertices.
    pub fn all_reach<F>(&self, target: F) -> bool
    where
        F: Fn(usize) -> bool,
    {
        let v = self.vertex_count();
        let mut in_offsets = vec![0usize; v + 1];
        for &t in &self.out_targets {
            in_offsets[t + 1] += 1;
        }
        for i in 0..v {
            in_offsets[i + 1] += in_offsets[i];
        }
        let mut cursor = in_offsets[..v].to_vec();
        let mut in_sources = vec![0usize; self.out_targets.len()];
        for s in 0..v {
            for slot in self.out_offsets[s]..self.out_offsets[s + 1] {
                let t = self.out_targets[slot];
                in_sources[cursor[t]] = s;
                cursor[t] += 1;
            }
        }
        let mut reached = vec![false; v];
        let mut queue = std::collections::VecDeque::new();
        for (x, r) in reached.iter_mut().enumerate() {
            if target(x) {
                *r = true;
                queue.push_back(x);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &prev in &in_sources[in_offsets[x]..in_offsets[x + 1]] {
                if !reached[prev] {
                    reached[prev] = true;
                    queue.push_back(prev);
                }
            }
        }
        reached.iter().all(|&r| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::OrderedAlphabet;
    use crate::classes::ClassKind;
    use crate::DEFAULT_BUDGET;

    fn binary() -> OrderedAlphabet {
        OrderedAlphabet::from_symbols(["0", "1"]).unwrap()
    }

    fn build(spec: &ClassSpec) -> TransitionDigraph {
        TransitionDigraph::build(spec, DEFAULT_BUDGET).unwrap()
    }

    fn word(text: &str, alphabet: &OrderedAlphabet) -> Word {
        Word::parse(text, alphabet).unwrap()
    }

    #[test]
    fn equitable_binary_length_four_splits_in_two() {
        let a = binary();
        let spec = ClassSpec::new(a.clone(), 4, ClassKind::Equitable).unwrap();
        let g = build(&spec);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        let names: Vec<String> = (0..6)
            .map(|i| g.vertex_word(i).unwrap().display(&a))
            .collect();
        assert_eq!(names, ["001", "010", "011", "100", "101", "110"]);

        let balance = g.check_balance();
        assert!(balance.balanced);
        assert_eq!(balance.witness, None);
        assert_eq!(balance.degree_histogram, BTreeMap::from([((1, 1), 6)]));

        let conn = g.check_connectivity();
        assert!(!conn.weakly_connected);
        assert_eq!(conn.component_count, 2);
        assert_eq!(conn.component_sizes, vec![4, 2]);
        let samples: Vec<String> = conn.sample_vertices.iter().map(|w| w.display(&a)).collect();
        assert_eq!(samples, ["001", "010"]);
    }

    #[test]
    fn all_binary_words_make_the_de_bruijn_digraph() {
        let a = binary();
        let spec = ClassSpec::new(a.clone(), 3, ClassKind::AllWords).unwrap();
        let g = build(&spec);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 8);
        let balance = g.check_balance();
        assert!(balance.balanced);
        assert_eq!(balance.degree_histogram, BTreeMap::from([((2, 2), 4)]));
        assert!(g.check_connectivity().weakly_connected);
        assert_eq!(g.check_connectivity().component_sizes, vec![4]);

        // edge structure of vertex 01: words 010 and 011
        let idx = g.vertex_index(&word("01", &a)).unwrap();
        assert_eq!(idx, 1);
        let edges = g.out_edges(idx).unwrap();
        let rendered: Vec<(usize, String)> =
            edges.iter().map(|(t, w)| (*t, w.display(&a))).collect();
        assert_eq!(rendered, [(2, "010".into()), (3, "011".into())]);
        assert_eq!(g.out_degree(idx).unwrap(), 2);
        assert_eq!(g.in_degree(idx).unwrap(), 2);
    }

    #[test]
    fn vertex_lookups_validate_their_input() {
        let a = binary();
        let spec = ClassSpec::new(a.clone(), 3, ClassKind::AllWords).unwrap();
        let g = build(&spec);
        assert_eq!(
            g.vertex_word(9),
            Err(Error::UnknownVertex { index: 9, count: 4 })
        );
        assert!(g.out_degree(4).is_err());
        assert_eq!(g.vertex_index(&word("011", &a)), None); // wrong length
        let injective = ClassSpec::new(
            OrderedAlphabet::generic(4).unwrap(),
            3,
            ClassKind::Injective,
        )
        .unwrap();
        let h = build(&injective);
        // "aa" is a valid window shape but no injective word touches it
        assert_eq!(
            h.vertex_index(&Word::new(vec![0, 0], injective.alphabet()).unwrap()),
            None
        );
    }

    #[test]
    fn single_letter_words_have_no_windows() {
        let spec = ClassSpec::new(binary(), 1, ClassKind::AllWords).unwrap();
        assert_eq!(
            TransitionDigraph::build(&spec, DEFAULT_BUDGET),
            Err(Error::WordLengthTooShort(1))
        );
    }

    #[test]
    fn budget_failures_propagate() {
        let spec = ClassSpec::new(binary(), 5, ClassKind::AllWords).unwrap();
        assert_eq!(
            TransitionDigraph::build(&spec, 10),
            Err(Error::BudgetExceeded {
                required: 32,
                budget: 10
            })
        );
    }

    #[test]
    fn empty_class_gives_empty_digraph() {
        let spec = ClassSpec::new(
            OrderedAlphabet::generic(3).unwrap(),
            4,
            ClassKind::Injective,
        )
        .unwrap();
        let g = build(&spec);
        assert!(g.is_empty());
        assert_eq!(g.vertex_count(), 0);
        assert!(g.check_balance().balanced);
        let conn = g.check_connectivity();
        assert!(!conn.weakly_connected);
        assert_eq!(conn.component_count, 0);
        assert_eq!(conn.component_sizes, Vec::<usize>::new());
    }

    #[test]
    fn monotone_vertex_degrees_follow_the_descent_law() {
        // every vertex window has at most one descent; a constant window has
        // degree n, a non-decreasing one i+(n-j)+1 for first letter i and
        // last letter j, and a window with an internal descent i-j+1 --
        // always with in-degree equal to out-degree
        for n in 2..=5usize {
            for k in 2..=6usize {
                let spec =
                    ClassSpec::new(OrderedAlphabet::generic(n).unwrap(), k, ClassKind::Monotone)
                        .unwrap();
                let g = build(&spec);
                for v in 0..g.vertex_count() {
                    let window = g.vertex_word(v).unwrap();
                    let w = window.letters();
                    // linear descents only: no wraparound comparison here
                    let linear = w.windows(2).filter(|p| p[0] > p[1]).count();
                    assert!(linear <= 1, "window {w:?} of a monotone word");
                    let (i, j) = (w[0], w[w.len() - 1]);
                    let expected = if w.iter().all(|&l| l == w[0]) {
                        n
                    } else if linear == 0 {
                        i + (n - j) + 1
                    } else {
                        i - j + 1
                    };
                    assert_eq!(g.out_degree(v).unwrap(), expected, "out at {w:?}");
                    assert_eq!(g.in_degree(v).unwrap(), expected, "in at {w:?}");
                }
            }
        }
    }

    #[test]
    fn lipschitz_digraphs_are_regular() {
        for n in [5usize, 7] {
            for c in [1usize, 2] {
                for k in 2..=5usize {
                    let spec = ClassSpec::new(
                        OrderedAlphabet::generic(n).unwrap().with_cyclic_metric(),
                        k,
                        ClassKind::Lipschitz { c },
                    )
                    .unwrap();
                    let g = build(&spec);
                    let degree = 2 * c + 1;
                    // the vertices are exactly the admissible windows
                    let windows = ClassSpec::new(
                        OrderedAlphabet::generic(n).unwrap().with_cyclic_metric(),
                        k - 1,
                        ClassKind::Lipschitz { c },
                    )
                    .unwrap();
                    assert_eq!(
                        g.vertex_count() as u64,
                        windows.count(DEFAULT_BUDGET).unwrap()
                    );
                    for v in 0..g.vertex_count() {
                        assert_eq!(g.out_degree(v).unwrap(), degree);
                        assert_eq!(g.in_degree(v).unwrap(), degree);
                    }
                    assert!(g.check_balance().balanced);
                }
            }
        }
    }

    fn categorized(sizes: &[usize]) -> OrderedAlphabet {
        let n: usize = sizes.iter().sum();
        let mut groups = Vec::new();
        let mut next = 0;
        for &s in sizes {
            groups.push((next..next + s).collect());
            next += s;
        }
        OrderedAlphabet::generic(n)
            .unwrap()
            .with_categories(groups)
            .unwrap()
    }

    #[test]
    fn category_walks_balance_when_group_sizes_match() {
        for (sizes, k) in [
            (vec![2usize, 2], 4usize),
            (vec![3, 3], 4),
            (vec![2, 2, 2], 5),
        ] {
            let spec = ClassSpec::new(categorized(&sizes), k, ClassKind::CyclicCategories).unwrap();
            let g = build(&spec);
            assert!(g.check_balance().balanced, "sizes {sizes:?} k {k}");
            assert!(g.check_connectivity().weakly_connected);
        }
    }

    #[test]
    fn unequal_category_sizes_can_break_balance() {
        let spec = ClassSpec::new(categorized(&[1, 1, 2]), 5, ClassKind::CyclicCategories).unwrap();
        assert_eq!(spec.count(DEFAULT_BUDGET).unwrap(), 10);
        let g = build(&spec);
        let report = g.check_balance();
        assert!(!report.balanced);
        let witness = report.witness.unwrap();
        assert_ne!(witness.in_degree, witness.out_degree);
        assert!(report.degree_histogram.keys().any(|(i, o)| i != o));
    }

    #[test]
    fn category_windows_tie_first_and_last_letters_together() {
        // when the window length is one more than a multiple of the category
        // count, both ends of every window land in the same category
        for (sizes, k) in [
            (vec![3usize, 3], 4usize),
            (vec![2, 2, 2], 5),
            (vec![3, 3], 6),
        ] {
            let a = categorized(&sizes);
            let spec = ClassSpec::new(a.clone(), k, ClassKind::CyclicCategories).unwrap();
            let g = build(&spec);
            assert!(g.vertex_count() > 0);
            for v in 0..g.vertex_count() {
                let w = g.vertex_word(v).unwrap();
                let first = a.category_of(w.letters()[0]).unwrap();
                let last = a.category_of(*w.letters().last().unwrap()).unwrap();
                assert_eq!(first, last, "window {:?}", w.letters());
            }
        }
    }

    #[test]
    fn reachability_follows_directed_paths() {
        let a = binary();
        let spec = ClassSpec::new(a.clone(), 4, ClassKind::Equitable).unwrap();
        let g = build(&spec);
        let at = |text: &str| g.vertex_index(&word(text, &a)).unwrap();
        // 010 and 101 trade places forever; they never reach 001
        assert!(!g.reaches(at("010"), |v| v == at("001")).unwrap());
        assert!(g.reaches(at("010"), |v| v == at("101")).unwrap());
        // the empty path counts
        assert!(g.reaches(at("010"), |v| v == at("010")).unwrap());
        assert!(!g.all_reach(|v| v == at("001")));
        assert!(g.all_reach(|v| g.out_degree(v).unwrap() == 1));
        assert!(g.reaches(9, |_| true).is_err());
    }

    #[test]
    fn all_reach_agrees_with_single_source_search() {
        let spec =
            ClassSpec::new(OrderedAlphabet::generic(3).unwrap(), 3, ClassKind::Onto).unwrap();
        let g = build(&spec);
        for target in 0..g.vertex_count() {
            let expected = (0..g.vertex_count()).all(|v| g.reaches(v, |x| x == target).unwrap());
            assert_eq!(g.all_reach(|x| x == target), expected, "target {target}");
        }
    }

    #[test]
    fn edges_stay_sorted_by_word_rank() {
        let spec =
            ClassSpec::new(OrderedAlphabet::generic(3).unwrap(), 4, ClassKind::Monotone).unwrap();
        let g = build(&spec);
        let a = spec.alphabet();
        let mut all_edge_words = Vec::new();
        for v in 0..g.vertex_count() {
            let ranks: Vec<u64> = g
                .out_edges(v)
                .unwrap()
                .iter()
                .map(|(_, w)| w.rank(a).unwrap())
                .collect();
            let mut sorted = ranks.clone();
            sorted.sort();
            assert_eq!(ranks, sorted);
            all_edge_words.extend(ranks);
        }
        // the edge multiset is exactly the member list
        all_edge_words.sort();
        let member_ranks: Vec<u64> = spec
            .enumerate(DEFAULT_BUDGET)
            .unwrap()
            .iter()
            .map(|w| w.rank(a).unwrap())
            .collect();
        assert_eq!(all_edge_words, member_ranks);
    }

    #[test]
    fn edges_connect_overlapping_windows() {
        let spec = ClassSpec::new(
            OrderedAlphabet::generic(3).unwrap(),
            3,
            ClassKind::Equitable,
        )
        .unwrap();
        let g = build(&spec);
        for v in 0..g.vertex_count() {
            let source = g.vertex_word(v).unwrap();
            for (t, w) in g.out_edges(v).unwrap() {
                let target = g.vertex_word(t).unwrap();
                assert_eq!(&w.letters()[..w.len() - 1], source.letters());
                assert_eq!(&w.letters()[1..], target.letters());
            }
        }
    }
}
