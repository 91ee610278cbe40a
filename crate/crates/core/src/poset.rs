//! Finite posets, interval orders built from event time windows, and
//! validated posets of extrema.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::element_set::ElementSet;
use crate::rational::ExtRational;

/// Strict partial order on `0..len`, stored as predecessor and successor sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    preds: Vec<ElementSet>,
    succs: Vec<ElementSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("relation is not irreflexive at element {0}")]
    Reflexive(usize),
    #[error("relation is not transitive: {0} < {1} < {2} but not {0} < {2}")]
    NotTransitive(usize, usize, usize),
    #[error("element {0} out of range")]
    OutOfRange(usize),
}

impl Poset {
    /// Transitive closure of the given pairs; fails when the closure has a cycle.
    pub fn from_pairs(len: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, PosetError> {
        let mut succs = alloc::vec![ElementSet::empty(len); len];
        for (a, b) in pairs {
            if a >= len || b >= len {
                return Err(PosetError::OutOfRange(a.max(b)));
            }
            succs[a].insert(b);
        }
        // Warshall closure.
        for k in 0..len {
            for i in 0..len {
                if succs[i].contains(k) {
                    let via = succs[k].clone();
                    succs[i].union_with(&via);
                }
            }
        }
        if let Some(i) = (0..len).find(|&i| succs[i].contains(i)) {
            return Err(PosetError::Reflexive(i));
        }
        Ok(Self::from_successors(succs))
    }

    /// Build from a relation that must already be a strict partial order.
    pub fn from_strict_order(len: usize, less: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let mut succs = alloc::vec![ElementSet::empty(len); len];
        for a in 0..len {
            if less(a, a) {
                return Err(PosetError::Reflexive(a));
            }
            for b in 0..len {
                if less(a, b) {
                    succs[a].insert(b);
                }
            }
        }
        for a in 0..len {
            for b in succs[a].iter() {
                for c in succs[b].iter() {
                    if !succs[a].contains(c) {
                        return Err(PosetError::NotTransitive(a, b, c));
                    }
                }
            }
        }
        Ok(Self::from_successors(succs))
    }

    fn from_successors(succs: Vec<ElementSet>) -> Self {
        let len = succs.len();
        let mut preds = alloc::vec![ElementSet::empty(len); len];
        for (a, s) in succs.iter().enumerate() {
            for b in s.iter() {
                preds[b].insert(a);
            }
        }
        Poset { preds, succs }
    }

    pub fn len(&self) -> usize {
        self.succs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succs.is_empty()
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.succs[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    /// Strict predecessors of `element`.
    pub fn predecessors(&self, element: usize) -> &ElementSet {
        &self.preds[element]
    }

    pub fn successors(&self, element: usize) -> &ElementSet {
        &self.succs[element]
    }

    /// Elements of `subset` with no strict successor inside `subset`.
    pub fn maximal_elements(&self, subset: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.len(),
            subset.iter().filter(|&v| !self.succs[v].intersects(subset)),
        )
    }

    pub fn minimal_elements(&self, subset: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.len(),
            subset.iter().filter(|&v| !self.preds[v].intersects(subset)),
        )
    }

    pub fn relation_count(&self) -> usize {
        self.succs.iter().map(ElementSet::count).sum()
    }

    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |a| self.succs[a].iter().map(move |b| (a, b)))
    }

    pub fn is_down_set(&self, set: &ElementSet) -> bool {
        set.iter().all(|q| self.preds[q].is_subset(set))
    }

    /// Size of a largest antichain, via Dilworth: `n` minus a maximum
    /// matching in the comparability bipartite graph.
    pub fn width(&self) -> usize {
        let n = self.len();
        let mut match_right: Vec<Option<usize>> = alloc::vec![None; n];
        let mut matched = 0;
        for u in 0..n {
            let mut seen = alloc::vec![false; n];
            if self.augment(u, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        n - matched
    }

    fn augment(&self, u: usize, seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for v in self.succs[u].iter() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if match_right[v].is_none_or(|w| self.augment(w, seen, match_right)) {
                match_right[v] = Some(u);
                return true;
            }
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("{0} elements is too many for brute-force enumeration without a cap")]
    TooLarge(usize),
    #[error("more than {0} linear extensions")]
    CapExceeded(usize),
}

/// Largest poset enumerated by [`linear_extensions_bruteforce`] without a cap.
pub const BRUTE_FORCE_ELEMENT_LIMIT: usize = 10;

/// Every permutation consistent with the order, in lexicographic order.
///
/// Walks all `n!` permutations, so it is only meant as a reference for
/// small posets. With `cap` set, any size is accepted but enumeration stops
/// with an error once more than `cap` extensions are found.
pub fn linear_extensions_bruteforce(p: &Poset, cap: Option<usize>) -> Result<Vec<Vec<usize>>, ExtensionError> {
    let n = p.len();
    if cap.is_none() && n > BRUTE_FORCE_ELEMENT_LIMIT {
        return Err(ExtensionError::TooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = p.relations().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut position = alloc::vec![0usize; n];
    let mut out = Vec::new();
    loop {
        for (i, &e) in perm.iter().enumerate() {
            position[e] = i;
        }
        if pairs.iter().all(|&(a, b)| position[a] < position[b]) {
            if cap.is_some_and(|c| out.len() >= c) {
                return Err(ExtensionError::CapExceeded(cap.unwrap_or_default()));
            }
            out.push(perm.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Open time window within which an extremum is known to occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeInterval {
    start: ExtRational,
    end: ExtRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("interval start {start} is not below end {end}")]
pub struct IntervalError {
    pub start: String,
    pub end: String,
}

impl TimeInterval {
    pub fn new(start: impl Into<ExtRational>, end: impl Into<ExtRational>) -> Result<Self, IntervalError> {
        let (start, end) = (start.into(), end.into());
        if start >= end {
            return Err(IntervalError {
                start: alloc::format!("{start}"),
                end: alloc::format!("{end}"),
            });
        }
        Ok(TimeInterval { start, end })
    }

    pub fn start(&self) -> &ExtRational {
        &self.start
    }

    pub fn end(&self) -> &ExtRational {
        &self.end
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalOrder {
    Before,
    After,
    Incomparable,
}

/// `a` precedes `b` exactly when `a` ends no later than `b` starts.
pub fn order_from_intervals(a: &TimeInterval, b: &TimeInterval) -> IntervalOrder {
    if a.end <= b.start {
        IntervalOrder::Before
    } else if b.end <= a.start {
        IntervalOrder::After
    } else {
        IntervalOrder::Incomparable
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtremumKind {
    Min,
    Max,
}

impl ExtremumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtremumKind::Min => "min",
            ExtremumKind::Max => "max",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremaEvent {
    pub variable: String,
    pub kind: ExtremumKind,
    pub interval: TimeInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremaError {
    #[error("no extrema events")]
    Empty,
    #[error("event {event} refers to unknown variable `{variable}`")]
    UnknownVariable { event: usize, variable: String },
    #[error("duplicate variable `{0}` in the variable list")]
    DuplicateVariable(String),
    #[error("events {0} and {1} of variable `{2}` have overlapping intervals")]
    NotTotallyOrdered(usize, usize, String),
    #[error("events {0} and {1} of variable `{2}` are consecutive extrema of the same kind")]
    NotAlternating(usize, usize, String),
}

/// Poset of extremal events, each marking exactly one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetOfExtrema {
    events: Vec<ExtremaEvent>,
    variables: Vec<String>,
    event_variable: Vec<usize>,
    chains: Vec<Vec<usize>>,
    order: Poset,
}

/// Variables in order of first appearance.
pub fn variables_in_order(events: &[ExtremaEvent]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for e in events {
        if !out.contains(&e.variable) {
            out.push(e.variable.clone());
        }
    }
    out
}

/// Order events by their intervals and check the poset-of-extrema rules:
/// each variable's events form a chain, and along that chain kinds alternate.
pub fn build_poset(events: Vec<ExtremaEvent>, variables: Vec<String>) -> Result<PosetOfExtrema, ExtremaError> {
    if events.is_empty() {
        return Err(ExtremaError::Empty);
    }
    for (i, v) in variables.iter().enumerate() {
        if variables[..i].contains(v) {
            return Err(ExtremaError::DuplicateVariable(v.clone()));
        }
    }
    let mut event_variable = Vec::with_capacity(events.len());
    for (i, e) in events.iter().enumerate() {
        let n = variables
            .iter()
            .position(|v| *v == e.variable)
            .ok_or_else(|| ExtremaError::UnknownVariable { event: i, variable: e.variable.clone() })?;
        event_variable.push(n);
    }
    let order = Poset::from_strict_order(events.len(), |a, b| {
        order_from_intervals(&events[a].interval, &events[b].interval) == IntervalOrder::Before
    })
    .expect("interval orders are strict partial orders");

    let mut chains = alloc::vec![Vec::new(); variables.len()];
    for (i, &n) in event_variable.iter().enumerate() {
        chains[n].push(i);
    }
    for (n, chain) in chains.iter_mut().enumerate() {
        for (k, &a) in chain.iter().enumerate() {
            for &b in &chain[k + 1..] {
                if !order.comparable(a, b) {
                    return Err(ExtremaError::NotTotallyOrdered(a, b, variables[n].clone()));
                }
            }
        }
        chain.sort_by(|&a, &b| {
            if order.less(a, b) {
                core::cmp::Ordering::Less
            } else if order.less(b, a) {
                core::cmp::Ordering::Greater
            } else {
                core::cmp::Ordering::Equal
            }
        });
        for w in chain.windows(2) {
            if events[w[0]].kind == events[w[1]].kind {
                return Err(ExtremaError::NotAlternating(w[0], w[1], variables[n].clone()));
            }
        }
    }
    Ok(PosetOfExtrema { events, variables, event_variable, chains, order })
}

impl PosetOfExtrema {
    pub fn events(&self) -> &[ExtremaEvent] {
        &self.events
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn dimension(&self) -> usize {
        self.variables.len()
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    /// Coordinate index of the variable marked by `event`.
    pub fn variable_of(&self, event: usize) -> usize {
        self.event_variable[event]
    }

    pub fn kind_of(&self, event: usize) -> ExtremumKind {
        self.events[event].kind
    }

    /// Events of coordinate `n`, earliest first.
    pub fn chain(&self, n: usize) -> &[usize] {
        &self.chains[n]
    }

    /// `μ(p)` as a symbol tuple: `m`/`M` at the event's variable, `-` elsewhere.
    pub fn marking(&self, event: usize) -> crate::labeled_graph::Label {
        use crate::labeled_graph::{Label, Symbol};
        let mut label = Label::uniform(Symbol::Dash, self.dimension());
        let s = match self.kind_of(event) {
            ExtremumKind::Min => Symbol::Min,
            ExtremumKind::Max => Symbol::Max,
        };
        label.set(self.variable_of(event), s);
        label
    }

    /// `x1 min`-style name of an event, numbering each variable's events.
    pub fn event_name(&self, event: usize) -> String {
        alloc::format!("{} {}", self.events[event].variable, self.events[event].kind.as_str())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::ExtRational as E;
    use alloc::vec;

    fn iv(a: E, b: E) -> TimeInterval {
        TimeInterval::new(a, b).unwrap()
    }

    fn ev(var: &str, kind: ExtremumKind, a: E, b: E) -> ExtremaEvent {
        ExtremaEvent { variable: var.into(), kind, interval: iv(a, b) }
    }

    fn n(v: i64) -> E {
        E::from(v)
    }

    pub(crate) fn four_event_poset() -> PosetOfExtrema {
        use ExtremumKind::*;
        let events = vec![
            ev("SWI4", Min, E::NegInf, n(10)),
            ev("YOX1", Min, E::NegInf, n(10)),
            ev("SWI4", Max, n(15), n(30)),
            ev("YOX1", Max, n(15), n(30)),
        ];
        build_poset(events, vec!["SWI4".into(), "YOX1".into()]).unwrap()
    }

    #[test]
    fn interval_order_cases() {
        assert_eq!(order_from_intervals(&iv(n(15), n(30)), &iv(n(35), n(45))), IntervalOrder::Before);
        assert_eq!(order_from_intervals(&iv(n(35), n(45)), &iv(n(15), n(30))), IntervalOrder::After);
        assert_eq!(order_from_intervals(&iv(n(15), n(30)), &iv(n(20), n(35))), IntervalOrder::Incomparable);
        assert_eq!(
            order_from_intervals(&iv(E::NegInf, n(10)), &iv(E::NegInf, n(10))),
            IntervalOrder::Incomparable
        );
        // Touching endpoints count as ordered.
        assert_eq!(order_from_intervals(&iv(n(0), n(10)), &iv(n(10), n(20))), IntervalOrder::Before);
    }

    #[test]
    fn interval_must_be_proper() {
        assert!(TimeInterval::new(n(3), n(3)).is_err());
        assert!(TimeInterval::new(n(3), n(1)).is_err());
    }

    #[test]
    fn four_events_relations() {
        let p = four_event_poset();
        let mut rels: Vec<_> = p.order().relations().collect();
        rels.sort();
        assert_eq!(rels, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(p.chain(0), &[0, 2]);
        assert_eq!(p.chain(1), &[1, 3]);
    }

    #[test]
    fn overlapping_same_variable_is_rejected() {
        use ExtremumKind::*;
        let events = vec![ev("SWI4", Min, n(0), n(10)), ev("SWI4", Max, n(5), n(15))];
        assert!(matches!(
            build_poset(events, vec!["SWI4".into()]),
            Err(ExtremaError::NotTotallyOrdered(0, 1, _))
        ));
    }

    #[test]
    fn repeated_kind_is_rejected() {
        use ExtremumKind::*;
        let events = vec![ev("SWI4", Min, n(0), n(1)), ev("SWI4", Min, n(2), n(3))];
        assert!(matches!(
            build_poset(events, vec!["SWI4".into()]),
            Err(ExtremaError::NotAlternating(0, 1, _))
        ));
    }

    #[test]
    fn empty_and_unknown() {
        assert_eq!(build_poset(vec![], vec!["a".into()]), Err(ExtremaError::Empty));
        let events = vec![ev("b", ExtremumKind::Min, n(0), n(1))];
        assert!(matches!(
            build_poset(events.clone(), vec!["a".into()]),
            Err(ExtremaError::UnknownVariable { .. })
        ));
        // A variable with no events is fine.
        let p = build_poset(events, vec!["b".into(), "a".into()]).unwrap();
        assert!(p.chain(1).is_empty());
    }

    #[test]
    fn extension_counts() {
        assert_eq!(linear_extensions_bruteforce(four_event_poset().order(), None).unwrap().len(), 4);
        let antichain = Poset::from_pairs(3, []).unwrap();
        assert_eq!(linear_extensions_bruteforce(&antichain, None).unwrap().len(), 6);
        let chain = Poset::from_pairs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(linear_extensions_bruteforce(&chain, None).unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn extension_limits() {
        let big = Poset::from_pairs(11, []).unwrap();
        assert_eq!(linear_extensions_bruteforce(&big, None), Err(ExtensionError::TooLarge(11)));
        let antichain = Poset::from_pairs(4, []).unwrap();
        assert_eq!(linear_extensions_bruteforce(&antichain, Some(5)), Err(ExtensionError::CapExceeded(5)));
        assert_eq!(linear_extensions_bruteforce(&antichain, Some(24)).unwrap().len(), 24);
    }

    #[test]
    fn extensions_are_lexicographic() {
        let p = Poset::from_pairs(3, [(2, 0)]).unwrap();
        let ext = linear_extensions_bruteforce(&p, None).unwrap();
        assert_eq!(ext, vec![vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0]]);
    }

    #[test]
    fn maximal_and_predecessors() {
        let p = four_event_poset();
        let all = ElementSet::full(4);
        assert_eq!(p.order().maximal_elements(&all).to_vec(), vec![2, 3]);
        assert_eq!(p.order().predecessors(2).to_vec(), vec![0, 1]);
        assert!(p.order().maximal_elements(&ElementSet::empty(4)).is_empty());
    }

    #[test]
    fn cyclic_pairs_rejected() {
        assert!(matches!(Poset::from_pairs(2, [(0, 1), (1, 0)]), Err(PosetError::Reflexive(_))));
        assert!(matches!(
            Poset::from_strict_order(3, |a, b| (a, b) == (0, 1) || (a, b) == (1, 2)),
            Err(PosetError::NotTransitive(0, 1, 2))
        ));
    }

    #[test]
    fn width_matches_examples() {
        assert_eq!(four_event_poset().order().width(), 2);
        assert_eq!(Poset::from_pairs(5, []).unwrap().width(), 5);
        assert_eq!(Poset::from_pairs(3, [(0, 1), (1, 2)]).unwrap().width(), 1);
        assert_eq!(Poset::from_pairs(0, []).unwrap().width(), 0);
    }

    #[test]
    fn marking_is_single_variable() {
        let p = four_event_poset();
        assert_eq!(alloc::format!("{}", p.marking(0)), "m-");
        assert_eq!(alloc::format!("{}", p.marking(3)), "-M");
    }
}
