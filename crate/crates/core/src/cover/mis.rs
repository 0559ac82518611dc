//! Exact maximum independent set of `G(n)` for small `n`, by branch and bound
//! with domination reductions, component splitting and a greedy clique-cover
//! upper bound.

use serde::Serialize;

use crate::balls::BallTable;
use crate::caps::{check_cap, Caps};
use crate::error::Result;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependentSet {
    pub n: usize,
    pub size: usize,
    pub members: Vec<Word>,
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn full(len: usize) -> Self {
        let mut b = Bits::empty(len);
        (0..len).for_each(|i| b.set(i));
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.0.iter().map(|b| b.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn minus(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn or_assign(&mut self, other: &Bits) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a |= b);
    }

    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                (rest != 0).then(|| {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    k * 64 + i
                })
            })
        })
    }
}

struct Graph {
    /// Closed neighbourhoods.
    closed: Vec<Bits>,
}

impl Graph {
    fn degree(&self, v: usize, cand: &Bits) -> usize {
        self.closed[v].and_count(cand) - 1
    }

    /// Takes isolated vertices and drops any vertex whose closed
    /// neighbourhood contains that of an adjacent vertex.
    fn reduce(&self, cand: &mut Bits, chosen: &mut Bits) {
        loop {
            let mut changed = false;
            for v in cand.ones().collect::<Vec<_>>() {
                if !cand.has(v) {
                    continue;
                }
                let nv = self.closed[v].and(cand);
                if nv.count() == 1 {
                    chosen.set(v);
                    cand.clear(v);
                    changed = true;
                    continue;
                }
                for u in nv.ones().filter(|&u| u != v).collect::<Vec<_>>() {
                    if nv.subset_of(&self.closed[u]) {
                        cand.clear(u);
                        changed = true;
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn components(&self, cand: &Bits) -> Vec<Bits> {
        let mut left = cand.clone();
        let mut out = Vec::new();
        loop {
            let Some(start) = left.ones().next() else { break };
            let mut comp = Bits::empty(self.closed.len());
            let mut frontier = vec![start];
            comp.set(start);
            left.clear(start);
            while let Some(v) = frontier.pop() {
                for u in self.closed[v].and(&left).ones().collect::<Vec<_>>() {
                    comp.set(u);
                    left.clear(u);
                    frontier.push(u);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Number of cliques in a greedy partition of `cand`; bounds `α` from
    /// above.
    fn clique_cover_bound(&self, cand: &Bits) -> usize {
        let mut left = cand.clone();
        let mut cliques = 0;
        while !left.is_empty() {
            let v = left.ones().min_by_key(|&v| self.degree(v, &left)).expect("non-empty");
            let mut common = self.closed[v].and(&left);
            left.clear(v);
            common.clear(v);
            while let Some(u) = common.ones().max_by_key(|&u| self.closed[u].and_count(&common)) {
                left.clear(u);
                common = common.and(&self.closed[u]);
                common.clear(u);
            }
            cliques += 1;
        }
        cliques
    }

    fn greedy(&self, cand: &Bits) -> Bits {
        let mut left = cand.clone();
        let mut chosen = Bits::empty(self.closed.len());
        while let Some(v) = left.ones().min_by_key(|&v| self.degree(v, &left)) {
            chosen.set(v);
            left = left.minus(&self.closed[v]);
        }
        chosen
    }

    fn solve(&self, cand: &Bits) -> Bits {
        let mut cand = cand.clone();
        let mut chosen = Bits::empty(self.closed.len());
        self.reduce(&mut cand, &mut chosen);
        let comps = self.components(&cand);
        if comps.len() > 1 {
            for comp in comps {
                chosen.or_assign(&self.solve(&comp));
            }
            return chosen;
        }
        if cand.is_empty() {
            return chosen;
        }
        let mut best = self.greedy(&cand);
        self.branch(&cand, &Bits::empty(self.closed.len()), &mut best);
        chosen.or_assign(&best);
        chosen
    }

    fn branch(&self, cand: &Bits, chosen: &Bits, best: &mut Bits) {
        let mut cand = cand.clone();
        let mut chosen = chosen.clone();
        self.reduce(&mut cand, &mut chosen);
        if cand.is_empty() {
            if chosen.count() > best.count() {
                *best = chosen;
            }
            return;
        }
        if chosen.count() + self.clique_cover_bound(&cand) <= best.count() {
            return;
        }
        let comps = self.components(&cand);
        if comps.len() > 1 {
            for comp in comps {
                chosen.or_assign(&self.solve(&comp));
            }
            if chosen.count() > best.count() {
                *best = chosen;
            }
            return;
        }
        let v = cand.ones().max_by_key(|&v| self.degree(v, &cand)).expect("non-empty");
        let mut with_v = chosen.clone();
        with_v.set(v);
        self.branch(&cand.minus(&self.closed[v]), &with_v, best);
        let mut without_v = cand;
        without_v.clear(v);
        self.branch(&without_v, &chosen, best);
    }
}

/// A maximum set of words of length `n` no two of which are Type-A
/// confusable; its size is the largest possible `(n, 2; D_1)`-reconstruction
/// code. Edges come from brute-force ball intersections.
pub fn max_independent_set_exact(n: usize) -> Result<IndependentSet> {
    check_cap(n, Caps::from_env().independent_set)?;
    if n == 0 {
        return Ok(IndependentSet { n, size: 1, members: vec![Word::EMPTY] });
    }
    let table = BallTable::full_space(n, 1)?;
    let count = table.len();
    let mut closed: Vec<Bits> = (0..count).map(|_| Bits::empty(count)).collect();
    for (i, row) in closed.iter_mut().enumerate() {
        row.set(i);
        for j in 0..count {
            if j != i && table.intersection_size(i, j) >= 2 {
                row.set(j);
            }
        }
    }
    let graph = Graph { closed };
    let best = graph.solve(&Bits::full(count));
    let members: Vec<Word> = best.ones().map(|i| table.word(i)).collect();
    Ok(IndependentSet { n, size: members.len(), members })
}
