use super::{verify_orientation_cover, CoverKind, Orientation};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default edge budget of the exhaustive solvers.
pub const DEFAULT_EDGE_BUDGET: usize = 12;
/// Largest family size the exhaustive solvers will try.
pub const MAX_KMAX: usize = 4;

/// A minimum cover together with a witness achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSolution {
    pub size: usize,
    pub witness: Vec<Orientation>,
}

pub fn exact_elb(g: &Graph, k_max: usize) -> Result<Option<ExactSolution>> {
    exact_cover_number(g, CoverKind::Elbow, k_max, DEFAULT_EDGE_BUDGET)
}

pub fn exact_inelb(g: &Graph, k_max: usize) -> Result<Option<ExactSolution>> {
    exact_cover_number(g, CoverKind::InElbow, k_max, DEFAULT_EDGE_BUDGET)
}

/// Smallest `k <= k_max` admitting a `kind` cover by `k` orientations, or
/// `None` if there is none. Graphs without adjacent edges need 0.
///
/// The search assigns every edge a `k`-bit word (bit `i` set when
/// orientation `i` directs the edge towards its higher endpoint), in
/// canonical edge order, and rejects a partial assignment as soon as an
/// adjacent pair with both words fixed is uncovered. Column permutations are
/// factored out by keeping the columns lexicographically sorted; for elbow
/// covers, reversing an orientation preserves every elbow, so the first
/// edge is fixed to the all-zero word.
pub fn exact_cover_number(
    g: &Graph,
    kind: CoverKind,
    k_max: usize,
    edge_budget: usize,
) -> Result<Option<ExactSolution>> {
    if k_max > MAX_KMAX {
        return Err(Error::budget("k_max", k_max, MAX_KMAX));
    }
    if g.edge_count() > edge_budget {
        return Err(Error::budget("edge count", g.edge_count(), edge_budget));
    }
    if !g.has_adjacent_edges() {
        return Ok(Some(ExactSolution {
            size: 0,
            witness: Vec::new(),
        }));
    }
    for k in 1..=k_max {
        if let Some(words) = Solver::new(g, kind, k).solve() {
            let witness: Vec<Orientation> = (0..k)
                .map(|i| Orientation::from_ascending_flags(g, words.iter().map(|w| w >> i & 1 == 1)))
                .collect();
            if !verify_orientation_cover(g, &witness, kind) {
                return Err(Error::Internal("exact solver witness fails verification".into()));
            }
            return Ok(Some(ExactSolution { size: k, witness }));
        }
    }
    Ok(None)
}

struct Solver {
    kind: CoverKind,
    k: usize,
    full: u32,
    /// For edge `e`: earlier edges `f < e` sharing an endpoint, with flags
    /// telling whether the shared vertex is the higher endpoint of `e` / `f`.
    earlier: Vec<Vec<(usize, bool, bool)>>,
    words: Vec<u32>,
}

impl Solver {
    fn new(g: &Graph, kind: CoverKind, k: usize) -> Self {
        let m = g.edge_count();
        let mut earlier = vec![Vec::new(); m];
        for (e, f) in g.adjacent_edge_pairs() {
            let x = g.shared_endpoint(e, f).expect("adjacent pair");
            let (lo, hi) = (e.min(f), e.max(f));
            earlier[hi].push((lo, g.edge(hi).1 == x, g.edge(lo).1 == x));
        }
        Solver {
            kind,
            k,
            full: (1u32 << k) - 1,
            earlier,
            words: vec![0; m],
        }
    }

    fn solve(mut self) -> Option<Vec<u32>> {
        let tied = self.full >> 1;
        self.assign(0, tied).then_some(self.words)
    }

    /// Word of edge `e` seen from its endpoint: bit `i` set when orientation
    /// `i` points the edge towards that endpoint.
    fn toward(&self, word: u32, at_higher: bool) -> u32 {
        if at_higher {
            word
        } else {
            !word & self.full
        }
    }

    fn compatible(&self, e: usize, word: u32) -> bool {
        self.earlier[e].iter().all(|&(f, e_high, f_high)| {
            let a = self.toward(word, e_high);
            let b = self.toward(self.words[f], f_high);
            match self.kind {
                CoverKind::Elbow => (a ^ b) != self.full,
                CoverKind::InElbow => a & b != 0,
            }
        })
    }

    /// `tied` has bit `i` set while columns `i` and `i + 1` agree on every
    /// edge assigned so far.
    fn assign(&mut self, e: usize, tied: u32) -> bool {
        if e == self.words.len() {
            return true;
        }
        let candidates = if e == 0 && self.kind == CoverKind::Elbow {
            0..1
        } else {
            0..self.full + 1
        };
        for word in candidates {
            let mut next_tied = tied;
            let mut ordered = true;
            for i in 0..self.k.saturating_sub(1) {
                if tied >> i & 1 == 0 {
                    continue;
                }
                let (lo, hi) = (word >> i & 1, word >> (i + 1) & 1);
                if lo > hi {
                    ordered = false;
                    break;
                }
                if lo < hi {
                    next_tied &= !(1 << i);
                }
            }
            if !ordered || !self.compatible(e, word) {
                continue;
            }
            self.words[e] = word;
            if self.assign(e + 1, next_tied) {
                return true;
            }
        }
        false
    }
}
