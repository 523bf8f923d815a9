use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Vertex budget of the exact chromatic-number solver.
pub const DEFAULT_VERTEX_BUDGET: usize = 16;

/// A proper vertex colouring using every colour in `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(g: &Graph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != g.vertex_count() {
            return Err(Error::InvalidParams(format!(
                "colouring has {} entries for {} vertices",
                colors.len(),
                g.vertex_count()
            )));
        }
        for &(u, v) in g.edges() {
            if colors[u] == colors[v] {
                return Err(Error::ImproperColoring(u, v));
            }
        }
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidParams(format!("colour {missing} is unused")));
        }
        Ok(Coloring { colors, k })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count()
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// DSATUR: repeatedly colour the uncoloured vertex with the most distinct
/// neighbour colours (ties to the lowest index) with its smallest free colour.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (saturation[v], std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        colors[v] = c;
        for &w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                continue;
            }
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                saturation[w] += 1;
            }
        }
    }
    Coloring::new(g, colors).expect("DSATUR produces a proper tight colouring")
}

/// Exact chromatic number by DSATUR branch and bound seeded with a greedy
/// clique. Returns the optimum and a witness colouring.
pub fn chromatic_number_exact(g: &Graph, vertex_budget: usize) -> Result<(usize, Coloring)> {
    let n = g.vertex_count();
    if n > vertex_budget {
        return Err(Error::budget("graph", n, vertex_budget));
    }
    if n == 0 {
        return Ok((0, Coloring { colors: Vec::new(), k: 0 }));
    }
    let greedy = greedy_coloring(g);
    let clique = greedy_clique(g);
    let mut search = Search {
        g,
        colors: vec![usize::MAX; n],
        forbidden: vec![0u64; n],
        best: greedy.k(),
        best_colors: greedy.colors().to_vec(),
        lower: clique.len(),
    };
    if search.best > search.lower {
        for (c, &v) in clique.iter().enumerate() {
            search.assign(v, c);
        }
        search.run(clique.len(), clique.len());
    }
    let best = search.best;
    let coloring = Coloring::new(g, search.best_colors)?;
    debug_assert_eq!(coloring.k(), best);
    Ok((best, coloring))
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..g.vertex_count() {
        let mut clique = vec![start];
        let mut cands: Vec<usize> = g.neighbors(start).to_vec();
        cands.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for v in cands {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    /// Bitmask of colours present on coloured neighbours.
    forbidden: Vec<u64>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
    }

    fn forbidden_of(&self, v: usize) -> u64 {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&w| self.colors[w] != usize::MAX)
            .fold(0u64, |m, &w| m | (1 << self.colors[w]))
    }

    fn run(&mut self, colored: usize, used: usize) {
        if self.best <= self.lower {
            return;
        }
        let n = self.g.vertex_count();
        if colored == n {
            if used < self.best {
                self.best = used;
                self.best_colors = self.colors.clone();
            }
            return;
        }
        let mut pick = usize::MAX;
        let mut key = (0u32, 0usize);
        for v in 0..n {
            if self.colors[v] != usize::MAX {
                continue;
            }
            self.forbidden[v] = self.forbidden_of(v);
            let k = (self.forbidden[v].count_ones(), self.g.degree(v));
            if pick == usize::MAX || k > key {
                pick = v;
                key = k;
            }
        }
        let v = pick;
        let mask = self.forbidden[v];
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if mask & (1 << c) != 0 {
                continue;
            }
            self.colors[v] = c;
            self.run(colored + 1, used.max(c + 1));
            self.colors[v] = usize::MAX;
            if self.best <= self.lower {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    fn gen(kind: GraphKind, n: usize) -> Graph {
        generate(kind, n, None, None).unwrap()
    }

    /// Independent oracle: smallest k admitting a proper colouring, by
    /// trying every assignment in `k^n`.
    fn brute_chi(g: &Graph) -> usize {
        let n = g.vertex_count();
        for k in 1..=n.max(1) {
            let total = k.pow(n as u32);
            for code in 0..total {
                let mut c = vec![0; n];
                let mut x = code;
                for slot in c.iter_mut() {
                    *slot = x % k;
                    x /= k;
                }
                if g.edges().iter().all(|&(u, v)| c[u] != c[v]) {
                    return k;
                }
            }
        }
        0
    }

    #[test]
    fn known_values() {
        assert_eq!(chromatic_number_exact(&gen(GraphKind::Complete, 5), 16).unwrap().0, 5);
        assert_eq!(chromatic_number_exact(&gen(GraphKind::Cycle, 5), 16).unwrap().0, 3);
        let (chi, w) =
            chromatic_number_exact(&gen(GraphKind::MycielskianIterate, 4), 16).unwrap();
        assert_eq!(chi, 4);
        assert!(w.is_proper_for(&gen(GraphKind::MycielskianIterate, 4)));
        assert_eq!(w.k(), 4);
    }

    #[test]
    fn fifth_mycielski_iterate_needs_five() {
        let g = gen(GraphKind::MycielskianIterate, 5);
        assert!(chromatic_number_exact(&g, 16).is_err());
        assert_eq!(chromatic_number_exact(&g, 32).unwrap().0, 5);
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_coloring(&Graph::empty(3)).k(), 1);
        assert_eq!(greedy_coloring(&gen(GraphKind::Complete, 4)).k(), 4);
        let c5 = greedy_coloring(&gen(GraphKind::Cycle, 5));
        assert_eq!(c5.colors(), &[0, 1, 0, 1, 2]);
    }

    #[test]
    fn exact_matches_brute_force_on_random_graphs() {
        for seed in 0..40 {
            let g = generate(GraphKind::Random, 7, Some(0.5), Some(seed)).unwrap();
            let (chi, w) = chromatic_number_exact(&g, 16).unwrap();
            assert_eq!(chi, brute_chi(&g), "seed {seed}");
            assert!(w.is_proper_for(&g));
            assert!(chi <= greedy_coloring(&g).k());
        }
    }

    #[test]
    fn coloring_validation() {
        let p3 = gen(GraphKind::Path, 3);
        assert!(matches!(
            Coloring::new(&p3, vec![0, 0, 1]),
            Err(Error::ImproperColoring(0, 1))
        ));
        assert!(Coloring::new(&p3, vec![0, 2, 0]).is_err());
        assert_eq!(Coloring::new(&p3, vec![0, 1, 0]).unwrap().k(), 2);
    }
}
