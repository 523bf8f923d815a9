use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::search::{min_family_search, SEARCH_BUDGET};
use super::{OrderFamily, OrderProperty};
use crate::error::{Error, Result};

/// Largest universe handled by the bitmask local search.
const LOCAL_SEARCH_LIMIT: usize = 128;

/// Builds a family with `property` on `[0, c)`. The result is always
/// re-checked before it is returned.
///
/// Universes up to [`SEARCH_BUDGET`] use the exact minimum search. Larger
/// ones square a family on `⌈√c⌉` elements (see [`square_candidate`]) and
/// restrict it; if that candidate fails the check, seeded local search
/// takes over, starting at the base family's size and growing until it
/// succeeds.
pub fn build_family(c: usize, property: OrderProperty) -> Result<OrderFamily> {
    let family = build_unchecked(c, property)?;
    if family.universe() != c || !family.satisfies(property) {
        return Err(Error::ConstructionFailure(format!(
            "family of {} orders on {c} elements is not {property}",
            family.len()
        )));
    }
    Ok(family)
}

fn build_unchecked(c: usize, property: OrderProperty) -> Result<OrderFamily> {
    if c <= SEARCH_BUDGET {
        return min_family_search(c, property);
    }
    let side = (1..).find(|s| s * s >= c).unwrap();
    let base = build_family(side, property)?;
    let candidate = square_candidate(&base).restrict(c);
    if candidate.satisfies(property) {
        return Ok(candidate);
    }
    if c > LOCAL_SEARCH_LIMIT {
        return Err(Error::ConstructionFailure(format!(
            "squared candidate is not {property} and {c} elements exceed the local search limit {LOCAL_SEARCH_LIMIT}"
        )));
    }
    for k in base.len()..=candidate.len() + 4 {
        let start = (k == candidate.len()).then_some(&candidate);
        let search = LocalSearch::new(c, k, property);
        if let Some(found) = search.run(start, seed_for(c, k, property)) {
            return Ok(found);
        }
    }
    Err(Error::ConstructionFailure(format!(
        "no {property} family found on {c} elements with up to {} orders",
        candidate.len() + 4
    )))
}

fn seed_for(c: usize, k: usize, property: OrderProperty) -> u64 {
    let tag = match property {
        OrderProperty::Suitable => 1,
        OrderProperty::Mixing => 2,
    };
    ((c as u64) << 32) ^ ((k as u64) << 8) ^ tag
}

/// Orders on `U × U` from a family on `U`, with `(x, y)` numbered
/// `x·|U| + y`: for every base order `σ`, sort by `σ(x)` then `σ(y)`; plus
/// one order sorting by `σ₀(x)` and breaking ties by reversed `σ₀(y)`.
///
/// For a 3-mixing base the result is 3-mixing: `a` can only sit between `b`
/// and `c` in all the lexicographic orders when it shares its first
/// coordinate with exactly one of them, say `b`, with
/// `sign(b.y - a.y) = sign(a.x - c.x)` in every base order. The extra order
/// then places `b` and `c` on the same side of `a`.
pub fn square_candidate(base: &OrderFamily) -> OrderFamily {
    let u = base.universe();
    let pos = base.positions();
    let mut orders = Vec::with_capacity(base.len() + 1);
    for p in &pos {
        let mut o: Vec<usize> = (0..u * u).collect();
        o.sort_by_key(|&z| (p[z / u], p[z % u]));
        orders.push(o);
    }
    let p0 = &pos[0];
    let mut extra: Vec<usize> = (0..u * u).collect();
    extra.sort_by_key(|&z| (p0[z / u], std::cmp::Reverse(p0[z % u])));
    orders.push(extra);
    OrderFamily::new(u * u, orders).expect("squared orders are permutations")
}

/// Min-conflicts local search over families of `k` orders, with violations
/// counted through bitmasks of the elements below each element.
pub struct LocalSearch {
    c: usize,
    k: usize,
    property: OrderProperty,
    pub restarts: usize,
    pub max_steps: usize,
}

impl LocalSearch {
    pub fn new(c: usize, k: usize, property: OrderProperty) -> Self {
        assert!(c <= LOCAL_SEARCH_LIMIT);
        LocalSearch {
            c,
            k,
            property,
            restarts: 4,
            max_steps: 20_000,
        }
    }

    pub fn run(&self, start: Option<&OrderFamily>, seed: u64) -> Option<OrderFamily> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for restart in 0..self.restarts {
            let mut orders: Vec<Vec<usize>> = match start {
                Some(f) if restart == 0 && f.len() == self.k => f.orders().to_vec(),
                _ => (0..self.k).map(|_| shuffled(self.c, &mut rng)).collect(),
            };
            if self.descend(&mut orders, &mut rng) {
                return OrderFamily::new(self.c, orders).ok();
            }
        }
        None
    }

    fn descend(&self, orders: &mut [Vec<usize>], rng: &mut ChaCha8Rng) -> bool {
        let mut cost = self.cost(orders);
        for _ in 0..self.max_steps {
            if cost.total == 0 {
                return true;
            }
            let (a, b, c) = self.pick_violation(orders, &cost, rng);
            let i = rng.gen_range(0..self.k);
            let saved = orders[i].clone();
            self.repair(&mut orders[i], a, b, c, rng);
            let next = self.cost(orders);
            if next.total <= cost.total || rng.gen_bool(0.05) {
                cost = next;
            } else {
                orders[i] = saved;
            }
        }
        cost.total == 0
    }

    /// Moves `a` within one order so that it serves `a` against `{b, c}`.
    fn repair(&self, order: &mut Vec<usize>, a: usize, b: usize, c: usize, rng: &mut ChaCha8Rng) {
        let at = |o: &Vec<usize>, x: usize| o.iter().position(|&y| y == x).unwrap();
        order.remove(at(order, a));
        let hi = at(order, b).max(at(order, c));
        let lo = at(order, b).min(at(order, c));
        let above = self.property == OrderProperty::Suitable || rng.gen_bool(0.5);
        let p = if above {
            rng.gen_range(hi + 1..=order.len())
        } else {
            rng.gen_range(0..=lo)
        };
        order.insert(p, a);
    }

    fn pick_violation(
        &self,
        orders: &[Vec<usize>],
        cost: &Cost,
        rng: &mut ChaCha8Rng,
    ) -> (usize, usize, usize) {
        let bad: Vec<usize> = (0..self.c).filter(|&a| cost.per_element[a] > 0).collect();
        let a = bad[rng.gen_range(0..bad.len())];
        let masks = self.masks(orders);
        let uncovered = self.uncovered_for(&masks, a);
        let (b, missing) = uncovered[rng.gen_range(0..uncovered.len())];
        let cs: Vec<usize> = (0..self.c).filter(|&x| missing & (1u128 << x) != 0).collect();
        (a, b, cs[rng.gen_range(0..cs.len())])
    }

    /// `below[i][x]`: elements before `x` in order `i`.
    fn masks(&self, orders: &[Vec<usize>]) -> Vec<Vec<u128>> {
        orders
            .iter()
            .map(|o| {
                let mut below = vec![0u128; self.c];
                let mut acc = 0u128;
                for &x in o {
                    below[x] = acc;
                    acc |= 1u128 << x;
                }
                below
            })
            .collect()
    }

    /// For element `a`: every `b` together with the set of `c` such that
    /// `(a, {b, c})` is not served.
    fn uncovered_for(&self, masks: &[Vec<u128>], a: usize) -> Vec<(usize, u128)> {
        let all = if self.c == 128 {
            u128::MAX
        } else {
            (1u128 << self.c) - 1
        };
        let mut out = Vec::new();
        for b in 0..self.c {
            if b == a {
                continue;
            }
            let bb = 1u128 << b;
            let mut cover = 0u128;
            for m in masks {
                let below = m[a];
                match self.property {
                    OrderProperty::Suitable => {
                        if below & bb != 0 {
                            cover |= below;
                        }
                    }
                    OrderProperty::Mixing => {
                        let above = all & !below & !(1u128 << a);
                        cover |= if below & bb != 0 { below } else { above };
                    }
                }
            }
            let missing = all & !cover & !(1u128 << a) & !bb;
            if missing != 0 {
                out.push((b, missing));
            }
        }
        out
    }

    fn cost(&self, orders: &[Vec<usize>]) -> Cost {
        let masks = self.masks(orders);
        let per_element: Vec<usize> = (0..self.c)
            .map(|a| {
                let twice: u32 = self
                    .uncovered_for(&masks, a)
                    .iter()
                    .map(|(_, m)| m.count_ones())
                    .sum();
                twice as usize / 2
            })
            .collect();
        Cost {
            total: per_element.iter().sum(),
            per_element,
        }
    }
}

struct Cost {
    total: usize,
    per_element: Vec<usize>,
}

fn shuffled(c: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..c).collect();
    for i in (1..c).rev() {
        let j = rng.gen_range(0..=i);
        v.swap(i, j);
    }
    v
}
