use super::{OrderFamily, OrderProperty};
use crate::error::{Error, Result};

/// Largest universe accepted by [`min_family_search`].
pub const SEARCH_BUDGET: usize = 8;

/// Smallest family with `property` on `[0, c)`, by iterative deepening on
/// the family size.
///
/// Families are grown one element at a time: element `t` is inserted into
/// every order, so the relative order of earlier elements never changes and
/// a violated triple prunes the branch as soon as its third element lands.
/// Symmetry breaking: order 0 is the identity (relabelling), and the
/// insertion-position sequences of orders `1..k` are lexicographically
/// nondecreasing (order permutation). The witness returned is the first one
/// in that enumeration, so it is deterministic.
pub fn min_family_search(c: usize, property: OrderProperty) -> Result<OrderFamily> {
    if c > SEARCH_BUDGET {
        return Err(Error::budget("universe", c, SEARCH_BUDGET));
    }
    if c <= 2 {
        return Ok(OrderFamily::identity(c));
    }
    for k in 1.. {
        if let Some(orders) = search_size(c, k, property) {
            let family = OrderFamily::new(c, orders)?;
            if !family.satisfies(property) {
                return Err(Error::Internal(format!(
                    "search produced a family that is not {property}"
                )));
            }
            return Ok(family);
        }
    }
    unreachable!()
}

/// First family of exactly `k` orders on `[0, c)` with `property` in the
/// enumeration order of [`min_family_search`], without a size budget. The
/// running time is exponential in `c`.
pub fn family_of_size(c: usize, k: usize, property: OrderProperty) -> Option<OrderFamily> {
    search_size(c, k, property).map(|o| OrderFamily::new(c, o).expect("search builds permutations"))
}

pub(crate) fn search_size(c: usize, k: usize, property: OrderProperty) -> Option<Vec<Vec<usize>>> {
    let mut state = State {
        c,
        k,
        property,
        orders: vec![Vec::with_capacity(c); k],
        codes: vec![Vec::with_capacity(c); k],
        pos: vec![vec![0; c]; k],
    };
    state.place(0, 0).then_some(state.orders)
}

struct State {
    c: usize,
    k: usize,
    property: OrderProperty,
    orders: Vec<Vec<usize>>,
    /// Insertion position of each element, per order.
    codes: Vec<Vec<usize>>,
    pos: Vec<Vec<usize>>,
}

impl State {
    /// Inserts element `t` into order `j`, then continues.
    fn place(&mut self, t: usize, j: usize) -> bool {
        if t == self.c {
            return true;
        }
        if j == self.k {
            self.refresh_positions(t);
            if !self.triples_ok(t) {
                return false;
            }
            return self.place(t + 1, 0);
        }
        let choices: Vec<usize> = if j == 0 { vec![t] } else { (0..=t).collect() };
        for p in choices {
            if j >= 2 && !self.lex_ok(j, p) {
                continue;
            }
            self.orders[j].insert(p, t);
            self.codes[j].push(p);
            if self.place(t, j + 1) {
                return true;
            }
            self.codes[j].pop();
            self.orders[j].remove(p);
        }
        false
    }

    /// Codes of order `j - 1` must stay lexicographically <= those of `j`
    /// once `p` is appended to order `j`.
    fn lex_ok(&self, j: usize, p: usize) -> bool {
        let (prev, cur) = (&self.codes[j - 1], &self.codes[j]);
        for (a, b) in prev.iter().zip(cur.iter()) {
            if a != b {
                return a < b;
            }
        }
        prev[cur.len()] <= p
    }

    fn refresh_positions(&mut self, t: usize) {
        for j in 0..self.k {
            for (r, &x) in self.orders[j].iter().enumerate() {
                self.pos[j][x] = r;
            }
        }
        debug_assert!(self.orders.iter().all(|o| o.len() == t + 1));
    }

    /// All triples containing the newest element `t`.
    fn triples_ok(&self, t: usize) -> bool {
        let served = |a: usize, b: usize, c: usize| {
            self.pos
                .iter()
                .any(|p| self.property.holds(p[a], p[b], p[c]))
        };
        for b in 0..t {
            for c in b + 1..t {
                if !served(t, b, c) || !served(b, t, c) || !served(c, t, b) {
                    return false;
                }
            }
        }
        true
    }
}
