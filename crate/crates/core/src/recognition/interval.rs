use std::collections::HashMap;

use super::chordal::is_chordal;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex budget of [`is_interval_oracle`].
pub const INTERVAL_ORACLE_BUDGET: usize = 7;

/// Chordal and asteroidal-triple free.
pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g) && find_asteroidal_triple(g).is_none()
}

/// Three pairwise non-adjacent vertices such that each two are joined by a
/// path avoiding the closed neighbourhood of the third. `O(n^3)` scan over
/// the components of `G - N[v]` for every `v`.
pub fn find_asteroidal_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    let comps: Vec<Vec<usize>> = (0..n).map(|v| components_avoiding(g, v)).collect();
    let same = |x: usize, a: usize, b: usize| {
        comps[x][a] != usize::MAX && comps[x][a] == comps[x][b]
    };
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if same(a, b, c) && same(b, a, c) && same(c, a, b) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Component labels of `G - N[v]`; vertices of `N[v]` get `usize::MAX`.
fn components_avoiding(g: &Graph, v: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = true;
    }
    let mut next = 0;
    for s in 0..n {
        if blocked[s] || label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if !blocked[y] && label[y] == usize::MAX {
                    label[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// Brute-force search for an interval model: explores every sequence of
/// the `2n` open/close events, pruning a prefix as soon as it contradicts
/// an adjacency. Test oracle only.
pub fn is_interval_oracle(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n > INTERVAL_ORACLE_BUDGET {
        return Err(Error::budget("graph", n, INTERVAL_ORACLE_BUDGET));
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut memo = HashMap::new();
    Ok(realizable(&nbr, 0, 0, &mut memo))
}

fn realizable(nbr: &[u32], opened: u32, closed: u32, memo: &mut HashMap<(u32, u32), bool>) -> bool {
    let n = nbr.len();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    if closed == all {
        return true;
    }
    if let Some(&r) = memo.get(&(opened, closed)) {
        return r;
    }
    let open_now = opened & !closed;
    let mut ok = false;
    for v in 0..n {
        let bit = 1u32 << v;
        if opened & bit == 0 {
            // v meets every interval still open and none that has closed.
            if open_now & !nbr[v] == 0 && closed & nbr[v] == 0 {
                ok = realizable(nbr, opened | bit, closed, memo);
            }
        } else if closed & bit == 0 {
            // Closing v is final: all of its neighbours must have opened.
            if nbr[v] & !opened == 0 {
                ok = realizable(nbr, opened, closed | bit, memo);
            }
        }
        if ok {
            break;
        }
    }
    memo.insert((opened, closed), ok);
    ok
}
