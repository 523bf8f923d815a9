//! Families of total orders on a colour universe `[0, C)`.
//!
//! An order is stored as a sequence from first to last; "a succeeds b"
//! means `a` appears after `b`.
//!
//! - 3-suitable: for all distinct `a, b, c` some order puts `a` after both
//!   `b` and `c`. Colouring-based orientations from such a family form an
//!   in-elbow cover.
//! - 3-mixing: for all distinct `a, b, c` some order puts `a` after both or
//!   before both. Colouring-based orientations from such a family form an
//!   elbow cover.

mod build;
mod search;

pub use build::{build_family, square_candidate, LocalSearch};
pub use search::{family_of_size, min_family_search, SEARCH_BUDGET};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderProperty {
    #[serde(rename = "3-suitable")]
    Suitable,
    #[serde(rename = "3-mixing")]
    Mixing,
}

impl OrderProperty {
    /// Whether `a` is served against `{b, c}` given the three positions in
    /// one order.
    #[inline]
    pub(crate) fn holds(self, pa: usize, pb: usize, pc: usize) -> bool {
        match self {
            OrderProperty::Suitable => pa > pb && pa > pc,
            OrderProperty::Mixing => (pa > pb) == (pa > pc),
        }
    }
}

impl fmt::Display for OrderProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderProperty::Suitable => "3-suitable",
            OrderProperty::Mixing => "3-mixing",
        })
    }
}

impl FromStr for OrderProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3-suitable" | "suitable" => Ok(OrderProperty::Suitable),
            "3-mixing" | "mixing" => Ok(OrderProperty::Mixing),
            other => Err(Error::Parse(format!("unknown order property `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "OrderFamilyJson", into = "OrderFamilyJson")]
pub struct OrderFamily {
    universe: usize,
    orders: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct OrderFamilyJson {
    #[serde(rename = "C")]
    universe: usize,
    orders: Vec<Vec<usize>>,
}

impl TryFrom<OrderFamilyJson> for OrderFamily {
    type Error = Error;

    fn try_from(j: OrderFamilyJson) -> Result<Self> {
        OrderFamily::new(j.universe, j.orders)
    }
}

impl From<OrderFamily> for OrderFamilyJson {
    fn from(f: OrderFamily) -> Self {
        OrderFamilyJson {
            universe: f.universe,
            orders: f.orders,
        }
    }
}

impl OrderFamily {
    pub fn new(universe: usize, orders: Vec<Vec<usize>>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidOrders("family must contain an order".into()));
        }
        for (i, order) in orders.iter().enumerate() {
            let mut seen = vec![false; universe];
            if order.len() != universe {
                return Err(Error::InvalidOrders(format!(
                    "order {i} has {} elements, universe is {universe}",
                    order.len()
                )));
            }
            for &x in order {
                if x >= universe || seen[x] {
                    return Err(Error::InvalidOrders(format!(
                        "order {i} is not a permutation of 0..{universe}"
                    )));
                }
                seen[x] = true;
            }
        }
        Ok(OrderFamily { universe, orders })
    }

    /// The single order `0, 1, ..., C-1`.
    pub fn identity(universe: usize) -> Self {
        OrderFamily {
            universe,
            orders: vec![(0..universe).collect()],
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// `positions()[i][x]` is the rank of `x` in order `i`.
    pub fn positions(&self) -> Vec<Vec<usize>> {
        self.orders
            .iter()
            .map(|order| {
                let mut pos = vec![0; self.universe];
                for (r, &x) in order.iter().enumerate() {
                    pos[x] = r;
                }
                pos
            })
            .collect()
    }

    /// Restriction to the elements `0..c`, keeping relative order.
    pub fn restrict(&self, c: usize) -> OrderFamily {
        assert!(c <= self.universe);
        OrderFamily {
            universe: c,
            orders: self
                .orders
                .iter()
                .map(|o| o.iter().copied().filter(|&x| x < c).collect())
                .collect(),
        }
    }

    /// `true` iff `a` precedes `b` in order `i`.
    pub fn precedes(&self, i: usize, a: usize, b: usize) -> bool {
        let o = &self.orders[i];
        o.iter().position(|&x| x == a) < o.iter().position(|&x| x == b)
    }

    pub fn satisfies(&self, property: OrderProperty) -> bool {
        self.first_violation(property).is_none()
    }

    /// First `(a, b, c)` with `b < c` (in lexicographic order) for which no
    /// order serves `a` against `{b, c}`.
    pub fn first_violation(&self, property: OrderProperty) -> Option<(usize, usize, usize)> {
        let pos = self.positions();
        let n = self.universe;
        for a in 0..n {
            for b in 0..n {
                if b == a {
                    continue;
                }
                for c in b + 1..n {
                    if c == a {
                        continue;
                    }
                    if !pos.iter().any(|p| property.holds(p[a], p[b], p[c])) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

pub fn is_3_suitable(f: &OrderFamily) -> bool {
    f.satisfies(OrderProperty::Suitable)
}

pub fn is_3_mixing(f: &OrderFamily) -> bool {
    f.satisfies(OrderProperty::Mixing)
}

/// `lg lg n + ½ lg lg lg n + ½ lg π`, the asymptotic size of a smallest
/// 3-suitable family. Reporting yardstick only; `NaN` below `n = 3`.
pub fn suitable_yardstick(n: usize) -> f64 {
    let lglg = (n as f64).log2().log2();
    lglg + 0.5 * lglg.log2() + 0.5 * std::f64::consts::PI.log2()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(c: usize, orders: &[&[usize]]) -> OrderFamily {
        OrderFamily::new(c, orders.iter().map(|o| o.to_vec()).collect()).unwrap()
    }

    #[test]
    fn suitable_examples() {
        assert!(is_3_suitable(&fam(3, &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]])));
        let bad = fam(3, &[&[0, 1, 2], &[2, 1, 0]]);
        assert!(!is_3_suitable(&bad));
        assert_eq!(bad.first_violation(OrderProperty::Suitable), Some((1, 0, 2)));
        assert!(is_3_suitable(&fam(4, &[&[0, 1, 3, 2], &[0, 2, 3, 1], &[1, 2, 3, 0]])));
        assert!(is_3_suitable(&OrderFamily::identity(2)));
    }

    #[test]
    fn mixing_examples() {
        assert!(is_3_mixing(&OrderFamily::identity(2)));
        assert!(is_3_mixing(&fam(4, &[&[0, 1, 2, 3], &[1, 3, 0, 2]])));
        assert!(!is_3_mixing(&OrderFamily::identity(3)));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(OrderFamily::new(3, vec![vec![0, 1, 1]]).is_err());
        assert!(OrderFamily::new(3, vec![vec![0, 1]]).is_err());
        assert!(OrderFamily::new(3, vec![]).is_err());
    }

    #[test]
    fn json_shape() {
        let f = fam(3, &[&[2, 0, 1]]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"C":3,"orders":[[2,0,1]]}"#);
        let back: OrderFamily = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<OrderFamily>(r#"{"C":2,"orders":[[0,0]]}"#).is_err());
    }

    #[test]
    fn restriction_keeps_relative_order() {
        let f = fam(4, &[&[3, 1, 0, 2]]);
        assert_eq!(f.restrict(2).orders(), &[vec![1, 0]]);
        assert!(f.precedes(0, 3, 2));
    }

    #[test]
    fn yardstick_values() {
        // lg lg 16 = 2, lg lg lg 16 = 1.
        let y = suitable_yardstick(16);
        assert!((y - (2.0 + 0.5 + 0.5 * std::f64::consts::PI.log2())).abs() < 1e-12);
    }
}
