//! Binomials of the toric ideal of a graph and their closed-walk origin.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The two sides of a binomial; for a walk, odd and even positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Class {
    Plus,
    Minus,
}

impl Class {
    pub fn flip(self) -> Class {
        match self {
            Class::Plus => Class::Minus,
            Class::Minus => Class::Plus,
        }
    }
}

/// `x^plus − x^minus` over the edge variables of a graph.
///
/// Invariants enforced at construction: both vectors have one entry per
/// edge, supports are disjoint, the binomial is nonzero, it is balanced
/// (`A·plus = A·minus` for the incidence matrix `A`), and `plus` is the
/// lexicographically larger vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    plus: Vec<u32>,
    minus: Vec<u32>,
}

impl Binomial {
    pub fn new(g: &Graph, plus: Vec<u32>, minus: Vec<u32>) -> Result<Self> {
        let m = g.edge_count();
        for v in [&plus, &minus] {
            if v.len() != m {
                return Err(Error::LengthMismatch {
                    expected: m,
                    got: v.len(),
                });
            }
        }
        if let Some(e) = (0..m).find(|&e| plus[e] > 0 && minus[e] > 0) {
            return Err(Error::OverlappingSupport(e));
        }
        if plus.iter().chain(&minus).all(|&x| x == 0) {
            return Err(Error::ZeroBinomial);
        }
        let dp = g.vertex_degrees(&plus);
        let dm = g.vertex_degrees(&minus);
        if let Some(v) = (0..g.vertex_count()).find(|&v| dp[v] != dm[v]) {
            return Err(Error::Unbalanced(v));
        }
        Ok(Binomial { plus, minus }.canonical())
    }

    /// Canonical sign: the lexicographically larger side becomes `plus`.
    pub fn canonical(self) -> Self {
        if self.plus >= self.minus {
            self
        } else {
            Binomial {
                plus: self.minus,
                minus: self.plus,
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.plus >= self.minus
    }

    pub fn plus(&self) -> &[u32] {
        &self.plus
    }

    pub fn minus(&self) -> &[u32] {
        &self.minus
    }

    pub fn edge_count(&self) -> usize {
        self.plus.len()
    }

    /// Total degree of either monomial.
    pub fn degree(&self) -> u64 {
        self.plus.iter().map(|&x| u64::from(x)).sum()
    }

    /// Exponent of edge `e` on whichever side carries it.
    pub fn exponent(&self, e: usize) -> u32 {
        self.plus[e] + self.minus[e]
    }

    pub fn class_of(&self, e: usize) -> Option<Class> {
        if self.plus[e] > 0 {
            Some(Class::Plus)
        } else if self.minus[e] > 0 {
            Some(Class::Minus)
        } else {
            None
        }
    }

    /// Edges with a nonzero exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.plus.len()).filter(|&e| self.exponent(e) > 0).collect()
    }

    /// `plus − minus` as a signed vector.
    pub fn difference(&self) -> Vec<i64> {
        self.plus
            .iter()
            .zip(&self.minus)
            .map(|(&p, &q)| i64::from(p) - i64::from(q))
            .collect()
    }

    pub fn to_json_value(&self) -> BinomialJson {
        let sparse = |v: &[u32]| {
            v.iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| (i, x))
                .collect()
        };
        BinomialJson {
            plus: sparse(&self.plus),
            minus: sparse(&self.minus),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("binomial serialization cannot fail")
    }

    /// Parses `{"plus": [[edge, exp], ...], "minus": [...]}` against `g`.
    pub fn from_json(g: &Graph, text: &str) -> Result<Self> {
        let raw: BinomialJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_json_value(g, &raw)
    }

    pub fn from_json_value(g: &Graph, raw: &BinomialJson) -> Result<Self> {
        let m = g.edge_count();
        let dense = |pairs: &[(usize, u32)]| -> Result<Vec<u32>> {
            let mut v = vec![0u32; m];
            for &(e, x) in pairs {
                if e >= m {
                    return Err(Error::UnknownEdge(e));
                }
                if v[e] != 0 {
                    return Err(Error::Json(format!("edge {e} listed twice")));
                }
                v[e] = x;
            }
            Ok(v)
        };
        Binomial::new(g, dense(&raw.plus)?, dense(&raw.minus)?)
    }
}

/// Sparse JSON form with ascending edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialJson {
    pub plus: Vec<(usize, u32)>,
    pub minus: Vec<(usize, u32)>,
}

impl Serialize for Binomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl Ord for Binomial {
    /// Degree first, then the dense exponent vectors.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), &self.plus, &self.minus).cmp(&(other.degree(), &other.plus, &other.minus))
    }
}

impl PartialOrd for Binomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn monomial(v: &[u32]) -> String {
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("e{i}") } else { format!("e{i}^{x}") })
                .collect();
            if terms.is_empty() {
                "1".into()
            } else {
                terms.join("*")
            }
        }
        write!(f, "{} - {}", monomial(&self.plus), monomial(&self.minus))
    }
}

/// The binomial `E⁺(w) − E⁻(w)` of a closed even walk given as a sequence
/// of edge indices: edges at odd positions go to one side, edges at even
/// positions to the other.
pub fn binomial_of_walk(g: &Graph, walk: &[usize]) -> Result<Binomial> {
    if walk.is_empty() {
        return Err(Error::EmptyWalk);
    }
    if let Some(&e) = walk.iter().find(|&&e| e >= g.edge_count()) {
        return Err(Error::UnknownEdge(e));
    }
    if walk.len() % 2 == 1 {
        return Err(Error::OddWalk(walk.len()));
    }
    check_closed_walk(g, walk)?;
    let m = g.edge_count();
    let mut plus = vec![0u32; m];
    let mut minus = vec![0u32; m];
    for (pos, &e) in walk.iter().enumerate() {
        if pos % 2 == 0 {
            plus[e] += 1;
        } else {
            minus[e] += 1;
        }
    }
    if let Some(e) = (0..m).find(|&e| plus[e] > 0 && minus[e] > 0) {
        return Err(Error::Reducible(e));
    }
    Binomial::new(g, plus, minus)
}

fn check_closed_walk(g: &Graph, walk: &[usize]) -> Result<()> {
    let (a, b) = g.edge(walk[0]);
    let mut first_break = None;
    for start in [a, b] {
        let mut v = start;
        let mut ok = true;
        for (i, &e) in walk.iter().enumerate() {
            match g.other_end(e, v) {
                Some(w) => v = w,
                None => {
                    let prev = if i == 0 { e } else { walk[i - 1] };
                    first_break.get_or_insert((prev, e));
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return if v == start { Ok(()) } else { Err(Error::NotClosed) };
        }
    }
    let (p, e) = first_break.expect("some traversal failed");
    Err(Error::NotIncident(p, e))
}
