//! R-matrices for the five-vertex models and a symbolic checker for the RLL
//! relation.
//!
//! Everything lives in the two-variable ring with `z1 = z_i` and `z2 = z_j`.
//! An R-vertex joins two lines: the `z_i` line runs from the lower left to
//! the upper right and the `z_j` line from the upper left to the lower right.
//! Paths come in on the left and go out on the right.
//!
//! In the relation, the left side is an R-vertex fed by `a` (lower left) and
//! `b` (upper left) followed by a column with the `z_i` vertex on top of the
//! `z_j` vertex; the right side is the column first (`z_j` on top) followed
//! by the R-vertex leaving through `d` (upper right) and `e` (lower right).
//! The column has `c` on top and `f` at the bottom.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{MPoly, ParsePolyError};
use crate::lattice::{admitted_kind, Flavor, Label, Vertex, VertexKind};
use crate::symgroup::Permutation;
use crate::Poly;

const ZI: usize = 1;
const ZJ: usize = 2;

/// Labels around an R-vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RConfig {
    pub lower_left: Label,
    pub upper_left: Label,
    pub upper_right: Label,
    pub lower_right: Label,
}

impl RConfig {
    pub const fn new(lower_left: Label, upper_left: Label, upper_right: Label, lower_right: Label) -> Self {
        RConfig {
            lower_left,
            upper_left,
            upper_right,
            lower_right,
        }
    }

    /// The L-vertex obtained by rotating the crossing by 45 degrees.
    pub fn rotated(self) -> Vertex {
        Vertex::new(self.upper_left, self.upper_right, self.lower_right, self.lower_left)
    }
}

impl fmt::Display for RConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R({},{},{},{})",
            self.lower_left, self.upper_left, self.upper_right, self.lower_right
        )
    }
}

fn two(i: usize) -> Poly {
    MPoly::z(2, i)
}

fn one_plus_beta(i: usize) -> Poly {
    &MPoly::one(2) + &(&MPoly::beta(2) * &two(i))
}

/// The R-matrix entry for `cfg`, zero when inadmissible.
///
/// Colors are compared by label: a smaller label is a larger color. In the
/// Lascoux flavor a pair that does not cross swaps the weights of its two
/// exchange entries and has no pass-through entry; the prime flavor swaps
/// the exchange weights for every pair.
pub fn r_weight(cfg: RConfig, flavor: &Flavor, crossing: &BTreeSet<(Label, Label)>) -> Poly {
    let RConfig {
        lower_left: p,
        upper_left: q,
        upper_right: x,
        lower_right: y,
    } = cfg;
    if !flavor.is_colored() && [p, q, x, y].iter().any(|&l| l > 1) {
        return MPoly::zero(2);
    }
    let swapped_plain = &one_plus_beta(ZI) * &two(ZJ);
    let swapped_lower = &one_plus_beta(ZJ) * &two(ZJ);
    match (p, q, x, y) {
        (0, 0, 0, 0) => swapped_plain,
        (0, q, x, 0) if q == x => swapped_plain,
        (0, q, 0, y) if q == y => &(&two(ZJ) - &two(ZI)) * &two(ZJ),
        (p, 0, 0, y) if p == y => swapped_lower,
        _ if p == 0 || q == 0 || x == 0 || y == 0 => MPoly::zero(2),
        _ if p == q && x == p && y == p => swapped_plain,
        _ if p > q && x == q && y == p => {
            if swapped_noncrossing(flavor, crossing, q, p) {
                &one_plus_beta(ZI) * &two(ZJ)
            } else {
                &one_plus_beta(ZJ) * &two(ZI)
            }
        }
        _ if p < q && x == q && y == p => {
            if swapped_noncrossing(flavor, crossing, p, q) {
                &one_plus_beta(ZJ) * &two(ZI)
            } else {
                &one_plus_beta(ZI) * &two(ZJ)
            }
        }
        _ if p < q && x == p && y == q => {
            if matches!(flavor, Flavor::Lascoux(_)) && swapped_noncrossing(flavor, crossing, p, q) {
                MPoly::zero(2)
            } else {
                &two(ZJ) - &two(ZI)
            }
        }
        _ => MPoly::zero(2),
    }
}

/// Whether the pair `a < b` uses the swapped weights for non-crossing colors.
fn swapped_noncrossing(flavor: &Flavor, crossing: &BTreeSet<(Label, Label)>, a: Label, b: Label) -> bool {
    match flavor {
        Flavor::Lascoux(_) => !crossing.contains(&(a, b)),
        Flavor::LascouxPrime(_) => true,
        _ => false,
    }
}

/// A replacement weight for one L-vertex kind or one R-matrix entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutation {
    pub target: MutationTarget,
    pub weight: Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutationTarget {
    Vertex(VertexKind),
    R(RConfig),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    #[error("expected <target>=<weight>, got {0:?}")]
    Syntax(String),
    #[error("unknown mutation target {0:?}")]
    Target(String),
    #[error("bad weight: {0}")]
    Weight(#[from] ParsePolyError),
}

impl FromStr for Mutation {
    type Err = MutationError;

    /// `a2=1`, `b2=z1`, or `R(0,1,0,1)=z2` (labels in the order lower left,
    /// upper left, upper right, lower right).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lhs, rhs) = s.split_once('=').ok_or_else(|| MutationError::Syntax(s.to_string()))?;
        let lhs = lhs.trim();
        let kinds = [
            VertexKind::A1,
            VertexKind::A2,
            VertexKind::B1,
            VertexKind::B1Dagger,
            VertexKind::B1Prime,
            VertexKind::B1Same,
            VertexKind::B2,
            VertexKind::C1,
        ];
        let target = if let Some(k) = kinds.iter().find(|k| k.name() == lhs) {
            MutationTarget::Vertex(*k)
        } else {
            let inner = lhs
                .strip_prefix("R(")
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| MutationError::Target(lhs.to_string()))?;
            let labels: Vec<Label> = inner
                .split(',')
                .map(|t| t.trim().parse::<Label>())
                .collect::<Result<_, _>>()
                .map_err(|_| MutationError::Target(lhs.to_string()))?;
            match labels[..] {
                [p, q, x, y] => MutationTarget::R(RConfig::new(p, q, x, y)),
                _ => return Err(MutationError::Target(lhs.to_string())),
            }
        };
        Ok(Mutation {
            target,
            weight: Poly::parse(rhs.trim(), 2)?,
        })
    }
}

/// Weights of one flavor with a fixed crossing set, optionally mutated.
#[derive(Debug, Clone)]
pub struct RllSystem {
    flavor: Flavor,
    crossing: BTreeSet<(Label, Label)>,
    mutation: Option<Mutation>,
}

impl RllSystem {
    pub fn new(flavor: Flavor, mutation: Option<Mutation>) -> Self {
        let crossing = flavor.crossing_pairs();
        RllSystem {
            flavor,
            crossing,
            mutation,
        }
    }

    pub fn flavor(&self) -> &Flavor {
        &self.flavor
    }

    pub fn crossing(&self) -> &BTreeSet<(Label, Label)> {
        &self.crossing
    }

    /// L-vertex weight with spectral parameter `z_row` (`row` is 1 or 2).
    pub fn l_weight(&self, v: Vertex, row: usize) -> Poly {
        match admitted_kind(&self.flavor, &self.crossing, v) {
            None => MPoly::zero(2),
            Some(k) => match &self.mutation {
                Some(Mutation {
                    target: MutationTarget::Vertex(t),
                    weight,
                }) if *t == k => weight.clone(),
                _ => k.weight(2, row),
            },
        }
    }

    pub fn r_weight(&self, cfg: RConfig) -> Poly {
        match &self.mutation {
            Some(Mutation {
                target: MutationTarget::R(t),
                weight,
            }) if *t == cfg => weight.clone(),
            _ => r_weight(cfg, &self.flavor, &self.crossing),
        }
    }

    fn alphabet(&self) -> Vec<Label> {
        if self.flavor.is_colored() {
            vec![0, 1, 2, 3]
        } else {
            vec![0, 1]
        }
    }

    fn sides(&self, b: [Label; 6]) -> (Poly, Poly) {
        let [a, bb, c, d, e, f] = b;
        let alpha = self.alphabet();
        let mut lhs = MPoly::zero(2);
        let mut rhs = MPoly::zero(2);
        for &x in &alpha {
            for &y in &alpha {
                let r_in = self.r_weight(RConfig::new(a, bb, x, y));
                let r_out = self.r_weight(RConfig::new(y, x, d, e));
                for &k in &alpha {
                    if !r_in.is_zero() {
                        let top = self.l_weight(Vertex::new(x, c, d, k), ZI);
                        let bottom = self.l_weight(Vertex::new(y, k, e, f), ZJ);
                        if !top.is_zero() && !bottom.is_zero() {
                            lhs = &lhs + &(&(&r_in * &top) * &bottom);
                        }
                    }
                    if !r_out.is_zero() {
                        let top = self.l_weight(Vertex::new(bb, c, x, k), ZJ);
                        let bottom = self.l_weight(Vertex::new(a, k, y, f), ZI);
                        if !top.is_zero() && !bottom.is_zero() {
                            rhs = &rhs + &(&(&top * &bottom) * &r_out);
                        }
                    }
                }
            }
        }
        (lhs, rhs)
    }

    /// Check every boundary; stop at the first failure.
    pub fn check(&self) -> RllReport {
        let alpha = self.alphabet();
        let mut checked = 0;
        for b in boundaries(&alpha) {
            checked += 1;
            let (lhs, rhs) = self.sides(b);
            if lhs != rhs {
                return RllReport {
                    flavor: self.flavor.clone(),
                    crossing: self.crossing.clone(),
                    checked,
                    witness: Some(RllWitness { boundary: b, lhs, rhs }),
                };
            }
        }
        RllReport {
            flavor: self.flavor.clone(),
            crossing: self.crossing.clone(),
            checked,
            witness: None,
        }
    }
}

fn boundaries(alpha: &[Label]) -> impl Iterator<Item = [Label; 6]> + '_ {
    let k = alpha.len();
    (0..k.pow(6)).map(move |mut idx| {
        let mut b = [0; 6];
        for slot in b.iter_mut().rev() {
            *slot = alpha[idx % k];
            idx /= k;
        }
        b
    })
}

/// A boundary `(a, b, c, d, e, f)` where the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RllWitness {
    pub boundary: [Label; 6],
    pub lhs: Poly,
    pub rhs: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RllReport {
    pub flavor: Flavor,
    pub crossing: BTreeSet<(Label, Label)>,
    pub checked: usize,
    pub witness: Option<RllWitness>,
}

impl RllReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn to_json(&self) -> Value {
        let crossing: Vec<[Label; 2]> = self.crossing.iter().map(|&(a, b)| [a, b]).collect();
        let witness = self.witness.as_ref().map(|w| {
            let names = ["a", "b", "c", "d", "e", "f"];
            let boundary: serde_json::Map<String, Value> =
                names.iter().zip(w.boundary).map(|(n, l)| (n.to_string(), json!(l))).collect();
            json!({
                "boundary": boundary,
                "lhs": w.lhs.to_string(),
                "rhs": w.rhs.to_string(),
                "difference": (&w.lhs - &w.rhs).to_string(),
            })
        });
        json!({
            "flavor": self.flavor.name(),
            "crossing": crossing,
            "checked": self.checked,
            "passed": self.passed(),
            "witness": witness,
        })
    }
}

/// RLL reports for a flavor name. The Lascoux flavor is checked once for
/// every crossing set realized by a permutation of three colors.
pub fn check_flavor(name: &str, mutation: Option<&Mutation>) -> Option<Vec<RllReport>> {
    let id = Permutation::identity(3);
    let flavors = match name {
        "uncolored" => vec![Flavor::Uncolored],
        "atom" => vec![Flavor::Atom(id)],
        "lascoux" => Permutation::all(3).map(Flavor::Lascoux).collect(),
        "lascoux-prime" => vec![Flavor::LascouxPrime(id)],
        _ => return None,
    };
    Some(
        flavors
            .into_iter()
            .map(|f| RllSystem::new(f, mutation.cloned()).check())
            .collect(),
    )
}
