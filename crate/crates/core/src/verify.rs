//! Exhaustive and randomized cross-checks between the different
//! constructions, packaged as named suites.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{MPoly, Monomial};
use crate::gt::{GtPattern, MarkedGtPattern};
use crate::lattice::{xi, Flavor, LatticeState, MarkedState, Model};
use crate::operators::{
    apply_word, atom_op, demazure_lascoux, grothendieck_det, grothendieck_ddo, lascoux, lascoux_along, lascoux_atom,
    lascoux_atom_along,
};
use crate::skyline::{enumerate_skyline, eta, psi, skyline_sum, SkylineTableau};
use crate::symgroup::{Partition, Permutation};
use crate::tableaux::{enumerate_svt, grothendieck_svt, KeyClasses};
use crate::yangbaxter::check_flavor;
use crate::Poly;

pub const SUITES: [&str; 11] = [
    "ybe",
    "groth4way",
    "thm33",
    "thm34",
    "thm37",
    "eq24",
    "thm41",
    "thm43",
    "stability",
    "relations",
    "bijections",
];

/// Ranges for the suites. `bound` replaces the suite's default bounding
/// partition; `max_cells` drops partitions with more cells.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n: usize,
    pub bound: Option<Partition>,
    pub max_cells: Option<usize>,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n: 3,
            bound: None,
            max_cells: None,
            seed: 0,
            samples: 100,
        }
    }
}

impl VerifyOptions {
    fn partitions(&self, default: &[usize]) -> Vec<Partition> {
        let bound = self.bound.clone().unwrap_or_else(|| {
            let mut parts: Vec<usize> = default.iter().copied().take(self.n).collect();
            parts.resize(self.n, 0);
            Partition::new(parts, self.n).expect("default bounds are partitions")
        });
        Partition::all_within(&bound)
            .into_iter()
            .filter(|l| self.max_cells.is_none_or(|k| l.size() <= k))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub witness: Option<Value>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "checks": self.checks,
            "passed": self.passed(),
            "witness": self.witness,
        })
    }
}

struct Tally {
    report: SuiteReport,
}

impl Tally {
    fn new(suite: &str) -> Self {
        Tally {
            report: SuiteReport {
                suite: suite.to_string(),
                checks: 0,
                witness: None,
            },
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) -> bool {
        self.report.checks += 1;
        if !ok && self.report.witness.is_none() {
            self.report.witness = Some(witness());
        }
        ok
    }

    fn failed(&self) -> bool {
        self.report.witness.is_some()
    }

    fn finish(self) -> SuiteReport {
        self.report
    }
}

fn polys_equal(t: &mut Tally, what: &str, lambda: &Partition, w: Option<&Permutation>, a: &Poly, b: &Poly) -> bool {
    t.check(a == b, || {
        json!({
            "check": what,
            "lambda": lambda.parts(),
            "w": w.map(Permutation::word_string),
            "left": a.to_string(),
            "right": b.to_string(),
        })
    })
}

/// Run one suite by name.
pub fn run_suite(name: &str, opts: &VerifyOptions) -> Option<SuiteReport> {
    Some(match name {
        "ybe" => ybe(),
        "groth4way" => groth4way(opts),
        "thm33" => atom_lattice(opts),
        "thm34" => lascoux_lattice(opts, false),
        "thm37" => lascoux_lattice(opts, true),
        "eq24" => atom_decomposition(opts),
        "thm41" => key_classes(opts),
        "thm43" => skyline(opts),
        "stability" => stability(opts),
        "relations" => relations(opts),
        "bijections" => bijections(opts),
        _ => return None,
    })
}

/// RLL relation for all four models.
pub fn ybe() -> SuiteReport {
    let mut t = Tally::new("ybe");
    for name in ["uncolored", "atom", "lascoux", "lascoux-prime"] {
        for report in check_flavor(name, None).expect("known flavor") {
            t.check(report.passed(), || report.to_json());
        }
    }
    t.finish()
}

/// Determinant, uncolored partition function, tableau sum and divided
/// differences all give the same Grothendieck polynomial.
pub fn groth4way(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new("groth4way");
    for lambda in opts.partitions(&[3, 3, 3]) {
        let det: Poly = grothendieck_det(&lambda);
        let lattice: Poly = Model::new(Flavor::Uncolored, &lambda, None)
            .expect("minimal width")
            .partition_function();
        let svt: Poly = grothendieck_svt(&lambda);
        let ddo: Poly = grothendieck_ddo(&lambda);
        polys_equal(&mut t, "det = lattice", &lambda, None, &det, &lattice);
        polys_equal(&mut t, "det = svt", &lambda, None, &det, &svt);
        polys_equal(&mut t, "det = ddo", &lambda, None, &det, &ddo);
    }
    t.finish()
}

/// Atom lattice model against atom operators, for every permutation.
pub fn atom_lattice(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new("thm33");
    for lambda in opts.partitions(&[3, 3, 3]) {
        for w in Permutation::all(opts.n) {
            let z: Poly = Model::new(Flavor::Atom(w.clone()), &lambda, None)
                .expect("minimal width")
                .partition_function();
            polys_equal(&mut t, "atom lattice = atom operators", &lambda, Some(&w), &z, &lascoux_atom(&w, &lambda));
        }
    }
    t.finish()
}

/// Both Lascoux lattice models against Demazure–Lascoux operators; with
/// `with_xi` the prime model and the map `ξ` are checked as well.
pub fn lascoux_lattice(opts: &VerifyOptions, with_xi: bool) -> SuiteReport {
    let mut t = Tally::new(if with_xi { "thm37" } else { "thm34" });
    for lambda in opts.partitions(&[3, 3, 3]) {
        for w in Permutation::all(opts.n) {
            let expected: Poly = lascoux(&w, &lambda);
            let plain = Model::new(Flavor::Lascoux(w.clone()), &lambda, None).expect("minimal width");
            if !with_xi {
                polys_equal(&mut t, "lascoux lattice = operators", &lambda, Some(&w), &plain.partition_function(), &expected);
                continue;
            }
            let prime = Model::new(Flavor::LascouxPrime(w.clone()), &lambda, None).expect("minimal width");
            polys_equal(&mut t, "prime lattice = operators", &lambda, Some(&w), &prime.partition_function(), &expected);
            let plain_states = plain.states();
            let prime_states = prime.states();
            t.check(plain_states.len() == prime_states.len(), || {
                json!({"check": "state counts", "lambda": lambda.parts(), "w": w.word_string(),
                       "lascoux": plain_states.len(), "prime": prime_states.len()})
            });
            let mut images = BTreeSet::new();
            for st in &prime_states {
                let image = xi(st);
                let ok = image.as_ref().is_ok_and(|im| {
                    im.weight::<num_bigint::BigInt>() == st.weight::<num_bigint::BigInt>() && im.same_support(st)
                });
                t.check(ok, || json!({"check": "xi", "lambda": lambda.parts(), "w": w.word_string(), "state": st.to_json()}));
                if let Ok(im) = image {
                    images.insert(im.to_ascii());
                }
            }
            t.check(images.len() == plain_states.len(), || {
                json!({"check": "xi is onto", "lambda": lambda.parts(), "w": w.word_string()})
            });
        }
    }
    t.finish()
}

/// Lascoux polynomials split into atoms over the Bruhat interval, and an
/// atom vanishes exactly when the permutation is not minimal in its coset.
pub fn atom_decomposition(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new("eq24");
    let perms: Vec<Permutation> = Permutation::all(opts.n).collect();
    for lambda in opts.partitions(&[3, 3, 3]) {
        let atoms: Vec<Poly> = perms.iter().map(|u| lascoux_atom(u, &lambda)).collect();
        for w in &perms {
            let sum = MPoly::sum(
                opts.n,
                perms.iter().zip(&atoms).filter(|(u, _)| u.bruhat_leq(w)).map(|(_, a)| a.clone()),
            );
            polys_equal(&mut t, "lascoux = sum of atoms below", &lambda, Some(w), &lascoux(w, &lambda), &sum);
        }
        for (w, a) in perms.iter().zip(&atoms) {
            t.check(a.is_zero() != w.is_min_rep(&lambda), || {
                json!({"check": "atom vanishing", "lambda": lambda.parts(), "w": w.word_string(), "atom": a.to_string()})
            });
        }
    }
    t.finish()
}

/// Key classes of set-valued tableaux against atoms and Lascoux polynomials.
pub fn key_classes(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new("thm41");
    for lambda in opts.partitions(&[3, 3, 1]) {
        let classes = KeyClasses::new(&lambda);
        for w in Permutation::all(opts.n) {
            let atom: Poly = lascoux_atom(&w.min_coset_rep(&lambda), &lambda);
            polys_equal(&mut t, "key class = atom", &lambda, Some(&w), &classes.class_sum(&w), &atom);
            polys_equal(&mut t, "filtered keys = lascoux", &lambda, Some(&w), &classes.filtered_sum(&w), &lascoux(&w, &lambda));
        }
    }
    t.finish()
}

/// Skyline tableaux against atoms, and `η ∘ ψ` as a weight-preserving
/// bijection from marked atom states.
pub fn skyline(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new("thm43");
    for lambda in opts.partitions(&[3, 2, 1]) {
        for w in Permutation::all(opts.n) {
            let atom: Poly = lascoux_atom(&w.min_coset_rep(&lambda), &lambda);
            polys_equal(&mut t, "skyline sum = atom", &lambda, Some(&w), &skyline_sum(&w, &lambda), &atom);
            if !w.is_min_rep(&lambda) {
                continue;
            }
            let shape = w.act_on(lambda.parts());
            let mut image: BTreeSet<SkylineTableau> = BTreeSet::new();
            let mut count = 0;
            for st in Model::new(Flavor::Atom(w.clone()), &lambda, None).expect("minimal width").states() {
                for ms in MarkedState::all(&st) {
                    count += 1;
                    let r = psi(&ms);
                    let s = eta(&r, &shape);
                    let ok = s.as_ref().is_ok_and(|s| s.monomial::<num_bigint::BigInt>() == ms.monomial());
                    t.check(ok, || {
                        json!({"check": "eta psi", "lambda": lambda.parts(), "w": w.word_string(),
                               "reverse": r.to_string(), "result": format!("{s:?}")})
                    });
                    if let Ok(s) = s {
                        image.insert(s);
                    }
                }
            }
            let all: BTreeSet<SkylineTableau> = enumerate_skyline(&shape, opts.n).into_iter().collect();
            t.check(image.len() == count && image == all, || {
                json!({"check": "eta psi bijective", "lambda": lambda.parts(), "w": w.word_string(),
                       "marked": count, "image": image.len(), "skyline": all.len()})
            });
        }
    }
    t.finish()
}

/// Partition functions do not depend on the width of the grid.
pub fn stability(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new("stability");
    for lambda in opts.partitions(&[2, 2, 1]) {
        let mut flavors = vec![Flavor::Uncolored];
        for w in Permutation::all(opts.n) {
            flavors.extend([Flavor::Atom(w.clone()), Flavor::Lascoux(w.clone()), Flavor::LascouxPrime(w)]);
        }
        let base = lambda.first() + opts.n;
        for f in flavors {
            let z0: Poly = Model::new(f.clone(), &lambda, Some(base)).expect("minimal width").partition_function();
            for m in base + 1..=base + 3 {
                let z: Poly = Model::new(f.clone(), &lambda, Some(m)).expect("wider grid").partition_function();
                t.check(z == z0, || {
                    json!({"check": "width", "flavor": f.name(), "w": f.permutation().map(Permutation::word_string),
                           "lambda": lambda.parts(), "m": m, "left": z0.to_string(), "right": z.to_string()})
                });
            }
        }
    }
    t.finish()
}

/// A random polynomial in `n` variables with small coefficients.
pub fn random_poly(rng: &mut impl Rng, n: usize) -> Poly {
    let terms = rng.gen_range(1..=4);
    MPoly::from_terms(
        n,
        (0..terms).map(|_| {
            let mut e = vec![rng.gen_range(0..=1)];
            e.extend((0..n).map(|_| rng.gen_range(0..=3)));
            let c: i64 = rng.gen_range(-5..=5);
            (Monomial::new(e), num_bigint::BigInt::from(c))
        }),
    )
}

/// Hecke relations on seeded random polynomials in four variables, and
/// independence of the reduced word for every permutation of four letters.
pub fn relations(opts: &VerifyOptions) -> SuiteReport {
    let n = 4;
    let mut t = Tally::new("relations");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let f = random_poly(&mut rng, n);
        for atom in [false, true] {
            let word = |w: &[usize]| apply_word(w, &f, atom).expect("operators divide exactly");
            let mut rel = |name: &str, a: Poly, b: Poly| {
                t.check(a == b, || json!({"check": name, "atom": atom, "f": f.to_string(), "left": a.to_string(), "right": b.to_string()}))
            };
            for i in 1..n {
                let once = word(&[i]);
                let twice = word(&[i, i]);
                if atom {
                    rel("square", twice, -&once);
                } else {
                    rel("square", twice, once);
                }
                if i + 1 < n {
                    rel("braid", word(&[i, i + 1, i]), word(&[i + 1, i, i + 1]));
                }
                for j in i + 2..n {
                    rel("commute", word(&[i, j]), word(&[j, i]));
                }
            }
        }
        let direct = &demazure_lascoux(1, &f).expect("exact") - &f;
        t.check(direct == atom_op(1, &f).expect("exact"), || json!({"check": "atom = op - 1", "f": f.to_string()}));
    }
    let lambda = Partition::new(vec![2, 1, 0, 0], n).expect("partition");
    for w in Permutation::all(n) {
        let words = w.all_reduced_words();
        let l0: Poly = lascoux_along(&words[0], &lambda);
        let a0: Poly = lascoux_atom_along(&words[0], &lambda);
        for word in &words[1..] {
            let l: Poly = lascoux_along(word, &lambda);
            let a: Poly = lascoux_atom_along(word, &lambda);
            t.check(l == l0 && a == a0, || json!({"check": "reduced words", "w": w.word_string(), "word": word}));
        }
    }
    t.finish()
}

/// Round trips of the maps between states, patterns and tableaux.
pub fn bijections(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new("bijections");
    let n = opts.n;
    for lambda in opts.partitions(&[2, 2, 1]) {
        let m = lambda.first() + n;
        let states = Model::new(Flavor::Uncolored, &lambda, None).expect("minimal width").states();
        let patterns = GtPattern::all_with_top(&lambda);
        t.check(states.len() == patterns.len(), || {
            json!({"check": "states vs patterns", "lambda": lambda.parts(), "states": states.len(), "patterns": patterns.len()})
        });
        for st in &states {
            let back = LatticeState::from_gt(&st.to_gt(), m);
            t.check(back.as_ref() == Ok(st), || json!({"check": "state -> gt -> state", "state": st.to_json()}));
            let total = MPoly::sum(n, MarkedState::all(st).iter().map(MarkedState::monomial));
            t.check(total == st.weight::<num_bigint::BigInt>(), || json!({"check": "marked weights", "state": st.to_json()}));
            for ms in MarkedState::all(st) {
                let g = ms.to_marked_gt();
                let back = MarkedState::from_marked_gt(&g, m);
                t.check(back.as_ref() == Ok(&ms), || json!({"check": "marked state round trip", "state": st.to_json()}));
            }
        }
        for g in &patterns {
            let ok = LatticeState::from_gt(g, m).is_ok_and(|st| st.to_gt() == *g);
            t.check(ok, || json!({"check": "gt -> state -> gt", "lambda": lambda.parts()}));
        }
        let marked: Vec<MarkedGtPattern> = patterns.iter().flat_map(MarkedGtPattern::all_markings).collect();
        let tableaux = enumerate_svt(&lambda, n);
        t.check(marked.len() == tableaux.len(), || {
            json!({"check": "marked patterns vs svt", "lambda": lambda.parts(), "marked": marked.len(), "svt": tableaux.len()})
        });
        for g in &marked {
            let tab = g.to_tableau();
            t.check(MarkedGtPattern::from_tableau(&tab).as_ref() == Ok(g), || {
                json!({"check": "phi inverse", "tableau": tab.to_string()})
            });
            t.check(tab.weight() == g.weight() && tab.excess() == g.marks().len(), || {
                json!({"check": "phi weight", "tableau": tab.to_string()})
            });
        }
        for tab in &tableaux {
            let ok = MarkedGtPattern::from_tableau(tab).is_ok_and(|g| g.to_tableau() == *tab);
            t.check(ok, || json!({"check": "phi onto", "tableau": tab.to_string()}));
        }
        let mut images = BTreeSet::new();
        let mut count = 0;
        for w in Permutation::all(n) {
            for st in Model::new(Flavor::Atom(w.clone()), &lambda, None).expect("minimal width").states() {
                for ms in MarkedState::all(&st) {
                    count += 1;
                    let r = psi(&ms);
                    t.check(r.monomial::<num_bigint::BigInt>() == ms.monomial(), || {
                        json!({"check": "psi weight", "w": w.word_string(), "reverse": r.to_string()})
                    });
                    images.insert(r);
                }
            }
            let prime = Model::new(Flavor::LascouxPrime(w.clone()), &lambda, None).expect("minimal width");
            let plain = Model::new(Flavor::Lascoux(w.clone()), &lambda, None).expect("minimal width").states();
            let mut seen = BTreeSet::new();
            for st in prime.states() {
                let ok = xi(&st).is_ok_and(|im| {
                    let same = im.weight::<num_bigint::BigInt>() == st.weight::<num_bigint::BigInt>();
                    seen.insert(im.to_ascii());
                    same
                });
                t.check(ok, || json!({"check": "xi", "w": w.word_string(), "state": st.to_json()}));
            }
            t.check(seen.len() == plain.len(), || json!({"check": "xi bijective", "w": w.word_string(), "lambda": lambda.parts()}));
        }
        t.check(images.len() == count && count == tableaux.len(), || {
            json!({"check": "psi bijective", "lambda": lambda.parts(), "marked": count, "images": images.len(), "svt": tableaux.len()})
        });
        if t.failed() {
            break;
        }
    }
    t.finish()
}
