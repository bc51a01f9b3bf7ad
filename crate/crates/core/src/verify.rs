//! Seeded batch checks of the library's identities, one suite per claim.
//! Each suite compares two independent routes to the same object and
//! records every disagreement.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::array::{Array, Partition};
use crate::bijections::{
    associate, associate_functional, com_prime, commute, commute_sp, gamma_array,
    reversed_second_block, rho1, rho2_prime,
};
use crate::condense::{condense_down, condense_down_with, condense_left, condense_up, Schedule};
use crate::gen;
use crate::hive::{is_discrete_concave, pair_to_hive, AntiStandardPair, TriangleFunction};
use crate::lr::{
    lr_coefficient, lr_oracle, partitions, verify_associativity, verify_commutativity,
};
use crate::octahedron::{
    is_polarized_dc, prism_propagate, prism_top, prism_wall, rsk, rsk_inverse, tetra_propagate,
    OctahedronFrame,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Involution,
    Shapes,
    AssocCount,
    CommutCount,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Thm4,
        Suite::Involution,
        Suite::Shapes,
        Suite::AssocCount,
        Suite::CommutCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Thm4 => "thm4",
            Suite::Involution => "involution",
            Suite::Shapes => "shapes",
            Suite::AssocCount => "assoc-count",
            Suite::CommutCount => "commut-count",
        }
    }

    /// `(n, max_mass, cases)` used when a flag is absent. For the counting
    /// suites `max_mass` bounds `|ν|` and `cases` is unused.
    pub fn defaults(self) -> (usize, i64, usize) {
        match self {
            Suite::Thm1 => (5, 3, 100),
            Suite::Thm2 => (5, 4, 300),
            Suite::Thm3 => (2, 3, 50),
            Suite::Thm4 => (3, 3, 100),
            Suite::Involution => (4, 3, 200),
            Suite::Shapes => (5, 4, 500),
            Suite::AssocCount | Suite::CommutCount => (2, 4, 0),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub n: usize,
    pub max_mass: i64,
    pub cases: usize,
    pub seed: u64,
}

impl Config {
    pub fn defaults(suite: Suite, seed: u64) -> Self {
        let (n, max_mass, cases) = suite.defaults();
        Config {
            n,
            max_mass,
            cases,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

pub fn run(suite: Suite, cfg: &Config) -> Report {
    let mut t = Tally {
        checks: 0,
        failures: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.n.max(1);
    match suite {
        Suite::Thm1 => thm1(&mut t, &mut rng, n, cfg),
        Suite::Thm2 => thm2(&mut t, &mut rng, n, cfg),
        Suite::Thm3 => thm3(&mut t, &mut rng, n, cfg),
        Suite::Thm4 => thm4(&mut t, &mut rng, n, cfg),
        Suite::Involution => involution(&mut t, &mut rng, n, cfg),
        Suite::Shapes => shapes(&mut t, &mut rng, n, cfg),
        Suite::AssocCount => assoc_count(&mut t, n, cfg.max_mass),
        Suite::CommutCount => commut_count(&mut t, n, cfg.max_mass),
    }
    Report {
        suite,
        checks: t.checks,
        failures: t.failures,
    }
}

fn thm1(t: &mut Tally, rng: &mut ChaCha8Rng, n_max: usize, cfg: &Config) {
    for case in 0..cfg.cases {
        let n = rng.gen_range(1..=n_max);
        let (sp1, sp2) = gen::compatible_couple(rng, n, cfg.max_mass, 1);
        let (f, g) = (pair_to_hive(&sp1), pair_to_hive(&sp2));
        match tetra_propagate(n, |x, y| g.at(y, x + y), |x, z| f.at(x, x + z)) {
            Ok(tetra) => {
                t.check(is_polarized_dc(&tetra, &OctahedronFrame::TETRA), || {
                    format!("case {case}: not polarized DC")
                });
                let total = f.at(0, n);
                let slope = TriangleFunction::from_fn(n, |u, v| tetra.at(v - u, u, n - v) - total);
                let shadow = TriangleFunction::from_fn(n, |u, v| tetra.at(0, u, v - u));
                t.check(
                    is_discrete_concave(&slope) && is_discrete_concave(&shadow),
                    || format!("case {case}: a restriction is not discrete concave"),
                );
            }
            Err(e) => t.check(false, || format!("case {case}: {e}")),
        }
    }
}

fn fixture_f2() -> Array {
    Array::from_int_rows(&[&[2, 3, 1], &[1, 1, 5], &[1, 2, 2]])
}

fn int_rows(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| Scalar::int(v)).collect())
        .collect()
}

fn thm2(t: &mut Tally, rng: &mut ChaCha8Rng, n_max: usize, cfg: &Config) {
    let prism = prism_propagate(&fixture_f2());
    let top = prism_top(&prism).to_rows();
    t.check(
        top[1..] == int_rows(&[&[0, 4, 7, 11], &[0, 4, 10, 17], &[0, 4, 10, 18]]),
        || "worked prism: ceiling".into(),
    );
    let wall = prism_wall(&prism);
    let wall_ok = [
        (1, 1, 6),
        (1, 2, 8),
        (1, 3, 11),
        (2, 2, 13),
        (2, 3, 17),
        (3, 3, 18),
    ]
    .iter()
    .all(|&(y, z, v)| wall.at(y, z) == Scalar::int(v));
    t.check(wall_ok, || "worked prism: wall".into());
    for case in 0..cfg.cases {
        let (n, m) = (rng.gen_range(1..=n_max), rng.gen_range(1..=n_max));
        let a = gen::array(rng, n, m, cfg.max_mass, 4);
        let (d, l) = rsk(&a);
        t.check(d == condense_down(&a) && l == condense_left(&a), || {
            format!("case {case}: rsk differs from condensation on {a:?}")
        });
        t.check(rsk_inverse(&d, &l).as_ref() == Ok(&a), || {
            format!("case {case}: rsk_inverse does not recover {a:?}")
        });
        if case % 3 == 0 {
            // D a and L U a share a shape; their preimage is U a
            let l2 = condense_left(&condense_up(&a));
            let back = rsk_inverse(&d, &l2);
            t.check(
                back.as_ref()
                    .is_ok_and(|c| rsk(c) == (d.clone(), l2.clone())),
                || format!("case {case}: rsk does not invert rsk_inverse"),
            );
        }
    }
}

fn thm3(t: &mut Tally, rng: &mut ChaCha8Rng, n_max: usize, cfg: &Config) {
    for case in 0..cfg.cases {
        let n = rng.gen_range(1..=n_max);
        let (sp1, sp2) = gen::compatible_couple(rng, n, cfg.max_mass, 1);
        let arrays = associate(&sp1, &sp2).map(|(o1, o2)| (pair_to_hive(&o1), pair_to_hive(&o2)));
        let functions = associate_functional(&pair_to_hive(&sp1), &pair_to_hive(&sp2));
        t.check(arrays.is_ok() && arrays == functions, || {
            format!(
                "case {case}: routes differ for {:?} / {:?}",
                sp1.b(),
                sp2.b()
            )
        });
    }
}

fn fixture_f3() -> AntiStandardPair {
    AntiStandardPair::from_concat(&Array::from_int_rows(&[
        &[0, 2, 1, 3, 0, 0],
        &[0, 0, 2, 1, 2, 0],
        &[0, 0, 0, 1, 2, 1],
    ]))
    .expect("fixture is anti-standard")
}

fn thm4(t: &mut Tally, rng: &mut ChaCha8Rng, n_max: usize, cfg: &Config) {
    let f4 = TriangleFunction::from_int_rows(&[&[0], &[3, 6], &[5, 9, 11], &[5, 10, 14, 15]]);
    let expected =
        TriangleFunction::from_int_rows(&[&[0], &[5, 6], &[9, 11, 11], &[10, 13, 15, 15]]);
    t.check(com_prime(&f4).as_ref() == Ok(&expected), || {
        "fixture: functional commuter".into()
    });
    let mut pairs = vec![crate::bijections::to_standard(&fixture_f3())];
    for _ in 0..cfg.cases {
        let n = rng.gen_range(1..=n_max);
        pairs.push(gen::standard_pair(rng, n, cfg.max_mass, 1));
    }
    for (case, p) in pairs.iter().enumerate() {
        let h = pair_to_hive(p);
        let image = commute_sp(p);
        t.check(rho1(p) == image, || {
            format!("case {case}: rho1 differs from the commuter on {:?}", p.b())
        });
        let hive_image = pair_to_hive(&image);
        t.check(com_prime(&h).as_ref() == Ok(&hive_image), || {
            format!("case {case}: functional commuter differs")
        });
        t.check(rho2_prime(&h).as_ref() == Ok(&hive_image), || {
            format!("case {case}: rho2' differs from the commuter")
        });
        t.check(
            gamma_array(&h).ok() == reversed_second_block(&h).ok(),
            || format!("case {case}: index identity fails"),
        );
    }
}

fn involution(t: &mut Tally, rng: &mut ChaCha8Rng, n_max: usize, cfg: &Config) {
    let c = commute(&fixture_f3());
    let expected = Array::from_int_rows(&[
        &[1, 3, 1, 1, 0, 0],
        &[0, 1, 3, 1, 0, 0],
        &[0, 0, 1, 1, 2, 0],
    ]);
    t.check(c.concat() == expected, || "fixture: commuter output".into());
    t.check(commute(&c) == fixture_f3(), || {
        "fixture: commuter is not an involution".into()
    });
    for case in 0..cfg.cases {
        let n = rng.gen_range(1..=n_max);
        let q = gen::antistandard_pair(rng, n, cfg.max_mass, 3);
        let image = commute(&q);
        t.check(commute(&image) == q, || {
            format!("case {case}: not an involution on {:?}", q.concat())
        });
        let (before, after) = (q.hive_type(), image.hive_type());
        t.check(
            before.lambda == after.mu && before.mu == after.lambda && before.nu == after.nu,
            || format!("case {case}: type not swapped"),
        );
    }
}

fn shapes(t: &mut Tally, rng: &mut ChaCha8Rng, n_max: usize, cfg: &Config) {
    for case in 0..cfg.cases {
        let (n, m) = (rng.gen_range(1..=n_max), rng.gen_range(1..=n_max));
        let a = gen::array(rng, n, m, cfg.max_mass, 4);
        let d = condense_down(&a);
        let rows = d.row_sums();
        let cols = condense_left(&a).col_sums();
        let k = rows.len().max(cols.len());
        let pad = |v: &[Scalar]| {
            (0..k)
                .map(|i| v.get(i).copied().unwrap_or(Scalar::ZERO))
                .collect::<Vec<_>>()
        };
        t.check(pad(&rows) == pad(&cols), || {
            format!("case {case}: D and L shapes differ on {a:?}")
        });
        let seed = rng.gen();
        let same = [
            Schedule::DescendingSweeps,
            Schedule::RowInsertion,
            Schedule::Random { seed },
        ]
        .into_iter()
        .all(|s| condense_down_with(&a, s) == d);
        t.check(same, || format!("case {case}: schedules disagree on {a:?}"));
    }
}

fn scan(n: usize, bound: i64) -> Vec<Partition> {
    (0..=bound).flat_map(|k| partitions(n, k, k)).collect()
}

fn commut_count(t: &mut Tally, n: usize, bound: i64) {
    let all = scan(n, bound);
    for lambda in &all {
        for mu in &all {
            for nu in &all {
                let r = verify_commutativity(lambda, mu, nu);
                t.check(r.bijective, || {
                    format!("{lambda:?} {mu:?} {nu:?}: {:?}", r.failures)
                });
                let c = lr_coefficient(lambda, mu, nu);
                t.check(
                    c as usize == r.domain && c == lr_oracle(lambda, mu, nu),
                    || format!("{lambda:?} {mu:?} {nu:?}: counts disagree"),
                );
            }
        }
    }
}

fn assoc_count(t: &mut Tally, n: usize, bound: i64) {
    let all = scan(n, bound);
    let size = |p: &Partition| p.size().to_integer().unwrap_or(0);
    for pi in &all {
        for lambda in &all {
            for mu in &all {
                for nu in all
                    .iter()
                    .filter(|nu| size(lambda) + size(mu) + size(nu) == size(pi))
                {
                    let r = verify_associativity(lambda, mu, nu, pi, size(pi));
                    t.check(r.bijective, || {
                        format!("{lambda:?} {mu:?} {nu:?} {pi:?}: {:?}", r.failures)
                    });
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("thm5".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        for s in Suite::ALL {
            let cfg = Config {
                n: 2,
                max_mass: 2,
                cases: 5,
                seed: 3,
            };
            let r = run(s, &cfg);
            assert!(r.passed() && r.checks > 0, "{s}: {:?}", r.failures);
        }
    }
}
