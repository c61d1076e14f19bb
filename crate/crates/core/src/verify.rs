//! Verification suites behind `intdiff verify`.
//!
//! Each suite is a list of independent checks. Checks run concurrently; the
//! report keeps the declaration order so output is deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::element::Element1;
use crate::oracle::{consistent, to_matrix};
use crate::random::Sampler;
use crate::rational::{self, Rational};
use crate::structure::{
    bimodule_filtration_dims, census, kernel_witness_check, multiplicity_report, project_bn,
    q_dims, socle_level, split, Label, MultiplicityReport, STABLE_WINDOW,
};
use crate::tensor::ElementN;

/// Frozen `dim V_i` for the bimodule generated by `{1, ∫}`, `i = 0..=14`.
pub const UNIT_INTEGRAL_DIMS: [usize; 15] = [
    2, 7, 15, 26, 40, 57, 77, 100, 126, 155, 187, 222, 260, 301, 345,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Oracle,
    Dims,
    Socle,
    Kernel,
    Holonomy,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Relations,
        Suite::Oracle,
        Suite::Dims,
        Suite::Socle,
        Suite::Kernel,
        Suite::Holonomy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Oracle => "oracle",
            Suite::Dims => "dims",
            Suite::Socle => "socle",
            Suite::Kernel => "kernel",
            Suite::Holonomy => "holonomy",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Overrides every randomized sample count when set.
    pub samples: Option<usize>,
}

impl VerifyConfig {
    fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

type Check = (Suite, &'static str, fn(&VerifyConfig) -> (bool, String));

fn checks() -> Vec<Check> {
    vec![
        (Suite::Relations, "defining relations", check_relations),
        (
            Suite::Relations,
            "matrix-unit calculus",
            check_unit_calculus,
        ),
        (Suite::Relations, "multiplication table", check_table),
        (Suite::Oracle, "random pairs at N=24", check_random_pairs),
        (Suite::Oracle, "e_ij = (j!/i!) E_ij", check_unit_scalars),
        (Suite::Oracle, "split round trip", check_split),
        (Suite::Dims, "Q dimension counts", check_q_dims),
        (Suite::Dims, "F multiplicity 1", check_f_multiplicity),
        (Suite::Socle, "socle levels", check_socle_levels),
        (Suite::Socle, "socle monotonicity", check_socle_monotone),
        (Suite::Socle, "census", check_census),
        (Suite::Kernel, "kernel witness", check_kernel),
        (Suite::Kernel, "quotient homomorphism", check_quotient),
        (Suite::Holonomy, "I_1 multiplicity 3", check_holonomy),
    ]
}

/// Runs a suite (or all of them) and returns one result per check.
pub fn run(suite: Suite, config: &VerifyConfig) -> Vec<CheckResult> {
    let selected: Vec<Check> = checks()
        .into_iter()
        .filter(|(s, _, _)| suite == Suite::All || *s == suite)
        .collect();
    selected
        .par_iter()
        .map(|&(suite, name, check)| {
            let start = Instant::now();
            let (passed, detail) = check(config);
            CheckResult {
                suite,
                name,
                passed,
                detail,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

fn outcome(failures: Vec<String>, ok: impl Into<String>) -> (bool, String) {
    if failures.is_empty() {
        (true, ok.into())
    } else {
        (false, failures.join("; "))
    }
}

fn expect_eq(failures: &mut Vec<String>, label: &str, got: &Element1, want: &Element1) {
    if got != want {
        failures.push(format!("{label}: got {got}, expected {want}"));
    }
}

fn check_relations(_: &VerifyConfig) -> (bool, String) {
    let d = Element1::d_pow(1);
    let i = Element1::integral_pow(1);
    let h = Element1::h();
    let e = Element1::one().sub(&i.mul(&d));
    let mut f = Vec::new();
    expect_eq(&mut f, "∂∫", &d.mul(&i), &Element1::one());
    expect_eq(&mut f, "[H,∫]", &h.mul(&i).sub(&i.mul(&h)), &i);
    expect_eq(&mut f, "[H,∂]", &h.mul(&d).sub(&d.mul(&h)), &d.neg());
    expect_eq(&mut f, "H(1-∫∂)", &h.mul(&e), &e);
    expect_eq(&mut f, "(1-∫∂)H", &e.mul(&h), &e);
    expect_eq(
        &mut f,
        "∫∂",
        &i.mul(&d),
        &Element1::one().sub(&Element1::unit(0, 0)),
    );
    expect_eq(&mut f, "x", &i.mul(&h), &Element1::x());
    expect_eq(
        &mut f,
        "x^2",
        &Element1::x().pow(2),
        &Element1::integral_pow(2)
            .mul(&h)
            .mul(&h.add(&Element1::one())),
    );
    outcome(f, "8 identities hold")
}

fn check_unit_calculus(_: &VerifyConfig) -> (bool, String) {
    let mut f = Vec::new();
    for i in 0..6u64 {
        for j in 0..6u64 {
            let def = Element1::integral_pow(i)
                .mul(&Element1::d_pow(j))
                .sub(&Element1::integral_pow(i + 1).mul(&Element1::d_pow(j + 1)));
            expect_eq(
                &mut f,
                &format!("e({i},{j}) definition"),
                &def,
                &Element1::unit(i, j),
            );
            expect_eq(
                &mut f,
                &format!("∫^{i} e00 ∂^{j}"),
                &Element1::integral_pow(i)
                    .mul(&Element1::unit(0, 0))
                    .mul(&Element1::d_pow(j)),
                &Element1::unit(i, j),
            );
            for k in 0..6u64 {
                for l in 0..6u64 {
                    let want = if j == k {
                        Element1::unit(i, l)
                    } else {
                        Element1::zero()
                    };
                    expect_eq(
                        &mut f,
                        &format!("e({i},{j})e({k},{l})"),
                        &Element1::unit(i, j).mul(&Element1::unit(k, l)),
                        &want,
                    );
                }
            }
        }
    }
    outcome(f, "e_ij e_kl = δ_jk e_il for indices < 6")
}

fn check_table(_: &VerifyConfig) -> (bool, String) {
    let d = Element1::d_pow(1);
    let i = Element1::integral_pow(1);
    let h = Element1::h();
    let one = Element1::one();
    let mut f = Vec::new();
    expect_eq(&mut f, "∫H", &i.mul(&h), &h.sub(&one).mul(&i));
    expect_eq(&mut f, "H∂", &h.mul(&d), &d.mul(&h.sub(&one)));
    for s in 0..6u64 {
        for t in 0..6u64 {
            let e = Element1::unit(s, t);
            expect_eq(&mut f, "∫e", &i.mul(&e), &Element1::unit(s + 1, t));
            let want = if t == 0 {
                Element1::zero()
            } else {
                Element1::unit(s, t - 1)
            };
            expect_eq(&mut f, "e∫", &e.mul(&i), &want);
            let want = if s == 0 {
                Element1::zero()
            } else {
                Element1::unit(s - 1, t)
            };
            expect_eq(&mut f, "∂e", &d.mul(&e), &want);
            expect_eq(&mut f, "e∂", &e.mul(&d), &Element1::unit(s, t + 1));
        }
        let e = Element1::unit(s, s);
        let scaled = e.scale(&rational::int(s as i64 + 1));
        expect_eq(&mut f, "He_ii", &h.mul(&e), &scaled);
        expect_eq(&mut f, "e_iiH", &e.mul(&h), &scaled);
    }
    outcome(f, "multiplication table holds")
}

fn check_random_pairs(config: &VerifyConfig) -> (bool, String) {
    let n = config.samples_or(500);
    let mut rng = Sampler::new(config.seed);
    let pairs: Vec<(Element1, Element1)> =
        (0..n).map(|_| (rng.element1(), rng.element1())).collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(k, (a, b))| match consistent(a, b, 24) {
            Ok(true) => None,
            Ok(false) => Some(format!("pair {k} disagrees")),
            Err(e) => Some(format!("pair {k}: {e}")),
        })
        .collect();
    outcome(bad, format!("{n} pairs consistent"))
}

fn check_unit_scalars(_: &VerifyConfig) -> (bool, String) {
    let mut f = Vec::new();
    for i in 0..=8u64 {
        for j in 0..=8u64 {
            let m = to_matrix(&Element1::unit(i, j), 10).to_monomial_basis();
            let scalar = rational::factorial(j) / rational::factorial(i);
            for r in 0..10 {
                for c in 0..10 {
                    let want = if (r as u64, c as u64) == (i, j) {
                        scalar.clone()
                    } else {
                        Rational::zero()
                    };
                    if m.get(r, c) != &want {
                        f.push(format!("e({i},{j}) entry ({r},{c})"));
                    }
                }
            }
        }
    }
    outcome(f, "81 matrix units match")
}

fn check_split(config: &VerifyConfig) -> (bool, String) {
    let n = config.samples_or(500);
    let mut rng = Sampler::new(config.seed.wrapping_add(1));
    let mut f = Vec::new();
    for k in 0..n {
        let a = rng.element1();
        let b = rng.element1();
        let s = split(&a);
        if s.sum() != a || !s.parts_in_spans() {
            f.push(format!("sample {k}: bad split of {a}"));
        }
        if !consistent(&s.a_part.add(&s.f_part).add(&s.l_part), &b, 24).unwrap_or(false) {
            f.push(format!("sample {k}: recombined product disagrees"));
        }
    }
    outcome(f, format!("{n} splits re-sum"))
}

fn check_q_dims(_: &VerifyConfig) -> (bool, String) {
    let dims = q_dims(12);
    let want: Vec<usize> = (0..=12).map(|i| (i + 1) * (i + 2) / 2).collect();
    if dims == want {
        (true, format!("{dims:?}"))
    } else {
        (false, format!("got {dims:?}, expected {want:?}"))
    }
}

fn check_f_multiplicity(_: &VerifyConfig) -> (bool, String) {
    let dims = match bimodule_filtration_dims(&[Element1::unit(0, 0)], 10) {
        Ok(d) => d,
        Err(e) => return (false, e.to_string()),
    };
    let want: Vec<usize> = (0..=10).map(|i| (i + 1) * (i + 2) / 2).collect();
    let report = multiplicity_report(&dims);
    let ok = dims == want
        && matches!(
            report,
            Some(MultiplicityReport {
                degree: 2,
                leading_difference: Some(1),
                ..
            })
        );
    (ok, format!("dims {dims:?}, report {report:?}"))
}

fn check_holonomy(_: &VerifyConfig) -> (bool, String) {
    let gens = [Element1::one(), Element1::integral_pow(1)];
    let dims = match bimodule_filtration_dims(&gens, 14) {
        Ok(d) => d,
        Err(e) => return (false, e.to_string()),
    };
    let report = multiplicity_report(&dims);
    let stable = report.as_ref().is_some_and(|r| {
        r.degree == 2
            && r.leading_difference == Some(3)
            && dims.len() - r.stable_from >= STABLE_WINDOW
    });
    let ok = stable && dims == UNIT_INTEGRAL_DIMS;
    (ok, format!("dims {dims:?}, report {report:?}"))
}

fn tensor2(a: Element1, b: Element1) -> ElementN {
    ElementN::tensor(&[a, b]).expect("rank 2")
}

fn check_socle_levels(_: &VerifyConfig) -> (bool, String) {
    let i = Element1::integral_pow(1);
    let cases = [
        (tensor2(i.clone(), i.clone()), 2),
        (tensor2(Element1::one(), i), 1),
        (tensor2(Element1::unit(0, 0), Element1::x()), 0),
    ];
    let mut f = Vec::new();
    for (a, want) in &cases {
        match socle_level(a) {
            Ok(l) if l == *want => {}
            other => f.push(format!("{a}: got {other:?}, expected {want}")),
        }
    }
    outcome(f, "levels 0, 1, 2 realized")
}

fn check_socle_monotone(config: &VerifyConfig) -> (bool, String) {
    let n = config.samples_or(1000);
    let mut rng = Sampler::new(config.seed.wrapping_add(2));
    let triples: Vec<_> = (0..n)
        .map(|_| (rng.weyl_word(2, 3), rng.element_n(2), rng.weyl_word(2, 3)))
        .collect();
    let results: Vec<Option<String>> = triples
        .par_iter()
        .enumerate()
        .map(|(k, (u, a, v))| {
            let uav = u.mul(a).ok()?.mul(v).ok()?;
            if uav.is_zero() {
                return None;
            }
            let (lhs, rhs) = (socle_level(&uav).ok()?, socle_level(a).ok()?);
            (lhs > rhs).then(|| format!("triple {k}: level {lhs} > {rhs}"))
        })
        .collect();
    outcome(
        results.into_iter().flatten().collect(),
        format!("{n} triples monotone"),
    )
}

fn check_census(config: &VerifyConfig) -> (bool, String) {
    // one representative per label: A = 1, F = e00, L = ∫
    let reps = [
        (Label::A, Element1::one()),
        (Label::F, Element1::unit(0, 0)),
        (Label::L, Element1::integral_pow(1)),
    ];
    let mut all = ElementN::zero(2);
    for (_, a) in &reps {
        for (_, b) in &reps {
            all = all.add(&tensor2(a.clone(), b.clone())).expect("rank 2");
        }
    }
    let labels = census(&all);
    let mut f = Vec::new();
    if labels.len() != 9 {
        f.push(format!(
            "9-term element has census of size {}",
            labels.len()
        ));
    }
    let mut rng = Sampler::new(config.seed.wrapping_add(3));
    for _ in 0..config.samples_or(200) {
        let a = rng.element_n(2);
        let b = rng.element_n(2);
        let (ca, cb) = (census(&a), census(&b));
        if ca.iter().any(|l| l.len() != 2) {
            f.push(format!("label length mismatch for {a}"));
        }
        let union: BTreeSet<_> = ca.union(&cb).cloned().collect();
        if !census(&a.add(&b).expect("rank 2")).is_subset(&union) {
            f.push(format!("census not subadditive for {a} and {b}"));
        }
    }
    outcome(f, "3^2 labels realized; census subadditive")
}

fn check_kernel(_: &VerifyConfig) -> (bool, String) {
    let mut f = Vec::new();
    for i in 0..=6 {
        for j in 0..=6 {
            for k in 0..=6 {
                for jp in 0..=6 {
                    let (zero, nonzero) = kernel_witness_check(i, j, k, jp);
                    if !zero || !nonzero {
                        f.push(format!("({i},{j},{k},{jp})"));
                    }
                }
            }
        }
    }
    outcome(f, "witnesses hold for all indices ≤ 6")
}

fn check_quotient(config: &VerifyConfig) -> (bool, String) {
    let n = config.samples_or(200);
    let mut rng = Sampler::new(config.seed.wrapping_add(4));
    let mut f = Vec::new();
    for k in 0..n {
        let (a, b) = (rng.element1(), rng.element1());
        if a.mul(&b).project_b1() != a.project_b1().mul(&b.project_b1()) {
            f.push(format!("rank-1 pair {k}"));
        }
        let (a, b) = (rng.element_n(2), rng.element_n(2));
        let lhs = project_bn(&a.mul(&b).expect("rank 2"));
        if Ok(lhs) != project_bn(&a).mul(&project_bn(&b)) {
            f.push(format!("rank-2 pair {k}"));
        }
        for (key, c) in a.terms() {
            let single = ElementN::monomial(key.clone(), c.clone());
            if project_bn(&single).is_zero() != key.iter().any(|t| t.is_unit()) {
                f.push(format!("kernel mismatch at {single}"));
            }
        }
    }
    let h1 = ElementN::lift(1, &Element1::h(), 2).expect("rank 2");
    let h2 = ElementN::lift(2, &Element1::h(), 2).expect("rank 2");
    if project_bn(&h1.sub(&h2).expect("rank 2")).is_zero() {
        f.push("H1 - H2 projects to zero".into());
    }
    outcome(f, format!("{n} pairs at rank 1 and 2"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_run_passes() {
        let config = VerifyConfig {
            seed: 7,
            samples: Some(10),
        };
        let results = run(Suite::Kernel, &config);
        assert_eq!(results.len(), 2);
        assert!(results.iter().all(|r| r.passed), "{results:?}");
    }
}
