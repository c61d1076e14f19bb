//! Acceptance criteria. Runs without the libtest harness so that one
//! `criterion N: PASS|FAIL` line per criterion is always printed; exits
//! nonzero if any check or time budget fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use intdiff::oracle::{consistent, to_matrix};
use intdiff::random::Sampler;
use intdiff::rational::{factorial, int};
use intdiff::structure::{
    bimodule_filtration_dims, census, h_difference, multiplicity_report, project_bn, q_dims,
    socle_level, split, Label, STABLE_WINDOW,
};
use intdiff::verify::UNIT_INTEGRAL_DIMS;
use intdiff::{Element1, ElementN, Rational};
use num_traits::Zero;
use rayon::prelude::*;

fn report(
    n: u32,
    what: &str,
    budget: Duration,
    check: impl FnOnce() -> Result<String, String>,
) -> bool {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let on_time = elapsed <= budget;
    let pass = result.is_ok() && on_time;
    let detail = match &result {
        Ok(s) | Err(s) => s.clone(),
    };
    println!(
        "criterion {n}: {} {what} ({:.2?} of {:?}) {detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed,
        budget
    );
    pass
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq(label: &str, got: &Element1, want: &Element1) -> Result<(), String> {
    ensure(got == want, || format!("{label}: {got} != {want}"))
}

fn tensor2(a: Element1, b: Element1) -> ElementN {
    ElementN::tensor(&[a, b]).unwrap()
}

fn triangular(n: usize) -> Vec<usize> {
    (0..=n).map(|i| (i + 1) * (i + 2) / 2).collect()
}

fn criterion_01_relations() -> bool {
    report(1, "relations", Duration::from_secs(1), || {
        let one = Element1::one();
        let d = Element1::d_pow(1);
        let i = Element1::integral_pow(1);
        let h = Element1::h();
        let e00 = one.sub(&i.mul(&d));
        eq("d*I", &d.mul(&i), &one)?;
        eq("[H,I]", &h.mul(&i).sub(&i.mul(&h)), &i)?;
        eq("[H,d]", &h.mul(&d).sub(&d.mul(&h)), &d.neg())?;
        eq("H e", &h.mul(&e00), &e00)?;
        eq("e H", &e00.mul(&h), &e00)?;
        eq("I*d", &i.mul(&d), &one.sub(&Element1::unit(0, 0)))?;
        eq("x", &i.mul(&h), &Element1::x())?;
        eq(
            "x^2",
            &Element1::x().pow(2),
            &Element1::integral_pow(2).mul(&h).mul(&h.add(&one)),
        )?;
        for s in 0..6u64 {
            for t in 0..6u64 {
                let def = Element1::integral_pow(s)
                    .mul(&Element1::d_pow(t))
                    .sub(&Element1::integral_pow(s + 1).mul(&Element1::d_pow(t + 1)));
                eq("e definition", &def, &Element1::unit(s, t))?;
                let e = Element1::unit(s, t);
                for k in 0..6u64 {
                    for l in 0..6u64 {
                        let want = if t == k {
                            Element1::unit(s, l)
                        } else {
                            Element1::zero()
                        };
                        eq("e*e", &e.mul(&Element1::unit(k, l)), &want)?;
                    }
                }
                eq("I*e", &i.mul(&e), &Element1::unit(s + 1, t))?;
                eq("e*d", &e.mul(&d), &Element1::unit(s, t + 1))?;
                let down = |c: bool, a: u64, b: u64| {
                    if c {
                        Element1::zero()
                    } else {
                        Element1::unit(a, b)
                    }
                };
                eq("d*e", &d.mul(&e), &down(s == 0, s.saturating_sub(1), t))?;
                eq("e*I", &e.mul(&i), &down(t == 0, s, t.saturating_sub(1)))?;
                eq("H*e", &h.mul(&e), &e.scale(&int(s as i64 + 1)))?;
                eq("e*H", &e.mul(&h), &e.scale(&int(t as i64 + 1)))?;
            }
        }
        Ok("relations, e-calculus and table normalize exactly".into())
    })
}

fn criterion_02_oracle_equivalence() -> bool {
    report(2, "oracle equivalence", Duration::from_secs(30), || {
        let mut rng = Sampler::new(0);
        let pairs: Vec<_> = (0..500).map(|_| (rng.element1(), rng.element1())).collect();
        let bad: Vec<usize> = pairs
            .par_iter()
            .enumerate()
            .filter(|(_, (a, b))| !consistent(a, b, 24).unwrap_or(false))
            .map(|(k, _)| k)
            .collect();
        ensure(bad.is_empty(), || format!("pairs {bad:?} disagree"))?;
        Ok("500 pairs at N=24".into())
    })
}

fn criterion_03_matrix_units() -> bool {
    report(3, "e_ij = (j!/i!) E_ij", Duration::from_secs(1), || {
        for i in 0..=8u64 {
            for j in 0..=8u64 {
                let m = to_matrix(&Element1::unit(i, j), 9).to_monomial_basis();
                let scalar = factorial(j) / factorial(i);
                for r in 0..9 {
                    for c in 0..9 {
                        let want = if (r as u64, c as u64) == (i, j) {
                            scalar.clone()
                        } else {
                            Rational::zero()
                        };
                        ensure(m.get(r, c) == &want, || format!("e({i},{j}) at ({r},{c})"))?;
                    }
                }
            }
        }
        Ok("all 0 <= i,j <= 8".into())
    })
}

fn criterion_04_q_dims() -> bool {
    report(4, "Q dimension counts", Duration::from_secs(1), || {
        let dims = q_dims(12);
        ensure(dims == triangular(12), || format!("{dims:?}"))?;
        Ok(format!("{dims:?}"))
    })
}

fn criterion_05_f_multiplicity() -> bool {
    report(5, "F multiplicity 1", Duration::from_secs(10), || {
        let dims =
            bimodule_filtration_dims(&[Element1::unit(0, 0)], 10).map_err(|e| e.to_string())?;
        ensure(dims == triangular(10), || format!("{dims:?}"))?;
        let r = multiplicity_report(&dims).ok_or("no stable growth")?;
        ensure(r.degree == 2 && r.leading_difference == Some(1), || {
            format!("{r:?}")
        })?;
        Ok(format!("{dims:?}"))
    })
}

fn criterion_06_i1_multiplicity() -> bool {
    report(6, "I_1 multiplicity 3", Duration::from_secs(300), || {
        let gens = [Element1::one(), Element1::integral_pow(1)];
        let dims = bimodule_filtration_dims(&gens, 14).map_err(|e| e.to_string())?;
        ensure(dims == UNIT_INTEGRAL_DIMS, || {
            format!("table changed: {dims:?}")
        })?;
        let r = multiplicity_report(&dims).ok_or("no stable growth")?;
        ensure(r.degree == 2 && r.leading_difference == Some(3), || {
            format!("{r:?}")
        })?;
        let run = dims.len() - r.stable_from;
        ensure(run >= STABLE_WINDOW, || {
            format!("only {run} stable indices")
        })?;
        Ok(format!("second difference 3 on i = {}..=14", r.stable_from))
    })
}

fn criterion_07_socle() -> bool {
    report(7, "socle structure", Duration::from_secs(60), || {
        let i = Element1::integral_pow(1);
        let levels = [
            (tensor2(i.clone(), i.clone()), 2),
            (tensor2(Element1::one(), i), 1),
            (tensor2(Element1::unit(0, 0), Element1::x()), 0),
        ];
        for (a, want) in &levels {
            let got = socle_level(a).map_err(|e| e.to_string())?;
            ensure(got == *want, || {
                format!("level of {a} is {got}, expected {want}")
            })?;
        }
        let mut rng = Sampler::new(0);
        let triples: Vec<_> = (0..1000)
            .map(|_| (rng.weyl_word(2, 3), rng.element_n(2), rng.weyl_word(2, 3)))
            .collect();
        let nonzero = triples
            .par_iter()
            .map(|(u, a, v)| {
                let uav = u.mul(a).unwrap().mul(v).unwrap();
                if uav.is_zero() {
                    return Ok(0);
                }
                let (lhs, rhs) = (socle_level(&uav).unwrap(), socle_level(a).unwrap());
                ensure(lhs <= rhs, || format!("{uav} at level {lhs} > {rhs}")).map(|_| 1)
            })
            .collect::<Result<Vec<usize>, String>>()?
            .into_iter()
            .sum::<usize>();
        Ok(format!(
            "levels 0,1,2 realized; {nonzero}/1000 nonzero triples monotone"
        ))
    })
}

fn criterion_08_census() -> bool {
    report(8, "census bound", Duration::from_secs(1), || {
        let reps = [
            Element1::one(),
            Element1::unit(0, 0),
            Element1::integral_pow(1),
        ];
        let mut all = ElementN::zero(2);
        for a in &reps {
            for b in &reps {
                all = all.add(&tensor2(a.clone(), b.clone())).unwrap();
            }
        }
        ensure(all.terms().len() == 9, || {
            format!("{} terms", all.terms().len())
        })?;
        let labels = census(&all);
        let every: BTreeSet<Vec<Label>> = Label::ALL
            .iter()
            .flat_map(|&a| Label::ALL.iter().map(move |&b| vec![a, b]))
            .collect();
        ensure(labels == every, || format!("{labels:?}"))?;
        let mut rng = Sampler::new(0);
        for _ in 0..200 {
            let a = rng.element_n(2);
            ensure(census(&a).iter().all(|l| l.len() == 2), || format!("{a}"))?;
        }
        Ok("all 9 labels realized".into())
    })
}

fn criterion_09_kernel_witness() -> bool {
    report(9, "kernel witness", Duration::from_secs(5), || {
        let w = h_difference();
        for i in 0..=6u64 {
            for j in 0..=6u64 {
                for k in 0..=6u64 {
                    for jp in 0..=6u64 {
                        let t = tensor2(Element1::unit(i, j), Element1::unit(k, jp));
                        let zero = t.mul(&w).unwrap().is_zero();
                        ensure(zero == (j == jp), || {
                            format!("({i},{j},{k},{jp}) gave {zero}")
                        })?;
                    }
                }
            }
        }
        Ok("zero iff j = j' for all indices <= 6".into())
    })
}

fn criterion_10_quotient() -> bool {
    report(10, "quotient homomorphism", Duration::from_secs(30), || {
        let mut rng = Sampler::new(0);
        for k in 0..200 {
            let (a, b) = (rng.element1(), rng.element1());
            ensure(
                a.mul(&b).project_b1() == a.project_b1().mul(&b.project_b1()),
                || format!("rank 1 pair {k}"),
            )?;
            let (a, b) = (rng.element_n(2), rng.element_n(2));
            let lhs = project_bn(&a.mul(&b).unwrap());
            let rhs = project_bn(&a).mul(&project_bn(&b)).unwrap();
            ensure(lhs == rhs, || format!("rank 2 pair {k}"))?;
            for (key, c) in a.terms() {
                let single = ElementN::monomial(key.clone(), c.clone());
                let has_unit = key.iter().any(|t| t.is_unit());
                ensure(project_bn(&single).is_zero() == has_unit, || {
                    format!("kernel at {single}")
                })?;
            }
        }
        ensure(!project_bn(&h_difference()).is_zero(), || {
            "H1 - H2 projects to 0".into()
        })?;
        Ok("200 pairs at ranks 1 and 2".into())
    })
}

fn criterion_11_split() -> bool {
    report(11, "split round trip", Duration::from_secs(60), || {
        let mut rng = Sampler::new(0);
        let samples: Vec<_> = (0..500).map(|_| (rng.element1(), rng.element1())).collect();
        samples
            .par_iter()
            .enumerate()
            .map(|(k, (a, b))| {
                let s = split(a);
                ensure(s.sum() == *a, || format!("sample {k} does not re-sum"))?;
                ensure(s.parts_in_spans(), || {
                    format!("sample {k} parts out of span")
                })?;
                let recombined = s.a_part.add(&s.f_part).add(&s.l_part);
                ensure(consistent(&recombined, b, 24).unwrap_or(false), || {
                    format!("sample {k} oracle mismatch")
                })
            })
            .collect::<Result<Vec<()>, String>>()?;
        Ok("500 samples".into())
    })
}

fn main() {
    let criteria: [fn() -> bool; 11] = [
        criterion_01_relations,
        criterion_02_oracle_equivalence,
        criterion_03_matrix_units,
        criterion_04_q_dims,
        criterion_05_f_multiplicity,
        criterion_06_i1_multiplicity,
        criterion_07_socle,
        criterion_08_census,
        criterion_09_kernel_witness,
        criterion_10_quotient,
        criterion_11_split,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
