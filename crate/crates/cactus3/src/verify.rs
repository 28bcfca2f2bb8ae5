//! Verification suites behind `cactus3 verify`. Each suite compares exhaustive
//! enumeration against a closed form and emits one [`Report`] per size.

use std::collections::BTreeMap;

use cactus3_core::bijection::{theta_forward, theta_inverse, visit_image_set};
use cactus3_core::cactus::{enumerate_cc, CactusEnumeration, Factorizations};
use cactus3_core::counting::{i_count_formula, jackson_symmetric, theorem1_check_table, PolynomialCheck};
use cactus3_core::tree::{ct_count_formula, enumerate_ct_with_limit, gf_coefficients, GfCaps, TreeProfile};
use cactus3_core::Error as CoreError;
use num_bigint::{BigInt, BigUint};
use serde_json::json;

use crate::error::Result;
use crate::json::{cactus_to_json, tuple_to_json};
use crate::parallel::{m_table, par_map};
use crate::report::{Outcome, Report};

fn check_limit(requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        return Err(CoreError::LimitExceeded { requested, limit }.into());
    }
    Ok(())
}

/// Every `p ∈ [1, n]³` in lexicographic order.
pub fn block_triples(n: usize) -> Vec<[u32; 3]> {
    let n = n as u32;
    (1..=n)
        .flat_map(|a| (1..=n).flat_map(move |b| (1..=n).map(move |c| [a, b, c])))
        .collect()
}

fn compact(text: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(text).expect("valid JSON");
    v.to_string()
}

fn polynomial_report(n: usize, form: &str, check: &PolynomialCheck, out: &mut Outcome) {
    out.push(Report {
        check: "theorem1".into(),
        n,
        params: json!({ "form": form, "terms": check.lhs.len() }),
        pass: check.passed(),
        lhs: check.lhs.to_string(),
        rhs: check.rhs.to_string(),
    });
    if let Some((e, l, r)) = check.first_mismatch() {
        out.fail(|| format!("theorem1 ({form}) n={n}: coefficient of x^{e:?} is {l} on the left, {r} on the right"));
    }
}

/// `Σ M x^n / N!²` against both closed-form right-hand sides, for `N = 1..=max_n`.
pub fn verify_theorem1(max_n: usize, limit: usize, jobs: usize) -> Result<Outcome> {
    check_limit(max_n, limit)?;
    let mut out = Outcome::default();
    for n in 1..=max_n {
        let report = theorem1_check_table(&m_table(n, limit, jobs)?)?;
        polynomial_report(n, "binomial", &report.binomial_form, &mut out);
        polynomial_report(n, "falling", &report.falling_form, &mut out);
    }
    Ok(out)
}

#[derive(Default)]
struct BijectionTally {
    cacti: u64,
    tuples: u64,
    formula: BigUint,
    failure: Option<String>,
}

fn bijection_at(p: [u32; 3], n: usize, limit: usize) -> Result<BijectionTally> {
    let mut t = BijectionTally {
        formula: i_count_formula(p, n)?,
        ..Default::default()
    };
    for pc in enumerate_cc(p.map(|x| x as usize), n, limit)? {
        t.cacti += 1;
        let back = theta_forward(&pc).and_then(|tup| theta_inverse(&tup));
        if t.failure.is_none() && back.as_ref() != Ok(&pc) {
            t.failure = Some(format!(
                "inverse(forward(pc)) != pc for pc = {}: {back:?}",
                compact(&cactus_to_json(&pc))
            ));
        }
    }
    visit_image_set(p, n, limit, |tup| {
        t.tuples += 1;
        let back = theta_inverse(tup).and_then(|pc| theta_forward(&pc));
        if t.failure.is_none() && back.as_ref() != Ok(tup) {
            t.failure = Some(format!(
                "forward(inverse(t)) != t for t = {}: {back:?}",
                compact(&tuple_to_json(tup))
            ));
        }
    })?;
    if t.failure.is_none() && (BigUint::from(t.cacti) != t.formula || BigUint::from(t.tuples) != t.formula) {
        t.failure = Some(format!(
            "p={p:?} n={n}: {} cacti and {} tuples, closed form {}",
            t.cacti, t.tuples, t.formula
        ));
    }
    Ok(t)
}

/// Round trips on every partitioned cactus and every image-set element, plus
/// `|CC(p, n)| = |I(p, n)| = i_count_formula(p, n)`, for `n = 1..=max_n`.
pub fn verify_bijection(max_n: usize, limit: usize, jobs: usize) -> Result<Outcome> {
    check_limit(max_n, limit)?;
    let mut out = Outcome::default();
    for n in 1..=max_n {
        let ps = block_triples(n);
        let tallies = par_map(&ps, jobs, |&p| bijection_at(p, n, limit));
        let (mut cacti, mut tuples, mut formula) = (0u64, 0u64, BigUint::default());
        let mut pass = true;
        for (p, t) in ps.iter().zip(tallies) {
            let t = t?;
            cacti += t.cacti;
            tuples += t.tuples;
            formula += &t.formula;
            if let Some(f) = t.failure {
                pass = false;
                out.fail(|| format!("bijection n={n} p={p:?}: {f}"));
            }
        }
        out.push(Report {
            check: "bijection".into(),
            n,
            params: json!({ "profiles": ps.len(), "cactus_round_trips": cacti, "tuple_round_trips": tuples }),
            pass,
            lhs: cacti.to_string(),
            rhs: formula.to_string(),
        });
    }
    Ok(out)
}

/// Profiles `(p, a, b, c)` with `p₁ ≥ 1`, `p₁ + p₂ + p₃ = t`, flags bounded by
/// vertex counts; `positive` additionally requires `p₂, p₃ ≥ 1`.
pub fn profiles_with_total(t: u32, positive: bool) -> Vec<TreeProfile> {
    let lo = u32::from(positive);
    let mut out = Vec::new();
    for p1 in 1..=t {
        for p2 in lo..=t - p1 {
            let p3 = t - p1 - p2;
            if p3 < lo {
                continue;
            }
            for a in 0..=p1 {
                for b in 0..=p2 {
                    for c in 0..=p3 {
                        out.push(TreeProfile::new(p1, p2, p3, a, b, c));
                    }
                }
            }
        }
    }
    out
}

/// Tree enumeration against the closed form (all `pᵢ ≥ 1`) and against the
/// generating-function fixed point (all profiles), by total vertex count.
pub fn verify_ct(max_total: usize, vertex_limit: usize) -> Result<Outcome> {
    check_limit(max_total, vertex_limit)?;
    let mut out = Outcome::default();
    let gf = gf_coefficients(GfCaps::total_vertices(max_total as u32))?;
    let mut enumerated: BTreeMap<TreeProfile, usize> = BTreeMap::new();
    for t in 1..=max_total as u32 {
        let profiles = profiles_with_total(t, false);
        for &pr in &profiles {
            enumerated.insert(pr, enumerate_ct_with_limit(pr, vertex_limit)?.len());
        }

        let positive = profiles_with_total(t, true);
        if !positive.is_empty() {
            let (mut lhs, mut rhs, mut pass) = (BigInt::default(), BigInt::default(), true);
            for pr in &positive {
                let e = BigInt::from(enumerated[pr]);
                let f = ct_count_formula(*pr)?;
                if e != f {
                    pass = false;
                    out.fail(|| format!("ct {pr}: {e} trees enumerated, closed form {f}"));
                }
                lhs += e;
                rhs += f;
            }
            out.push(Report {
                check: "ct".into(),
                n: t as usize,
                params: json!({ "against": "formula", "profiles": positive.len() }),
                pass,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }

        let (mut lhs, mut rhs, mut pass) = (0usize, BigUint::default(), true);
        for pr in &profiles {
            let e = enumerated[pr];
            let g = gf.get(pr).cloned().unwrap_or_default();
            if BigUint::from(e) != g {
                pass = false;
                out.fail(|| format!("ct {pr}: {e} trees enumerated, generating function {g}"));
            }
            lhs += e;
            rhs += g;
        }
        // the fixed point must not carry profiles the enumeration never visits
        let gf_total: BigUint = gf.iter().filter(|(k, _)| k.p1 + k.p2 + k.p3 == t).map(|(_, v)| v).sum();
        if gf_total != rhs {
            pass = false;
            out.fail(|| format!("ct total {t}: generating function has mass {gf_total} outside the visited profiles"));
        }
        out.push(Report {
            check: "ct".into(),
            n: t as usize,
            params: json!({ "against": "gf", "profiles": profiles.len() }),
            pass,
            lhs: lhs.to_string(),
            rhs: gf_total.to_string(),
        });
    }
    Ok(out)
}

/// `i_count_formula = jackson_symmetric` on `[1, n]³` for `n = 1..=max_n`.
pub fn verify_jackson(max_n: usize) -> Result<Outcome> {
    let mut out = Outcome::default();
    for n in 1..=max_n {
        let ps = block_triples(n);
        let (mut lhs, mut rhs, mut pass) = (BigUint::default(), BigUint::default(), true);
        for &p in &ps {
            let (i, j) = (i_count_formula(p, n)?, jackson_symmetric(p, n)?);
            if i != j {
                pass = false;
                out.fail(|| format!("jackson n={n} p={p:?}: closed form {i}, symmetric form {j}"));
            }
            lhs += i;
            rhs += j;
        }
        out.push(Report {
            check: "jackson".into(),
            n,
            params: json!({ "profiles": ps.len() }),
            pass,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(out)
}

/// `|CC(p, n)|` by enumeration, split over `α₁` ranges.
pub fn count_cc(p: [u32; 3], n: usize, limit: usize, jobs: usize) -> Result<u64> {
    check_limit(n, limit)?;
    if n == 0 || p.contains(&0) {
        return Ok(0);
    }
    let ranges = cactus3_core::cactus::alpha1_ranges(n, (jobs * 4).max(1));
    let counts = par_map(&ranges, jobs, |r| -> Result<u64> {
        let triples = Factorizations::with_alpha1_ranks(n, limit, r.clone())?;
        Ok(CactusEnumeration::new(p.map(|x| x as usize), triples)?.count() as u64)
    });
    counts.into_iter().sum()
}
