//! Exact identities in the group ring and congruences on integer vectors.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fixtures::{self, matrix_sum, parse_combo};
use super::report::{CheckKind, CheckResult, Status};
use crate::error::Result;
use crate::exact::{constants, group_sum, shuffle_element, GroupRingElem, IntMatrix, Permutation, VecCombo};
use crate::exact::constants::omega_from;
use crate::exact::vmp;

pub const SUITE: &str = "exact";
const VM_SEED: u64 = 0x5eed_0004;
pub const VM_SAMPLES: usize = 20;
const MACHINE_ONLY: &str = "no written proof exists; verified by direct computation only";

/// `None` on success, otherwise a description of the first offending term.
type Outcome = Option<String>;

fn el(m: IntMatrix) -> GroupRingElem {
    GroupRingElem::from_matrix(m)
}

fn perm(s: &str) -> Result<GroupRingElem> {
    Ok(GroupRingElem::from_perm(&Permutation::parse_cycles(s, 4)?))
}

fn perms(list: &[&str]) -> Result<GroupRingElem> {
    let ps: Vec<Permutation> = list.iter().map(|s| Permutation::parse_cycles(s, 4)).collect::<Result<_>>()?;
    group_sum(&ps)
}

/// `S(⟨gens⟩)`: the sum over the generated subgroup of 𝔖₄.
fn subgroup(gens: &[&str]) -> Result<GroupRingElem> {
    let gs: Vec<Permutation> = gens.iter().map(|s| Permutation::parse_cycles(s, 4)).collect::<Result<_>>()?;
    group_sum(&Permutation::generated(&gs))
}

fn mul(items: &[&GroupRingElem]) -> Result<GroupRingElem> {
    let mut it = items.iter();
    let first = (*it.next().expect("non-empty product")).clone();
    it.try_fold(first, |acc, g| acc.try_mul(g))
}

fn compare(lhs: &GroupRingElem, rhs: &GroupRingElem) -> Result<Outcome> {
    let d = lhs.try_sub(rhs)?;
    let first = d.terms().next().map(|(m, c)| format!("{} residual terms; first: {c} * {}", d.len(), m.rows_string()));
    Ok(first)
}

fn compare_vec(lhs: &VecCombo, rhs: &VecCombo, congruence: bool) -> Outcome {
    let mut d = lhs - rhs;
    if congruence {
        d = d.congruence_reduce();
    }
    let first = d.terms().next().map(|(v, c)| {
        let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("{} residual terms; first: {c} * ({})", d.len(), v.join(","))
    });
    first
}

fn run(name: &str, f: impl FnOnce() -> Result<Outcome>) -> CheckResult {
    let start = Instant::now();
    let mut r = CheckResult::new(name, SUITE, CheckKind::Exact);
    match f() {
        Ok(None) => r.residual = Some(0.0),
        Ok(Some(d)) => {
            r.status = Status::Fail;
            r.detail = Some(d);
        }
        Err(e) => {
            r.status = Status::Error;
            r.detail = Some(e.to_string());
        }
    }
    r.ms = start.elapsed().as_millis() as u64;
    r
}

/// A perturbed identity: passes exactly when the perturbation is detected.
fn control(name: &str, f: impl FnOnce() -> Result<Outcome>) -> CheckResult {
    let mut r = run(name, f);
    r.negative_control = true;
    match r.status {
        Status::Fail => {
            r.status = Status::Pass;
            r.detail = r.detail.map(|d| format!("perturbation detected: {d}"));
        }
        Status::Pass => {
            r.status = Status::Fail;
            r.residual = None;
            r.detail = Some("perturbed identity still holds".into());
        }
        Status::Error => {}
    }
    r
}

/// Random unimodular 4×4 matrices: products of signed elementary and transposition matrices.
pub fn random_unimodular(count: usize, seed: u64) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut m = IntMatrix::identity(4);
            for _ in 0..8 {
                let i = rng.gen_range(0..4);
                let j = (i + rng.gen_range(1..4)) % 4;
                let mut e = IntMatrix::identity(4);
                if rng.gen_bool(0.2) {
                    e.set(i, i, BigInt::zero());
                    e.set(j, j, BigInt::zero());
                    e.set(i, j, BigInt::one());
                    e.set(j, i, BigInt::one());
                } else {
                    e.set(i, j, BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 }));
                }
                m = m.mul(&e).expect("same order");
            }
            m
        })
        .collect()
}

fn rows(m: &IntMatrix, sets: &[&[usize]], c: i64) -> Result<VecCombo> {
    let mut out = VecCombo::zero();
    for s in sets {
        out.add_term(vmp(m, s)?, BigRational::from_integer(c.into()));
    }
    Ok(out)
}

/// Expected `x·S(𝔖₄)·M` and `x·S(C₄)·M` for the five basis vectors.
fn vm_expected(m: &IntMatrix, cyclic: bool) -> Result<Vec<(&'static str, VecCombo)>> {
    let pairs: &[&[usize]] = &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]];
    let triples: &[&[usize]] = &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]];
    let singles: &[&[usize]] = &[&[1], &[2], &[3], &[4]];
    let all: &[&[usize]] = &[&[1, 2, 3, 4]];
    Ok(if cyclic {
        vec![
            ("1000", rows(m, singles, 1)?),
            ("1100", rows(m, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]], 1)?),
            ("1010", rows(m, &[&[1, 3], &[2, 4]], 2)?),
            ("1110", rows(m, triples, 1)?),
            ("1111", rows(m, all, 4)?),
        ]
    } else {
        vec![
            ("1000", rows(m, singles, 6)?),
            ("1100", rows(m, pairs, 4)?),
            ("1010", rows(m, pairs, 4)?),
            ("1110", rows(m, triples, 6)?),
            ("1111", rows(m, all, 24)?),
        ]
    })
}

fn vm_check(cyclic: bool) -> Result<Outcome> {
    let c = constants();
    let sum = if cyclic { &c.s_c4 } else { &c.s_sym4 };
    let mut ms = vec![IntMatrix::identity(4)];
    ms.extend(random_unimodular(VM_SAMPLES, VM_SEED));
    for m in &ms {
        let g = sum.right_mul_matrix(m)?;
        for (x, want) in vm_expected(m, cyclic)? {
            let got = VecCombo::e(x).act(&g)?;
            if let Some(d) = compare_vec(&got, &want, false) {
                return Ok(Some(format!("M = {}, x = e{x}: {d}", m.rows_string())));
            }
        }
    }
    Ok(None)
}

fn table_check(element: &GroupRingElem, rows: &[(&str, &str)]) -> Result<Outcome> {
    let bar = element.bar()?;
    for (x, rhs) in rows {
        let got = parse_combo(x)?.act(&bar)?;
        if let Some(d) = compare_vec(&got, &parse_combo(rhs)?, true) {
            return Ok(Some(format!("x = {x}: {d}")));
        }
    }
    Ok(None)
}

fn single_row(element: &GroupRingElem, x: &str, rhs: &str) -> Result<Outcome> {
    table_check(element, &[(x, rhs)])
}

/// The acting element for each congruence table, in the order of [`fixtures::TABLES`].
fn table_elements() -> Result<Vec<GroupRingElem>> {
    let c = constants();
    Ok(vec![
        c.p_sym4(),
        c.psi_phi_q().try_mul(&c.s_c4)?,
        c.phi_r().try_mul(&c.s_c4)?,
        c.psi_s().try_mul(&c.s_c4)?,
        c.s_c4.clone(),
    ])
}

fn s_mutated() -> IntMatrix {
    let mut s = constants().s.clone();
    s.set(3, 2, BigInt::zero());
    s
}

/// Every exact check, in a fixed order.
pub fn check_exact_suite() -> Vec<CheckResult> {
    let c = constants();
    let t234 = || -> Result<GroupRingElem> { matrix_sum_owned(&c.t[1..]) };
    let mut out = Vec::new();

    // Shuffle elements pushed through the P-conjugation.
    out.push(run("shuffle_to_psi_s", || {
        let lhs = mul(&[&el(c.p.clone()), &shuffle_element(3, 4)?, &el(IntMatrix::p_bar(3).block_diag(&IntMatrix::identity(1))?)])?;
        compare(&lhs, &c.psi_s())
    }));
    out.push(run("shuffle_to_phi_r", || {
        let pp = IntMatrix::p_bar(2).block_diag(&IntMatrix::p_bar(2))?;
        let lhs = mul(&[&el(c.p.clone()), &shuffle_element(2, 3)?.embed(4)?, &el(pp)])?;
        compare(&lhs, &c.phi_r())
    }));
    out.push(run("shuffle_to_psi_phi_q", || {
        let lhs = mul(&[
            &el(c.p.clone()),
            &shuffle_element(2, 4)?,
            &subgroup(&["(34)"])?,
            &el(IntMatrix::p_bar(2).block_diag(&IntMatrix::identity(2))?),
        ])?;
        compare(&lhs, &c.psi_phi_q())
    }));

    // Explicit matrix lists.
    out.push(run("expansion_psi_s", || compare(&c.psi_s(), &matrix_sum(&fixtures::PSI_S)?)));
    let mut phi_r = run("expansion_phi_r", || compare(&c.phi_r(), &matrix_sum(&fixtures::PHI_R)?));
    phi_r.note = Some(MACHINE_ONLY.into());
    out.push(phi_r);
    out.push(run("expansion_psi_phi_q", || compare(&c.psi_phi_q(), &matrix_sum(&fixtures::PSI_PHI_Q)?)));
    out.push(run("inverse_expansion_psi_phi_q", || compare(&c.psi_phi_q().bar()?, &matrix_sum(&fixtures::PSI_PHI_Q_BAR)?)));
    out.push(run("inverse_expansion_phi_r", || compare(&c.phi_r().bar()?, &matrix_sum(&fixtures::PHI_R_BAR)?)));
    out.push(run("inverse_expansion_psi_s", || compare(&c.psi_s().bar()?, &matrix_sum(&fixtures::PSI_S_BAR)?)));

    // Products with the projection J.
    let j = el(c.j.clone());
    out.push(run("j_projection_p_sym4", || {
        compare(&c.p_sym4().bar()?.try_mul(&j)?, &c.s_sym4.right_mul_matrix(&c.t[0])?)
    }));
    out.push(run("j_projection_psi_phi_q", || {
        let lhs = c.psi_phi_q().try_mul(&c.s_c4)?.bar()?.try_mul(&j)?;
        let tail = mul(&[&c.s_c4, &(&GroupRingElem::identity(4) + &perm("(234)")?), &t234()?])?;
        compare(&lhs, &c.s_sym4.right_mul_matrix(&c.t[0])?.try_add(&tail)?)
    }));
    out.push(run("j_projection_phi_r", || {
        let lhs = c.phi_r().try_mul(&c.s_c4)?.bar()?.try_mul(&j)?;
        compare(&lhs, &mul(&[&c.s_c4, &perm("(234)")?, &t234()?])?)
    }));
    out.push(run("j_projection_psi_s", || {
        let lhs = c.psi_s().try_mul(&c.s_c4)?.bar()?.try_mul(&j)?;
        compare(&lhs, &mul(&[&c.s_c4, &t234()?.try_add(&j)?])?)
    }));
    out.push(run("j_step_psi_phi_q", || {
        let lhs = c.psi_phi_q().bar()?.try_mul(&j)?;
        let head = subgroup(&["(23)", "(234)"])?.right_mul_matrix(&c.t[0])?;
        let perms = perm("(1432)")?.try_add(&perm("(13)(24)")?.try_mul(&perm("(234)")?)?)?;
        compare(&lhs, &head.try_add(&perms.try_mul(&t234()?)?)?)
    }));
    out.push(run("j_step_phi_r", || {
        let lhs = c.phi_r().bar()?.try_mul(&j)?;
        let a = perm("(13)(24)")?.try_mul(&perm("(234)")?)?.right_mul_matrix(&c.t[1])?;
        let b = perm("(234)")?.try_mul(&matrix_sum_owned(&c.t[2..])?)?;
        compare(&lhs, &a.try_add(&b)?)
    }));
    out.push(run("j_step_psi_s_terms", || compare(&c.psi_s().bar()?.try_mul(&j)?, &matrix_sum(&fixtures::PSI_S_BAR_J)?)));
    out.push(run("j_step_psi_s", || {
        compare(&c.psi_s().bar()?.try_mul(&j)?, &t234()?.try_add(&perm("(1432)")?.try_mul(&j)?)?)
    }));

    // Permutation bookkeeping used along the way.
    out.push(run("shuffle_sizes", || {
        for n in 2..=6usize {
            for k in 1..n {
                let s = shuffle_element(k, n)?;
                let want = crate::mzv::index::binomial(n as u64, k as u64) as usize;
                if s.len() != want || !s.all_coefficients_one() {
                    return Ok(Some(format!("sh({k},{n}) has {} terms, expected {want}", s.len())));
                }
            }
        }
        Ok(None)
    }));
    out.push(run("sh34_terms", || compare(&shuffle_element(3, 4)?, &perms(&fixtures::SH34)?)));
    out.push(run("sh24_terms", || compare(&shuffle_element(2, 4)?, &perms(&fixtures::SH24)?)));
    out.push(run("sh24_s34_terms", || {
        compare(&shuffle_element(2, 4)?.try_mul(&subgroup(&["(34)"])?)?, &perms(&fixtures::SH24_S34)?)
    }));
    out.push(run("sh24_s34_s12_is_sym4", || {
        compare(&mul(&[&shuffle_element(2, 4)?, &subgroup(&["(34)"])?, &subgroup(&["(12)"])?])?, &c.s_sym4)
    }));
    out.push(run("sh24_from_sh23", || {
        compare(&shuffle_element(2, 4)?, &shuffle_element(2, 3)?.embed(4)?.try_mul(&subgroup(&["(13)(24)"])?)?)
    }));
    out.push(run("s1324_commutes_with_pbar2_pbar2", || {
        let pp = el(IntMatrix::p_bar(2).block_diag(&IntMatrix::p_bar(2))?);
        let s = subgroup(&["(13)(24)"])?;
        compare(&s.try_mul(&pp)?, &pp.try_mul(&s)?)
    }));
    out.push(run("sh24_s34_from_sh34", || {
        let lhs = shuffle_element(2, 4)?.try_mul(&subgroup(&["(34)"])?)?;
        compare(&lhs, &shuffle_element(3, 4)?.try_mul(&perms(&["id", "(23)", "(123)"])?)?)
    }));
    out.push(run("sym4_from_cyclic", || compare(&c.s_sym4, &c.s_c4.try_mul(&subgroup(&["(23)", "(234)"])?)?)));
    out.push(run("cyclic_absorbs_1432", || compare(&c.s_c4.try_mul(&perm("(1432)")?)?, &c.s_c4)));
    out.push(run("cyclic_absorbs_13_24", || compare(&c.s_c4.try_mul(&perm("(13)(24)")?)?, &c.s_c4)));
    out.push(run("cyclic_from_half_cyclic", || compare(&c.s_c4, &subgroup(&["(13)(24)"])?.try_mul(&c.s_c4_star)?)));

    // Congruences for x·bar(Ω).
    for (i, (x, rhs)) in fixtures::OMEGA_ROWS.iter().enumerate() {
        out.push(run(&format!("omega_congruence_{}", i + 1), || single_row(&c.omega, x, rhs)).param("x", x));
    }
    for (x, rhs) in fixtures::OMEGA_INTERMEDIATE {
        out.push(run(&format!("omega_congruence_{}", x), || single_row(&c.omega, x, rhs)).param("x", x));
    }
    match table_elements() {
        Ok(elements) => {
            for (table, g) in fixtures::TABLES.iter().zip(&elements) {
                for (x, rhs) in table.rows {
                    let mut r = run(&format!("congruence_table_{}_{x}", table.name), || single_row(g, x, rhs)).param("x", x);
                    if matches!(table.name, "psi_phi_q_cyclic" | "psi_s_cyclic") {
                        r.note = Some(MACHINE_ONLY.into());
                    }
                    out.push(r);
                }
            }
        }
        Err(e) => out.push(run("congruence_tables", || Err(e))),
    }

    out.push(run("vm_sym4", || vm_check(false)).param("samples", VM_SAMPLES + 1));
    out.push(run("vm_cyclic", || vm_check(true)).param("samples", VM_SAMPLES + 1));

    // Negative controls.
    out.push(control("control_mutated_s_shuffle", || {
        let lhs = mul(&[&el(c.p.clone()), &shuffle_element(3, 4)?, &el(IntMatrix::p_bar(3).block_diag(&IntMatrix::identity(1))?)])?;
        compare(&lhs, &c.psi.right_mul_matrix(&s_mutated())?)
    }));
    out.push(control("control_mutated_s_congruence", || {
        let omega = omega_from(&c.p, &c.q, &c.r, &s_mutated(), &c.phi, &c.psi, &c.s_sym4, &c.s_c4);
        let (x, rhs) = fixtures::OMEGA_ROWS[0];
        single_row(&omega, x, rhs)
    }));
    out.push(control("control_perturbed_table", || single_row(&c.s_c4, "e1010", "3*e1010")));
    out
}

fn matrix_sum_owned(ms: &[IntMatrix]) -> Result<GroupRingElem> {
    GroupRingElem::sum_of(ms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_matrices_are_unimodular_and_reproducible() {
        let a = random_unimodular(20, VM_SEED);
        assert_eq!(a, random_unimodular(20, VM_SEED));
        assert!(a.iter().all(|m| m.is_unimodular()));
        assert!(a.iter().filter(|m| m.is_identity()).count() < 2);
    }

    #[test]
    fn vm_at_identity_is_the_bare_sum() {
        let i = IntMatrix::identity(4);
        let e = vm_expected(&i, false).unwrap();
        assert_eq!(e[0].1, parse_combo("6*e1000 + 6*e0100 + 6*e0010 + 6*e0001").unwrap());
        let e = vm_expected(&i, true).unwrap();
        assert_eq!(e[2].1, parse_combo("2*e1010 + 2*e0101").unwrap());
    }

    #[test]
    fn whole_suite_passes() {
        let rs = check_exact_suite();
        let bad: Vec<_> = rs.iter().filter(|r| !r.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert!(rs.len() > 50);
        assert_eq!(rs.iter().filter(|r| r.negative_control).count(), 3);
    }

    #[test]
    fn failure_reports_a_term() {
        let r = run("x", || compare(&constants().phi_r(), &constants().psi_s()));
        assert_eq!(r.status, Status::Fail);
        assert!(r.detail.unwrap().contains("residual terms"));
    }
}
