//! Coefficient-wise numeric checks of generating-function identities.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::report::{CheckKind, CheckResult, Status};
use crate::bigfloat::BigFloat;
use crate::error::{MzvError, Result};
use crate::exact::{constants, group_sum, shuffle_element, GroupRingElem, Permutation};
use crate::mzv::{enumerate_index_sets, gen_poly_adm, gen_poly_qzv, gen_poly_target, IndexSet, ZetaEngine};
use crate::poly::{act, sharp, HPoly};
use crate::shuffle::gen_poly_reg;

type Poly = HPoly<BigFloat>;

/// Shared numeric settings.
#[derive(Clone, Copy)]
pub struct NumCtx<'a> {
    pub engine: &'a ZetaEngine,
    pub digits: u32,
    pub tol: f64,
}

impl NumCtx<'_> {
    fn zeta(&self, l: u32) -> Result<BigFloat> {
        self.engine.zeta(l, self.digits)
    }

    /// Weight-`w` slice of `Z*_n`; zero below the minimal weight.
    fn reg_slice(&self, n: usize, w: u32) -> Result<Poly> {
        if (w as usize) < n {
            return Err(MzvError::OutOfRange(format!("weight {w} below depth {n}")));
        }
        gen_poly_reg(self.engine, n, w, self.digits)
    }

    /// Weight-`w` slice of the admissible series `Z_n`.
    fn adm_slice(&self, n: usize, w: u32) -> Result<Poly> {
        if (w as usize) <= n {
            return Ok(HPoly::zero(n, w.saturating_sub(n as u32)));
        }
        gen_poly_adm(self.engine, n, w, self.digits)
    }

    fn residual(&self, lhs: &Poly, rhs: &Poly, l: u32) -> Result<f64> {
        Ok(lhs.max_abs_diff(rhs)? / self.zeta(l)?.to_f64())
    }
}

/// Weight-`l` slice of a tensor product of series with the given depths.
fn tensor_weight(depths: &[usize], l: u32, slice: &dyn Fn(usize, u32) -> Result<Poly>) -> Result<Poly> {
    let total: usize = depths.iter().sum();
    if (l as usize) < total {
        return Err(MzvError::OutOfRange(format!("weight {l} below total depth {total}")));
    }
    let (&first, rest) = depths.split_first().expect("at least one factor");
    if rest.is_empty() {
        return slice(first, l);
    }
    let rest_total: u32 = rest.iter().sum::<usize>() as u32;
    let mut out = HPoly::zero(total, l - total as u32);
    for w in first as u32..=l - rest_total {
        let a = slice(first, w)?;
        let b = tensor_weight(rest, l - w, slice)?;
        out = out.add(&a.tensor(&b))?;
    }
    Ok(out)
}

fn timed(name: String, suite: &str, tol: f64, f: impl FnOnce() -> Result<f64>) -> CheckResult {
    let start = Instant::now();
    let mut r = CheckResult::new(name, suite, CheckKind::Numeric);
    r.tol = Some(tol);
    match f() {
        Ok(res) => {
            r.residual = Some(res);
            if !(res < tol) {
                r.status = Status::Fail;
                r.detail = Some(format!("relative residual {res:.3e} exceeds {tol:.1e}"));
            }
        }
        Err(e) => {
            r.status = Status::Error;
            r.detail = Some(e.to_string());
        }
    }
    r.ms = start.elapsed().as_millis() as u64;
    r
}

/// Flip a numeric check into a negative control.
pub fn as_control(mut r: CheckResult) -> CheckResult {
    r.negative_control = true;
    match r.status {
        Status::Fail => {
            r.status = Status::Pass;
            r.detail = Some("perturbation detected".into());
        }
        Status::Pass => {
            r.status = Status::Fail;
            r.detail = Some("perturbed identity still holds".into());
        }
        Status::Error => {}
    }
    r
}

/// `Z_l|Ω` against the all-compositions target, for an arbitrary acting element.
fn omega_residual(ctx: &NumCtx, l: u32, omega: &GroupRingElem) -> Result<f64> {
    let z = gen_poly_qzv(ctx.engine, l, ctx.digits)?;
    let lhs = act(&z, omega)?;
    let rhs = gen_poly_target(ctx.engine, l, 4, ctx.digits)?;
    ctx.residual(&lhs, &rhs, l)
}

pub fn check_theorem(ctx: &NumCtx, l: u32) -> CheckResult {
    timed("omega_identity".into(), "theorem", ctx.tol, || {
        if l < 5 {
            return Err(MzvError::OutOfRange(format!("needs l >= 5, got {l}")));
        }
        omega_residual(ctx, l, &constants().omega)
    })
    .param("l", l)
}

/// Ω with the sign of its ΦR·S(C₄) term flipped.
fn flipped_omega() -> Result<GroupRingElem> {
    let c = constants();
    c.omega.try_sub(&c.phi_r().try_mul(&c.s_c4)?.scale(&BigRational::from_integer(2.into())))
}

pub fn check_theorem_control(ctx: &NumCtx, l: u32) -> CheckResult {
    let r = timed("control_omega_phi_r_sign".into(), "theorem", ctx.tol, || {
        omega_residual(ctx, l, &flipped_omega()?)
    });
    as_control(r.param("l", l))
}

/// Integer weight attached to `L` in the `k`-th sum formula.
pub fn corollary_weight(k: u8, l: &IndexSet) -> BigInt {
    let p = l.parts();
    let (l1, l2, l3) = (p[0], p[1], p[2]);
    let two = |e: u32| BigInt::one() << e;
    let three = |e: u32| num_traits::pow(BigInt::from(3), e as usize);
    match k {
        1 => BigInt::one(),
        2 => two(l1 + l2 + l3 - 2) + two(l1 + l2 - 2) + two(l1 - 1) - two(l2 + l3 - 1) - two(l2 - 1),
        3 => two(l1) + two(l3 + 1),
        4 => (three(l2) * two(l1 - 1) - three(l2) - 1) * two(l1 + l3),
        _ => panic!("sum formula index {k} out of 1..=4"),
    }
}

/// Multiple of `ζ(l)` on the right of the `k`-th sum formula.
pub fn corollary_rhs(k: u8, l: u32) -> BigRational {
    let l = BigInt::from(l);
    match k {
        1 => BigRational::one(),
        2 => BigRational::from_integer(l),
        3 => BigRational::from_integer(l + 3),
        4 => {
            let cubic = (&l + 7) * (&l + 2) * (&l - 3);
            BigRational::new(cubic, 12.into()) + BigRational::from_integer(2.into())
        }
        _ => panic!("sum formula index {k} out of 1..=4"),
    }
}

fn corollary_residual(ctx: &NumCtx, l: u32, k: u8, rhs_factor: &BigRational) -> Result<f64> {
    let mut lhs = BigFloat::zero_with_bits(crate::bigfloat::bits_for_digits(ctx.digits));
    for s in enumerate_index_sets(4, l, true) {
        lhs += &ctx.engine.mzv(&s, ctx.digits)?.mul_int(&corollary_weight(k, &s));
    }
    let z = ctx.zeta(l)?;
    Ok((&lhs - &z.mul_ratio(rhs_factor)).abs().to_f64() / z.to_f64())
}

pub fn check_corollary(ctx: &NumCtx, l: u32, k: u8) -> CheckResult {
    timed(format!("sum_formula_k{k}"), "corollary", ctx.tol, || {
        if l < 5 || !(1..=4).contains(&k) {
            return Err(MzvError::OutOfRange(format!("needs l >= 5 and k in 1..=4 (l={l}, k={k})")));
        }
        corollary_residual(ctx, l, k, &corollary_rhs(k, l))
    })
    .param("k", k)
    .param("l", l)
}

/// Second sum formula with `(l+1)ζ(l)` on the right.
pub fn check_corollary_control(ctx: &NumCtx, l: u32) -> CheckResult {
    let r = timed("control_sum_formula_k2_rhs".into(), "corollary", ctx.tol, || {
        corollary_residual(ctx, l, 2, &BigRational::from_integer((l + 1).into()))
    });
    as_control(r.param("l", l))
}

/// The weight-5 instances reduce to integer identities at `(2,1,1,1)`.
pub fn check_corollary_factors() -> CheckResult {
    let start = Instant::now();
    let mut r = CheckResult::new("sum_formula_factors_l5", "corollary", CheckKind::Exact);
    let l = IndexSet::new(vec![2, 1, 1, 1]).expect("valid");
    let expected = [1, 5, 8, 16];
    let bad: Vec<String> = (1..=4u8)
        .filter_map(|k| {
            let w = corollary_weight(k, &l);
            let rhs = corollary_rhs(k, 5);
            let want = BigInt::from(expected[k as usize - 1]);
            (w != want || rhs != BigRational::from_integer(want.clone()))
                .then(|| format!("k={k}: weight {w}, right side {rhs}, expected {want}"))
        })
        .collect();
    if bad.is_empty() {
        r.residual = Some(0.0);
    } else {
        r.status = Status::Fail;
        r.detail = Some(bad.join("; "));
    }
    r.ms = start.elapsed().as_millis() as u64;
    r
}

/// Series identities checked slice by slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesId {
    /// `Z*₃♯ ⊗ Z*₁♯ = Z*₄♯ | sh₃,₄`.
    SharpTensor31,
    /// `(Z*₂♯)^{⊗2} = Z*₄♯ | sh₂,₄`.
    SharpTensor22,
    /// `Z*₂♯ ⊗ (Z*₁♯)^{⊗2} = Z*₄♯ | sh₂,₄·S(⟨(34)⟩)`.
    SharpTensor211,
    /// `(Z*₁♯)^{⊗4} = Z*₄♯ | S(𝔖₄)`.
    SharpTensor1111,
    /// `Z*₃ ⊗ Z*₁ = Z*₄ | ΨS`.
    Tensor31,
    /// `(Z*₂)^{⊗2} = Z*₄ | ΦR·S(⟨(13)(24)⟩)`.
    Tensor22,
    /// `Z*₂ ⊗ (Z*₁)^{⊗2} = Z*₄ | ΨΦQ`.
    Tensor211,
    /// `(Z*₁)^{⊗4} = Z*₄ | P·S(𝔖₄)`.
    Tensor1111,
    /// `(Z*₄ − Z₄) | Ω = 0`.
    RegularizedPart,
    /// Alternating five-term combination equals the target series.
    CyclicCombination,
    /// `Z*_j♯ ⊗ Z*_{n−j}♯ = Z*_n♯ | sh_{j,n}`.
    Ikz { j: usize, n: usize },
    /// `Z₂ | (P₂ − I₂)S(𝔖₂) = Σ ζ(l₁+l₂) x^{L−1}`.
    Depth2,
    /// `Z₃ | (P₃S(𝔖₃) − (Q₃+Φ₃R₃−I₃)S(C₃)) = Σ ζ(|L|) x^{L−1}`.
    Depth3,
}

pub const IKZ_PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)];

impl SeriesId {
    pub fn name(&self) -> String {
        match self {
            SeriesId::SharpTensor31 => "sharp_tensor_3_1".into(),
            SeriesId::SharpTensor22 => "sharp_tensor_2_2".into(),
            SeriesId::SharpTensor211 => "sharp_tensor_2_1_1".into(),
            SeriesId::SharpTensor1111 => "sharp_tensor_1_1_1_1".into(),
            SeriesId::Tensor31 => "tensor_3_1".into(),
            SeriesId::Tensor22 => "tensor_2_2".into(),
            SeriesId::Tensor211 => "tensor_2_1_1".into(),
            SeriesId::Tensor1111 => "tensor_1_1_1_1".into(),
            SeriesId::RegularizedPart => "regularized_part_annihilated".into(),
            SeriesId::CyclicCombination => "cyclic_combination".into(),
            SeriesId::Ikz { j, n } => format!("sharp_shuffle_{j}_{n}"),
            SeriesId::Depth2 => "depth2_identity".into(),
            SeriesId::Depth3 => "depth3_identity".into(),
        }
    }

    /// Identities depending on the regularization constant.
    pub fn uses_regularization(&self) -> bool {
        !matches!(self, SeriesId::Depth2 | SeriesId::Depth3)
    }

    pub fn min_weight(&self) -> u32 {
        match self {
            SeriesId::Ikz { n, .. } => *n as u32,
            SeriesId::Depth2 => 3,
            SeriesId::Depth3 => 4,
            _ => 4,
        }
    }

    /// The identities of the `props` suite, in report order.
    pub fn props() -> Vec<SeriesId> {
        let mut v = vec![
            SeriesId::SharpTensor31,
            SeriesId::SharpTensor22,
            SeriesId::SharpTensor211,
            SeriesId::SharpTensor1111,
            SeriesId::Tensor31,
            SeriesId::Tensor22,
            SeriesId::Tensor211,
            SeriesId::Tensor1111,
            SeriesId::RegularizedPart,
            SeriesId::CyclicCombination,
        ];
        v.extend(IKZ_PAIRS.iter().map(|&(j, n)| SeriesId::Ikz { j, n }));
        v
    }

    /// The four regularized tensor identities whose combination yields the main identity.
    pub fn chain() -> [SeriesId; 6] {
        [
            SeriesId::Tensor31,
            SeriesId::Tensor22,
            SeriesId::Tensor211,
            SeriesId::Tensor1111,
            SeriesId::RegularizedPart,
            SeriesId::CyclicCombination,
        ]
    }
}

fn subgroup(gens: &[&str]) -> Result<GroupRingElem> {
    let gs: Vec<Permutation> = gens.iter().map(|s| Permutation::parse_cycles(s, 4)).collect::<Result<_>>()?;
    group_sum(&Permutation::generated(&gs))
}

/// Both sides of a series identity at weight `l`, with an optional perturbation of the acting element.
fn series_sides(ctx: &NumCtx, id: SeriesId, l: u32, perturb: Option<&GroupRingElem>) -> Result<(Poly, Poly)> {
    let c = constants();
    let reg = |n: usize, w: u32| ctx.reg_slice(n, w);
    let reg_sharp = |n: usize, w: u32| sharp(&ctx.reg_slice(n, w)?);
    let pick = |g: GroupRingElem| perturb.cloned().unwrap_or(g);
    Ok(match id {
        SeriesId::SharpTensor31 | SeriesId::SharpTensor22 | SeriesId::SharpTensor211 | SeriesId::SharpTensor1111 => {
            let (depths, g): (&[usize], GroupRingElem) = match id {
                SeriesId::SharpTensor31 => (&[3, 1], shuffle_element(3, 4)?),
                SeriesId::SharpTensor22 => (&[2, 2], shuffle_element(2, 4)?),
                SeriesId::SharpTensor211 => (&[2, 1, 1], shuffle_element(2, 4)?.try_mul(&subgroup(&["(34)"])?)?),
                _ => (&[1, 1, 1, 1], c.s_sym4.clone()),
            };
            let lhs = tensor_weight(depths, l, &reg_sharp)?;
            (lhs, act(&reg_sharp(4, l)?, &pick(g))?)
        }
        SeriesId::Tensor31 | SeriesId::Tensor22 | SeriesId::Tensor211 | SeriesId::Tensor1111 => {
            let (depths, g): (&[usize], GroupRingElem) = match id {
                SeriesId::Tensor31 => (&[3, 1], c.psi_s()),
                SeriesId::Tensor22 => (&[2, 2], c.phi_r().try_mul(&subgroup(&["(13)(24)"])?)?),
                SeriesId::Tensor211 => (&[2, 1, 1], c.psi_phi_q()),
                _ => (&[1, 1, 1, 1], c.p_sym4()),
            };
            let lhs = tensor_weight(depths, l, &reg)?;
            (lhs, act(&reg(4, l)?, &pick(g))?)
        }
        SeriesId::RegularizedPart => {
            let diff = reg(4, l)?.sub(&ctx.adm_slice(4, l)?)?;
            (act(&diff, &pick(c.omega.clone()))?, HPoly::zero(4, l - 4))
        }
        SeriesId::CyclicCombination => {
            let cyc = pick(c.s_c4.clone());
            let mut lhs = tensor_weight(&[1, 1, 1, 1], l, &reg)?;
            lhs = lhs.sub(&act(&tensor_weight(&[2, 1, 1], l, &reg)?, &cyc)?)?;
            lhs = lhs.add(&act(&tensor_weight(&[2, 2], l, &reg)?, &c.s_c4_star)?)?;
            lhs = lhs.add(&act(&tensor_weight(&[3, 1], l, &reg)?, &cyc)?)?;
            lhs = lhs.sub(&act(&reg(4, l)?, &cyc)?)?;
            (lhs, gen_poly_target(ctx.engine, l, 4, ctx.digits)?)
        }
        SeriesId::Ikz { j, n } => {
            if j == 0 || j >= n || n > 4 {
                return Err(MzvError::OutOfRange(format!("shuffle pair ({j},{n})")));
            }
            let lhs = tensor_weight(&[j, n - j], l, &reg_sharp)?;
            (lhs, act(&reg_sharp(n, l)?, &pick(shuffle_element(j, n)?))?)
        }
        SeriesId::Depth2 | SeriesId::Depth3 => {
            let (n, g) = if id == SeriesId::Depth2 { (2, c.omega2()) } else { (3, c.omega3()) };
            let lhs = act(&ctx.adm_slice(n, l)?, &pick(g))?;
            (lhs, gen_poly_target(ctx.engine, l, n, ctx.digits)?)
        }
    })
}

fn series_residual(ctx: &NumCtx, id: SeriesId, l: u32, perturb: Option<&GroupRingElem>) -> Result<f64> {
    if l < id.min_weight() {
        return Err(MzvError::OutOfRange(format!("{} needs weight >= {}, got {l}", id.name(), id.min_weight())));
    }
    let (lhs, rhs) = series_sides(ctx, id, l, perturb)?;
    ctx.residual(&lhs, &rhs, l)
}

pub fn check_series_identity(ctx: &NumCtx, id: SeriesId, l: u32) -> CheckResult {
    let suite = if matches!(id, SeriesId::Depth2 | SeriesId::Depth3) { "appendix" } else { "props" };
    timed(id.name(), suite, ctx.tol, || series_residual(ctx, id, l, None)).param("l", l)
}

/// `(Z*₄ − Z₄)` acted on by Ω with the ΦR sign flipped.
pub fn check_props_control(ctx: &NumCtx, l: u32) -> CheckResult {
    let r = timed("control_regularized_part_phi_r_sign".into(), "props", ctx.tol, || {
        series_residual(ctx, SeriesId::RegularizedPart, l, Some(&flipped_omega()?))
    });
    as_control(r.param("l", l))
}

/// Depth-2 identity with `P₂·S(𝔖₂)`, dropping the identity term.
pub fn check_appendix_control(ctx: &NumCtx, l: u32) -> CheckResult {
    let r = timed("control_depth2_without_identity".into(), "appendix", ctx.tol, || {
        let g = GroupRingElem::from_matrix(crate::exact::IntMatrix::p(2)).try_mul(&constants().s_sym2)?;
        series_residual(ctx, SeriesId::Depth2, l, Some(&g))
    });
    as_control(r.param("l", l))
}

/// `χ(L)`: zero only at `(1,1,1,1)`.
pub fn chi(l: &IndexSet) -> bool {
    l.parts().iter().any(|&x| x != 1)
}

/// Both sides of the pointwise cyclic identity at `L`.
fn cyclic_sides(ctx: &NumCtx, l: &IndexSet, with_chi: bool) -> Result<(BigFloat, BigFloat)> {
    if l.depth() != 4 {
        return Err(MzvError::OutOfRange(format!("cyclic identity needs depth 4, got {l}")));
    }
    let zs = |parts: &[u32]| -> Result<BigFloat> { ctx.engine.reg_mzv(&IndexSet::new(parts.to_vec())?, ctx.digits) };
    // Product of ζ* over consecutive blocks of the permuted index.
    let blocks = |parts: &[u32], sizes: &[usize]| -> Result<BigFloat> {
        let mut acc = BigFloat::one_with_bits(crate::bigfloat::bits_for_digits(ctx.digits));
        let mut at = 0;
        for &s in sizes {
            acc = &acc * &zs(&parts[at..at + s])?;
            at += s;
        }
        Ok(acc)
    };
    let permuted = |sigma: &Permutation| -> Vec<u32> {
        let inv = sigma.inverse();
        (1..=4).map(|i| l.parts()[inv.apply(i) - 1]).collect()
    };
    let sum_over = |group: &[Permutation], sizes: &[usize]| -> Result<BigFloat> {
        let mut acc = BigFloat::zero_with_bits(crate::bigfloat::bits_for_digits(ctx.digits));
        for s in group {
            acc += &blocks(&permuted(s), sizes)?;
        }
        Ok(acc)
    };
    let c4 = Permutation::cyclic(4);
    let c4_star = &c4[..2];
    let lhs = sum_over(&c4, &[4])?;
    let mut rhs = blocks(l.parts(), &[1, 1, 1, 1])?;
    rhs -= &sum_over(&c4, &[2, 1, 1])?;
    rhs += &sum_over(c4_star, &[2, 2])?;
    rhs += &sum_over(&c4, &[3, 1])?;
    if with_chi && chi(l) {
        rhs -= &ctx.zeta(l.weight())?;
    }
    Ok((lhs, rhs))
}

fn cyclic_residual(ctx: &NumCtx, l: &IndexSet, with_chi: bool) -> Result<f64> {
    let (lhs, rhs) = cyclic_sides(ctx, l, with_chi)?;
    Ok((&lhs - &rhs).abs().to_f64() / ctx.zeta(l.weight())?.to_f64())
}

pub fn check_cyclic_pointwise(ctx: &NumCtx, l: &IndexSet) -> CheckResult {
    timed("cyclic_pointwise".into(), "cyclic", ctx.tol, || cyclic_residual(ctx, l, true))
        .param("L", l)
        .param("chi", u8::from(chi(l)))
}

/// The pointwise identity with the `χ·ζ(|L|)` term dropped.
pub fn check_cyclic_control(ctx: &NumCtx, l: &IndexSet) -> CheckResult {
    let r = timed("control_cyclic_without_chi".into(), "cyclic", ctx.tol, || cyclic_residual(ctx, l, false));
    as_control(r.param("L", l))
}

/// All depth-4 index sets with weight in `4..=max_weight`.
pub fn cyclic_index_sets(max_weight: u32) -> Vec<IndexSet> {
    (4..=max_weight).flat_map(|w| enumerate_index_sets(4, w, false)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(engine: &ZetaEngine) -> NumCtx<'_> {
        NumCtx { engine, digits: 30, tol: 1e-22 }
    }

    fn ok(r: &CheckResult) {
        assert!(r.passed(), "{r:#?}");
    }

    #[test]
    fn corollary_weights_by_hand() {
        let l: IndexSet = "2,1,1,1".parse().unwrap();
        assert_eq!(corollary_weight(2, &l), BigInt::from(5));
        assert_eq!(corollary_weight(3, &l), BigInt::from(8));
        assert_eq!(corollary_weight(4, &l), BigInt::from(16));
        assert_eq!(corollary_rhs(4, 5), BigRational::from_integer(16.into()));
        assert_eq!(corollary_rhs(4, 6), BigRational::from_integer(28.into()));
        // (3,1,1,1): 8+4+4−2−1 = 13 and 8+4 = 12.
        let l: IndexSet = "3,1,1,1".parse().unwrap();
        assert_eq!(corollary_weight(2, &l), BigInt::from(13));
        assert_eq!(corollary_weight(3, &l), BigInt::from(12));
        ok(&check_corollary_factors());
    }

    #[test]
    fn theorem_and_sum_formulas_at_low_weight() {
        let e = ZetaEngine::new();
        let c = ctx(&e);
        for l in 5..=7 {
            ok(&check_theorem(&c, l));
            for k in 1..=4 {
                ok(&check_corollary(&c, l, k));
            }
        }
        ok(&check_theorem_control(&c, 6));
        ok(&check_corollary_control(&c, 6));
        assert_eq!(check_theorem(&c, 4).status, Status::Error);
    }

    #[test]
    fn series_identities_at_low_weight() {
        let e = ZetaEngine::new();
        let c = ctx(&e);
        for l in 5..=6 {
            for id in SeriesId::props() {
                ok(&check_series_identity(&c, id, l));
            }
        }
        for l in 3..=6 {
            ok(&check_series_identity(&c, SeriesId::Depth2, l));
        }
        for l in 4..=6 {
            ok(&check_series_identity(&c, SeriesId::Depth3, l));
        }
        ok(&check_props_control(&c, 5));
        ok(&check_appendix_control(&c, 5));
    }

    #[test]
    fn cyclic_pointwise_small() {
        let e = ZetaEngine::new();
        let c = ctx(&e);
        for l in cyclic_index_sets(6) {
            ok(&check_cyclic_pointwise(&c, &l));
        }
        let l: IndexSet = "2,1,1,1".parse().unwrap();
        ok(&check_cyclic_control(&c, &l));
        assert_eq!(cyclic_index_sets(7).len(), 1 + 4 + 10 + 20);
    }

    #[test]
    fn tensor_weight_counts_terms() {
        let e = ZetaEngine::new();
        let c = ctx(&e);
        let p = tensor_weight(&[1, 1], 5, &|n, w| c.reg_slice(n, w)).unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.degree(), 3);
        // ζ*(1) = 0 kills the (1,4) and (4,1) monomials.
        assert_eq!(p.len(), 2);
    }
}
