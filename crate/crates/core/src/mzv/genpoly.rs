//! Homogeneous slices of the generating functions with numeric coefficients.

use rayon::prelude::*;

use super::engine::ZetaEngine;
use super::index::enumerate_index_sets;
use crate::bigfloat::BigFloat;
use crate::error::{MzvError, Result};
use crate::poly::HPoly;

/// `Σ_{admissible, depth n, weight l} ζ(L) x^{L−1}`.
pub fn gen_poly_adm(engine: &ZetaEngine, depth: usize, l: u32, digits: u32) -> Result<HPoly<BigFloat>> {
    if depth == 0 || (l as usize) <= depth {
        return Err(MzvError::OutOfRange(format!("admissible slice needs l > depth (depth={depth}, l={l})")));
    }
    let sets = enumerate_index_sets(depth, l, true);
    let values: Vec<BigFloat> = sets.par_iter().map(|s| engine.mzv(s, digits)).collect::<Result<_>>()?;
    HPoly::from_terms(depth, l - depth as u32, sets.iter().map(|s| s.exponents()).zip(values))
}

/// Weight-`l` slice of the depth-4 admissible generating function.
pub fn gen_poly_qzv(engine: &ZetaEngine, l: u32, digits: u32) -> Result<HPoly<BigFloat>> {
    if l < 5 {
        return Err(MzvError::OutOfRange(format!("depth-4 slice needs l >= 5, got {l}")));
    }
    gen_poly_adm(engine, 4, l, digits)
}

/// `ζ(l) Σ_{L ⊢ l, depth n} x^{L−1}`: every composition, one coefficient.
pub fn gen_poly_target(engine: &ZetaEngine, l: u32, depth: usize, digits: u32) -> Result<HPoly<BigFloat>> {
    if depth == 0 || (l as usize) <= depth {
        return Err(MzvError::OutOfRange(format!("target slice needs l > depth (depth={depth}, l={l})")));
    }
    let z = engine.zeta(l, digits)?;
    let sets = enumerate_index_sets(depth, l, false);
    HPoly::from_terms(depth, l - depth as u32, sets.iter().map(|s| (s.exponents(), z.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mzv::index::binomial;
    use crate::Scalar;

    #[test]
    fn qzv_slices() {
        let e = ZetaEngine::new();
        let p5 = gen_poly_qzv(&e, 5, 30).unwrap();
        assert_eq!(p5.len(), 1);
        let z5 = e.zeta(5, 30).unwrap();
        assert!((&p5.coeff(&[1, 0, 0, 0]) - &z5).abs().to_f64() < 1e-28);
        let p6 = gen_poly_qzv(&e, 6, 30).unwrap();
        assert_eq!(p6.len(), 4);
        assert_eq!(p6.coeff(&[1, 0, 0, 1]), e.mzv(&"2,1,1,2".parse().unwrap(), 30).unwrap());
        for l in 5..=9u32 {
            let p = gen_poly_qzv(&e, l, 20).unwrap();
            assert_eq!(p.len() as u64, binomial(l as u64 - 2, 3));
        }
        assert!(gen_poly_qzv(&e, 4, 30).is_err());
    }

    #[test]
    fn target_evaluation_table() {
        let e = ZetaEngine::new();
        let ones = |k: usize| -> Vec<BigFloat> { (0..4).map(|i| BigFloat::from_i64(i64::from(i < k))).collect() };
        for l in 5..=8u32 {
            let t = gen_poly_target(&e, l, 4, 30).unwrap();
            let z = e.zeta(l, 30).unwrap().to_f64();
            for n in 1..=4usize {
                let v = t.eval(&ones(n)).unwrap().to_f64();
                let want = binomial((l as u64) + n as u64 - 5, n as u64 - 1) as f64 * z;
                assert!((v - want).abs() < 1e-12 * want, "l={l} n={n}");
            }
            let li = l as f64;
            let e1100: Vec<BigFloat> = [1, 1, 0, 0].iter().map(|&x| BigFloat::from_i64(x)).collect();
            assert!((t.eval(&e1100).unwrap().to_f64() - (li - 3.0) * z).abs() < 1e-12);
            let e1111 = ones(4);
            let want = (li - 1.0) * (li - 2.0) * (li - 3.0) / 6.0 * z;
            assert!((t.eval(&e1111).unwrap().to_f64() - want).abs() < 1e-10);
        }
        let t5 = gen_poly_target(&e, 5, 4, 30).unwrap();
        assert_eq!(t5.len(), 4);
        assert_eq!(t5.degree(), 1);
        let _ = <BigFloat as Scalar>::to_f64(&t5.coeff(&[1, 0, 0, 0]));
    }
}
