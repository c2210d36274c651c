//! The fixed matrices and group-ring elements of the theory.

use std::fmt::Write as _;
use std::sync::OnceLock;

use super::group_ring::{group_sum, GroupRingElem};
use super::matrix::IntMatrix;
use super::perm::Permutation;

#[derive(Clone, Debug)]
pub struct Constants {
    pub p: IntMatrix,
    pub q: IntMatrix,
    pub r: IntMatrix,
    pub s: IntMatrix,
    pub phi: GroupRingElem,
    pub psi: GroupRingElem,
    pub j: IntMatrix,
    pub t: [IntMatrix; 4],
    pub q3: IntMatrix,
    pub r3: IntMatrix,
    pub phi3: GroupRingElem,
    pub s_sym4: GroupRingElem,
    pub s_c4: GroupRingElem,
    /// `S({id, (1234)})`.
    pub s_c4_star: GroupRingElem,
    pub s_sym3: GroupRingElem,
    pub s_c3: GroupRingElem,
    pub s_sym2: GroupRingElem,
    pub omega: GroupRingElem,
}

fn el(m: &IntMatrix) -> GroupRingElem {
    GroupRingElem::from_matrix(m.clone())
}

fn sum(ms: &[IntMatrix]) -> GroupRingElem {
    GroupRingElem::sum_of(ms).expect("constant matrices share an order")
}

impl Constants {
    pub fn build() -> Self {
        let p = IntMatrix::p(4);
        let q = IntMatrix::from_rows(&[[1, 0, 0, 0], [0, 1, 0, 0], [-1, -1, 1, 0], [0, 0, -1, 1]]);
        let r = IntMatrix::from_rows(&[[1, 0, 0, 0], [0, 1, 0, 0], [-1, -1, 1, 0], [0, 0, 0, 1]]);
        let s = IntMatrix::from_rows(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [-1, -1, -1, 1]]);
        let phi = sum(&[
            IntMatrix::identity(4),
            IntMatrix::from_rows(&[[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, -1, 0], [0, 0, 1, 1]]),
            IntMatrix::from_rows(&[[1, 1, 1, 0], [0, -1, -1, 0], [0, 1, 0, 0], [0, 0, 1, 1]]),
        ]);
        let psi = sum(&[
            IntMatrix::identity(4),
            IntMatrix::from_rows(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, -1]]),
            IntMatrix::from_rows(&[[1, 0, 0, 0], [0, 1, 1, 1], [0, 0, -1, -1], [0, 0, 1, 0]]),
            IntMatrix::from_rows(&[[1, 1, 1, 1], [0, -1, -1, -1], [0, 1, 0, 0], [0, 0, 1, 0]]),
        ]);
        let j = IntMatrix::from_rows(&[[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        let t = [
            IntMatrix::from_rows(&[[0, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [0, 1, 1, 1]]),
            IntMatrix::from_rows(&[[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 1, 1]]),
            IntMatrix::from_rows(&[[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 1, 1, 0]]),
            IntMatrix::from_rows(&[[0, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]]),
        ];
        let q3 = IntMatrix::from_rows(&[[1, 0, 0], [-1, 1, 0], [0, 0, 1]]);
        let r3 = IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 0], [-1, -1, 1]]);
        let phi3 = sum(&[IntMatrix::identity(3), IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 1], [0, 0, -1]])]);

        let gs = |ps: &[Permutation]| group_sum(ps).expect("permutations share a degree");
        let s_sym4 = gs(&Permutation::all(4));
        let s_c4 = gs(&Permutation::cyclic(4));
        let s_c4_star = gs(&Permutation::cyclic(4)[..2]);
        let s_sym3 = gs(&Permutation::all(3));
        let s_c3 = gs(&Permutation::cyclic(3));
        let s_sym2 = gs(&Permutation::all(2));

        let omega = omega_from(&p, &q, &r, &s, &phi, &psi, &s_sym4, &s_c4);
        Self { p, q, r, s, phi, psi, j, t, q3, r3, phi3, s_sym4, s_c4, s_c4_star, s_sym3, s_c3, s_sym2, omega }
    }

    pub fn psi_phi_q(&self) -> GroupRingElem {
        &(&self.psi * &self.phi) * &el(&self.q)
    }

    pub fn phi_r(&self) -> GroupRingElem {
        &self.phi * &el(&self.r)
    }

    pub fn psi_s(&self) -> GroupRingElem {
        &self.psi * &el(&self.s)
    }

    /// `P·S(𝔖₄)`.
    pub fn p_sym4(&self) -> GroupRingElem {
        &el(&self.p) * &self.s_sym4
    }

    /// `ΨΦQ − ΦR − ΨS + I`.
    pub fn cyclic_part(&self) -> GroupRingElem {
        let a = &self.psi_phi_q() - &self.phi_r();
        let b = &a - &self.psi_s();
        &b + &GroupRingElem::identity(4)
    }

    /// `(P₂ − I₂)·S(𝔖₂)`.
    pub fn omega2(&self) -> GroupRingElem {
        let d = &el(&IntMatrix::p(2)) - &GroupRingElem::identity(2);
        &d * &self.s_sym2
    }

    /// `P₃·S(𝔖₃) − (Q₃ + Φ₃R₃ − I₃)·S(C₃)`.
    pub fn omega3(&self) -> GroupRingElem {
        let lead = &el(&IntMatrix::p(3)) * &self.s_sym3;
        let inner = &(&el(&self.q3) + &(&self.phi3 * &el(&self.r3))) - &GroupRingElem::identity(3);
        &lead - &(&inner * &self.s_c3)
    }

    /// Named matrices, in display order.
    pub fn matrices(&self) -> Vec<(&'static str, &IntMatrix)> {
        vec![
            ("P", &self.p),
            ("Q", &self.q),
            ("R", &self.r),
            ("S", &self.s),
            ("J", &self.j),
            ("T1", &self.t[0]),
            ("T2", &self.t[1]),
            ("T3", &self.t[2]),
            ("T4", &self.t[3]),
            ("Q3", &self.q3),
            ("R3", &self.r3),
        ]
    }

    pub fn elements(&self) -> Vec<(&'static str, &GroupRingElem)> {
        vec![("Phi", &self.phi), ("Psi", &self.psi), ("Phi3", &self.phi3)]
    }

    /// Plain-text dump of every constant.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (name, m) in self.matrices() {
            let _ = writeln!(out, "{name} (det {}):", m.det());
            for i in 0..m.order() {
                let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "  ({})", row.join(","));
            }
        }
        for (name, g) in self.elements() {
            let _ = write!(out, "{name} = {g}");
        }
        let _ = writeln!(out, "Omega: {} support matrices", self.omega.len());
        out
    }
}

#[allow(clippy::too_many_arguments)]
pub fn omega_from(
    p: &IntMatrix,
    q: &IntMatrix,
    r: &IntMatrix,
    s: &IntMatrix,
    phi: &GroupRingElem,
    psi: &GroupRingElem,
    s_sym4: &GroupRingElem,
    s_c4: &GroupRingElem,
) -> GroupRingElem {
    let psi_phi_q = &(psi * phi) * &el(q);
    let phi_r = phi * &el(r);
    let psi_s = psi * &el(s);
    let inner = &(&(&psi_phi_q - &phi_r) - &psi_s) + &GroupRingElem::identity(4);
    &(&el(p) * s_sym4) - &(&inner * s_c4)
}

pub fn constants() -> &'static Constants {
    static C: OnceLock<Constants> = OnceLock::new();
    C.get_or_init(Constants::build)
}
