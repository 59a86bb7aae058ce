//! Exact `m`-th roots of polynomials by leading-term peeling.

use super::field::Field;
use super::poly::{Monomial, Poly};

/// Returns `r` with `r^m == p`, or `None` when no root exists in `F[z]`
/// (or the leading scalar has no root in `F`).
///
/// Terms of the root are recovered from the top down: once the partial root
/// `r` agrees with the true root above some monomial, the leading term of
/// `p - r^m` is `m * lt(r)^(m-1) * t` for the next term `t`.
pub fn poly_nth_root<F: Field>(p: &Poly<F>, m: u32) -> Option<Poly<F>> {
    let n = p.nvars();
    if m == 0 {
        return None;
    }
    if m == 1 || p.is_zero() {
        return Some(p.clone());
    }
    if let Some(c) = p.constant_value() {
        return Some(Poly::constant(n, c.nth_root(m)?));
    }
    let (lm, lc) = p.leading().map(|(a, b)| (a.clone(), b.clone()))?;
    let lowest = p.terms().next().map(|(a, _)| a.clone())?;
    let root_mono = |mono: &Monomial| -> Option<Monomial> {
        if mono.exps().iter().all(|e| e % m == 0) {
            Some(Monomial::from_exps(
                mono.exps().iter().map(|e| e / m).collect(),
            ))
        } else {
            None
        }
    };
    let lead = root_mono(&lm)?;
    let floor = root_mono(&lowest)?;
    let rc = lc.nth_root(m)?;
    let lead_pow = Monomial::from_exps(lead.exps().iter().map(|e| e * (m - 1)).collect());
    let step_inv = (F::from_i64(m as i64) * rc.pow_u32(m - 1)).inv()?;
    let mut root = Poly::from_terms(n, [(lead.clone(), rc)]);
    loop {
        let diff = p - &root.pow(m);
        let Some((dm, dc)) = diff.leading().map(|(a, b)| (a.clone(), b.clone())) else {
            return Some(root);
        };
        if !lead_pow.divides(&dm) {
            return None;
        }
        let tm = dm.div(&lead_pow);
        if tm >= lead || tm < floor {
            return None;
        }
        let tc = dc * step_inv.clone();
        debug_assert!(!tc.is_zero());
        root = &root + &Poly::from_terms(n, [(tm, tc)]);
    }
}
