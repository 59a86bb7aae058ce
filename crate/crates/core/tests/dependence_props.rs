mod common;

use common::*;
use proptest::prelude::*;
use quasidiv::dependence::{annihilating_polynomial, bareiss_det, resultant, verify_dependence};
use quasidiv::{Error, MultiPoly, Pair, RatFun, Scalar};

fn xy() -> (MultiPoly, MultiPoly) {
    (MultiPoly::var(2, 0), MultiPoly::var(2, 1))
}

fn c2(v: i64) -> MultiPoly {
    MultiPoly::constant(2, s(v))
}

fn t() -> RatFun {
    RatFun::var(1, 0)
}

fn ratio(num: &RatFun, den: &RatFun) -> RatFun {
    num.try_div(den).unwrap()
}

/// Expands `pair` by substituting into `p` with exact rational-function
/// arithmetic, independently of the library's denominator clearing.
fn substitute(p: &MultiPoly, pair: &Pair) -> RatFun {
    let mut acc = RatFun::zero(1);
    for (m, c) in p.terms() {
        let term = pair
            .a()
            .pow(m.exps()[0])
            .try_mul(&pair.b().pow(m.exps()[1]))
            .unwrap();
        acc = acc.try_add(&term.scale(c)).unwrap();
    }
    acc
}

#[test]
fn resultant_examples() {
    let (x, y) = xy();
    let one = c2(1);
    assert_eq!(
        resultant(&[-&x, one.clone()], &[-&y, one.clone()]).unwrap(),
        &x - &y
    );
    let f = [-&x, c2(0), one.clone()];
    let g = [-&y, c2(0), c2(0), one.clone()];
    let r = resultant(&f, &g).unwrap();
    assert_eq!(r, leibniz_det(&sylvester(&f, &g)));
    assert!(r == &y.pow(2) - &x.pow(3) || r == &x.pow(3) - &y.pow(2));
    let h = [c2(1), c2(0), c2(1)];
    assert!(resultant(&h, &h).unwrap().is_zero());
    assert_eq!(
        resultant(&[c2(2)], &[c2(3)]),
        Err(Error::DegenerateResultant)
    );
}

#[test]
fn annihilator_examples() {
    let (x, y) = xy();
    let i = RatFun::constant(1, Scalar::i());
    let one = rf(1, 1);
    let cases = [
        (t().pow(2), t().pow(3), &x.pow(3) - &y.pow(2)),
        (
            ratio(&(&t().pow(2) + &one), &t()),
            ratio(&(&t().pow(2) - &one), &t()),
            &(&x.pow(2) - &y.pow(2)) - &c2(4),
        ),
        (
            ratio(&(&t().pow(2) - &one), &(&t() * &i).scale(&s(2))),
            ratio(&(&t().pow(2) + &one), &t().scale(&s(2))),
            &(&x.pow(2) + &y.pow(2)) - &c2(1),
        ),
    ];
    for (a, b, expected) in cases {
        let pair = Pair::new(a, b).unwrap();
        let p = annihilating_polynomial(&pair).unwrap();
        assert_eq!(p, expected);
        assert!(verify_dependence(&p, &pair).unwrap());
        assert!(substitute(&p, &pair).is_zero());
    }
}

#[test]
fn verify_examples() {
    let (x, y) = xy();
    let same = Pair::new(t(), t()).unwrap();
    assert!(verify_dependence(&(&x - &y), &same).unwrap());
    assert!(!verify_dependence(&(&x + &y), &same).unwrap());
    assert_eq!(Pair::new(rf(1, 1), rf(2, 1)), Err(Error::DegeneratePair));
}

/// 100 random pairs of degree at most 6.
#[test]
fn random_pairs_verify() {
    let mut rng = rng(8);
    let mut done = 0;
    while done < 100 {
        let a = rand_ratfun(&mut rng, 1, 6);
        let b = rand_ratfun(&mut rng, 1, 6);
        let Ok(pair) = Pair::new(a, b) else { continue };
        let p = annihilating_polynomial(&pair).unwrap();
        assert!(!p.is_zero());
        assert!(
            verify_dependence(&p, &pair).unwrap(),
            "{p} fails for {:?}",
            pair
        );
        assert!(substitute(&p, &pair).is_zero());
        done += 1;
    }
}

fn scalar_coeffs(max_deg: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar_strategy(), 1..=max_deg + 1)
}

fn lift(cs: &[Scalar]) -> Vec<MultiPoly> {
    cs.iter()
        .map(|c| MultiPoly::constant(1, c.clone()))
        .collect()
}

fn mul_scalar(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![s(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn degree(cs: &[Scalar]) -> Option<usize> {
    cs.iter().rposition(|c| *c != s(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_vanishes_iff_common_factor(
        f in scalar_coeffs(3),
        g in scalar_coeffs(3),
        common in scalar_coeffs(2),
        share in any::<bool>(),
    ) {
        let (f, g) = if share { (mul_scalar(&f, &common), mul_scalar(&g, &common)) } else { (f, g) };
        let (Some(df), Some(dg)) = (degree(&f), degree(&g)) else { return Ok(()) };
        prop_assume!(df + dg > 0);
        let r = resultant(&lift(&f), &lift(&g)).unwrap();
        prop_assert_eq!(r.is_zero(), scalar_gcd_degree(&f, &g) > 0);
    }

    #[test]
    fn bareiss_matches_leibniz(entries in prop::collection::vec(poly_strategy(2, 1, 2), 16), size in 1usize..=4) {
        let mat: Vec<Vec<MultiPoly>> = (0..size).map(|i| entries[i * 4..i * 4 + size].to_vec()).collect();
        prop_assert_eq!(bareiss_det(mat.clone()).unwrap(), leibniz_det(&mat));
    }

    #[test]
    fn sylvester_resultant_matches_leibniz(f in prop::collection::vec(poly_strategy(2, 1, 2), 2..=4), g in prop::collection::vec(poly_strategy(2, 1, 2), 2..=3)) {
        prop_assume!(!f.last().unwrap().is_zero() && !g.last().unwrap().is_zero());
        prop_assert_eq!(resultant(&f, &g).unwrap(), leibniz_det(&sylvester(&f, &g)));
    }

    #[test]
    fn annihilator_is_sound_and_canonical(a in ratfun_strategy(1, 4), b in ratfun_strategy(1, 4)) {
        let Ok(pair) = Pair::new(a, b) else { return Ok(()) };
        let p = annihilating_polynomial(&pair).unwrap();
        prop_assert!(verify_dependence(&p, &pair).unwrap());
        prop_assert!(substitute(&p, &pair).is_zero());
        prop_assert_eq!(p.leading_coeff(), s(1));
        prop_assert_eq!(annihilating_polynomial(&pair).unwrap(), p);
    }
}
