//! Gauss/Dirichlet composition of form classes: products, inverses, and
//! fast powers. Results are always reduced representatives.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bqf::{self, QForm};
use crate::{Error, Result};

/// How far [`compose`] scans for a represented value coprime to the other
/// leading coefficient before giving up.
pub const COPRIME_SCAN_BOUND: u32 = 20;

/// Dirichlet composition of the classes of `q1` and `q2` (equal
/// discriminants, both primitive); returns the reduced representative.
///
/// When the leading coefficients share a factor, `q2` is first replaced by
/// an equivalent form whose leading coefficient is coprime to `a1`, found
/// among its neighbors and a bounded represented-value scan.
pub fn compose(q1: &QForm, q2: &QForm) -> Result<QForm> {
    let d1 = q1.disc();
    let d2 = q2.disc();
    if d1 != d2 {
        return Err(Error::DiscriminantMismatch(d1, d2));
    }
    for q in [q1, q2] {
        if !q.is_primitive() {
            return Err(Error::ImprimitiveForm {
                a: q.a().clone(),
                b: q.b().clone(),
                c: q.c().clone(),
            });
        }
    }
    let f1 = q1.clone();
    let f2 = if q1.a().gcd(q2.a()).is_one() {
        q2.clone()
    } else {
        coprime_equivalent(q2, q1.a())?
    };
    let (a1, b1) = (f1.a().clone(), f1.b().clone());
    let (a2, b2) = (f2.a().clone(), f2.b().clone());
    // b = b1 (mod 2 a1), b = b2 (mod 2 a2); solvable since b1 = b2 (mod 2)
    let b = crt_pair(&b1, &(2 * &a1), &b2, &(2 * &a2))?;
    let a = &a1 * &a2;
    let num = &b * &b - &d1;
    let four_a = 4 * &a;
    debug_assert!(num.mod_floor(&four_a).is_zero());
    let c = num / four_a;
    Ok(bqf::reduce(&QForm::new(a, b, c)?))
}

/// An equivalent form of `q` whose leading coefficient is coprime to `to`:
/// first the outer-coefficient swap, then neighbors, then a widening scan.
fn coprime_equivalent(q: &QForm, to: &BigInt) -> Result<QForm> {
    let swapped = QForm::new_unchecked(q.c().clone(), -q.b(), q.a().clone());
    if swapped.a().gcd(to).is_one() {
        return Ok(swapped);
    }
    for n in bqf::neighbors(q) {
        if n.a().gcd(to).is_one() {
            return Ok(n.normalize());
        }
    }
    for bound in [COPRIME_SCAN_BOUND, 4 * COPRIME_SCAN_BOUND] {
        for (value, form) in bqf::scan_represented(q, bound) {
            if BigInt::from(value).gcd(to).is_one() {
                return Ok(form);
            }
        }
    }
    Err(Error::NoCoprimeValue(to.clone()))
}

/// Solve x = r1 (mod m1), x = r2 (mod m2) for possibly non-coprime moduli.
fn crt_pair(r1: &BigInt, m1: &BigInt, r2: &BigInt, m2: &BigInt) -> Result<BigInt> {
    let g = m1.gcd(m2);
    let diff = r2 - r1;
    if !diff.mod_floor(&g).is_zero() {
        return Err(Error::Parse(format!(
            "inconsistent congruences {r1} mod {m1}, {r2} mod {m2}"
        )));
    }
    let lcm = m1 / &g * m2;
    let m1g = m1 / &g;
    let m2g = m2 / &g;
    let ext = m1g.extended_gcd(&m2g);
    // ext.x * m1g = 1 (mod m2g)
    let t = ((diff / &g) * ext.x).mod_floor(&m2g);
    Ok((r1 + m1 * t).mod_floor(&lcm))
}

/// The inverse class: reduce of `(A, -B, C)`.
pub fn inverse(q: &QForm) -> QForm {
    bqf::reduce(&QForm::new_unchecked(
        q.a().clone(),
        -q.b(),
        q.c().clone(),
    ))
}

/// Reduced representative of `q^n` by binary exponentiation; `n = 0` gives
/// the principal form, negative exponents go through the inverse.
pub fn power(q: &QForm, n: i64) -> Result<QForm> {
    if n == 0 {
        return bqf::principal_form(&q.disc());
    }
    if n < 0 {
        return power(&inverse(q), n.checked_neg().expect("i64::MIN exponent"));
    }
    let mut n = n as u64;
    let mut base = bqf::reduce(q);
    let mut acc: Option<QForm> = None;
    while n > 0 {
        if n & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(r) => compose(&r, &base)?,
            });
        }
        n >>= 1;
        if n > 0 {
            base = compose(&base, &base)?;
        }
    }
    Ok(acc.expect("n > 0"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};

    fn f(a: i64, b: i64, c: i64) -> QForm {
        QForm::from_i64(a, b, c).unwrap()
    }

    #[test]
    fn compose_pins() {
        // h(-20) = 2, so the non-principal class squares to the principal one
        assert_eq!(compose(&f(2, 2, 3), &f(2, 2, 3)).unwrap(), f(1, 0, 5));
        let lhs = compose(&f(1058, 918, 251023), &f(529, 140, 501657)).unwrap();
        assert_eq!(lhs, bqf::reduce(&f(2, 918, 132791167)));
        // principal is the identity
        let q = f(5, 1, 504);
        let q0 = bqf::principal_form(&q.disc()).unwrap();
        assert_eq!(compose(&q0, &q).unwrap(), bqf::reduce(&q));
        assert!(compose(&f(1, 0, 5), &f(5, 1, 504)).is_err());
        assert!(compose(&f(2, 0, 4), &f(2, 0, 4)).is_err()); // imprimitive
    }

    #[test]
    fn inverse_pins() {
        assert_eq!(inverse(&f(5, 1, 504)), f(5, -1, 504));
        assert_eq!(inverse(&f(2, 2, 3)), f(2, 2, 3)); // ambiguous
        assert_eq!(inverse(&f(1, 0, 5)), f(1, 0, 5));
        for q in [f(5, 1, 504), f(3, 1, 10106), f(7, 1, 360)] {
            let id = compose(&q, &inverse(&q)).unwrap();
            assert_eq!(id, bqf::principal_form(&q.disc()).unwrap());
        }
    }

    #[test]
    fn power_pins() {
        assert_eq!(power(&f(5, 1, 504), 3).unwrap(), f(36, 17, 72));
        // the paper's table prints the non-reduced (8,13,3795)
        let cube = power(&f(2, 1, 15159), 3).unwrap();
        assert_eq!(cube, bqf::reduce(&f(8, 13, 3795)));
        assert!(bqf::is_equivalent(&cube, &f(8, 13, 3795)).unwrap());
        assert_eq!(power(&f(5, 1, 504), 0).unwrap(), f(1, 1, 2520));
        assert_eq!(
            power(&f(5, 1, 504), -1).unwrap(),
            f(5, -1, 504)
        );
    }

    #[test]
    fn headline_power_pin() {
        let q = QForm::new(
            BigInt::from(2),
            BigInt::from(1),
            BigInt::from(1388888888888889i64),
        )
        .unwrap();
        let half = power(&q, 53509655).unwrap();
        assert_eq!(half.a().to_i64(), Some(2071723));
        assert_eq!(half.b().to_i64(), Some(2071723));
        assert_eq!(half.c().to_i64(), Some(1341323520));
    }

    #[test]
    fn group_axioms_on_small_discriminants() {
        // commutativity on all class pairs, plus identity and inverses
        for d in [-20i64, -23, -47, -71, -104, -956] {
            let disc = BigInt::from(d);
            let forms = bqf::reduced_forms(&disc).unwrap();
            let q0 = bqf::principal_form(&disc).unwrap();
            for x in &forms {
                assert_eq!(compose(x, &q0).unwrap(), *x);
                assert_eq!(compose(x, &inverse(x)).unwrap(), q0);
                for y in &forms {
                    let xy = compose(x, y).unwrap();
                    let yx = compose(y, x).unwrap();
                    assert_eq!(xy, yx);
                    assert!(forms.contains(&xy));
                }
            }
        }
    }

    #[test]
    fn associativity_random_triples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let forms = bqf::reduced_forms(&BigInt::from(-10079)).unwrap();
        for _ in 0..300 {
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                forms[rng.gen_range(0..forms.len())].clone()
            };
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let lhs = compose(&compose(&x, &y).unwrap(), &z).unwrap();
            let rhs = compose(&x, &compose(&y, &z).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn power_addition_law() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let q = f(5, 1, 504);
        for _ in 0..60 {
            let m = rng.gen_range(-50i64..=50);
            let n = rng.gen_range(-50i64..=50);
            let lhs = power(&q, m + n).unwrap();
            let rhs = compose(&power(&q, m).unwrap(), &power(&q, n).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "m={m} n={n}");
        }
    }

    #[test]
    fn discriminant_preserved() {
        let q = f(3, 1, 10106);
        let d = q.disc();
        assert_eq!(compose(&q, &q).unwrap().disc(), d);
        assert_eq!(inverse(&q).disc(), d);
        assert_eq!(power(&q, 17).unwrap().disc(), d);
    }

    #[test]
    fn ramified_class_is_two_torsion() {
        // disc -84 = -4*21: the prime form over 3 is (3,0,7), non-principal
        let q = f(3, 0, 7);
        let q0 = bqf::principal_form(&q.disc()).unwrap();
        assert_ne!(bqf::reduce(&q), q0);
        assert_eq!(compose(&q, &q).unwrap(), q0);
    }
}
