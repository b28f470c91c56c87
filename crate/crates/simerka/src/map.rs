//! The Šimerka map: factor-base construction, prime forms, evaluation of
//! `ŝ` on forms, and smooth-value harvesting.
//!
//! For a form `(A, B, C)` with `-A < B <= A` whose leading coefficient
//! factors as `A = prod p_j^(a_j)` over the base, the map assigns the signed
//! factored rational `prod p_j^(s_j a_j)`: the sign `s_j` is read from the
//! residue `b_j = B (mod 2 p_j)` placed in `(-p_j, p_j]` (`+` when
//! `b_j >= 0`). Ramified primes are 2-torsion and contribute their exponent
//! mod 2 with positive sign. The value of `ŝ` on a class is well defined
//! modulo the value group of the principal class, which is how relations
//! between prime-form classes are harvested.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, FactoredRational};
use crate::bqf::{self, QForm};
use crate::{Error, Result};

/// The form `(p, b_p, C)` attached to a non-inert prime, with the canonical
/// root `b_p^2 = disc (mod 4p)`, `0 <= b_p <= p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeForm {
    p: u64,
    root: u64,
    form: QForm,
    ramified: bool,
}

impl PrimeForm {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn form(&self) -> &QForm {
        &self.form
    }

    pub fn ramified(&self) -> bool {
        self.ramified
    }
}

impl fmt::Display for PrimeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I_{} = {}", self.p, self.form)
    }
}

/// Build the prime form over `p`, or fail with `InertPrime` when
/// `(disc|p) = -1`. Conductor primes (where the would-be form is
/// imprimitive) are also rejected.
pub fn prime_form(disc: &BigInt, p: u64) -> Result<PrimeForm> {
    validate_disc(disc)?;
    let kron = arith::kronecker(disc, &BigInt::from(p))?;
    if kron == -1 {
        return Err(Error::InertPrime {
            p,
            disc: disc.clone(),
        });
    }
    let root = arith::sqrt_mod(disc, p, 4 * p).expect("non-inert primes have roots mod 4p");
    debug_assert!(root <= p);
    let root_big = BigInt::from(root);
    let c = (&root_big * &root_big - disc) / (4 * BigInt::from(p));
    let form = QForm::new(BigInt::from(p), root_big, c)?;
    if !form.is_primitive() {
        return Err(Error::ImprimitiveForm {
            a: form.a().clone(),
            b: form.b().clone(),
            c: form.c().clone(),
            content: form.content(),
        });
    }
    Ok(PrimeForm {
        p,
        root,
        form,
        ramified: kron == 0,
    })
}

fn validate_disc(disc: &BigInt) -> Result<()> {
    if !disc.is_negative() || disc.mod_floor(&BigInt::from(4)).to_u32().unwrap() > 1 {
        return Err(Error::InvalidDiscriminant(disc.clone()));
    }
    Ok(())
}

/// Ordered set of small non-inert primes with their prime forms, for a
/// fixed discriminant.
#[derive(Debug, Clone)]
pub struct FactorBase {
    disc: BigInt,
    forms: Vec<PrimeForm>,
    bound: u64,
}

impl FactorBase {
    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn forms(&self) -> &[PrimeForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.forms.iter().map(|f| f.p)
    }

    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.forms.iter().position(|f| f.p == p)
    }

    pub fn principal_form(&self) -> QForm {
        bqf::principal_form(&self.disc).expect("validated")
    }
}

/// All non-inert primes `p <= bound` with their prime forms. Primes whose
/// prime form would be imprimitive (conductor primes of a non-fundamental
/// discriminant) are skipped.
pub fn build_factor_base(disc: &BigInt, bound: u64) -> Result<FactorBase> {
    validate_disc(disc)?;
    let mut forms = Vec::new();
    for p in arith::primes_upto(bound) {
        match prime_form(disc, p) {
            Ok(pf) => forms.push(pf),
            Err(Error::InertPrime { .. }) | Err(Error::ImprimitiveForm { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(FactorBase {
        disc: disc.clone(),
        forms,
        bound,
    })
}

/// Default base bound: the generating ceiling `sqrt(|disc|/3)` capped by the
/// heuristic `max(50, ceil(6 ln^2 |disc|))`.
pub fn default_bound(disc: &BigInt) -> u64 {
    let abs = disc.magnitude();
    let x = abs.to_f64().unwrap_or(f64::MAX);
    let sqrt_term = (x / 3.0).sqrt().floor();
    let ln = x.ln();
    let log_term = (6.0 * ln * ln).ceil().max(50.0);
    (sqrt_term.min(log_term) as u64).max(2)
}

/// Result of evaluating the Šimerka map on a form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmoothOutcome {
    Smooth(FactoredRational),
    /// Leading coefficient not smooth over the base; the remainder is kept
    /// for diagnostics.
    NotSmooth { cofactor: BigUint },
}

impl SmoothOutcome {
    pub fn smooth(self) -> Option<FactoredRational> {
        match self {
            SmoothOutcome::Smooth(v) => Some(v),
            SmoothOutcome::NotSmooth { .. } => None,
        }
    }

    pub fn as_smooth(&self) -> Option<&FactoredRational> {
        match self {
            SmoothOutcome::Smooth(v) => Some(v),
            SmoothOutcome::NotSmooth { .. } => None,
        }
    }
}

/// Evaluate `ŝ` on the leading coefficient of `q` (normalized first if
/// necessary): factor `A` over the base, read each sign from
/// `B mod 2p_j` in `(-p_j, p_j]`, and reduce ramified exponents mod 2.
pub fn simerka_value(q: &QForm, base: &FactorBase) -> Result<SmoothOutcome> {
    if q.disc() != base.disc {
        return Err(Error::DiscriminantMismatch(q.disc(), base.disc.clone()));
    }
    let q = if q.is_normal() { q.clone() } else { q.normalize() };
    let mut rem = q.a().to_biguint().expect("positive leading coefficient");
    let mut value = FactoredRational::one();
    for pf in &base.forms {
        let pb = BigUint::from(pf.p);
        let mut e = 0i64;
        while (&rem % &pb).is_zero() {
            rem /= &pb;
            e += 1;
        }
        if e == 0 {
            continue;
        }
        if pf.ramified {
            // 2-torsion class: only the parity matters, sign fixed positive
            value.insert(pb, e % 2);
            continue;
        }
        let two_p = BigInt::from(2 * pf.p);
        let mut bj = q.b().mod_floor(&two_p).to_i64().expect("< 2p");
        if bj > pf.p as i64 {
            bj -= 2 * pf.p as i64;
        }
        value.insert(pb, if bj >= 0 { e } else { -e });
    }
    if rem.is_one() {
        Ok(SmoothOutcome::Smooth(value))
    } else {
        Ok(SmoothOutcome::NotSmooth { cofactor: rem })
    }
}

/// Where a smooth hit came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// The reduced representative itself.
    Reduced,
    /// One of the four leading-coefficient transforms of the reduced form.
    Neighbor(usize),
    /// The primitive representation `(x, y)` of the reduced form.
    Representation { x: i64, y: i64 },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Reduced => write!(f, "reduced"),
            Provenance::Neighbor(i) => write!(f, "neighbor {i}"),
            Provenance::Representation { x, y } => write!(f, "rep ({x},{y})"),
        }
    }
}

/// One smooth value harvested from a class.
#[derive(Debug, Clone)]
pub struct SmoothHit {
    pub value: FactoredRational,
    /// The normalized form whose leading coefficient produced the value.
    pub form: QForm,
    pub provenance: Provenance,
}

/// Scan parameters for [`smooth_search`].
#[derive(Debug, Clone, Copy)]
pub struct ScanEffort {
    /// Representation scan window `|x|, |y| <= scan_bound`.
    pub scan_bound: u32,
    /// Also try the four neighbor transforms.
    pub use_neighbors: bool,
}

impl Default for ScanEffort {
    fn default() -> Self {
        Self {
            scan_bound: 10,
            use_neighbors: true,
        }
    }
}

impl ScanEffort {
    pub fn with_bound(scan_bound: u32) -> Self {
        Self {
            scan_bound,
            ..Self::default()
        }
    }
}

/// Harvest every smooth value visible on `reduce(q)`: the reduced form, its
/// neighbor transforms, and all primitive representations within the scan
/// window. One hit per distinct normalized form.
pub fn smooth_search(q: &QForm, base: &FactorBase, effort: ScanEffort) -> Result<Vec<SmoothHit>> {
    if q.disc() != base.disc {
        return Err(Error::DiscriminantMismatch(q.disc(), base.disc.clone()));
    }
    let r = bqf::reduce(q);
    let mut seen: Vec<QForm> = Vec::new();
    let mut hits = Vec::new();
    let mut consider = |form: QForm, provenance: Provenance,
                        seen: &mut Vec<QForm>,
                        hits: &mut Vec<SmoothHit>|
     -> Result<()> {
        if seen.contains(&form) {
            return Ok(());
        }
        seen.push(form.clone());
        if let SmoothOutcome::Smooth(value) = simerka_value(&form, base)? {
            hits.push(SmoothHit {
                value,
                form,
                provenance,
            });
        }
        Ok(())
    };

    consider(r.normalize(), Provenance::Reduced, &mut seen, &mut hits)?;
    if effort.use_neighbors {
        for (i, n) in bqf::neighbors(&r).into_iter().enumerate() {
            consider(n.normalize(), Provenance::Neighbor(i), &mut seen, &mut hits)?;
        }
    }
    let bound = effort.scan_bound as i64;
    for x in -bound..=bound {
        for y in -bound..=bound {
            if y < 0 || (y == 0 && x <= 0) {
                continue;
            }
            let (xb, yb) = (BigInt::from(x), BigInt::from(y));
            if !xb.gcd(&yb).is_one() {
                continue;
            }
            let form = bqf::normalize_representation(&r, &xb, &yb)?;
            consider(
                form,
                Provenance::Representation { x, y },
                &mut seen,
                &mut hits,
            )?;
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose;

    fn f(a: i64, b: i64, c: i64) -> QForm {
        QForm::from_i64(a, b, c).unwrap()
    }

    fn fr(parts: &[(u64, i64)]) -> FactoredRational {
        FactoredRational::from_parts(parts.iter().map(|&(p, e)| (BigUint::from(p), e)))
    }

    #[test]
    fn prime_form_pins() {
        let pf = prime_form(&BigInt::from(-10079), 7).unwrap();
        assert_eq!(pf.form(), &f(7, 1, 360));
        assert!(!pf.ramified());
        let pf = prime_form(&BigInt::from(-121271), 2).unwrap();
        assert_eq!(pf.form(), &f(2, 1, 15159));
        let pf = prime_form(&BigInt::from(-1061486612i64), 3).unwrap();
        assert_eq!(pf.form(), &f(3, 2, 88457218));
        assert!(matches!(
            prime_form(&BigInt::from(-10079), 11),
            Err(Error::InertPrime { p: 11, .. })
        ));
        // ramified primes of -20
        let pf = prime_form(&BigInt::from(-20), 2).unwrap();
        assert_eq!(pf.form(), &f(2, 2, 3));
        assert!(pf.ramified());
        let pf = prime_form(&BigInt::from(-20), 5).unwrap();
        assert_eq!(pf.form(), &f(5, 0, 1));
        assert!(pf.ramified());
        // conductor prime of the non-fundamental -180 is rejected
        assert!(matches!(
            prime_form(&BigInt::from(-180), 3),
            Err(Error::ImprimitiveForm { .. })
        ));
    }

    #[test]
    fn factor_base_pins() {
        // every kronecker value checked directly
        for (p, expect) in [(2u64, 1), (3, 1), (5, 1), (7, 1)] {
            assert_eq!(
                arith::kronecker(&BigInt::from(-10079), &BigInt::from(p)).unwrap(),
                expect
            );
        }
        let base = build_factor_base(&BigInt::from(-10079), 7).unwrap();
        assert_eq!(base.primes().collect::<Vec<_>>(), vec![2, 3, 5, 7]);

        let base = build_factor_base(&BigInt::from(-20), 10).unwrap();
        assert_eq!(base.primes().collect::<Vec<_>>(), vec![2, 3, 5, 7]);
        assert!(base.forms()[0].ramified());
        assert!(base.forms()[2].ramified());

        let base = build_factor_base(&BigInt::from(-121271), 31).unwrap();
        assert_eq!(
            base.primes().collect::<Vec<_>>(),
            vec![2, 3, 5, 7, 11, 19, 23, 29, 31]
        );

        // conductor prime skipped for non-fundamental -180
        let base = build_factor_base(&BigInt::from(-180), 10).unwrap();
        assert!(base.index_of(3).is_none());
        assert!(base.index_of(2).is_some());
    }

    #[test]
    fn default_bound_pins() {
        assert_eq!(default_bound(&BigInt::from(-10079)), 57);
        assert_eq!(default_bound(&BigInt::from(-121271)), 201);
        let b = default_bound(&BigInt::from(-1061486612i64));
        assert!((2500..=2700).contains(&b), "{b}");
        let b = default_bound(&BigInt::from(-11111111111111111i64));
        assert!((8000..=8400).contains(&b), "{b}");
        assert!(default_bound(&BigInt::from(-3)) >= 2);
    }

    #[test]
    fn simerka_value_pins() {
        // the worked example: (180,-17,193) = 3^2 * 5 / 2^2
        let q = f(180, -17, 193);
        let base = build_factor_base(&q.disc(), 7).unwrap();
        assert_eq!(
            simerka_value(&q, &base).unwrap().smooth().unwrap(),
            fr(&[(2, -2), (3, 2), (5, 1)])
        );

        let base = build_factor_base(&BigInt::from(-121271), 31).unwrap();
        assert_eq!(
            simerka_value(&f(7581, -5, 4), &base).unwrap().smooth().unwrap(),
            fr(&[(3, 1), (7, -1), (19, -2)])
        );
        assert_eq!(
            simerka_value(&f(1210, -97, 27), &base).unwrap().smooth().unwrap(),
            fr(&[(2, -1), (5, 1), (11, -2)])
        );
        // principal form evaluates to the empty product
        let q0 = base.principal_form();
        assert_eq!(
            simerka_value(&q0, &base).unwrap().smooth().unwrap(),
            FactoredRational::one()
        );
        // cofactor diagnostics
        let tiny = build_factor_base(&BigInt::from(-10079), 5).unwrap();
        match simerka_value(&f(7, 1, 360), &tiny).unwrap() {
            SmoothOutcome::NotSmooth { cofactor } => assert_eq!(cofactor, BigUint::from(7u32)),
            other => panic!("expected NotSmooth, got {other:?}"),
        }
        assert!(simerka_value(&f(1, 0, 5), &base).is_err());
    }

    #[test]
    fn ramified_exponents_are_mod_two() {
        let base = build_factor_base(&BigInt::from(-20), 10).unwrap();
        let v = simerka_value(&f(2, 2, 3), &base).unwrap().smooth().unwrap();
        assert_eq!(v, fr(&[(2, 1)]));
        // value 10 = 2 * 5 at (1,1) on (2,2,3): both ramified, both exponent 1
        let rep = bqf::normalize_representation(
            &f(2, 2, 3),
            &BigInt::from(1),
            &BigInt::from(-2),
        )
        .unwrap();
        let v = simerka_value(&rep, &base).unwrap().smooth().unwrap();
        for (_, e) in v.iter() {
            assert!(e == 0 || e == 1);
        }
    }

    #[test]
    fn smooth_search_paper_rows() {
        let disc = BigInt::from(-121271);
        let base = build_factor_base(&disc, 83).unwrap();
        let q2 = f(2, 1, 15159);

        // Q_2^5: the neighbor transforms are the paper's table rows
        let q25 = compose::power(&q2, 5).unwrap();
        assert_eq!(q25, f(32, 29, 954));
        let hits = smooth_search(&q25, &base, ScanEffort::default()).unwrap();
        let forms: Vec<&QForm> = hits.iter().map(|h| &h.form).collect();
        assert!(forms.contains(&&f(957, 35, 32)));
        assert!(forms.contains(&&f(1015, -93, 32)));

        // Q_2^7 shows 2^-8 on the represented value 256
        let q27 = compose::power(&q2, 7).unwrap();
        assert_eq!(q27, f(128, -99, 256));
        let hits = smooth_search(&q27, &base, ScanEffort::default()).unwrap();
        assert!(hits.iter().any(|h| h.value == fr(&[(2, -8)])));
        // and 2^7 on the reduced form itself, giving s(Q_2^15) = 1
        assert!(hits.iter().any(|h| h.value == fr(&[(2, 7)])));

        // principal class always carries the trivial hit
        let q0 = base.principal_form();
        let hits = smooth_search(&q0, &base, ScanEffort::default()).unwrap();
        assert!(hits
            .iter()
            .any(|h| h.value.is_one() && h.provenance == Provenance::Reduced));
    }

    /// The constructive homomorphism check: compose two coprime smooth
    /// representatives with a shared middle coefficient; the product form
    /// must evaluate to the product of the values.
    fn check_homomorphism_instance(
        base: &FactorBase,
        h1: &SmoothHit,
        h2: &SmoothHit,
    ) -> Option<bool> {
        let (a1, b1) = (h1.form.a().clone(), h1.form.b().clone());
        let (a2, b2) = (h2.form.a().clone(), h2.form.b().clone());
        if !a1.gcd(&a2).is_one() {
            return None;
        }
        let g = (2 * &a1).gcd(&(2 * &a2));
        if !(&b2 - &b1).mod_floor(&g).is_zero() {
            return None;
        }
        // b = b1 mod 2a1, b = b2 mod 2a2
        let m1 = 2 * &a1;
        let m2 = 2 * &a2;
        let ext = (&m1 / &g).extended_gcd(&(&m2 / &g));
        let t = (((&b2 - &b1) / &g) * ext.x).mod_floor(&(&m2 / &g));
        let b = &b1 + &m1 * t;
        let a = &a1 * &a2;
        let c = (&b * &b - base.disc()) / (4 * &a);
        let composed = QForm::new(a, b, c).unwrap().normalize();
        let got = simerka_value(&composed, base).unwrap().smooth()?;
        Some(got == h1.value.mul(&h2.value))
    }

    #[test]
    fn homomorphism_on_random_classes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let discs = [-10079i64, -121271, -2299, -4763, -3079];
        let mut verified = 0;
        for &d in &discs {
            let disc = BigInt::from(d);
            let base = build_factor_base(&disc, default_bound(&disc)).unwrap();
            let forms = bqf::reduced_forms(&disc).unwrap();
            for _ in 0..40 {
                let q1 = &forms[rng.gen_range(0..forms.len())];
                let q2 = &forms[rng.gen_range(0..forms.len())];
                let hits1 = smooth_search(q1, &base, ScanEffort::default()).unwrap();
                let hits2 = smooth_search(q2, &base, ScanEffort::default()).unwrap();
                'pairs: for h1 in &hits1 {
                    for h2 in &hits2 {
                        if let Some(ok) = check_homomorphism_instance(&base, h1, h2) {
                            assert!(ok, "homomorphism failed for {} and {}", h1.form, h2.form);
                            verified += 1;
                            break 'pairs;
                        }
                    }
                }
            }
        }
        assert!(verified >= 150, "only {verified} instances verified");
    }

    #[test]
    fn inversion_mirrors_hits() {
        let disc = BigInt::from(-121271);
        let base = build_factor_base(&disc, 83).unwrap();
        for q in [f(2, 1, 15159), f(3, 1, 10106), f(8, -3, 3790)] {
            let hits = smooth_search(&q, &base, ScanEffort::default()).unwrap();
            assert!(!hits.is_empty());
            for hit in &hits {
                // mirror the representative into the inverse class
                let mirrored = QForm::new(
                    hit.form.a().clone(),
                    -hit.form.b(),
                    hit.form.c().clone(),
                )
                .unwrap();
                assert!(bqf::is_equivalent(&mirrored, &compose::inverse(&q)).unwrap());
                let v = simerka_value(&mirrored, &base).unwrap().smooth().unwrap();
                assert_eq!(v, hit.value.invert());
            }
        }
    }
}
