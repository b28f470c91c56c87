//! Relation collection over a factor base, integer-lattice linear algebra,
//! class-group structure, and exact element orders.
//!
//! A relation is an exponent vector `e` over the base primes such that the
//! composed power product of the prime forms reduces to the principal form.
//! Šimerka's hand method (`SmallPowers`) walks small powers of each prime
//! form harvesting smooth values of the map `ŝ`; Shanks's variant
//! (`RandomProducts`) reduces random power products. Every returned
//! relation is verified by explicit composition, so the lattice is sound
//! even over non-fundamental discriminants where the `ŝ`-algebra alone
//! could mislead.

use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::bqf::{self, QForm};
use crate::compose;
use crate::linalg;
use crate::map::{smooth_search, FactorBase, ScanEffort, SmoothHit};
use crate::{Error, Result};

/// Exponent vector over the factor-base primes whose prime-form product is
/// principal, plus a human-readable note on how it was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub exponents: Vec<i64>,
    pub witness: String,
}

impl Relation {
    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "] ({})", self.witness)
    }
}

/// Compose the prime-form power product of `rel` and test it against the
/// principal form.
pub fn verify_relation(rel: &Relation, base: &FactorBase) -> Result<bool> {
    if rel.exponents.len() != base.len() {
        return Err(Error::ExponentLength {
            got: rel.exponents.len(),
            expected: base.len(),
        });
    }
    let product = power_product(base, &rel.exponents)?;
    Ok(product == base.principal_form())
}

/// Reduced representative of `prod I_p^(e_p)`.
pub fn power_product(base: &FactorBase, exponents: &[i64]) -> Result<QForm> {
    let mut acc = base.principal_form();
    for (pf, &e) in base.forms().iter().zip(exponents) {
        if e != 0 {
            acc = compose::compose(&acc, &compose::power(pf.form(), e)?)?;
        }
    }
    Ok(acc)
}

/// Relation-search strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Walk powers `I_p^n` for small `n`, harvesting every smooth value.
    SmallPowers,
    /// Reduce products with random exponent vectors and keep smooth ones.
    RandomProducts,
}

/// Tunables for relation collection.
#[derive(Debug, Clone)]
pub struct CollectConfig {
    /// Highest power walked per prime form by `SmallPowers`.
    pub power_cap: u32,
    /// Smooth-search effort per visited class.
    pub scan: ScanEffort,
    /// Random exponents are drawn from `[-exponent_range, exponent_range]`.
    pub exponent_range: i64,
    /// Smoothness trials before `CollectionTimeout`.
    pub trial_budget: u64,
    /// Worker threads; deterministic replay only with a single worker.
    pub workers: usize,
}

impl Default for CollectConfig {
    fn default() -> Self {
        Self {
            power_cap: 40,
            scan: ScanEffort::default(),
            exponent_range: 1 << 16,
            trial_budget: 1_000_000,
            workers: 1,
        }
    }
}

/// Collect up to `target` verified relations. Deterministic for a fixed
/// seed in single-worker mode.
pub fn collect_relations(
    base: &FactorBase,
    strategy: Strategy,
    seed: u64,
    target: usize,
    cfg: &CollectConfig,
) -> Result<Vec<Relation>> {
    if base.is_empty() {
        return Err(Error::EmptyFactorBase);
    }
    let mut out = Vec::new();
    collect_into(base, None, strategy, seed, target, cfg, &mut out)?;
    Ok(out)
}

/// Inner driver shared by the public API and the order/structure pipelines.
/// With `extra = Some(q)` the exponent vectors get one leading column for
/// `q` itself. Relations already in `out` count toward `target` and are
/// never duplicated. Returns `CollectionTimeout` once the smoothness-trial
/// budget is gone, leaving the partial harvest in `out`.
fn collect_into(
    base: &FactorBase,
    extra: Option<&QForm>,
    strategy: Strategy,
    seed: u64,
    target: usize,
    cfg: &CollectConfig,
    out: &mut Vec<Relation>,
) -> Result<()> {
    if cfg.workers > 1 {
        return collect_parallel(base, extra, strategy, seed, target, cfg, out);
    }
    let mut trials = 0u64;
    match strategy {
        Strategy::SmallPowers => {
            small_powers_walk(base, extra, cfg, (0, 1), target, &mut trials, out)
        }
        Strategy::RandomProducts => {
            random_products_walk(base, extra, cfg, seed, target, &mut trials, out)
        }
    }
}

fn collect_parallel(
    base: &FactorBase,
    extra: Option<&QForm>,
    strategy: Strategy,
    seed: u64,
    target: usize,
    cfg: &CollectConfig,
    out: &mut Vec<Relation>,
) -> Result<()> {
    use rayon::prelude::*;
    let workers = cfg.workers;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let single = CollectConfig {
        workers: 1,
        trial_budget: cfg.trial_budget / workers as u64,
        ..cfg.clone()
    };
    let per_worker = target.div_ceil(workers);
    let batches: Vec<Result<Vec<Relation>>> = pool.install(|| {
        (0..workers)
            .into_par_iter()
            .map(|w| {
                let mut local = Vec::new();
                let mut trials = 0u64;
                let r = match strategy {
                    // partition the generator walks across workers
                    Strategy::SmallPowers => small_powers_walk(
                        base,
                        extra,
                        &single,
                        (w, workers),
                        per_worker,
                        &mut trials,
                        &mut local,
                    ),
                    Strategy::RandomProducts => random_products_walk(
                        base,
                        extra,
                        &single,
                        seed.wrapping_add(w as u64),
                        per_worker,
                        &mut trials,
                        &mut local,
                    ),
                };
                match r {
                    Ok(()) | Err(Error::CollectionTimeout { .. }) => Ok(local),
                    Err(e) => Err(e),
                }
            })
            .collect()
    });
    for batch in batches {
        for rel in batch? {
            push_relation(out, rel);
        }
    }
    // merged as an order-insensitive set
    out.sort_by(|a, b| a.exponents.cmp(&b.exponents));
    out.dedup_by(|a, b| a.exponents == b.exponents);
    if out.len() < target {
        return Err(Error::CollectionTimeout {
            collected: out.len(),
            target,
        });
    }
    Ok(())
}

fn push_relation(out: &mut Vec<Relation>, rel: Relation) -> bool {
    if rel.is_zero() || out.iter().any(|r| r.exponents == rel.exponents) {
        return false;
    }
    out.push(rel);
    true
}

/// Turn a smooth hit on the class `generator^n` into a candidate relation
/// vector `n e_gen - v`, with column 0 reserved for `extra` when present.
fn hit_to_vector(
    base: &FactorBase,
    extra_cols: usize,
    gen_col: usize,
    n: i64,
    hit: &SmoothHit,
) -> Option<Vec<i64>> {
    let mut v = vec![0i64; extra_cols + base.len()];
    v[gen_col] = n;
    for (p, e) in hit.value.iter() {
        let p64 = p.to_u64()?;
        let idx = base.index_of(p64)?;
        v[extra_cols + idx] -= e;
    }
    Some(v)
}

/// Verify a candidate vector by composition before accepting it.
fn accept(
    base: &FactorBase,
    extra: Option<&QForm>,
    vector: Vec<i64>,
    witness: String,
    out: &mut Vec<Relation>,
) -> Result<bool> {
    let rel = Relation {
        exponents: vector,
        witness,
    };
    if rel.is_zero() || out.iter().any(|r| r.exponents == rel.exponents) {
        return Ok(false);
    }
    let ok = match extra {
        None => verify_relation(&rel, base)?,
        Some(q) => {
            let mut acc = compose::power(q, rel.exponents[0])?;
            for (pf, &e) in base.forms().iter().zip(&rel.exponents[1..]) {
                if e != 0 {
                    acc = compose::compose(&acc, &compose::power(pf.form(), e)?)?;
                }
            }
            acc == base.principal_form()
        }
    };
    if !ok {
        return Ok(false);
    }
    Ok(push_relation(out, rel))
}

/// Breadth-first walk of `gen^n` across all generators (and the optional
/// extra form in column 0), harvesting smooth hits as in the hand
/// calculations: each hit `ŝ(gen^n) = v` yields the lattice vector
/// `n e_gen - v`. Workers walk the generator subset `offset, offset+stride, ...`.
fn small_powers_walk(
    base: &FactorBase,
    extra: Option<&QForm>,
    cfg: &CollectConfig,
    (offset, stride): (usize, usize),
    target: usize,
    trials: &mut u64,
    out: &mut Vec<Relation>,
) -> Result<()> {
    let extra_cols = usize::from(extra.is_some());
    let mut generators: Vec<(String, QForm)> = Vec::new();
    if let Some(q) = extra {
        generators.push(("Q".to_string(), bqf::reduce(q)));
    }
    for pf in base.forms() {
        generators.push((format!("I_{}", pf.p()), pf.form().clone()));
    }
    let mine: Vec<usize> = (offset..generators.len()).step_by(stride.max(1)).collect();
    let mut walkers: Vec<QForm> = generators.iter().map(|(_, g)| g.clone()).collect();
    for n in 1..=cfg.power_cap {
        for &gi in &mine {
            let (name, gen) = &generators[gi];
            if out.len() >= target {
                return Ok(());
            }
            if n > 1 {
                walkers[gi] = compose::compose(&walkers[gi], gen)?;
            }
            let hits = smooth_search(&walkers[gi], base, cfg.scan)?;
            *trials += 1;
            for hit in &hits {
                // generator gi owns column gi in both layouts
                let Some(vector) = hit_to_vector(base, extra_cols, gi, n as i64, hit) else {
                    continue;
                };
                let witness = format!(
                    "{}^{} ~ {} = {} [{}]",
                    name, n, hit.form, hit.value, hit.provenance
                );
                accept(base, extra, vector, witness, out)?;
                if out.len() >= target {
                    return Ok(());
                }
            }
            if *trials >= cfg.trial_budget {
                return Err(Error::CollectionTimeout {
                    collected: out.len(),
                    target,
                });
            }
        }
    }
    if out.len() >= target {
        Ok(())
    } else {
        Err(Error::CollectionTimeout {
            collected: out.len(),
            target,
        })
    }
}

fn random_products_walk(
    base: &FactorBase,
    extra: Option<&QForm>,
    cfg: &CollectConfig,
    seed: u64,
    target: usize,
    trials: &mut u64,
    out: &mut Vec<Relation>,
) -> Result<()> {
    let extra_cols = usize::from(extra.is_some());
    let cols = extra_cols + base.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < target {
        if *trials >= cfg.trial_budget {
            return Err(Error::CollectionTimeout {
                collected: out.len(),
                target,
            });
        }
        let mut e: Vec<i64> = (0..cols)
            .map(|_| rng.gen_range(-cfg.exponent_range..=cfg.exponent_range))
            .collect();
        if e.iter().all(|&x| x == 0) {
            e[0] = 1;
        }
        // reduced representative of the random power product
        let mut acc = match extra {
            Some(q) => compose::power(q, e[0])?,
            None => base.principal_form(),
        };
        for (pf, &exp) in base.forms().iter().zip(&e[extra_cols..]) {
            if exp != 0 {
                acc = compose::compose(&acc, &compose::power(pf.form(), exp)?)?;
            }
        }
        let hits = smooth_search(&acc, base, cfg.scan)?;
        *trials += 1;
        for hit in &hits {
            // product ~ prod I^v, so e - v is a relation
            let mut vector = e.clone();
            let mut known = true;
            for (p, ev) in hit.value.iter() {
                match p.to_u64().and_then(|p64| base.index_of(p64)) {
                    Some(idx) => vector[extra_cols + idx] -= ev,
                    None => {
                        known = false;
                        break;
                    }
                }
            }
            if !known {
                continue;
            }
            let witness = format!("random product ~ {} = {}", hit.form, hit.value);
            accept(base, extra, vector, witness, out)?;
            if out.len() >= target {
                break;
            }
        }
    }
    Ok(())
}

/// How much confidence backs a [`GroupStructure`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certification {
    /// Cross-checked against brute-force enumeration of reduced forms.
    Enumerated,
    /// Two disjoint-seed relation batches agreed on the determinant
    /// (heuristic; no unconditional guarantee).
    Stabilized,
    /// Full-rank lattice only: the order is a divisor-multiple candidate.
    DivisorOnly,
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certification::Enumerated => write!(f, "ENUMERATED"),
            Certification::Stabilized => write!(f, "STABILIZED"),
            Certification::DivisorOnly => write!(f, "DIVISOR_ONLY"),
        }
    }
}

/// Class-number candidate plus elementary divisors from the Smith normal
/// form of the relation lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    pub order_candidate: BigUint,
    /// Nontrivial divisor chain d1 | d2 | ... with product = order.
    pub elementary_divisors: Vec<BigUint>,
    pub certified: Certification,
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let divisors: Vec<String> = self
            .elementary_divisors
            .iter()
            .map(|d| d.to_string())
            .collect();
        write!(
            f,
            "order {} = ({}) [{}]",
            self.order_candidate,
            divisors.join(", "),
            self.certified
        )
    }
}

/// Largest |disc| for which the enumeration cross-check runs by default.
pub const ENUMERATION_THRESHOLD: u64 = 4_000_000;

/// Hermite/Smith reduction of the relation lattice: the determinant is the
/// group-order candidate and the SNF diagonal gives the elementary
/// divisors. Fails with `RankDeficient` until the lattice has full column
/// rank.
pub fn group_structure(base: &FactorBase, rels: &[Relation]) -> Result<GroupStructure> {
    let cols = base.len();
    for rel in rels {
        if rel.exponents.len() != cols {
            return Err(Error::ExponentLength {
                got: rel.exponents.len(),
                expected: cols,
            });
        }
    }
    if cols == 0 {
        // no generators below the bound: the generated subgroup is trivial
        return Ok(GroupStructure {
            order_candidate: BigUint::one(),
            elementary_divisors: Vec::new(),
            certified: certify_by_enumeration(base.disc(), &BigUint::one())
                .unwrap_or(Certification::DivisorOnly),
        });
    }
    let rows: Vec<Vec<i64>> = rels.iter().map(|r| r.exponents.clone()).collect();
    if rows.len() < cols {
        return Err(Error::RankDeficient {
            rank: rows.len(),
            cols,
        });
    }
    let rank = linalg::rank_mod_p(&rows, cols);
    if rank < cols {
        return Err(Error::RankDeficient { rank, cols });
    }
    let (h, pivots) = linalg::hnf(linalg::from_rows(&rows));
    if pivots.len() < cols {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            cols,
        });
    }
    let mut det = BigInt::one();
    for (i, &c) in pivots.iter().enumerate() {
        det *= &h[i][c];
    }
    let order = det.magnitude().clone();
    let divisors: Vec<BigUint> = linalg::snf_divisors(h)
        .into_iter()
        .map(|d| d.magnitude().clone())
        .collect();
    debug_assert_eq!(
        divisors.iter().product::<BigUint>().max(BigUint::one()),
        order
    );
    let certified =
        certify_by_enumeration(base.disc(), &order).unwrap_or(Certification::DivisorOnly);
    Ok(GroupStructure {
        order_candidate: order,
        elementary_divisors: divisors,
        certified,
    })
}

/// `Some(Enumerated)` when |disc| is small enough to enumerate and the
/// count matches; `None` otherwise.
fn certify_by_enumeration(disc: &BigInt, order: &BigUint) -> Option<Certification> {
    if disc.magnitude() > &BigUint::from(ENUMERATION_THRESHOLD) {
        return None;
    }
    let count = bqf::class_number(disc).ok()?;
    if BigUint::from(count) == *order {
        Some(Certification::Enumerated)
    } else {
        None
    }
}

/// End-to-end class-group driver: collect a `SmallPowers` batch, top up at
/// random until the lattice is full rank, then certify. Small
/// discriminants are certified by enumeration; otherwise a second
/// disjoint-seed batch must reproduce the determinant (`Stabilized`).
pub fn class_group(disc: &BigInt, seed: u64, cfg: &CollectConfig) -> Result<GroupStructure> {
    class_group_with_bound(disc, None, seed, cfg).map(|(g, _)| g)
}

/// As [`class_group`], also returning the relations that support the
/// structure. `fb_bound` overrides the default factor-base bound.
pub fn class_group_with_bound(
    disc: &BigInt,
    fb_bound: Option<u64>,
    seed: u64,
    cfg: &CollectConfig,
) -> Result<(GroupStructure, Vec<Relation>)> {
    let bound = fb_bound.unwrap_or_else(|| crate::map::default_bound(disc));
    let base = crate::map::build_factor_base(disc, bound)?;
    if base.is_empty() {
        let g = GroupStructure {
            order_candidate: BigUint::one(),
            elementary_divisors: Vec::new(),
            certified: certify_by_enumeration(disc, &BigUint::one())
                .unwrap_or(Certification::DivisorOnly),
        };
        return Ok((g, Vec::new()));
    }
    let (structure, rels) = saturate_lattice(&base, seed, cfg)?;
    Ok((structure, rels))
}

/// Grow the relation lattice until full rank, then until the determinant
/// is reproduced by an independent batch (or the enumeration matches).
fn saturate_lattice(
    base: &FactorBase,
    seed: u64,
    cfg: &CollectConfig,
) -> Result<(GroupStructure, Vec<Relation>)> {
    let target0 = base.len() + 4;
    let mut rels: Vec<Relation> = Vec::new();
    match collect_into(base, None, Strategy::SmallPowers, seed, target0, cfg, &mut rels) {
        Ok(()) | Err(Error::CollectionTimeout { .. }) => {}
        Err(e) => return Err(e),
    }
    let mut round = 0u64;
    let mut structure = loop {
        match group_structure(base, &rels) {
            Ok(g) => break g,
            Err(Error::RankDeficient { .. }) if round < 10 => {
                round += 1;
                let more = base.len().max(8);
                match collect_into(
                    base,
                    None,
                    Strategy::RandomProducts,
                    seed.wrapping_add(round),
                    rels.len() + more,
                    cfg,
                    &mut rels,
                ) {
                    Ok(()) => {}
                    Err(Error::CollectionTimeout { collected, target }) => {
                        if collected == rels.len() && round > 3 {
                            return Err(Error::CollectionTimeout { collected, target });
                        }
                    }
                    Err(e) => return Err(e),
                }
            }
            Err(e) => return Err(e),
        }
    };
    if structure.certified == Certification::Enumerated {
        return Ok((structure, rels));
    }
    // stabilization: an independent batch must reproduce the determinant
    for attempt in 0..6u64 {
        let mut batch: Vec<Relation> = Vec::new();
        let batch_seed = seed.wrapping_add(0x9e37_79b9).wrapping_add(attempt * 7919);
        match collect_into(
            base,
            None,
            Strategy::RandomProducts,
            batch_seed,
            base.len() + 4,
            cfg,
            &mut batch,
        ) {
            Ok(()) | Err(Error::CollectionTimeout { .. }) => {}
            Err(e) => return Err(e),
        }
        match group_structure(base, &batch) {
            Ok(g) if g.order_candidate == structure.order_candidate => {
                structure.certified = Certification::Stabilized;
                for rel in batch {
                    push_relation(&mut rels, rel);
                }
                return Ok((structure, rels));
            }
            Ok(_) | Err(Error::RankDeficient { .. }) => {
                // merge and recompute: the union can only shrink the index
                for rel in batch {
                    push_relation(&mut rels, rel);
                }
                structure = group_structure(base, &rels)?;
                if structure.certified == Certification::Enumerated {
                    return Ok((structure, rels));
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok((structure, rels))
}

/// Exact order of the class of `q`, given any positive `multiple` of it:
/// factor the multiple and strip primes while the power stays principal.
pub fn element_order(q: &QForm, multiple: &BigUint) -> Result<BigUint> {
    if multiple.is_zero() {
        return Err(Error::NotPrincipalMultiple);
    }
    let principal = bqf::principal_form(&q.disc())?;
    let is_principal = |n: &BigUint| -> Result<bool> {
        Ok(compose::power_big(q, &BigInt::from(n.clone()))? == principal)
    };
    if !is_principal(multiple)? {
        return Err(Error::NotPrincipalMultiple);
    }
    let mut order = multiple.clone();
    for (p, e) in arith::factor_completely(multiple) {
        for _ in 0..e {
            let candidate = &order / &p;
            if is_principal(&candidate)? {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// Order of `q` in the class group: find a lattice multiple of the order
/// (extending the factor base by `q` itself when needed), then reduce it
/// with [`element_order`].
pub fn order_in_class_group(
    q: &QForm,
    fb_bound: Option<u64>,
    seed: u64,
    cfg: &CollectConfig,
) -> Result<BigUint> {
    let disc = q.disc();
    let bound = fb_bound.unwrap_or_else(|| crate::map::default_bound(&disc));
    let base = crate::map::build_factor_base(&disc, bound)?;
    if !base.is_empty() {
        if let Ok((structure, _)) = saturate_lattice(&base, seed, cfg) {
            let multiple = structure.order_candidate;
            if compose::power_big(q, &BigInt::from(multiple.clone()))?
                == base.principal_form()
            {
                return element_order(q, &multiple);
            }
        }
    }
    // q is outside the subgroup the base generates: give q its own column
    let mut rels: Vec<Relation> = Vec::new();
    let cols = base.len() + 1;
    let mut round = 0u64;
    loop {
        let strategy = if round == 0 {
            Strategy::SmallPowers
        } else {
            Strategy::RandomProducts
        };
        match collect_into(
            &base,
            Some(q),
            strategy,
            seed.wrapping_add(round),
            rels.len() + cols + 4,
            cfg,
            &mut rels,
        ) {
            Ok(()) | Err(Error::CollectionTimeout { .. }) => {}
            Err(e) => return Err(e),
        }
        let rows: Vec<Vec<i64>> = rels.iter().map(|r| r.exponents.clone()).collect();
        if let Some(det) = linalg::lattice_determinant(&rows, cols) {
            let multiple = det.magnitude().clone();
            return element_order(q, &multiple);
        }
        round += 1;
        if round > 10 {
            return Err(Error::RankDeficient {
                rank: linalg::rank_mod_p(&rows, cols),
                cols,
            });
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RelationRecord {
    primes: Vec<u64>,
    exponents: Vec<i64>,
    witness: String,
}

/// Append relations to a line-delimited log; each line is a JSON record
/// `{primes, exponents, witness}` and can be reloaded to resume a
/// computation.
pub fn append_relation_log(path: &Path, base: &FactorBase, rels: &[Relation]) -> Result<()> {
    let mut file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    let primes: Vec<u64> = base.primes().collect();
    for rel in rels {
        let record = RelationRecord {
            primes: primes.clone(),
            exponents: rel.exponents.clone(),
            witness: rel.witness.clone(),
        };
        let line = serde_json::to_string(&record).map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(file, "{line}")?;
    }
    Ok(())
}

/// Reload a relation log written by [`append_relation_log`]. Every record
/// must match the base's prime list and pass verification by composition.
pub fn load_relation_log(path: &Path, base: &FactorBase) -> Result<Vec<Relation>> {
    let file = std::fs::File::open(path)?;
    let reader = std::io::BufReader::new(file);
    let primes: Vec<u64> = base.primes().collect();
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: RelationRecord = serde_json::from_str(&line)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        if record.primes != primes {
            return Err(Error::Parse(format!(
                "line {}: log primes {:?} do not match factor base",
                lineno + 1,
                record.primes
            )));
        }
        let rel = Relation {
            exponents: record.exponents,
            witness: record.witness,
        };
        if !verify_relation(&rel, base)? {
            return Err(Error::Parse(format!(
                "line {}: relation fails verification",
                lineno + 1
            )));
        }
        push_relation(&mut out, rel);
    }
    Ok(out)
}
