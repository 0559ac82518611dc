//! Exhaustive verification suites. Each suite sweeps a parameter range,
//! compares library results against brute-force oracles and closed forms,
//! and reports per-check counts with the first counterexample.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::balls::{deletion_ball_packed, dtn, insertion_ball, nu_space, read_coverage_of_words, BallTable};
use crate::caps::{check_cap, Caps};
use crate::codes::{count_bounded_periodic, csvt_class_sizes, enumerate_code, CodeFamily, CsvtParams};
use crate::confusability::{n1_bound, n2_bound, np_bound, type_a_decompose, type_b_decompose};
use crate::cover::{
    block_parameter, cover_size, max_independent_set_exact, redundancy_lower_bound, verify_cover, CoverParams,
};
use crate::error::{Error, Result};
use crate::reconstruct::{decode, simulate_channel, ReadSet};
use crate::words::{all_words, hamming_distance, is_alternating, longest_two_periodic_run, run_count, Word};

/// Whole-space pair sweeps (`4^n / 2` pairs) stop at this length.
pub const PAIR_SWEEP_MAX: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Balls,
    Confusability,
    Csvt,
    Decode,
    Cover,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["balls", "confusability", "csvt", "decode", "cover", "all"];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Balls => "balls",
            Suite::Confusability => "confusability",
            Suite::Csvt => "csvt",
            Suite::Decode => "decode",
            Suite::Cover => "cover",
            Suite::All => "all",
        }
    }

    fn default_n_max(&self) -> usize {
        match self {
            Suite::Cover => 14,
            _ => 12,
        }
    }

    fn default_periods(&self) -> Vec<u64> {
        match self {
            Suite::Decode => vec![4, 6],
            Suite::Cover => vec![2, 3],
            _ => vec![4, 6, 8],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "balls" => Suite::Balls,
            "confusability" => Suite::Confusability,
            "csvt" => Suite::Csvt,
            "decode" => Suite::Decode,
            "cover" => Suite::Cover,
            "all" => Suite::All,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sweep limits. Unset fields take the suite default: `n_max` 14 for
/// `cover` and 12 otherwise, `t_max` 3. `periods` holds `P` values for
/// `csvt`/`decode` (defaults `{4,6,8}` and `{4,6}`) and `ℓ` values for
/// `cover` (default `{2,3}`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub n_max: Option<usize>,
    pub t_max: Option<usize>,
    pub periods: Vec<u64>,
    /// Sampled read sets per codeword at two deletions (default 1000).
    pub samples: Option<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub scope: String,
    pub checked: u64,
    pub failed: u64,
    pub counterexample: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Measured quantity that is reported but not asserted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observation {
    pub name: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub n_max: usize,
    pub t_max: usize,
    pub periods: Vec<u64>,
    pub checks: Vec<Check>,
    pub observations: Vec<Observation>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_human(&self) -> String {
        let mut out = format!("suite {} (n <= {}, t <= {})\n", self.suite, self.n_max, self.t_max);
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            out += &format!("  {status:<4} {:<32} {:>12} checked  {}\n", c.name, c.checked, c.scope);
            if let Some(cex) = &c.counterexample {
                out += &format!("       first counterexample: {cex}\n");
            }
        }
        for o in &self.observations {
            out += &format!("  note {:<32} {}\n", o.name, o.detail);
        }
        out += &format!("  {} checks, {} failed, {} ms\n", self.checks.len(), self.failures().count(), self.elapsed_ms);
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("suite\tcheck\tscope\tchecked\tfailed\tcounterexample\n");
        for c in &self.checks {
            out += &format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                self.suite,
                c.name,
                c.scope,
                c.checked,
                c.failed,
                c.counterexample.as_deref().unwrap_or("-")
            );
        }
        out
    }
}

#[derive(Debug, Clone, Default)]
struct Tally {
    checked: u64,
    failed: u64,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(counterexample());
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
        if self.first.is_none() {
            self.first = other.first;
        }
    }
}

/// Named tallies in insertion order.
struct Checks(Vec<(&'static str, String, Tally)>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn declare(&mut self, name: &'static str, scope: impl Into<String>) {
        self.0.push((name, scope.into(), Tally::default()));
    }

    fn get(&mut self, name: &str) -> &mut Tally {
        &mut self.0.iter_mut().find(|(n, _, _)| *n == name).expect("declared check").2
    }

    fn finish(self) -> Vec<Check> {
        self.0
            .into_iter()
            .map(|(name, scope, t)| Check { name, scope, checked: t.checked, failed: t.failed, counterexample: t.first })
            .collect()
    }
}

/// Runs `row` for every index in parallel, each filling `width` tallies, and
/// merges them in index order so the first counterexample is deterministic.
fn sweep<F>(rows: usize, width: usize, row: F) -> Vec<Tally>
where
    F: Fn(usize, &mut [Tally]) + Sync,
{
    let per_row: Vec<Vec<Tally>> = (0..rows)
        .into_par_iter()
        .map(|i| {
            let mut t = vec![Tally::default(); width];
            row(i, &mut t);
            t
        })
        .collect();
    let mut total = vec![Tally::default(); width];
    for r in per_row {
        for (acc, t) in total.iter_mut().zip(r) {
            acc.absorb(t);
        }
    }
    total
}

fn small(v: BigUint) -> usize {
    usize::try_from(v).unwrap_or(usize::MAX)
}

fn sorted_intersection(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> BigUint {
    crate::numeric::binomial_prefix(n, k).pop().unwrap_or_default()
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(suite.default_n_max());
    let t_max = opts.t_max.unwrap_or(3);
    let periods = if opts.periods.is_empty() { suite.default_periods() } else { opts.periods.clone() };
    let (checks, observations) = match suite {
        Suite::Balls => balls_suite(n_max, t_max)?,
        Suite::Confusability => confusability_suite(n_max, t_max)?,
        Suite::Csvt => csvt_suite(n_max, &periods)?,
        Suite::Decode => decode_suite(n_max, &periods, opts.samples.unwrap_or(1000), opts.seed)?,
        Suite::Cover => cover_suite(n_max, &periods)?,
        Suite::All => {
            let mut checks = Vec::new();
            let mut observations = Vec::new();
            for s in [Suite::Balls, Suite::Confusability, Suite::Csvt, Suite::Decode, Suite::Cover] {
                let sub = VerifyOptions { n_max: opts.n_max, periods: opts.periods.clone(), ..opts.clone() };
                let report = run_suite(s, &sub)?;
                checks.extend(report.checks);
                observations.extend(report.observations);
            }
            (checks, observations)
        }
    };
    Ok(VerificationReport {
        suite,
        n_max,
        t_max,
        periods,
        checks,
        observations,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

type SuiteOutput = (Vec<Check>, Vec<Observation>);

fn balls_suite(n_max: usize, t_max: usize) -> Result<SuiteOutput> {
    check_cap(n_max, Caps::from_env().ball)?;
    let pair_max = n_max.min(PAIR_SWEEP_MAX);
    let dual_max = n_max.min(10);
    let mut checks = Checks::new();
    checks.declare("ball-size-bound", format!("x in {{0,1}}^n, 1 <= n <= {n_max}, t <= {t_max}"));
    checks.declare("alternating-equality", format!("same range, 1 <= t < n/2"));
    checks.declare("run-count", format!("|D_1(x)| = runs(x), n <= {n_max}"));
    checks.declare("space-read-coverage", format!("max pair intersection = nu_t(n), 2 <= n <= {pair_max}, 1 <= t < n, t <= {t_max}"));
    checks.declare("insertion-duality", format!("I_t(y) = {{x : y in D_t(x)}}, n <= {dual_max}, t <= {}", t_max.min(2)));
    checks.declare("insertion-size", format!("|I_t(y)| = sum C(|y|+t, i), |y| + t <= {dual_max}, t <= {}", t_max.min(2)));

    for n in 1..=n_max {
        let words: Vec<Word> = all_words(n).collect();
        for t in 0..=t_max.min(n) {
            let bound = small(dtn(n as i64, t as i64));
            let [size_t, alt_t] = <[Tally; 2]>::try_from(sweep(words.len(), 2, |i, tal| {
                let x = words[i];
                let size = deletion_ball_packed(&x, t).len();
                tal[0].check(size <= bound, || format!("x={x} t={t} |D_t(x)|={size} > {bound}"));
                if t >= 1 && 2 * t < n {
                    tal[1].check((size == bound) == is_alternating(&x), || {
                        format!("x={x} t={t} |D_t(x)|={size} bound={bound} alternating={}", is_alternating(&x))
                    });
                }
            }))
            .expect("two tallies");
            checks.get("ball-size-bound").absorb(size_t);
            checks.get("alternating-equality").absorb(alt_t);
        }
        let runs = sweep(words.len(), 1, |i, tal| {
            let x = words[i];
            let size = deletion_ball_packed(&x, 1).len();
            let r = run_count(&x).expect("non-empty");
            tal[0].check(size == r, || format!("x={x} |D_1(x)|={size} runs={r}"));
        });
        checks.get("run-count").absorb(runs.into_iter().next().expect("one tally"));
    }

    for n in 2..=pair_max {
        for t in 1..=t_max.min(n - 1) {
            let table = BallTable::full_space(n, t)?;
            let expected = small(nu_space(n as i64, t as i64));
            let (found, i, j) = table.max_pair_intersection().expect("at least two words");
            checks.get("space-read-coverage").check(found == expected, || {
                format!("n={n} t={t} max={found} at ({}, {}) but nu={expected}", table.word(i), table.word(j))
            });
        }
    }

    for n in 1..=dual_max {
        for t in 1..=t_max.min(2).min(n) {
            let m = n - t;
            let mut supersequences: Vec<Vec<u64>> = vec![Vec::new(); 1 << m];
            for x in all_words(n) {
                for y in deletion_ball_packed(&x, t) {
                    supersequences[y as usize].push(x.bits());
                }
            }
            let expected_size = small((0..=t).map(|i| binomial(n, i)).sum());
            for (y, mut expected) in all_words(m).zip(supersequences) {
                expected.sort_unstable();
                let got: Vec<u64> = insertion_ball(&y, t)?.iter().map(Word::bits).collect();
                let got_len = got.len();
                checks.get("insertion-duality").check(got == expected, || format!("y={y} t={t}"));
                checks.get("insertion-size").check(got_len == expected_size, || {
                    format!("y={y} t={t} |I_t(y)|={got_len} expected {expected_size}")
                });
            }
        }
    }
    Ok((checks.finish(), Vec::new()))
}

fn confusability_suite(n_max: usize, t_max: usize) -> Result<SuiteOutput> {
    let n_max = n_max.min(PAIR_SWEEP_MAX);
    let t_hi = t_max.min(3);
    let mut checks = Checks::new();
    checks.declare("d1-intersection-at-most-two", format!("distinct pairs, n <= {n_max}"));
    checks.declare("type-a-characterization", format!("|D_1 cap D_1| = 2 iff Type-A witness, n <= {n_max}"));
    checks.declare("size-one-characterization", format!("|D_1 cap D_1| = 1 implies Hamming-1 or Type-B, n <= {n_max}"));
    checks.declare("hamming-one-intersection", format!("D_t cap D_t = D_(t-1)(uv), t in [2, {t_hi}], n <= {n_max}"));
    checks.declare("main-bound", format!("|D_1 cap D_1| = 1: |D_t cap D_t| <= N2, strict if t < n/2, n in [6, {n_max}], t in [2, {t_hi}]"));
    checks.declare("type-b-t2-structure", format!("D_2 cap D_2 = D_1(z) u T, |T| <= 2, z not alternating, 4 <= n <= {n_max}"));
    checks.declare("disjoint-bound", format!("disjoint D_1: |D_t cap D_t| <= N1, n in [7, {n_max}], t in [2, {t_hi}]"));
    let mut observations = Vec::new();
    let mut converse_total = 0u64;
    let mut converse_example = None;

    for n in 2..=n_max {
        let words: Vec<Word> = all_words(n).collect();
        let t1 = BallTable::new(words.clone(), 1)?;
        let upper: Vec<(usize, BallTable)> = (2..=t_hi)
            .filter(|&t| t <= n)
            .map(|t| BallTable::new(words.clone(), t).map(|tab| (t, tab)))
            .collect::<Result<_>>()?;
        let n2: Vec<usize> =
            upper.iter().map(|(t, _)| if n >= 6 { small(n2_bound(n as i64, *t as i64).expect("n >= 6")) } else { 0 }).collect();
        let n1: Vec<usize> =
            upper.iter().map(|(t, _)| if n >= 7 { small(n1_bound(n as i64, *t as i64).expect("n >= 7")) } else { 0 }).collect();
        let two = upper.iter().find(|(t, _)| *t == 2).map(|(_, tab)| tab);

        // tally slots: 0..7 as declared, 7 counts Type-B witnesses on size-2 pairs
        let tallies = sweep(words.len(), 8, |i, tal| {
            let x = words[i];
            for j in i + 1..words.len() {
                let y = words[j];
                let s = t1.intersection_size(i, j);
                tal[0].check(s <= 2, || format!("x={x} y={y} |D_1 cap D_1|={s}"));
                let type_a = type_a_decompose(&x, &y).expect("same length").is_some();
                tal[1].check((s == 2) == type_a, || format!("x={x} y={y} size={s} type_a_witness={type_a}"));
                match s {
                    0 => {
                        if n >= 7 {
                            for (k, (t, tab)) in upper.iter().enumerate() {
                                let st = tab.intersection_size(i, j);
                                tal[6].check(st <= n1[k], || format!("x={x} y={y} t={t} observed={st} bound={}", n1[k]));
                            }
                        }
                    }
                    1 => {
                        let hamming1 = hamming_distance(&x, &y).expect("same length") == 1;
                        let type_b = !hamming1 && type_b_decompose(&x, &y).expect("same length").is_some();
                        tal[2].check(hamming1 || type_b, || format!("x={x} y={y} has no Hamming-1 or Type-B form"));
                        if hamming1 {
                            let pos = (1..=n).find(|&p| x.bit(p) != y.bit(p)).expect("distance one");
                            for (t, tab) in &upper {
                                let got = sorted_intersection(&tab.balls_of(i), &tab.balls_of(j));
                                let expected = deletion_ball_packed(&x.delete(pos), t - 1);
                                tal[3].check(got == expected, || format!("x={x} y={y} t={t}"));
                            }
                        }
                        if n >= 6 {
                            for (k, (t, tab)) in upper.iter().enumerate() {
                                let st = tab.intersection_size(i, j);
                                let ok = if 2 * t < n { st < n2[k] } else { st <= n2[k] };
                                tal[4].check(ok, || format!("x={x} y={y} t={t} observed={st} bound={}", n2[k]));
                            }
                        }
                        if type_b && n >= 4 {
                            if let Some(tab) = two {
                                let inter = sorted_intersection(&tab.balls_of(i), &tab.balls_of(j));
                                let z = Word::from_raw(sorted_intersection(&t1.balls_of(i), &t1.balls_of(j))[0], n - 1);
                                let dz = deletion_ball_packed(&z, 1);
                                let contains = dz.iter().all(|w| inter.binary_search(w).is_ok());
                                let extra = inter.iter().filter(|w| dz.binary_search(w).is_err()).count();
                                let alt = is_alternating(&z);
                                tal[5].check(contains && extra <= 2 && !alt, || {
                                    format!("x={x} y={y} z={z} |T|={extra} alternating={alt} D_1(z) inside={contains}")
                                });
                            }
                        }
                    }
                    2 => {
                        if type_b_decompose(&x, &y).expect("same length").is_some() {
                            tal[7].check(false, || format!("x={x} y={y}"));
                        }
                    }
                    _ => {}
                }
            }
        });
        let mut tallies = tallies.into_iter();
        for name in [
            "d1-intersection-at-most-two",
            "type-a-characterization",
            "size-one-characterization",
            "hamming-one-intersection",
            "main-bound",
            "type-b-t2-structure",
            "disjoint-bound",
        ] {
            checks.get(name).absorb(tallies.next().expect("tally"));
        }
        let converse = tallies.next().expect("tally");
        converse_total += converse.failed;
        if converse_example.is_none() {
            converse_example = converse.first;
        }
    }
    observations.push(Observation {
        name: "type-b-form-on-type-a-pairs",
        detail: format!(
            "{converse_total} pairs with |D_1 cap D_1| = 2 also admit a Type-B decomposition{}",
            converse_example.map(|e| format!(", first {e}")).unwrap_or_default()
        ),
    });
    Ok((checks.finish(), observations))
}

fn csvt_classes(period: u64) -> impl Iterator<Item = CsvtParams> {
    (0..=period / 2).flat_map(move |c| (0..2u8).map(move |d| CsvtParams::new(period, c, d)))
}

fn csvt_suite(n_max: usize, periods: &[u64]) -> Result<SuiteOutput> {
    check_cap(n_max, Caps::from_env().enumeration)?;
    let count_max = n_max.max(16);
    let mut checks = Checks::new();
    let ps = format!("{periods:?}");
    checks.declare("bounded-periodic-count", format!("4 F_(P-1)(n-2) = brute force, 2 <= n <= {count_max}, P in {ps}"));
    checks.declare("class-partition", format!("class sizes sum to the count, n <= {count_max}, P <= 2n"));
    checks.declare("single-deletion-coverage", format!("nu(C; D_1) <= 1 per class, n <= {n_max}, P <= 2n"));
    checks.declare("np-certification", format!("nu(C; D_2) < N_P per class, P <= n <= {n_max}"));
    for &p in periods {
        if p < 4 || p % 2 == 1 {
            return Err(Error::InvalidParameter(format!("csvt suite needs even P >= 4, got {p}")));
        }
    }

    for n in 2..=count_max {
        let runs: Vec<usize> = all_words(n).map(|x| longest_two_periodic_run(&x)).collect();
        for &p in periods {
            let brute = runs.iter().filter(|&&r| r as u64 <= p).count();
            let formula = small(count_bounded_periodic(n as u64, p)?);
            checks.get("bounded-periodic-count").check(brute == formula, || {
                format!("n={n} P={p} brute={brute} formula={formula}")
            });
            if p as usize <= 2 * n {
                let sum: u64 = csvt_class_sizes(n, p)?.iter().sum();
                checks.get("class-partition").check(sum as usize == formula, || format!("n={n} P={p} sum={sum}"));
            }
        }
    }

    for n in 2..=n_max {
        for &p in periods {
            if p as usize > 2 * n {
                continue;
            }
            for params in csvt_classes(p) {
                let code = enumerate_code(CodeFamily::Csvt(params), n)?;
                if code.len() < 2 {
                    continue;
                }
                let label = |v: usize, w: &(Word, Word)| {
                    format!("n={n} P={p} c={} d={} coverage={v} at ({}, {})", params.syndrome, params.parity, w.0, w.1)
                };
                let one = read_coverage_of_words(code.words(), n, 1, usize::MAX)?;
                checks.get("single-deletion-coverage").check(one.value <= 1, || label(one.value, &one.witness));
                if p as usize <= n {
                    let reads = np_bound(n as u64, p)? as usize;
                    let two = read_coverage_of_words(code.words(), n, 2, usize::MAX)?;
                    checks.get("np-certification").check(two.value < reads, || {
                        format!("{} N_P={reads}", label(two.value, &two.witness))
                    });
                }
            }
        }
    }
    Ok((checks.finish(), Vec::new()))
}

fn seed_for(seed: u64, parts: &[u64]) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    parts.iter().fold(rng.gen::<u64>(), |acc, &p| {
        ChaCha8Rng::seed_from_u64(acc ^ p.wrapping_mul(0x9e37_79b9_7f4a_7c15)).gen()
    })
}

fn decode_suite(n_max: usize, periods: &[u64], samples: usize, seed: u64) -> Result<SuiteOutput> {
    check_cap(n_max, Caps::from_env().enumeration)?;
    let vt_max = n_max.min(10);
    let mut checks = Checks::new();
    let ps = format!("{periods:?}");
    checks.declare("vt-single-read", format!("every read of every VT codeword, n <= {vt_max}"));
    checks.declare("csvt-read-pairs", format!("every 2-subset of D_1(x), n <= {n_max}, P in {ps}"));
    checks.declare("csvt-np-reads", format!("{samples} seeded N_P-subsets of D_2(x) per codeword, P <= n <= {n_max}"));
    let mut observations = Vec::new();
    let mut skipped = 0usize;

    for n in 1..=vt_max {
        for residue in 0..=n as u64 {
            let code = enumerate_code(CodeFamily::Vt { residue }, n)?;
            for x in code.words() {
                for y in deletion_ball_packed(x, 1) {
                    let read = Word::from_raw(y, n - 1);
                    let got = decode(&code, &ReadSet::new(n, 1, vec![read])?);
                    checks.get("vt-single-read").check(got.as_ref() == Ok(x), || {
                        format!("n={n} a={residue} x={x} read={read} got {got:?}")
                    });
                }
            }
        }
    }

    for n in 2..=n_max {
        for &p in periods {
            if p as usize > 2 * n {
                continue;
            }
            let np = (p as usize <= n).then(|| np_bound(n as u64, p)).transpose()?;
            for params in csvt_classes(p) {
                let code = enumerate_code(CodeFamily::Csvt(params), n)?;
                let words = code.words();
                let label = format!("n={n} P={p} c={} d={}", params.syndrome, params.parity);
                let pairs = sweep(words.len(), 1, |i, tal| {
                    let x = words[i];
                    let ball: Vec<Word> = deletion_ball_packed(&x, 1).into_iter().map(|b| Word::from_raw(b, n - 1)).collect();
                    for a in 0..ball.len() {
                        for b in a + 1..ball.len() {
                            let reads = ReadSet::new(n, 1, vec![ball[a], ball[b]]).expect("distinct reads");
                            let got = decode(&code, &reads);
                            tal[0].check(got == Ok(x), || {
                                format!("{label} x={x} reads={},{} got {got:?}", ball[a], ball[b])
                            });
                        }
                    }
                });
                checks.get("csvt-read-pairs").absorb(pairs.into_iter().next().expect("tally"));

                let Some(np) = np else { continue };
                let np = np as usize;
                let eligible: Vec<Word> =
                    words.iter().filter(|x| deletion_ball_packed(x, 2).len() >= np).copied().collect();
                skipped += words.len() - eligible.len();
                let sampled = sweep(eligible.len(), 1, |i, tal| {
                    let x = eligible[i];
                    let base = seed_for(seed, &[n as u64, p, params.syndrome, u64::from(params.parity), x.bits()]);
                    for k in 0..samples {
                        let reads = simulate_channel(&x, 2, np, base.wrapping_add(k as u64)).expect("eligible");
                        let got = decode(&code, &reads);
                        tal[0].check(got == Ok(x), || {
                            let r: Vec<String> = reads.reads().iter().map(Word::to_string).collect();
                            format!("{label} N_P={np} x={x} reads={} got {got:?}", r.join(","))
                        });
                    }
                });
                checks.get("csvt-np-reads").absorb(sampled.into_iter().next().expect("tally"));
            }
        }
    }
    observations.push(Observation {
        name: "np-reads-ineligible-codewords",
        detail: format!("{skipped} codewords have fewer than N_P distinct two-deletion reads and were skipped"),
    });
    Ok((checks.finish(), observations))
}

/// `(n, bound - log2 log2 n)` for `n = 2^6, ..., 2^20` at `ε = 0.5`.
pub fn redundancy_trend() -> Result<Vec<(usize, usize, f64)>> {
    (6..=20)
        .map(|k| {
            let n = 1usize << k;
            let b = redundancy_lower_bound(n, 0.5)?;
            Ok((n, b.ell, b.bound - (n as f64).log2().log2()))
        })
        .collect()
}

fn cover_suite(n_max: usize, ells: &[u64]) -> Result<SuiteOutput> {
    check_cap(n_max, Caps::from_env().cover)?;
    let mis_max = n_max.min(Caps::from_env().independent_set);
    let mut checks = Checks::new();
    let ls = format!("{ells:?}");
    checks.declare("cover-verify", format!("cliques are Type-A cliques and cover {{0,1}}^n, 2ℓ <= n <= {n_max}, ℓ in {ls}"));
    checks.declare("cover-size-closed-form", "exact count agrees with the closed form, n <= 64, ℓ <= 4");
    checks.declare("cover-size-example", "|Q(12, 2)| = 2912");
    checks.declare("independent-set-bound", format!("MIS(n) <= |Q(n, ℓ)| for every valid ℓ, n <= {mis_max}"));
    checks.declare("independent-set-vs-csvt", format!("MIS(n) >= best CSVT class, P in {{4,6,8}}, n <= {mis_max}"));

    for &ell in ells {
        let ell = ell as usize;
        for n in 2 * ell..=n_max {
            let report = verify_cover(n, ell)?;
            checks.get("cover-verify").check(report.holds(), || format!("n={n} ℓ={ell}: {:?}", report.violation));
        }
    }
    for n in 2..=64 {
        for ell in 1..=4 {
            if CoverParams::new(n, ell).is_err() {
                continue;
            }
            let size = cover_size(n, ell)?;
            checks.get("cover-size-closed-form").check(size.agree, || {
                format!("n={n} ℓ={ell} exact={} log2 {} vs formula log2 {}", size.exact, size.exact_log2, size.formula_log2)
            });
        }
    }
    let example = cover_size(12, 2)?;
    checks.get("cover-size-example").check(example.exact == BigUint::from(2912u32) && example.agree, || {
        format!("exact={} formula={:?}", example.exact, example.formula)
    });
    for n in 1..=mis_max {
        let mis = max_independent_set_exact(n)?;
        for ell in 1..=n / 2 {
            let q = cover_size(n, ell)?.exact;
            checks.get("independent-set-bound").check(BigUint::from(mis.size) <= q, || {
                format!("n={n} ℓ={ell} MIS={} cover={q}", mis.size)
            });
        }
        for p in [4u64, 6, 8] {
            if p as usize > 2 * n || n < 2 {
                continue;
            }
            let best = csvt_class_sizes(n, p)?.into_iter().max().unwrap_or(0);
            checks.get("independent-set-vs-csvt").check(mis.size as u64 >= best, || {
                format!("n={n} P={p} MIS={} best class={best}", mis.size)
            });
        }
    }

    let trend = redundancy_trend()?;
    let (lo, hi) = trend.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, _, v)| (lo.min(v), hi.max(v)));
    let points: Vec<String> = trend.iter().map(|(n, ell, v)| format!("{n}:ℓ={ell}:{v:.3}")).collect();
    let observations = vec![Observation {
        name: "redundancy-bound-trend",
        detail: format!(
            "bound - log2 log2 n over n = 2^6..2^20 (ε = 0.5, ℓ from {} to {}) lies in [{lo:.3}, {hi:.3}]: {}",
            block_parameter(1 << 6, 0.5)?,
            block_parameter(1 << 20, 0.5)?,
            points.join(" ")
        ),
    }];
    Ok((checks.finish(), observations))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_opts(n_max: usize) -> VerifyOptions {
        VerifyOptions { n_max: Some(n_max), samples: Some(20), ..Default::default() }
    }

    #[test]
    fn suites_pass_on_small_ranges() {
        for suite in [Suite::Balls, Suite::Confusability, Suite::Csvt, Suite::Decode] {
            let opts = VerifyOptions { t_max: Some(2), ..small_opts(8) };
            let report = run_suite(suite, &opts).unwrap();
            assert!(report.passed(), "{}", report.to_human());
            assert!(report.checks.iter().all(|c| c.checked > 0 || c.name == "np-certification"), "{}", report.to_human());
        }
        let report = run_suite(Suite::Cover, &small_opts(9)).unwrap();
        assert!(report.passed(), "{}", report.to_human());
    }

    #[test]
    fn disjoint_bound_exceeded_only_at_seven_three() {
        let opts = VerifyOptions { n_max: Some(9), t_max: Some(3), ..Default::default() };
        let report = run_suite(Suite::Confusability, &opts).unwrap();
        let check = report.check("disjoint-bound").unwrap();
        assert_eq!(check.counterexample.as_deref(), Some("x=0101001 y=1001010 t=3 observed=13 bound=12"));
        assert!(report.failures().all(|c| c.name == "disjoint-bound"));
        let x = Word::parse_allow_empty("0101001").unwrap();
        let y = Word::parse_allow_empty("1001010").unwrap();
        assert!(crate::balls::ball_intersection(&x, &y, 1).unwrap().is_empty());
        assert_eq!(crate::balls::ball_intersection(&x, &y, 3).unwrap().len(), 13);
        assert_eq!(n1_bound(7, 3).unwrap(), BigUint::from(12u32));
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn tally_keeps_first_counterexample() {
        let tallies = sweep(10, 1, |i, t| t[0].check(i % 3 != 2, || format!("i={i}")));
        assert_eq!(tallies[0].failed, 3);
        assert_eq!(tallies[0].first.as_deref(), Some("i=2"));
    }
}
