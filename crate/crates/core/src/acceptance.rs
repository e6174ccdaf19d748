//! The acceptance suite: one runner per criterion, each with a fixed time
//! budget. Shared by the `acceptance` test target and `qaffine selftest`.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::cluster::verify_kr_correspondence;
use crate::error::Result;
use crate::loopalg::{factor_into_roots, LoopPolynomial};
use crate::paths::{enumerate_paths, q_character};
use crate::qarith::{q_binomial, q_factorial, QLaurent};
use crate::rmatrix::{check_regularity, check_unitarity, check_ybe, YbeMode, SAMPLE_POINTS};
use crate::sl2eval::{
    check_drinfeld_relations, drinfeld_series_check, drinfeld_series_check_minus, product_dominant_monomials,
    q_character_closed, special_position, tensor_identity_check, EvalModule, PositionCase,
};
use crate::snakes::{snake_of_kr, Snake};
use crate::tsys::{
    extended_t_system, kr_character, kr_determinant_sl2, minimal_snake_a4, sample_prime_snakes, verify_t_system,
};

/// Seed of the prime-snake sample.
pub const SNAKE_SEED: u64 = 2024;
/// Number of sampled prime snakes, besides the minimal snake in `A_4`.
pub const SNAKE_SAMPLE: usize = 50;

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    /// The mathematical check itself.
    pub check_passed: bool,
    pub elapsed: Duration,
    pub budget: Duration,
    pub detail: String,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.check_passed && self.elapsed <= self.budget
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        let over = if self.elapsed > self.budget { " OVER BUDGET" } else { "" };
        write!(
            f,
            "{tag} {:>2} {} [{:.2} s / {:.0} s{over}] {}",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs_f64(),
            self.detail
        )
    }
}

fn timed(
    id: u32,
    title: &'static str,
    budget: Duration,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionResult {
    let start = Instant::now();
    let (check_passed, detail) = match body() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult {
        id,
        title,
        check_passed,
        elapsed: start.elapsed(),
        budget,
        detail,
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// Shared budget of the T-system and thinness criteria.
pub const SNAKE_BUDGET: Duration = Duration::from_secs(60);

fn binomial_or_zero(n: i64, k: i64) -> Result<QLaurent> {
    if k < 0 || k > n {
        Ok(QLaurent::zero())
    } else {
        q_binomial(n, k)
    }
}

/// q-binomial identities for `0 <= k <= r <= 15`: the Pascal rule
/// `[r k] = q^-k [r-1 k] + q^{r-k} [r-1 k-1]`, the alternating sum
/// `sum_k (-1)^k [r k] q^{-(r-1)k} = 0` for `r >= 1`, and the defining
/// relation `[r]! = [r k] [k]! [r-k]!`.
pub fn criterion_1() -> CriterionResult {
    timed(1, "q-binomial identities", secs(1), || {
        let mut checked = 0;
        for r in 0..=15i64 {
            let mut alternating = QLaurent::zero();
            for k in 0..=r {
                let b = q_binomial(r, k)?;
                if r >= 1 {
                    let pascal = &binomial_or_zero(r - 1, k)?.shift(-k) + &binomial_or_zero(r - 1, k - 1)?.shift(r - k);
                    if b != pascal {
                        return Ok((false, format!("Pascal rule fails at r={r} k={k}")));
                    }
                }
                let fact = &(&b * &q_factorial(k)?) * &q_factorial(r - k)?;
                if fact != q_factorial(r)? {
                    return Ok((false, format!("factorial relation fails at r={r} k={k}")));
                }
                let term = b.shift(-(r - 1) * k);
                alternating = if k % 2 == 0 { &alternating + &term } else { &alternating - &term };
                checked += 1;
            }
            if r >= 1 && !alternating.is_zero() {
                return Ok((false, format!("alternating sum nonzero at r={r}")));
            }
        }
        Ok((true, format!("{checked} coefficients")))
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Path counts and `q = 1` character totals of fundamental snakes.
pub fn criterion_2() -> CriterionResult {
    timed(2, "path counts of fundamental modules", secs(1), || {
        let mut cases = 0;
        for l in 1..=6u32 {
            for i in 1..=l as i32 {
                let expected = binomial(l as u64 + 1, i as u64);
                let count = enumerate_paths(i, i, l)?.len() as u64;
                let total = q_character(&Snake::from_pairs(&[(i, i)], l)?)?.eval_at_q1();
                if count != expected || total != BigInt::from(expected) {
                    return Ok((false, format!("l={l} i={i}: {count} paths, total {total}, want {expected}")));
                }
                cases += 1;
            }
        }
        Ok((true, format!("{cases} cases")))
    })
}

/// The closed `sl_2` q-character against the path formula on straight
/// snakes.
pub fn criterion_3() -> CriterionResult {
    timed(3, "closed sl2 q-character vs path formula", secs(5), || {
        let mut cases = 0;
        for r in 1..=10u32 {
            for s in [-(r as i64), r as i64 % 2, r as i64 + 4] {
                let m = EvalModule::new(r, s);
                let straight = snake_of_kr(1, (s - r as i64 + 1) as i32, r, 1)?;
                if q_character_closed(m)? != q_character(&straight)? {
                    return Ok((false, format!("{m} differs from the snake {straight}")));
                }
                cases += 1;
            }
        }
        Ok((true, format!("{cases} modules")))
    })
}

/// Drinfeld relations on evaluation modules and the eigenvalue series of
/// both Cartan currents.
pub fn criterion_4() -> CriterionResult {
    timed(4, "sl2 Drinfeld relations and eigenvalue series", secs(10), || {
        let mut relations = 0;
        for r in 0..=4u32 {
            for s in [r as i64 % 2 - 2, r as i64 % 2 + 2] {
                let m = EvalModule::new(r, s);
                if !check_drinfeld_relations(m, 2) {
                    return Ok((false, format!("relations fail on {m}")));
                }
                relations += 1;
            }
        }
        let mut series = 0;
        for r in 0..=5u32 {
            let m = EvalModule::new(r, r as i64 % 2);
            for k in 0..=r {
                if !drinfeld_series_check(m, k, 10)? || !drinfeld_series_check_minus(m, k, 10)? {
                    return Ok((false, format!("series mismatch on {m}, vector {k}")));
                }
                series += 1;
            }
        }
        Ok((true, format!("{relations} modules, {series} eigenvalue series")))
    })
}

/// Characters computed while checking the extended T-systems, reused by the
/// thinness and factorization criteria.
#[derive(Clone, Debug, Default)]
pub struct SnakeSample {
    pub characters: Vec<(Snake, LoopPolynomial)>,
}

fn sample_snakes() -> Vec<Snake> {
    let mut snakes = sample_prime_snakes(SNAKE_SEED, SNAKE_SAMPLE, 4, 5);
    snakes.push(minimal_snake_a4());
    snakes
}

/// T-systems for `1 <= i <= l <= 4`, `1 <= r <= 3`, and extended T-systems on
/// the prime-snake sample.
pub fn criterion_5(sample: &mut SnakeSample) -> CriterionResult {
    timed(5, "T-systems and extended T-systems", SNAKE_BUDGET, || {
        let mut tsys = 0;
        for l in 1..=4u32 {
            for i in 1..=l as i32 {
                for r in 1..=3u32 {
                    for k in [i - 2, i] {
                        if !verify_t_system(i, k, r, l)? {
                            return Ok((false, format!("T-system fails at i={i} k={k} r={r} l={l}")));
                        }
                        tsys += 1;
                    }
                }
            }
        }
        let snakes = sample_snakes();
        for s in &snakes {
            let report = extended_t_system(s)?;
            sample.characters.extend(report.characters);
            if !report.identity.holds() {
                return Ok((false, format!("extended T-system fails for {s} in rank {}", s.rank())));
            }
        }
        let minimal = snakes.iter().filter(|s| s.is_minimal()).count();
        Ok((
            true,
            format!("{tsys} T-systems, {} prime snakes ({minimal} minimal, incl. length 5 in A_4)", snakes.len()),
        ))
    })
}

/// Thinness and a unique dominant and anti-dominant monomial for every
/// character in the sample, within what is left of the budget shared with
/// criterion 5.
pub fn criterion_6(sample: &SnakeSample, budget: Duration) -> CriterionResult {
    timed(6, "snake characters are thin and special", budget, || {
        if sample.characters.is_empty() {
            return Ok((false, "no characters were computed".into()));
        }
        for (s, chi) in &sample.characters {
            if !chi.is_thin() {
                return Ok((false, format!("{s} is not thin")));
            }
            let dom = chi.dominant_monomials();
            let anti = chi.antidominant_monomials();
            if dom.len() != 1 || anti.len() != 1 || dom[0] != s.highest_weight() {
                return Ok((false, format!("{s}: {} dominant, {} anti-dominant", dom.len(), anti.len())));
            }
        }
        Ok((true, format!("{} characters", sample.characters.len())))
    })
}

/// Every monomial below the highest one is the highest monomial times a
/// nonempty product of inverse affine roots.
pub fn criterion_7(sample: &SnakeSample) -> CriterionResult {
    timed(7, "highest loop-weight factorization", secs(30), || {
        let mut monomials = 0usize;
        for (s, chi) in &sample.characters {
            let top = s.highest_weight();
            for m in chi.monomials() {
                let Some(exps) = factor_into_roots(&m, &top)? else {
                    return Ok((false, format!("{m} in chi({s}) is not a root multiple of {top}")));
                };
                let lower = exps.values().all(|&c| c <= 0);
                if !lower || (m != top && exps.is_empty()) {
                    return Ok((false, format!("{m} in chi({s}) is not below {top}")));
                }
                monomials += 1;
            }
        }
        Ok((true, format!("{monomials} monomials")))
    })
}

fn segment(m: EvalModule) -> (i64, i64) {
    let r = m.r as i64;
    (m.s - r + 1, m.s + r - 1)
}

fn nested(a: EvalModule, b: EvalModule) -> bool {
    let (a0, a1) = segment(a);
    let (b0, b1) = segment(b);
    (a0 >= b0 && a1 <= b1) || (b0 >= a0 && b1 <= a1)
}

/// The special-position character identity for `1 <= k, l <= 4`, both
/// cases and all `p`, and a unique dominant monomial in every
/// general-position product with `|s2 - s1| <= k + l + 4`.
pub fn criterion_8() -> CriterionResult {
    timed(8, "special and general position products", secs(30), || {
        let mut identities = 0;
        for k in 1..=4u32 {
            for l in 1..=4u32 {
                let s1 = k as i64 % 2;
                for p in 0..k.min(l) {
                    for (case, sign) in [(PositionCase::Plus, 1), (PositionCase::Minus, -1)] {
                        let s2 = s1 + sign * (k + l - 2 * p) as i64;
                        let Some(d) = special_position(k, l, s1, s2) else {
                            return Ok((false, format!("k={k} l={l} s2-s1={} not recognised", s2 - s1)));
                        };
                        if d.case != case || d.p != p || !tensor_identity_check(&d)? {
                            return Ok((false, format!("identity fails for k={k} l={l} p={p} {case:?}")));
                        }
                        identities += 1;
                    }
                }
            }
        }
        let mut general = 0;
        let mut failures: Vec<(EvalModule, EvalModule)> = Vec::new();
        for k in 1..=4u32 {
            for l in 1..=4u32 {
                let s1 = k as i64 % 2;
                let reach = (k + l + 4) as i64;
                for delta in (-reach..=reach).filter(|d| (d - (k + l) as i64) % 2 == 0) {
                    let s2 = s1 + delta;
                    if special_position(k, l, s1, s2).is_some() {
                        continue;
                    }
                    general += 1;
                    let (a, b) = (EvalModule::new(k, s1), EvalModule::new(l, s2));
                    if product_dominant_monomials(a, b)?.len() != 1 {
                        failures.push((a, b));
                    }
                }
            }
        }
        let mut detail = format!("{identities} special-position identities hold; ");
        if failures.is_empty() {
            detail += &format!("{general} general-position products each have one dominant monomial");
            return Ok((true, detail));
        }
        let nested_count = failures.iter().filter(|(a, b)| nested(*a, *b)).count();
        let (a, b) = failures[0];
        detail += &format!(
            "{} of {general} general-position products have several dominant monomials \
             ({nested_count} of them nested segments), e.g. {a} (x) {b}",
            failures.len()
        );
        Ok((false, detail))
    })
}

/// The tridiagonal determinant against `chi(W^{(r)})` for `r <= 6`.
pub fn criterion_9() -> CriterionResult {
    timed(9, "sl2 KR determinant formula", secs(5), || {
        let mut cases = 0;
        for r in 1..=6u32 {
            for k in [-3, 1] {
                if kr_determinant_sl2(r, k)? != kr_character(1, k, r, 1)? {
                    return Ok((false, format!("determinant differs at r={r} k={k}")));
                }
                cases += 1;
            }
        }
        Ok((true, format!("{cases} determinants")))
    })
}

/// Cluster variables after `ceil((l+1)/2)` rounds of `S` against KR
/// characters, on the depth-stable interior.
pub fn criterion_10() -> CriterionResult {
    timed(10, "cluster variables are KR q-characters", secs(120), || {
        let depth = 10;
        let mut parts = Vec::new();
        for l in 1..=3u32 {
            let m = (l + 2) / 2;
            let report = verify_kr_correspondence(l, depth, m)?;
            let checked = report.stable_count();
            if !report.passed() {
                return Ok((false, format!("rank {l}: {report:?}")));
            }
            parts.push(format!("A_{l}: {checked}/{} interior vertices stable and matching", report.vertices.len()));
        }
        Ok((true, parts.join(", ")))
    })
}

/// Yang-Baxter equation, regularity and unitarity of the R-matrix.
pub fn criterion_11() -> CriterionResult {
    timed(11, "R-matrix Yang-Baxter, regularity, unitarity", secs(60), || {
        for l in [1, 2] {
            if !check_ybe(l, YbeMode::Exact)?.holds {
                return Ok((false, format!("exact Yang-Baxter fails for l={l}")));
            }
        }
        let sampled = check_ybe(3, YbeMode::Sampled)?;
        if !sampled.holds || sampled.points < 20 {
            return Ok((false, format!("sampled Yang-Baxter for l=3: {sampled:?}")));
        }
        let mut factors = Vec::new();
        for l in 1..=3 {
            if !check_regularity(l)? {
                return Ok((false, format!("R(1) != P for l={l}")));
            }
            let u = check_unitarity(l)?;
            if !u.holds() {
                return Ok((false, format!("R(L) P R(1/L) P is not scalar for l={l}")));
            }
            factors.push(u.factor.expect("scalar").to_string());
        }
        Ok((
            true,
            format!(
                "exact for l=1,2, {}/{SAMPLE_POINTS} points for l=3; unitarity factors {}",
                sampled.points,
                factors.join(", ")
            ),
        ))
    })
}

/// Runs every criterion in order.
pub fn run_all() -> Vec<CriterionResult> {
    let mut sample = SnakeSample::default();
    let mut out = vec![criterion_1(), criterion_2(), criterion_3(), criterion_4()];
    let five = criterion_5(&mut sample);
    let left = SNAKE_BUDGET.saturating_sub(five.elapsed);
    out.push(five);
    out.push(criterion_6(&sample, left));
    out.push(criterion_7(&sample));
    out.extend([criterion_8(), criterion_9(), criterion_10(), criterion_11()]);
    out
}
