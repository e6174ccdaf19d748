//! Sparse multivariate Laurent polynomials with integer coefficients.
//!
//! Both the loop-weight ring `Z[Y_{i,k}^{+-1}]` and the polynomial rings used
//! for R-matrix entries are instances of [`Laurent`] over different variable
//! types.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

/// Maximum number of distinct variables for the allocation-free product.
const DENSE_VARS: usize = 48;

/// Bound for variable types.
pub trait Var: Clone + Ord + Hash + Debug {}
impl<T: Clone + Ord + Hash + Debug> Var for T {}

/// A Laurent monomial: variables with nonzero integer exponents, sorted by
/// variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial<V> {
    exps: Vec<(V, i32)>,
}

impl<V: Var> Default for Monomial<V> {
    fn default() -> Self {
        Self::one()
    }
}

impl<V: Var> Monomial<V> {
    pub fn one() -> Self {
        Self { exps: Vec::new() }
    }

    pub fn var(v: V, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Self { exps: vec![(v, e)] }
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs; repeated
    /// variables are combined.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (V, i32)>) -> Self {
        let mut map: BTreeMap<V, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Self {
            exps: map.into_iter().filter(|(_, e)| *e != 0).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: &V) -> i32 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|idx| self.exps[idx].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&V, i32)> + '_ {
        self.exps.iter().map(|(v, e)| (v, *e))
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => {
                        out.push((va.clone(), *ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb.clone(), *eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        let e = ea + eb;
                        if e != 0 {
                            out.push((va.clone(), e));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(x), None) => {
                    out.push((*x).clone());
                    a.next();
                }
                (None, Some(y)) => {
                    out.push((*y).clone());
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { exps: out }
    }

    pub fn pow(&self, n: i32) -> Self {
        if n == 0 {
            return Self::one();
        }
        Self {
            exps: self.exps.iter().map(|(v, e)| (v.clone(), e * n)).collect(),
        }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Applies `f` to every variable, combining collisions.
    pub fn map_vars<W: Var>(&self, f: impl Fn(&V) -> W) -> Monomial<W> {
        Monomial::from_pairs(self.exps.iter().map(|(v, e)| (f(v), *e)))
    }

    /// Compares in the lexicographic group order: the first variable where the
    /// exponents differ decides, larger exponent being larger. Unlike the
    /// derived `Ord`, this order is compatible with multiplication.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some((_, ea)), None) => return ea.cmp(&0),
                (None, Some((_, eb))) => return 0.cmp(eb),
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

/// Wrapper ordering monomials by [`Monomial::lex_cmp`].
#[derive(Clone, PartialEq, Eq)]
struct LexKey<V>(Monomial<V>);

impl<V: Var> Ord for LexKey<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.lex_cmp(&other.0)
    }
}

impl<V: Var> PartialOrd for LexKey<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial `sum c_m m` with nonzero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent<V: Var> {
    terms: FxHashMap<Monomial<V>, BigInt>,
}

impl<V: Var> Default for Laurent<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Var> Laurent<V> {
    pub fn zero() -> Self {
        Self {
            terms: FxHashMap::default(),
        }
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_monomial(m: Monomial<V>) -> Self {
        Self::term(1, m)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial<V>) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c.into());
        out
    }

    pub fn var(v: V) -> Self {
        Self::from_monomial(Monomial::var(v, 1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial<V>, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial<V>) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial<V>, &BigInt)> {
        self.terms.iter()
    }

    /// Terms sorted by monomial.
    pub fn sorted_terms(&self) -> Vec<(&Monomial<V>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Sum of the coefficients.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_small(other).unwrap_or_else(|| self.mul_big(other))
    }

    /// Product over a dense exponent encoding: when both operands together
    /// use at most [`DENSE_VARS`] variables with small exponents and small
    /// coefficients, monomials become fixed-size arrays and no allocation
    /// happens per term. `None` if the operands do not qualify or a
    /// coefficient accumulator overflows.
    fn mul_small(&self, other: &Self) -> Option<Self> {
        let mut vars: Vec<V> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .flat_map(|m| m.exps.iter().map(|(v, _)| v.clone()))
            .collect();
        vars.sort();
        vars.dedup();
        if vars.len() > DENSE_VARS {
            return None;
        }
        let bound = |p: &Self| {
            p.terms
                .keys()
                .flat_map(|m| m.exps.iter().map(|(_, e)| e.unsigned_abs()))
                .max()
                .unwrap_or(0)
        };
        if bound(self) + bound(other) > i8::MAX as u32 {
            return None;
        }
        let encode = |p: &Self| -> Option<Vec<([i8; DENSE_VARS], i128)>> {
            p.terms
                .iter()
                .map(|(m, c)| {
                    let mut key = [0i8; DENSE_VARS];
                    for (v, e) in &m.exps {
                        let idx = vars.binary_search(v).expect("collected above");
                        key[idx] = *e as i8;
                    }
                    c.to_i64().map(|x| (key, x as i128))
                })
                .collect()
        };
        let (a, b) = (encode(self)?, encode(other)?);
        let mut acc: FxHashMap<[i8; DENSE_VARS], i128> = FxHashMap::default();
        acc.reserve(a.len().saturating_mul(b.len()).min(1 << 22));
        for (k1, c1) in &a {
            for (k2, c2) in &b {
                let mut key = *k1;
                for (x, y) in key.iter_mut().zip(k2) {
                    *x += *y;
                }
                let slot = acc.entry(key).or_insert(0);
                *slot = slot.checked_add(c1 * c2)?;
            }
        }
        let mut terms = FxHashMap::default();
        terms.reserve(acc.len());
        for (key, c) in acc {
            if c == 0 {
                continue;
            }
            let exps = key
                .iter()
                .zip(&vars)
                .filter(|(e, _)| **e != 0)
                .map(|(e, v)| (v.clone(), *e as i32))
                .collect();
            terms.insert(Monomial { exps }, BigInt::from(c));
        }
        Some(Self { terms })
    }

    fn mul_big(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        out.terms.reserve(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial<V>) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Replaces every monomial `m` by `f(m)`, keeping coefficients.
    pub fn map_monomials<W: Var>(&self, f: impl Fn(&Monomial<V>) -> Monomial<W>) -> Laurent<W> {
        Laurent::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Substitutes each variable by a Laurent polynomial. Variables raised to a
    /// negative power must be sent to monomials (the only invertible values).
    pub fn substitute<W: Var>(&self, f: impl Fn(&V) -> Laurent<W>) -> Laurent<W> {
        let mut out = Laurent::zero();
        for (m, c) in &self.terms {
            let mut t = Laurent::constant(c.clone());
            for (v, e) in m.iter() {
                let image = f(v);
                let factor = if e >= 0 {
                    image.pow(e as u32)
                } else {
                    let (cm, mono) = image
                        .single_term()
                        .expect("negative power of a non-monomial substitution");
                    assert!(cm.abs().is_one(), "negative power of a non-unit");
                    Laurent::term(cm.pow(e.unsigned_abs()), mono.pow(e))
                };
                t = t.mul(&factor);
            }
            out = out.add(&t);
        }
        out
    }

    /// Exact rational evaluation. Returns `None` when a variable with a
    /// negative exponent evaluates to zero.
    pub fn eval(&self, f: impl Fn(&V) -> BigRational) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, e) in m.iter() {
                let x = f(v);
                if e < 0 && x.is_zero() {
                    return None;
                }
                t *= num_traits::pow::Pow::pow(&x, e);
            }
            total += t;
        }
        Some(total)
    }

    /// The single term of a one-term polynomial.
    pub fn single_term(&self) -> Option<(BigInt, Monomial<V>)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(m, c)| (c.clone(), m.clone()))
    }

    /// Per-variable minimum and maximum exponents over all terms (variables
    /// absent from a term count with exponent 0).
    fn exponent_box(&self) -> BTreeMap<V, (i32, i32)> {
        let mut vars: BTreeMap<V, (i32, i32)> = BTreeMap::new();
        for m in self.terms.keys() {
            for (v, _) in m.iter() {
                vars.entry(v.clone()).or_insert((0, 0));
            }
        }
        let mut first = true;
        for m in self.terms.keys() {
            for (v, range) in vars.iter_mut() {
                let e = m.exponent(v);
                if first {
                    *range = (e, e);
                } else {
                    range.0 = range.0.min(e);
                    range.1 = range.1.max(e);
                }
            }
            first = false;
        }
        vars
    }

    /// Exact division: returns `q` with `self = q * divisor`, or `None` when
    /// no such Laurent polynomial with integer coefficients exists.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, m)) = divisor.single_term() {
            let minv = m.inv();
            let mut out = Self::zero();
            for (k, x) in &self.terms {
                let (quo, rem) = x.div_rem(&c);
                if !rem.is_zero() {
                    return None;
                }
                out.add_term(k.mul(&minv), quo);
            }
            return Some(out);
        }

        // Any exact quotient has its exponents of each variable in the window
        // [min_p - min_d, max_p - max_d].
        let pbox = self.exponent_box();
        let dbox = divisor.exponent_box();
        let mut window: BTreeMap<V, (i32, i32)> = BTreeMap::new();
        for v in pbox.keys().chain(dbox.keys()) {
            let (pl, ph) = pbox.get(v).copied().unwrap_or((0, 0));
            let (dl, dh) = dbox.get(v).copied().unwrap_or((0, 0));
            if pl - dl > ph - dh {
                return None;
            }
            window.insert(v.clone(), (pl - dl, ph - dh));
        }
        let in_window = |m: &Monomial<V>| {
            m.iter().all(|(v, e)| window.get(v).is_some_and(|(lo, hi)| *lo <= e && e <= *hi))
                && window.iter().all(|(v, (lo, hi))| {
                    let e = m.exponent(v);
                    *lo <= e && e <= *hi
                })
        };

        let mut rem: BTreeMap<LexKey<V>, BigInt> = self
            .terms
            .iter()
            .map(|(m, c)| (LexKey(m.clone()), c.clone()))
            .collect();
        let (lead_d, lead_c) = divisor
            .terms
            .iter()
            .max_by(|a, b| a.0.lex_cmp(b.0))
            .map(|(m, c)| (m.clone(), c.clone()))?;
        let lead_inv = lead_d.inv();
        let mut quotient = Self::zero();
        while let Some((LexKey(top), c)) = rem.pop_last() {
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return None;
            }
            let qm = top.mul(&lead_inv);
            if !in_window(&qm) {
                return None;
            }
            for (dm, dc) in &divisor.terms {
                if *dm == lead_d {
                    continue;
                }
                let key = LexKey(dm.mul(&qm));
                let delta = -(dc * &qc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        slot.insert(delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() += delta;
                        if slot.get().is_zero() {
                            slot.remove();
                        }
                    }
                }
            }
            quotient.add_term(qm, qc);
        }
        Some(quotient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = Laurent<u8>;

    fn poly(terms: &[(i64, &[(u8, i32)])]) -> P {
        P::from_terms(
            terms
                .iter()
                .map(|(c, m)| (Monomial::from_pairs(m.iter().copied()), BigInt::from(*c))),
        )
    }

    #[test]
    fn monomial_group() {
        let a = Monomial::from_pairs([(0u8, 2), (3, -1)]);
        let b = Monomial::from_pairs([(3u8, 1), (1, 4)]);
        assert_eq!(a.mul(&b), Monomial::from_pairs([(0, 2), (1, 4)]));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(a.exponent(&3), -1);
        assert_eq!(a.exponent(&7), 0);
    }

    #[test]
    fn lex_order_is_multiplicative() {
        let ms = [
            Monomial::from_pairs([(0u8, 1)]),
            Monomial::from_pairs([(1u8, -2)]),
            Monomial::from_pairs([(0u8, -1), (2, 5)]),
            Monomial::one(),
        ];
        for a in &ms {
            for b in &ms {
                for c in &ms {
                    assert_eq!(a.lex_cmp(b), a.mul(c).lex_cmp(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn exact_division() {
        // (x^2 - y^2) / (x - y) = x + y
        let p = poly(&[(1, &[(0, 2)]), (-1, &[(1, 2)])]);
        let d = poly(&[(1, &[(0, 1)]), (-1, &[(1, 1)])]);
        assert_eq!(p.div_exact(&d), Some(poly(&[(1, &[(0, 1)]), (1, &[(1, 1)])])));
        // x^2 + 1 is not divisible by x - 1
        let p = poly(&[(1, &[(0, 2)]), (1, &[])]);
        let d = poly(&[(1, &[(0, 1)]), (-1, &[])]);
        assert_eq!(p.div_exact(&d), None);
        // 2x / (2x^-1) = x^2, 3x / 2 fails
        let p = poly(&[(2, &[(0, 1)])]);
        assert_eq!(p.div_exact(&poly(&[(2, &[(0, -1)])])), Some(poly(&[(1, &[(0, 2)])])));
        assert_eq!(poly(&[(3, &[(0, 1)])]).div_exact(&P::constant(2)), None);
    }

    #[test]
    fn substitution_and_eval() {
        // x*y^-1 with x -> 1 + z, y -> 2z
        let p = poly(&[(1, &[(0, 1), (1, -1)])]);
        let image = p.substitute(|v| match v {
            0 => poly(&[(1, &[]), (1, &[(2, 1)])]),
            _ => poly(&[(1, &[(2, 1)])]),
        });
        assert_eq!(image, poly(&[(1, &[(2, -1)]), (1, &[])]));
        let val = p.eval(|v| BigRational::from_integer(BigInt::from(*v as i64 + 2)));
        assert_eq!(val, Some(BigRational::new(2.into(), 3.into())));
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-3i64..=3, prop::collection::vec((0u8..3, -2i32..=2), 0..3)), 0..5)
            .prop_map(|terms| {
                P::from_terms(
                    terms
                        .into_iter()
                        .map(|(c, m)| (Monomial::from_pairs(m), BigInt::from(c))),
                )
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            prop_assert_eq!(a.mul(&P::one()), a.clone());
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }
    }
}
