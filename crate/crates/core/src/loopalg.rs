//! The loop-weight lattice of type `A_l`: monomials and Laurent polynomials in
//! the fundamental loop-weights `Y_{i,k}` (standing for `1 - q^k u_i`), affine
//! simple roots, the classical weight map and root factorization.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::{Laurent, Monomial};

/// A point `(i, k)`: node `i` of the Dynkin diagram and spectral exponent `k`
/// (the parameter `a = q^k`). Ordered by `(i, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub i: i32,
    pub k: i32,
}

impl LatticePoint {
    pub const fn new(i: i32, k: i32) -> Self {
        Self { i, k }
    }

    /// `0` when `i - k` is even, `1` when odd.
    pub fn parity(&self) -> i32 {
        (self.i - self.k).rem_euclid(2)
    }

    /// Membership in `X = {(i, k) : i - k even}`.
    pub fn in_x(&self) -> bool {
        self.parity() == 0
    }

    /// Membership in `W = {(i, k) : (i, k - 1) in X}`.
    pub fn in_w(&self) -> bool {
        self.parity() == 1
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.k)
    }
}

fn check_rank(l: u32) -> Result<()> {
    if l == 0 {
        Err(Error::ZeroRank)
    } else {
        Ok(())
    }
}

fn check_node(i: i32, l: u32) -> Result<()> {
    if i < 1 || i > l as i32 {
        Err(Error::NodeOutOfRange { i, rank: l })
    } else {
        Ok(())
    }
}

/// A monomial in the `Y_{i,k}^{+-1}` for a fixed rank `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopMonomial {
    rank: u32,
    mono: Monomial<LatticePoint>,
}

impl LoopMonomial {
    pub fn one(rank: u32) -> Self {
        Self {
            rank,
            mono: Monomial::one(),
        }
    }

    /// The fundamental loop-weight `Y_{i,k}`.
    pub fn y(rank: u32, i: i32, k: i32) -> Result<Self> {
        check_rank(rank)?;
        check_node(i, rank)?;
        Ok(Self {
            rank,
            mono: Monomial::var(LatticePoint::new(i, k), 1),
        })
    }

    /// Builds `prod Y_{i,k}^e` from `(i, k, e)` triples.
    pub fn from_triples(rank: u32, triples: impl IntoIterator<Item = (i32, i32, i32)>) -> Result<Self> {
        check_rank(rank)?;
        let mut pairs = Vec::new();
        for (i, k, e) in triples {
            check_node(i, rank)?;
            pairs.push((LatticePoint::new(i, k), e));
        }
        Ok(Self {
            rank,
            mono: Monomial::from_pairs(pairs),
        })
    }

    pub(crate) fn from_monomial(rank: u32, mono: Monomial<LatticePoint>) -> Self {
        Self { rank, mono }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn monomial(&self) -> &Monomial<LatticePoint> {
        &self.mono
    }

    pub fn is_one(&self) -> bool {
        self.mono.is_one()
    }

    pub fn exponent(&self, p: LatticePoint) -> i32 {
        self.mono.exponent(&p)
    }

    /// `(point, exponent)` pairs sorted by point.
    pub fn iter(&self) -> impl Iterator<Item = (LatticePoint, i32)> + '_ {
        self.mono.iter().map(|(p, e)| (*p, e))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(Self {
            rank: self.rank,
            mono: self.mono.mul(&other.mono),
        })
    }

    pub fn inv(&self) -> Self {
        Self {
            rank: self.rank,
            mono: self.mono.inv(),
        }
    }

    pub fn pow(&self, n: i32) -> Self {
        Self {
            rank: self.rank,
            mono: self.mono.pow(n),
        }
    }

    /// Dominant: every exponent is positive. The identity is dominant.
    pub fn is_dominant(&self) -> bool {
        self.iter().all(|(_, e)| e > 0)
    }

    /// Anti-dominant: every exponent is negative. The identity is anti-dominant.
    pub fn is_antidominant(&self) -> bool {
        self.iter().all(|(_, e)| e < 0)
    }

    /// The classical weight: `Y_{i,k} -> omega_i`.
    pub fn wt(&self) -> WeightVector {
        let mut v = vec![0i64; self.rank as usize];
        for (p, e) in self.iter() {
            v[(p.i - 1) as usize] += e as i64;
        }
        WeightVector(v)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.iter().map(|(p, e)| json!([p.i, p.k, e])).collect())
    }
}

impl fmt::Display for LoopMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (idx, (p, e)) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "Y[{},{}]", p.i, p.k)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Mul for &LoopMonomial {
    type Output = LoopMonomial;
    fn mul(self, rhs: &LoopMonomial) -> LoopMonomial {
        self.try_mul(rhs).expect("rank mismatch in monomial product")
    }
}

impl Mul for LoopMonomial {
    type Output = LoopMonomial;
    fn mul(self, rhs: LoopMonomial) -> LoopMonomial {
        &self * &rhs
    }
}

/// A weight in the basis of fundamental weights `omega_1, ..., omega_l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: u32) -> Self {
        Self(vec![0; rank as usize])
    }

    /// The simple root `alpha_i = 2 omega_i - omega_{i-1} - omega_{i+1}`.
    pub fn simple_root(rank: u32, i: i32) -> Result<Self> {
        check_node(i, rank)?;
        let mut v = Self::zero(rank);
        let idx = (i - 1) as usize;
        v.0[idx] = 2;
        if idx > 0 {
            v.0[idx - 1] = -1;
        }
        if idx + 1 < v.0.len() {
            v.0[idx + 1] = -1;
        }
        Ok(v)
    }

    /// The simple reflection `s_i(w) = w - w_i alpha_i`.
    pub fn reflect(&self, i: i32) -> Result<Self> {
        let alpha = Self::simple_root(self.0.len() as u32, i)?;
        let c = self.0[(i - 1) as usize];
        Ok(Self(self.0.iter().zip(&alpha.0).map(|(w, a)| w - c * a).collect()))
    }

    /// Coordinates in the simple-root basis, if the weight lies in the root
    /// lattice. Uses the inverse Cartan matrix of `A_l`,
    /// `(C^-1)_{ij} = min(i, j) (l + 1 - max(i, j)) / (l + 1)`.
    pub fn root_coordinates(&self) -> Option<Vec<i64>> {
        let l = self.0.len() as i64;
        let mut out = Vec::with_capacity(self.0.len());
        for i in 1..=l {
            let mut num = 0i64;
            for j in 1..=l {
                num += i.min(j) * (l + 1 - i.max(j)) * self.0[(j - 1) as usize];
            }
            if num % (l + 1) != 0 {
                return None;
            }
            out.push(num / (l + 1));
        }
        Some(out)
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// The affine simple root
/// `A_{i,k} = Y_{i,k+1} Y_{i,k-1} prod_{|j-i|=1} Y_{j,k}^-1`.
pub fn affine_root(i: i32, k: i32, l: u32) -> Result<LoopMonomial> {
    check_rank(l)?;
    check_node(i, l)?;
    let mut triples = vec![(i, k + 1, 1), (i, k - 1, 1)];
    for j in [i - 1, i + 1] {
        if j >= 1 && j <= l as i32 {
            triples.push((j, k, -1));
        }
    }
    LoopMonomial::from_triples(l, triples)
}

/// Exponents `c_{j,s}` with `m = reference * prod A_{j,s}^{c_{j,s}}`, or
/// `None` if `m reference^-1` is not a product of affine roots.
///
/// The highest spectral exponent `kmax` in the remaining quotient can only be
/// produced by the roots `A_{i,kmax-1}`, so the exponents are forced level by
/// level from the top.
pub fn factor_into_roots(
    m: &LoopMonomial,
    reference: &LoopMonomial,
) -> Result<Option<BTreeMap<LatticePoint, i64>>> {
    let l = m.rank;
    let mut rest = m.try_mul(&reference.inv())?;
    let mut out: BTreeMap<LatticePoint, i64> = BTreeMap::new();
    let Some(kmin) = rest.iter().map(|(p, _)| p.k).min() else {
        return Ok(Some(out));
    };
    while let Some(kmax) = rest.iter().map(|(p, _)| p.k).max() {
        if kmax < kmin + 2 {
            return Ok(None);
        }
        let top: Vec<(LatticePoint, i32)> = rest.iter().filter(|(p, _)| p.k == kmax).collect();
        for (p, e) in top {
            let root = affine_root(p.i, kmax - 1, l)?;
            rest = rest.try_mul(&root.pow(-e))?;
            *out.entry(LatticePoint::new(p.i, kmax - 1)).or_default() += e as i64;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(Some(out))
}

/// An integer combination of loop monomials of a fixed rank: elements of
/// `Z[Y_{i,k}^{+-1}]`, where q-characters live.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopPolynomial {
    rank: u32,
    poly: Laurent<LatticePoint>,
}

impl LoopPolynomial {
    pub fn zero(rank: u32) -> Self {
        Self {
            rank,
            poly: Laurent::zero(),
        }
    }

    pub fn one(rank: u32) -> Self {
        Self {
            rank,
            poly: Laurent::one(),
        }
    }

    pub fn from_monomial(m: &LoopMonomial) -> Self {
        Self {
            rank: m.rank,
            poly: Laurent::from_monomial(m.mono.clone()),
        }
    }

    pub fn from_terms(rank: u32, terms: impl IntoIterator<Item = (LoopMonomial, BigInt)>) -> Result<Self> {
        let mut poly = Laurent::zero();
        for (m, c) in terms {
            if m.rank != rank {
                return Err(Error::RankMismatch(rank, m.rank));
            }
            poly.add_term(m.mono, c);
        }
        Ok(Self { rank, poly })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn coeff(&self, m: &LoopMonomial) -> BigInt {
        self.poly.coeff(&m.mono)
    }

    /// Terms sorted lexicographically by monomial.
    pub fn terms(&self) -> Vec<(LoopMonomial, BigInt)> {
        self.poly
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| (LoopMonomial::from_monomial(self.rank, m.clone()), c.clone()))
            .collect()
    }

    pub fn monomials(&self) -> impl Iterator<Item = LoopMonomial> + '_ {
        self.poly
            .iter()
            .map(|(m, _)| LoopMonomial::from_monomial(self.rank, m.clone()))
    }

    /// The specialisation `Y_{i,k} -> 1`: the sum of coefficients, i.e. the
    /// dimension for a q-character.
    pub fn eval_at_q1(&self) -> BigInt {
        self.poly.coeff_sum()
    }

    /// Whether every coefficient equals 1.
    pub fn is_thin(&self) -> bool {
        self.poly.iter().all(|(_, c)| c.is_one())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.poly.iter().all(|(_, c)| *c >= BigInt::from(0))
    }

    pub fn dominant_monomials(&self) -> Vec<LoopMonomial> {
        let mut v: Vec<_> = self.monomials().filter(|m| m.is_dominant()).collect();
        v.sort();
        v
    }

    pub fn antidominant_monomials(&self) -> Vec<LoopMonomial> {
        let mut v: Vec<_> = self.monomials().filter(|m| m.is_antidominant()).collect();
        v.sort();
        v
    }

    /// The weight multiplicity function: coefficient totals per classical
    /// weight.
    pub fn weight_multiplicities(&self) -> BTreeMap<WeightVector, BigInt> {
        let mut out: BTreeMap<WeightVector, BigInt> = BTreeMap::new();
        for (m, c) in self.poly.iter() {
            let w = LoopMonomial::from_monomial(self.rank, m.clone()).wt();
            *out.entry(w).or_default() += c;
        }
        out.retain(|_, c| *c != BigInt::from(0));
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            Err(Error::RankMismatch(self.rank, other.rank))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            rank: self.rank,
            poly: self.poly.add(&other.poly),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            rank: self.rank,
            poly: self.poly.sub(&other.poly),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            rank: self.rank,
            poly: self.poly.mul(&other.poly),
        })
    }

    pub fn mul_monomial(&self, m: &LoopMonomial) -> Result<Self> {
        if self.rank != m.rank {
            return Err(Error::RankMismatch(self.rank, m.rank));
        }
        Ok(Self {
            rank: self.rank,
            poly: self.poly.mul_monomial(&m.mono),
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        Self {
            rank: self.rank,
            poly: self.poly.pow(n),
        }
    }

    /// Exact quotient in `Z[Y^{+-1}]`, or `Ok(None)` if the division is not
    /// exact.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check(divisor)?;
        Ok(self.poly.div_exact(&divisor.poly).map(|poly| Self {
            rank: self.rank,
            poly,
        }))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .into_iter()
            .map(|(m, c)| {
                let coeff = match c.to_i64() {
                    Some(x) => json!(x),
                    None => json!(c.to_string()),
                };
                json!({ "coeff": coeff, "monomial": m.to_json() })
            })
            .collect();
        json!({ "rank": self.rank, "terms": terms })
    }
}

impl fmt::Display for LoopPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in terms.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let abs = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (m.is_one(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

macro_rules! poly_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr for &LoopPolynomial {
            type Output = LoopPolynomial;
            fn $m(self, rhs: &LoopPolynomial) -> LoopPolynomial {
                self.$try(rhs).expect("rank mismatch in polynomial arithmetic")
            }
        }
        impl $tr for LoopPolynomial {
            type Output = LoopPolynomial;
            fn $m(self, rhs: LoopPolynomial) -> LoopPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
poly_op!(Add, add, try_add);
poly_op!(Sub, sub, try_sub);
poly_op!(Mul, mul, try_mul);

impl Neg for &LoopPolynomial {
    type Output = LoopPolynomial;
    fn neg(self) -> LoopPolynomial {
        LoopPolynomial {
            rank: self.rank,
            poly: self.poly.neg(),
        }
    }
}

impl From<&LoopMonomial> for LoopPolynomial {
    fn from(m: &LoopMonomial) -> Self {
        Self::from_monomial(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(l: u32, t: &[(i32, i32, i32)]) -> LoopMonomial {
        LoopMonomial::from_triples(l, t.iter().copied()).unwrap()
    }

    #[test]
    fn affine_roots() {
        assert_eq!(affine_root(1, 1, 1).unwrap(), mono(1, &[(1, 2, 1), (1, 0, 1)]));
        assert_eq!(
            affine_root(1, 1, 2).unwrap(),
            mono(2, &[(1, 2, 1), (1, 0, 1), (2, 1, -1)])
        );
        assert_eq!(
            affine_root(2, 2, 3).unwrap(),
            mono(3, &[(2, 3, 1), (2, 1, 1), (1, 2, -1), (3, 2, -1)])
        );
        assert!(matches!(affine_root(3, 0, 2), Err(Error::NodeOutOfRange { .. })));
    }

    #[test]
    fn weights() {
        assert_eq!(LoopMonomial::one(3).wt(), WeightVector::zero(3));
        assert_eq!(mono(3, &[(1, 0, 1), (1, 2, 1)]).wt(), WeightVector(vec![2, 0, 0]));
        for l in 1..=5u32 {
            for i in 1..=l as i32 {
                assert_eq!(
                    affine_root(i, 7, l).unwrap().wt(),
                    WeightVector::simple_root(l, i).unwrap()
                );
            }
        }
    }

    #[test]
    fn dominance() {
        assert!(mono(2, &[(1, 0, 1)]).is_dominant());
        assert!(!mono(2, &[(1, 0, 1), (2, 3, -1)]).is_dominant());
        assert!(LoopMonomial::one(2).is_dominant());
        assert!(LoopMonomial::one(2).is_antidominant());
    }

    #[test]
    fn root_factorization() {
        let r = mono(1, &[(1, 0, 1)]);
        assert_eq!(factor_into_roots(&r, &r).unwrap(), Some(BTreeMap::new()));
        let m = mono(1, &[(1, 2, -1)]);
        let expected = BTreeMap::from([(LatticePoint::new(1, 1), -1)]);
        assert_eq!(factor_into_roots(&m, &r).unwrap(), Some(expected));
        let m = mono(2, &[(2, 1, 1)]);
        assert_eq!(factor_into_roots(&m, &mono(2, &[(1, 0, 1)])).unwrap(), None);
        assert!(factor_into_roots(&mono(1, &[]), &mono(2, &[])).is_err());
    }

    #[test]
    fn rendering() {
        let m = mono(2, &[(2, 3, -1), (1, 0, 1), (1, 2, 2)]);
        assert_eq!(m.to_string(), "Y[1,0]*Y[1,2]^2*Y[2,3]^-1");
        assert_eq!(LoopMonomial::one(2).to_string(), "1");
        let p = LoopPolynomial::from(&mono(1, &[(1, 0, 1)]))
            + LoopPolynomial::from(&mono(1, &[(1, 2, -1)]));
        assert_eq!(p.to_string(), "Y[1,0] + Y[1,2]^-1");
        assert_eq!(p.eval_at_q1(), BigInt::from(2));
        assert_eq!(
            p.to_json(),
            json!({"rank": 1, "terms": [
                {"coeff": 1, "monomial": [[1, 0, 1]]},
                {"coeff": 1, "monomial": [[1, 2, -1]]}
            ]})
        );
    }

    #[test]
    fn rank_mismatch() {
        let a = LoopPolynomial::one(1);
        let b = LoopPolynomial::one(2);
        assert_eq!(a.try_mul(&b), Err(Error::RankMismatch(1, 2)));
        assert!(mono(1, &[]).try_mul(&mono(2, &[])).is_err());
    }

    #[test]
    fn root_coordinates() {
        let a2 = WeightVector::simple_root(3, 2).unwrap();
        assert_eq!(a2.root_coordinates(), Some(vec![0, 1, 0]));
        assert_eq!(WeightVector(vec![1, 0]).root_coordinates(), None);
    }

    const L: u32 = 3;

    fn arb_mono() -> impl Strategy<Value = LoopMonomial> {
        prop::collection::vec((1..=L as i32, -4i32..=4, -2i32..=2), 0..4)
            .prop_map(|t| LoopMonomial::from_triples(L, t).unwrap())
    }

    fn arb_poly() -> impl Strategy<Value = LoopPolynomial> {
        prop::collection::vec((arb_mono(), -3i64..=3), 0..4).prop_map(|t| {
            LoopPolynomial::from_terms(L, t.into_iter().map(|(m, c)| (m, BigInt::from(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn wt_is_homomorphism(a in arb_mono(), b in arb_mono()) {
            prop_assert_eq!((&a * &b).wt(), &a.wt() + &b.wt());
            prop_assert!((&a * &a.inv()).is_one());
        }

        #[test]
        fn polynomial_ring(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn factorization_reconstructs(
            reference in arb_mono(),
            roots in prop::collection::vec((1..=L as i32, -3i32..=3, -2i32..=2), 0..5),
        ) {
            let mut m = reference.clone();
            for (i, k, e) in &roots {
                m = &m * &affine_root(*i, *k, L).unwrap().pow(*e);
            }
            let c = factor_into_roots(&m, &reference).unwrap().expect("product of roots");
            let mut rebuilt = reference.clone();
            for (p, e) in &c {
                rebuilt = &rebuilt * &affine_root(p.i, p.k, L).unwrap().pow(*e as i32);
            }
            prop_assert_eq!(&rebuilt, &m);
            if c.values().all(|e| *e >= 0) {
                let diff = &m.wt() - &reference.wt();
                let coords = diff.root_coordinates().expect("root lattice");
                prop_assert!(coords.iter().all(|x| *x >= 0));
            }
        }
    }
}
