//! Snakes: sequences of lattice points whose products of fundamental
//! loop-weights are the highest loop-weights of snake modules.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::loopalg::{LatticePoint, LoopMonomial};

/// `b` is in snake position with respect to `a`: `k' - k >= |i' - i| + 2`.
pub fn in_snake_position(a: LatticePoint, b: LatticePoint) -> bool {
    b.k - a.k >= (b.i - a.i).abs() + 2
}

/// Snake position with equality in the lower bound.
pub fn in_minimal_snake_position(a: LatticePoint, b: LatticePoint) -> bool {
    b.k - a.k == (b.i - a.i).abs() + 2
}

/// Snake position that also satisfies `k' - k <= min(i + i', 2l + 2 - i - i')`.
pub fn in_prime_snake_position(a: LatticePoint, b: LatticePoint, l: u32) -> bool {
    let upper = (a.i + b.i).min(2 * l as i32 + 2 - a.i - b.i);
    in_snake_position(a, b) && b.k - a.k <= upper
}

/// Checks that the points are valid nodes for rank `l` and share one parity
/// class of `i - k`.
fn validate_points(points: &[LatticePoint], l: u32) -> Result<()> {
    if l == 0 {
        return Err(Error::ZeroRank);
    }
    for p in points {
        if p.i < 1 || p.i > l as i32 {
            return Err(Error::NodeOutOfRange { i: p.i, rank: l });
        }
    }
    if let Some(first) = points.first() {
        if let Some(bad) = points.iter().find(|p| p.parity() != first.parity()) {
            return Err(Error::MixedParity(*bad));
        }
    }
    Ok(())
}

fn all_pairs(points: &[LatticePoint], pred: impl Fn(LatticePoint, LatticePoint) -> bool) -> bool {
    points.windows(2).all(|w| pred(w[0], w[1]))
}

pub fn is_snake(points: &[LatticePoint], l: u32) -> Result<bool> {
    validate_points(points, l)?;
    Ok(all_pairs(points, in_snake_position))
}

pub fn is_minimal_snake(points: &[LatticePoint], l: u32) -> Result<bool> {
    validate_points(points, l)?;
    Ok(all_pairs(points, in_minimal_snake_position))
}

pub fn is_prime_snake(points: &[LatticePoint], l: u32) -> Result<bool> {
    validate_points(points, l)?;
    Ok(all_pairs(points, |a, b| in_prime_snake_position(a, b, l)))
}

/// A validated snake of rank `l`. The empty snake stands for the trivial
/// module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Snake {
    rank: u32,
    points: Vec<LatticePoint>,
}

impl Snake {
    pub fn new(points: Vec<LatticePoint>, l: u32) -> Result<Self> {
        validate_points(&points, l)?;
        if let Some(w) = points.windows(2).find(|w| !in_snake_position(w[0], w[1])) {
            return Err(Error::NotSnake(w[0], w[1]));
        }
        Ok(Self { rank: l, points })
    }

    pub fn from_pairs(pairs: &[(i32, i32)], l: u32) -> Result<Self> {
        Self::new(pairs.iter().map(|&(i, k)| LatticePoint::new(i, k)).collect(), l)
    }

    pub fn empty(l: u32) -> Self {
        Self {
            rank: l,
            points: Vec::new(),
        }
    }

    /// Parses the text form `i:k,i:k,...`; an empty string is the empty
    /// snake.
    pub fn parse(text: &str, l: u32) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty(l));
        }
        let mut points = Vec::new();
        for item in text.split(',') {
            let (i, k) = item
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected i:k, got {item:?}")))?;
            let parse = |s: &str| {
                i32::from_str(s.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
            };
            points.push(LatticePoint::new(parse(i)?, parse(k)?));
        }
        Self::new(points, l)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_minimal(&self) -> bool {
        all_pairs(&self.points, in_minimal_snake_position)
    }

    pub fn is_prime(&self) -> bool {
        all_pairs(&self.points, |a, b| in_prime_snake_position(a, b, self.rank))
    }

    /// The contiguous sub-snake `points[from..to]`.
    pub fn slice(&self, from: usize, to: usize) -> Self {
        Self {
            rank: self.rank,
            points: self.points[from..to].to_vec(),
        }
    }

    /// `prod_t Y_{i_t,k_t}`.
    pub fn highest_weight(&self) -> LoopMonomial {
        LoopMonomial::from_triples(self.rank, self.points.iter().map(|p| (p.i, p.k, 1)))
            .expect("snake points are valid nodes")
    }

    /// The mirror image under the diagram flip `i -> l + 1 - i`.
    pub fn flipped(&self) -> Self {
        let l = self.rank as i32;
        Self {
            rank: self.rank,
            points: self
                .points
                .iter()
                .map(|p| LatticePoint::new(l + 1 - p.i, p.k))
                .collect(),
        }
    }
}

impl fmt::Display for Snake {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.points.iter().map(|p| format!("{}:{}", p.i, p.k)).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The highest loop-weight `Y_{i,k} Y_{i,k+2} ... Y_{i,k+2r-2}` of the
/// Kirillov-Reshetikhin module `W_i^{(r)}(q^k)`.
pub fn kr_highest_weight(i: i32, k: i32, r: u32, l: u32) -> Result<LoopMonomial> {
    LoopMonomial::from_triples(l, (0..r as i32).map(|j| (i, k + 2 * j, 1)))
}

/// The straight snake `(i,k), (i,k+2), ..., (i,k+2r-2)`.
pub fn snake_of_kr(i: i32, k: i32, r: u32, l: u32) -> Result<Snake> {
    Snake::new(
        (0..r as i32).map(|j| LatticePoint::new(i, k + 2 * j)).collect(),
        l,
    )
}

fn halve(x: i32) -> i32 {
    assert!(x % 2 == 0, "neighbouring point with half-integer coordinate");
    x / 2
}

/// The neighbouring points of two successive points of a prime snake.
pub fn neighbouring_points(
    a: LatticePoint,
    b: LatticePoint,
    l: u32,
) -> (Option<LatticePoint>, Option<LatticePoint>) {
    let (i, k, ip, kp) = (a.i, a.k, b.i, b.k);
    let l = l as i32;
    let x = (k + i > kp - ip)
        .then(|| LatticePoint::new(halve(i + k + ip - kp), halve(i + k - ip + kp)));
    let y = (k + l + 1 - i > kp - l - 1 + ip)
        .then(|| LatticePoint::new(halve(ip + kp + i - k), halve(ip + kp - i + k)));
    (x, y)
}

/// The neighbouring snakes of a prime snake of length at least 2, formed by
/// concatenating the neighbouring points of successive pairs in order.
pub fn neighbouring_snakes(s: &Snake) -> Result<(Snake, Snake)> {
    if s.len() < 2 {
        return Err(Error::SnakeTooShort(s.len(), 2));
    }
    if let Some(w) = s
        .points
        .windows(2)
        .find(|w| !in_prime_snake_position(w[0], w[1], s.rank))
    {
        return Err(Error::NotPrimeSnake(w[0], w[1]));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for w in s.points.windows(2) {
        let (x, y) = neighbouring_points(w[0], w[1], s.rank);
        xs.extend(x);
        ys.extend(y);
    }
    Ok((Snake::new(xs, s.rank)?, Snake::new(ys, s.rank)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(p: &[(i32, i32)]) -> Vec<LatticePoint> {
        p.iter().map(|&(i, k)| LatticePoint::new(i, k)).collect()
    }

    #[test]
    fn predicates() {
        let s = pts(&[(1, 0), (1, 2)]);
        assert!(is_snake(&s, 2).unwrap());
        assert!(is_minimal_snake(&s, 2).unwrap());
        assert!(is_prime_snake(&s, 2).unwrap());

        let s = pts(&[(1, 0), (1, 6)]);
        assert!(is_snake(&s, 2).unwrap());
        assert!(!is_minimal_snake(&s, 2).unwrap());
        assert!(!is_prime_snake(&s, 2).unwrap());

        let s = pts(&[(2, 0)]);
        assert!(is_snake(&s, 3).unwrap());
        assert!(is_minimal_snake(&s, 3).unwrap());
        assert!(is_prime_snake(&s, 3).unwrap());
    }

    #[test]
    fn rejects_bad_points() {
        assert!(matches!(
            is_snake(&pts(&[(1, 0), (1, 3)]), 2),
            Err(Error::MixedParity(_))
        ));
        assert!(matches!(
            is_snake(&pts(&[(3, 0)]), 2),
            Err(Error::NodeOutOfRange { .. })
        ));
        assert!(matches!(
            Snake::from_pairs(&[(1, 0), (1, 0)], 2),
            Err(Error::NotSnake(..))
        ));
    }

    #[test]
    fn kr_weights() {
        assert!(kr_highest_weight(1, 0, 0, 1).unwrap().is_one());
        assert_eq!(
            kr_highest_weight(1, -1, 2, 1).unwrap(),
            LoopMonomial::from_triples(1, [(1, -1, 1), (1, 1, 1)]).unwrap()
        );
        assert_eq!(
            kr_highest_weight(2, 0, 3, 3).unwrap(),
            LoopMonomial::from_triples(3, [(2, 0, 1), (2, 2, 1), (2, 4, 1)]).unwrap()
        );
        assert_eq!(snake_of_kr(1, 0, 3, 1).unwrap().points(), &pts(&[(1, 0), (1, 2), (1, 4)])[..]);
        for l in 1..=4 {
            for i in 1..=l as i32 {
                for r in 0..=4 {
                    assert!(snake_of_kr(i, i % 2, r, l).unwrap().is_prime());
                }
            }
        }
    }

    #[test]
    fn neighbours() {
        let s = Snake::from_pairs(&[(1, 0), (1, 2)], 2).unwrap();
        let (x, y) = neighbouring_snakes(&s).unwrap();
        assert!(x.is_empty());
        assert_eq!(y.points(), &pts(&[(2, 1)])[..]);

        let s = Snake::from_pairs(&[(1, 0), (1, 2)], 1).unwrap();
        let (x, y) = neighbouring_snakes(&s).unwrap();
        assert!(x.is_empty() && y.is_empty());

        // Straight snake on the middle node of A_3: both neighbours present.
        let s = Snake::from_pairs(&[(2, 0), (2, 2)], 3).unwrap();
        let (x, y) = neighbouring_snakes(&s).unwrap();
        assert_eq!(x.points(), &pts(&[(1, 1)])[..]);
        assert_eq!(y.points(), &pts(&[(3, 1)])[..]);

        assert!(matches!(
            neighbouring_snakes(&Snake::from_pairs(&[(1, 0)], 2).unwrap()),
            Err(Error::SnakeTooShort(1, 2))
        ));
        assert!(matches!(
            neighbouring_snakes(&Snake::from_pairs(&[(1, 0), (1, 6)], 2).unwrap()),
            Err(Error::NotPrimeSnake(..))
        ));
    }

    #[test]
    fn text_round_trip() {
        let s = Snake::parse("1:0, 2:3,1:6", 2).unwrap();
        assert_eq!(s.points(), &pts(&[(1, 0), (2, 3), (1, 6)])[..]);
        assert_eq!(s.to_string(), "1:0,2:3,1:6");
        assert!(Snake::parse("", 2).unwrap().is_empty());
        assert!(matches!(Snake::parse("1-0", 2), Err(Error::Parse(_))));
    }
}
