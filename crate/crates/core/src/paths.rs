//! The path model of type `A_l`: lattice paths with corners, the monomial of a
//! path, raising and lowering moves, and q-characters of snake modules as sums
//! over non-overlapping tuples of paths.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::loopalg::{LatticePoint, LoopMonomial, LoopPolynomial};
use crate::snakes::Snake;

/// A path in `P_{i,k}`: heights `y_0, ..., y_{l+1}` with `y_0 = i + k`,
/// `y_{l+1} = l + 1 - i + k` and unit steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    origin: LatticePoint,
    rank: u32,
    heights: Vec<i32>,
}

impl Path {
    /// Validates a height sequence as an element of `P_{i,k}` for rank `l`.
    pub fn new(origin: LatticePoint, l: u32, heights: Vec<i32>) -> Result<Self> {
        let (i, k, li) = (origin.i, origin.k, l as i32);
        if i < 1 || i > li {
            return Err(Error::NodeOutOfRange { i, rank: l });
        }
        let ok = heights.len() == l as usize + 2
            && heights[0] == i + k
            && heights[l as usize + 1] == li + 1 - i + k
            && heights.windows(2).all(|w| (w[1] - w[0]).abs() == 1);
        if !ok {
            return Err(Error::Invalid(format!(
                "heights {heights:?} do not form a path in P_{{{i},{k}}} for rank {l}"
            )));
        }
        Ok(Self {
            origin,
            rank: l,
            heights,
        })
    }

    pub fn origin(&self) -> LatticePoint {
        self.origin
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn heights(&self) -> &[i32] {
        &self.heights
    }

    /// The upper corners `C^+` (interior local minima of the height sequence)
    /// and lower corners `C^-` (interior local maxima), as points `(j, y_j)`.
    pub fn corners(&self) -> (Vec<LatticePoint>, Vec<LatticePoint>) {
        let y = &self.heights;
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        for j in 1..=self.rank as usize {
            if y[j - 1] == y[j] + 1 && y[j + 1] == y[j] + 1 {
                upper.push(LatticePoint::new(j as i32, y[j]));
            } else if y[j - 1] == y[j] - 1 && y[j + 1] == y[j] - 1 {
                lower.push(LatticePoint::new(j as i32, y[j]));
            }
        }
        (upper, lower)
    }

    /// `prod_{C^+} Y_{a,b} prod_{C^-} Y_{a,b}^-1`.
    pub fn monomial(&self) -> LoopMonomial {
        let (upper, lower) = self.corners();
        let triples = upper
            .iter()
            .map(|p| (p.i, p.k, 1))
            .chain(lower.iter().map(|p| (p.i, p.k, -1)));
        LoopMonomial::from_triples(self.rank, triples).expect("corner columns are nodes")
    }

    fn is_upper_corner(&self, a: i32, b: i32) -> bool {
        let y = &self.heights;
        let a = a as usize;
        a >= 1 && a <= self.rank as usize && y[a] == b && y[a - 1] == b + 1 && y[a + 1] == b + 1
    }

    fn is_lower_corner(&self, a: i32, b: i32) -> bool {
        let y = &self.heights;
        let a = a as usize;
        a >= 1 && a <= self.rank as usize && y[a] == b && y[a - 1] == b - 1 && y[a + 1] == b - 1
    }

    fn with_height(&self, a: i32, delta: i32) -> Self {
        let mut heights = self.heights.clone();
        heights[a as usize] += delta;
        Self {
            origin: self.origin,
            rank: self.rank,
            heights,
        }
    }

    /// The lowering move at `(a, b)`: turns the upper corner `(a, b-1)` into
    /// the lower corner `(a, b+1)`. Multiplies the monomial by `A_{a,b}^-1`.
    pub fn lower_move(&self, at: LatticePoint) -> Option<Self> {
        self.is_upper_corner(at.i, at.k - 1)
            .then(|| self.with_height(at.i, 2))
    }

    /// The raising move at `(a, b)`: turns the lower corner `(a, b+1)` into
    /// the upper corner `(a, b-1)`. Multiplies the monomial by `A_{a,b}`.
    pub fn raise_move(&self, at: LatticePoint) -> Option<Self> {
        self.is_lower_corner(at.i, at.k + 1)
            .then(|| self.with_height(at.i, -2))
    }

    /// `self` lies strictly above `other`: smaller height in every column.
    pub fn is_strictly_above(&self, other: &Path) -> bool {
        self.heights.iter().zip(&other.heights).all(|(a, b)| a < b)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.heights.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", h.join(","))
    }
}

type PathMemo = RwLock<HashMap<(i32, i32, u32), Arc<Vec<Path>>>>;

fn memo() -> &'static PathMemo {
    static MEMO: OnceLock<PathMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn generate(origin: LatticePoint, l: u32) -> Vec<Path> {
    let len = l as usize + 2;
    let target = l as i32 + 1 - origin.i + origin.k;
    let mut out = Vec::new();
    let mut heights = vec![origin.i + origin.k];
    fn rec(heights: &mut Vec<i32>, len: usize, target: i32, out: &mut Vec<Vec<i32>>) {
        let last = *heights.last().expect("nonempty");
        let remaining = (len - heights.len()) as i32;
        if remaining == 0 {
            if last == target {
                out.push(heights.clone());
            }
            return;
        }
        for step in [-1, 1] {
            let next = last + step;
            if (target - next).abs() < remaining {
                heights.push(next);
                rec(heights, len, target, out);
                heights.pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec(&mut heights, len, target, &mut raw);
    for h in raw {
        out.push(Path {
            origin,
            rank: l,
            heights: h,
        });
    }
    out.sort();
    out
}

/// All paths of `P_{i,k}` for rank `l`, sorted by height sequence. There are
/// `binomial(l + 1, i)` of them.
pub fn enumerate_paths(i: i32, k: i32, l: u32) -> Result<Arc<Vec<Path>>> {
    if l == 0 {
        return Err(Error::ZeroRank);
    }
    if i < 1 || i > l as i32 {
        return Err(Error::NodeOutOfRange { i, rank: l });
    }
    let key = (i, k, l);
    if let Some(found) = memo().read().expect("path memo poisoned").get(&key) {
        return Ok(found.clone());
    }
    let paths = Arc::new(generate(LatticePoint::new(i, k), l));
    let mut guard = memo().write().expect("path memo poisoned");
    Ok(guard.entry(key).or_insert(paths).clone())
}

/// A tuple of paths, one per snake point, each strictly above the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTuple {
    pub paths: Vec<Path>,
}

impl PathTuple {
    pub fn is_non_overlapping(&self) -> bool {
        self.paths.windows(2).all(|w| w[0].is_strictly_above(&w[1]))
    }

    pub fn monomial(&self, l: u32) -> LoopMonomial {
        self.paths
            .iter()
            .fold(LoopMonomial::one(l), |acc, p| &acc * &p.monomial())
    }
}

fn path_sets(s: &Snake) -> Result<Vec<Arc<Vec<Path>>>> {
    s.points()
        .iter()
        .map(|p| enumerate_paths(p.i, p.k, s.rank()))
        .collect()
}

/// Depth-first walk over non-overlapping tuples. Non-overlap is checked only
/// between neighbours in the tuple, which suffices because "strictly above"
/// is transitive.
fn walk<'a>(
    sets: &'a [Arc<Vec<Path>>],
    chosen: &mut Vec<&'a Path>,
    visit: &mut dyn FnMut(&[&'a Path]),
) {
    let t = chosen.len();
    if t == sets.len() {
        visit(chosen);
        return;
    }
    for p in sets[t].iter() {
        if chosen.last().is_none_or(|prev| prev.is_strictly_above(p)) {
            chosen.push(p);
            walk(sets, chosen, visit);
            chosen.pop();
        }
    }
}

/// All non-overlapping path tuples of a snake.
pub fn path_tuples(s: &Snake) -> Result<Vec<PathTuple>> {
    let sets = path_sets(s)?;
    let mut out = Vec::new();
    walk(&sets, &mut Vec::new(), &mut |ps| {
        out.push(PathTuple {
            paths: ps.iter().map(|p| (*p).clone()).collect(),
        })
    });
    Ok(out)
}

/// The q-character of the snake module of `s`: the sum over non-overlapping
/// path tuples of the product of path monomials. The empty snake gives 1.
pub fn q_character(s: &Snake) -> Result<LoopPolynomial> {
    let l = s.rank();
    let sets = path_sets(s)?;
    let monos: Vec<HashMap<&Path, LoopMonomial>> = sets
        .iter()
        .map(|set| set.iter().map(|p| (p, p.monomial())).collect())
        .collect();
    let mut terms: Vec<(LoopMonomial, BigInt)> = Vec::new();
    walk(&sets, &mut Vec::new(), &mut |ps| {
        let m = ps
            .iter()
            .enumerate()
            .fold(LoopMonomial::one(l), |acc, (t, p)| &acc * &monos[t][*p]);
        terms.push((m, BigInt::one()));
    });
    LoopPolynomial::from_terms(l, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(l: u32, t: &[(i32, i32, i32)]) -> LoopMonomial {
        LoopMonomial::from_triples(l, t.iter().copied()).unwrap()
    }

    fn poly(l: u32, ms: &[&[(i32, i32, i32)]]) -> LoopPolynomial {
        LoopPolynomial::from_terms(l, ms.iter().map(|t| (mono(l, t), BigInt::one()))).unwrap()
    }

    #[test]
    fn path_counts() {
        assert_eq!(enumerate_paths(1, 0, 1).unwrap().len(), 2);
        assert_eq!(enumerate_paths(1, 0, 2).unwrap().len(), 3);
        assert_eq!(enumerate_paths(2, 0, 3).unwrap().len(), 6);
    }

    #[test]
    fn corners_and_monomials() {
        let o = LatticePoint::new(2, 0);
        let p = Path::new(o, 3, vec![2, 1, 0, 1, 2]).unwrap();
        assert_eq!(p.corners(), (vec![LatticePoint::new(2, 0)], vec![]));
        assert_eq!(p.monomial(), mono(3, &[(2, 0, 1)]));

        let p = Path::new(LatticePoint::new(1, 0), 1, vec![1, 2, 1]).unwrap();
        assert_eq!(p.corners(), (vec![], vec![LatticePoint::new(1, 2)]));
        assert_eq!(p.monomial(), mono(1, &[(1, 2, -1)]));

        let p = Path::new(LatticePoint::new(1, 0), 2, vec![1, 2, 1, 2]).unwrap();
        assert_eq!(p.monomial(), mono(2, &[(2, 1, 1), (1, 2, -1)]));

        assert!(Path::new(o, 3, vec![2, 1, 0, 1, 3]).is_err());
    }

    #[test]
    fn moves() {
        let top = Path::new(LatticePoint::new(1, 0), 1, vec![1, 0, 1]).unwrap();
        let at = LatticePoint::new(1, 1);
        let lowered = top.lower_move(at).unwrap();
        assert_eq!(lowered.monomial(), mono(1, &[(1, 2, -1)]));
        assert_eq!(lowered.raise_move(at), Some(top.clone()));
        assert_eq!(top.lower_move(LatticePoint::new(1, 3)), None);
        assert_eq!(top.raise_move(at), None);
    }

    #[test]
    fn fundamental_characters() {
        for k in [-3, 1, 5] {
            let s = Snake::from_pairs(&[(1, k)], 1).unwrap();
            assert_eq!(
                q_character(&s).unwrap(),
                poly(1, &[&[(1, k, 1)], &[(1, k + 2, -1)]])
            );
        }
        let s = Snake::from_pairs(&[(1, 0)], 2).unwrap();
        assert_eq!(
            q_character(&s).unwrap(),
            poly(2, &[&[(1, 0, 1)], &[(1, 2, -1), (2, 1, 1)], &[(2, 3, -1)]])
        );
    }

    #[test]
    fn kr_character_sl2() {
        let s = Snake::from_pairs(&[(1, 0), (1, 2)], 1).unwrap();
        assert_eq!(
            q_character(&s).unwrap(),
            poly(
                1,
                &[
                    &[(1, 0, 1), (1, 2, 1)],
                    &[(1, 0, 1), (1, 4, -1)],
                    &[(1, 2, -1), (1, 4, -1)]
                ]
            )
        );
        assert_eq!(path_tuples(&s).unwrap().len(), 3);
        assert!(path_tuples(&s).unwrap().iter().all(|t| t.is_non_overlapping()));
    }

    #[test]
    fn empty_snake_is_unit() {
        assert_eq!(q_character(&Snake::empty(3)).unwrap(), LoopPolynomial::one(3));
    }
}
