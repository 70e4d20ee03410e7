//! Brute force, kept independent of the symbolic pipeline: exhaustive search
//! for equal power sums over bounded multisets, and verification by direct
//! integer summation.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pair::{DegreeClass, PowerSumPair};
use crate::rational::Rational;

/// Default ceiling on join work (candidate same-key pairs) for [`search`].
pub const DEFAULT_CEILING: u128 = 100_000_000;

/// Sides held in memory per pass, on average.
const SIDES_PER_PASS: u128 = 500_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub degrees: BTreeSet<u32>,
    /// Bound on `|entry|`; zero entries are never used.
    pub height: u32,
    pub side_len: usize,
    /// Allow negative entries.
    pub signed: bool,
    pub ceiling: u128,
}

impl SearchSpec {
    /// Six entries per side; signed unless every degree is even.
    pub fn new<D: IntoIterator<Item = u32>>(degrees: D, height: u32) -> Result<Self> {
        let degrees: BTreeSet<u32> = degrees.into_iter().collect();
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidInput("degrees must be a nonempty set of positive integers".into()));
        }
        if height == 0 {
            return Err(Error::InvalidInput("height must be at least 1".into()));
        }
        let signed = degrees.iter().any(|k| k % 2 == 1);
        Ok(SearchSpec { degrees, height, side_len: 6, signed, ceiling: DEFAULT_CEILING })
    }

    pub fn with_side_len(mut self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("side length must be at least 1".into()));
        }
        self.side_len = n;
        Ok(self)
    }

    pub fn with_signed(mut self, signed: bool) -> Self {
        self.signed = signed;
        self
    }

    pub fn with_ceiling(mut self, ceiling: u128) -> Self {
        self.ceiling = ceiling;
        self
    }
}

/// A search split into passes over disjoint ranges of the leading power sum
/// (the one for the largest degree). Each pass re-enumerates the sides whose
/// leading sum falls in its range, groups them by their full key, and joins
/// within groups.
#[derive(Debug, Clone)]
pub struct SearchPlan {
    spec: SearchSpec,
    values: Vec<i64>,
    /// `powers[d][i] = values[i]^degree_d`, largest degree first.
    powers: Vec<Vec<i128>>,
    suffix_min: Vec<i128>,
    suffix_max: Vec<i128>,
    lo: i128,
    hi: i128,
    passes: usize,
}

/// One pass: sides sorted by (key, values).
struct Pass {
    len: usize,
    width: usize,
    values: Vec<i64>,
    keys: Vec<i128>,
    masks: Option<Vec<u128>>,
    order: Vec<u32>,
}

impl Pass {
    fn key(&self, i: usize) -> &[i128] {
        &self.keys[i * self.width..(i + 1) * self.width]
    }

    fn side(&self, i: usize) -> &[i64] {
        &self.values[i * self.len..(i + 1) * self.len]
    }

    /// Ranges of `order` with equal keys.
    fn groups(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for pos in 1..=self.order.len() {
            if pos == self.order.len()
                || self.key(self.order[pos] as usize) != self.key(self.order[start] as usize)
            {
                if pos - start > 1 {
                    out.push((start, pos));
                }
                start = pos;
            }
        }
        out
    }

    fn work(&self) -> u128 {
        self.groups().iter().map(|(a, b)| pairs((b - a) as u128)).sum()
    }

    fn disjoint(&self, i: usize, j: usize) -> bool {
        match &self.masks {
            Some(m) => m[i] & m[j] == 0,
            None => sorted_disjoint(self.side(i), self.side(j)),
        }
    }
}

fn pairs(n: u128) -> u128 {
    n * n.saturating_sub(1) / 2
}

/// [`canonicalize`](crate::canonicalize) on machine-integer sides: the same
/// rules without big-integer arithmetic, so raw matches can be deduplicated
/// cheaply. Entries are bounded by the search height, far from overflow.
fn canonical_small(l: &[i64], r: &[i64], class: DegreeClass) -> (Vec<i64>, Vec<i64>) {
    let g = l.iter().chain(r).fold(0i64, |g, x| g.gcd(x));
    let norm = |xs: &[i64]| xs.iter().filter(|x| **x != 0).map(|x| x / g.max(1)).collect::<Vec<_>>();
    let (mut lhs, mut rhs) = (norm(l), norm(r));
    match class {
        DegreeClass::AllEven => lhs.iter_mut().chain(rhs.iter_mut()).for_each(|x| *x = x.abs()),
        DegreeClass::AllOdd => {
            let (lp, ln): (Vec<i64>, Vec<i64>) = lhs.into_iter().partition(|x| *x > 0);
            let (rp, rn): (Vec<i64>, Vec<i64>) = rhs.into_iter().partition(|x| *x > 0);
            lhs = lp.into_iter().chain(rn.into_iter().map(|x| -x)).collect();
            rhs = rp.into_iter().chain(ln.into_iter().map(|x| -x)).collect();
        }
        DegreeClass::Mixed => {
            let max = lhs.iter().chain(&rhs).map(|x| x.abs()).max();
            if max.is_some_and(|m| !lhs.iter().chain(&rhs).any(|x| *x == m)) {
                lhs.iter_mut().chain(rhs.iter_mut()).for_each(|x| *x = -*x);
            }
        }
    }
    // Larger magnitude first, positive first on ties.
    let key = |x: &i64| (x.abs(), *x > 0);
    lhs.sort_by_key(|x| core::cmp::Reverse(key(x)));
    rhs.sort_by_key(|x| core::cmp::Reverse(key(x)));
    let side_less = lhs.iter().map(key).cmp(rhs.iter().map(key)) == Ordering::Less;
    if side_less {
        core::mem::swap(&mut lhs, &mut rhs);
    }
    (lhs, rhs)
}

fn sorted_disjoint(a: &[i64], b: &[i64]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => return false,
        }
    }
    true
}

impl SearchPlan {
    pub fn new(spec: &SearchSpec) -> Result<Self> {
        let h = i64::from(spec.height);
        let values: Vec<i64> = if spec.signed { (-h..=-1).chain(1..=h).collect() } else { (1..=h).collect() };
        let s = i128::try_from(spec.side_len).map_err(|_| Error::KeyOverflow)?;
        let mut powers = Vec::new();
        for &k in spec.degrees.iter().rev() {
            let row = values
                .iter()
                .map(|&v| {
                    let p = i128::from(v).checked_pow(k).ok_or(Error::KeyOverflow)?;
                    p.checked_mul(s).ok_or(Error::KeyOverflow)?;
                    Ok(p)
                })
                .collect::<Result<Vec<i128>>>()?;
            powers.push(row);
        }
        let lead = &powers[0];
        let n = values.len();
        let mut suffix_min = vec![i128::MAX; n + 1];
        let mut suffix_max = vec![i128::MIN; n + 1];
        for i in (0..n).rev() {
            suffix_min[i] = suffix_min[i + 1].min(lead[i]);
            suffix_max[i] = suffix_max[i + 1].max(lead[i]);
        }
        let lo = suffix_min[0] * s;
        let hi = suffix_max[0] * s;
        let mut plan =
            SearchPlan { spec: spec.clone(), values, powers, suffix_min, suffix_max, lo, hi, passes: 1 };
        let sides = plan.side_count();
        plan.passes = usize::try_from((2 * sides / SIDES_PER_PASS + 1).min(4096)).unwrap_or(4096);
        Ok(plan)
    }

    /// Uses at least `n` passes (so `n` workers all get a share).
    pub fn with_min_passes(mut self, n: usize) -> Self {
        self.passes = self.passes.max(n).max(1);
        self
    }

    pub fn spec(&self) -> &SearchSpec {
        &self.spec
    }

    pub fn passes(&self) -> usize {
        self.passes
    }

    /// Number of multisets of `side_len` admissible entries.
    pub fn side_count(&self) -> u128 {
        let n = self.values.len() as u128;
        let s = self.spec.side_len as u128;
        // C(n + s − 1, s), exact at every step.
        (1..=s).fold(1u128, |acc, i| acc.saturating_mul(n + i - 1) / i)
    }

    /// Inclusive range of leading sums handled by `pass`.
    fn range(&self, pass: usize) -> (i128, i128) {
        let span = self.hi - self.lo + 1;
        let p = self.passes as i128;
        let width = (span + p - 1) / p;
        let a = self.lo + width * pass as i128;
        (a, (a + width - 1).min(self.hi))
    }

    fn build(&self, pass: usize) -> Pass {
        let (lo, hi) = self.range(pass);
        let len = self.spec.side_len;
        let width = self.powers.len();
        let mut out = Pass {
            len,
            width,
            values: Vec::new(),
            keys: Vec::new(),
            masks: (self.values.len() <= 128).then(Vec::new),
            order: Vec::new(),
        };
        let mut idx = vec![0usize; len];
        let mut sums = vec![0i128; width * (len + 1)];
        self.descend(0, 0, lo, hi, &mut idx, &mut sums, &mut out);
        let count = out.keys.len() / width.max(1);
        let mut order: Vec<u32> = (0..count as u32).collect();
        order.sort_unstable_by(|&a, &b| {
            let (a, b) = (a as usize, b as usize);
            out.key(a).cmp(out.key(b)).then_with(|| out.side(a).cmp(out.side(b)))
        });
        out.order = order;
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        depth: usize,
        start: usize,
        lo: i128,
        hi: i128,
        idx: &mut [usize],
        sums: &mut [i128],
        out: &mut Pass,
    ) {
        let len = self.spec.side_len;
        let width = self.powers.len();
        if depth == len {
            let key = &sums[len * width..(len + 1) * width];
            if key[0] < lo || key[0] > hi {
                return;
            }
            out.keys.extend_from_slice(key);
            out.values.extend(idx.iter().map(|&i| self.values[i]));
            if let Some(m) = &mut out.masks {
                m.push(idx.iter().fold(0u128, |acc, &i| acc | (1u128 << i)));
            }
            return;
        }
        let left = (len - depth) as i128;
        for i in start..self.values.len() {
            let lead = sums[depth * width];
            // Remaining entries come from values[i..]; the suffix bounds only
            // tighten as i grows, so a miss here is a miss for every later i.
            if lead + left * self.suffix_min[i] > hi || lead + left * self.suffix_max[i] < lo {
                break;
            }
            idx[depth] = i;
            for d in 0..width {
                sums[(depth + 1) * width + d] = sums[depth * width + d] + self.powers[d][i];
            }
            self.descend(depth + 1, i, lo, hi, idx, sums, out);
        }
    }

    /// Candidate same-key pairs over all passes (before excluding pairs that
    /// share an entry).
    pub fn join_work(&self) -> u128 {
        (0..self.passes).map(|p| self.build(p).work()).sum()
    }

    /// Visits every pair of distinct sides with equal power sums at all
    /// degrees and no common entry, for passes `worker, worker + workers, …`,
    /// in ascending key order within the partition. Sides are ascending.
    pub fn join_partition<F>(&self, worker: usize, workers: usize, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[i64], &[i64]) -> ControlFlow<()>,
    {
        let workers = workers.max(1);
        for pass in (worker..self.passes).step_by(workers) {
            let p = self.build(pass);
            for (a, b) in p.groups() {
                for x in a..b {
                    let i = p.order[x] as usize;
                    for y in x + 1..b {
                        let j = p.order[y] as usize;
                        if p.disjoint(i, j) {
                            visit(p.side(i), p.side(j))?;
                        }
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Canonical, irreducible results of one partition.
    pub fn collect_partition(&self, worker: usize, workers: usize) -> BTreeSet<PowerSumPair> {
        let degrees: Vec<u32> = self.spec.degrees.iter().copied().collect();
        let class = PowerSumPair::from_ints(&[], &[], &degrees, "").degree_class();
        let mut seen = BTreeSet::new();
        let _ = self.join_partition(worker, workers, |l, r| {
            let (cl, cr) = canonical_small(l, r, class);
            let sorted = |v: &[i64]| {
                let mut v = v.to_vec();
                v.sort_unstable();
                v
            };
            if sorted_disjoint(&sorted(&cl), &sorted(&cr)) {
                seen.insert((cl, cr));
            }
            ControlFlow::Continue(())
        });
        seen.into_iter().map(|(l, r)| PowerSumPair::from_ints(&l, &r, &degrees, "search")).collect()
    }

    /// Errors if the join work exceeds the spec's ceiling.
    pub fn check_ceiling(&self) -> Result<()> {
        let ceiling = self.spec.ceiling;
        let sides = self.side_count();
        if sides > ceiling {
            return Err(Error::WorkCeiling { estimated: sides, ceiling });
        }
        let work = self.join_work();
        if work > ceiling {
            return Err(Error::WorkCeiling { estimated: work, ceiling });
        }
        Ok(())
    }
}

/// All canonically distinct pairs within the bounds, sorted. Pairs sharing
/// an entry across sides (a shorter identity padded with a common term) are
/// excluded, as are trivial ones.
pub fn search(spec: &SearchSpec) -> Result<Vec<PowerSumPair>> {
    let plan = SearchPlan::new(spec)?;
    plan.check_ceiling()?;
    Ok(plan.collect_partition(0, 1).into_iter().collect())
}

/// Streams the same enumeration as [`search`] in ascending order of the
/// leading power sum, as raw ascending sides, until the visitor breaks. No
/// work ceiling applies.
pub fn search_each<F>(spec: &SearchSpec, visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[i64], &[i64]) -> ControlFlow<()>,
{
    Ok(SearchPlan::new(spec)?.join_partition(0, 1, visit))
}

/// Direct summation over big integers. Rational entries are first scaled by
/// the lcm of their denominators (the identities are homogeneous).
pub fn oracle_verify(pair: &PowerSumPair) -> bool {
    let l = pair.lhs.iter().chain(&pair.rhs).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled = |xs: &[Rational]| -> Vec<BigInt> { xs.iter().map(|x| x.numer() * (&l / x.denom())).collect() };
    let (a, b) = (scaled(&pair.lhs), scaled(&pair.rhs));
    pair.degrees.iter().all(|&k| {
        let s = |xs: &[BigInt]| xs.iter().fold(BigInt::zero(), |acc, x| acc + x.pow(k));
        s(&a) == s(&b)
    })
}
