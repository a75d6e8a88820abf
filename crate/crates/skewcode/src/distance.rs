//! Minimum Hamming distance of F_q linear codes given by generator matrices:
//! exhaustive enumeration and Brouwer-Zimmermann with several disjoint
//! information sets, plus a cheap one-set upper bound.
//!
//! Enumeration runs on raw Zech-table indices. Supports advance in
//! colexicographic order and coefficient patterns in odometer order over
//! F_q^x with the first coefficient pinned to 1, so results are
//! deterministic and independent of the worker count: partial results merge
//! by the total order (weight, set, support rank, message rank).

use rayon::prelude::*;
use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::matrix::{LinearCodeMatrix, Matrix};

#[derive(Debug, Error)]
pub enum DistanceError {
    #[error("exhaustive enumeration needs {needed} messages, above the budget of {budget}")]
    BudgetRefusal { needed: u128, budget: u64 },
}

/// Budgets for distance work. `max_ops` caps the operation count model
/// (enumerated messages times code length); `max_secs` is a wall-clock
/// safety net checked between enumeration levels.
#[derive(Clone, Copy, Debug)]
pub struct DistanceBudget {
    pub max_ops: u64,
    pub max_secs: Option<u64>,
}

impl Default for DistanceBudget {
    fn default() -> Self {
        DistanceBudget { max_ops: 60_000_000_000, max_secs: None }
    }
}

impl DistanceBudget {
    pub fn unlimited() -> Self {
        DistanceBudget { max_ops: u64::MAX, max_secs: None }
    }

    pub fn with_ops(max_ops: u64) -> Self {
        DistanceBudget { max_ops, max_secs: None }
    }
}

/// Outcome of a distance computation on a code with at least one nonzero
/// codeword.
#[derive(Clone, Debug)]
pub struct DistanceResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub witness: Vec<FieldElement>,
    /// enumerated messages
    pub work: u64,
    /// operation-count model actually spent (messages x length)
    pub ops: u64,
}

/// Dimensions are small; combination counts fit comfortably in u128.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Messages of support size w with the first nonzero coefficient pinned to 1.
fn level_messages(k: usize, w: usize, q: u32) -> u128 {
    binomial(k, w) * ((q - 1) as u128).pow(w.saturating_sub(1) as u32)
}

/// Colex unranking: the rank-R size-w subset under rank = sum C(c_i, i).
fn unrank_colex(mut rank: u128, w: usize) -> Vec<usize> {
    let mut out = vec![0usize; w];
    for i in (1..=w).rev() {
        // largest c with C(c, i) <= rank
        let mut c = i - 1;
        let mut last = 0u128;
        loop {
            let b = binomial(c + 1, i);
            if b > rank {
                break;
            }
            c += 1;
            last = b;
        }
        let _ = last;
        out[i - 1] = c;
        rank -= binomial(c, i);
    }
    out
}

/// Advance a support in colex order; false when it was the last one below k.
fn next_colex(support: &mut [usize], k: usize) -> bool {
    let w = support.len();
    for i in 0..w {
        let limit = if i + 1 < w { support[i + 1] } else { k };
        if support[i] + 1 < limit {
            support[i] += 1;
            for (j, slot) in support.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// One systematic encoder: k rows in raw index form with the set's pivot
/// columns and achieved rank.
struct InfoSet {
    cols: Vec<usize>,
    rho: usize,
    /// sparse rows: (position, raw index) of nonzero entries
    rows: Vec<Vec<(u32, u32)>>,
}

/// Candidate found during enumeration, ordered for deterministic merging.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Candidate {
    weight: usize,
    set: usize,
    level: usize,
    support_rank: u128,
    msg_rank: u64,
}

impl Candidate {
    fn better_than(&self, other: &Option<Candidate>) -> bool {
        match other {
            None => true,
            Some(o) => {
                (self.weight, self.set, self.level, self.support_rank, self.msg_rank)
                    < (o.weight, o.set, o.level, o.support_rank, o.msg_rank)
            }
        }
    }
}

struct Enumerator<'a> {
    field: &'a Field,
    n: usize,
    k: usize,
    rows: Vec<Vec<(u32, u32)>>,
}

impl<'a> Enumerator<'a> {
    fn new(field: &'a Field, rows_dense: &[Vec<u32>], n: usize) -> Enumerator<'a> {
        let rows = rows_dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(p, &v)| (p as u32, v))
                    .collect()
            })
            .collect::<Vec<_>>();
        Enumerator { field, n, k: rows_dense.len(), rows }
    }

    /// Enumerate every message of support size exactly `w` (first
    /// coefficient 1) over supports with rank in [lo, hi); returns the best
    /// candidate and the number of messages visited.
    fn run_range(
        &self,
        set_idx: usize,
        w: usize,
        lo: u128,
        hi: u128,
        skip_zero_codewords: bool,
    ) -> (Option<Candidate>, u64) {
        let raw = self.field.raw();
        let q = raw.qm1 + 1;
        let mut support = unrank_colex(lo, w);
        let mut cw = vec![0u32; self.n];
        let mut best: Option<Candidate> = None;
        let mut visited = 0u64;

        let mut rank = lo;
        loop {
            // base codeword: all coefficients 1
            let mut weight = 0usize;
            cw.iter_mut().for_each(|c| *c = 0);
            for &r in &support {
                for &(p, v) in &self.rows[r] {
                    let p = p as usize;
                    let old = cw[p];
                    let new = raw.add(old, v);
                    weight = weight + (new != 0) as usize - (old != 0) as usize;
                    cw[p] = new;
                }
            }
            let mut msg_rank = 0u64;
            visited += 1;
            if (weight > 0 || !skip_zero_codewords)
                && (Candidate { weight, set: set_idx, level: w, support_rank: rank, msg_rank })
                    .better_than(&best)
            {
                best = Some(Candidate { weight, set: set_idx, level: w, support_rank: rank, msg_rank });
            }

            // odometer over the w-1 free coefficients (positions 1..w)
            if w > 1 {
                let mut digits = vec![0u32; w];
                'odometer: loop {
                    let mut pos = w - 1;
                    loop {
                        let old_digit = digits[pos];
                        let (new_digit, carry) =
                            if old_digit + 1 < q - 1 { (old_digit + 1, false) } else { (0, true) };
                        digits[pos] = new_digit;
                        // delta = t^new - t^old
                        let delta = raw.sub(new_digit + 1, old_digit + 1);
                        if delta != 0 {
                            for &(p, v) in &self.rows[support[pos]] {
                                let p = p as usize;
                                let old = cw[p];
                                let new = raw.add(old, raw.mul(delta, v));
                                weight = weight + (new != 0) as usize - (old != 0) as usize;
                                cw[p] = new;
                            }
                        }
                        if !carry {
                            break;
                        }
                        if pos == 1 {
                            break 'odometer;
                        }
                        pos -= 1;
                    }
                    msg_rank += 1;
                    visited += 1;
                    if (weight > 0 || !skip_zero_codewords)
                        && (Candidate { weight, set: set_idx, level: w, support_rank: rank, msg_rank })
                            .better_than(&best)
                    {
                        best =
                            Some(Candidate { weight, set: set_idx, level: w, support_rank: rank, msg_rank });
                    }
                }
            }

            rank += 1;
            if rank >= hi || !next_colex(&mut support, self.k) {
                break;
            }
        }
        (best, visited)
    }

    /// Full level, parallel over support chunks; deterministic merge.
    fn run_level(&self, set_idx: usize, w: usize, skip_zero: bool) -> (Option<Candidate>, u64) {
        let total = binomial(self.k, w);
        let threads = rayon::current_num_threads().max(1) as u128;
        let chunks = (threads * 8).min(total).max(1);
        let step = total.div_ceil(chunks);
        let ranges: Vec<(u128, u128)> =
            (0..chunks).map(|i| (i * step, ((i + 1) * step).min(total))).filter(|(a, b)| a < b).collect();
        let outs: Vec<(Option<Candidate>, u64)> = ranges
            .into_par_iter()
            .map(|(lo, hi)| self.run_range(set_idx, w, lo, hi, skip_zero))
            .collect();
        let mut best = None;
        let mut visited = 0u64;
        for (cand, v) in outs {
            visited += v;
            if let Some(c) = cand {
                if c.better_than(&best) {
                    best = Some(c);
                }
            }
        }
        (best, visited)
    }

    /// Reconstruct the codeword of a candidate.
    fn witness(&self, cand: &Candidate) -> Vec<FieldElement> {
        let raw = self.field.raw();
        let q = raw.qm1 + 1;
        let support = unrank_colex(cand.support_rank, cand.level);
        let mut digits = vec![0u32; cand.level];
        let mut mr = cand.msg_rank;
        // msg_rank counts odometer steps over digits 1..w, last digit fastest
        let base = (q - 1) as u64;
        for pos in (1..cand.level).rev() {
            digits[pos] = (mr % base) as u32;
            mr /= base;
        }
        let mut cw = vec![0u32; self.n];
        for (i, &r) in support.iter().enumerate() {
            let coeff = digits[i] + 1; // t^digit
            for &(p, v) in &self.rows[r] {
                cw[p as usize] = raw.add(cw[p as usize], raw.mul(coeff, v));
            }
        }
        cw.into_iter().map(|idx| self.field.from_raw_index(idx)).collect()
    }
}

fn dense_raw_rows(m: &Matrix, field: &Field) -> Vec<Vec<u32>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|&e| field.raw_index(e)).collect())
        .collect()
}

/// Greedy disjoint information sets: repeated Gaussian elimination
/// restricted to columns unused by previous sets; a final deficient set is
/// kept with its rank for the lower-bound formula.
fn information_sets(field: &Field, reduced: &Matrix) -> Vec<InfoSet> {
    let k = reduced.rows();
    let n = reduced.cols();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let mut work = reduced.clone();
        let mut pivot_rows: Vec<usize> = Vec::new();
        let mut cols = Vec::new();
        for c in 0..n {
            if used[c] || pivot_rows.len() == k {
                continue;
            }
            let Some(pr) = (0..k).find(|&i| !pivot_rows.contains(&i) && !field.is_zero(work.get(i, c)))
            else {
                continue;
            };
            let inv = field.inv(work.get(pr, c)).unwrap();
            for j in 0..n {
                work.set(pr, j, field.mul(inv, work.get(pr, j)));
            }
            for i in 0..k {
                if i != pr && !field.is_zero(work.get(i, c)) {
                    let factor = work.get(i, c);
                    for j in 0..n {
                        let v = field.sub(work.get(i, j), field.mul(factor, work.get(pr, j)));
                        work.set(i, j, v);
                    }
                }
            }
            pivot_rows.push(pr);
            cols.push(c);
        }
        if cols.is_empty() {
            break;
        }
        for &c in &cols {
            used[c] = true;
        }
        let rho = cols.len();
        // order rows: pivot rows first for readability; enumeration uses all
        let mut order: Vec<usize> = pivot_rows.clone();
        order.extend((0..k).filter(|i| !pivot_rows.contains(i)));
        let rows_dense: Vec<Vec<u32>> = order
            .iter()
            .map(|&i| (0..n).map(|j| field.raw_index(work.get(i, j))).collect())
            .collect();
        let rows = rows_dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(p, &v)| (p as u32, v))
                    .collect()
            })
            .collect();
        sets.push(InfoSet { cols, rho, rows });
    }
    sets
}

fn lower_bound(levels: &[usize], sets: &[InfoSet], k: usize) -> usize {
    let sum: usize = levels
        .iter()
        .zip(sets)
        .map(|(&w, set)| (w + 1).saturating_sub(k - set.rho))
        .sum();
    sum.max(1)
}

/// Exact minimum distance by enumerating all nonzero messages (up to
/// scaling). Pre: the normalized message count stays within the budget.
pub fn min_distance_exhaustive(
    m: &LinearCodeMatrix,
    budget: &DistanceBudget,
) -> Result<Option<DistanceResult>, DistanceError> {
    let field = m.field().as_ref();
    let k = m.rows();
    let n = m.cols();
    if k == 0 || n == 0 {
        return Ok(None);
    }
    let q = field.q();
    let needed: u128 = (1..=k).map(|w| level_messages(k, w, q)).sum();
    if needed > budget.max_ops as u128 {
        return Err(DistanceError::BudgetRefusal { needed, budget: budget.max_ops });
    }
    let rows = dense_raw_rows(m.matrix(), field);
    let en = Enumerator::new(field, &rows, n);
    let mut best: Option<Candidate> = None;
    let mut work = 0u64;
    for w in 1..=k {
        let (cand, visited) = en.run_level(0, w, true);
        work += visited;
        if let Some(c) = cand {
            if c.better_than(&best) {
                best = Some(c);
            }
        }
    }
    Ok(best.map(|c| {
        let witness = en.witness(&c);
        DistanceResult {
            lower: c.weight,
            upper: c.weight,
            exact: true,
            witness,
            work,
            ops: work * n as u64,
        }
    }))
}

/// Brouwer-Zimmermann bounds/exact distance under a budget. Returns None
/// only when the code has no nonzero codewords (zero rank). Rank-deficient
/// inputs are row-reduced first.
pub fn min_distance_bz(m: &LinearCodeMatrix, budget: &DistanceBudget) -> Option<DistanceResult> {
    let field = m.field().clone();
    let n = m.cols();
    let red = m.matrix().rref(&field);
    let k = red.pivots.len();
    if k == 0 {
        return None;
    }
    let reduced = Matrix::from_rows(&field, &red.matrix.row_vecs()[..k]);
    let sets = information_sets(&field, &reduced);
    let started = std::time::Instant::now();
    let out_of_time = |b: &DistanceBudget| match b.max_secs {
        Some(s) => started.elapsed().as_secs() >= s,
        None => false,
    };

    let enumerators: Vec<Enumerator> = sets
        .iter()
        .map(|s| Enumerator {
            field: &field,
            n,
            k,
            rows: s.rows.clone(),
        })
        .collect();

    let q = field.q();
    let mut levels = vec![0usize; sets.len()];
    let mut best: Option<Candidate> = None;
    let mut work = 0u64;
    let mut ops = 0u64;

    let mut run = |set_idx: usize,
                   w: usize,
                   work: &mut u64,
                   ops: &mut u64,
                   best: &mut Option<Candidate>| {
        let (cand, visited) = enumerators[set_idx].run_level(set_idx, w, false);
        *work += visited;
        *ops += visited * n as u64;
        if let Some(c) = cand {
            if c.better_than(best) {
                *best = Some(c);
            }
        }
    };

    // opening sweep: cheap low levels on every set, for upper-bound variety
    let sweep_cap = (budget.max_ops / 20).max(1);
    for w in 1..=2.min(k) {
        for si in 0..sets.len() {
            let cost = level_messages(k, w, q) * n as u128;
            if levels[si] == w - 1 && cost <= sweep_cap as u128 && ops as u128 + cost <= budget.max_ops as u128
            {
                run(si, w, &mut work, &mut ops, &mut best);
                levels[si] = w;
            }
        }
    }

    let mut exact = false;
    loop {
        let lower = lower_bound(&levels, &sets, k);
        if let Some(b) = &best {
            if lower >= b.weight {
                exact = true;
                break;
            }
        }
        if levels.iter().any(|&w| w >= k) {
            // a set enumerated everything
            exact = true;
            break;
        }
        if out_of_time(budget) {
            break;
        }
        // Pick the set that can raise the lower bound most cheaply: the
        // total cost of its levels up to the next one that contributes
        // (deficient sets contribute nothing until w + 1 > k - rho).
        let cost_to_contribute = |si: usize| -> u128 {
            let target = (k - sets[si].rho).max(levels[si] + 1);
            (levels[si] + 1..=target).map(|w| level_messages(k, w, q) * n as u128).sum()
        };
        let mut pool: Vec<usize> = (0..sets.len()).filter(|&si| levels[si] < k).collect();
        if pool.is_empty() {
            break;
        }
        pool.sort_by_key(|&si| (cost_to_contribute(si), si));
        let si = pool[0];
        let next_cost = level_messages(k, levels[si] + 1, q) * n as u128;
        if ops as u128 + next_cost > budget.max_ops as u128 {
            break; // budget exhausted: report bounds
        }
        run(si, levels[si] + 1, &mut work, &mut ops, &mut best);
        levels[si] += 1;
    }

    let lower = lower_bound(&levels, &sets, k);
    let cand = best.expect("rank > 0 guarantees a nonzero codeword at level 1");
    let upper = cand.weight;
    let witness = enumerators[cand.set].witness(&cand);
    let lower = if exact { upper } else { lower.min(upper) };
    Some(DistanceResult { lower, upper, exact: exact || lower == upper, witness, work, ops })
}

/// Upper bound from messages of support size <= max_message_weight through
/// the first information set. None when there is no nonzero codeword.
pub fn distance_upper_bound(
    m: &LinearCodeMatrix,
    max_message_weight: usize,
    budget: &DistanceBudget,
) -> Option<usize> {
    let field = m.field().clone();
    let n = m.cols();
    let red = m.matrix().rref(&field);
    let k = red.pivots.len();
    if k == 0 {
        return None;
    }
    let reduced = Matrix::from_rows(&field, &red.matrix.row_vecs()[..k]);
    let sets = information_sets(&field, &reduced);
    let en = Enumerator { field: &field, n, k, rows: sets[0].rows.clone() };
    let mut best: Option<Candidate> = None;
    let mut ops = 0u64;
    for w in 1..=max_message_weight.min(k) {
        let cost = level_messages(k, w, field.q()) * n as u128;
        if ops as u128 + cost > budget.max_ops as u128 {
            break;
        }
        let (cand, visited) = en.run_level(0, w, false);
        ops += visited * n as u64;
        if let Some(c) = cand {
            if c.better_than(&best) {
                best = Some(c);
            }
        }
    }
    best.map(|c| c.weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use std::sync::Arc;

    fn gf(q: u32) -> Arc<Field> {
        let (p, m) = match q {
            2 => (2, 1),
            3 => (3, 1),
            4 => (2, 2),
            9 => (3, 2),
            _ => panic!(),
        };
        Arc::new(Field::with_default_modulus(p, m).unwrap())
    }

    fn lcm_from(field: &Arc<Field>, rows: &[Vec<u32>]) -> LinearCodeMatrix {
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&e| field.from_raw_index(e)).collect())
            .collect();
        LinearCodeMatrix::new(field.clone(), Matrix::from_rows(field, &rows))
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(20, 5), 15504);
        // colex ranks enumerate supports in order
        let mut sup = vec![0, 1, 2];
        let mut rank = 0u128;
        loop {
            assert_eq!(unrank_colex(rank, 3), sup);
            rank += 1;
            if !next_colex(&mut sup, 6) {
                break;
            }
        }
        assert_eq!(rank, binomial(6, 3));
    }

    #[test]
    fn identity_and_repetition() {
        let f = gf(4);
        let id = lcm_from(&f, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let r = min_distance_bz(&id, &DistanceBudget::default()).unwrap();
        assert!(r.exact);
        assert_eq!((r.lower, r.upper), (1, 1));

        let rep = lcm_from(&f, &[vec![1, 1, 1, 1, 1]]);
        let r = min_distance_bz(&rep, &DistanceBudget::default()).unwrap();
        assert!(r.exact);
        assert_eq!(r.upper, 5);
        let ex = min_distance_exhaustive(&rep, &DistanceBudget::default()).unwrap().unwrap();
        assert_eq!(ex.upper, 5);
    }

    #[test]
    fn zero_matrix_has_no_distance() {
        let f = gf(4);
        let z = lcm_from(&f, &[vec![0, 0, 0]]);
        assert!(min_distance_bz(&z, &DistanceBudget::default()).is_none());
        assert!(min_distance_exhaustive(&z, &DistanceBudget::default()).unwrap().is_none());
        assert!(distance_upper_bound(&z, 3, &DistanceBudget::default()).is_none());
    }

    #[test]
    fn budget_refusal_names_requirement() {
        let f = gf(9);
        let rows: Vec<Vec<u32>> = (0..30).map(|i| {
            let mut r = vec![0u32; 40];
            r[i] = 1;
            r
        }).collect();
        let big = lcm_from(&f, &rows);
        match min_distance_exhaustive(&big, &DistanceBudget::with_ops(1 << 20)) {
            Err(DistanceError::BudgetRefusal { needed, budget }) => {
                assert!(needed > budget as u128);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn bz_agrees_with_exhaustive_on_random_codes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);
        for trial in 0..250 {
            let q = if trial % 2 == 0 { 4 } else { 9 };
            let f = gf(q);
            let k = rng.gen_range(1..=5);
            let n = rng.gen_range(k..=k + 7);
            let rows: Vec<Vec<u32>> = (0..k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
                .collect();
            let m = lcm_from(&f, &rows);
            let ex = min_distance_exhaustive(&m, &DistanceBudget::default()).unwrap();
            let bz = min_distance_bz(&m, &DistanceBudget::default());
            match (ex, bz) {
                (None, None) => {}
                (Some(a), Some(b)) => {
                    assert!(b.exact, "default budget suffices on tiny codes");
                    assert_eq!(a.upper, b.upper, "rows: {rows:?}");
                    // witnesses have the claimed weight and lie in the row space
                    let w: Vec<u32> = b.witness.iter().map(|&e| f.raw_index(e)).collect();
                    assert_eq!(w.iter().filter(|&&x| x != 0).count(), b.upper);
                    assert!(m.matrix().row_space_contains(&f, &b.witness));
                }
                other => panic!("oracle disagreement: {other:?}"),
            }
        }
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let f = gf(9);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let rows: Vec<Vec<u32>> =
            (0..6).map(|_| (0..14).map(|_| rng.gen_range(0..9)).collect()).collect();
        let m = lcm_from(&f, &rows);
        let a = min_distance_bz(&m, &DistanceBudget::default()).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| min_distance_bz(&m, &DistanceBudget::default()).unwrap());
        assert_eq!((a.lower, a.upper, a.work), (b.lower, b.upper, b.work));
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn monotone_in_budget() {
        let f = gf(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let rows: Vec<Vec<u32>> =
            (0..8).map(|_| (0..18).map(|_| rng.gen_range(0..4)).collect()).collect();
        let m = lcm_from(&f, &rows);
        let small = min_distance_bz(&m, &DistanceBudget::with_ops(2_000)).unwrap();
        let large = min_distance_bz(&m, &DistanceBudget::with_ops(100_000_000)).unwrap();
        assert!(large.lower >= small.lower);
        assert!(large.upper <= small.upper);
    }

    #[test]
    fn upper_bound_full_weight_is_exact() {
        let f = gf(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let rows: Vec<Vec<u32>> =
            (0..4).map(|_| (0..9).map(|_| rng.gen_range(0..4)).collect()).collect();
        let m = lcm_from(&f, &rows);
        if let Some(ex) = min_distance_exhaustive(&m, &DistanceBudget::default()).unwrap() {
            let ub = distance_upper_bound(&m, m.rank(), &DistanceBudget::default()).unwrap();
            assert_eq!(ub, ex.upper);
            let partial = distance_upper_bound(&m, 2, &DistanceBudget::default()).unwrap();
            assert!(partial >= ex.upper);
        }
    }
}

/// Test/diagnostic view of the greedy information-set extraction.
pub fn debug_information_sets(m: &LinearCodeMatrix) -> Vec<(Vec<usize>, usize)> {
    let field = m.field().clone();
    let red = m.matrix().rref(&field);
    let k = red.pivots.len();
    let reduced = Matrix::from_rows(&field, &red.matrix.row_vecs()[..k]);
    information_sets(&field, &reduced).into_iter().map(|s| (s.cols, s.rho)).collect()
}
