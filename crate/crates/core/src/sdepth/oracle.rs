//! Exhaustive reference values for small posets.
//!
//! These enumerate every interval partition (memoized on the covered set, with no bounding),
//! so they share nothing with the rank-`d` normalization of the main search.

use std::collections::HashMap;

use super::poset::{CharPoset, Mode};
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;

/// Largest vertex count the oracles accept.
pub const ORACLE_MAX_N: usize = 5;

fn oracle_poset(ideal: &SquarefreeIdeal, mode: Mode) -> Result<CharPoset> {
    if ideal.n() > ORACLE_MAX_N {
        return Err(Error::OracleTooLarge(ideal.n(), ORACLE_MAX_N));
    }
    CharPoset::new(ideal, mode)
}

/// Best achievable value of `combine` over every interval partition of the poset, where each
/// interval contributes `score(lower, upper)` and `better` picks the preferred of two totals.
fn exhaustive<S, C, B>(poset: &CharPoset, score: S, combine: C, better: B, done: i32) -> Option<i32>
where
    S: Fn(u32, u32) -> i32 + Copy,
    C: Fn(i32, i32) -> i32 + Copy,
    B: Fn(i32, i32) -> i32 + Copy,
{
    let n = poset.n();
    let members: Vec<u32> = (0u32..1 << n).filter(|&b| poset.contains(crate::VertexSet::from_bits(b))).collect();
    let full: u64 = (1u64 << members.len()) - 1;
    let mut position = vec![usize::MAX; 1 << n];
    for (i, &b) in members.iter().enumerate() {
        position[b as usize] = i;
    }

    #[allow(clippy::too_many_arguments)]
    fn go<S, C, B>(
        covered: u64,
        full: u64,
        members: &[u32],
        position: &[usize],
        n: usize,
        memo: &mut HashMap<u64, Option<i32>>,
        fns: (S, C, B),
        done: i32,
    ) -> Option<i32>
    where
        S: Fn(u32, u32) -> i32 + Copy,
        C: Fn(i32, i32) -> i32 + Copy,
        B: Fn(i32, i32) -> i32 + Copy,
    {
        if covered == full {
            return Some(done);
        }
        if let Some(&v) = memo.get(&covered) {
            return v;
        }
        let (score, combine, better) = fns;
        // The smallest uncovered support (in bit order, a linear extension of inclusion) has
        // no uncovered proper subset in the poset, so it is the lower end of its interval.
        let first = (!covered).trailing_zeros() as usize;
        let lower = members[first];
        let rest = ((1u32 << n) - 1) & !lower;
        let mut best: Option<i32> = None;
        let mut sub = rest;
        loop {
            let upper = lower | sub;
            let mut mask = 0u64;
            let mut ok = true;
            let mut t = sub;
            loop {
                let p = position[(lower | t) as usize];
                if p == usize::MAX || covered >> p & 1 == 1 {
                    ok = false;
                    break;
                }
                mask |= 1 << p;
                if t == 0 {
                    break;
                }
                t = (t - 1) & sub;
            }
            if ok {
                if let Some(tail) = go(covered | mask, full, members, position, n, memo, fns, done) {
                    let total = combine(score(lower, upper), tail);
                    best = Some(match best {
                        None => total,
                        Some(b) => better(b, total),
                    });
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        memo.insert(covered, best);
        best
    }

    let mut memo = HashMap::new();
    go(0, full, &members, &position, n, &mut memo, (score, combine, better), done)
}

/// Stanley depth by exhaustive enumeration of interval partitions; `n <= 5` only.
pub fn brute_oracle_sdepth(ideal: &SquarefreeIdeal, mode: Mode) -> Result<usize> {
    let poset = oracle_poset(ideal, mode)?;
    let n = poset.n() as i32;
    let v = exhaustive(&poset, |_, upper| upper.count_ones() as i32, i32::min, i32::max, n)
        .expect("every nonempty poset has the singleton partition");
    Ok(v as usize)
}

/// Stanley regularity straight from the definition: the least achievable `max |lower|` over
/// interval partitions of the module's own poset; `n <= 5` only.
pub fn brute_oracle_sreg(ideal: &SquarefreeIdeal, mode: Mode) -> Result<usize> {
    let poset = oracle_poset(ideal, mode)?;
    let v = exhaustive(&poset, |lower, _| lower.count_ones() as i32, i32::max, i32::min, 0)
        .expect("every nonempty poset has the singleton partition");
    Ok(v as usize)
}
