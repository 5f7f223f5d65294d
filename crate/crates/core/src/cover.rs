//! Exact minimum set cover over bitmask universes.

/// Fewest members of `sets` whose union contains `target`, or `None` if no cover exists.
pub(crate) fn min_cover(sets: &[u64], target: u64) -> Option<usize> {
    fn go(sets: &[u64], uncovered: u64, used: usize, best: &mut usize) {
        if uncovered == 0 {
            *best = (*best).min(used);
            return;
        }
        if used + 1 >= *best {
            return;
        }
        let widest = sets.iter().map(|s| (s & uncovered).count_ones() as usize).max().unwrap_or(0);
        if widest == 0 || used + (uncovered.count_ones() as usize).div_ceil(widest) >= *best {
            return;
        }
        // Branch on the element with the fewest covering sets.
        let mut pivot = 0u64;
        let mut fewest = usize::MAX;
        let mut rest = uncovered;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let k = sets.iter().filter(|&&s| s & bit != 0).count();
            if k < fewest {
                fewest = k;
                pivot = bit;
            }
        }
        let mut options: Vec<u64> = sets.iter().copied().filter(|s| s & pivot != 0).collect();
        options.sort_by_key(|s| std::cmp::Reverse((s & uncovered).count_ones()));
        for s in options {
            go(sets, uncovered & !s, used + 1, best);
        }
    }
    let reachable = sets.iter().fold(0, |acc, s| acc | s);
    if target & !reachable != 0 {
        return None;
    }
    let mut best = usize::MAX;
    go(sets, target, 0, &mut best);
    Some(best)
}
