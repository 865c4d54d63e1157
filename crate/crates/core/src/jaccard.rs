//! Jaccard similarity over finite sets represented as sorted, duplicate-free
//! sequences.

use serde::{Deserialize, Serialize};

/// Value assigned to `J(∅, ∅)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JaccardConvention {
    /// Plain set similarity: two empty sets are identical, `J = 1`.
    Pure,
    /// Network-metric convention: two empty neighborhoods share nothing,
    /// `J = 0`. Used by every actor metric in this crate.
    #[default]
    Metric,
}

impl JaccardConvention {
    pub fn empty_pair_value(self) -> f64 {
        match self {
            JaccardConvention::Pure => 1.0,
            JaccardConvention::Metric => 0.0,
        }
    }
}

/// Counts common elements of two ascending, duplicate-free sequences.
pub fn intersection_count<T, A, B>(a: A, b: B) -> usize
where
    T: Ord,
    A: IntoIterator<Item = T>,
    B: IntoIterator<Item = T>,
{
    let mut a = a.into_iter();
    let mut b = b.into_iter();
    let (mut x, mut y) = (a.next(), b.next());
    let mut count = 0;
    while let (Some(p), Some(q)) = (&x, &y) {
        match p.cmp(q) {
            std::cmp::Ordering::Less => x = a.next(),
            std::cmp::Ordering::Greater => y = b.next(),
            std::cmp::Ordering::Equal => {
                count += 1;
                x = a.next();
                y = b.next();
            }
        }
    }
    count
}

/// `|A ∩ B| / (|A| + |B| - |A ∩ B|)` from cardinalities.
#[inline]
pub fn jaccard_from_counts(common: usize, len_a: usize, len_b: usize, conv: JaccardConvention) -> f64 {
    let union = len_a + len_b - common;
    if union == 0 {
        conv.empty_pair_value()
    } else {
        common as f64 / union as f64
    }
}

/// Jaccard index of two sorted, duplicate-free slices.
pub fn jaccard<T: Ord>(a: &[T], b: &[T], conv: JaccardConvention) -> f64 {
    debug_assert!(a.windows(2).all(|w| w[0] < w[1]), "set must be strictly ascending");
    debug_assert!(b.windows(2).all(|w| w[0] < w[1]), "set must be strictly ascending");
    jaccard_from_counts(intersection_count(a, b), a.len(), b.len(), conv)
}

/// Jaccard index of two ordered sets.
pub fn jaccard_sets<T: Ord>(
    a: &std::collections::BTreeSet<T>,
    b: &std::collections::BTreeSet<T>,
    conv: JaccardConvention,
) -> f64 {
    jaccard_from_counts(intersection_count(a, b), a.len(), b.len(), conv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn worked_values() {
        assert_eq!(jaccard(&[2, 3], &[2], JaccardConvention::Metric), 0.5);
        assert_eq!(jaccard(&[1], &[2], JaccardConvention::Metric), 0.0);
        let empty: [u32; 0] = [];
        assert_eq!(jaccard(&empty, &empty, JaccardConvention::Pure), 1.0);
        assert_eq!(jaccard(&empty, &empty, JaccardConvention::Metric), 0.0);
        assert_eq!(jaccard(&empty, &[1], JaccardConvention::Pure), 0.0);
    }

    #[test]
    fn default_is_metric() {
        assert_eq!(JaccardConvention::default(), JaccardConvention::Metric);
    }

    fn set() -> impl Strategy<Value = BTreeSet<u8>> {
        prop::collection::btree_set(0u8..40, 0..20)
    }

    proptest! {
        #[test]
        fn symmetric_bounded(a in set(), b in set()) {
            for conv in [JaccardConvention::Pure, JaccardConvention::Metric] {
                let ab = jaccard_sets(&a, &b, conv);
                prop_assert_eq!(ab, jaccard_sets(&b, &a, conv));
                prop_assert!((0.0..=1.0).contains(&ab));
            }
        }

        #[test]
        fn self_similarity(a in set()) {
            let expect = if a.is_empty() { 0.0 } else { 1.0 };
            prop_assert_eq!(jaccard_sets(&a, &a, JaccardConvention::Metric), expect);
        }

        #[test]
        fn matches_set_algebra(a in set(), b in set()) {
            let inter = a.intersection(&b).count();
            let union = a.union(&b).count();
            let v: Vec<u8> = a.iter().copied().collect();
            let w: Vec<u8> = b.iter().copied().collect();
            let expect = if union == 0 { 0.0 } else { inter as f64 / union as f64 };
            prop_assert_eq!(jaccard(&v, &w, JaccardConvention::Metric), expect);
        }
    }
}
