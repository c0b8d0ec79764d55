use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

/// Process-wide insert-once table. Values are computed outside the lock; on a
/// race the first inserted value wins, and all callers see that one.
pub(crate) type SharedTable<K, V> = OnceLock<RwLock<HashMap<K, Arc<V>>>>;

pub(crate) fn get_or_insert_with<K, V>(
    table: &'static SharedTable<K, V>,
    key: K,
    build: impl FnOnce() -> V,
) -> Arc<V>
where
    K: Eq + Hash,
{
    let map = table.get_or_init(Default::default);
    if let Some(v) = map.read().expect("memo table poisoned").get(&key) {
        return Arc::clone(v);
    }
    let value = Arc::new(build());
    let mut guard = map.write().expect("memo table poisoned");
    Arc::clone(guard.entry(key).or_insert(value))
}

/// Rearranges `v` into the next lexicographic permutation; false once `v` is the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Calls `visit` once per distinct rearrangement of `items`.
pub(crate) fn for_each_arrangement<T: Ord + Clone>(items: &[T], mut visit: impl FnMut(&[T])) {
    let mut v = items.to_vec();
    v.sort();
    loop {
        visit(&v);
        if !next_permutation(&mut v) {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangements_of_a_multiset() {
        let mut seen = Vec::new();
        for_each_arrangement(&[1, 0, 1], |a| seen.push(a.to_vec()));
        assert_eq!(seen, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let mut count = 0;
        for_each_arrangement(&[3, 2, 1, 0], |_| count += 1);
        assert_eq!(count, 24);
    }
}
