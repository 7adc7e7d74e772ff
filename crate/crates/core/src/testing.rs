use proptest::prelude::*;

use crate::framework::Framework;

/// Frameworks with up to `max` arguments and arbitrary attacks, including
/// self-attacks.
pub fn arb_framework(max: usize) -> impl Strategy<Value = Framework> {
    (0..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.25), n * n).prop_map(move |bits| {
            let labels: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
            let attacks: Vec<(usize, usize)> = (0..n * n)
                .filter(|&k| bits[k])
                .map(|k| (k / n, k % n))
                .collect();
            Framework::from_indices(labels, attacks).expect("distinct labels")
        })
    })
}
