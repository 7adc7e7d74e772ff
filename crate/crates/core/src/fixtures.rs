//! Small named frameworks used throughout the tests and by the CLI.

use crate::framework::Framework;

fn build(labels: &[&str], attacks: &[(&str, &str)]) -> Framework {
    Framework::build(labels.iter().copied(), attacks.iter().copied())
        .expect("fixture is well formed")
}

/// `a → b → c → a`.
pub fn three_cycle() -> Framework {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
}

/// `a → b0` feeding the 4-cycle `b0 → b1 → b2 → b3 → b0`.
pub fn pentagon_tail() -> Framework {
    build(
        &["a", "b0", "b1", "b2", "b3"],
        &[
            ("a", "b0"),
            ("b0", "b1"),
            ("b1", "b2"),
            ("b2", "b3"),
            ("b3", "b0"),
        ],
    )
}

/// The pentagon-with-tail where `b3` additionally attacks itself.
pub fn weak_reinstatement() -> Framework {
    build(
        &["a", "b0", "b1", "b2", "b3"],
        &[
            ("a", "b0"),
            ("b0", "b1"),
            ("b1", "b2"),
            ("b2", "b3"),
            ("b3", "b0"),
            ("b3", "b3"),
        ],
    )
}

/// The ladder `a_{i+1} → a_i`, `a_i → b_{i+1}`, `b_i → a_i` cut at `i ≤ 4`,
/// labels in ladder decoding order `a1, b1, a2, b2, …`.
pub fn ladder4() -> Framework {
    build(
        &["a1", "b1", "a2", "b2", "a3", "b3", "a4", "b4"],
        &[
            ("a2", "a1"),
            ("a3", "a2"),
            ("a4", "a3"),
            ("a1", "b2"),
            ("a2", "b3"),
            ("a3", "b4"),
            ("b1", "a1"),
            ("b2", "a2"),
            ("b3", "a3"),
            ("b4", "a4"),
        ],
    )
}

/// `(F, G)` over `{a, b, c}`: `F` has `a ↔ b ↔ c` and `c → c`; `G` keeps
/// only `a → b`, `c → b` and `c → c`. Same conflicts, `R_G ⊆ R_F`.
pub fn skepticism_pair() -> (Framework, Framework) {
    let f = build(
        &["a", "b", "c"],
        &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"), ("c", "c")],
    );
    let g = build(&["a", "b", "c"], &[("a", "b"), ("c", "b"), ("c", "c")]);
    (f, g)
}

/// `a0 … a_{n-1}` with `a_i → a_j` iff `i > j`.
pub fn chain(n: usize) -> Framework {
    let labels: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let attacks = (0..n).flat_map(|i| (0..i).map(move |j| (i, j)));
    Framework::from_indices(labels, attacks.collect::<Vec<_>>()).expect("distinct labels")
}

/// [`chain`] plus `x ↔ y` with `x` attacking every `a_i`. Labels are
/// `x, y, a0, …`.
pub fn chain_xy(n: usize) -> Framework {
    let mut labels = vec!["x".to_string(), "y".to_string()];
    labels.extend((0..n).map(|i| format!("a{i}")));
    let mut attacks = vec![(0, 1), (1, 0)];
    for i in 0..n {
        attacks.push((0, i + 2));
        for j in 0..i {
            attacks.push((i + 2, j + 2));
        }
    }
    Framework::from_indices(labels, attacks).expect("distinct labels")
}

/// `a → b`.
pub fn single_attack() -> Framework {
    build(&["a", "b"], &[("a", "b")])
}

/// One argument attacking itself.
pub fn self_attacker() -> Framework {
    build(&["a"], &[("a", "a")])
}

/// Every named fixture, for sweeps.
pub fn all() -> Vec<(&'static str, Framework)> {
    let (skf, skg) = skepticism_pair();
    vec![
        ("three-cycle", three_cycle()),
        ("pentagon-tail", pentagon_tail()),
        ("weak-reinstatement", weak_reinstatement()),
        ("ladder4", ladder4()),
        ("skepticism-f", skf),
        ("skepticism-g", skg),
        ("chain5", chain(5)),
        ("chain-xy5", chain_xy(5)),
        ("single-attack", single_attack()),
        ("self-attacker", self_attacker()),
        ("empty", Framework::empty()),
    ]
}

/// Look up a fixture by the name used in [`all`].
pub fn by_name(name: &str) -> Option<Framework> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, f)| f)
}
