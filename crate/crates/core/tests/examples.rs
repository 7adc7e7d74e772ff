use argscc::base::{enumerate_conflict_free, enumerate_stage, grounded};
use argscc::criteria::{check_directionality, check_reinstatement, Reinstatement};
use argscc::generators::Generator;
use argscc::scc::{d_s, decompose, unattacked_sets};
use argscc::scc_semantics::{enumerate_semantics, separation};
use argscc::{fixtures, oracle, ArgSet, Error, ExtensionSet, Framework, Limits, Semantics};

fn set(f: &Framework, labels: &[&str]) -> ArgSet {
    f.set_of(labels).unwrap()
}

fn sets(f: &Framework, groups: &[&[&str]]) -> ExtensionSet {
    groups.iter().map(|g| set(f, g)).collect()
}

#[test]
fn building_frameworks() {
    let one = Framework::build(["a"], Vec::<(&str, &str)>::new()).unwrap();
    assert_eq!((one.len(), one.attack_count()), (1, 0));
    assert_eq!(
        Framework::build(["a"], [("a", "b")]),
        Err(Error::UnknownLabel("b".into()))
    );
    assert!(matches!(
        Framework::build(["a", "a"], Vec::<(&str, &str)>::new()),
        Err(Error::DuplicateLabel(_))
    ));
    let t3 = Framework::build(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
    assert_eq!(t3, fixtures::three_cycle());
}

#[test]
fn set_operations() {
    let t3 = fixtures::three_cycle();
    let n = t3.neighborhoods(&set(&t3, &["a"]));
    assert_eq!(n.plus, set(&t3, &["b"]));
    assert_eq!(n.minus, set(&t3, &["c"]));
    assert_eq!(n.range, set(&t3, &["a", "b"]));
    let (skf, skg) = fixtures::skepticism_pair();
    assert_eq!(skf.range(&set(&skf, &["b"])), skf.all());
    assert_eq!(skf.conflicts(), skg.conflicts());

    assert!(t3.defends(&set(&t3, &["a"]), 2));
    assert!(!t3.defends(&ArgSet::new(), 0));
    let pt = fixtures::pentagon_tail();
    assert_eq!(pt.characteristic(&ArgSet::new()), set(&pt, &["a"]));

    let wr = fixtures::weak_reinstatement();
    assert!(!wr.is_conflict_free(&set(&wr, &["b3"])));

    let r = t3.restrict(&set(&t3, &["a", "b"]));
    assert_eq!(r.framework.attack_pairs(), vec![(0, 1)]);
    assert!(pt.restrict(&ArgSet::new()).framework.is_empty());
}

#[test]
fn decomposition() {
    let l4 = fixtures::ladder4();
    let dec = decompose(&l4);
    assert_eq!(dec.components.len(), 2);
    assert_eq!(dec.components[0], set(&l4, &["b1"]));
    let big = dec.components[1].clone();
    assert_eq!(d_s(&l4, &set(&l4, &["b1"]), &big), set(&l4, &["a1"]));

    let ch = fixtures::chain(5);
    let order: Vec<ArgSet> = decompose(&ch).components;
    assert_eq!(
        order,
        (0..5).rev().map(ArgSet::singleton).collect::<Vec<_>>()
    );

    let ab = fixtures::single_attack();
    assert_eq!(
        unattacked_sets(&ab, 16).unwrap(),
        vec![ArgSet::new(), set(&ab, &["a"]), ab.all()]
    );
    let xy = fixtures::chain_xy(5);
    assert!(unattacked_sets(&xy, 4096)
        .unwrap()
        .contains(&set(&xy, &["x", "y"])));
    assert_eq!(separation(&ab).attack_count(), 0);
}

#[test]
fn base_semantics() {
    let (skf, skg) = fixtures::skepticism_pair();
    let lim = Limits::default();
    assert_eq!(enumerate_stage(&skf, &lim).unwrap(), sets(&skf, &[&["b"]]));
    assert_eq!(enumerate_stage(&skg, &lim).unwrap(), sets(&skg, &[&["a"]]));
    assert_eq!(
        enumerate_conflict_free(&skf, &lim).unwrap(),
        sets(&skf, &[&[], &["a"], &["b"]])
    );
    let wr = fixtures::weak_reinstatement();
    assert_eq!(grounded(&wr), set(&wr, &["a", "b1"]));
}

#[test]
fn empty_framework_has_only_the_empty_extension() {
    let e = Framework::empty();
    for which in Semantics::ALL {
        assert_eq!(
            enumerate_semantics(&e, which, &Limits::default()).unwrap(),
            ExtensionSet::new(vec![ArgSet::new()]),
            "{which}"
        );
    }
}

#[test]
fn oracle_contract() {
    let lone = oracle::random_framework(1, 0.0, 0.0, 7).unwrap();
    assert_eq!((lone.len(), lone.attack_count()), (1, 0));
    let full = oracle::random_framework(6, 1.0, 1.0, 7).unwrap();
    for which in Semantics::COMPARED {
        assert_eq!(
            oracle::brute_force(&full, which).unwrap(),
            ExtensionSet::new(vec![ArgSet::new()])
        );
    }
    assert_eq!(
        oracle::random_framework(9, 0.25, 0.1, 42).unwrap(),
        oracle::random_framework(9, 0.25, 0.1, 42).unwrap()
    );
    assert!(oracle::random_framework(16, 0.5, 0.5, 1).is_err());
    assert!(oracle::random_framework(3, 1.5, 0.5, 1).is_err());
    assert!(oracle::brute_force(&fixtures::chain(16), Semantics::Naive).is_err());
}

#[test]
fn directionality_on_truncations() {
    let lim = Limits::default();
    let ab = fixtures::single_attack();
    assert!(
        !check_directionality(&ab, Semantics::Naive, None, &lim)
            .unwrap()
            .holds
    );

    // x, y and a0 … a7.
    let xy8 = Generator::omega_chain_xy().truncate(10);
    let cf15 = enumerate_semantics(&xy8, Semantics::Cf15, &lim).unwrap();
    assert_eq!(cf15, sets(&xy8, &[&["x"], &["y", "a7"]]));
    let u = set(&xy8, &["x", "y"]);
    assert!(
        check_directionality(&xy8, Semantics::Cf15, Some(&u), &lim)
            .unwrap()
            .holds
    );

    let tight = Limits {
        unattacked_cap: 2,
        ..lim
    };
    assert!(matches!(
        check_directionality(&xy8, Semantics::Cf15, None, &tight),
        Err(Error::TooManyUnattackedSets { cap: 2 })
    ));
}

#[test]
fn conflict_free_reinstatement_for_all_semantics_on_fixtures() {
    let lim = Limits::default();
    for (name, f) in fixtures::all() {
        for which in Semantics::COMPARED {
            let es = enumerate_semantics(&f, which, &lim).unwrap();
            assert!(
                check_reinstatement(&f, &es, Reinstatement::ConflictFree).holds,
                "{name} {which}"
            );
        }
    }
}
