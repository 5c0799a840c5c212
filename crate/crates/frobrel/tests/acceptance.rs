//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Every comparison here is exact — set equality of relations, table
//! equality of structures — with no numeric tolerances anywhere. Run with
//! `cargo test --test acceptance -- --nocapture` to see the pass lines.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use frobrel::correspondence::{frob_to_simplicial, roundtrip_frob, roundtrip_simp, simplicial_to_frob};
use frobrel::enumerate::{brute_force, smart_enumerate, up_to_iso};
use frobrel::exterior::SubsetSpec;
use frobrel::files::{self, FrobeniusFile};
use frobrel::frobenius::FrobeniusObject;
use frobrel::groupoid::{catalog, Groupoid};
use frobrel::rel::Relation;
use frobrel::term::{builtin, genus_invariant, parse};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn load_object(name: &str) -> FrobeniusObject {
    files::load::<FrobeniusFile>(&data(name))
        .unwrap()
        .to_object()
        .unwrap()
}

/// Every verified object the suite touches: the full enumerations for
/// carriers up to three elements, the induced objects of the groupoid
/// catalog, the two exterior builtins, and the shipped example file.
fn verified_corpus() -> Vec<FrobeniusObject> {
    let mut corpus = Vec::new();
    corpus.extend(smart_enumerate(2).unwrap());
    corpus.extend(smart_enumerate(3).unwrap());
    for g in catalog(6) {
        corpus.push(g.hcc_frobenius().unwrap());
    }
    corpus.push(SubsetSpec::one_volume(2).unwrap().build_frobenius().unwrap());
    corpus.push(SubsetSpec::torus().build_frobenius().unwrap());
    corpus.push(load_object("one_volume.json"));
    // Dual structures of verified objects are verified objects too.
    let duals: Vec<FrobeniusObject> = corpus
        .iter()
        .flat_map(|f| [f.rotation_dual(), f.dagger_dual(), f.opposite_dual()])
        .collect();
    corpus.extend(duals);
    corpus.sort();
    corpus.dedup();
    corpus
}

/// The full battery of structural laws every verified object satisfies,
/// asserted at zero tolerance.
fn lemma_battery(f: &FrobeniusObject) {
    let tag = || format!("object on {:?}", f.carrier().labels());
    let id = Relation::identity(f.carrier(), 1);

    // Associativity and coassociativity as relation equalities.
    assert_eq!(
        builtin("assoc_left").unwrap().evaluate(f),
        builtin("assoc_right").unwrap().evaluate(f),
        "associativity at {}",
        tag()
    );
    assert_eq!(
        parse("comul ; comul * id").unwrap().evaluate(f),
        parse("comul ; id * comul").unwrap().evaluate(f),
        "coassociativity at {}",
        tag()
    );

    let derived = f.extract_alpha().unwrap();
    let hat = derived.alpha_hat();

    // The exchange identities and the pointwise three-way equivalence.
    assert!(f.check_md_identities(&derived).passes(), "exchange at {}", tag());

    // Unit/counit exchange through the rotation bijection.
    for x in f.carrier().iter() {
        let image = hat.apply(x);
        assert_eq!(
            f.eta_labels().contains(&x),
            f.epsilon_labels().contains(&image),
            "unit/counit exchange at {}",
            tag()
        );
        assert_eq!(
            f.epsilon_labels().contains(&x),
            f.eta_labels().contains(&image),
            "counit/unit exchange at {}",
            tag()
        );
    }

    // Source and target along multiplication triples.
    for [x, y, z] in f.mu_triples() {
        assert_eq!(derived.source_of(x), derived.target_of(y), "s(x) = t(y) at {}", tag());
        assert_eq!(derived.source_of(y), derived.source_of(z), "s(y) = s(z) at {}", tag());
        assert_eq!(derived.target_of(x), derived.target_of(z), "t(x) = t(z) at {}", tag());
    }

    // The source map factors through the target map and the rotation.
    for x in f.carrier().iter() {
        assert_eq!(
            derived.source_of(x),
            derived.target_of(hat.apply(x)),
            "s = t ∘ α̂ at {}",
            tag()
        );
    }

    // Both snake composites evaluate to the diagonal.
    assert_eq!(builtin("snake_left").unwrap().evaluate(f), id, "snake at {}", tag());
    assert_eq!(builtin("snake_right").unwrap().evaluate(f), id, "snake at {}", tag());

    // Rotation invariance of the multiplication.
    assert!(f.check_rotation_property(&derived).passes(), "rotation at {}", tag());

    // Commutativity agrees with its semantic reading through the twist.
    assert_eq!(
        f.is_commutative(),
        parse("swap ; mul").unwrap().evaluate(f) == f.mu_rel(),
        "twist reading of commutativity at {}",
        tag()
    );

    // The exchange identity in evaluated form: (1 × α) ∘ (δ × 1) = μ.
    let alpha_term = parse("comul * id ; id * (mul ; counit)").unwrap();
    assert_eq!(alpha_term.evaluate(f), f.mu_rel(), "pairing exchange at {}", tag());

    // Relabeling along α̂ realizes the rotation dual; along α̂² it is an
    // automorphism.
    assert_eq!(f.relabeled(hat), f.rotation_dual(), "rotation relabeling at {}", tag());
    assert_eq!(f.relabeled(derived.nakayama()), *f, "Nakayama relabeling at {}", tag());

    // The round trip through the simplicial side is exact.
    assert!(roundtrip_frob(f).unwrap().passes(), "roundtrip at {}", tag());
}

#[test]
fn criterion_1_shipped_example_fidelity() {
    // The shipped two-element example file carries exactly the known
    // tables, and the checker accepts it.
    let file: FrobeniusFile = files::load(&data("one_volume.json")).unwrap();
    assert_eq!(file.elements, ["1", "nu"]);
    assert_eq!(file.eta, ["1"]);
    assert_eq!(file.epsilon, ["nu"]);
    let mu: Vec<[&str; 3]> = file.mu.iter().map(|t| [&*t[0], &*t[1], &*t[2]]).collect();
    assert_eq!(
        mu,
        [["1", "1", "1"], ["1", "nu", "nu"], ["nu", "1", "nu"]]
    );
    let delta: Vec<[&str; 3]> = file.delta.iter().map(|t| [&*t[0], &*t[1], &*t[2]]).collect();
    assert_eq!(
        delta,
        [["1", "1", "nu"], ["1", "nu", "1"], ["nu", "nu", "nu"]]
    );

    // The checker front end passes with the commutativity report.
    let run = std::process::Command::new(env!("CARGO_BIN_EXE_frobrel"))
        .args(["check", data("one_volume.json").to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(run.status.code(), Some(0));
    let report = String::from_utf8_lossy(&run.stdout);
    assert!(report.contains("commutative: yes"));

    // Passing to the simplicial side and back reproduces the
    // comultiplication table exactly.
    let f = file.to_object().unwrap();
    assert!(f.verify().passes());
    assert!(f.is_commutative());
    let back = simplicial_to_frob(&frob_to_simplicial(&f).unwrap()).unwrap();
    assert_eq!(back, f);
    assert_eq!(
        back.delta_triples(),
        vec![["1", "1", "nu"], ["1", "nu", "1"], ["nu", "nu", "nu"]]
    );
    println!("criterion 1 (shipped example fidelity): PASS");
}

#[test]
fn criterion_2_torus_fidelity() {
    let f = SubsetSpec::torus().build_frobenius().unwrap();
    assert!(f.verify().passes());
    assert!(!f.is_commutative());
    assert!(!f.is_dagger());
    let derived = f.extract_alpha().unwrap();
    // The squared rotation negates the degree-one covectors.
    assert_eq!(derived.nakayama().apply("e1"), "-e1");
    assert_eq!(derived.nakayama().apply("-e1"), "e1");
    assert_eq!(derived.nakayama().apply("e2"), "-e2");
    assert!(!derived.nakayama().is_identity());
    // The fourth power is the identity on all eight elements.
    let fourth = derived.alpha_hat().pow(4);
    assert!(fourth.is_identity());
    println!("criterion 2 (torus fidelity): PASS");
}

#[test]
fn criterion_3_theorem_roundtrips() {
    let mut corpus = smart_enumerate(2).unwrap();
    for g in catalog(6) {
        corpus.push(g.hcc_frobenius().unwrap());
    }
    corpus.push(SubsetSpec::one_volume(2).unwrap().build_frobenius().unwrap());
    corpus.push(SubsetSpec::torus().build_frobenius().unwrap());

    for f in &corpus {
        assert!(roundtrip_frob(f).unwrap().passes(), "roundtrip at {f:?}");
        let a = frob_to_simplicial(f).unwrap();
        assert!(a.base().validate().passes());
        assert!(a.base().check_p1().passes());
        assert!(a.base().check_p2().passes());
        assert!(a.check_p3().passes());
        assert!(a.check_delta2_invariance().passes());
    }
    println!(
        "criterion 3 (theorem roundtrips on {} objects): PASS",
        corpus.len()
    );
}

#[test]
fn criterion_4_groupoid_correspondence() {
    let groupoids = catalog(6);
    for g in &groupoids {
        let direct = g.hcc_frobenius().unwrap();
        let nerve = g.nerve().unwrap();
        let via_nerve = simplicial_to_frob(&nerve).unwrap();
        assert_eq!(direct, via_nerve, "routes disagree on {:?}", g.arrows());
        assert!(direct.is_special());
        assert!(direct.is_dagger());

        // The rotation bijection is the inverse map, and source and target
        // factor through the identity arrows.
        let derived = direct.extract_alpha().unwrap();
        for arrow in g.arrows().iter() {
            assert_eq!(derived.alpha_hat().apply(arrow), g.inverse_of(arrow).unwrap());
            assert_eq!(
                derived.source_of(arrow),
                g.identity_of(g.source_of(arrow).unwrap()).unwrap()
            );
            assert_eq!(
                derived.target_of(arrow),
                g.identity_of(g.target_of(arrow).unwrap()).unwrap()
            );
        }

        // The nerve round-trips through the object side up to the
        // canonical renaming of triangles.
        let roundtrip = roundtrip_simp(&nerve).unwrap();
        assert!(roundtrip.verdict.passes());
        assert!(roundtrip.congruence.is_some());
    }
    println!(
        "criterion 4 (groupoid correspondence on {} groupoids): PASS",
        groupoids.len()
    );
}

#[test]
fn criterion_5_lemma_battery() {
    let corpus = verified_corpus();
    for f in &corpus {
        lemma_battery(f);
    }
    println!(
        "criterion 5 (lemma battery on {} objects): PASS",
        corpus.len()
    );
}

#[test]
fn criterion_6_oracle_equivalence() {
    let budget_raw = Duration::from_secs(300);
    let budget_pruned = Duration::from_secs(600);

    let started = Instant::now();
    let raw = brute_force(2).unwrap();
    let raw_elapsed = started.elapsed();
    assert!(raw_elapsed < budget_raw, "raw search took {raw_elapsed:?}");

    let pruned = smart_enumerate(2).unwrap();
    assert_eq!(raw, pruned, "the two enumeration routes disagree");

    let started = Instant::now();
    let three = smart_enumerate(3).unwrap();
    let pruned_elapsed = started.elapsed();
    assert!(
        pruned_elapsed < budget_pruned,
        "pruned search took {pruned_elapsed:?}"
    );

    // The special dagger members correspond to groupoids, arrow count for
    // carrier size.
    for (objects, arrows) in [(&pruned, 2usize), (&three, 3usize)] {
        let special_dagger: Vec<FrobeniusObject> = objects
            .iter()
            .filter(|f| f.is_special() && f.is_dagger())
            .cloned()
            .collect();
        let classes = up_to_iso(&special_dagger);
        let groupoid_objects: Vec<FrobeniusObject> = catalog(6)
            .iter()
            .filter(|g| g.arrows().len() == arrows)
            .map(|g| g.hcc_frobenius().unwrap())
            .collect();
        assert_eq!(
            classes.len(),
            groupoid_objects.len(),
            "class count vs groupoid count at {arrows} arrows"
        );
        // The matching is a bijection: every class hits exactly one
        // groupoid object and every groupoid object is hit.
        let mut taken = vec![false; groupoid_objects.len()];
        for class in &classes {
            let position = groupoid_objects
                .iter()
                .position(|g| class.is_isomorphic(g).is_some())
                .expect("every special dagger class is a groupoid object");
            assert!(!taken[position], "two classes match one groupoid");
            taken[position] = true;
        }
    }
    println!(
        "criterion 6 (oracle equivalence; raw {raw_elapsed:?}, pruned {pruned_elapsed:?}): PASS"
    );
}

#[test]
fn criterion_7_commutativity_consequences() {
    let mut checked = 0usize;
    for n in 0..=3 {
        for f in smart_enumerate(n).unwrap() {
            if !f.is_commutative() {
                continue;
            }
            checked += 1;
            assert_eq!(f.opposite_dual(), f, "opposite fixes {f:?}");
            let derived = f.extract_alpha().unwrap();
            assert!(
                derived.nakayama().is_identity(),
                "rotation bijection squares to the identity at {f:?}"
            );
            for x in f.carrier().iter() {
                assert_eq!(derived.source_of(x), derived.target_of(x), "s = t at {f:?}");
            }
        }
    }
    println!(
        "criterion 7 (commutativity consequences on {checked} objects): PASS"
    );
}

#[test]
fn criterion_8_term_language() {
    // The parser corpus round-trips.
    let corpus = [
        "unit",
        "counit",
        "mul",
        "comul",
        "id",
        "swap",
        "mul ; counit",
        "unit ; comul",
        "mul ; comul",
        "comul ; mul",
        "swap ; mul",
        "mul * id ; mul",
        "id * mul ; mul",
        "comul * id ; id * mul",
        "id * comul ; mul * id",
        "(id * (unit ; comul)) ; ((mul ; counit) * id)",
        "((unit ; comul) * id) ; (id * (mul ; counit))",
        "unit ; comul ; mul ; counit",
        "swap ; swap",
        "unit * unit ; mul",
    ];
    assert!(corpus.len() >= 20);
    for text in corpus {
        let term = parse(text).unwrap();
        assert_eq!(parse(&term.to_string()).unwrap(), term, "round trip of `{text}`");
    }

    // The three Frobenius composites agree on every verified object, and
    // the genus-0 surface reads off whether unit and counit meet.
    let objects = verified_corpus();
    for f in &objects {
        let left = builtin("frob_left").unwrap().evaluate(f);
        let middle = builtin("frob_mid").unwrap().evaluate(f);
        let right = builtin("frob_right").unwrap().evaluate(f);
        assert_eq!(left, middle, "Frobenius composites at {f:?}");
        assert_eq!(middle, right, "Frobenius composites at {f:?}");
        let units_meet = f
            .eta_labels()
            .iter()
            .any(|u| f.epsilon_labels().contains(u));
        assert_eq!(genus_invariant(f, 0), units_meet, "sphere at {f:?}");
    }

    // Closed surfaces over the two-element group are always inhabited.
    let z2 = Groupoid::cyclic_group(2).hcc_frobenius().unwrap();
    for genus in 0..=5 {
        assert!(genus_invariant(&z2, genus), "genus {genus}");
    }
    println!(
        "criterion 8 (term language on {} objects): PASS",
        objects.len()
    );
}
