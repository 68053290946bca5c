//! Every registered family within a small size budget: both checkers pass,
//! agree with each other, still agree (and fail) after corruption, and the
//! action satisfies Burnside's lemma.

use csp_lab::sieve::{check, orbit_decompose, Caps, Checker, CspInstance, Family};

fn small_instances() -> Vec<CspInstance> {
    let mut specs: Vec<String> = Vec::new();
    for n in 1..=7 {
        specs.push(format!("cycle:n={n}"));
        for k in 0..=5 {
            specs.push(format!("multiset:n={n},k={k}"));
            specs.push(format!("subset:n={n},k={k}"));
        }
    }
    specs.push("subset:n=6,k=3,gen=(1,2)(3,4)(5,6)".into());
    specs.push("multiset:n=7,k=3,gen=(1,2,3)(4,5,6)".into());
    for (m, n) in [(1, 4), (2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 2)] {
        specs.push(format!("syt_rect:m={m},n={n}"));
    }
    for n in 1..=6 {
        specs.push(format!("ncm:n={n}"));
        specs.push(format!("ncp:n={n}"));
        specs.push(format!("triangulation:n={n}"));
    }
    for n in 1..=5 {
        for la in csp_lab::Partition::all(n) {
            let parts: Vec<String> = la.parts().iter().map(ToString::to_string).collect();
            specs.push(format!("conj_class:lambda={}", parts.join(",")));
        }
    }
    // n=4 (the hexagon) is covered separately below.
    specs.extend(["proper_triangulation:n=2", "proper_triangulation:n=6"].map(String::from));
    for n in [3, 4, 5] {
        for k in 0..=3 {
            specs.push(format!("plethysm:base=cycle:n={n},k={k},kind=h"));
        }
    }
    for n in [3, 5] {
        for k in 0..=n {
            specs.push(format!("plethysm:base=cycle:n={n},k={k},kind=e"));
        }
    }
    specs.push("plethysm:base=ncp:n=3,k=2,kind=h".into());

    let caps = Caps { size: 2000, order: 100 };
    specs
        .iter()
        .map(|s| {
            let family: Family = s.parse().unwrap_or_else(|e| panic!("{s}: {e}"));
            family.instantiate(&caps).unwrap_or_else(|e| panic!("{s}: {e}"))
        })
        .collect()
}

fn name(inst: &CspInstance) -> String {
    format!("{} {:?}", inst.family, inst.params)
}

#[test]
fn every_small_instance_passes_both_checkers() {
    for inst in small_instances() {
        let report = check(&inst, Checker::Both);
        assert!(report.verdict.passed(), "{}", name(&inst));
        assert_eq!(report.roots_verdict, report.orbits_verdict, "{}", name(&inst));
    }
}

#[test]
fn corrupted_polynomials_fail_both_checkers() {
    for inst in small_instances() {
        for i in [0usize, 1, 2] {
            let report = check(&inst.corrupted(i), Checker::Both);
            assert!(!report.verdict.passed(), "{} corrupted at {i}", name(&inst));
            assert_eq!(report.roots_verdict, report.orbits_verdict, "{} corrupted at {i}", name(&inst));
        }
    }
}

#[test]
fn burnside_counts_orbits() {
    for inst in small_instances() {
        let a = &inst.action;
        let total: usize = (0..a.group_order()).map(|j| a.fixed_count(j)).sum();
        let orbits = orbit_decompose(a);
        assert_eq!(total as u64, a.group_order() * orbits.len() as u64, "{}", name(&inst));
        for o in &orbits {
            assert_eq!(o.stabilizer_order * o.len() as u64, a.group_order());
        }
        assert_eq!(a.fixed_count(0), a.size());
        assert_eq!(inst.polynomial.eval_at_one(), a.size().into());
    }
}

#[test]
fn nearly_free_generators() {
    let caps = Caps::default();
    for spec in ["subset:n=6,k=2,gen=(1,2)(3,4)(5,6)", "subset:n=7,k=3,gen=(1,2)(3,4)(5,6)", "multiset:n=5,k=3,gen=(1,2)(3,4)"] {
        let inst = spec.parse::<Family>().unwrap().instantiate(&caps).unwrap();
        assert!(check(&inst, Checker::Both).verdict.passed(), "{spec}");
    }
    for spec in ["subset:n=5,k=2,gen=(1,2)", "subset:n=6,k=2,gen=(1,2,3)(4,5)"] {
        let err = spec.parse::<Family>().unwrap().instantiate(&caps).unwrap_err();
        assert!(matches!(err, csp_lab::sieve::SieveError::NotNearlyFree(_)), "{spec}: {err}");
    }
}

/// With the proper-triangulation polynomial above, the hexagon fails
/// at the half-turn: six centrally symmetric triangulations, all proper,
/// against f(-1) = 0. Any f of the form [2]_{q^2} b(q) Cat_{2,2}(q) has
/// f(-1) = 6 b(-1) with b(1) = 2, and b(1), b(-1) have the same parity, so
/// no choice of the bracket can repair it.
#[test]
fn proper_hexagon_half_turn_mismatch() {
    let inst = "proper_triangulation:n=4".parse::<Family>().unwrap().instantiate(&Caps::default()).unwrap();
    let report = check(&inst, Checker::Both);
    let bad: Vec<(u64, u64, &str)> = report
        .rows
        .iter()
        .filter(|r| !r.matches)
        .map(|r| (r.j, r.fixed, r.eval.as_str()))
        .collect();
    assert_eq!(bad, vec![(3, 6, "0")]);
    assert_eq!(report.orbits_verdict, report.roots_verdict);
    assert!(!report.verdict.passed());
}
