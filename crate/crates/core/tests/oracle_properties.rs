mod common;

use common::{random_constraint, random_points, rng};
use rand::Rng;
use rectimax_core::location::{solve_constrained, solve_unconstrained};
use rectimax_core::oracle::{grid_search_min, grid_search_min_with, verify_report};
use rectimax_core::{Error, GridSpec, ObjectiveMode, ProblemInstance, SearchStrategy};

const TOL: f64 = 1e-9;

#[test]
fn pruned_search_equals_exhaustive_search() {
    let mut rng = rng(31);
    for round in 0..60 {
        let m = rng.gen_range(2..12);
        let pts = random_points(&mut rng, m, 10.0, 3.0);
        let cons = (round % 3 != 0).then(|| random_constraint(&mut rng, 10.0));
        let mode = if round % 2 == 0 {
            ObjectiveMode::Raw
        } else {
            ObjectiveMode::Merged
        };
        let step = rng.gen_range(0.07..0.3);
        let spec = GridSpec::new(-15.0, 15.0, -12.0, 14.0, step).unwrap();
        let full =
            grid_search_min_with(&pts, cons.as_ref(), &spec, mode, SearchStrategy::Exhaustive);
        let fast = grid_search_min_with(&pts, cons.as_ref(), &spec, mode, SearchStrategy::Pruned);
        assert_eq!(full, fast, "round {round}");
    }
}

#[test]
fn auto_window_contains_the_minimizers() {
    let mut rng = rng(32);
    for _ in 0..200 {
        let m = rng.gen_range(2..30);
        let pts = random_points(&mut rng, m, 100.0, 10.0);
        let spec = GridSpec::auto(&pts, 0.05).unwrap();
        let rep = solve_unconstrained(&pts, 0.5).unwrap();
        assert!(spec.contains(rep.endpoint_alpha0) && spec.contains(rep.endpoint_alpha1));

        let inst =
            ProblemInstance::new(pts.clone(), Some(random_constraint(&mut rng, 100.0))).unwrap();
        let rep = solve_constrained(&inst, 0.5).unwrap();
        // no hints: the window must still contain the merged minimizers
        let spec =
            GridSpec::auto_for(&pts, inst.constraint(), ObjectiveMode::Merged, 0.05, &[]).unwrap();
        assert!(spec.contains(rep.endpoint_alpha0) || spec.contains(rep.endpoint_alpha1));
    }
}

#[test]
fn grid_minimum_brackets_the_optimum() {
    let mut rng = rng(33);
    for _ in 0..40 {
        let m = rng.gen_range(2..20);
        let pts = random_points(&mut rng, m, 20.0, 4.0);
        let step = 0.1;
        let spec = GridSpec::auto(&pts, step).unwrap();
        let rep = solve_unconstrained(&pts, 0.5).unwrap();
        let min = grid_search_min(&pts, None, &spec, ObjectiveMode::Raw).unwrap();
        assert!(min.value >= rep.lambda - TOL);
        assert!(min.value <= rep.lambda + 3.0 * step + TOL);
    }
}

#[test]
fn verdicts_are_deterministic() {
    let mut rng = rng(34);
    let pts = random_points(&mut rng, 15, 30.0, 5.0);
    let inst = ProblemInstance::new(pts, Some(random_constraint(&mut rng, 30.0))).unwrap();
    let rep = solve_constrained(&inst, 0.5).unwrap();
    let spec = GridSpec::auto_for(
        inst.points(),
        inst.constraint(),
        ObjectiveMode::Merged,
        0.05,
        &[rep.endpoint_alpha0, rep.endpoint_alpha1],
    )
    .unwrap();
    let first = verify_report(&inst, &rep, &spec).unwrap();
    assert!(first.passed(), "{:?}", first.failures);
    for _ in 0..3 {
        assert_eq!(verify_report(&inst, &rep, &spec).unwrap(), first);
    }
}

#[test]
fn random_reports_pass_verification() {
    let mut rng = rng(35);
    for round in 0..40 {
        let m = rng.gen_range(2..20);
        let pts = random_points(&mut rng, m, 50.0, 5.0);
        let cons = (round % 2 == 0).then(|| random_constraint(&mut rng, 50.0));
        let inst = ProblemInstance::new(pts, cons).unwrap();
        let rep = solve_constrained(&inst, rng.gen_range(0.0..=1.0)).unwrap();
        let spec = GridSpec::auto_for(
            inst.points(),
            inst.constraint(),
            if cons.is_some() {
                ObjectiveMode::Merged
            } else {
                ObjectiveMode::Raw
            },
            0.05,
            &[],
        )
        .unwrap();
        let verdict = verify_report(&inst, &rep, &spec).unwrap();
        assert!(verdict.passed(), "round {round}: {:?}", verdict.failures);
    }
}

#[test]
fn empty_point_set_is_rejected() {
    let spec = GridSpec::new(0.0, 1.0, 0.0, 1.0, 0.5).unwrap();
    assert!(matches!(
        grid_search_min(&[], None, &spec, ObjectiveMode::Raw),
        Err(Error::Domain(_))
    ));
    assert!(GridSpec::auto(&[], 0.1).is_err());
}
