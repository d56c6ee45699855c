use num_traits::Zero;
use vcell::fixtures::*;
use vcell::vandermonde::{
    sample_simplex, vandermonde_map, BoundaryPatch, MultiplicityVector, UrsellType,
};
use vcell::{int, rat, Poly, Rational};

#[test]
fn q_vanishes_on_the_quartic_image() {
    let q = quartic_q();
    for x in sample_simplex(3, 200, 5) {
        assert!(q.eval(&vandermonde_map(&x, 4).unwrap()).unwrap().is_zero());
    }
    // a point of the 4-simplex is off the surface
    let y = vandermonde_map(&[rat(1, 10), rat(2, 10), rat(3, 10), rat(4, 10)], 4).unwrap();
    assert!(!q.eval(&y).unwrap().is_zero());
}

#[test]
fn p_shape() {
    let p = quartic_p();
    assert_eq!(p.len(), 34);
    assert_eq!(p.total_degree(), 6);
    assert_eq!(p.coeff(&[6, 0, 0]), int(72));
    assert_eq!(p.constant_term(), int(1));
}

#[test]
fn printed_p_differs_in_one_coefficient_and_fails() {
    let diff = &quartic_p() - &quartic_p_printed();
    assert_eq!(diff, Poly::from_terms(&Y, [(vec![6, 0, 0], int(71))]));
    let patch =
        BoundaryPatch::new(MultiplicityVector::new(UrsellType::Type2, 0, vec![2, 1, 1]).unwrap())
            .unwrap();
    let y = patch.eval(&[rat(1, 10), rat(3, 10)]).unwrap();
    assert!(quartic_p().eval(&y).unwrap().is_zero());
    assert!(!quartic_p_printed().eval(&y).unwrap().is_zero());
}

#[test]
fn sampled_tier() {
    let r = verify_quartic_boundaries(120, 17);
    for c in &r.checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn symbolic_tier() {
    assert!(verify_quartic_symbolic().all_passed());
}

#[test]
fn digest_is_pinned() {
    assert_eq!(digest(), FIXTURE_DIGEST);
    assert_eq!(FIXTURE_DIGEST.len(), 64);
}

#[test]
fn same_hypersurface_for_mirrored_patches() {
    let r = verify_same_hypersurface(4, 1, 60, 3).unwrap();
    assert_eq!(r.checks.len(), 2);
    assert!(r.all_passed());
    assert!(verify_same_hypersurface(4, 3, 10, 1).is_err());
    assert!(verify_same_hypersurface(6, 2, 10, 1).is_err());
}

#[test]
fn p_is_nonzero_off_its_patches() {
    // the (2,1,1) patch is a genuine boundary, away from the interior image of 3 points
    let x = [rat(1, 5), rat(3, 10), rat(1, 2)];
    let y = vandermonde_map(&x, 4).unwrap();
    let v: Rational = quartic_p().eval(&y).unwrap();
    assert!(!v.is_zero());
}
