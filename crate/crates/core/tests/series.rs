//! Pump displacement, pattern series and the printed data they must reproduce.

use std::fs;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use trilin_core::algebra::{heisenberg, BosonMonomial, Mode, OperatorPolynomial};
use trilin_core::closed_forms::{ClosedFormId, Phase};
use trilin_core::series::{
    back_substitute, classify, sequence, substitute_pump, verify_all, verify_appendix_a, verify_series, verify_table1,
    PatternSeries, Sequence, Status, TaylorOracle,
};
use trilin_core::{FormatError, GaussianRational};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn mono(e: [u32; 6]) -> BosonMonomial {
    BosonMonomial::new(e)
}

fn q(n: i64, d: i64) -> GaussianRational {
    GaussianRational::ratio(n, d)
}

fn fact(n: i64) -> i64 {
    (1..=n).product()
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn printed_order_eight_operators() {
    for mode in Mode::ALL {
        let r = verify_appendix_a(mode, &fixtures()).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.terms_checked > 100);
    }
    let c8 = heisenberg(Mode::C, 8).unwrap();
    assert_eq!(c8.coefficient(4, &mono([0, 0, 0, 0, 0, 1])), Some(&q(1, fact(4))));
    assert_eq!(heisenberg(Mode::A, 8).unwrap().truncate(0), OperatorPolynomial::monomial(mono([0, 1, 0, 0, 0, 0])));
}

#[test]
fn altered_fixture_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["SHA256SUMS", "appendix_a_mode_a.json", "appendix_a_mode_c.json"] {
        fs::copy(fixtures().join(f), dir.path().join(f)).unwrap();
    }
    let path = dir.path().join("appendix_a_mode_c.json");
    let text = fs::read_to_string(&path).unwrap().replacen("\"num_re\":1,", "\"num_re\":2,", 1);
    fs::write(&path, text).unwrap();
    assert!(matches!(verify_appendix_a(Mode::C, dir.path()), Err(FormatError::Checksum { .. })));
    assert!(verify_appendix_a(Mode::A, dir.path()).unwrap().passed);
    fs::remove_file(dir.path().join("appendix_a_mode_a.json")).unwrap();
    assert!(matches!(verify_appendix_a(Mode::A, dir.path()), Err(FormatError::Io { .. })));
}

#[test]
fn pump_substitution_examples() {
    let e = substitute_pump(&OperatorPolynomial::term(mono([0, 0, 1, 0, 0, 1]), 1, -GaussianRational::i()));
    assert_eq!(e.len(), 2);
    assert_eq!(e.coefficient(1, mono([0, 0, 1, 0, 0, 0]), 1), Some(&-GaussianRational::i()));
    assert_eq!(e.coefficient(1, mono([0, 0, 1, 0, 0, 1]), 0), Some(&-GaussianRational::i()));

    let e = substitute_pump(&OperatorPolynomial::term(mono([0, 1, 0, 0, 1, 1]), 2, q(1, 2)));
    assert_eq!(e.len(), 4);
    for (ops, deg) in [([0, 1, 0, 0, 0, 0], 2), ([0, 1, 0, 0, 1, 0], 1), ([0, 1, 0, 0, 0, 1], 1), ([0, 1, 0, 0, 1, 1], 0)] {
        assert_eq!(e.coefficient(2, mono(ops), deg), Some(&q(1, 2)));
    }
}

#[test]
fn substitution_round_trips() {
    for mode in Mode::ALL {
        let p = heisenberg(mode, 8).unwrap();
        let e = substitute_pump(&p);
        // The only term with more α than χ is the bare pump amplitude of c_o.
        for (k, _) in e.iter() {
            assert!(k.suborder() >= 0 || (mode == Mode::C && k.suborder() == -1 && k.monomial.ops.is_identity()));
        }
        assert_eq!(back_substitute(&e).into_operator().unwrap(), p);
    }
}

fn series_of(c: &[PatternSeries], ops: [u32; 6], s: i32) -> &PatternSeries {
    c.iter().find(|p| p.pattern == mono(ops) && p.suborder == s).expect("pattern present")
}

#[test]
fn classification_examples() {
    let a8 = classify(&substitute_pump(&heisenberg(Mode::A, 8).unwrap()), 2);
    let a = series_of(&a8.series, [0, 1, 0, 0, 0, 0], 0);
    let expected: Vec<_> = (0..=4).map(|k| (2 * k, q(1, fact(2 * k as i64)))).collect();
    assert_eq!(a.entries, expected);
    assert!(a8.discarded_terms > 0);

    let c8 = classify(&substitute_pump(&heisenberg(Mode::C, 8).unwrap()), 2);
    let id = series_of(&c8.series, [0; 6], 1);
    let expected = vec![(2, q(-1, 2)), (4, q(-4, fact(4))), (6, q(-16, fact(6))), (8, q(-64, fact(8)))];
    assert_eq!(id.entries, expected);

    let bare = classify(&substitute_pump(&OperatorPolynomial::monomial(mono([0, 1, 0, 0, 0, 0]))), 2);
    assert_eq!(bare.series.len(), 1);
    assert_eq!(bare.series[0].entries, vec![(0, GaussianRational::one())]);
}

#[test]
fn first_two_suborders_have_exactly_five_patterns() {
    let c = classify(&substitute_pump(&heisenberg(Mode::A, 8).unwrap()), 1);
    let mut got: Vec<_> = c.series.iter().map(|s| (s.suborder, s.pattern)).collect();
    got.sort();
    let mut want = vec![
        (0, mono([0, 1, 0, 0, 0, 0])),
        (0, mono([0, 0, 1, 0, 0, 0])),
        (1, mono([0, 1, 0, 0, 1, 0])),
        (1, mono([0, 1, 0, 0, 0, 1])),
        (1, mono([0, 0, 1, 0, 0, 1])),
        (1, mono([0, 0, 1, 0, 1, 0])),
    ];
    want.sort();
    // a(δc + δc†) is one bracket over two monomials, so five patterns span six monomials.
    assert_eq!(got, want);
}

#[test]
fn series_against_taylor_oracles() {
    let a15 = classify(&substitute_pump(&heisenberg(Mode::A, 15).unwrap()), 1);
    let a = series_of(&a15.series, [0, 1, 0, 0, 0, 0], 0);
    assert_eq!(verify_series(a, &TaylorOracle::new(ClosedFormId::Cosh, Phase::One), 15).status, Status::Pass);
    let bdc = series_of(&a15.series, [0, 0, 1, 0, 0, 1], 1);
    let r = verify_series(bdc, &TaylorOracle::new(ClosedFormId::SignalIdlerDc, Phase::MinusI), 15);
    assert_eq!(r.status, Status::Pass, "{r:?}");
    let wrong = verify_series(a, &TaylorOracle::new(ClosedFormId::Sinh, Phase::One), 15);
    assert_eq!(wrong.status, Status::Mismatch);
    assert!(wrong.first_mismatch.is_some());
}

#[test]
fn full_series_verification_to_order_fifteen() {
    let v = verify_all(15).unwrap();
    for m in &v.modes {
        let bad: Vec<_> = m.series.iter().filter(|s| s.status != Status::Pass).collect();
        assert!(bad.is_empty(), "{:?}: {bad:#?}", m.mode);
    }
    assert!(v.sum_forms.iter().all(|c| c.passed));
    assert!(v.main_text.iter().all(|c| c.passed));
    assert!(v.moments.iter().all(|m| m.passed), "{:#?}", v.moments);
    assert!(v.passed);
}

#[test]
fn shallow_verification_is_a_prefix_of_the_deep_one() {
    let (short, long) = (verify_all(8).unwrap(), verify_all(12).unwrap());
    assert_eq!(short.passed, long.passed);
    for (s, l) in short.modes.iter().zip(&long.modes) {
        let names = |m: &trilin_core::series::ModeReport| m.series.iter().map(|r| (r.suborder, r.pattern.clone())).collect::<Vec<_>>();
        assert_eq!(names(s), names(l));
    }
}

#[test]
fn sequence_values() {
    assert_eq!(sequence(Sequence::A, 3).unwrap(), int(135));
    assert_eq!(sequence(Sequence::Z, 1).unwrap(), int(1));
    assert_eq!(sequence(Sequence::Y, 2).unwrap(), int(25));
    assert_eq!(sequence(Sequence::Z, 6).unwrap(), int(8289280));
    assert_eq!(sequence(Sequence::A, -1).unwrap(), BigRational::new(1.into(), 3.into()));
    assert_eq!(sequence(Sequence::Y, -1).unwrap(), BigRational::new(2.into(), 3.into()));
    assert!(sequence(Sequence::Z, -1).is_err());
    assert!(sequence(Sequence::A, -2).is_err());
}

#[test]
fn sequence_table() {
    let r = verify_table1();
    assert!(r.passed);
    assert_eq!(r.matched, r.cells.len());
    assert_eq!(r.cells.len(), 31);
}
