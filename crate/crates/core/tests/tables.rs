use std::sync::OnceLock;

use genus3_euler::a3::euler_a111;
use genus3_euler::fixtures::{ABELIAN3, EVEN_GENUS3, HIGH_WEIGHT, ODD_GENUS3};
use genus3_euler::{Evaluator, H3Provider, M2Provider, RowSelection, Sp6Weight};
use num_bigint::BigInt;

fn evaluator() -> &'static Evaluator {
    static E: OnceLock<Evaluator> = OnceLock::new();
    E.get_or_init(|| {
        let base = Evaluator::new(H3Provider::builtin(), M2Provider::empty()).unwrap();
        let report = base.bootstrap_m2(RowSelection::ThirdPartZero).unwrap();
        Evaluator {
            m2: report.provider,
            ..base
        }
    })
}

fn w(parts: [u32; 3]) -> Sp6Weight {
    Sp6Weight::new(parts).unwrap()
}

#[test]
fn even_genus3_rows() {
    let ev = evaluator();
    for (parts, _, nonhyp, total) in EVEN_GENUS3 {
        let l = w(parts);
        assert_eq!(ev.m3_nonhyp(&l).unwrap(), BigInt::from(nonhyp), "{l}");
        assert_eq!(ev.m3(&l).unwrap(), BigInt::from(total), "{l}");
    }
}

#[test]
fn odd_genus3_rows() {
    let ev = evaluator();
    for (parts, total) in ODD_GENUS3 {
        let l = w(parts);
        assert_eq!(ev.m3(&l).unwrap(), BigInt::from(total), "{l}");
    }
}

#[test]
fn abelian_rows_up_to_weight_ten() {
    let ev = evaluator();
    let mut n = 0;
    for (parts, total) in ABELIAN3 {
        let l = w(parts);
        if l.weight() > 10 {
            continue;
        }
        n += 1;
        assert_eq!(ev.a3(&l).unwrap().total, BigInt::from(total), "{l}");
    }
    assert_eq!(n, 38);
}

#[test]
fn abelian_rows_beyond_weight_ten_need_more_genus_two_data() {
    let ev = evaluator();
    let l = w([12, 0, 0]);
    assert!(ev.a3(&l).unwrap_err().is_coverage());
}

#[test]
fn high_weight_columns() {
    let ev = evaluator();
    for (parts, h3, m30, _, a111, _) in HIGH_WEIGHT {
        let l = w(parts);
        assert_eq!(ev.m3_nonhyp(&l).unwrap(), BigInt::from(m30), "{l}");
        assert_eq!(ev.h3.lookup(&l).unwrap(), BigInt::from(h3), "{l}");
        assert_eq!(euler_a111(&l).unwrap(), BigInt::from(a111), "{l}");
    }
}

#[test]
fn bootstrap_is_independent_of_row_choice() {
    let base = Evaluator::new(H3Provider::builtin(), M2Provider::empty()).unwrap();
    let a = base.bootstrap_m2(RowSelection::ThirdPartZero).unwrap();
    let b = base.bootstrap_m2(RowSelection::GreedyFromEnd).unwrap();
    assert_eq!(a.solved_rows.len(), 21);
    assert_eq!(a.held_out_rows.len(), 17);
    assert_ne!(a.solved_rows, b.solved_rows);
    assert_eq!(a.provider.table(), b.provider.table());
    let two = genus3_euler::Sp4Weight::new([2, 0]).unwrap();
    assert!(a.provider.lookup(&two).is_ok());
}

#[test]
fn bootstrapped_genus_two_values() {
    // frozen output of the bootstrap, checked against every held-out row above
    let expected: [([u32; 2], i64); 21] = [
        ([0, 0], 1),
        ([2, 0], 0),
        ([1, 1], -1),
        ([4, 0], 0),
        ([3, 1], 0),
        ([2, 2], -1),
        ([6, 0], -1),
        ([5, 1], -1),
        ([4, 2], 1),
        ([3, 3], -2),
        ([8, 0], -2),
        ([7, 1], -3),
        ([6, 2], -1),
        ([5, 3], -3),
        ([4, 4], 0),
        ([10, 0], 1),
        ([9, 1], -5),
        ([8, 2], -2),
        ([7, 3], -4),
        ([6, 4], 0),
        ([5, 5], -3),
    ];
    let m2 = &evaluator().m2;
    assert!(m2.is_solved());
    assert_eq!(m2.table().len(), 21);
    for (mu, v) in expected {
        let mu = genus3_euler::Sp4Weight::new(mu).unwrap();
        assert_eq!(m2.lookup(&mu).unwrap(), BigInt::from(v), "{mu}");
    }
    let odd = genus3_euler::Sp4Weight::new([3, 0]).unwrap();
    assert_eq!(M2Provider::empty().lookup(&odd).unwrap(), BigInt::from(0));
}

#[test]
fn abelian_examples() {
    let ev = evaluator();
    let b = ev.a3(&w([0, 0, 0])).unwrap();
    assert_eq!(
        [b.m30, b.h3, b.kunneth, b.a111, b.total],
        [2, 1, 1, 1, 5].map(BigInt::from)
    );
    assert_eq!(ev.a3(&w([2, 1, 1])).unwrap().total, BigInt::from(1));
    assert_eq!(ev.a3(&w([9, 1, 0])).unwrap().total, BigInt::from(0));
    assert_eq!(ev.m3(&w([2, 0, 0])).unwrap(), BigInt::from(0));
    assert_eq!(ev.m3(&w([3, 3, 3])).unwrap(), BigInt::from(8));
    assert_eq!(ev.m3(&w([6, 3, 1])).unwrap(), BigInt::from(-9));
}
