mod common;

use lucasforge::{factorial_quotient_report, LucasCache};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn seeded_instances_agree() {
    let table = LucasCache::default();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut verdicts = [0usize; 2];
    for _ in 0..60 {
        let inst = common::random_instance(&mut rng);
        let exact = table
            .try_factorial_quotient(&inst.nums, &inst.dens, inst.k)
            .unwrap()
            .is_some();
        let report = factorial_quotient_report(&inst.nums, &inst.dens, inst.k);
        assert_eq!(
            exact,
            report.verdict,
            "{inst:?}, first failing row {:?}",
            report.first_failure()
        );
        verdicts[usize::from(exact)] += 1;
    }
    assert!(verdicts[0] > 0 && verdicts[1] > 0, "{verdicts:?}");
}

#[test]
fn central_ratio_is_not_a_polynomial() {
    let table = LucasCache::default();
    assert!(table
        .try_factorial_quotient(&[4], &[2, 4], 1)
        .unwrap()
        .is_none());
    assert!(!factorial_quotient_report(&[4], &[2, 4], 1).verdict);
}
