//! Acceptance suite: one test per criterion, each printing a pass line with
//! its measured runtime (visible with `--nocapture`). Every comparison is
//! bit-exact; runtime bounds are asserted where stated.
//!
//! Run with: `cargo test -p qdivisor-cli --test acceptance`

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use qdivisor_cli::output::{poly_human, OutputRecord};
use qdivisor_core::arithmetic::{divisors, sigma};
use qdivisor_core::erdos_nicolas::{f_value, mean_f_table, means_strictly_increasing};
use qdivisor_core::kr_poly::{
    coefficient_value_set, g_of, largest_coefficient, polynomial,
};
use qdivisor_core::pythagorean::{has_close_divisor_pair, perimeter_oracle};
use qdivisor_core::series_oracle::{expand_product, extract_polynomial};

fn report(criterion: &str, elapsed: Duration) {
    println!("criterion {criterion}: pass ({elapsed:.2?})");
}

#[test]
fn criterion_01_golden_polynomial_p12() {
    // Coefficients [1 x9, 2 x5, 1 x9] over q^0..q^22, bit-exact, < 1 ms.
    let expected: Vec<u64> = [vec![1u64; 9], vec![2u64; 5], vec![1u64; 9]].concat();

    // Warm call, then the timed one.
    let _ = poly_human(&polynomial(12).unwrap());
    let start = Instant::now();
    let poly = polynomial(12).unwrap();
    let listing = poly_human(&poly);
    let elapsed = start.elapsed();

    assert_eq!(poly.full_coefficients(), expected);
    assert_eq!(poly.degree(), 22);
    assert_eq!(
        listing,
        "q^22 + q^21 + q^20 + q^19 + q^18 + q^17 + q^16 + q^15 + q^14 + 2*q^13\n\
         + 2*q^12 + 2*q^11 + 2*q^10 + 2*q^9 + q^8 + q^7 + q^6 + q^5 + q^4 + q^3\n\
         + q^2 + q + 1"
    );
    // The rendered record carries exactly the same coefficients.
    match OutputRecord::from_poly(&poly) {
        OutputRecord::Poly { coefficients, .. } => assert_eq!(coefficients, expected),
        other => panic!("unexpected record {other:?}"),
    }
    assert!(
        elapsed < Duration::from_millis(1),
        "took {elapsed:?}, budget 1 ms"
    );
    report("01 golden polynomial P_12", elapsed);
}

#[test]
fn criterion_02_oracle_equivalence_to_200() {
    // Interval formula == series extraction for every n <= 200, < 30 s.
    let start = Instant::now();
    let series = expand_product(200).unwrap();
    for n in 1..=200u64 {
        let from_series = extract_polynomial(&series, n).unwrap();
        let from_intervals = polynomial(n).unwrap();
        assert_eq!(from_series, from_intervals, "n = {n}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "took {elapsed:?}, budget 30 s"
    );
    report("02 oracle equivalence n <= 200", elapsed);
}

#[test]
fn criterion_03_largest_coefficient_equals_f_to_100_000() {
    // Largest coefficient of P_n(q) == F(n) for all n <= 10^5,
    // single-threaded, < 120 s.
    let start = Instant::now();
    for n in 1..=100_000u64 {
        assert_eq!(
            largest_coefficient(n).unwrap(),
            f_value(n).unwrap(),
            "n = {n}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "took {elapsed:?}, budget 120 s"
    );
    report("03 largest coefficient = F, n <= 100000", elapsed);
}

#[test]
fn criterion_04_checksum_to_10_000() {
    // P_n(1) == sigma(n) for all n <= 10^4, < 60 s.
    let start = Instant::now();
    for n in 1..=10_000u64 {
        assert_eq!(
            polynomial(n).unwrap().value_at_one().unwrap(),
            sigma(n).unwrap(),
            "n = {n}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "took {elapsed:?}, budget 60 s"
    );
    report("04 checksum P_n(1) = sigma(n), n <= 10000", elapsed);
}

#[test]
fn criterion_05_palindrome_degree_extremes_to_10_000() {
    // Coefficient vector palindromic of length 2n-1 with extremes 1.
    let start = Instant::now();
    for n in 1..=10_000u64 {
        let full = polynomial(n).unwrap().full_coefficients();
        assert_eq!(full.len() as u64, 2 * n - 1, "n = {n}");
        assert_eq!(full[0], 1, "n = {n}");
        assert_eq!(*full.last().unwrap(), 1, "n = {n}");
        for i in 0..full.len() / 2 {
            assert_eq!(full[i], full[full.len() - 1 - i], "n = {n}, i = {i}");
        }
    }
    let elapsed = start.elapsed();
    report("05 palindrome/degree/extremes, n <= 10000", elapsed);
}

#[test]
fn criterion_06_pythagorean_equivalence_to_1500() {
    // (max coefficient > 1) == close-pair criterion == brute-force triangle
    // existence at perimeter 2n, for all n <= 1500, < 60 s.
    let start = Instant::now();
    for n in 1..=1_500u64 {
        let by_coefficient = largest_coefficient(n).unwrap() > 1;
        let by_pair = has_close_divisor_pair(n).unwrap().is_some();
        let by_triangle = perimeter_oracle(2 * n).unwrap().is_some();
        assert_eq!(by_coefficient, by_pair, "n = {n}");
        assert_eq!(by_pair, by_triangle, "n = {n}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "took {elapsed:?}, budget 60 s"
    );
    report("06 Pythagorean equivalence, n <= 1500", elapsed);
}

#[test]
fn criterion_07_staircase_to_10_000() {
    // Extended coefficient value set == {0, 1, ..., F(n)} for all n <= 10^4.
    let start = Instant::now();
    for n in 1..=10_000u64 {
        let expected: BTreeSet<u64> = (0..=f_value(n).unwrap()).collect();
        assert_eq!(coefficient_value_set(n).unwrap(), expected, "n = {n}");
    }
    let elapsed = start.elapsed();
    report("07 coefficient staircase, n <= 10000", elapsed);
}

#[test]
fn criterion_08_g_gap_to_10_000() {
    // Consecutive divisors y1 < y2 of 2n satisfy g(y2) - g(y1) >= 2.
    let start = Instant::now();
    for n in 1..=10_000u64 {
        let divs = divisors(2 * n).unwrap();
        let mut previous: Option<i64> = None;
        for &y in divs.iter() {
            let value = g_of(n, y).unwrap().value();
            if let Some(prev) = previous {
                assert!(value - prev >= 2, "n = {n}, y = {y}");
            }
            previous = Some(value);
        }
    }
    let elapsed = start.elapsed();
    report("08 g gap >= 2 on divisors of 2n, n <= 10000", elapsed);
}

#[test]
fn criterion_09_divergence_means_increase_to_1_000_000() {
    // The mean of F over n <= x is strictly increasing across
    // x in {10^2, ..., 10^6}, computed exactly, < 10 min.
    let start = Instant::now();
    let checkpoints = [100u64, 1_000, 10_000, 100_000, 1_000_000];
    let table = mean_f_table(&checkpoints).unwrap();
    assert_eq!(table.len(), checkpoints.len());
    assert!(
        means_strictly_increasing(&table),
        "means: {:?}",
        table
            .iter()
            .map(|p| (p.numerator(), p.denominator()))
            .collect::<Vec<_>>()
    );
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(600),
        "took {elapsed:?}, budget 10 min"
    );
    report("09 divergence: means increase to 10^6", elapsed);
}

#[test]
fn criterion_10_reflection_to_1000() {
    // g(y) == -g(2n/y) for every divisor y of 2n, n <= 10^3.
    let start = Instant::now();
    for n in 1..=1_000u64 {
        let two_n = 2 * n;
        for &y in divisors(two_n).unwrap().iter() {
            assert_eq!(
                g_of(n, y).unwrap().value(),
                -g_of(n, two_n / y).unwrap().value(),
                "n = {n}, y = {y}"
            );
        }
    }
    let elapsed = start.elapsed();
    report("10 reflection g(y) = -g(2n/y), n <= 1000", elapsed);
}
