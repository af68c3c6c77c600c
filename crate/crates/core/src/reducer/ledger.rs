//! Per-step accounting. Deleting `X` from `G` and extending by `A` vertices
//! preserves the bound iff `A + (a − 1)N + bM − bΛ ≥ 0`, where `N = |X|`,
//! `M` counts the lost edges and `Λ = λ(G − X) − λ(G)`. Summed over a run the
//! values telescope to `|I| − guarantee(G)`.

use crate::constants::ConstantsPair;
use crate::scalar::ExactScalar;

pub fn step_value<T: ExactScalar>(a_count: usize, n: usize, m: usize, lambda_change: i64, c: &ConstantsPair<T>) -> T {
    let lambda = T::from_i64(lambda_change).expect("fits");
    T::from_count(a_count) + (c.a.clone() - T::one()) * T::from_count(n) + c.b.clone() * T::from_count(m)
        - c.b.clone() * lambda
}

/// A rule whose own step may be negative, followed by the removals of the
/// difficult components it leaves behind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergedCase<T> {
    pub name: &'static str,
    pub value: T,
}

// (A, N, M, Λ) of the steps in each sequence.
type Step = (usize, usize, usize, i64);

const TRIANGLE: Step = (1, 3, 3, -1);
const TWO_CHAIN: Step = (2, 6, 7, -1);
const CASES: [(&str, &[Step]); 4] = [
    ("R5(Phi=1) + R4", &[(1, 3, 4, 1), TWO_CHAIN]),
    ("R8(M=10,Lambda=2) + R3 + R3", &[(1, 4, 10, 2), TRIANGLE, TRIANGLE]),
    ("R8(M=10,Lambda=2) + R3 + R4", &[(1, 4, 10, 2), TRIANGLE, TWO_CHAIN]),
    ("R8(M=9,Lambda=1) + R4", &[(1, 4, 9, 1), TWO_CHAIN]),
];

/// Ledger totals of the configurations that are only paid for once the
/// difficult components they create have been removed.
pub fn merged_case_sums<T: ExactScalar>(c: &ConstantsPair<T>) -> Vec<MergedCase<T>> {
    CASES
        .iter()
        .map(|&(name, steps)| MergedCase {
            name,
            value: steps.iter().fold(T::zero(), |acc, &(a, n, m, l): &Step| acc + step_value(a, n, m, l, c)),
        })
        .collect()
}

/// Whether the sequential reducer is guaranteed to meet the bound at `c`
/// (given that `c` satisfies the nine conditions).
pub fn supports_sequential_absorption<T: ExactScalar>(c: &ConstantsPair<T>) -> bool {
    merged_case_sums(c).iter().all(|m| !m.value.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn single_steps_at_reference_constants() {
        let c = ConstantsPair::<Rational>::reference();
        let v = |a, n, m, l| step_value(a, n, m, l, &c);
        assert_eq!(v(1, 1, 0, 0), Rational::ratio(19, 34));
        assert_eq!(v(1, 3, 3, -1), Rational::ratio(1, 34));
        assert_eq!(v(2, 6, 7, -1), Rational::ratio(2, 34));
        assert_eq!(v(1, 3, 4, 1), Rational::ratio(-2, 34));
        assert_eq!(v(0, 1, 5, 0), Rational::ratio(0, 1));
    }

    #[test]
    fn merged_cases_at_reference_constants() {
        let sums = merged_case_sums(&ConstantsPair::<Rational>::reference());
        let values: Vec<Rational> = sums.iter().map(|m| m.value).collect();
        assert_eq!(
            values,
            vec![Rational::ratio(0, 1), Rational::ratio(0, 1), Rational::ratio(1, 34), Rational::ratio(0, 1)]
        );
        assert!(supports_sequential_absorption(&ConstantsPair::<Rational>::reference()));
    }

    #[test]
    fn every_feasible_pair_is_supported() {
        // The only merged sum that is not one of the nine conditions is
        // 13a + 20b - 9. Minimizing 13a + 20b over the feasible polygon is
        // maximizing 1 - a - (20/13)b.
        let opt = crate::constants::optimize_for_density(&Rational::ratio(20, 13)).unwrap();
        assert_eq!(opt.constants, ConstantsPair::reference());
        let min = Rational::from_integer(13) * opt.constants.a + Rational::from_integer(20) * opt.constants.b;
        assert_eq!(min, Rational::ratio(307, 34));
        assert!(supports_sequential_absorption(&ConstantsPair { a: Rational::ratio(5, 13), b: Rational::ratio(3, 13) }));
        // Outside the feasible region the check does fail.
        assert!(!supports_sequential_absorption(&ConstantsPair { a: Rational::ratio(1, 2), b: Rational::ratio(1, 10) }));
    }
}
