#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace belyi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One row of the interleaved-sums table: row 0 is the seed pair (a, b),
/// row i+1 inserts the sum of each neighboring pair between them, giving
/// 2^i + 1 entries at step i. Seed (1, 0) generates every achievable top
/// row of a turn-word product; seed (0, 1) is its mirror image.
struct SternRow {
  std::uint32_t step = 0;
  std::pair<std::uint64_t, std::uint64_t> seed{1, 0};
  std::vector<std::uint64_t> values;  // 2^step + 1 entries
};

/// Throws std::invalid_argument above step 30 (memory cap) and
/// std::overflow_error if an entry exceeds 64 bits.
SternRow stern_row(std::uint32_t step, std::pair<std::uint64_t, std::uint64_t> seed);

/// Exact sums, over all 2^step turn words, of the four matrix entries and
/// the ten quadratic entry monomials. Evolves by an exact integer linear
/// map: each word spawns an L-child and an R-child, and every tracked sum
/// of the children expands in the parent sums.
struct MomentVector {
  std::uint32_t step = 0;
  BigInt a = 1, b = 0, c = 0, d = 1;
  BigInt a2 = 1, ab = 0, ac = 0, ad = 1, b2 = 0;
  BigInt bc = 0, bd = 0, c2 = 0, cd = 0, d2 = 0;

  static MomentVector initial() {
    MomentVector v;
    v.d2 = 1;
    return v;
  }

  BigInt trace_sum() const { return a + d; }
  BigInt trace_square_sum() const { return a2 + 2 * ad + d2; }
};

MomentVector moment_vector_step(const MomentVector& v);
MomentVector moments_at(std::uint32_t step);

/// Mean of a diagonal entry over all words at the given step:
/// (3^i + 1) / 2^(i+1).
Rational entry_mean(std::uint32_t step);

/// Mean trace over all words: (3^i + 1) / 2^i.
Rational trace_mean(std::uint32_t step);

/// A(i) = sum of squared row entries (equivalently sum over words of a^2)
/// and B(i) = sum of neighboring-entry products (sum over words of a*b).
/// Computed by the coupled recurrence
///   A(i+1) = 3A(i) + 2B(i) - 1,   B(i+1) = 2A(i) + 2B(i) - 1
/// from A(1) = 2, B(1) = 1. The boundary constant is the sum of the
/// squared first and last row entries, which is 1 for seed (1, 0); both
/// recurrences reproduce A(1) = 2, A(2) = 7, A(3) = 30 and agree with the
/// second-order form A(i) = 5A(i-1) - 2A(i-2) - 1.
struct PowerSums {
  BigInt square_sum;    // A(i)
  BigInt neighbor_sum;  // B(i)
};
PowerSums power_sums(std::uint32_t step);

/// C(i) = sum over all words of the diagonal product a*d.
BigInt diag_product_sum(std::uint32_t step);

/// Covariance of the two diagonal entries: C(i)/2^i - entry_mean(i)^2.
Rational trace_covariance(std::uint32_t step);

/// Variance of a single diagonal entry: A(i)/2^i - entry_mean(i)^2.
Rational entry_variance(std::uint32_t step);

/// Variance of the trace: 2 (A(i) + C(i)) / 2^i - 4 entry_mean(i)^2.
Rational trace_variance(std::uint32_t step);

/// Pearson correlation of the diagonal entries, cov/var (the two entries
/// share one variance). Undefined below step 2.
Rational correlation(std::uint32_t step);

/// Limit of correlation(i): (51 - 11 sqrt(17)) / (34 - 6 sqrt(17)).
double correlation_limit();

/// First step at which the diagonal covariance becomes nonnegative.
std::uint32_t covariance_sign_change_step(std::uint32_t max_step = 64);

// Floating-point closed forms (sqrt(17) radicals), validated against the
// exact values in the tests.
double closed_form_square_sum(std::uint32_t step);     // A(i)
double closed_form_diag_product(std::uint32_t step);   // C(i)
double closed_form_covariance(std::uint32_t step);
double closed_form_trace_variance(std::uint32_t step);

/// CSV table "step,entry_mean,trace_mean,trace_variance,covariance,correlation".
std::string stern_table_csv(std::uint32_t max_step);

}  // namespace belyi
