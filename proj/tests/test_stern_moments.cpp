#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "belyi/stern_moments.hpp"

using belyi::BigInt;
using belyi::Rational;
using belyi::stern_row;

namespace {

// Independent oracle for the word-moment sums: multiply plain 2x2 integer
// matrices over every word of the given length and add up the monomials.
struct Sums {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  std::int64_t a2 = 0, ab = 0, ac = 0, ad = 0, b2 = 0;
  std::int64_t bc = 0, bd = 0, c2 = 0, cd = 0, d2 = 0;
};

Sums brute_force_sums(std::uint32_t len) {
  Sums s;
  for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
    std::int64_t m[2][2] = {{1, 0}, {0, 1}};
    for (std::uint32_t j = 0; j < len; ++j) {
      const std::int64_t L[2][2] = {{1, 1}, {0, 1}};
      const std::int64_t R[2][2] = {{1, 0}, {1, 1}};
      const auto& W = ((bits >> j) & 1u) ? R : L;
      std::int64_t out[2][2];
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out[r][c] = m[r][0] * W[0][c] + m[r][1] * W[1][c];
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m[r][c] = out[r][c];
    }
    const std::int64_t a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    s.a += a; s.b += b; s.c += c; s.d += d;
    s.a2 += a * a; s.ab += a * b; s.ac += a * c; s.ad += a * d; s.b2 += b * b;
    s.bc += b * c; s.bd += b * d; s.c2 += c * c; s.cd += c * d; s.d2 += d * d;
  }
  return s;
}

BigInt row_square_sum(std::uint32_t step) {
  const auto row = stern_row(step, {1, 0});
  BigInt s = 0;
  for (const auto v : row.values) s += BigInt(v) * v;
  return s;
}

BigInt row_neighbor_sum(std::uint32_t step) {
  const auto row = stern_row(step, {1, 0});
  BigInt s = 0;
  for (std::size_t j = 0; j + 1 < row.values.size(); ++j)
    s += BigInt(row.values[j]) * row.values[j + 1];
  return s;
}

}  // namespace

TEST_CASE("rows grow by neighbor-sum interleaving") {
  CHECK(stern_row(0, {1, 0}).values == std::vector<std::uint64_t>{1, 0});
  CHECK(stern_row(1, {1, 0}).values == std::vector<std::uint64_t>{1, 1, 0});
  CHECK(stern_row(2, {1, 0}).values == std::vector<std::uint64_t>{1, 2, 1, 1, 0});
  CHECK(stern_row(3, {1, 0}).values ==
        std::vector<std::uint64_t>{1, 3, 2, 3, 1, 2, 1, 1, 0});
  CHECK(stern_row(2, {1, 1}).values == std::vector<std::uint64_t>{1, 3, 2, 3, 1});
  CHECK_THROWS_AS(stern_row(31, {1, 0}), std::invalid_argument);
}

TEST_CASE("seed (0,1) rows mirror seed (1,0) rows") {
  for (std::uint32_t i = 0; i <= 12; ++i) {
    auto a = stern_row(i, {1, 0}).values;
    const auto b = stern_row(i, {0, 1}).values;
    std::reverse(a.begin(), a.end());
    CHECK(a == b);
  }
}

TEST_CASE("consecutive entries of the standard row are coprime") {
  const auto row = stern_row(14, {1, 0});
  for (std::size_t j = 0; j + 2 < row.values.size(); ++j)
    CHECK(std::gcd(row.values[j], row.values[j + 1]) == 1);
}

TEST_CASE("row sums: S(i) = (3^i + 1)/2 with the trailing zero dropped") {
  for (std::uint32_t i = 1; i <= 20; ++i) {
    const auto row = stern_row(i, {1, 0});
    BigInt sum = 0;
    for (const auto v : row.values) sum += v;
    CHECK(sum == (boost::multiprecision::pow(BigInt(3), i) + 1) / 2);
    CHECK(row.values.size() == (std::size_t(1) << i) + 1);
    CHECK(row.values.back() == 0);
  }
  // spot check at the memory-heavy end
  const auto row25 = stern_row(25, {1, 0});
  BigInt sum = 0;
  for (const auto v : row25.values) sum += v;
  CHECK(sum == BigInt("423644304722"));
}

TEST_CASE("entry and trace means") {
  CHECK(belyi::entry_mean(1) == 1);
  CHECK(belyi::entry_mean(2) == Rational(5, 4));
  CHECK(belyi::entry_mean(10) == Rational(59050, 2048));
  CHECK(belyi::trace_mean(1) == 2);
  CHECK(belyi::trace_mean(2) == Rational(5, 2));
  CHECK(belyi::trace_mean(3) == Rational(7, 2));

  // equals the brute-force mean of the trailing-zero-dropped row
  for (std::uint32_t i = 1; i <= 12; ++i) {
    const auto row = stern_row(i, {1, 0});
    BigInt sum = 0;
    for (std::size_t j = 0; j + 1 < row.values.size(); ++j) sum += row.values[j];
    CHECK(belyi::entry_mean(i) == Rational(sum, BigInt(1) << i));
  }
}

TEST_CASE("power sums trace the row and the word ensemble") {
  const auto p1 = belyi::power_sums(1);
  CHECK(p1.square_sum == 2);
  CHECK(p1.neighbor_sum == 1);
  CHECK(belyi::power_sums(2).square_sum == 7);
  CHECK(belyi::power_sums(3).square_sum == 30);

  for (std::uint32_t i = 1; i <= 14; ++i) {
    const auto p = belyi::power_sums(i);
    CHECK(p.square_sum == row_square_sum(i));
    CHECK(p.neighbor_sum == row_neighbor_sum(i));
  }

  // the second-order recurrence A(i) = 5A(i-1) - 2A(i-2) - 1
  for (std::uint32_t i = 3; i <= 40; ++i) {
    CHECK(belyi::power_sums(i).square_sum == 5 * belyi::power_sums(i - 1).square_sum -
                                                 2 * belyi::power_sums(i - 2).square_sum - 1);
  }

  CHECK(belyi::power_sums(20).square_sum == BigInt("4726101083175"));
  CHECK(belyi::power_sums(20).neighbor_sum == BigInt("3690028220025"));
  CHECK(belyi::power_sums(40).square_sum == BigInt("71904679425928103955996151"));
}

TEST_CASE("diagonal product sums") {
  CHECK(belyi::diag_product_sum(1) == 2);
  CHECK(belyi::diag_product_sum(2) == 6);
  CHECK(belyi::diag_product_sum(3) == 22);
  CHECK(belyi::diag_product_sum(20) == BigInt("2881087497450"));
  CHECK(belyi::diag_product_sum(40) == BigInt("43833940823009839194371626"));
}

TEST_CASE("moment vector engine equals brute force on all 14 sums") {
  for (std::uint32_t i = 1; i <= 12; ++i) {
    const auto v = belyi::moments_at(i);
    const Sums s = brute_force_sums(i);
    CHECK(v.a == s.a);
    CHECK(v.b == s.b);
    CHECK(v.c == s.c);
    CHECK(v.d == s.d);
    CHECK(v.a2 == s.a2);
    CHECK(v.ab == s.ab);
    CHECK(v.ac == s.ac);
    CHECK(v.ad == s.ad);
    CHECK(v.b2 == s.b2);
    CHECK(v.bc == s.bc);
    CHECK(v.bd == s.bd);
    CHECK(v.c2 == s.c2);
    CHECK(v.cd == s.cd);
    CHECK(v.d2 == s.d2);
  }
}

TEST_CASE("engine steps reproduce the quoted small values") {
  const auto one = belyi::moments_at(1);
  CHECK(one.trace_sum() == 4);  // mean trace 2 over {L, R}
  CHECK(belyi::moments_at(2).ad == 6);
  // symmetry of the two diagonal sums
  for (std::uint32_t i = 1; i <= 20; ++i) {
    const auto v = belyi::moments_at(i);
    CHECK(v.a == v.d);
    CHECK(v.a2 == v.d2);
  }
}

TEST_CASE("covariance, variances, correlation") {
  CHECK(belyi::trace_covariance(1) == 0);
  CHECK(belyi::trace_variance(1) == 0);
  CHECK(belyi::trace_variance(2) == Rational(1, 4));
  CHECK(belyi::trace_covariance(2) == Rational(-1, 16));
  CHECK(belyi::trace_covariance(12) == Rational(BigInt("-7646518321"), BigInt("16777216")));
  CHECK(belyi::trace_variance(20) ==
        Rational(BigInt("948941320051095599"), BigInt("274877906944")));

  // exhaustive cross-check of the variance identity
  for (std::uint32_t i = 1; i <= 12; ++i) {
    const Sums s = brute_force_sums(i);
    const Rational mean_tr = Rational(s.a + s.d, BigInt(1) << i);
    const Rational e_tr2 = Rational(s.a2 + 2 * s.ad + s.d2, BigInt(1) << i);
    CHECK(belyi::trace_variance(i) == e_tr2 - mean_tr * mean_tr);
  }

  CHECK(belyi::correlation_limit() == doctest::Approx(0.609611796798).epsilon(1e-10));
  CHECK(belyi::covariance_sign_change_step() == 21);
  CHECK(belyi::correlation(2) == Rational(-1, 3));
  // correlation climbs toward the limit but is far from it at step 30
  CHECK(belyi::correlation(30).convert_to<double>() ==
        doctest::Approx(0.159717).epsilon(1e-4));
  CHECK(belyi::correlation(40) > belyi::correlation(30));
  CHECK_THROWS_AS(belyi::correlation(1), std::domain_error);
}

TEST_CASE("closed forms match exact values to 1e-9 relative") {
  for (std::uint32_t i = 1; i <= 40; ++i) {
    const double a_exact = belyi::power_sums(i).square_sum.convert_to<double>();
    const double c_exact = belyi::diag_product_sum(i).convert_to<double>();
    CHECK(belyi::closed_form_square_sum(i) ==
          doctest::Approx(a_exact).epsilon(1e-9));
    CHECK(belyi::closed_form_diag_product(i) ==
          doctest::Approx(c_exact).epsilon(1e-9));
    const double cov = belyi::trace_covariance(i).convert_to<double>();
    const double var = belyi::trace_variance(i).convert_to<double>();
    CHECK(belyi::closed_form_covariance(i) == doctest::Approx(cov).epsilon(1e-9));
    CHECK(belyi::closed_form_trace_variance(i) == doctest::Approx(var).epsilon(1e-9));
  }
}

TEST_CASE("csv table carries the headline columns") {
  const auto csv = belyi::stern_table_csv(4);
  CHECK(csv.find("step,entry_mean,trace_mean,trace_variance,covariance,correlation") == 0);
  CHECK(csv.find("\n1,1,2,0,0,") != std::string::npos);
  CHECK(csv.find("\n3,") != std::string::npos);
}
