#include "belyi/stern_moments.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace belyi {

namespace {

BigInt pow2(std::uint32_t e) { return BigInt(1) << e; }
BigInt pow3(std::uint32_t e) { return boost::multiprecision::pow(BigInt(3), e); }

constexpr double kSqrt17 = 4.12310562561766054982;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

SternRow stern_row(std::uint32_t step, std::pair<std::uint64_t, std::uint64_t> seed) {
  if (step > 30)
    throw std::invalid_argument("stern_row: step " + std::to_string(step) +
                                " exceeds the memory cap of 30");
  SternRow row;
  row.step = step;
  row.seed = seed;
  row.values = {seed.first, seed.second};
  for (std::uint32_t i = 0; i < step; ++i) {
    std::vector<std::uint64_t> next(2 * row.values.size() - 1);
    for (std::size_t j = 0; j + 1 < row.values.size(); ++j) {
      next[2 * j] = row.values[j];
      if (__builtin_add_overflow(row.values[j], row.values[j + 1], &next[2 * j + 1]))
        throw std::overflow_error("stern_row: entry exceeds 64 bits");
    }
    next.back() = row.values.back();
    row.values = std::move(next);
  }
  return row;
}

MomentVector moment_vector_step(const MomentVector& v) {
  // Right-multiplying a word matrix by L maps (a b; c d) to (a a+b; c c+d),
  // by R to (a+b b; c+d d). Summing both children expands every tracked
  // monomial sum in the parent sums.
  MomentVector n;
  n.step = v.step + 1;
  n.a = 2 * v.a + v.b;
  n.b = v.a + 2 * v.b;
  n.c = 2 * v.c + v.d;
  n.d = v.c + 2 * v.d;
  n.a2 = 2 * v.a2 + 2 * v.ab + v.b2;
  n.b2 = v.a2 + 2 * v.ab + 2 * v.b2;
  n.c2 = 2 * v.c2 + 2 * v.cd + v.d2;
  n.d2 = v.c2 + 2 * v.cd + 2 * v.d2;
  n.ab = v.a2 + 2 * v.ab + v.b2;
  n.cd = v.c2 + 2 * v.cd + v.d2;
  n.ac = 2 * v.ac + v.ad + v.bc + v.bd;
  n.ad = v.ac + 2 * v.ad + v.bd;
  n.bc = v.ac + 2 * v.bc + v.bd;
  n.bd = v.ac + v.ad + v.bc + 2 * v.bd;
  return n;
}

MomentVector moments_at(std::uint32_t step) {
  MomentVector v = MomentVector::initial();
  for (std::uint32_t i = 0; i < step; ++i) v = moment_vector_step(v);
  return v;
}

Rational entry_mean(std::uint32_t step) {
  return Rational(pow3(step) + 1, pow2(step + 1));
}

Rational trace_mean(std::uint32_t step) {
  return Rational(pow3(step) + 1, pow2(step));
}

PowerSums power_sums(std::uint32_t step) {
  if (step < 1) throw std::invalid_argument("power_sums: step must be >= 1");
  BigInt a = 2, b = 1;  // A(1), B(1)
  for (std::uint32_t i = 1; i < step; ++i) {
    const BigInt na = 3 * a + 2 * b - 1;
    const BigInt nb = 2 * a + 2 * b - 1;
    a = na;
    b = nb;
  }
  return {a, b};
}

BigInt diag_product_sum(std::uint32_t step) { return moments_at(step).ad; }

Rational trace_covariance(std::uint32_t step) {
  const Rational mean = entry_mean(step);
  return Rational(diag_product_sum(step), pow2(step)) - mean * mean;
}

Rational entry_variance(std::uint32_t step) {
  const Rational mean = entry_mean(step);
  return Rational(power_sums(step).square_sum, pow2(step)) - mean * mean;
}

Rational trace_variance(std::uint32_t step) {
  const MomentVector v = moments_at(step);
  const Rational mean = entry_mean(step);
  return Rational(2 * (v.a2 + v.ad), pow2(step)) - 4 * mean * mean;
}

Rational correlation(std::uint32_t step) {
  if (step < 2) throw std::domain_error("correlation: undefined below step 2");
  return trace_covariance(step) / entry_variance(step);
}

double correlation_limit() { return (51.0 - 11.0 * kSqrt17) / (34.0 - 6.0 * kSqrt17); }

std::uint32_t covariance_sign_change_step(std::uint32_t max_step) {
  for (std::uint32_t i = 1; i <= max_step; ++i)
    if (trace_covariance(i) >= 0) return i;
  throw std::runtime_error("covariance_sign_change_step: no sign change found");
}

double closed_form_square_sum(std::uint32_t step) {
  const double x = step;
  const double num = 17.0 * std::pow(2.0, x) * (-5.0 + kSqrt17) +
                     std::pow(5.0 + kSqrt17, x) * (-34.0 + 6.0 * kSqrt17) +
                     std::pow(5.0 - kSqrt17, x) * (-51.0 + 11.0 * kSqrt17);
  return std::pow(2.0, -x - 1.0) * num / (17.0 * (-5.0 + kSqrt17));
}

double closed_form_diag_product(std::uint32_t step) {
  const double x = step;
  return (1.0 / 17.0) * std::pow(2.0, -x - 2.0) *
         (17.0 * std::pow(2.0, 2.0 * x + 1.0) -
          (-17.0 + kSqrt17) * std::pow(5.0 + kSqrt17, x) +
          std::pow(5.0 - kSqrt17, x) * (17.0 + kSqrt17));
}

double closed_form_covariance(std::uint32_t step) {
  const double x = step;
  const double num = 17.0 * (-1.0 + std::pow(2.0, 2.0 * x + 1.0) - 2.0 * std::pow(3.0, x) -
                             std::pow(9.0, x)) -
                     (-17.0 + kSqrt17) * std::pow(5.0 + kSqrt17, x) +
                     std::pow(5.0 - kSqrt17, x) * (17.0 + kSqrt17);
  return num / (17.0 * std::pow(4.0, x + 1.0));
}

double closed_form_trace_variance(std::uint32_t step) {
  const double x = step;
  return std::pow(4.0, -x) *
         (-1.0 + std::pow(2.0, x) - 2.0 * std::pow(3.0, x) + std::pow(4.0, x) -
          std::pow(9.0, x) + std::pow(5.0 - kSqrt17, x) + std::pow(5.0 + kSqrt17, x));
}

std::string stern_table_csv(std::uint32_t max_step) {
  std::string out = "step,entry_mean,trace_mean,trace_variance,covariance,correlation\n";
  for (std::uint32_t i = 1; i <= max_step; ++i) {
    out += std::to_string(i);
    out += ',' + fmt12(entry_mean(i).convert_to<double>());
    out += ',' + fmt12(trace_mean(i).convert_to<double>());
    out += ',' + fmt12(trace_variance(i).convert_to<double>());
    out += ',' + fmt12(trace_covariance(i).convert_to<double>());
    out += ',';
    if (i >= 2) out += fmt12(correlation(i).convert_to<double>());
    out += '\n';
  }
  return out;
}

}  // namespace belyi
