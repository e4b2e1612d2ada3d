#include "expost/truncated_normal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "expost/error.hpp"

namespace expost {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr double kNarrow = 1e-4;  // standardized width below which a local expansion is used

struct Moments {
  double mean = 0.0;  // standardized
  double var = 0.0;
};

// exp(-(b^2 - a^2)/2) for a <= b, zero when b is infinite.
double gauss_ratio(double a, double b) {
  if (std::isinf(b)) return 0.0;
  return std::exp(-0.5 * (b - a) * (b + a));
}

// Standardized moments on [a, b] with 0 <= a < b.
Moments upper_tail(double a, double b) {
  double r = gauss_ratio(a, b);
  double den = 0.5 * kSqrt2Pi * (erfcx(a * kInvSqrt2) - (r == 0.0 ? 0.0 : erfcx(b * kInvSqrt2) * r));
  double num = std::isinf(b) ? 1.0 : -std::expm1(-0.5 * (b - a) * (b + a));
  double mean = num / den;
  double bterm = r == 0.0 ? 0.0 : b * r;
  double var = 1.0 + (a - bterm) / den - mean * mean;
  return {mean, var};
}

Moments standardized(double a, double b) {
  if (b - a < kNarrow) {
    // density ~ exp(-z^2/2) is nearly linear across the interval
    double c = 0.5 * (a + b);
    double d2 = (b - a) * (b - a);
    return {c - c * d2 / 12.0, d2 / 12.0};
  }
  if (a >= 0.0) return upper_tail(a, b);
  if (b <= 0.0) {
    Moments m = upper_tail(-b, -a);
    return {-m.mean, m.var};
  }
  double pa = norm_pdf(a), pb = norm_pdf(b);
  double z = 1.0 - 0.5 * std::erfc(b * kInvSqrt2) - 0.5 * std::erfc(-a * kInvSqrt2);
  double mean = (pa - pb) / z;
  double ta = std::isinf(a) ? 0.0 : a * pa;
  double tb = std::isinf(b) ? 0.0 : b * pb;
  return {mean, 1.0 + (ta - tb) / z - mean * mean};
}

Moments checked(double mu, double sigma, double lo, double hi) {
  if (!(sigma > 0.0) || std::isnan(mu) || std::isnan(lo) || std::isnan(hi) || lo > hi)
    throw Error(ErrorCode::InvalidInput, "truncated normal needs sigma > 0 and lo <= hi");
  return standardized((lo - mu) / sigma, (hi - mu) / sigma);
}

}  // namespace

double erfcx(double x) {
  if (x < 25.0) return std::exp(x * x) * std::erfc(x);
  if (std::isinf(x)) return 0.0;
  // continued fraction 1/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  double f = x;
  for (int k = 60; k >= 1; --k) f = x + 0.5 * k / f;
  return 1.0 / (std::sqrt(std::numbers::pi) * f);
}

double norm_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double norm_pdf(double z) { return std::exp(-0.5 * z * z) / kSqrt2Pi; }

double truncated_normal_mean(double mu, double sigma, double lo, double hi) {
  if (lo == hi) return lo;
  double m = mu + sigma * checked(mu, sigma, lo, hi).mean;
  return std::clamp(m, lo, hi);
}

double truncated_normal_variance(double mu, double sigma, double lo, double hi) {
  if (lo == hi) return 0.0;
  double v = sigma * sigma * checked(mu, sigma, lo, hi).var;
  return std::max(v, 0.0);
}

}  // namespace expost
