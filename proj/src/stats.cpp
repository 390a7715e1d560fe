#include "lexigauge/stats.hpp"

#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "lexigauge/error.hpp"

namespace lexigauge::stats {

namespace {

double mean_of(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Sum of squared deviations from the mean.
double centered_ss(std::span<const double> v, double mean) {
  double s = 0;
  for (double x : v) s += (x - mean) * (x - mean);
  return s;
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxTerms = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxTerms; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  return h;
}

void require_pair(std::span<const double> x, std::span<const double> y, const char* what) {
  if (x.size() != y.size()) {
    throw ParameterError(fmt::format("{}: samples differ in length ({} vs {})", what, x.size(), y.size()));
  }
  if (x.size() < 2) throw InsufficientDataError(fmt::format("{}: needs at least 2 points", what));
}

}  // namespace

GroupSummary summarize(std::span<const double> values) {
  if (values.empty()) throw UndefinedInputError("summary of an empty sample");
  GroupSummary s;
  s.n = values.size();
  s.mean = mean_of(values);
  s.std_dev = s.n > 1 ? std::sqrt(centered_ss(values, s.mean) / static_cast<double>(s.n - 1)) : 0.0;
  return s;
}

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0) || !(b > 0)) throw ParameterError("incomplete beta needs a, b > 0");
  if (!(x >= 0 && x <= 1)) throw ParameterError(fmt::format("incomplete beta argument {} outside [0, 1]", x));
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  // Use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) where the fraction converges faster.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
  if (!(df > 0)) throw ParameterError("t distribution needs df > 0");
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
  return t > 0 ? 1.0 - tail : tail;
}

TTestResult t_test(std::span<const double> a, std::span<const double> b, TTestKind kind) {
  if (a.size() < 2 || b.size() < 2) {
    throw InsufficientDataError(
        fmt::format("t-test needs at least 2 values per sample, got {} and {}", a.size(), b.size()));
  }
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double m1 = mean_of(a);
  const double m2 = mean_of(b);
  const double ss1 = centered_ss(a, m1);
  const double ss2 = centered_ss(b, m2);

  TTestResult r;
  double se;
  if (kind == TTestKind::Student) {
    r.df = n1 + n2 - 2.0;
    const double pooled = (ss1 + ss2) / r.df;
    se = std::sqrt(pooled * (1.0 / n1 + 1.0 / n2));
  } else {
    const double v1 = ss1 / (n1 - 1.0) / n1;
    const double v2 = ss2 / (n2 - 1.0) / n2;
    se = std::sqrt(v1 + v2);
    const double denom = v1 * v1 / (n1 - 1.0) + v2 * v2 / (n2 - 1.0);
    r.df = denom > 0 ? (v1 + v2) * (v1 + v2) / denom : n1 + n2 - 2.0;
  }

  const double diff = m1 - m2;
  if (!(se > 0)) {
    // Both samples are constant.
    r.t = diff == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    r.p_value = diff == 0 ? 1.0 : 0.0;
    return r;
  }
  r.t = diff / se;
  r.p_value = incomplete_beta(0.5 * r.df, 0.5, r.df / (r.df + r.t * r.t));
  return r;
}

double t_test_p(std::span<const double> a, std::span<const double> b, TTestKind kind) {
  return t_test(a, b, kind).p_value;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  require_pair(x, y, "pearson");
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my);
  const double sxx = centered_ss(x, mx);
  const double syy = centered_ss(y, my);
  if (!(sxx > 0) || !(syy > 0)) throw UndefinedInputError("correlation with a zero-variance sample");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::max(-1.0, std::min(1.0, r));
}

TrendFit linear_regression(std::span<const double> x, std::span<const double> y) {
  require_pair(x, y, "linear regression");
  const double mx = mean_of(x);
  const double my = mean_of(y);
  const double sxx = centered_ss(x, mx);
  if (!(sxx > 0)) throw InsufficientDataError("linear regression needs distinct x values");
  double sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my);
  TrendFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n = x.size();
  return fit;
}

}  // namespace lexigauge::stats
