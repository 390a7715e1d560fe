#pragma once

#include <cstddef>
#include <span>

namespace lexigauge::stats {

struct GroupSummary {
  std::size_t n = 0;
  double mean = 0;
  double std_dev = 0;  // sample (n - 1) standard deviation; 0 when n == 1
};

GroupSummary summarize(std::span<const double> values);

enum class TTestKind { Student, Welch };

struct TTestResult {
  double t = 0;
  double df = 0;
  double p_value = 1;  // two-tailed
};

// Two-sample t-test. Student pools the variances; Welch uses the
// Satterthwaite degrees of freedom.
TTestResult t_test(std::span<const double> a, std::span<const double> b, TTestKind kind = TTestKind::Student);
double t_test_p(std::span<const double> a, std::span<const double> b, TTestKind kind = TTestKind::Student);

double pearson(std::span<const double> x, std::span<const double> y);

struct TrendFit {
  double slope = 0;
  double intercept = 0;
  std::size_t n = 0;
};

// Ordinary least squares y = slope x + intercept.
TrendFit linear_regression(std::span<const double> x, std::span<const double> y);

// Regularized incomplete beta I_x(a, b), by Lentz's continued fraction.
double incomplete_beta(double a, double b, double x);

// CDF of Student's t distribution with `df` degrees of freedom.
double student_t_cdf(double t, double df);

}  // namespace lexigauge::stats
