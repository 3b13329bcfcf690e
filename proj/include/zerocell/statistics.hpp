#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace zerocell {

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval for a binomial proportion (z = 1.96 gives 95%).
WilsonInterval wilsonInterval(std::size_t successes, std::size_t trials, double z = 1.96);

/// Score statistic (pHat - p0) / sqrt(p0 (1 - p0) / trials): the number of
/// Wilson standard deviations between the observed and the target proportion.
/// Degenerate targets p0 in {0, 1} give 0 on exact agreement and +-inf otherwise.
double wilsonZ(double pHat, double p0, std::size_t trials);

struct BinomialEstimate {
  std::size_t successes = 0;
  std::size_t trials = 0;
  double pHat = 0.0;
  WilsonInterval ci95;

  static BinomialEstimate from(std::size_t successes, std::size_t trials);
  /// sqrt(pHat (1 - pHat) / trials).
  double standardError() const;
};

struct MeanEstimate {
  double mean = 0.0;
  double standardError = 0.0;
  std::size_t count = 0;
};

/// Sample mean and its standard error (sample standard deviation / sqrt(n)).
MeanEstimate meanOf(const std::vector<double>& values);

/// Two-sided one-sample Kolmogorov-Smirnov statistic sup |F_n - F|.
double ksStatistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// P(K > z) for the Kolmogorov distribution, K = lim sqrt(n) D_n.
double kolmogorovSurvival(double z);

/// Asymptotic p-value of a KS statistic over n samples.
double ksPValue(double statistic, std::size_t n);

}  // namespace zerocell
