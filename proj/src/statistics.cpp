#include "zerocell/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zerocell/errors.hpp"

namespace zerocell {

WilsonInterval wilsonInterval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) throw InvalidArgument("Wilson interval needs at least one trial");
  if (successes > trials) throw InvalidArgument("more successes than trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double wilsonZ(double pHat, double p0, std::size_t trials) {
  if (trials == 0) throw InvalidArgument("score statistic needs at least one trial");
  const double var = p0 * (1.0 - p0) / static_cast<double>(trials);
  if (var <= 0.0) {
    if (pHat == p0) return 0.0;
    return pHat > p0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  }
  return (pHat - p0) / std::sqrt(var);
}

BinomialEstimate BinomialEstimate::from(std::size_t successes, std::size_t trials) {
  BinomialEstimate b;
  b.successes = successes;
  b.trials = trials;
  b.pHat = static_cast<double>(successes) / static_cast<double>(trials);
  b.ci95 = wilsonInterval(successes, trials);
  return b;
}

double BinomialEstimate::standardError() const {
  return std::sqrt(pHat * (1.0 - pHat) / static_cast<double>(trials));
}

MeanEstimate meanOf(const std::vector<double>& values) {
  MeanEstimate out;
  out.count = values.size();
  if (values.empty()) return out;
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.standardError = std::sqrt(ss / (n - 1.0) / n);
  }
  return out;
}

double ksStatistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw InvalidArgument("KS statistic needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double kolmogorovSurvival(double z) {
  if (z <= 0.0) return 1.0;
  if (z < 0.27) return 1.0;  // the series below converges slowly; the value is 1 to 1e-10 here
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * z * z);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double ksPValue(double statistic, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  // Stephens' finite-sample correction of the asymptotic law.
  return kolmogorovSurvival((sn + 0.12 + 0.11 / sn) * statistic);
}

}  // namespace zerocell
