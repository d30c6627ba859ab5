#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chipbkg {

/// Integer-count histogram over contiguous bins [edges[i], edges[i+1]).
/// Counts merge by addition, which keeps parallel runs order-independent.
struct CountHistogram {
  std::vector<double> edges;
  std::vector<std::int64_t> counts;

  CountHistogram() = default;
  explicit CountHistogram(std::vector<double> e)
      : edges(std::move(e)), counts(edges.empty() ? 0 : edges.size() - 1, 0) {
    if (edges.size() < 2) throw std::invalid_argument("histogram needs >= 1 bin");
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (edges[i] <= edges[i - 1])
        throw std::invalid_argument("histogram edges must increase");
  }

  static CountHistogram uniform(double lo, double hi, std::size_t nbins) {
    std::vector<double> e(nbins + 1);
    for (std::size_t i = 0; i <= nbins; ++i)
      e[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(nbins);
    return CountHistogram(std::move(e));
  }

  std::size_t nbins() const { return counts.size(); }

  /// Bin index of x, or npos when x falls outside the range.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t bin_of(double x) const {
    if (x < edges.front() || x >= edges.back()) return npos;
    const auto it = std::upper_bound(edges.begin(), edges.end(), x);
    return static_cast<std::size_t>(it - edges.begin()) - 1;
  }

  void fill(double x, std::int64_t w = 1) {
    const std::size_t b = bin_of(x);
    if (b != npos) counts[b] += w;
  }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }

  void merge(const CountHistogram& o) {
    if (o.edges != edges) throw std::invalid_argument("incompatible binning");
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  }
};

/// Weighted spectrum histogram used for source energy sampling.
/// Bin i spans (edges[i], edges[i+1]]; weights are per-bin flux.
struct EnergyHistogram {
  std::vector<double> edges;    // keV, increasing
  std::vector<double> weights;  // per-bin flux or counts, >= 0

  bool empty() const { return weights.empty(); }

  double total() const {
    double t = 0;
    for (double w : weights) t += w;
    return t;
  }

  void validate() const {
    if (weights.empty() || edges.size() != weights.size() + 1)
      throw std::invalid_argument("spectrum needs >= 1 bin");
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (edges[i] <= edges[i - 1])
        throw std::invalid_argument("spectrum edges must increase");
    double t = 0;
    for (double w : weights) {
      if (w < 0) throw std::invalid_argument("negative spectrum weight");
      t += w;
    }
    if (!(t > 0)) throw std::invalid_argument("spectrum has zero total weight");
  }

  /// Draw from the binned distribution, uniform within the chosen bin.
  template <class Rng>
  double sample(Rng& rng) const {
    double target = rng.uniform() * total();
    std::size_t i = 0;
    for (; i + 1 < weights.size(); ++i) {
      if (target < weights[i]) break;
      target -= weights[i];
    }
    return edges[i] + (edges[i + 1] - edges[i]) * rng.uniform();
  }
};

}  // namespace chipbkg
