#include <algorithm>
#include <cmath>

#include "freedf/cumulants.hpp"
#include "freedf/definetti.hpp"
#include "freedf/error.hpp"

namespace freedf {

std::string_view trend_name(Trend t) {
  switch (t) {
    case Trend::Zero: return "ZERO";
    case Trend::Decay: return "DECAY";
    case Trend::NoDecay: return "NO-DECAY";
  }
  return "?";
}

namespace {

void classify(ProbeSeries& series, double tolerance) {
  std::vector<double> d;
  for (const auto& v : series.values) d.push_back(std::fabs(Rational(v - series.target).get_d()));
  if (std::all_of(d.begin(), d.end(), [tolerance](double x) { return x <= tolerance; })) {
    series.trend = Trend::Zero;
  } else {
    bool monotone = true;
    for (std::size_t k = 1; k < d.size(); ++k) monotone = monotone && d[k] <= d[k - 1] + tolerance;
    series.trend = monotone && d.size() > 1 && d.back() < d.front() - tolerance ? Trend::Decay : Trend::NoDecay;
  }
  std::size_t first = d.size();
  std::size_t last = d.size();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    if (first == d.size()) first = k;
    last = k;
  }
  if (first < last && series.dimensions[first] != series.dimensions[last]) {
    series.rate = (std::log(d[last]) - std::log(d[first])) /
                  (std::log(static_cast<double>(series.dimensions[last])) -
                   std::log(static_cast<double>(series.dimensions[first])));
  }
}

}  // namespace

AsymptoticReport asymptotic_freeness_probe(std::span<const MomentTable> models, CategoryId cat, int m,
                                           double tolerance) {
  if (cat != CategoryId::OPlus && cat != CategoryId::SPlus) {
    throw Error(ErrorCode::UnsupportedCategory, "asymptotic probes exist for o+ and s+ only");
  }
  if (models.empty()) throw Error(ErrorCode::InvalidDimension, "the probe needs at least one model");
  if (m < 1) throw Error(ErrorCode::OrderExceeded, "probe order must be positive");

  int min_n = models.front().n();
  for (const auto& table : models) {
    if (table.kind() != TableKind::Moments) throw Error(ErrorCode::KindMismatch, "probe models are moment tables");
    if (m > table.max_order()) {
      throw Error(ErrorCode::OrderExceeded, "order " + std::to_string(m) + " exceeds a model's max_order");
    }
    CheckOptions options;
    for (int k = 1; k <= m; ++k) options.orders.push_back(k);
    options.fail_fast = true;
    options.record_residuals = false;
    options.max_witnesses = 1;
    const auto report = check_invariance(table, cat, options);
    if (report.verdict == Verdict::Fail) {
      throw Error(ErrorCode::NotInvariant, "model with n = " + std::to_string(table.n()) + " is not invariant");
    }
    min_n = std::min(min_n, table.n());
  }

  AsymptoticReport report;
  report.category = cat;
  report.m = m;
  report.tolerance = tolerance;
  auto add = [&](const Partition& p, std::string_view quantity, Rational target) {
    ProbeSeries series;
    series.kernel = p;
    series.quantity = quantity;
    series.target = std::move(target);
    const IndexTuple i = canonical_tuple(p);
    for (const auto& table : models) {
      series.dimensions.push_back(table.n());
      series.values.push_back(quantity == "cumulant" ? cumulant_at(table, i) : table.value(i));
    }
    classify(series, tolerance);
    report.series.push_back(std::move(series));
  };

  if (cat == CategoryId::SPlus) {
    for (const auto& p : enumerate_noncrossing(m)) {
      if (p.num_blocks() > 1 && p.num_blocks() <= min_n) add(p, "cumulant", 0);
    }
  } else {
    const auto& pairings = enumerate_category(CategoryId::OPlus, m);
    if (m >= 4) {
      for (const auto& p : pairings) {
        if (p.num_blocks() <= min_n) add(p, "cumulant", 0);
      }
    }
    for (const auto& p : pairings) {
      if (p.num_blocks() <= min_n) add(p, "moment", 1);
    }
  }
  return report;
}

}  // namespace freedf
