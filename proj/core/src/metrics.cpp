#include "scamtext/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace scamtext {

ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> truth) {
  if (predicted.size() != truth.size()) throw std::invalid_argument("confusion: length mismatch");
  if (truth.empty()) throw std::invalid_argument("confusion: empty input");
  ConfusionMatrix m;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool t = truth[i] == Label::scam;
    const bool p = predicted[i] == Label::scam;
    if (t && p) ++m.s_s;
    else if (t) ++m.s_ns;
    else if (p) ++m.ns_s;
    else ++m.ns_ns;
  }
  return m;
}

namespace {

Metric ratio(std::uint64_t num, std::uint64_t den) noexcept {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Metric recall(const ConfusionMatrix& m) noexcept { return ratio(m.s_s, m.s_s + m.s_ns); }
Metric precision(const ConfusionMatrix& m) noexcept { return ratio(m.s_s, m.s_s + m.ns_s); }

Metric f1(Metric p, Metric r) noexcept {
  if (!p || !r || *p + *r == 0.0) return std::nullopt;
  return 2.0 * *p * *r / (*p + *r);
}

Metric f1(const ConfusionMatrix& m) noexcept { return f1(precision(m), recall(m)); }

ClassMetrics class_metrics(const ConfusionMatrix& m, Label cls) noexcept {
  ClassMetrics c;
  if (cls == Label::scam) {
    c.precision = precision(m);
    c.recall = recall(m);
    c.support = m.s_s + m.s_ns;
  } else {
    c.precision = ratio(m.ns_ns, m.ns_ns + m.s_ns);
    c.recall = ratio(m.ns_ns, m.ns_ns + m.ns_s);
    c.support = m.ns_ns + m.ns_s;
  }
  c.f1 = f1(c.precision, c.recall);
  return c;
}

WeightedMetrics weighted_report(std::span<const ClassMetrics> per_class) {
  const std::uint64_t total = std::accumulate(per_class.begin(), per_class.end(), std::uint64_t{0},
                                              [](std::uint64_t s, const ClassMetrics& c) { return s + c.support; });
  if (total == 0) throw std::invalid_argument("weighted_report: total support is zero");
  auto weigh = [&](Metric ClassMetrics::*field) -> Metric {
    double sum = 0.0;
    for (const auto& c : per_class) {
      if (c.support == 0) continue;
      const Metric& v = c.*field;
      if (!v) return std::nullopt;
      sum += *v * static_cast<double>(c.support);
    }
    return sum / static_cast<double>(total);
  };
  return {weigh(&ClassMetrics::precision), weigh(&ClassMetrics::recall), weigh(&ClassMetrics::f1)};
}

namespace {

// Instances sorted by descending score, then grouped into equal-score blocks.
struct Block {
  double score;
  std::uint64_t pos;
  std::uint64_t neg;
};

std::vector<Block> descending_blocks(std::span<const double> scores, std::span<const Label> truth) {
  if (scores.size() != truth.size()) throw std::invalid_argument("curve: length mismatch");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::vector<Block> blocks;
  for (std::size_t i : order) {
    if (blocks.empty() || blocks.back().score != scores[i]) blocks.push_back({scores[i], 0, 0});
    (truth[i] == Label::scam ? blocks.back().pos : blocks.back().neg) += 1;
  }
  return blocks;
}

}  // namespace

Metric roc_area(std::span<const double> scores, std::span<const Label> truth) {
  const auto blocks = descending_blocks(scores, truth);
  std::uint64_t P = 0;
  std::uint64_t N = 0;
  for (const auto& b : blocks) {
    P += b.pos;
    N += b.neg;
  }
  if (P == 0 || N == 0) return std::nullopt;
  // Twice (concordant + 0.5 * tied), kept integral so the result is exact.
  std::uint64_t twice = 0;
  std::uint64_t neg_below = N;
  for (const auto& b : blocks) {
    neg_below -= b.neg;
    twice += 2 * b.pos * neg_below + b.pos * b.neg;
  }
  return static_cast<double>(twice) / (2.0 * static_cast<double>(P) * static_cast<double>(N));
}

Metric pr_area(std::span<const double> scores, std::span<const Label> truth) {
  const auto blocks = descending_blocks(scores, truth);
  std::uint64_t P = 0;
  for (const auto& b : blocks) P += b.pos;
  if (P == 0) return std::nullopt;
  double ap = 0.0;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  for (const auto& b : blocks) {
    tp += b.pos;
    fp += b.neg;
    if (b.pos == 0) continue;
    // Sum pos * precision and divide by P once, so a perfect ranking gives
    // exactly 1.
    ap += static_cast<double>(b.pos * tp) / static_cast<double>(tp + fp);
  }
  return ap / static_cast<double>(P);
}

std::vector<RocPoint> roc_points(std::span<const double> scores, std::span<const Label> truth) {
  const auto blocks = descending_blocks(scores, truth);
  std::uint64_t P = 0;
  std::uint64_t N = 0;
  for (const auto& b : blocks) {
    P += b.pos;
    N += b.neg;
  }
  auto frac = [](std::uint64_t a, std::uint64_t b) { return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b); };
  std::vector<RocPoint> out{{std::numeric_limits<double>::infinity(), 0.0, 0.0}};
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  for (const auto& b : blocks) {
    tp += b.pos;
    fp += b.neg;
    out.push_back({b.score, frac(fp, N), frac(tp, P)});
  }
  return out;
}

std::vector<PrPoint> pr_points(std::span<const double> scores, std::span<const Label> truth) {
  const auto blocks = descending_blocks(scores, truth);
  std::uint64_t P = 0;
  for (const auto& b : blocks) P += b.pos;
  std::vector<PrPoint> out;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  for (const auto& b : blocks) {
    tp += b.pos;
    fp += b.neg;
    out.push_back({b.score, P == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(P),
                   static_cast<double>(tp) / static_cast<double>(tp + fp)});
  }
  return out;
}

namespace {

std::string num(double v) {
  if (v == std::numeric_limits<double>::infinity()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_roc_csv(std::ostream& out, std::span<const RocPoint> points) {
  out << "threshold,fpr,tpr\n";
  for (const auto& p : points) out << num(p.threshold) << ',' << num(p.fpr) << ',' << num(p.tpr) << '\n';
}

void write_pr_csv(std::ostream& out, std::span<const PrPoint> points) {
  out << "threshold,recall,precision\n";
  for (const auto& p : points) out << num(p.threshold) << ',' << num(p.recall) << ',' << num(p.precision) << '\n';
}

EvalReport evaluate(std::span<const double> scores, std::span<const Label> predicted, std::span<const Label> truth) {
  if (scores.size() != truth.size()) throw std::invalid_argument("evaluate: length mismatch");
  EvalReport r;
  r.confusion = confusion(predicted, truth);
  r.scam = class_metrics(r.confusion, Label::scam);
  r.not_scam = class_metrics(r.confusion, Label::not_scam);
  const ClassMetrics both[] = {r.scam, r.not_scam};
  r.weighted = weighted_report(both);
  r.roc_area = roc_area(scores, truth);
  r.pr_area = pr_area(scores, truth);
  return r;
}

std::string format_metric(Metric value, int decimals) {
  if (!value) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, *value);
  return buf;
}

}  // namespace scamtext
