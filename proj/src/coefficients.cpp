#include "cohomlab/coefficients.hpp"

#include <algorithm>
#include <cmath>

#include "cohomlab/errors.hpp"

namespace cohomlab {

namespace {

void require_same_module(Module a, Module b, const char* op) {
  if (a != b) {
    throw ModuleMismatch(std::string(op) + ": module mismatch (" + std::string(to_string(a)) +
                         " vs " + std::string(to_string(b)) + ")");
  }
}

bool sums_to_zero(const std::vector<Entry>& entries) {
  double sum = 0.0;
  double norm = 0.0;
  for (const auto& [x, v] : entries) {
    sum += v;
    norm += std::abs(v);
  }
  return std::abs(sum) <= kZeroSumTolerance * std::max(1.0, norm);
}

void prune(std::vector<Entry>& entries) {
  std::erase_if(entries, [](const Entry& e) { return std::abs(e.second) < kPruneThreshold; });
}

// Sorted merge of a + lambda * b.
std::vector<Entry> merge(const std::vector<Entry>& a, const std::vector<Entry>& b,
                         double lambda) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, lambda * b[j].second);
      ++j;
    } else {
      out.emplace_back(a[i].first, a[i].second + lambda * b[j].second);
      ++i;
      ++j;
    }
  }
  prune(out);
  return out;
}

}  // namespace

std::string_view to_string(Module m) noexcept {
  switch (m) {
    case Module::L1:
      return "l1";
    case Module::L1Zero:
      return "l1_0";
    case Module::Scalar:
      return "scalar";
  }
  return "?";
}

Module module_from_string(std::string_view s) {
  if (s == "l1") return Module::L1;
  if (s == "l1_0") return Module::L1Zero;
  if (s == "scalar") return Module::Scalar;
  throw Error("unknown module tag: " + std::string(s));
}

SupportedVector SupportedVector::dirac(Point x, double coefficient, Module module) {
  if (module == Module::Scalar) throw ModuleMismatch("a scalar has no Dirac vectors");
  if (module == Module::L1Zero && coefficient != 0.0) {
    throw Error("a nonzero Dirac vector does not lie in l1_0");
  }
  SupportedVector v(module);
  if (std::abs(coefficient) >= kPruneThreshold) v.entries_.emplace_back(x, coefficient);
  return v;
}

SupportedVector SupportedVector::dipole(Point to, Point from, double coefficient) {
  return from_entries(Module::L1Zero, {{to, coefficient}, {from, -coefficient}});
}

SupportedVector SupportedVector::scalar(double value) noexcept {
  SupportedVector v(Module::Scalar);
  v.scalar_ = value;
  return v;
}

SupportedVector SupportedVector::from_entries(Module module, std::vector<Entry> entries) {
  if (module == Module::Scalar) {
    throw ModuleMismatch("scalars are built with SupportedVector::scalar");
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(e);
    }
  }
  prune(merged);
  if (module == Module::L1Zero && !sums_to_zero(merged)) {
    throw Error("entries of an l1_0 vector must sum to zero");
  }
  SupportedVector v(module);
  v.entries_ = std::move(merged);
  return v;
}

double SupportedVector::operator[](Point x) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const Entry& e, Point p) { return e.first < p; });
  return (it != entries_.end() && it->first == x) ? it->second : 0.0;
}

double SupportedVector::norm() const noexcept {
  if (module_ == Module::Scalar) return std::abs(scalar_);
  double total = 0.0;
  for (const auto& e : entries_) total += std::abs(e.second);
  return total;
}

double SupportedVector::sum() const noexcept {
  if (module_ == Module::Scalar) return scalar_;
  double total = 0.0;
  for (const auto& e : entries_) total += e.second;
  return total;
}

std::vector<Point> SupportedVector::support() const {
  std::vector<Point> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

SupportedVector& SupportedVector::operator+=(const SupportedVector& other) {
  require_same_module(module_, other.module_, "add");
  if (module_ == Module::Scalar) {
    scalar_ += other.scalar_;
  } else {
    entries_ = merge(entries_, other.entries_, 1.0);
  }
  return *this;
}

SupportedVector& SupportedVector::operator-=(const SupportedVector& other) {
  require_same_module(module_, other.module_, "subtract");
  if (module_ == Module::Scalar) {
    scalar_ -= other.scalar_;
  } else {
    entries_ = merge(entries_, other.entries_, -1.0);
  }
  return *this;
}

SupportedVector& SupportedVector::operator*=(double lambda) {
  scalar_ *= lambda;
  for (auto& e : entries_) e.second *= lambda;
  prune(entries_);
  return *this;
}

SupportedVector SupportedVector::retagged(Module module) const {
  if ((module == Module::Scalar) != (module_ == Module::Scalar)) {
    throw ModuleMismatch("cannot retag between scalars and function modules");
  }
  if (module == Module::L1Zero && !sums_to_zero(entries_)) {
    throw Error("vector does not sum to zero, so it is not in l1_0");
  }
  SupportedVector v = *this;
  v.module_ = module;
  return v;
}

double max_entry_difference(const SupportedVector& a, const SupportedVector& b) {
  require_same_module(a.module(), b.module(), "compare");
  if (a.module() == Module::Scalar) return std::abs(a.scalar_value() - b.scalar_value());
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() || j < eb.size()) {
    double diff;
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      diff = ea[i++].second;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      diff = eb[j++].second;
    } else {
      diff = ea[i++].second - eb[j++].second;
    }
    worst = std::max(worst, std::abs(diff));
  }
  return worst;
}

double distance(const SupportedVector& a, const SupportedVector& b) {
  SupportedVector d = a;
  d -= b;
  return d.norm();
}

void VectorBuilder::add(Point x, double coefficient) {
  if (module_ == Module::Scalar) throw ModuleMismatch("cannot add a point mass to a scalar");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const Entry& e, Point p) { return e.first < p; });
  if (it != entries_.end() && it->first == x) {
    it->second += coefficient;
  } else {
    entries_.insert(it, Entry{x, coefficient});
  }
}

void VectorBuilder::add(const SupportedVector& v, double coefficient) {
  require_same_module(module_, v.module(), "accumulate");
  if (module_ == Module::Scalar) {
    scalar_ += coefficient * v.scalar_value();
    return;
  }
  for (const auto& [x, value] : v.entries()) add(x, coefficient * value);
}

SupportedVector VectorBuilder::finish() {
  SupportedVector v = snapshot();
  clear();
  return v;
}

SupportedVector VectorBuilder::snapshot() const {
  SupportedVector v(module_);
  if (module_ == Module::Scalar) {
    v.scalar_ = scalar_;
  } else {
    v.entries_ = entries_;
    prune(v.entries_);
  }
  return v;
}

SupportedVector pi_sum(const SupportedVector& v) {
  if (v.module() == Module::Scalar) throw ModuleMismatch("pi_sum expects an l1 vector");
  return SupportedVector::scalar(v.sum());
}

SupportedVector lift_scalar(double lambda, Point x) {
  return SupportedVector::dirac(x, lambda, Module::L1);
}

SupportedVector lift_scalar(const SupportedVector& lambda, Point x) {
  if (lambda.module() != Module::Scalar) throw ModuleMismatch("lift_scalar expects a scalar");
  return lift_scalar(lambda.scalar_value(), x);
}

SupportedVector include_zero_sum(const SupportedVector& v) {
  if (v.module() != Module::L1Zero) throw ModuleMismatch("inclusion expects an l1_0 vector");
  return v.retagged(Module::L1);
}

SupportedVector as_zero_sum(const SupportedVector& v) {
  if (v.module() == Module::Scalar) throw ModuleMismatch("a scalar is not in l1_0");
  return v.retagged(Module::L1Zero);
}

PairVector PairVector::from_entries(std::vector<PairEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const PairEntry& a, const PairEntry& b) { return a.first < b.first; });
  PairVector out;
  for (const auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().first == e.first) {
      out.entries_.back().second += e.second;
    } else {
      out.entries_.push_back(e);
    }
  }
  std::erase_if(out.entries_,
                [](const PairEntry& e) { return std::abs(e.second) < kPruneThreshold; });
  return out;
}

PairVector PairVector::indicator(Point a, Point b, double coefficient) {
  return from_entries({{{a, b}, coefficient}});
}

double PairVector::operator()(Point a, Point b) const noexcept {
  const std::pair<Point, Point> key{a, b};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const PairEntry& e, const auto& k) { return e.first < k; });
  return (it != entries_.end() && it->first == key) ? it->second : 0.0;
}

double PairVector::norm() const noexcept {
  double total = 0.0;
  for (const auto& e : entries_) total += std::abs(e.second);
  return total;
}

std::vector<std::pair<Point, Point>> PairVector::support() const {
  std::vector<std::pair<Point, Point>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

SupportedVector boundary_pairs(const PairVector& h) {
  VectorBuilder b(Module::L1Zero);
  for (const auto& [pair, value] : h.entries()) {
    b.add(pair.second, value);
    b.add(pair.first, -value);
  }
  return b.finish();
}

PairVector lift_boundary(const SupportedVector& h, Point base) {
  if (h.module() == Module::Scalar) throw ModuleMismatch("lift_boundary expects an l1_0 vector");
  const double total = h.sum();
  if (std::abs(total) > kZeroSumTolerance * std::max(1.0, h.norm())) {
    throw Error("lift_boundary: coefficients sum to " + std::to_string(total) + ", not zero");
  }
  std::vector<PairVector::PairEntry> entries;
  entries.reserve(h.entries().size());
  for (const auto& [z, value] : h.entries()) {
    if (z != base) entries.push_back({{base, z}, value});
  }
  return PairVector::from_entries(std::move(entries));
}

}  // namespace cohomlab
