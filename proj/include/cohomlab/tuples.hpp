#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cohomlab/rng.hpp"
#include "cohomlab/space.hpp"

namespace cohomlab {

using TupleView = std::span<const Point>;

/// Longest tuple any evaluation rule ever builds on the stack.
inline constexpr std::size_t kMaxTupleLength = 16;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;
inline constexpr std::size_t kDefaultBudget = 20000;
inline constexpr std::size_t kDefaultSamples = 10000;

/// Tuples (x_0..x_p) with d(x_i, x_j) <= R for all i, j.
///
/// Either the complete set in lexicographic order, or a seeded uniform
/// sample drawn with replacement when the set exceeds the budget.
class TupleDomain {
 public:
  int p() const noexcept { return p_; }
  double radius() const noexcept { return radius_; }
  std::size_t length() const noexcept { return static_cast<std::size_t>(p_) + 1; }
  std::size_t size() const noexcept { return flat_.size() / length(); }
  TupleView operator[](std::size_t i) const noexcept {
    return {flat_.data() + i * length(), length()};
  }
  bool exact() const noexcept { return exact_; }
  /// Exact cardinality when exact(); otherwise budget + 1 (a lower bound).
  std::size_t population() const noexcept { return population_; }

 private:
  friend TupleDomain enumerate_tuples(const FiniteMetricSpace&, int, double, std::size_t,
                                      std::uint64_t, std::size_t);
  int p_ = 0;
  double radius_ = 0;
  bool exact_ = true;
  std::size_t population_ = 0;
  std::vector<Point> flat_;
};

TupleDomain enumerate_tuples(const FiniteMetricSpace& space, int p, double radius,
                             std::size_t budget = kDefaultBudget,
                             std::uint64_t seed = kDefaultSeed,
                             std::size_t sample_size = kDefaultSamples);

/// |Delta_R^{length}|, counting stops once it exceeds `cap`.
std::size_t count_tuples(const FiniteMetricSpace& space, std::size_t length, double radius,
                         std::size_t cap);

/// Uniform sampler over Delta_R^{length} by weighted rejection.
class TupleSampler {
 public:
  TupleSampler(const FiniteMetricSpace& space, std::size_t length, double radius);
  /// Writes one uniformly distributed tuple into `out` (size == length).
  void draw(Rng& rng, std::span<Point> out) const;

 private:
  const FiniteMetricSpace* space_;
  std::size_t length_;
  double radius_;
  std::vector<std::vector<Point>> balls_;
  std::size_t max_ball_ = 1;
};

/// The (x, y) pairs over which a cochain of bidegree (p, q) is audited.
///
/// Free mode: x ranges over Delta_R^{p+1} and y over all of X^{q+1}.
/// Joint mode: the concatenated tuple (x, y) lies in Delta_R^{p+q+2}, which
/// is the domain of the controlled-support condition.
class AuditDomain {
 public:
  enum class Mode { Free, Joint };

  static AuditDomain build(const FiniteMetricSpace& space, int p, int q, double radius,
                           Mode mode = Mode::Free, std::size_t budget = kDefaultBudget,
                           std::uint64_t seed = kDefaultSeed,
                           std::size_t samples = kDefaultSamples);

  std::size_t size() const noexcept { return stride_ == 0 ? 0 : flat_.size() / stride_; }
  TupleView x(std::size_t i) const noexcept { return {flat_.data() + i * stride_, xlen_}; }
  TupleView y(std::size_t i) const noexcept {
    return {flat_.data() + i * stride_ + xlen_, stride_ - xlen_};
  }
  bool exact() const noexcept { return exact_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  double radius() const noexcept { return radius_; }

 private:
  int p_ = 0;
  int q_ = -1;
  double radius_ = 0;
  bool exact_ = true;
  std::size_t xlen_ = 1;
  std::size_t stride_ = 1;
  std::vector<Point> flat_;
};

}  // namespace cohomlab
