#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cohomlab/space.hpp"

namespace cohomlab {

/// The three concrete X-modules: l1(X), its sum-zero subspace, and the
/// scalars with the empty support function.
enum class Module { L1, L1Zero, Scalar };

std::string_view to_string(Module m) noexcept;
/// Accepts "l1", "l1_0" and "scalar".
Module module_from_string(std::string_view s);

using Entry = std::pair<Point, double>;

/// Entries below this magnitude are dropped from storage.
inline constexpr double kPruneThreshold = 1e-15;
/// Tolerance on the coefficient sum of an l1_0 vector.
inline constexpr double kZeroSumTolerance = 1e-12;

/// A finitely supported element of one of the concrete X-modules.
///
/// Entries are kept sorted by point with no explicit zeros. Scalars carry
/// their value separately and always have empty support.
class SupportedVector {
 public:
  explicit SupportedVector(Module module = Module::L1) noexcept : module_(module) {}

  static SupportedVector dirac(Point x, double coefficient = 1.0, Module module = Module::L1);
  static SupportedVector scalar(double value) noexcept;
  /// c (delta_to - delta_from) in l1_0.
  static SupportedVector dipole(Point to, Point from, double coefficient = 1.0);
  /// Sorts, merges duplicate points and prunes; an l1_0 vector must sum to zero.
  static SupportedVector from_entries(Module module, std::vector<Entry> entries);

  Module module() const noexcept { return module_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  double scalar_value() const noexcept { return scalar_; }

  /// The coefficient at x (zero off the support; always zero for scalars).
  double operator[](Point x) const noexcept;
  /// l1 norm, or |lambda| for a scalar.
  double norm() const noexcept;
  /// Sum of the coefficients; for a scalar its value.
  double sum() const noexcept;
  std::vector<Point> support() const;
  bool is_zero() const noexcept { return entries_.empty() && scalar_ == 0.0; }

  SupportedVector& operator+=(const SupportedVector& other);
  SupportedVector& operator-=(const SupportedVector& other);
  SupportedVector& operator*=(double lambda);

  friend SupportedVector operator+(SupportedVector a, const SupportedVector& b) { return a += b; }
  friend SupportedVector operator-(SupportedVector a, const SupportedVector& b) { return a -= b; }
  friend SupportedVector operator*(double lambda, SupportedVector v) { return v *= lambda; }
  friend bool operator==(const SupportedVector&, const SupportedVector&) = default;

  /// Same data, different tag; used by the forgetful inclusion l1_0 -> l1.
  SupportedVector retagged(Module module) const;

 private:
  friend class VectorBuilder;

  Module module_;
  std::vector<Entry> entries_;
  double scalar_ = 0.0;
};

/// max_z |a(z) - b(z)|, or |a - b| for scalars.
double max_entry_difference(const SupportedVector& a, const SupportedVector& b);
double distance(const SupportedVector& a, const SupportedVector& b);

/// Accumulates a linear combination of vectors in one module.
///
/// Every evaluation rule writes into a builder, so a composite cochain sums
/// its leaves without materialising the intermediate vectors.
class VectorBuilder {
 public:
  explicit VectorBuilder(Module module) noexcept : module_(module) {}

  Module module() const noexcept { return module_; }
  void add(Point x, double coefficient);
  void add_scalar(double value) noexcept { scalar_ += value; }
  void add(const SupportedVector& v, double coefficient);
  void clear() noexcept {
    entries_.clear();
    scalar_ = 0.0;
  }
  SupportedVector finish();
  /// Like finish(), without resetting the builder.
  SupportedVector snapshot() const;

 private:
  Module module_;
  std::vector<Entry> entries_;  // sorted by point
  double scalar_ = 0.0;
};

/// pi: l1(X) -> C, the sum of coefficients.
SupportedVector pi_sum(const SupportedVector& v);
/// The scaled Dirac lift lambda * delta_x of a scalar.
SupportedVector lift_scalar(double lambda, Point x);
SupportedVector lift_scalar(const SupportedVector& lambda, Point x);
/// The inclusion iota: l1_0(X) -> l1(X).
SupportedVector include_zero_sum(const SupportedVector& v);
/// Checked inverse of iota on its image; throws unless pi_sum(v) == 0.
SupportedVector as_zero_sum(const SupportedVector& v);

/// A finitely supported element of l1(X x X).
class PairVector {
 public:
  using PairEntry = std::pair<std::pair<Point, Point>, double>;

  PairVector() = default;
  static PairVector from_entries(std::vector<PairEntry> entries);
  static PairVector indicator(Point a, Point b, double coefficient = 1.0);

  std::span<const PairEntry> entries() const noexcept { return entries_; }
  double operator()(Point a, Point b) const noexcept;
  double norm() const noexcept;
  std::vector<std::pair<Point, Point>> support() const;
  bool is_zero() const noexcept { return entries_.empty(); }
  friend bool operator==(const PairVector&, const PairVector&) = default;

 private:
  std::vector<PairEntry> entries_;  // sorted by (a, b)
};

/// (dH)(z) = sum_w H(w, z) - H(z, w); lands in l1_0.
SupportedVector boundary_pairs(const PairVector& h);

/// H(x, z) = h(z) for z != x; satisfies boundary_pairs(H) == h and |H| <= |h|.
PairVector lift_boundary(const SupportedVector& h, Point base);

}  // namespace cohomlab
