#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohomlab/coefficients.hpp"
#include "cohomlab/space.hpp"
#include "cohomlab/tuples.hpp"

namespace cohomlab {

/// Adds `coefficient * phi(x, y)` into the builder.
using EvalRule =
    std::function<void(TupleView x, TupleView y, double coefficient, VectorBuilder& out)>;

/// R -> S: a declared bound on support radius for tuples of diameter <= R.
using SupportWitness = std::function<double(double radius)>;

/// An element of E^{p,q}(X, V): a pure evaluation rule on X^{p+1} x X^{q+1}.
///
/// q = -1 is the augmentation row; its y tuple is empty. Cochains are cheap
/// handles: copies share the rule.
class Cochain {
 public:
  Cochain(SpaceRef space, int p, int q, Module module, EvalRule rule,
          std::optional<SupportWitness> witness = std::nullopt, std::string name = {});

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  Module module() const noexcept { return module_; }
  const SpaceRef& space() const noexcept { return space_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t x_length() const noexcept { return static_cast<std::size_t>(p_) + 1; }
  std::size_t y_length() const noexcept { return static_cast<std::size_t>(q_ + 1); }

  /// Checked evaluation.
  SupportedVector operator()(TupleView x, TupleView y = {}) const;
  SupportedVector operator()(std::initializer_list<Point> x,
                             std::initializer_list<Point> y = {}) const;

  /// Unchecked accumulation used by composite rules.
  void accumulate(TupleView x, TupleView y, double coefficient, VectorBuilder& out) const {
    (*rule_)(x, y, coefficient, out);
  }

  const std::optional<SupportWitness>& support_witness() const noexcept { return witness_; }
  std::optional<double> declared_support(double radius) const;

  Cochain renamed(std::string name) const;
  Cochain with_witness(std::optional<SupportWitness> witness) const;

 private:
  SpaceRef space_;
  int p_;
  int q_;
  Module module_;
  std::shared_ptr<const EvalRule> rule_;
  std::optional<SupportWitness> witness_;
  std::string name_;
};

Cochain zero_cochain(SpaceRef space, int p, int q, Module module);

/// x-direction coboundary: (D phi)(x_0..x_{p+1}, y) = sum_i (-1)^i phi(x without x_i, y).
Cochain diff_D(const Cochain& phi);

/// y-direction coboundary (d phi)(x, (y_0..y_{q+1})) = sum_i (-1)^{i+p} phi(x, y without y_i).
/// On q = -1 this is the y-constant extension, carrying the sign (-1)^p.
Cochain diff_d(const Cochain& phi);

/// Row splitting (s phi)(x, (y_0..y_{q-1})) = (-1)^p phi(x, (x_0, y_0..y_{q-1})).
/// Throws on q = -1.
Cochain split_s(const Cochain& phi);

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(double lambda, const Cochain& a);

/// Caches evaluations; the cache is guarded by a mutex.
Cochain memoize(const Cochain& phi);

/// Cochain of bidegree (p, q) that ignores its arguments and returns `value`.
Cochain constant_cochain(SpaceRef space, int p, int q, SupportedVector value);

struct JohnsonCocycles {
  Cochain j01;       ///< (x, (y_0, y_1)) -> delta_{y_1} - delta_{y_0}
  Cochain j10;       ///< ((x_0, x_1), (y)) -> delta_{x_1} - delta_{x_0}
  Cochain homotopy;  ///< (x, (y)) -> delta_y - delta_x
};

/// Johnson cocycles with l1_0 coefficients; requires at least two points.
JohnsonCocycles johnson_cocycles(SpaceRef space);

/// (x, (y_0, y_1)) -> delta_{y_1} - delta_{y_0} tagged with `module` (l1 or l1_0).
Cochain johnson_j01(SpaceRef space, Module module = Module::L1Zero);

struct TuplePair {
  std::vector<Point> x;
  std::vector<Point> y;
};

struct SeminormReport {
  double radius = 0;
  double value = 0;
  bool exact = true;
  std::optional<TuplePair> witness;
  std::size_t samples = 0;
  int p = 0;
  int q = -1;
};

struct AuditOptions {
  std::size_t budget = kDefaultBudget;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
};

/// sup of |phi(x, y)| for x in Delta_R^{p+1}, y in X^{q+1}.
SeminormReport seminorm(const Cochain& phi, double radius, const AuditOptions& options = {});

struct SupportRadiusReport {
  double radius = 0;
  double support = 0;  ///< least S over the audited tuples
  bool exact = true;
  std::optional<TuplePair> witness;
  std::size_t samples = 0;
  std::optional<double> declared;
  bool exceeds_declared = false;
};

/// Least S with supp(phi(x, y)) inside B_S(c) for every coordinate c, over
/// tuples (x, y) whose coordinates are pairwise within R.
SupportRadiusReport support_radius(const Cochain& phi, double radius,
                                   const AuditOptions& options = {});

}  // namespace cohomlab
