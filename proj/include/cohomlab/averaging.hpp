#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohomlab/audit.hpp"
#include "cohomlab/cochain.hpp"
#include "cohomlab/coefficients.hpp"

namespace cohomlab {

/// x -> f(x) in l1(X) with supp f(x) inside B_S(x).
class ReiterFamily {
 public:
  /// Throws if some f(x) escapes B_S(x); is_prob() is computed, not declared.
  ReiterFamily(SpaceRef space, double support_radius, std::vector<SupportedVector> values,
               std::string kind = "custom");

  /// Tabulates a (0,-1) cochain; S is measured when not given.
  static ReiterFamily from_cochain(const Cochain& phi,
                                   std::optional<double> support_radius = std::nullopt);

  const SpaceRef& space() const noexcept { return space_; }
  double support_radius() const noexcept { return support_radius_; }
  const SupportedVector& operator[](Point x) const { return values_->at(x); }
  const std::vector<SupportedVector>& values() const noexcept { return *values_; }
  bool is_prob() const noexcept { return is_prob_; }
  const std::string& kind() const noexcept { return kind_; }
  /// sup_x |f(x)|
  double sup_norm() const noexcept;

  /// The family as an element of E^{0,-1}(X, l1 X).
  Cochain as_cochain() const;

 private:
  SpaceRef space_;
  double support_radius_;
  std::shared_ptr<const std::vector<SupportedVector>> values_;
  bool is_prob_ = false;
  std::string kind_;
};

inline constexpr double kProbabilityTolerance = 1e-12;

/// Uniform probability on B_S(x).
ReiterFamily ball_average(const SpaceRef& space, double radius);
/// t steps of the lazy walk (I + P)/2 from delta_x; support radius t.
ReiterFamily lazy_random_walk(const SpaceRef& space, double steps);
/// x -> delta_x.
ReiterFamily dirac_family(const SpaceRef& space);

using FamilyBuilder = std::function<ReiterFamily(const SpaceRef&, double)>;

struct Variation {
  double nu = 0;
  Point x0 = 0;
  Point x1 = 0;
};

/// |a - b|_1 summed in ascending point order, no pruning.
double l1_distance(const SupportedVector& a, const SupportedVector& b);

/// max over pairs d(x0, x1) <= R of |f(x1) - f(x0)|_1; each unordered pair
/// is visited once with x0 < x1, ties keep the lexicographically first pair.
Variation variation(const ReiterFamily& f, double radius, unsigned workers = 1);

struct ProfileRow {
  double S = 0;
  double R = 0;
  double nu = 0;
  Point x0 = 0;
  Point x1 = 0;
  bool exact = true;
};

struct ProfileTable {
  std::vector<ProfileRow> rows;
};

ProfileTable variation_profile(const SpaceRef& space, std::span<const double> schedule,
                               std::span<const double> radii,
                               const FamilyBuilder& builder = ball_average, unsigned workers = 1);

/// phi(x) + (1 - pi(phi(x))) delta_x, restoring pi = 1 after drift.
Cochain repair_unital(const Cochain& phi);

/// f(x) = |phi(x)| / |phi(x)|_1; requires pi(phi(x)) = 1 within 1e-9.
ReiterFamily normalize_to_prob(const Cochain& phi);

inline constexpr double kUnitalTolerance = 1e-9;

/// (f * theta)(x, y) = sum_z f(x)(z) theta(z, y) for f in E^{p,-1}(l1 or l1_0)
/// and theta in E^{0,q}.
Cochain convolve(const Cochain& f, const Cochain& theta);
Cochain convolve(const ReiterFamily& f, const Cochain& theta);

/// s_f phi = f * s(phi), q >= 0.
Cochain averaged_split(const ReiterFamily& f, const Cochain& phi);

/// A law aggregated over many instances.
struct LawAudit {
  std::string law;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double max_violation = 0;
  std::optional<double> bound;  ///< bound at the instance with the worst margin
  std::optional<double> value;  ///< measured lhs at that instance
  std::optional<TuplePair> witness;
  bool exact = true;

  void absorb(const AuditResult& r);
  bool passed() const noexcept { return failures == 0; }
 private:
  std::optional<double> worst_margin_;
};

/// |f * theta|_R <= |f|_R |theta| measured pointwise over the audit domain.
AuditResult audit_convolution_bound(const Cochain& f, const Cochain& theta, double radius,
                                    const AuditOptions& options);

/// D(f * theta) = (Df) * theta and d(f * theta) = (-1)^p f * d theta; the sign
/// comes from the (-1)^(i+p) in d and vanishes for p = 0.
std::vector<AuditResult> audit_convolution_laws(const Cochain& f, const Cochain& theta,
                                                double radius, const AuditOptions& options,
                                                double tolerance = kIdentityTolerance);

/// |D s_f phi|_R <= |Df|_R |s phi|.
AuditResult audit_averaged_split(const ReiterFamily& f, const Cochain& phi, double radius,
                                 const AuditOptions& options);

struct DefectReport {
  Cochain defect;  ///< f * phi - phi
  double measured = 0;
  double bound = 0;  ///< |f| |D phi|_S with S the family's support radius
  double f_norm = 0;
  double dphi_norm = 0;
  double support_radius = 0;
  bool exact = true;
  std::optional<TuplePair> witness;
  bool within_bound = false;
};

inline constexpr double kDefectSlack = 1e-10;

/// Requires a probability family.
DefectReport homotopy_defect(const ReiterFamily& f, const Cochain& phi,
                             const AuditOptions& options = {});

/// (d s_f + s_f d) phi = f * phi, q >= 0.
AuditResult audit_averaged_homotopy(const ReiterFamily& f, const Cochain& phi, double radius,
                                    const AuditOptions& options,
                                    double tolerance = kIdentityTolerance);

/// x -> F(x) in l1(X x X) with supp F(x) inside B_R(x) x B_R(x).
class PairFamily {
 public:
  /// Throws with the offending (x, z0, z1) if a support escapes its ball.
  PairFamily(SpaceRef space, std::vector<PairVector> values, double radius);

  /// F(x) = lift_boundary(h(x), x) for a (0,-1) cochain h with sum-zero values.
  static PairFamily lift(const Cochain& h);

  const SpaceRef& space() const noexcept { return space_; }
  const PairVector& operator[](Point x) const { return values_->at(x); }
  double radius() const noexcept { return radius_; }
  double sup_norm() const noexcept;
  /// max d(z0, z1) over every support pair.
  double pair_radius() const noexcept;

  /// x -> boundary_pairs(F(x)) in E^{0,-1}(X, l1_0).
  Cochain boundary() const;
  /// (T_F zeta)(x, y) = sum F(x)(z0, z1) zeta((z0, z1), y) for zeta in E^{1,q}.
  Cochain apply(const Cochain& zeta) const;

 private:
  SpaceRef space_;
  std::shared_ptr<const std::vector<PairVector>> values_;
  double radius_;
};

struct PairingAudit {
  AuditResult identity;  ///< (dF) * theta = T_F(D theta)
  AuditResult bound;     ///< |T_F D theta| <= sup|F(x)| |D theta|_{pair radius}
  bool passed() const noexcept { return identity.passed() && bound.passed(); }
};

PairingAudit tf_identity(const PairFamily& family, const Cochain& theta,
                         const AuditOptions& options = {},
                         double tolerance = kExactTolerance);

/// |f(x1) - f(x0)| <= 2 |phi(x1) - phi(x0)| for pairs within R; f = normalize_to_prob(phi).
AuditResult audit_normalization(const Cochain& phi, const ReiterFamily& f, double radius);

}  // namespace cohomlab
