#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohomlab/cochain.hpp"

namespace cohomlab {

inline constexpr double kIdentityTolerance = 1e-10;
inline constexpr double kExactTolerance = 1e-12;

/// Outcome of checking one law on one cochain at one radius.
///
/// Identity checks fill `max_violation` (largest entry of lhs - rhs); bound
/// checks also fill `value` (measured lhs) and `bound`.
struct AuditResult {
  std::string check;
  int p = 0;
  int q = -1;
  double radius = 0;
  double max_violation = 0;
  std::optional<double> value;
  std::optional<double> bound;
  bool exact = true;
  std::optional<TuplePair> witness;
  std::size_t samples = 0;
  double tolerance = kIdentityTolerance;

  bool passed() const noexcept { return max_violation <= tolerance; }
};

/// Largest entry of lhs - rhs over the audit domain of lhs at radius R.
AuditResult audit_equal(const Cochain& lhs, const Cochain& rhs, double radius,
                        const AuditOptions& options, std::string check,
                        double tolerance = kIdentityTolerance);
AuditResult audit_zero(const Cochain& phi, double radius, const AuditOptions& options,
                       std::string check, double tolerance = kIdentityTolerance);

/// D^2 = 0, d^2 = 0, Dd + dD = 0, and (ds + sd) = 1 (q >= 0) or sd = 1 (q = -1).
std::vector<AuditResult> audit_complex_identities(const Cochain& phi,
                                                  std::span<const double> radii,
                                                  const AuditOptions& options,
                                                  double tolerance = kIdentityTolerance);

/// For a pointwise law |lhs(x, y)| <= factor * |phi|_R.
///
/// The reference seminorm is the audited sup of phi, enlarged by the norms
/// of every phi value lhs(x, y) actually reads (`referenced`); this keeps the
/// check sound when either side is sampled.
AuditResult audit_bound(const Cochain& lhs, double factor, const Cochain& reference,
                        const std::function<double(TupleView, TupleView)>& referenced,
                        double radius, const AuditOptions& options, std::string check);

/// |D phi|_R <= (p+2) |phi|_R.
AuditResult audit_D_bound(const Cochain& phi, double radius, const AuditOptions& options);
/// |d phi|_R <= (q+2) |phi|_R.
AuditResult audit_d_bound(const Cochain& phi, double radius, const AuditOptions& options);
/// |s phi|_R <= |phi|_R, for q >= 0.
AuditResult audit_s_bound(const Cochain& phi, double radius, const AuditOptions& options);

std::vector<AuditResult> audit_norm_bounds(const Cochain& phi, std::span<const double> radii,
                                           const AuditOptions& options);

/// DJ01 = 0, dJ01 = 0, D h = -J10, d h = J01 at each radius.
std::vector<AuditResult> audit_johnson(const SpaceRef& space, std::span<const double> radii,
                                       const AuditOptions& options,
                                       double tolerance = kExactTolerance);

}  // namespace cohomlab
