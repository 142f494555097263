#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohomlab/cochain.hpp"

namespace cohomlab {

/// What varies along a sequence, e.g. the Reiter radius S_n.
struct FamilyAxis {
  std::string description;
  std::vector<double> values;  ///< one per term; empty means "n itself"
};

/// A finite prefix phi_1..phi_N standing in for an element of the quotient
/// completion. All terms share bidegree, module and space.
class CochainSequence {
 public:
  CochainSequence(std::vector<Cochain> terms, FamilyAxis axis = {});

  std::size_t size() const noexcept { return terms_.size(); }
  /// 1-based, matching the usual n = 1..N indexing.
  const Cochain& term(std::size_t n) const;
  const std::vector<Cochain>& terms() const noexcept { return terms_; }
  const FamilyAxis& axis() const noexcept { return axis_; }
  /// Axis value for term n (n itself when the axis has no values).
  double axis_value(std::size_t n) const;

  int p() const noexcept { return terms_.front().p(); }
  int q() const noexcept { return terms_.front().q(); }
  Module module() const noexcept { return terms_.front().module(); }

  /// Term n of the result is term indices[n-1] (1-based) of this sequence,
  /// e.g. {1,1,2,2,3,3} repeats every term. No claim is made that the
  /// represented class is unchanged.
  CochainSequence reindexed(std::span<const std::size_t> indices) const;

 private:
  std::vector<Cochain> terms_;
  FamilyAxis axis_;
};

CochainSequence seq_diff_D(const CochainSequence& seq);
CochainSequence seq_diff_d(const CochainSequence& seq);
CochainSequence seq_split_s(const CochainSequence& seq);

enum class Verdict { Decaying, Stalled, Growing };
std::string_view to_string(Verdict v) noexcept;

struct DecayThresholds {
  double decay_ratio = 0.5;   ///< decaying needs last <= ratio * first
  double decay_rate = -0.5;   ///< ... and fitted slope <= this
  double growth_rate = 0.25;  ///< growing when fitted slope >= this
  double zero_tol = 1e-12;    ///< values at or below count as zero
  bool against_axis = false;  ///< fit log value against log S_n instead of log n
};

/// Prefix evidence about |D phi_n|_R along n. Never a claim about a limit.
struct DecayDiagnostic {
  double radius = 0;
  std::vector<double> values;
  std::vector<double> abscissa;
  double first = 0;
  double last = 0;
  std::optional<double> fitted_rate;
  Verdict verdict = Verdict::Stalled;
  bool exact = true;
};

/// Least-squares slope of log(value) against log(abscissa) over the points
/// whose value exceeds zero_tol; nullopt with fewer than two such points.
std::optional<double> fitted_log_slope(std::span<const double> values,
                                       std::span<const double> abscissa, double zero_tol);

/// Pure verdict rule on a value series.
DecayDiagnostic classify_decay(std::vector<double> values, std::vector<double> abscissa,
                               const DecayThresholds& thresholds);

/// |D phi_n|_R for each term and each R, with verdicts; requires N >= 2.
std::vector<DecayDiagnostic> asymptotic_invariance(const CochainSequence& seq,
                                                   std::span<const double> radii,
                                                   const DecayThresholds& thresholds = {},
                                                   const AuditOptions& options = {});

struct CounterexampleReport {
  double d_flat_violation = 0;  ///< max entry of D phi on audited tuples
  bool d_flat = false;
  double ds_norm = 0;  ///< |D s phi|_1
  std::optional<TuplePair> witness;
  bool exact = true;
  std::size_t samples = 0;
};

/// phi(x, (y_0, y_1)) = delta_{y_1} - delta_{y_0} in l1(X): D phi = 0 yet
/// |D s phi|_1 = 2, so s does not preserve asymptotic invariance.
CounterexampleReport counterexample_s_not_invariant(const SpaceRef& space,
                                                    const AuditOptions& options = {});

}  // namespace cohomlab
