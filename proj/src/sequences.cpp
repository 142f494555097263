#include "cohomlab/sequences.hpp"

#include <algorithm>
#include <cmath>

#include "cohomlab/audit.hpp"
#include "cohomlab/errors.hpp"

namespace cohomlab {

CochainSequence::CochainSequence(std::vector<Cochain> terms, FamilyAxis axis)
    : terms_(std::move(terms)), axis_(std::move(axis)) {
  if (terms_.empty()) throw Error("a cochain sequence needs at least one term");
  const Cochain& first = terms_.front();
  for (const auto& t : terms_) {
    if (t.p() != first.p() || t.q() != first.q() || t.module() != first.module() ||
        t.space() != first.space()) {
      throw ModuleMismatch("sequence terms must share bidegree, module and space");
    }
  }
  if (!axis_.values.empty() && axis_.values.size() != terms_.size()) {
    throw Error("family axis has " + std::to_string(axis_.values.size()) + " values for " +
                std::to_string(terms_.size()) + " terms");
  }
}

const Cochain& CochainSequence::term(std::size_t n) const {
  if (n < 1 || n > terms_.size()) {
    throw Error("term index " + std::to_string(n) + " outside 1.." +
                std::to_string(terms_.size()));
  }
  return terms_[n - 1];
}

double CochainSequence::axis_value(std::size_t n) const {
  if (axis_.values.empty()) return static_cast<double>(n);
  return axis_.values.at(n - 1);
}

CochainSequence CochainSequence::reindexed(std::span<const std::size_t> indices) const {
  std::vector<Cochain> terms;
  FamilyAxis axis{axis_.description + " (reindexed)", {}};
  terms.reserve(indices.size());
  for (const std::size_t i : indices) {
    terms.push_back(term(i));
    axis.values.push_back(axis_value(i));
  }
  return CochainSequence(std::move(terms), std::move(axis));
}

namespace {

template <class Op>
CochainSequence map_terms(const CochainSequence& seq, Op op) {
  std::vector<Cochain> terms;
  terms.reserve(seq.size());
  for (const auto& t : seq.terms()) terms.push_back(op(t));
  return CochainSequence(std::move(terms), seq.axis());
}

}  // namespace

CochainSequence seq_diff_D(const CochainSequence& seq) { return map_terms(seq, diff_D); }
CochainSequence seq_diff_d(const CochainSequence& seq) { return map_terms(seq, diff_d); }
CochainSequence seq_split_s(const CochainSequence& seq) { return map_terms(seq, split_s); }

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Decaying:
      return "decaying";
    case Verdict::Stalled:
      return "stalled";
    case Verdict::Growing:
      return "growing";
  }
  return "?";
}

std::optional<double> fitted_log_slope(std::span<const double> values,
                                       std::span<const double> abscissa, double zero_tol) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > zero_tol) || !(abscissa[i] > 0)) continue;
    const double lx = std::log(abscissa[i]);
    const double ly = std::log(values[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++k;
  }
  if (k < 2) return std::nullopt;
  const double kk = static_cast<double>(k);
  const double denom = kk * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) return std::nullopt;
  return (kk * sxy - sx * sy) / denom;
}

DecayDiagnostic classify_decay(std::vector<double> values, std::vector<double> abscissa,
                               const DecayThresholds& t) {
  if (values.size() < 2) throw Error("a decay diagnostic needs at least two terms");
  if (abscissa.size() != values.size()) throw Error("abscissa and values differ in length");
  DecayDiagnostic d;
  d.first = values.front();
  d.last = values.back();
  d.fitted_rate = fitted_log_slope(values, abscissa, t.zero_tol);

  const bool all_null = std::all_of(values.begin(), values.end(),
                                    [&](double v) { return v <= t.zero_tol; });
  const bool reached_zero = d.last <= t.zero_tol;
  if (all_null) {
    d.verdict = Verdict::Decaying;
  } else if (d.last <= t.decay_ratio * d.first &&
             (reached_zero || (d.fitted_rate && *d.fitted_rate <= t.decay_rate))) {
    d.verdict = Verdict::Decaying;
  } else if (d.fitted_rate && *d.fitted_rate >= t.growth_rate) {
    d.verdict = Verdict::Growing;
  } else {
    d.verdict = Verdict::Stalled;
  }
  d.values = std::move(values);
  d.abscissa = std::move(abscissa);
  return d;
}

std::vector<DecayDiagnostic> asymptotic_invariance(const CochainSequence& seq,
                                                   std::span<const double> radii,
                                                   const DecayThresholds& thresholds,
                                                   const AuditOptions& options) {
  if (seq.size() < 2) throw Error("asymptotic_invariance needs at least two terms");
  const CochainSequence dseq = seq_diff_D(seq);
  std::vector<DecayDiagnostic> out;
  for (const double r : radii) {
    std::vector<double> values;
    std::vector<double> abscissa;
    bool exact = true;
    for (std::size_t n = 1; n <= dseq.size(); ++n) {
      const auto report = seminorm(dseq.term(n), r, options);
      values.push_back(report.value);
      exact = exact && report.exact;
      abscissa.push_back(thresholds.against_axis ? seq.axis_value(n) : static_cast<double>(n));
    }
    DecayDiagnostic d = classify_decay(std::move(values), std::move(abscissa), thresholds);
    d.radius = r;
    d.exact = exact;
    out.push_back(std::move(d));
  }
  return out;
}

CounterexampleReport counterexample_s_not_invariant(const SpaceRef& space,
                                                    const AuditOptions& options) {
  if (!space || space->size() < 2) {
    throw Error("counterexample needs a space with at least two points");
  }
  bool has_pair = false;
  for (Point a = 0; a < space->size() && !has_pair; ++a) {
    for (Point b = 0; b < space->size(); ++b) {
      if (a != b && space->within(a, b, 1.0)) {
        has_pair = true;
        break;
      }
    }
  }
  if (!has_pair) throw Error("counterexample needs two distinct points within distance 1");

  const Cochain phi = johnson_j01(space, Module::L1);
  const AuditResult flat = audit_zero(diff_D(phi), 1.0, options, "D phi = 0", kExactTolerance);
  const SeminormReport ds = seminorm(diff_D(split_s(phi)), 1.0, options);

  CounterexampleReport r;
  r.d_flat_violation = flat.max_violation;
  r.d_flat = flat.passed();
  r.ds_norm = ds.value;
  r.witness = ds.witness;
  r.exact = flat.exact && ds.exact;
  r.samples = flat.samples + ds.samples;
  return r;
}

}  // namespace cohomlab
