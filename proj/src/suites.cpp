#include "cohomlab/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cohomlab/errors.hpp"
#include "cohomlab/random_cochain.hpp"

namespace cohomlab {

namespace {

constexpr std::array<std::pair<int, int>, 6> kBidegrees{
    {{0, -1}, {0, 0}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};
constexpr std::array<Module, 3> kModules{Module::L1, Module::L1Zero, Module::Scalar};

class LawSet {
 public:
  LawAudit& operator[](const std::string& law) {
    for (auto& a : laws_) {
      if (a.law == law) return a;
    }
    laws_.emplace_back();
    laws_.back().law = law;
    return laws_.back();
  }
  void absorb(const AuditResult& r) { (*this)[r.check].absorb(r); }
  void absorb(const std::vector<AuditResult>& rs) {
    for (const auto& r : rs) absorb(r);
  }
  std::vector<LawAudit> take() { return std::move(laws_); }

 private:
  std::vector<LawAudit> laws_;
};

AuditResult scalar_check(std::string check, double value, double bound, double violation,
                         double tolerance) {
  AuditResult r;
  r.check = std::move(check);
  r.value = value;
  r.bound = bound;
  r.max_violation = violation;
  r.tolerance = tolerance;
  r.samples = 1;
  return r;
}

std::uint64_t instance_seed(const VerifyConfig& c, std::string_view suite, std::size_t i) {
  std::uint64_t h = c.seed;
  for (const char ch : suite) h = hash_combine(h, static_cast<unsigned char>(ch));
  return hash_combine(h, i);
}

Cochain indexed_cochain(const VerifyConfig& c, std::string_view suite, std::size_t i) {
  const auto [p, q] = kBidegrees[i % kBidegrees.size()];
  const Module m = kModules[(i / kBidegrees.size()) % kModules.size()];
  return random_cochain(c.space, p, q, m, instance_seed(c, suite, i));
}

std::size_t count_or(const VerifyConfig& c, std::size_t fallback) {
  return c.count == 0 ? fallback : c.count;
}

SuiteReport complex_identities(const VerifyConfig& c) {
  LawSet laws;
  const std::size_t count = count_or(c, 200);
  for (std::size_t i = 0; i < count; ++i) {
    laws.absorb(audit_complex_identities(indexed_cochain(c, "complex", i), c.radii, c.options,
                                         c.tolerance));
  }
  SuiteReport r{"complex-identities", laws.take()};
  r.details["cochains"] = count;
  return r;
}

SuiteReport splitting(const VerifyConfig& c) {
  LawSet laws;
  const std::size_t count = count_or(c, 60);
  for (std::size_t i = 0; i < count; ++i) {
    const Cochain phi = indexed_cochain(c, "splitting", i);
    laws.absorb(audit_norm_bounds(phi, c.radii, c.options));
    for (const double r : c.radii) {
      if (phi.q() >= 0) {
        laws.absorb(audit_equal(diff_d(split_s(phi)) + split_s(diff_d(phi)), phi, r, c.options,
                                "ds+sd=1", c.tolerance));
      } else {
        laws.absorb(audit_equal(split_s(diff_d(phi)), phi, r, c.options, "sd=1", c.tolerance));
      }
    }
  }
  SuiteReport r{"splitting", laws.take()};
  r.details["cochains"] = count;
  return r;
}

SuiteReport johnson(const VerifyConfig& c) {
  LawSet laws;
  laws.absorb(audit_johnson(c.space, c.radii, c.options, kExactTolerance));
  return {"johnson", laws.take()};
}

ReiterFamily indexed_family(const VerifyConfig& c, std::size_t i) {
  const double s = static_cast<double>(1 + i % 3);
  switch (i % 3) {
    case 0:
      return ball_average(c.space, s);
    case 1:
      return lazy_random_walk(c.space, s);
    default:
      return random_probability_family(c.space, s, instance_seed(c, "family", i));
  }
}

SuiteReport convolution(const VerifyConfig& c) {
  LawSet laws;
  const std::size_t count = count_or(c, 50);
  const ReiterFamily delta = dirac_family(c.space);
  const Cochain j01 = johnson_j01(c.space);
  for (std::size_t i = 0; i < count; ++i) {
    const ReiterFamily fam = indexed_family(c, i);
    const Cochain f = i % 2 == 0 ? fam.as_cochain() : diff_D(fam.as_cochain());
    const int q = static_cast<int>(i % 3) - 1;
    const Module m = kModules[(i / 3) % kModules.size()];
    const Cochain theta =
        random_cochain(c.space, 0, q, m, instance_seed(c, "convolution", i));
    for (const double r : c.radii) {
      laws.absorb(audit_convolution_bound(f, theta, r, c.options));
      laws.absorb(audit_convolution_laws(f, theta, r, c.options, c.tolerance));
      laws.absorb(audit_equal(convolve(delta, theta), theta, r, c.options, "delta*theta=theta",
                              c.tolerance));
      laws.absorb(audit_equal(convolve(fam, j01), j01, r, c.options,
                              "f*theta=theta for x-independent theta", c.tolerance));
    }
  }
  SuiteReport r{"convolution", laws.take()};
  r.details["pairs"] = count;
  return r;
}

SuiteReport defect_bound(const VerifyConfig& c) {
  LawSet laws;
  const std::size_t count = count_or(c, 100);
  for (std::size_t i = 0; i < count; ++i) {
    const ReiterFamily f = i % 2 == 0
                               ? ball_average(c.space, static_cast<double>(1 + i % 3))
                               : random_probability_family(c.space, static_cast<double>(1 + i % 3),
                                                           instance_seed(c, "family", i));
    const int q = static_cast<int>(i % 3) - 1;
    const Module m = kModules[(i / 3) % kModules.size()];
    const Cochain phi = random_cochain(c.space, 0, q, m, instance_seed(c, "defect", i));
    const DefectReport d = homotopy_defect(f, phi, c.options);
    AuditResult dr = scalar_check("|f*phi - phi| <= |f| |D phi|_S", d.measured, d.bound,
                                  std::max(0.0, d.measured - d.bound), kDefectSlack);
    dr.exact = d.exact;
    dr.witness = d.witness;
    dr.radius = d.support_radius;
    dr.q = q;
    laws.absorb(dr);
    if (q >= 0) {
      for (const double r : c.radii) {
        laws.absorb(audit_averaged_homotopy(f, phi, r, c.options, c.tolerance));
        laws.absorb(audit_averaged_split(f, phi, r, c.options));
      }
    }
  }
  SuiteReport r{"defect-bound", laws.take()};
  r.details["pairs"] = count;
  return r;
}

SuiteReport pairing(const VerifyConfig& c) {
  LawSet laws;
  const std::size_t count = count_or(c, 20);
  const std::size_t n = c.space->size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = instance_seed(c, "pairing", i);
    PairFamily fam = [&] {
      if (i % 2 == 0) return random_pair_family(c.space, static_cast<double>(1 + i % 3), 3, seed);
      const Cochain h = random_cochain(c.space, 0, -1, Module::L1Zero, seed);
      return PairFamily::lift(h);
    }();
    const int q = static_cast<int>(i % 3) - 1;
    const Cochain theta =
        random_cochain(c.space, 0, q, kModules[(i / 3) % 3], hash_combine(seed, 1));
    const PairingAudit a = tf_identity(fam, theta, c.options, kExactTolerance);
    laws.absorb(a.identity);
    laws.absorb(a.bound);
  }
  Rng rng(instance_seed(c, "lift", 0));
  const std::size_t lifts = 5 * count;
  for (std::size_t i = 0; i < lifts; ++i) {
    const SupportedVector h = random_vector(rng, n, Module::L1Zero, 1 + i % 4);
    const Point base = static_cast<Point>(rng.below(n));
    const PairVector lift = lift_boundary(h, base);
    const double err = max_entry_difference(boundary_pairs(lift), h);
    laws.absorb(scalar_check("boundary(lift(h)) = h", err, 0.0, err, kExactTolerance));
    laws.absorb(scalar_check("|lift(h)| <= |h|", lift.norm(), h.norm(),
                             std::max(0.0, lift.norm() - h.norm()), kExactTolerance));
  }
  SuiteReport r{"pairing", laws.take()};
  r.details["families"] = count;
  r.details["lifts"] = lifts;
  return r;
}

SuiteReport ses(const VerifyConfig& c) {
  LawSet laws;
  const std::size_t count = count_or(c, 20);
  const std::size_t n = c.space->size();
  Rng rng(instance_seed(c, "ses", 0));
  for (std::size_t i = 0; i < 5 * count; ++i) {
    const SupportedVector v = random_vector(rng, n, Module::L1Zero, 1 + i % 4);
    const double s = std::abs(pi_sum(include_zero_sum(v)).scalar_value());
    laws.absorb(scalar_check("pi(iota v) = 0", s, 0.0, s,
                             kZeroSumTolerance * std::max(1.0, v.norm())));
    const double lambda = rng.uniform(-4.0, 4.0);
    const Point x = static_cast<Point>(rng.below(n));
    const double back = pi_sum(lift_scalar(lambda, x)).scalar_value();
    laws.absorb(scalar_check("pi(lift(lambda, x)) = lambda", back, lambda,
                             std::abs(back - lambda), kExactTolerance));
  }
  // Reiter candidates perturbed by sum-zero noise stay unital but lose positivity.
  const double eps = 0.05;
  for (std::size_t i = 0; i < count; ++i) {
    const double s = static_cast<double>(1 + i % 3);
    const ReiterFamily base = ball_average(c.space, s);
    std::vector<SupportedVector> values;
    values.reserve(n);
    for (Point x = 0; x < n; ++x) {
      const auto ball = c.space->ball(x, s);
      SupportedVector noise = random_vector(rng, n, Module::L1Zero, 2, false, ball);
      values.push_back(base[x] + eps * noise.retagged(Module::L1));
    }
    const ReiterFamily raw(c.space, s, std::move(values), "perturbed");
    const Cochain phi = repair_unital(raw.as_cochain());
    const ReiterFamily f = normalize_to_prob(phi);
    const ReiterFamily phi_family = ReiterFamily::from_cochain(phi, s);
    AuditResult prob = scalar_check("normalized family is a probability family",
                                    f.is_prob() ? 0.0 : 1.0, 0.0, f.is_prob() ? 0.0 : 1.0, 0.0);
    laws.absorb(prob);
    for (const double r : c.radii) {
      laws.absorb(audit_normalization(phi, f, r));
      const double nu_f = variation(f, r, c.options.workers).nu;
      const double nu_phi = variation(phi_family, r, c.options.workers).nu;
      AuditResult nu = scalar_check("nu_f <= 2 nu_phi", nu_f, 2.0 * nu_phi,
                                    std::max(0.0, nu_f - 2.0 * nu_phi), kExactTolerance);
      nu.radius = r;
      laws.absorb(nu);
    }
  }
  SuiteReport r{"ses", laws.take()};
  r.details["families"] = count;
  r.details["epsilon"] = eps;
  return r;
}

SuiteReport counterexample(const VerifyConfig& c) {
  const CounterexampleReport cr = counterexample_s_not_invariant(c.space, c.options);
  LawSet laws;
  AuditResult flat = scalar_check("D phi = 0", cr.d_flat_violation, 0.0, cr.d_flat_violation,
                                  kExactTolerance);
  flat.radius = 1.0;
  laws.absorb(flat);
  AuditResult norm = scalar_check("|D s phi|_1 = 2", cr.ds_norm, 2.0, std::abs(cr.ds_norm - 2.0),
                                  kExactTolerance);
  norm.radius = 1.0;
  norm.exact = cr.exact;
  norm.witness = cr.witness;
  laws.absorb(norm);
  SuiteReport r{"counterexample", laws.take()};
  r.details["ds_norm"] = cr.ds_norm;
  r.details["witness"] = cr.witness ? to_json(*cr.witness) : Json(nullptr);
  return r;
}

}  // namespace

bool SuiteReport::passed() const noexcept {
  return std::all_of(laws.begin(), laws.end(), [](const LawAudit& a) { return a.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"complex-identities", "splitting", "johnson",
                                              "convolution",        "defect-bound", "pairing",
                                              "ses",                "counterexample"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& config) {
  if (!config.space) throw Error("verify needs a space");
  if (name == "complex-identities") return complex_identities(config);
  if (name == "splitting") return splitting(config);
  if (name == "johnson") return johnson(config);
  if (name == "convolution") return convolution(config);
  if (name == "defect-bound") return defect_bound(config);
  if (name == "pairing") return pairing(config);
  if (name == "ses") return ses(config);
  if (name == "counterexample") return counterexample(config);
  throw Error("unknown suite '" + name + "'");
}

Json to_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  Json laws = Json::array();
  for (const auto& a : report.laws) laws.push_back(to_json(a));
  j["laws"] = std::move(laws);
  j["details"] = report.details;
  return j;
}

}  // namespace cohomlab
