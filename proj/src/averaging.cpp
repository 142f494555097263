#include "cohomlab/averaging.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cohomlab/detail/parallel.hpp"
#include "cohomlab/errors.hpp"

namespace cohomlab {

namespace {

std::string point_name(Point x) { return std::to_string(x); }

TuplePair tuple_at(const AuditDomain& domain, std::size_t i) {
  auto x = domain.x(i);
  auto y = domain.y(i);
  return {{x.begin(), x.end()}, {y.begin(), y.end()}};
}

bool is_probability(const SupportedVector& v) {
  for (const auto& e : v.entries()) {
    if (e.second < 0) return false;
  }
  return std::abs(v.sum() - 1.0) <= kProbabilityTolerance;
}

void require_function_module(const Cochain& f, const char* op) {
  if (f.module() == Module::Scalar) {
    throw ModuleMismatch(std::string(op) + ": expected l1-valued cochain, got scalar");
  }
}

}  // namespace

ReiterFamily::ReiterFamily(SpaceRef space, double support_radius,
                           std::vector<SupportedVector> values, std::string kind)
    : space_(std::move(space)), support_radius_(support_radius), kind_(std::move(kind)) {
  if (!space_) throw Error("Reiter family needs a space");
  if (values.size() != space_->size()) {
    throw Error("Reiter family has " + std::to_string(values.size()) + " values for " +
                std::to_string(space_->size()) + " points");
  }
  is_prob_ = true;
  for (Point x = 0; x < values.size(); ++x) {
    const auto& v = values[x];
    if (v.module() != Module::L1) {
      throw ModuleMismatch("Reiter family values must lie in l1, point " + point_name(x));
    }
    for (const auto& [z, value] : v.entries()) {
      if (z >= space_->size() || !space_->within(x, z, support_radius_)) {
        throw Error("supp f(" + point_name(x) + ") contains " + point_name(z) +
                    " outside B_" + std::to_string(support_radius_) + "(" + point_name(x) + ")");
      }
    }
    is_prob_ = is_prob_ && is_probability(v);
  }
  values_ = std::make_shared<const std::vector<SupportedVector>>(std::move(values));
}

ReiterFamily ReiterFamily::from_cochain(const Cochain& phi, std::optional<double> support_radius) {
  if (phi.p() != 0 || phi.q() != -1) throw Error("a Reiter family is a (0,-1) cochain");
  const auto& space = *phi.space();
  std::vector<SupportedVector> values;
  values.reserve(space.size());
  double measured = 0.0;
  for (Point x = 0; x < space.size(); ++x) {
    const Point xs[1] = {x};
    values.push_back(phi(TupleView(xs, 1)));
    for (const auto& e : values.back().entries()) {
      measured = std::max(measured, space.dist(x, e.first));
    }
  }
  return ReiterFamily(phi.space(), support_radius.value_or(measured), std::move(values),
                      phi.name().empty() ? "cochain" : phi.name());
}

double ReiterFamily::sup_norm() const noexcept {
  double worst = 0.0;
  for (const auto& v : *values_) worst = std::max(worst, v.norm());
  return worst;
}

Cochain ReiterFamily::as_cochain() const {
  const double s = support_radius_;
  return Cochain(
      space_, 0, -1, Module::L1,
      [values = values_](TupleView x, TupleView, double c, VectorBuilder& out) {
        out.add((*values)[x[0]], c);
      },
      SupportWitness([s](double) { return s; }), kind_);
}

ReiterFamily ball_average(const SpaceRef& space, double radius) {
  if (radius < 0) throw Error("ball radius must be non-negative");
  std::vector<SupportedVector> values;
  values.reserve(space->size());
  for (Point x = 0; x < space->size(); ++x) {
    const auto ball = space->ball(x, radius);
    const double mass = 1.0 / static_cast<double>(ball.size());
    std::vector<Entry> entries;
    entries.reserve(ball.size());
    for (const Point z : ball) entries.emplace_back(z, mass);
    values.push_back(SupportedVector::from_entries(Module::L1, std::move(entries)));
  }
  return ReiterFamily(space, radius, std::move(values), "ball_average");
}

ReiterFamily lazy_random_walk(const SpaceRef& space, double steps) {
  if (steps < 0) throw Error("walk length must be non-negative");
  const std::size_t n = space->size();
  const auto t = static_cast<std::size_t>(std::floor(steps));
  std::vector<std::vector<Point>> nbrs(n);
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) {
      if (a != b && space->dist(a, b) <= 1.0) nbrs[a].push_back(b);
    }
  }
  std::vector<SupportedVector> values;
  values.reserve(n);
  std::vector<double> cur(n), next(n);
  for (Point x = 0; x < n; ++x) {
    std::fill(cur.begin(), cur.end(), 0.0);
    cur[x] = 1.0;
    for (std::size_t step = 0; step < t; ++step) {
      std::fill(next.begin(), next.end(), 0.0);
      for (Point a = 0; a < n; ++a) {
        if (cur[a] == 0.0) continue;
        if (nbrs[a].empty()) {
          next[a] += cur[a];
          continue;
        }
        next[a] += 0.5 * cur[a];
        const double share = 0.5 * cur[a] / static_cast<double>(nbrs[a].size());
        for (const Point b : nbrs[a]) next[b] += share;
      }
      std::swap(cur, next);
    }
    std::vector<Entry> entries;
    for (Point z = 0; z < n; ++z) {
      if (cur[z] != 0.0) entries.emplace_back(z, cur[z]);
    }
    values.push_back(SupportedVector::from_entries(Module::L1, std::move(entries)));
  }
  return ReiterFamily(space, static_cast<double>(t), std::move(values), "lazy_random_walk");
}

ReiterFamily dirac_family(const SpaceRef& space) {
  std::vector<SupportedVector> values;
  values.reserve(space->size());
  for (Point x = 0; x < space->size(); ++x) values.push_back(SupportedVector::dirac(x));
  return ReiterFamily(space, 0.0, std::move(values), "dirac");
}

double l1_distance(const SupportedVector& a, const SupportedVector& b) {
  const auto ea = a.entries();
  const auto eb = b.entries();
  double total = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      total += std::abs(ea[i++].second);
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      total += std::abs(eb[j++].second);
    } else {
      total += std::abs(ea[i].second - eb[j].second);
      ++i;
      ++j;
    }
  }
  return total;
}

Variation variation(const ReiterFamily& f, double radius, unsigned workers) {
  const auto& space = *f.space();
  const std::size_t n = space.size();
  struct Best {
    Variation v;
    bool any = false;
  };
  Best best = detail::parallel_reduce(
      n, workers, Best{},
      [&](std::size_t begin, std::size_t end, Best& local) {
        for (std::size_t a = begin; a < end; ++a) {
          for (std::size_t b = a + 1; b < n; ++b) {
            const Point x0 = static_cast<Point>(a);
            const Point x1 = static_cast<Point>(b);
            if (!space.within(x0, x1, radius)) continue;
            const double nu = l1_distance(f[x1], f[x0]);
            if (!local.any || nu > local.v.nu) {
              local.v = {nu, x0, x1};
              local.any = true;
            }
          }
        }
      },
      [](Best& acc, Best&& later) {
        if (later.any && (!acc.any || later.v.nu > acc.v.nu)) acc = later;
      });
  return best.v;
}

ProfileTable variation_profile(const SpaceRef& space, std::span<const double> schedule,
                               std::span<const double> radii, const FamilyBuilder& builder,
                               unsigned workers) {
  if (schedule.empty()) throw Error("profile schedule is empty");
  ProfileTable table;
  for (const double s : schedule) {
    const ReiterFamily f = builder(space, s);
    for (const double r : radii) {
      const Variation v = variation(f, r, workers);
      table.rows.push_back({s, r, v.nu, v.x0, v.x1, true});
    }
  }
  return table;
}

Cochain repair_unital(const Cochain& phi) {
  if (phi.p() != 0 || phi.q() != -1 || phi.module() != Module::L1) {
    throw Error("repair_unital expects an l1-valued (0,-1) cochain");
  }
  return Cochain(
      phi.space(), 0, -1, Module::L1,
      [phi](TupleView x, TupleView y, double c, VectorBuilder& out) {
        VectorBuilder local(Module::L1);
        phi.accumulate(x, y, 1.0, local);
        const SupportedVector v = local.finish();
        out.add(v, c);
        out.add(x[0], c * (1.0 - v.sum()));
      },
      phi.support_witness(), phi.name().empty() ? "" : "repair(" + phi.name() + ")");
}

ReiterFamily normalize_to_prob(const Cochain& phi) {
  if (phi.p() != 0 || phi.q() != -1 || phi.module() != Module::L1) {
    throw Error("normalize_to_prob expects an l1-valued (0,-1) cochain");
  }
  const auto& space = *phi.space();
  std::vector<SupportedVector> values;
  values.reserve(space.size());
  double radius = 0.0;
  for (Point x = 0; x < space.size(); ++x) {
    const Point xs[1] = {x};
    const SupportedVector v = phi(TupleView(xs, 1));
    if (std::abs(v.sum() - 1.0) > kUnitalTolerance) {
      throw Error("normalize_to_prob: pi(phi(" + point_name(x) + ")) = " +
                  std::to_string(v.sum()) + ", expected 1");
    }
    const double norm = v.norm();
    std::vector<Entry> entries;
    entries.reserve(v.entries().size());
    for (const auto& [z, value] : v.entries()) {
      entries.emplace_back(z, std::abs(value) / norm);
      radius = std::max(radius, space.dist(x, z));
    }
    values.push_back(SupportedVector::from_entries(Module::L1, std::move(entries)));
  }
  return ReiterFamily(phi.space(), radius, std::move(values), "normalized");
}

Cochain convolve(const Cochain& f, const Cochain& theta) {
  if (f.q() != -1) throw Error("convolve: f must lie in the augmentation row (q = -1)");
  if (theta.p() != 0) throw Error("convolve: theta must lie in the bottom row (p = 0)");
  require_function_module(f, "convolve");
  if (f.space() != theta.space()) throw ModuleMismatch("convolve: different spaces");
  std::optional<SupportWitness> witness;
  if (f.support_witness() && theta.support_witness()) {
    witness = SupportWitness([sf = *f.support_witness(), st = *theta.support_witness()](double r) {
      const double s = sf(r);
      return s + st(r + s);
    });
  }
  const Module fm = f.module();
  EvalRule rule = [f, theta, fm](TupleView x, TupleView y, double c, VectorBuilder& out) {
    VectorBuilder weights(fm);
    f.accumulate(x, {}, 1.0, weights);
    const SupportedVector w = weights.finish();
    for (const auto& [z, mass] : w.entries()) {
      const Point zs[1] = {z};
      theta.accumulate(TupleView(zs, 1), y, c * mass, out);
    }
  };
  std::string name;
  if (!f.name().empty() && !theta.name().empty()) name = f.name() + "*" + theta.name();
  return Cochain(f.space(), f.p(), theta.q(), theta.module(), std::move(rule), std::move(witness),
                 std::move(name));
}

Cochain convolve(const ReiterFamily& f, const Cochain& theta) {
  return convolve(f.as_cochain(), theta);
}

Cochain averaged_split(const ReiterFamily& f, const Cochain& phi) {
  if (phi.q() < 0) throw Error("averaged_split: no splitting below the augmentation row");
  return convolve(f, split_s(phi));
}

void LawAudit::absorb(const AuditResult& r) {
  ++instances;
  if (!r.passed()) ++failures;
  exact = exact && r.exact;
  const double margin = r.value && r.bound ? *r.value - *r.bound : r.max_violation;
  if (!worst_margin_ || margin > *worst_margin_) {
    worst_margin_ = margin;
    bound = r.bound;
    value = r.value;
    witness = r.witness;
  }
  max_violation = std::max(max_violation, r.max_violation);
}

AuditResult audit_convolution_bound(const Cochain& f, const Cochain& theta, double radius,
                                    const AuditOptions& options) {
  const Cochain lhs = convolve(f, theta);
  const SeminormReport fnorm = seminorm(f, radius, options);
  const SeminormReport tnorm = seminorm(theta, radius, options);
  const auto domain = AuditDomain::build(*lhs.space(), lhs.p(), lhs.q(), radius,
                                         AuditDomain::Mode::Free, options.budget, options.seed,
                                         options.samples);
  struct Local {
    double lhs = 0;
    std::size_t index = 0;
    bool any = false;
    double f_ref = 0;
    double t_ref = 0;
  };
  const Module fm = f.module();
  const Module tm = theta.module();
  Local total = detail::parallel_reduce(
      domain.size(), options.workers, Local{},
      [&](std::size_t begin, std::size_t end, Local& local) {
        VectorBuilder b(lhs.module());
        VectorBuilder fb(fm);
        VectorBuilder tb(tm);
        for (std::size_t i = begin; i < end; ++i) {
          lhs.accumulate(domain.x(i), domain.y(i), 1.0, b);
          const double v = b.finish().norm();
          if (!local.any || v > local.lhs) {
            local.lhs = v;
            local.index = i;
            local.any = true;
          }
          f.accumulate(domain.x(i), {}, 1.0, fb);
          const SupportedVector fx = fb.finish();
          local.f_ref = std::max(local.f_ref, fx.norm());
          for (const auto& e : fx.entries()) {
            const Point zs[1] = {e.first};
            theta.accumulate(TupleView(zs, 1), domain.y(i), 1.0, tb);
            local.t_ref = std::max(local.t_ref, tb.finish().norm());
          }
        }
      },
      [](Local& acc, Local&& later) {
        if (later.any && (!acc.any || later.lhs > acc.lhs)) {
          acc.lhs = later.lhs;
          acc.index = later.index;
          acc.any = true;
        }
        acc.f_ref = std::max(acc.f_ref, later.f_ref);
        acc.t_ref = std::max(acc.t_ref, later.t_ref);
      });

  AuditResult r;
  r.check = "|f*theta|_R <= |f|_R |theta|";
  r.p = lhs.p();
  r.q = lhs.q();
  r.radius = radius;
  r.exact = domain.exact() && fnorm.exact && tnorm.exact;
  r.samples = domain.size();
  const double bound = std::max(fnorm.value, total.f_ref) * std::max(tnorm.value, total.t_ref);
  r.value = total.lhs;
  r.bound = bound;
  r.tolerance = kExactTolerance * std::max(1.0, bound);
  r.max_violation = std::max(0.0, total.lhs - bound);
  if (total.any) r.witness = tuple_at(domain, total.index);
  return r;
}

std::vector<AuditResult> audit_convolution_laws(const Cochain& f, const Cochain& theta,
                                                double radius, const AuditOptions& options,
                                                double tolerance) {
  std::vector<AuditResult> out;
  const Cochain conv = convolve(f, theta);
  out.push_back(audit_equal(diff_D(conv), convolve(diff_D(f), theta), radius, options,
                            "D(f*theta)=(Df)*theta", tolerance));
  const double sign = f.p() % 2 == 0 ? 1.0 : -1.0;
  out.push_back(audit_equal(diff_d(conv), sign * convolve(f, diff_d(theta)), radius, options,
                            "d(f*theta)=(-1)^p f*(d theta)", tolerance));
  return out;
}

AuditResult audit_averaged_split(const ReiterFamily& f, const Cochain& phi, double radius,
                                 const AuditOptions& options) {
  const Cochain lhs = diff_D(averaged_split(f, phi));
  const Cochain df = diff_D(f.as_cochain());
  const Cochain sphi = split_s(phi);
  // Pointwise: D(f * s phi)(x, y) = sum_z Df(x)(z) s phi(z, y).
  const SeminormReport dfn = seminorm(df, radius, options);
  const SeminormReport sn = seminorm(sphi, radius, options);
  const auto domain = AuditDomain::build(*lhs.space(), lhs.p(), lhs.q(), radius,
                                         AuditDomain::Mode::Free, options.budget, options.seed,
                                         options.samples);
  double worst = 0.0;
  std::size_t worst_index = 0;
  double df_ref = dfn.value;
  double s_ref = sn.value;
  VectorBuilder b(lhs.module());
  VectorBuilder fb(Module::L1);
  VectorBuilder sb(sphi.module());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    lhs.accumulate(domain.x(i), domain.y(i), 1.0, b);
    const double v = b.finish().norm();
    if (i == 0 || v > worst) {
      worst = v;
      worst_index = i;
    }
    df.accumulate(domain.x(i), {}, 1.0, fb);
    const SupportedVector dfx = fb.finish();
    df_ref = std::max(df_ref, dfx.norm());
    for (const auto& e : dfx.entries()) {
      const Point zs[1] = {e.first};
      sphi.accumulate(TupleView(zs, 1), domain.y(i), 1.0, sb);
      s_ref = std::max(s_ref, sb.finish().norm());
    }
  }
  AuditResult r;
  r.check = "|D s_f phi|_R <= |Df|_R |s phi|";
  r.p = lhs.p();
  r.q = lhs.q();
  r.radius = radius;
  r.exact = domain.exact() && dfn.exact && sn.exact;
  r.samples = domain.size();
  r.value = worst;
  r.bound = df_ref * s_ref;
  r.tolerance = kExactTolerance * std::max(1.0, *r.bound);
  r.max_violation = std::max(0.0, worst - *r.bound);
  if (domain.size() > 0) r.witness = tuple_at(domain, worst_index);
  return r;
}

DefectReport homotopy_defect(const ReiterFamily& f, const Cochain& phi,
                             const AuditOptions& options) {
  if (!f.is_prob()) {
    throw Error("homotopy_defect needs a probability family (sum f(x) = 1, f >= 0)");
  }
  if (phi.p() != 0) throw Error("homotopy_defect: phi must lie in the bottom row (p = 0)");
  const double s = f.support_radius();
  Cochain defect = convolve(f, phi) - phi;
  const Cochain dphi = diff_D(phi);

  // f*phi - phi at (x, y) is sum_z f(x)(z) D phi((x, z), y) with d(x, z) <= S.
  auto referenced = [&f, &dphi](TupleView x, TupleView y) {
    VectorBuilder b(dphi.module());
    double worst = 0.0;
    for (const auto& e : f[x[0]].entries()) {
      const Point pair[2] = {x[0], e.first};
      dphi.accumulate(TupleView(pair, 2), y, 1.0, b);
      worst = std::max(worst, b.finish().norm());
    }
    return worst;
  };
  const double f_norm = f.sup_norm();
  const AuditResult audit = audit_bound(defect, f_norm, dphi, referenced, s, options,
                                        "|f*phi - phi| <= |f| |D phi|_S");
  DefectReport r{.defect = defect, .witness = std::nullopt};
  r.measured = audit.value.value_or(0.0);
  r.bound = audit.bound.value_or(0.0);
  r.f_norm = f_norm;
  r.dphi_norm = f_norm > 0 ? r.bound / f_norm : 0.0;
  r.support_radius = s;
  r.exact = audit.exact;
  r.witness = audit.witness;
  r.within_bound = r.measured <= r.bound + kDefectSlack;
  return r;
}

AuditResult audit_averaged_homotopy(const ReiterFamily& f, const Cochain& phi, double radius,
                                    const AuditOptions& options, double tolerance) {
  if (phi.q() < 0) throw Error("averaged homotopy needs q >= 0");
  const Cochain lhs = diff_d(averaged_split(f, phi)) + averaged_split(f, diff_d(phi));
  return audit_equal(lhs, convolve(f, phi), radius, options, "(d s_f + s_f d)phi = f*phi",
                     tolerance);
}

PairFamily::PairFamily(SpaceRef space, std::vector<PairVector> values, double radius)
    : space_(std::move(space)), radius_(radius) {
  if (!space_) throw Error("pair family needs a space");
  if (values.size() != space_->size()) {
    throw Error("pair family has " + std::to_string(values.size()) + " values for " +
                std::to_string(space_->size()) + " points");
  }
  for (Point x = 0; x < values.size(); ++x) {
    for (const auto& [pair, value] : values[x].entries()) {
      const auto [z0, z1] = pair;
      if (z0 >= space_->size() || z1 >= space_->size() || !space_->within(x, z0, radius_) ||
          !space_->within(x, z1, radius_)) {
        throw Error("supp F(" + point_name(x) + ") contains (" + point_name(z0) + "," +
                    point_name(z1) + ") outside B_" + std::to_string(radius_) + "(" +
                    point_name(x) + ")^2");
      }
    }
  }
  values_ = std::make_shared<const std::vector<PairVector>>(std::move(values));
}

PairFamily PairFamily::lift(const Cochain& h) {
  if (h.p() != 0 || h.q() != -1 || h.module() == Module::Scalar) {
    throw Error("PairFamily::lift expects an l1_0-valued (0,-1) cochain");
  }
  const auto& space = *h.space();
  std::vector<PairVector> values;
  values.reserve(space.size());
  double radius = 0.0;
  for (Point x = 0; x < space.size(); ++x) {
    const Point xs[1] = {x};
    values.push_back(lift_boundary(h(TupleView(xs, 1)), x));
    for (const auto& [pair, value] : values.back().entries()) {
      radius = std::max({radius, space.dist(x, pair.first), space.dist(x, pair.second)});
    }
  }
  return PairFamily(h.space(), std::move(values), radius);
}

double PairFamily::sup_norm() const noexcept {
  double worst = 0.0;
  for (const auto& v : *values_) worst = std::max(worst, v.norm());
  return worst;
}

double PairFamily::pair_radius() const noexcept {
  double worst = 0.0;
  for (const auto& v : *values_) {
    for (const auto& [pair, value] : v.entries()) {
      worst = std::max(worst, space_->dist(pair.first, pair.second));
    }
  }
  return worst;
}

Cochain PairFamily::boundary() const {
  auto boundaries = std::make_shared<std::vector<SupportedVector>>();
  boundaries->reserve(values_->size());
  for (const auto& v : *values_) boundaries->push_back(boundary_pairs(v));
  const double r = radius_;
  return Cochain(
      space_, 0, -1, Module::L1Zero,
      [boundaries](TupleView x, TupleView, double c, VectorBuilder& out) {
        out.add((*boundaries)[x[0]], c);
      },
      SupportWitness([r](double) { return r; }), "dF");
}

Cochain PairFamily::apply(const Cochain& zeta) const {
  if (zeta.p() != 1) throw Error("T_F acts on E^{1,q}");
  if (zeta.space() != space_) throw ModuleMismatch("T_F: different spaces");
  EvalRule rule = [values = values_, zeta](TupleView x, TupleView y, double c,
                                           VectorBuilder& out) {
    for (const auto& [pair, weight] : (*values)[x[0]].entries()) {
      const Point zs[2] = {pair.first, pair.second};
      zeta.accumulate(TupleView(zs, 2), y, c * weight, out);
    }
  };
  return Cochain(space_, 0, zeta.q(), zeta.module(), std::move(rule), std::nullopt,
                 zeta.name().empty() ? "" : "T_F(" + zeta.name() + ")");
}

PairingAudit tf_identity(const PairFamily& family, const Cochain& theta,
                         const AuditOptions& options, double tolerance) {
  if (theta.p() != 0) throw Error("tf_identity: theta must lie in the bottom row");
  const Cochain dtheta = diff_D(theta);
  const Cochain rhs = family.apply(dtheta);
  const Cochain lhs = convolve(family.boundary(), theta);
  PairingAudit out;
  out.identity = audit_equal(lhs, rhs, 0.0, options, "(dF)*theta = T_F(D theta)", tolerance);

  const double pr = family.pair_radius();
  auto referenced = [&family, &dtheta](TupleView x, TupleView y) {
    VectorBuilder b(dtheta.module());
    double worst = 0.0;
    for (const auto& [pair, weight] : family[x[0]].entries()) {
      const Point zs[2] = {pair.first, pair.second};
      dtheta.accumulate(TupleView(zs, 2), y, 1.0, b);
      worst = std::max(worst, b.finish().norm());
    }
    return worst;
  };
  out.bound = audit_bound(rhs, family.sup_norm(), dtheta, referenced, pr, options,
                          "|T_F zeta| <= sup|F(x)| |zeta|_R");
  return out;
}

AuditResult audit_normalization(const Cochain& phi, const ReiterFamily& f, double radius) {
  const auto& space = *phi.space();
  std::vector<SupportedVector> raw;
  raw.reserve(space.size());
  for (Point x = 0; x < space.size(); ++x) {
    const Point xs[1] = {x};
    raw.push_back(phi(TupleView(xs, 1)));
  }
  AuditResult r;
  r.check = "|f(x1)-f(x0)| <= 2|phi(x1)-phi(x0)|";
  r.p = 1;
  r.q = -1;
  r.radius = radius;
  r.exact = true;
  double worst_margin = -1.0;
  for (Point a = 0; a < space.size(); ++a) {
    for (Point b = a + 1; b < space.size(); ++b) {
      if (!space.within(a, b, radius)) continue;
      ++r.samples;
      const double lhs = l1_distance(f[b], f[a]);
      const double rhs = 2.0 * l1_distance(raw[b], raw[a]);
      if (r.samples == 1 || lhs - rhs > worst_margin) {
        worst_margin = lhs - rhs;
        r.value = lhs;
        r.bound = rhs;
        r.witness = TuplePair{{a, b}, {}};
      }
    }
  }
  r.tolerance = kExactTolerance;
  r.max_violation = std::max(0.0, worst_margin);
  return r;
}

}  // namespace cohomlab
