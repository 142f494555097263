#include "cohomlab/audit.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cohomlab/detail/parallel.hpp"
#include "cohomlab/errors.hpp"

namespace cohomlab {

namespace {

struct Worst {
  double value = 0.0;
  std::size_t index = 0;
  bool any = false;

  void offer(double v, std::size_t i) {
    if (!any || v > value) {
      value = v;
      index = i;
      any = true;
    }
  }
  void merge(Worst&& later) {
    if (later.any && (!any || later.value > value)) *this = later;
  }
};

TuplePair tuple_at(const AuditDomain& domain, std::size_t i) {
  auto x = domain.x(i);
  auto y = domain.y(i);
  return {{x.begin(), x.end()}, {y.begin(), y.end()}};
}

double max_abs_entry(const SupportedVector& v) {
  if (v.module() == Module::Scalar) return std::abs(v.scalar_value());
  double worst = 0.0;
  for (const auto& e : v.entries()) worst = std::max(worst, std::abs(e.second));
  return worst;
}

AuditDomain domain_for(const Cochain& phi, double radius, const AuditOptions& options) {
  return AuditDomain::build(*phi.space(), phi.p(), phi.q(), radius, AuditDomain::Mode::Free,
                            options.budget, options.seed, options.samples);
}

}  // namespace

AuditResult audit_equal(const Cochain& lhs, const Cochain& rhs, double radius,
                        const AuditOptions& options, std::string check, double tolerance) {
  if (lhs.p() != rhs.p() || lhs.q() != rhs.q() || lhs.module() != rhs.module()) {
    throw ModuleMismatch(check + ": sides differ in bidegree or module");
  }
  const auto domain = domain_for(lhs, radius, options);
  const Module m = lhs.module();
  Worst worst = detail::parallel_reduce(
      domain.size(), options.workers, Worst{},
      [&](std::size_t begin, std::size_t end, Worst& local) {
        VectorBuilder b(m);
        for (std::size_t i = begin; i < end; ++i) {
          lhs.accumulate(domain.x(i), domain.y(i), 1.0, b);
          rhs.accumulate(domain.x(i), domain.y(i), -1.0, b);
          local.offer(max_abs_entry(b.finish()), i);
        }
      },
      [](Worst& acc, Worst&& part) { acc.merge(std::move(part)); });

  AuditResult r;
  r.check = std::move(check);
  r.p = lhs.p();
  r.q = lhs.q();
  r.radius = radius;
  r.exact = domain.exact();
  r.samples = domain.size();
  r.tolerance = tolerance;
  if (worst.any) {
    r.max_violation = worst.value;
    r.witness = tuple_at(domain, worst.index);
  }
  return r;
}

AuditResult audit_zero(const Cochain& phi, double radius, const AuditOptions& options,
                       std::string check, double tolerance) {
  return audit_equal(phi, zero_cochain(phi.space(), phi.p(), phi.q(), phi.module()), radius,
                     options, std::move(check), tolerance);
}

std::vector<AuditResult> audit_complex_identities(const Cochain& phi,
                                                  std::span<const double> radii,
                                                  const AuditOptions& options,
                                                  double tolerance) {
  std::vector<AuditResult> out;
  const Cochain Dphi = diff_D(phi);
  const Cochain dphi = diff_d(phi);
  for (const double r : radii) {
    out.push_back(audit_zero(diff_D(Dphi), r, options, "DD=0", tolerance));
    out.push_back(audit_zero(diff_d(dphi), r, options, "dd=0", tolerance));
    out.push_back(audit_zero(diff_D(dphi) + diff_d(Dphi), r, options, "Dd+dD=0", tolerance));
    if (phi.q() >= 0) {
      const Cochain homotopy = diff_d(split_s(phi)) + split_s(dphi);
      out.push_back(audit_equal(homotopy, phi, r, options, "ds+sd=1", tolerance));
    } else {
      out.push_back(audit_equal(split_s(dphi), phi, r, options, "sd=1", tolerance));
    }
  }
  return out;
}

AuditResult audit_bound(const Cochain& lhs, double factor, const Cochain& reference,
                        const std::function<double(TupleView, TupleView)>& referenced,
                        double radius, const AuditOptions& options, std::string check) {
  const SeminormReport ref = seminorm(reference, radius, options);
  const auto domain = domain_for(lhs, radius, options);
  const Module m = lhs.module();

  struct Local {
    Worst lhs;
    double referenced = 0.0;
  };
  Local total = detail::parallel_reduce(
      domain.size(), options.workers, Local{},
      [&](std::size_t begin, std::size_t end, Local& local) {
        VectorBuilder b(m);
        for (std::size_t i = begin; i < end; ++i) {
          lhs.accumulate(domain.x(i), domain.y(i), 1.0, b);
          local.lhs.offer(b.finish().norm(), i);
          local.referenced = std::max(local.referenced, referenced(domain.x(i), domain.y(i)));
        }
      },
      [](Local& acc, Local&& part) {
        acc.lhs.merge(std::move(part.lhs));
        acc.referenced = std::max(acc.referenced, part.referenced);
      });

  AuditResult r;
  r.check = std::move(check);
  r.p = lhs.p();
  r.q = lhs.q();
  r.radius = radius;
  r.exact = domain.exact() && ref.exact;
  r.samples = domain.size();
  const double norm = std::max(ref.value, total.referenced);
  const double bound = factor * norm;
  r.value = total.lhs.any ? total.lhs.value : 0.0;
  r.bound = bound;
  r.tolerance = kExactTolerance * std::max(1.0, bound);
  r.max_violation = std::max(0.0, *r.value - bound);
  if (total.lhs.any) r.witness = tuple_at(domain, total.lhs.index);
  return r;
}

AuditResult audit_D_bound(const Cochain& phi, double radius, const AuditOptions& options) {
  const Module m = phi.module();
  auto referenced = [&phi, m](TupleView x, TupleView y) {
    std::array<Point, kMaxTupleLength> scratch{};
    VectorBuilder b(m);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (j != i) scratch[k++] = x[j];
      }
      phi.accumulate(TupleView(scratch.data(), k), y, 1.0, b);
      worst = std::max(worst, b.finish().norm());
    }
    return worst;
  };
  return audit_bound(diff_D(phi), phi.p() + 2, phi, referenced, radius, options,
                     "|D phi|_R <= (p+2)|phi|_R");
}

AuditResult audit_d_bound(const Cochain& phi, double radius, const AuditOptions& options) {
  const Module m = phi.module();
  auto referenced = [&phi, m](TupleView x, TupleView y) {
    std::array<Point, kMaxTupleLength> scratch{};
    VectorBuilder b(m);
    double worst = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (j != i) scratch[k++] = y[j];
      }
      phi.accumulate(x, TupleView(scratch.data(), k), 1.0, b);
      worst = std::max(worst, b.finish().norm());
    }
    return worst;
  };
  return audit_bound(diff_d(phi), phi.q() + 2, phi, referenced, radius, options,
                     "|d phi|_R <= (q+2)|phi|_R");
}

AuditResult audit_s_bound(const Cochain& phi, double radius, const AuditOptions& options) {
  const Module m = phi.module();
  auto referenced = [&phi, m](TupleView x, TupleView y) {
    std::array<Point, kMaxTupleLength> scratch{};
    scratch[0] = x[0];
    std::copy(y.begin(), y.end(), scratch.begin() + 1);
    VectorBuilder b(m);
    phi.accumulate(x, TupleView(scratch.data(), y.size() + 1), 1.0, b);
    return b.finish().norm();
  };
  return audit_bound(split_s(phi), 1.0, phi, referenced, radius, options,
                     "|s phi|_R <= |phi|_R");
}

std::vector<AuditResult> audit_norm_bounds(const Cochain& phi, std::span<const double> radii,
                                           const AuditOptions& options) {
  std::vector<AuditResult> out;
  for (const double r : radii) {
    out.push_back(audit_D_bound(phi, r, options));
    out.push_back(audit_d_bound(phi, r, options));
    if (phi.q() >= 0) out.push_back(audit_s_bound(phi, r, options));
  }
  return out;
}

std::vector<AuditResult> audit_johnson(const SpaceRef& space, std::span<const double> radii,
                                       const AuditOptions& options, double tolerance) {
  const JohnsonCocycles j = johnson_cocycles(space);
  std::vector<AuditResult> out;
  for (const double r : radii) {
    out.push_back(audit_zero(diff_D(j.j01), r, options, "DJ01=0", tolerance));
    out.push_back(audit_zero(diff_d(j.j01), r, options, "dJ01=0", tolerance));
    out.push_back(audit_equal(diff_D(j.homotopy), -1.0 * j.j10, r, options, "Dh=-J10",
                              tolerance));
    out.push_back(audit_equal(diff_d(j.homotopy), j.j01, r, options, "dh=J01", tolerance));
  }
  return out;
}

}  // namespace cohomlab
