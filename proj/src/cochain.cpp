#include "cohomlab/cochain.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "cohomlab/detail/parallel.hpp"
#include "cohomlab/errors.hpp"

namespace cohomlab {

namespace {

using Scratch = std::array<Point, kMaxTupleLength>;

double sign_of(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Copies `t` into `out` with position `skip` removed.
TupleView face(TupleView t, std::size_t skip, Scratch& out) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != skip) out[k++] = t[i];
  }
  return {out.data(), k};
}

void require_compatible(const Cochain& a, const Cochain& b, const char* op) {
  if (a.space() != b.space()) throw ModuleMismatch(std::string(op) + ": different spaces");
  if (a.p() != b.p() || a.q() != b.q()) {
    throw ModuleMismatch(std::string(op) + ": bidegree (" + std::to_string(a.p()) + "," +
                         std::to_string(a.q()) + ") vs (" + std::to_string(b.p()) + "," +
                         std::to_string(b.q()) + ")");
  }
  if (a.module() != b.module()) {
    throw ModuleMismatch(std::string(op) + ": module " + std::string(to_string(a.module())) +
                         " vs " + std::string(to_string(b.module())));
  }
}

std::optional<SupportWitness> grow_witness(const std::optional<SupportWitness>& w) {
  if (!w) return std::nullopt;
  return SupportWitness([inner = *w](double r) { return inner(r) + r; });
}

std::optional<SupportWitness> max_witness(const std::optional<SupportWitness>& a,
                                          const std::optional<SupportWitness>& b) {
  if (!a || !b) return std::nullopt;
  return SupportWitness([a = *a, b = *b](double r) { return std::max(a(r), b(r)); });
}

std::string wrap(const char* op, const std::string& inner) {
  return inner.empty() ? std::string{} : std::string(op) + "(" + inner + ")";
}

}  // namespace

Cochain::Cochain(SpaceRef space, int p, int q, Module module, EvalRule rule,
                 std::optional<SupportWitness> witness, std::string name)
    : space_(std::move(space)),
      p_(p),
      q_(q),
      module_(module),
      rule_(std::make_shared<const EvalRule>(std::move(rule))),
      witness_(std::move(witness)),
      name_(std::move(name)) {
  if (!space_) throw Error("cochain needs a space");
  if (p_ < 0) throw Error("cochain degree p must be non-negative");
  if (q_ < -1) throw Error("cochain degree q must be at least -1");
  if (x_length() + y_length() > kMaxTupleLength) {
    throw Error("cochain bidegree exceeds the supported tuple length");
  }
}

SupportedVector Cochain::operator()(TupleView x, TupleView y) const {
  if (x.size() != x_length() || y.size() != y_length()) {
    throw Error("cochain of bidegree (" + std::to_string(p_) + "," + std::to_string(q_) +
                ") evaluated on tuples of length " + std::to_string(x.size()) + "," +
                std::to_string(y.size()));
  }
  const std::size_t n = space_->size();
  for (const Point v : x) {
    if (v >= n) throw Error("point " + std::to_string(v) + " is outside the space");
  }
  for (const Point v : y) {
    if (v >= n) throw Error("point " + std::to_string(v) + " is outside the space");
  }
  VectorBuilder out(module_);
  (*rule_)(x, y, 1.0, out);
  return out.finish();
}

SupportedVector Cochain::operator()(std::initializer_list<Point> x,
                                    std::initializer_list<Point> y) const {
  return (*this)(TupleView(x.begin(), x.size()), TupleView(y.begin(), y.size()));
}

std::optional<double> Cochain::declared_support(double radius) const {
  if (!witness_) return std::nullopt;
  return (*witness_)(radius);
}

Cochain Cochain::renamed(std::string name) const {
  Cochain c = *this;
  c.name_ = std::move(name);
  return c;
}

Cochain Cochain::with_witness(std::optional<SupportWitness> witness) const {
  Cochain c = *this;
  c.witness_ = std::move(witness);
  return c;
}

Cochain zero_cochain(SpaceRef space, int p, int q, Module module) {
  return Cochain(
      std::move(space), p, q, module, [](TupleView, TupleView, double, VectorBuilder&) {},
      SupportWitness([](double) { return 0.0; }), "0");
}

Cochain constant_cochain(SpaceRef space, int p, int q, SupportedVector value) {
  const Module m = value.module();
  return Cochain(
      std::move(space), p, q, m,
      [value = std::move(value)](TupleView, TupleView, double c, VectorBuilder& out) {
        out.add(value, c);
      },
      std::nullopt, "const");
}

Cochain diff_D(const Cochain& phi) {
  EvalRule rule = [phi](TupleView x, TupleView y, double c, VectorBuilder& out) {
    Scratch scratch;
    for (std::size_t i = 0; i < x.size(); ++i) {
      phi.accumulate(face(x, i, scratch), y, c * sign_of(static_cast<int>(i)), out);
    }
  };
  return Cochain(phi.space(), phi.p() + 1, phi.q(), phi.module(), std::move(rule),
                 grow_witness(phi.support_witness()), wrap("D", phi.name()));
}

Cochain diff_d(const Cochain& phi) {
  const int p = phi.p();
  EvalRule rule = [phi, p](TupleView x, TupleView y, double c, VectorBuilder& out) {
    Scratch scratch;
    for (std::size_t i = 0; i < y.size(); ++i) {
      phi.accumulate(x, face(y, i, scratch), c * sign_of(static_cast<int>(i) + p), out);
    }
  };
  return Cochain(phi.space(), p, phi.q() + 1, phi.module(), std::move(rule),
                 grow_witness(phi.support_witness()), wrap("d", phi.name()));
}

Cochain split_s(const Cochain& phi) {
  if (phi.q() < 0) throw Error("split_s: no splitting below the augmentation row (q = -1)");
  const double sign = sign_of(phi.p());
  EvalRule rule = [phi, sign](TupleView x, TupleView y, double c, VectorBuilder& out) {
    Scratch scratch;
    scratch[0] = x[0];
    std::copy(y.begin(), y.end(), scratch.begin() + 1);
    phi.accumulate(x, TupleView(scratch.data(), y.size() + 1), c * sign, out);
  };
  return Cochain(phi.space(), phi.p(), phi.q() - 1, phi.module(), std::move(rule),
                 phi.support_witness(), wrap("s", phi.name()));
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  require_compatible(a, b, "add");
  return Cochain(
      a.space(), a.p(), a.q(), a.module(),
      [a, b](TupleView x, TupleView y, double c, VectorBuilder& out) {
        a.accumulate(x, y, c, out);
        b.accumulate(x, y, c, out);
      },
      max_witness(a.support_witness(), b.support_witness()),
      a.name().empty() || b.name().empty() ? "" : a.name() + "+" + b.name());
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  require_compatible(a, b, "subtract");
  return Cochain(
      a.space(), a.p(), a.q(), a.module(),
      [a, b](TupleView x, TupleView y, double c, VectorBuilder& out) {
        a.accumulate(x, y, c, out);
        b.accumulate(x, y, -c, out);
      },
      max_witness(a.support_witness(), b.support_witness()),
      a.name().empty() || b.name().empty() ? "" : a.name() + "-" + b.name());
}

Cochain operator*(double lambda, const Cochain& a) {
  return Cochain(
      a.space(), a.p(), a.q(), a.module(),
      [a, lambda](TupleView x, TupleView y, double c, VectorBuilder& out) {
        a.accumulate(x, y, c * lambda, out);
      },
      a.support_witness(), a.name());
}

Cochain memoize(const Cochain& phi) {
  struct Cache {
    std::mutex mutex;
    std::map<std::vector<Point>, SupportedVector> values;
  };
  auto cache = std::make_shared<Cache>();
  const Module m = phi.module();
  EvalRule rule = [phi, cache, m](TupleView x, TupleView y, double c, VectorBuilder& out) {
    std::vector<Point> key(x.begin(), x.end());
    key.push_back(static_cast<Point>(-1));  // x | y separator
    key.insert(key.end(), y.begin(), y.end());
    {
      std::lock_guard lock(cache->mutex);
      if (auto it = cache->values.find(key); it != cache->values.end()) {
        out.add(it->second, c);
        return;
      }
    }
    VectorBuilder local(m);
    phi.accumulate(x, y, 1.0, local);
    SupportedVector v = local.finish();
    out.add(v, c);
    std::lock_guard lock(cache->mutex);
    cache->values.emplace(std::move(key), std::move(v));
  };
  return Cochain(phi.space(), phi.p(), phi.q(), m, std::move(rule), phi.support_witness(),
                 phi.name());
}

Cochain johnson_j01(SpaceRef space, Module module) {
  if (module == Module::Scalar) throw ModuleMismatch("Johnson cocycles need l1 coefficients");
  return Cochain(
      std::move(space), 0, 1, module,
      [](TupleView, TupleView y, double c, VectorBuilder& out) {
        out.add(y[1], c);
        out.add(y[0], -c);
      },
      SupportWitness([](double r) { return r; }), "J01");
}

JohnsonCocycles johnson_cocycles(SpaceRef space) {
  if (!space || space->size() < 2) {
    throw Error("Johnson cocycles need a space with at least two points");
  }
  Cochain j01 = johnson_j01(space, Module::L1Zero);
  Cochain j10(
      space, 1, 0, Module::L1Zero,
      [](TupleView x, TupleView, double c, VectorBuilder& out) {
        out.add(x[1], c);
        out.add(x[0], -c);
      },
      SupportWitness([](double r) { return r; }), "J10");
  Cochain homotopy(
      space, 0, 0, Module::L1Zero,
      [](TupleView x, TupleView y, double c, VectorBuilder& out) {
        out.add(y[0], c);
        out.add(x[0], -c);
      },
      SupportWitness([](double r) { return r; }), "h");
  return {std::move(j01), std::move(j10), std::move(homotopy)};
}

namespace {

struct ArgMax {
  double value = -1.0;
  std::size_t index = 0;
  bool any = false;

  void offer(double v, std::size_t i) {
    if (!any || v > value) {
      value = v;
      index = i;
      any = true;
    }
  }
  // `later` covers larger indices, so ties keep the current winner.
  void merge(ArgMax&& later) {
    if (later.any && (!any || later.value > value)) *this = later;
  }
};

TuplePair tuple_at(const AuditDomain& domain, std::size_t i) {
  auto x = domain.x(i);
  auto y = domain.y(i);
  return {{x.begin(), x.end()}, {y.begin(), y.end()}};
}

}  // namespace

SeminormReport seminorm(const Cochain& phi, double radius, const AuditOptions& options) {
  const auto domain = AuditDomain::build(*phi.space(), phi.p(), phi.q(), radius,
                                         AuditDomain::Mode::Free, options.budget, options.seed,
                                         options.samples);
  const Module m = phi.module();
  ArgMax best = detail::parallel_reduce(
      domain.size(), options.workers, ArgMax{},
      [&](std::size_t begin, std::size_t end, ArgMax& local) {
        VectorBuilder b(m);
        for (std::size_t i = begin; i < end; ++i) {
          phi.accumulate(domain.x(i), domain.y(i), 1.0, b);
          local.offer(b.finish().norm(), i);
        }
      },
      [](ArgMax& acc, ArgMax&& part) { acc.merge(std::move(part)); });

  SeminormReport r;
  r.radius = radius;
  r.exact = domain.exact();
  r.samples = domain.size();
  r.p = phi.p();
  r.q = phi.q();
  if (best.any) {
    r.value = best.value;
    r.witness = tuple_at(domain, best.index);
  }
  return r;
}

SupportRadiusReport support_radius(const Cochain& phi, double radius,
                                   const AuditOptions& options) {
  const auto domain = AuditDomain::build(*phi.space(), phi.p(), phi.q(), radius,
                                         AuditDomain::Mode::Joint, options.budget, options.seed,
                                         options.samples);
  const auto& space = *phi.space();
  const Module m = phi.module();
  ArgMax best = detail::parallel_reduce(
      domain.size(), options.workers, ArgMax{},
      [&](std::size_t begin, std::size_t end, ArgMax& local) {
        VectorBuilder b(m);
        for (std::size_t i = begin; i < end; ++i) {
          const auto x = domain.x(i);
          const auto y = domain.y(i);
          phi.accumulate(x, y, 1.0, b);
          const SupportedVector v = b.finish();
          double s = 0.0;
          for (const auto& [z, value] : v.entries()) {
            for (const Point c : x) s = std::max(s, space.dist(z, c));
            for (const Point c : y) s = std::max(s, space.dist(z, c));
          }
          local.offer(s, i);
        }
      },
      [](ArgMax& acc, ArgMax&& part) { acc.merge(std::move(part)); });

  SupportRadiusReport r;
  r.radius = radius;
  r.exact = domain.exact();
  r.samples = domain.size();
  if (best.any) {
    r.support = best.value;
    r.witness = tuple_at(domain, best.index);
  }
  r.declared = phi.declared_support(radius);
  r.exceeds_declared = r.declared && r.support > *r.declared + FiniteMetricSpace::kRealSlack;
  return r;
}

}  // namespace cohomlab
