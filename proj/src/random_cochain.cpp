#include "cohomlab/random_cochain.hpp"

#include <cmath>
#include <memory>


namespace cohomlab {

namespace {

double coefficient(std::uint64_t h, bool dyadic) {
  const double u = static_cast<double>(mix64(h) >> 11) * 0x1.0p-53;  // [0, 1)
  const double c = 2.0 * u - 1.0;
  return dyadic ? std::round(c * 64.0) / 64.0 : c;
}

}  // namespace

Cochain random_cochain(SpaceRef space, int p, int q, Module module, std::uint64_t seed,
                       const RandomCochainOptions& options) {
  auto balls = std::make_shared<std::vector<std::vector<Point>>>();
  const std::size_t n = space->size();
  balls->reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    balls->push_back(options.controlled ? space->ball(static_cast<Point>(x), options.spread)
                                        : std::vector<Point>{});
  }
  const std::uint64_t base = hash_combine(hash_combine(seed, static_cast<std::uint64_t>(p)),
                                          static_cast<std::uint64_t>(q + 1));
  EvalRule rule = [balls, base, module, n, options](TupleView x, TupleView y, double c,
                                                    VectorBuilder& out) {
    std::uint64_t h = base;
    for (const Point v : x) h = hash_combine(h, v);
    h = hash_combine(h, 0xffffffffULL);
    for (const Point v : y) h = hash_combine(h, v);

    const std::size_t len = x.size() + y.size();
    auto pick = [&](std::uint64_t key) -> Point {
      if (!options.controlled) return static_cast<Point>(mix64(key) % n);
      const std::size_t slot = mix64(key ^ 0xa5a5a5a5ULL) % len;
      const Point anchor = slot < x.size() ? x[slot] : y[slot - x.size()];
      const auto& ball = (*balls)[anchor];
      return ball[mix64(key) % ball.size()];
    };

    for (std::size_t k = 0; k < options.terms; ++k) {
      const std::uint64_t hk = hash_combine(h, k);
      const double w = c * coefficient(hk, options.dyadic);
      switch (module) {
        case Module::Scalar:
          out.add_scalar(w);
          break;
        case Module::L1:
          out.add(pick(hk), w);
          break;
        case Module::L1Zero:
          out.add(pick(hk), w);
          out.add(pick(hash_combine(hk, 0x51ed)), -w);
          break;
      }
    }
  };
  std::optional<SupportWitness> witness;
  if (options.controlled) {
    witness = SupportWitness([spread = options.spread](double r) { return r + spread; });
  }
  return Cochain(std::move(space), p, q, module, std::move(rule), std::move(witness),
                 "rand" + std::to_string(seed));
}


SupportedVector random_vector(Rng& rng, std::size_t n, Module module, std::size_t terms,
                              bool dyadic, std::span<const Point> support) {
  if (module == Module::Scalar) {
    double c = rng.uniform(-1.0, 1.0);
    return SupportedVector::scalar(dyadic ? std::round(c * 64.0) / 64.0 : c);
  }
  auto pick = [&]() -> Point {
    return support.empty() ? static_cast<Point>(rng.below(n)) : support[rng.below(support.size())];
  };
  VectorBuilder b(module);
  for (std::size_t k = 0; k < terms; ++k) {
    double c = rng.uniform(-1.0, 1.0);
    if (dyadic) c = std::round(c * 64.0) / 64.0;
    b.add(pick(), c);
    if (module == Module::L1Zero) b.add(pick(), -c);
  }
  return b.finish();
}

ReiterFamily random_probability_family(const SpaceRef& space, double radius, std::uint64_t seed) {
  Rng rng(hash_combine(seed, 0xfa11));
  std::vector<SupportedVector> values;
  values.reserve(space->size());
  for (Point x = 0; x < space->size(); ++x) {
    const auto ball = space->ball(x, radius);
    std::vector<Entry> entries;
    double total = 0.0;
    for (const Point z : ball) {
      if (z != x && rng.uniform() < 0.4) continue;
      const double w = 0.05 + rng.uniform();
      entries.emplace_back(z, w);
      total += w;
    }
    for (auto& e : entries) e.second /= total;
    values.push_back(SupportedVector::from_entries(Module::L1, std::move(entries)));
  }
  return ReiterFamily(space, radius, std::move(values), "random_probability");
}

PairFamily random_pair_family(const SpaceRef& space, double radius, std::size_t terms,
                              std::uint64_t seed) {
  Rng rng(hash_combine(seed, 0xba1b));
  std::vector<PairVector> values;
  values.reserve(space->size());
  for (Point x = 0; x < space->size(); ++x) {
    const auto ball = space->ball(x, radius);
    std::vector<PairVector::PairEntry> entries;
    for (std::size_t k = 0; k < terms; ++k) {
      const Point z0 = ball[rng.below(ball.size())];
      const Point z1 = ball[rng.below(ball.size())];
      entries.push_back({{z0, z1}, rng.uniform(-1.0, 1.0)});
    }
    values.push_back(PairVector::from_entries(std::move(entries)));
  }
  return PairFamily(space, std::move(values), radius);
}

}  // namespace cohomlab
