#include "cohomlab/tuples.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "cohomlab/errors.hpp"

namespace cohomlab {

namespace {

// Depth-first walk over Delta_R^{length} in lexicographic order. `visit`
// returns false to stop early.
template <class Visit>
bool walk_tuples(const FiniteMetricSpace& space, std::size_t length, double radius,
                 std::vector<Point>& tuple, Visit&& visit) {
  const std::size_t depth = tuple.size();
  if (depth == length) return visit(tuple);
  const std::size_t n = space.size();
  for (std::size_t z = 0; z < n; ++z) {
    const Point pz = static_cast<Point>(z);
    bool ok = true;
    for (const Point t : tuple) {
      if (!space.within(t, pz, radius)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    tuple.push_back(pz);
    const bool keep_going = walk_tuples(space, length, radius, tuple, visit);
    tuple.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

// n^k, saturating at cap + 1.
std::size_t saturating_power(std::size_t n, std::size_t k, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && out > (cap + 1) / n) return cap + 1;
    out *= n;
  }
  return out;
}

void check_degree(int p) {
  if (p < 0) throw Error("tuple degree must be non-negative, got " + std::to_string(p));
  if (static_cast<std::size_t>(p) + 1 > kMaxTupleLength) {
    throw Error("tuple degree " + std::to_string(p) + " exceeds the supported maximum");
  }
}

}  // namespace

std::size_t count_tuples(const FiniteMetricSpace& space, std::size_t length, double radius,
                         std::size_t cap) {
  if (length == 0) return 1;
  std::size_t count = 0;
  std::vector<Point> tuple;
  tuple.reserve(length);
  walk_tuples(space, length, radius, tuple, [&](const std::vector<Point>&) {
    ++count;
    return count <= cap;
  });
  return count;
}

TupleDomain enumerate_tuples(const FiniteMetricSpace& space, int p, double radius,
                             std::size_t budget, std::uint64_t seed, std::size_t sample_size) {
  check_degree(p);
  TupleDomain out;
  out.p_ = p;
  out.radius_ = radius;
  const std::size_t length = out.length();
  const std::size_t count = count_tuples(space, length, radius, budget);
  out.population_ = count;
  if (count <= budget) {
    out.exact_ = true;
    out.flat_.reserve(count * length);
    std::vector<Point> tuple;
    walk_tuples(space, length, radius, tuple, [&](const std::vector<Point>& t) {
      out.flat_.insert(out.flat_.end(), t.begin(), t.end());
      return true;
    });
    return out;
  }
  out.exact_ = false;
  TupleSampler sampler(space, length, radius);
  Rng rng(hash_combine(seed, static_cast<std::uint64_t>(length)));
  out.flat_.resize(sample_size * length);
  for (std::size_t i = 0; i < sample_size; ++i) {
    sampler.draw(rng, std::span<Point>(out.flat_.data() + i * length, length));
  }
  return out;
}

TupleSampler::TupleSampler(const FiniteMetricSpace& space, std::size_t length, double radius)
    : space_(&space), length_(length), radius_(radius) {
  balls_.reserve(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    balls_.push_back(space.ball(static_cast<Point>(x), radius));
    max_ball_ = std::max(max_ball_, balls_.back().size());
  }
}

void TupleSampler::draw(Rng& rng, std::span<Point> out) const {
  const std::size_t n = space_->size();
  for (;;) {
    const Point x0 = static_cast<Point>(rng.below(n));
    if (length_ == 0) return;
    out[0] = x0;
    const auto& ball = balls_[x0];
    // Accepting x0 with probability (|B(x0)| / max|B|)^(length-1) makes the
    // overall draw uniform on the tuple set.
    if (length_ > 1 && ball.size() < max_ball_) {
      const double accept = std::pow(static_cast<double>(ball.size()) /
                                         static_cast<double>(max_ball_),
                                     static_cast<double>(length_ - 1));
      if (rng.uniform() >= accept) continue;
    }
    bool ok = true;
    for (std::size_t i = 1; i < length_ && ok; ++i) {
      out[i] = ball[rng.below(ball.size())];
      for (std::size_t j = 1; j < i; ++j) {
        if (!space_->within(out[i], out[j], radius_)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return;
  }
}

AuditDomain AuditDomain::build(const FiniteMetricSpace& space, int p, int q, double radius,
                               Mode mode, std::size_t budget, std::uint64_t seed,
                               std::size_t samples) {
  check_degree(p);
  if (q < -1) throw Error("bidegree q must be at least -1");
  AuditDomain d;
  d.p_ = p;
  d.q_ = q;
  d.radius_ = radius;
  d.xlen_ = static_cast<std::size_t>(p) + 1;
  const std::size_t ylen = static_cast<std::size_t>(q + 1);
  d.stride_ = d.xlen_ + ylen;
  if (d.stride_ > kMaxTupleLength) throw Error("bidegree exceeds the supported tuple length");
  const std::size_t n = space.size();
  const std::uint64_t salt =
      hash_combine(hash_combine(seed, static_cast<std::uint64_t>(p)),
                   static_cast<std::uint64_t>(q + 1) * 2 + (mode == Mode::Joint ? 1 : 0));
  Rng rng(salt);

  if (mode == Mode::Joint) {
    auto domain = enumerate_tuples(space, static_cast<int>(d.stride_) - 1, radius, budget, salt,
                                   samples);
    d.exact_ = domain.exact();
    d.flat_.reserve(domain.size() * d.stride_);
    for (std::size_t i = 0; i < domain.size(); ++i) {
      auto t = domain[i];
      d.flat_.insert(d.flat_.end(), t.begin(), t.end());
    }
    return d;
  }

  const std::size_t xcount = count_tuples(space, d.xlen_, radius, budget);
  const std::size_t ycount = saturating_power(n, ylen, budget);
  const bool x_explicit = xcount <= budget;
  std::vector<Point> xs;
  if (x_explicit) {
    auto domain = enumerate_tuples(space, p, radius, budget, salt, samples);
    xs.assign(domain.size() * d.xlen_, 0);
    for (std::size_t i = 0; i < domain.size(); ++i) {
      std::copy(domain[i].begin(), domain[i].end(), xs.begin() + i * d.xlen_);
    }
  }

  if (x_explicit && ycount <= budget && xcount * ycount <= budget) {
    d.exact_ = true;
    d.flat_.reserve(xcount * ycount * d.stride_);
    std::vector<Point> y(ylen, 0);
    for (std::size_t i = 0; i < xcount; ++i) {
      std::fill(y.begin(), y.end(), 0);
      for (std::size_t j = 0; j < ycount; ++j) {
        d.flat_.insert(d.flat_.end(), xs.begin() + i * d.xlen_, xs.begin() + (i + 1) * d.xlen_);
        d.flat_.insert(d.flat_.end(), y.begin(), y.end());
        // odometer increment, last coordinate fastest
        for (std::size_t k = ylen; k-- > 0;) {
          if (++y[k] < n) break;
          y[k] = 0;
        }
      }
    }
    return d;
  }

  d.exact_ = false;
  d.flat_.resize(samples * d.stride_);
  std::optional<TupleSampler> sampler;
  if (!x_explicit) sampler.emplace(space, d.xlen_, radius);
  for (std::size_t i = 0; i < samples; ++i) {
    Point* row = d.flat_.data() + i * d.stride_;
    if (x_explicit) {
      const std::size_t pick = rng.below(xcount);
      std::copy(xs.begin() + pick * d.xlen_, xs.begin() + (pick + 1) * d.xlen_, row);
    } else {
      sampler->draw(rng, std::span<Point>(row, d.xlen_));
    }
    for (std::size_t k = 0; k < ylen; ++k) row[d.xlen_ + k] = static_cast<Point>(rng.below(n));
  }
  return d;
}

}  // namespace cohomlab
