#include "cohomlab/space.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "cohomlab/errors.hpp"
#include "cohomlab/rng.hpp"

namespace cohomlab {

namespace {

constexpr double kUnreached = std::numeric_limits<double>::infinity();

std::vector<Edge> normalize_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                  ") references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_edges(std::size_t n, std::vector<Edge> edges,
                                                Provenance provenance) {
  if (n == 0) throw Error("a metric space needs at least one point");
  edges = normalize_edges(n, std::move(edges));

  std::vector<std::vector<Point>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  FiniteMetricSpace s;
  s.n_ = n;
  s.dist_.assign(n * n, kUnreached);
  std::deque<Point> queue;
  for (std::size_t src = 0; src < n; ++src) {
    double* row = &s.dist_[src * n];
    row[src] = 0;
    queue.assign(1, static_cast<Point>(src));
    while (!queue.empty()) {
      const Point u = queue.front();
      queue.pop_front();
      for (const Point v : adj[u]) {
        if (row[v] == kUnreached) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
    if (src == 0) {
      for (std::size_t v = 0; v < n; ++v) {
        if (row[v] == kUnreached) throw DisconnectedGraph(0, v);
      }
    }
  }
  s.integral_ = true;
  s.diameter_ = *std::max_element(s.dist_.begin(), s.dist_.end());
  s.edges_ = std::move(edges);
  s.provenance_ = std::move(provenance);
  return s;
}

FiniteMetricSpace FiniteMetricSpace::from_distances(std::size_t n, std::vector<double> dist,
                                                    Provenance provenance) {
  if (n == 0) throw Error("a metric space needs at least one point");
  if (dist.size() != n * n) {
    throw Error("distance matrix has " + std::to_string(dist.size()) + " entries, expected " +
                std::to_string(n * n));
  }
  FiniteMetricSpace s;
  s.n_ = n;
  s.dist_ = std::move(dist);
  s.integral_ = std::all_of(s.dist_.begin(), s.dist_.end(),
                            [](double d) { return std::isfinite(d) && d == std::floor(d); });
  s.diameter_ = *std::max_element(s.dist_.begin(), s.dist_.end());
  s.provenance_ = std::move(provenance);
  if (auto why = s.metric_violation(); !why.empty()) throw Error("not a metric: " + why);
  return s;
}

double FiniteMetricSpace::eccentricity(Point x) const {
  const double* row = &dist_[std::size_t{x} * n_];
  return *std::max_element(row, row + n_);
}

std::vector<Point> FiniteMetricSpace::ball(Point x, double radius) const {
  std::vector<Point> out;
  for (std::size_t z = 0; z < n_; ++z) {
    if (within(x, static_cast<Point>(z), radius)) out.push_back(static_cast<Point>(z));
  }
  return out;
}

std::vector<std::size_t> FiniteMetricSpace::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  if (edges_) {
    for (const auto& e : *edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
  } else {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (a != b && dist_[a * n_ + b] <= 1.0) ++deg[a];
      }
    }
  }
  return deg;
}

void FiniteMetricSpace::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw Error("expected " + std::to_string(n_) + " labels, got " +
                std::to_string(labels.size()));
  }
  labels_ = std::move(labels);
}

std::string FiniteMetricSpace::metric_violation() const {
  const double slack = integral_ ? 0.0 : kRealSlack;
  auto at = [&](std::size_t a, std::size_t b) { return dist_[a * n_ + b]; };
  for (std::size_t a = 0; a < n_; ++a) {
    if (at(a, a) != 0) return "d(" + std::to_string(a) + "," + std::to_string(a) + ") != 0";
    for (std::size_t b = 0; b < n_; ++b) {
      const double d = at(a, b);
      if (!std::isfinite(d)) {
        return "d(" + std::to_string(a) + "," + std::to_string(b) + ") is not finite";
      }
      if (a != b && !(d > 0)) {
        return "d(" + std::to_string(a) + "," + std::to_string(b) + ") is not positive";
      }
      if (d != at(b, a)) {
        return "asymmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      const double dab = at(a, b);
      for (std::size_t c = 0; c < n_; ++c) {
        if (at(a, c) > dab + at(b, c) + slack) {
          return "triangle inequality fails for (" + std::to_string(a) + "," + std::to_string(b) +
                 "," + std::to_string(c) + ")";
        }
      }
    }
  }
  return {};
}

SpaceRef share(FiniteMetricSpace space) {
  return std::make_shared<const FiniteMetricSpace>(std::move(space));
}

FiniteMetricSpace build_graph_metric(const std::vector<Edge>& edges, std::size_t n) {
  return FiniteMetricSpace::from_edges(n, edges);
}

FiniteMetricSpace cycle(std::size_t m) {
  if (m < 3) throw Error("cycle needs at least 3 vertices, got " + std::to_string(m));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({static_cast<Point>(i), static_cast<Point>((i + 1) % m)});
  }
  return FiniteMetricSpace::from_edges(m, std::move(edges),
                                       {"cycle", {{"size", static_cast<std::int64_t>(m)}}, 0, 0});
}

FiniteMetricSpace path(std::size_t m) {
  if (m < 1) throw Error("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    edges.push_back({static_cast<Point>(i), static_cast<Point>(i + 1)});
  }
  return FiniteMetricSpace::from_edges(m, std::move(edges),
                                       {"path", {{"size", static_cast<std::int64_t>(m)}}, 0, 0});
}

FiniteMetricSpace torus(std::size_t dim, std::size_t m) {
  if (dim < 1) throw Error("torus dimension must be at least 1");
  if (m < 2) throw Error("torus side must be at least 2, got " + std::to_string(m));
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (n > (std::size_t{1} << 24) / m) throw Error("torus is too large");
    n *= m;
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t stride = 1;
    std::string label = "(";
    for (std::size_t axis = 0; axis < dim; ++axis) {
      const std::size_t coord = (v / stride) % m;
      const std::size_t up = v - coord * stride + ((coord + 1) % m) * stride;
      edges.push_back({static_cast<Point>(v), static_cast<Point>(up)});
      label += (axis ? "," : "") + std::to_string(coord);
      stride *= m;
    }
    labels[v] = label + ")";
  }
  auto s = FiniteMetricSpace::from_edges(
      n, std::move(edges),
      {"torus", {{"dim", static_cast<std::int64_t>(dim)}, {"size", static_cast<std::int64_t>(m)}}, 0,
       0});
  s.set_labels(std::move(labels));
  return s;
}

FiniteMetricSpace free_ball(std::size_t rank, std::size_t radius) {
  if (rank < 1 || rank > 13) throw Error("free group rank must be in 1..13");
  // Generator g: letter g/2, inverted when odd. Word vertices in BFS order.
  struct Word {
    std::vector<std::uint8_t> letters;
  };
  std::vector<Word> words{{{}}};
  std::vector<Edge> edges;
  std::size_t frontier_begin = 0;
  for (std::size_t len = 1; len <= radius; ++len) {
    const std::size_t frontier_end = words.size();
    for (std::size_t w = frontier_begin; w < frontier_end; ++w) {
      for (std::uint8_t g = 0; g < 2 * rank; ++g) {
        const auto& letters = words[w].letters;
        if (!letters.empty() && (letters.back() ^ 1U) == g) continue;
        Word next{letters};
        next.letters.push_back(g);
        edges.push_back({static_cast<Point>(w), static_cast<Point>(words.size())});
        words.push_back(std::move(next));
        if (words.size() > (std::size_t{1} << 22)) throw Error("free group ball is too large");
      }
    }
    frontier_begin = frontier_end;
  }
  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (const auto& w : words) {
    std::string label;
    for (const auto g : w.letters) {
      label += static_cast<char>((g & 1U) ? 'A' + g / 2 : 'a' + g / 2);
    }
    labels.push_back(label.empty() ? "e" : label);
  }
  const std::size_t n = words.size();
  auto s = FiniteMetricSpace::from_edges(n, std::move(edges),
                                         {"free_ball",
                                          {{"rank", static_cast<std::int64_t>(rank)},
                                           {"radius", static_cast<std::int64_t>(radius)}},
                                          0,
                                          0});
  s.set_labels(std::move(labels));
  return s;
}

FiniteMetricSpace random_regular(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw Error("random_regular needs at least one vertex");
  if ((n * k) % 2 != 0) {
    throw Error("random_regular infeasible: n*k = " + std::to_string(n * k) + " is odd");
  }
  if (k >= n) throw Error("random_regular infeasible: degree k must be below n");
  if (k == 0 && n > 1) throw Error("random_regular infeasible: k = 0 is disconnected");
  if (k == 1 && n > 2) throw Error("random_regular infeasible: k = 1 is disconnected for n > 2");

  constexpr std::size_t kMaxAttempts = 100000;
  Rng rng(seed);
  std::vector<Point> stubs;
  stubs.reserve(n * k);
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    stubs.clear();
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t j = 0; j < k; ++j) stubs.push_back(static_cast<Point>(v));
    }
    rng.shuffle(stubs);
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      Point a = stubs[i];
      Point b = stubs[i + 1];
      if (a == b) {
        simple = false;
        break;
      }
      if (a > b) std::swap(a, b);
      edges.push_back({a, b});
    }
    if (simple) {
      auto sorted = edges;
      std::sort(sorted.begin(), sorted.end());
      simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    if (!simple) continue;
    Provenance prov{"random_regular",
                    {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}},
                    seed,
                    attempt};
    try {
      return FiniteMetricSpace::from_edges(n, std::move(edges), std::move(prov));
    } catch (const DisconnectedGraph&) {
      continue;
    }
  }
  throw Error("random_regular: no simple connected pairing after " +
              std::to_string(kMaxAttempts) + " attempts");
}

FiniteMetricSpace complete(std::size_t n) {
  if (n == 0) throw Error("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      edges.push_back({static_cast<Point>(a), static_cast<Point>(b)});
    }
  }
  return FiniteMetricSpace::from_edges(
      n, std::move(edges), {"complete", {{"size", static_cast<std::int64_t>(n)}}, 0, 0});
}

FiniteMetricSpace generate_family(const FamilySpec& spec) {
  auto get = [&](std::initializer_list<const char*> names) -> std::size_t {
    for (const char* name : names) {
      if (auto it = spec.params.find(name); it != spec.params.end()) {
        if (it->second < 0) throw Error(std::string("parameter ") + name + " must be non-negative");
        return static_cast<std::size_t>(it->second);
      }
    }
    throw Error("family " + spec.kind + " is missing parameter " + *names.begin());
  };
  auto opt = [&](const char* name, std::size_t fallback) -> std::size_t {
    auto it = spec.params.find(name);
    return it == spec.params.end() ? fallback : static_cast<std::size_t>(it->second);
  };

  if (spec.kind == "cycle") return cycle(get({"size", "m", "n"}));
  if (spec.kind == "path") return path(get({"size", "m", "n"}));
  if (spec.kind == "complete") return complete(get({"size", "n"}));
  if (spec.kind == "torus") return torus(opt("dim", 2), get({"size", "m"}));
  if (spec.kind == "free_ball") return free_ball(get({"rank", "k"}), get({"radius", "r"}));
  if (spec.kind == "random_regular") {
    return random_regular(get({"n", "size"}), get({"k"}), spec.seed);
  }
  throw Error("unknown family kind: " + spec.kind);
}

}  // namespace cohomlab
