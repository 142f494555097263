#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cohomlab {

using Point = std::uint32_t;

struct Edge {
  Point u;
  Point v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Where a space came from; serialized alongside it so files are self-describing.
struct Provenance {
  std::string kind = "custom";
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 0;
  std::size_t retries = 0;  // random_regular rejection count
};

/// A finite metric space given by its full distance matrix.
///
/// Graph metrics are integral and compared against radii exactly; real
/// metrics get a 1e-12 slack in `within`.
class FiniteMetricSpace {
 public:
  static constexpr double kRealSlack = 1e-12;

  /// Hop metric of an undirected graph; throws DisconnectedGraph or Error.
  static FiniteMetricSpace from_edges(std::size_t n, std::vector<Edge> edges,
                                      Provenance provenance = {});

  /// Validates the metric axioms (full triple scan).
  static FiniteMetricSpace from_distances(std::size_t n, std::vector<double> dist,
                                          Provenance provenance = {});

  std::size_t size() const noexcept { return n_; }
  double dist(Point a, Point b) const noexcept { return dist_[std::size_t{a} * n_ + b]; }
  bool within(Point a, Point b, double radius) const noexcept {
    return integral_ ? dist(a, b) <= radius : dist(a, b) <= radius + kRealSlack;
  }
  /// True when every distance is an integer (graph metrics).
  bool integral() const noexcept { return integral_; }

  double diameter() const noexcept { return diameter_; }
  double eccentricity(Point x) const;
  /// Points within `radius` of `x`, ascending.
  std::vector<Point> ball(Point x, double radius) const;

  /// Graph edges if the space was built from a graph; sorted, u < v.
  const std::optional<std::vector<Edge>>& edges() const noexcept { return edges_; }
  std::vector<std::size_t> degrees() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  const Provenance& provenance() const noexcept { return provenance_; }
  const std::vector<double>& matrix() const noexcept { return dist_; }

  /// Empty string when the axioms hold, otherwise a description of the first violation.
  std::string metric_violation() const;

 private:
  FiniteMetricSpace() = default;

  std::size_t n_ = 0;
  std::vector<double> dist_;
  bool integral_ = true;
  double diameter_ = 0;
  std::optional<std::vector<Edge>> edges_;
  std::vector<std::string> labels_;
  Provenance provenance_;
};

using SpaceRef = std::shared_ptr<const FiniteMetricSpace>;

SpaceRef share(FiniteMetricSpace space);

/// build_graph_metric: hop metric of the graph on vertices 0..n-1.
FiniteMetricSpace build_graph_metric(const std::vector<Edge>& edges, std::size_t n);

// Test corpora. Every generator is deterministic in its arguments.
FiniteMetricSpace cycle(std::size_t m);
FiniteMetricSpace path(std::size_t m);
FiniteMetricSpace torus(std::size_t dim, std::size_t m);
FiniteMetricSpace free_ball(std::size_t rank, std::size_t radius);
FiniteMetricSpace random_regular(std::size_t n, std::size_t k, std::uint64_t seed);
FiniteMetricSpace complete(std::size_t n);

struct FamilySpec {
  std::string kind;
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 0;
};

/// Dispatch on `kind` in {cycle, path, torus, free_ball, random_regular, complete}.
///
/// Parameter names: cycle/path/complete take `size` (or `n`), torus takes
/// `dim` and `size`, free_ball takes `rank` and `radius`, random_regular
/// takes `n` and `k`.
FiniteMetricSpace generate_family(const FamilySpec& spec);

}  // namespace cohomlab
