#include "cohomlab/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "cohomlab/errors.hpp"

namespace cohomlab {

Json space_to_json(const FiniteMetricSpace& space) {
  const auto& prov = space.provenance();
  Json j;
  j["version"] = kSpaceFormatVersion;
  j["kind"] = prov.kind;
  j["params"] = Json::object();
  for (const auto& [k, v] : prov.params) j["params"][k] = v;
  j["seed"] = prov.seed;
  if (prov.retries > 0) j["retries"] = prov.retries;
  j["n"] = space.size();
  if (!space.labels().empty()) j["labels"] = space.labels();
  if (space.edges()) {
    Json edges = Json::array();
    for (const Edge& e : *space.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
  } else {
    Json rows = Json::array();
    const std::size_t n = space.size();
    for (Point a = 0; a < n; ++a) {
      Json row = Json::array();
      for (Point b = 0; b < n; ++b) row.push_back(space.dist(a, b));
      rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
  }
  return j;
}

FiniteMetricSpace space_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error("space file must be a JSON object");
    const int version = j.value("version", kSpaceFormatVersion);
    if (version != kSpaceFormatVersion) {
      throw Error("unsupported space file version " + std::to_string(version));
    }
    const auto n = j.at("n").get<std::size_t>();
    Provenance prov;
    prov.kind = j.value("kind", std::string("custom"));
    prov.seed = j.value("seed", std::uint64_t{0});
    prov.retries = j.value("retries", std::size_t{0});
    if (j.contains("params")) {
      for (const auto& [k, v] : j.at("params").items()) prov.params[k] = v.get<std::int64_t>();
    }
    std::optional<FiniteMetricSpace> space;
    if (j.contains("edges")) {
      std::vector<Edge> edges;
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error("edges must be [u, v] pairs");
        const auto u = e[0].get<std::int64_t>();
        const auto v = e[1].get<std::int64_t>();
        if (u < 0 || v < 0) throw Error("negative vertex index in edge list");
        edges.push_back({static_cast<Point>(u), static_cast<Point>(v)});
      }
      space = FiniteMetricSpace::from_edges(n, std::move(edges), prov);
    } else if (j.contains("dist")) {
      const auto& rows = j.at("dist");
      if (rows.size() != n) throw Error("dist must have n rows");
      std::vector<double> dist;
      dist.reserve(n * n);
      for (const auto& row : rows) {
        if (row.size() != n) throw Error("dist rows must have n entries");
        for (const auto& v : row) dist.push_back(v.get<double>());
      }
      space = FiniteMetricSpace::from_distances(n, std::move(dist), prov);
    } else {
      throw Error("space file needs either edges or dist");
    }
    if (j.contains("labels")) space->set_labels(j.at("labels").get<std::vector<std::string>>());
    return std::move(*space);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed space file: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_space(const FiniteMetricSpace& space, const std::filesystem::path& path) {
  write_text(path, dump_json(space_to_json(space)));
}

FiniteMetricSpace read_space(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
  return space_from_json(j);
}

FiniteMetricSpace read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long u = 0;
    long long v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest) || u < 0 || v < 0) {
      throw Error("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
    }
    edges.push_back({static_cast<Point>(u), static_cast<Point>(v)});
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (n == 0) throw Error("edge list is empty");
  Provenance prov;
  prov.kind = "edge_list";
  return FiniteMetricSpace::from_edges(n, std::move(edges), prov);
}

std::string git_blob_hash(const std::string& bytes) {
  const std::string header = "blob " + std::to_string(bytes.size()) + '\0';
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha1(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), header.data(), header.size()) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw Error("SHA-1 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

std::string file_hash(const std::filesystem::path& path) { return git_blob_hash(read_text(path)); }

Json vector_to_json(const SupportedVector& v) {
  Json j;
  j["module"] = std::string(to_string(v.module()));
  if (v.module() == Module::Scalar) {
    j["entries"] = Json::array({v.scalar_value()});
  } else {
    Json entries = Json::array();
    for (const auto& [x, value] : v.entries()) entries.push_back({x, value});
    j["entries"] = std::move(entries);
  }
  return j;
}

SupportedVector vector_from_json(const Json& j) {
  try {
    const Module m = module_from_string(j.at("module").get<std::string>());
    const auto& entries = j.at("entries");
    if (m == Module::Scalar) {
      double total = 0.0;
      for (const auto& e : entries) total += e.is_array() ? e.back().get<double>() : e.get<double>();
      return SupportedVector::scalar(total);
    }
    std::vector<Entry> out;
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 2) throw Error("vector entries must be [point, value]");
      const auto x = e[0].get<std::int64_t>();
      if (x < 0) throw Error("negative point index in vector literal");
      out.emplace_back(static_cast<Point>(x), e[1].get<double>());
    }
    return SupportedVector::from_entries(m, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed vector literal: ") + e.what());
  }
}

Json to_json(const TuplePair& t) { return Json{{"x", t.x}, {"y", t.y}}; }

namespace {

Json witness_json(const std::optional<TuplePair>& w) { return w ? to_json(*w) : Json(nullptr); }

}  // namespace

Json to_json(const AuditResult& r) {
  Json j;
  j["check"] = r.check;
  j["p"] = r.p;
  j["q"] = r.q;
  j["R"] = r.radius;
  if (r.value) j["value"] = *r.value;
  if (r.bound) j["bound"] = *r.bound;
  j["max_violation"] = r.max_violation;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed();
  j["exact"] = r.exact;
  j["witness"] = witness_json(r.witness);
  j["samples"] = r.samples;
  return j;
}

Json to_json(const SeminormReport& r) {
  Json j;
  j["check"] = "seminorm";
  j["p"] = r.p;
  j["q"] = r.q;
  j["R"] = r.radius;
  j["value"] = r.value;
  j["exact"] = r.exact;
  j["witness"] = witness_json(r.witness);
  j["samples"] = r.samples;
  return j;
}

Json to_json(const LawAudit& a) {
  Json j;
  j["law"] = a.law;
  j["instances"] = a.instances;
  j["failures"] = a.failures;
  j["max_violation"] = a.max_violation;
  j["bound"] = a.bound ? Json(*a.bound) : Json(nullptr);
  if (a.value) j["value"] = *a.value;
  j["witness"] = witness_json(a.witness);
  j["exact"] = a.exact;
  j["passed"] = a.passed();
  return j;
}

Json to_json(const DecayDiagnostic& d) {
  Json j;
  j["R"] = d.radius;
  j["first"] = d.first;
  j["last"] = d.last;
  j["fitted_rate"] = d.fitted_rate ? Json(*d.fitted_rate) : Json(nullptr);
  j["verdict"] = std::string(to_string(d.verdict));
  j["exact"] = d.exact;
  return j;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string profile_csv(const ProfileTable& table) {
  std::string out = "S,R,nu,x0,x1,exact\n";
  for (const auto& row : table.rows) {
    out += format_double(row.S) + ',' + format_double(row.R) + ',' + format_double(row.nu) + ',' +
           std::to_string(row.x0) + ',' + std::to_string(row.x1) + ',' +
           (row.exact ? "true" : "false") + '\n';
  }
  return out;
}

std::string decay_csv(const std::vector<DecayDiagnostic>& diagnostics) {
  std::string out = "n,R,value\n";
  for (const auto& d : diagnostics) {
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      out += std::to_string(i + 1) + ',' + format_double(d.radius) + ',' +
             format_double(d.values[i]) + '\n';
    }
  }
  return out;
}

}  // namespace cohomlab
