#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohomlab/audit.hpp"
#include "cohomlab/averaging.hpp"
#include "cohomlab/sequences.hpp"
#include "cohomlab/space.hpp"

namespace cohomlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSpaceFormatVersion = 1;

/// Graph spaces are written with edges; other spaces with the full matrix.
Json space_to_json(const FiniteMetricSpace& space);
FiniteMetricSpace space_from_json(const Json& j);

std::string dump_json(const Json& j);

void write_space(const FiniteMetricSpace& space, const std::filesystem::path& path);
FiniteMetricSpace read_space(const std::filesystem::path& path);

/// One "u v" pair per line, 0-based; '#' starts a comment. n is 1 + the largest index.
FiniteMetricSpace read_edge_list(std::istream& in);

/// SHA-1 over "blob <len>\0" + bytes, as git computes it.
std::string git_blob_hash(const std::string& bytes);
std::string file_hash(const std::filesystem::path& path);

Json vector_to_json(const SupportedVector& v);
SupportedVector vector_from_json(const Json& j);

Json to_json(const TuplePair& t);
Json to_json(const AuditResult& r);
Json to_json(const SeminormReport& r);
Json to_json(const LawAudit& a);
Json to_json(const DecayDiagnostic& d);

std::string format_double(double v);

std::string profile_csv(const ProfileTable& table);
/// Rows "n,R,value" for every diagnostic.
std::string decay_csv(const std::vector<DecayDiagnostic>& diagnostics);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace cohomlab
