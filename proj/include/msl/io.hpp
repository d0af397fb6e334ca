#pragma once

// JSON serialization of targets, degrees, stars, local fans and complexes.
// Integers are JSON integers, other rationals are "p/q" strings.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "msl/local_fan.hpp"
#include "msl/moduli_complex.hpp"

namespace msl {

using Json = nlohmann::json;

inline constexpr const char* kTargetSchema = "msl-target/1";
inline constexpr const char* kStarSchema = "msl-star/1";
inline constexpr const char* kConfigSchema = "msl-config/1";
inline constexpr const char* kLocalFanSchema = "msl-local-fan/1";
inline constexpr const char* kFanSchema = "msl-fan/1";

/// Throws InputError with the parser diagnostic.
Json parse_json(const std::string& text);
Json load_json(const std::filesystem::path& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);
/// Throws InputError unless j["schema"] == schema.
void require_schema(const Json& j, const std::string& schema);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);
Json to_json(const RatVector& v);
Json to_json(const IntVector& v);
RatVector rat_vector_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);

Json to_json(const Cell& c);
Cell cell_from_json(const Json& j);

Json to_json(const TargetCurve& l);
/// Accepts the explicit form or {"standard_line": q}.
TargetCurve target_from_json(const Json& j);
Json to_json(const std::vector<Violation>& vs);

/// {"n": n, "directions": all N directions}.
Json to_json(const DegreeSpec& s);
DegreeSpec degree_from_json(const Json& j);

Json to_json(const VertexStar& s);
VertexStar star_from_json(const Json& j);

Json to_json(const Resolution& r);
Resolution resolution_from_json(const Json& j);

struct LocalFan {
  VertexStar star;
  std::vector<WeightedRay> rays;
  LocalBalance balance;
};

LocalFan compute_local_fan(const VertexStar& s, const HurwitzOptions& opts = {});
Json to_json(const LocalFan& f);
LocalFan local_fan_from_json(const Json& j);

Json to_json(const StableMapType& t);
Json to_json(const BalanceReport& r, const ModuliComplex& m);
/// The complex with a summary block; the balance report is attached when given.
Json to_json(const ModuliComplex& m, const BalanceReport* balance = nullptr);
/// Rebuilds types and witnesses from splits and cells; trusts stored weights
/// and facets.
ModuliComplex complex_from_json(const Json& j);

/// "dim 1, 4 maximal cells, weights 1,1,1,1"
std::string summary_line(const ModuliComplex& m);

struct JobConfig {
  TargetCurve target;
  DegreeSpec degree;
  int max_d = 6;
  int max_n = 10;
  std::size_t max_cells = 200000;
};

/// "target" is inline JSON or a path relative to base_dir; "degree" lists the
/// non-contracted directions; "n" counts contracted ends.
JobConfig config_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json to_json(const JobConfig& c);

}  // namespace msl
