#pragma once

#include "superschur/algebra.hpp"
#include "superschur/homology.hpp"
#include "superschur/invariants.hpp"
#include "superschur/verifier.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace superschur::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "superschur 0.1.0";

/* Malformed or structurally invalid algebra file (grading violations,
 * non-canonical pairs, bad rationals, out-of-range indices). The message
 * names the offending location.
 */
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/* Algebra file schema:
 *   { "format": "superalgebra", "version": 1, "even": m, "odd": n,
 *     "brackets": [ {"i": i, "j": j, "coeffs": {"t": "p/q", ...}}, ... ] }
 * Indices 0-based; i < j except i = j when both are odd; coefficients are
 * exact rational strings and must respect the grading support rule.
 */
SuperAlgebra parse_algebra(const std::string& text, const std::string& origin);
SuperAlgebra load_algebra(const std::string& path);

/* Deterministic bytes: brackets sorted by (i, j), coefficient keys ascending,
 * two-space indent, trailing newline. load(format(L)) reproduces the
 * structure constants exactly.
 */
std::string format_algebra(const SuperAlgebra& alg);
void write_algebra(const std::string& path, const SuperAlgebra& alg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

/* FNV-1a 64-bit over the raw input bytes, as "fnv1a64:<16 hex digits>". */
std::string digest(std::string_view bytes);

/* Report documents: stable key order, no timestamps; byte-identical output
 * for identical inputs, flags and seeds.
 */
Json make_report(const std::string& command);
std::string render_report(const Json& report);

Json validation_to_json(const ValidationReport& rep);
Json profile_to_json(const StructureProfile& sp);
Json multiplier_to_json(const MultiplierResult& mr);
Json verdict_to_json(const verify::ClaimVerdict& cv);
Json verdicts_to_json(const std::vector<verify::ClaimVerdict>& verdicts);

} // namespace superschur::io
