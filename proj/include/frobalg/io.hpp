#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "frobalg/wreath.hpp"

namespace frobalg {

using Json = nlohmann::ordered_json;

/// Malformed input text (position information comes from the JSON parser).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally well-formed input that fails the mathematical axioms.
struct SpecValidationError : std::runtime_error {
    explicit SpecValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A parsed input file: exactly one of the three payloads is set, and the
/// payload has already passed its validator.
struct SpecFile {
    std::string kind;  // "algebra" | "extension" | "wreath"
    std::string name;
    std::string description;
    std::optional<std::uint64_t> seed;
    std::optional<Algebra> algebra;
    std::optional<AlgebraMorphism> extension;
    std::optional<WreathData> wreath;
};

SpecFile parse_spec(const std::string& text);
SpecFile load_spec_file(const std::string& path);

// Serialization of the exact scalars: "p" or "p/q" strings, no rounding.
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

/// Full spec document for an algebra (used by export-builtin).
std::string algebra_spec_text(const Algebra& a, const std::string& name,
                              const std::string& description);

struct RunOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 32;
    std::size_t symbolic_cap = 6;
    std::string format = "text";  // "text" | "structured"
};

struct CheckEntry {
    std::string id;
    std::string anchor;   // which defining equations the verdict refers to
    std::string verdict;  // "yes" | "no" | "pass" | "fail"
    Json witness;         // optional serialized witness data
};

struct RunReport {
    std::string command;
    std::string subject;
    std::uint64_t seed = 0;
    std::vector<CheckEntry> checks;
    long elapsed_ms = 0;
};

/// Dispatches one CLI command. Throws ParseError / SpecValidationError /
/// SymbolicCapExceeded; verdicts (including negative ones) land in the
/// report, never in the exit path.
RunReport run_command(const std::string& command, const SpecFile& spec, const RunOptions& opt);

std::string render_text(const RunReport& rep);
std::string render_structured(const RunReport& rep);

// Witness round-trips used by the report machinery and the tests.
Json frobenius_cert_to_json(const FrobeniusCertificate& c);
FrobeniusCertificate frobenius_cert_from_json(const Algebra& a, const Json& j);
Json ext_cert_to_json(const ExtFrobeniusCertificate& c);
ExtFrobeniusCertificate ext_cert_from_json(const Json& j);

}  // namespace frobalg
