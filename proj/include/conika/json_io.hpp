#ifndef CONIKA_JSON_IO_HPP_
#define CONIKA_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "conika/constructions.hpp"
#include "conika/proof.hpp"

namespace conika {

using Json = nlohmann::json;

// Element encoding: prime fields serialize as plain integers, extension
// fields as little-endian coefficient arrays [a0, ..., a_{k-1}].
Json elem_to_json(const Fq& F, Fq::Elt e);
Fq::Elt elem_from_json(const Fq& F, const Json& j);

Json point_to_json(const Fq& F, const Point& p);
Point point_from_json(const Fq& F, const Json& j);

Json conic_to_json(const Fq& F, const Conic& C);
Conic conic_from_json(const Fq& F, const Json& j);

Json multipoly_to_json(const Fq& F, const MultiPoly& f);
MultiPoly multipoly_from_json(const Fq& F, const Json& j);

/// {"q", "p", "k", "modulus"} block identifying the field.
Json field_header_json(const Fq& F);
Fq field_from_header(const Json& j);

Json witnessed_set_to_json(const WitnessedSet& W);
WitnessedSet witnessed_set_from_json(const Json& j);

/// Standalone polynomial file (field header + polynomial).
Json polynomial_file_json(const Fq& F, const MultiPoly& f);
std::pair<Fq, MultiPoly> polynomial_file_from_json(const Json& j);

Json trace_report_to_json(const Fq& F, const TraceReport& R);
TraceReport trace_report_from_json(const Fq& F, const Json& j);

/// Deterministic rendering: 2-space indent, sorted keys, trailing newline.
std::string dump_json(const Json& j);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace conika

#endif  // CONIKA_JSON_IO_HPP_
