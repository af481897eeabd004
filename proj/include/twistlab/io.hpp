#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "twistlab/complex.hpp"

namespace twistlab {

/// Malformed or structurally inconsistent input (bad JSON, unknown names,
/// missing fields). Algebra axioms are not checked here; see validate().
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Algebra documents: field_characteristic, vertices, basis [{name, src, dst,
/// deg}], mult [{left, right, result: [{coeff, name}]}], and optionally
/// idempotents (one basis name per vertex). Without idempotents, each vertex
/// takes its first degree-0 loop u with u*u = u.
GradedAlgebra algebra_from_json(const nlohmann::json& doc);
nlohmann::json algebra_to_json(const GradedAlgebra& a);
GradedAlgebra parse_algebra(const std::string& text);
std::string dump_algebra(const GradedAlgebra& a);
GradedAlgebra load_algebra(const std::string& path);
void save_algebra(const GradedAlgebra& a, const std::string& path);

/// Complex documents: summands [{vertex, shift}] and differential [{row,
/// col, element, coeff}], coeff an integer or a "p/q" string. Repeated
/// (row, col) entries add up.
TwistedComplex complex_from_json(const nlohmann::json& doc, AlgebraPtr algebra);
nlohmann::json complex_to_json(const TwistedComplex& x);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace twistlab
