#ifndef HYPERDET_IO_HPP
#define HYPERDET_IO_HPP

#include <filesystem>

#include <nlohmann/json.hpp>

#include "hyperdet/mdmatrix.hpp"
#include "hyperdet/polynomial.hpp"

namespace hyperdet {

using Json = nlohmann::ordered_json;

/// Integral values as JSON numbers when they fit in 64 bits, otherwise strings.
Json rational_to_json(const Rational& r);
/// Accepts JSON integers and strings "n" or "p/q". Throws Error{Parse}.
Rational rational_from_json(const Json& j);

/// {"format": [...], "mode": "numeric"|"symbolic", "entries": [...]}. Only the
/// generic symbolic matrix (entry variables) can be written in symbolic mode;
/// other polynomial entries throw Error{WrongShape}.
Json matrix_to_json(const MDMatrix& a);
/// Throws Error{Parse} on malformed documents.
MDMatrix matrix_from_json(const Json& j);

/// {"vars": [[i1,...,id],...], "terms": [{"coeff": "c", "exps": [[var, power],...]},...]}.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"format": [...], "vectors": [[x_1,...,x_n1], ...]}.
Json witness_to_json(const Format& f, const DegeneracyWitness& x);
DegeneracyWitness witness_from_json(const Json& j);

/// Throws Error{Parse} for unreadable files or invalid JSON.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace hyperdet

#endif  // HYPERDET_IO_HPP
