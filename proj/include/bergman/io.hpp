#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bergman/atomic_measure.hpp"
#include "bergman/matrix.hpp"
#include "bergman/symbol.hpp"

namespace bergman::io {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symbol specification schema: exactly one of
//   {"bipoly": [[j,k,[re,im]], ...]}
//   {"modes":  [[m,[c0,c1,...]], ...]}   coefficients as numbers or [re,im]
//   {"radial": [c0,c1,...]}
Symbol parse_symbol(const json& doc);

// {"atoms": [[[re,im],[wre,wim]], ...]}
AtomicMeasure parse_measure(const json& doc);

json complex_to_json(const cplx& z);
cplx complex_from_json(const json& j);

// Deterministic serialization: fixed field order (insertion order of the
// ordered_json), floats printed with 17 significant digits.
void write_json(std::ostream& out, const json& doc, int indent = 0);
std::string dump_json(const json& doc);
std::string format_double(double x);

// Row-major CSV of "re,im" pairs (2n fields per row); round-trips exactly.
void write_matrix_csv(std::ostream& out, const ComplexMatrix& m);
ComplexMatrix read_matrix_csv(std::istream& in);

}  // namespace bergman::io
