#ifndef REPCA_JSON_IO_HPP
#define REPCA_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "repca/cayley_hamilton.hpp"
#include "repca/filtration.hpp"
#include "repca/invariants.hpp"
#include "repca/local_structure.hpp"
#include "repca/semisimple.hpp"

// JSON schemas for every value crossing the CLI boundary. Rationals travel as
// strings "p/q" in lowest terms ("p" when the denominator is 1); integers are
// also accepted on input. Paths are arrays of arrow ids in composition order
// (rightmost arrow is traversed first); the trivial path is {"vertex": i}.

namespace repca {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);

Rational parse_rational(const Json& j, const std::string& where);
Json dump_rational(const Rational& r);

Matrix parse_matrix(const Json& j, const std::string& where);
Matrix parse_matrix_shaped(const Json& j, int rows, int cols, const std::string& where);
Json dump_matrix(const Matrix& m);

Quiver parse_quiver(const Json& j);
Json dump_quiver(const Quiver& q);

Json dump_path(const Quiver& q, const Path& p);

Presentation parse_presentation(const Json& j);
Json dump_presentation(const Presentation& p);

RepPoint parse_rep_point(const Json& j, const Presentation& p);
Json dump_rep_point(const RepPoint& r);

QuiverRep parse_quiver_rep(const Json& j);
Json dump_quiver_rep(const QuiverRep& r);

SemisimplePoint parse_simples(const Json& j, const Presentation& p);
QuiverSemisimplePoint parse_quiver_simples(const Json& j);
Json dump_quiver_simples(const QuiverSemisimplePoint& x);

FinDimAlgebra parse_algebra(const Json& j);
Json dump_algebra(const FinDimAlgebra& a);

Json dump_local_data(const LocalData& ld);
Json dump_trace_poly(const TracePolynomial& t);
Json dump_ch_poly(const ChPolynomial& chi);

} // namespace repca

#endif
