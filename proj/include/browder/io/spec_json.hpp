#pragma once

#include "browder/classify/classify.hpp"
#include "browder/completion/completion.hpp"
#include "browder/fredholm/fredholm.hpp"
#include "browder/op/bet_operator.hpp"

#include <json.hpp>

#include <string>

namespace browder::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Coefficient: [re, im] where each part is a number, "p/q" or decimal string, or [num, den];
/// a bare number or string is a real coefficient.
GaussQ coeff_from_json(const Json& j);
Json to_json(const GaussQ& q);

/// Exact coefficient, or a ball {"mid": [re, im], "rad": r, "prec": bits}.
Num num_from_json(const Json& j);
Json to_json(const Num& x);

/// {"exp": coeff, ...}
LaurentSymbol symbol_from_json(const Json& j);
Json to_json(const LaurentSymbol& p);
/// A scalar symbol, or {"matrix": [[s, s], [s, s]]}.
MatrixSymbol matrix_symbol_from_json(const Json& j);
Json to_json(const MatrixSymbol& p);

/// {"head": [...], "tails": [{"root": r, "poly": [...]}]}; two components as {"components": [v, v]}.
ExpPolyVector vector_from_json(const Json& j, std::size_t dim);
Json to_json(const ExpPolyVector& v);

/// {"symbol": ..., "perturbation": [{"u": vec, "v": vec}, ...]}
BetOperator operator_from_json(const Json& j);
Json to_json(const BetOperator& t);
BetOperator read_operator_file(const std::string& path);

Json to_json(const linalg::NumMatrix& m);
linalg::NumMatrix matrix_from_json(const Json& j);

Json to_json(const ExtNat& x);
ExtNat extnat_from_json(const Json& j);

Json to_json(const CompletionCertificate& cert);
CompletionCertificate certificate_from_json(const Json& j);

Json report_json(const GaussQ& lambda, const FredholmData& fd, const OperatorClass& cls);

}  // namespace browder::io
