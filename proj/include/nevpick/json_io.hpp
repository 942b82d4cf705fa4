#ifndef NEVPICK_JSON_IO_HPP
#define NEVPICK_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "nevpick/boundary.hpp"
#include "nevpick/problem.hpp"
#include "nevpick/resolvent.hpp"
#include "nevpick/solver.hpp"
#include "nevpick/transform.hpp"

namespace nevpick {

using json = nlohmann::json;

/// Options shared by every command. Defaults reproduce the golden outputs.
struct RunConfig {
    Backend backend = Backend::Exact;
    double rank_tol = 1e-9;
    double limit_tol = 1e-9;
    double eig_tol = 1e-9;
    GridConfig grid;
    std::string out;  // empty: stdout

    SolverConfig solver() const;
};

/// Reads {"backend", "rank_tol", "limit_tol", "eig_tol", "grid": {...}, "out"};
/// every key is optional. Throws InputError on malformed entries.
RunConfig parse_run_config(const json& j);

/// A scalar given as a JSON number, an exact string ("3/4", "-2", "1.5") or
/// {"re": .., "im": ..}.
Scalar parse_scalar(const json& j);

/// Either {"regular": [{x, w, gamma}], "singular": [{x, xi}]} or
/// {"nodes": [{"kind": "regular"|"singular", ...}]} in the order given.
InterpolationData parse_problem(const json& j);

/// {"num": [a0, a1, ..], "den": [b0, ..]}, ascending coefficients; den
/// defaults to [1].
RationalFunction parse_rational(const json& j);

/// {"type": "const", "value"} | {"type": "inf"} | {"type": "rational", "num", "den"}.
Parameter parse_parameter(const json& j);

json to_json(const Scalar& s);
json to_json(const Matrix& m);
json to_json(const ExtendedReal& e);
/// Exact rational functions come out in primitive integer form: integer
/// coefficients with no common factor and positive leading denominator.
json to_json(const RationalFunction& r);
json to_json(const Parameter& phi);
json to_json(const RationalMatrix2x2& theta);
json to_json(const LimitEstimate& e);
json to_json(const PickSystem& sys);
json to_json(const CJReport& r);
json to_json(const VerificationReport& r);

}  // namespace nevpick

#endif  // NEVPICK_JSON_IO_HPP
