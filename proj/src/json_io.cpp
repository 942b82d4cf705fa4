#include "nevpick/json_io.hpp"

#include <cmath>

#include "nevpick/errors.hpp"

namespace nevpick {

namespace {

[[noreturn]] void schema(const std::string& what) { throw InputError("schema: " + what); }

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) schema(where + " needs \"" + key + "\"");
    return j.at(key);
}

double number(const json& j, const std::string& what) {
    if (!j.is_number()) schema(what + " must be a number");
    return j.get<double>();
}

json cplx_json(cplx z) {
    if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z.real()))) return z.real();
    return json{{"re", z.real()}, {"im", z.imag()}};
}

std::vector<Scalar> scalar_list(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) schema(what + " must be a nonempty array");
    std::vector<Scalar> out;
    for (const auto& v : j) out.push_back(parse_scalar(v));
    return out;
}

// Integer coefficient vectors sharing one scale, or nothing when some
// coefficient is not a real rational.
bool primitive_integer_form(const Polynomial& num, const Polynomial& den, std::vector<mpz_class>& n,
                            std::vector<mpz_class>& d) {
    std::vector<mpq_class> all;
    for (const Polynomial* p : {&num, &den})
        for (const auto& c : p->coefficients()) {
            if (!c.is_exact() || !c.is_real()) return false;
            all.push_back(c.exact().re);
        }
    mpz_class l = 1;
    for (const auto& q : all) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    for (const auto& q : all) {
        mpz_class v = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (g == 0) g = 1;
    if (den.leading().compare_real(Scalar(0)) < 0) g = -g;
    const std::size_t nn = num.coefficients().size();
    n.assign(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(nn));
    d.assign(ints.begin() + static_cast<std::ptrdiff_t>(nn), ints.end());
    for (auto& v : n) v /= g;
    for (auto& v : d) v /= g;
    return true;
}

json coefficient_list(const Polynomial& p) {
    json a = json::array();
    if (p.is_zero()) {
        a.push_back(to_json(p.is_exact() ? Scalar(0) : Scalar::from_double(0.0)));
        return a;
    }
    for (const auto& c : p.coefficients()) a.push_back(to_json(c));
    return a;
}

}  // namespace

SolverConfig RunConfig::solver() const {
    SolverConfig s;
    s.rank_tol = rank_tol;
    s.limits.limit_tol = limit_tol;
    s.grid = grid;
    s.grid.eig_tol = eig_tol;
    return s;
}

RunConfig parse_run_config(const json& j) {
    RunConfig rc;
    if (j.is_null()) return rc;
    if (!j.is_object()) schema("config must be an object");
    if (j.contains("backend")) {
        const auto& b = j.at("backend");
        if (b == "exact")
            rc.backend = Backend::Exact;
        else if (b == "float")
            rc.backend = Backend::Float;
        else
            schema("backend must be \"exact\" or \"float\"");
    }
    if (j.contains("rank_tol")) rc.rank_tol = number(j.at("rank_tol"), "rank_tol");
    if (j.contains("limit_tol")) rc.limit_tol = number(j.at("limit_tol"), "limit_tol");
    if (j.contains("eig_tol")) rc.eig_tol = number(j.at("eig_tol"), "eig_tol");
    if (j.contains("out")) {
        if (!j.at("out").is_string()) schema("out must be a string");
        rc.out = j.at("out").get<std::string>();
    }
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (!g.is_object()) schema("grid must be an object");
        if (g.contains("imag_lines")) {
            rc.grid.imag_lines.clear();
            for (const auto& v : g.at("imag_lines")) {
                const double y = number(v, "grid.imag_lines entry");
                if (y <= 0) schema("grid.imag_lines must be positive");
                rc.grid.imag_lines.push_back(y);
            }
        }
        if (g.contains("points_per_line")) rc.grid.points_per_line = g.at("points_per_line").get<std::size_t>();
        if (g.contains("margin")) rc.grid.margin = number(g.at("margin"), "grid.margin");
        if (g.contains("exhaustive_limit")) rc.grid.exhaustive_limit = g.at("exhaustive_limit").get<std::size_t>();
        if (g.contains("random_sections")) rc.grid.random_sections = g.at("random_sections").get<std::size_t>();
        if (g.contains("seed")) rc.grid.seed = g.at("seed").get<std::uint64_t>();
        if (g.contains("points"))
            for (const auto& p : g.at("points")) {
                if (!p.is_array() || p.size() != 2) schema("grid.points entries are [re, im]");
                rc.grid.explicit_points.emplace_back(number(p[0], "grid point"), number(p[1], "grid point"));
            }
    }
    return rc;
}

Scalar parse_scalar(const json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(mpq_class(j.dump()));
    // dump() gives the shortest round-trip text, which parses exactly
    if (j.is_number()) return Scalar::parse(j.dump());
    if (j.is_object() && j.contains("re")) {
        const Scalar re = parse_scalar(j.at("re"));
        const Scalar im = j.contains("im") ? parse_scalar(j.at("im")) : Scalar(0);
        return re + im * Scalar::i();
    }
    schema("expected a number or rational string, got " + j.dump());
}

InterpolationData parse_problem(const json& j) {
    if (!j.is_object()) schema("problem must be an object");
    std::vector<Node> nodes;
    auto regular = [&](const json& r) {
        nodes.push_back(Node::regular(parse_scalar(require(r, "x", "regular node")),
                                      parse_scalar(require(r, "w", "regular node")),
                                      parse_scalar(require(r, "gamma", "regular node"))));
    };
    auto singular = [&](const json& s) {
        nodes.push_back(
            Node::singular(parse_scalar(require(s, "x", "singular node")), parse_scalar(require(s, "xi", "singular node"))));
    };
    if (j.contains("nodes")) {
        if (!j.at("nodes").is_array()) schema("nodes must be an array");
        for (const auto& n : j.at("nodes")) {
            const json& kind = require(n, "kind", "node");
            if (kind == "regular")
                regular(n);
            else if (kind == "singular")
                singular(n);
            else
                schema("node kind must be \"regular\" or \"singular\"");
        }
    }
    for (const char* key : {"regular", "singular"}) {
        if (!j.contains(key)) continue;
        if (!j.at(key).is_array()) schema(std::string(key) + " must be an array");
        for (const auto& n : j.at(key)) {
            if (key[0] == 'r')
                regular(n);
            else
                singular(n);
        }
    }
    if (nodes.empty()) schema("problem has no nodes");
    return InterpolationData(std::move(nodes));
}

RationalFunction parse_rational(const json& j) {
    if (!j.is_object()) schema("rational function must be an object with num/den");
    const Polynomial num(scalar_list(require(j, "num", "rational function"), "num"));
    const Polynomial den(j.contains("den") ? Polynomial(scalar_list(j.at("den"), "den")) : Polynomial::constant(1));
    if (den.is_zero()) schema("denominator is zero");
    return RationalFunction(num, den).simplified();
}

Parameter parse_parameter(const json& j) {
    const json& type = require(j, "type", "parameter");
    if (type == "inf") return Parameter::infinity();
    if (type == "const") {
        const Scalar c = parse_scalar(require(j, "value", "constant parameter"));
        if (!c.is_real()) throw InvalidParameter("constant parameter " + c.to_string() + " is not real");
        return Parameter::constant(c);
    }
    if (type == "rational") {
        const RationalFunction f = parse_rational(j);
        // constants and polynomials of degree one fall out of the generic path
        return f.is_constant() ? Parameter::constant(f.numerator().is_zero() ? Scalar(0)
                                                                              : f.numerator().coefficients()[0])
                               : Parameter::rational(f);
    }
    schema("parameter type must be \"const\", \"inf\" or \"rational\"");
}

json to_json(const Scalar& s) {
    if (s.is_exact()) {
        if (s.is_real()) return s.exact().re.get_str();
        return json{{"re", s.exact().re.get_str()}, {"im", s.exact().im.get_str()}};
    }
    return cplx_json(s.to_complex());
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
        rows.push_back(r);
    }
    return rows;
}

json to_json(const ExtendedReal& e) { return e.infinite ? json("inf") : to_json(e.value); }

json to_json(const RationalFunction& r) {
    std::vector<mpz_class> n, d;
    if (!r.numerator().is_zero() && primitive_integer_form(r.numerator(), r.denominator(), n, d)) {
        json jn = json::array(), jd = json::array();
        for (const auto& v : n) jn.push_back(v.get_str());
        for (const auto& v : d) jd.push_back(v.get_str());
        return {{"num", jn}, {"den", jd}};
    }
    if (r.numerator().is_zero())
        return {{"num", coefficient_list(r.numerator())}, {"den", json::array({r.is_exact() ? json("1") : json(1.0)})}};
    return {{"num", coefficient_list(r.numerator())}, {"den", coefficient_list(r.denominator())}};
}

json to_json(const Parameter& phi) {
    switch (phi.kind()) {
        case Parameter::Kind::Constant:
            return {{"type", "const"}, {"value", to_json(phi.value())}};
        case Parameter::Kind::Infinity:
            return {{"type", "inf"}};
        case Parameter::Kind::Rational:
            break;
    }
    json j = to_json(phi.function());
    j["type"] = "rational";
    return j;
}

json to_json(const RationalMatrix2x2& theta) {
    json poles = json::array();
    for (const auto& p : theta.poles) poles.push_back(to_json(p));
    return {{"theta", {{to_json(theta(0, 0)), to_json(theta(0, 1))}, {to_json(theta(1, 0)), to_json(theta(1, 1))}}},
            {"kappa", theta.kappa},
            {"poles", poles}};
}

json to_json(const LimitEstimate& e) {
    json approx = json::array();
    for (const auto& a : e.approximants) approx.push_back(cplx_json(a));
    json value = e.status == LimitStatus::Finite ? cplx_json(e.value) : json(to_string(e.status));
    return {{"kind", to_string(e.kind)}, {"value", value}, {"approximants", approx}, {"discrepancy", e.error}};
}

json to_json(const PickSystem& sys) {
    json nodes = json::array();
    for (const auto& n : sys.nodes) {
        if (n.is_regular())
            nodes.push_back({{"kind", "regular"}, {"x", to_json(n.x)}, {"w", to_json(n.w)}, {"gamma", to_json(n.gamma)}});
        else
            nodes.push_back({{"kind", "singular"}, {"x", to_json(n.x)}, {"xi", to_json(n.xi)}});
    }
    json j = {{"n", sys.size()},
              {"nodes", nodes},
              {"order", sys.order},
              {"P", to_json(sys.P.matrix())},
              {"X", to_json(sys.X)},
              {"E", to_json(sys.E)},
              {"C", to_json(sys.C)},
              {"kappa", sys.kappa},
              {"inertia", {{"negative", sys.inertia.negatives}, {"zero", sys.inertia.zeros}, {"positive", sys.inertia.positives}}},
              {"singular", sys.singular()}};
    if (sys.derived) {
        const auto& d = *sys.derived;
        json e = json::array(), c = json::array(), eta = json::array(), p = json::array();
        for (std::size_t i = 0; i < sys.size(); ++i) {
            e.push_back(to_json(d.e_tilde[i]));
            c.push_back(to_json(d.c_tilde[i]));
            eta.push_back(to_json(d.eta[i]));
            p.push_back(to_json(d.p_tilde_diag[i]));
        }
        j["derived"] = {{"P_inv", to_json(d.P_inv)}, {"e_tilde", e}, {"c_tilde", c}, {"eta", eta}, {"p_tilde", p}};
    } else {
        j["derived"] = nullptr;
    }
    return j;
}

json to_json(const CJReport& r) {
    const char* route = r.route == CJRoute::Bounded ? "bounded" : r.route == CJRoute::Unbounded ? "unbounded" : "inconclusive";
    json limits = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        json l = to_json(r.limits[i]);
        l["label"] = r.labels[i];
        limits.push_back(l);
    }
    return {{"route", route},
            {"boundary_value", to_json(r.boundary_value)},
            {"limits", limits},
            {"all_finite", r.all_finite},
            {"discrepancy", r.discrepancy},
            {"liminf_implied", r.liminf_implied}};
}

json to_json(const VerificationReport& r) {
    json nodes = json::array();
    for (const auto& n : r.nodes) {
        json j = {{"node", n.node}, {"kind", n.kind == NodeKind::Regular ? "regular" : "singular"}};
        if (n.kind == NodeKind::Regular) {
            j["value"] = to_json(n.value);
            j["derivative"] = to_json(n.derivative);
        } else {
            j["residual"] = to_json(n.residual);
        }
        j["value_error"] = n.value_error;
        j["second_error"] = n.second_error;
        j["problem1"] = n.problem1;
        j["problem2"] = n.problem2;
        nodes.push_back(j);
    }
    return {{"nodes", nodes},
            {"kappa", r.kappa},
            {"fmi_count", r.fmi_count},
            {"fmi_matches", r.fmi_matches},
            {"kernel_negatives", r.kernel_negatives},
            {"problem1", r.problem1},
            {"problem2", r.problem2}};
}

}  // namespace nevpick
