#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nevpick/errors.hpp"
#include "nevpick/solver.hpp"
#include "support.hpp"

using namespace nevpick;
using namespace nevpick::testing;

namespace {

RationalFunction c(Scalar v) { return RationalFunction(v); }
RationalFunction w103() { return rat({Scalar(1), Scalar(2)}, {Scalar(-1), Scalar(2)}); }

struct SweepStats {
    std::size_t cases = 0;
    std::size_t verified = 0;
    std::size_t class_matches = 0;
};

// Runs the sweep on one system and checks every prediction.
SweepStats run_sweep(const PickSystem& sys, const std::vector<Parameter>& params) {
    SweepStats st;
    const RationalMatrix2x2 theta = build_theta(sys);
    for (const auto& phi : params) {
        const ClassificationReport rep = classify_all(sys, phi);
        REQUIRE(rep.all_classified);
        RationalFunction w;
        try {
            w = apply_lft(theta, phi);
        } catch (const DegenerateTransform&) {
            // w identically infinity: nothing to check at the boundary
            MESSAGE("w = inf for " << phi.to_string());
            continue;
        }
        const VerificationReport v = verify_candidate(sys, w);
        for (std::size_t i = 0; i < sys.size(); ++i) {
            const PredictionCheck pc = check_prediction(sys, i, rep.predicted[i], w);
            CHECK_MESSAGE(pc.verified, phi.to_string() << " node " << i << " " << rep.labels[i].name() << " " << pc.detail);
            st.verified += pc.verified ? 1 : 0;
            ++st.cases;
        }
        CHECK_MESSAGE(v.kernel_negatives == rep.class_index, phi.to_string());
        st.class_matches += v.kernel_negatives == rep.class_index ? 1 : 0;
        // class bound
        CHECK(v.kernel_negatives <= sys.kappa);
        // labels <= 3 everywhere exactly when the inequality conditions hold
        CHECK_MESSAGE(rep.problem2 == v.problem2, phi.to_string());
        // a candidate meeting all inequality conditions keeps at least kappa negative squares
        if (v.problem2) CHECK(v.kernel_negatives >= sys.kappa);
        CHECK(w.has_real_coefficients());
    }
    return st;
}

}  // namespace

TEST_CASE("labels for the two-regular-node example") {
    const PickSystem s = build_system(ex101());
    const auto sweep = standard_sweep();
    REQUIRE(sweep.size() == 7);
    for (const auto& phi : sweep) {
        const ClassificationReport r = classify_all(s, phi);
        const bool lossy = phi.is_infinity() || phi.to_string() == Parameter::rational(c(-1) / z()).to_string();
        CHECK(r.labels[0].family == Family::Ctilde);
        CHECK(r.labels[1].family == Family::C);
        CHECK(r.labels[0].index == (lossy ? 4 : 1));
        CHECK(r.labels[1].index == 1);
        CHECK(r.k == (lossy ? 1u : 0u));
        CHECK(r.class_index == (lossy ? 0u : 1u));
    }
    const ConditionLabel l = classify_parameter(s, Parameter::infinity(), 0);
    CHECK(l.exact);
    CHECK(l.name() == "Ctilde4");
    CHECK(predict_behavior(l, NodeKind::Regular) == Outcome::AboveBound);
}

TEST_CASE("labels for the mixed example") {
    const PickSystem s = build_system(ex102());
    for (const auto& phi : standard_sweep()) {
        const ClassificationReport r = classify_all(s, phi);
        const bool lossy = phi.to_string() == "1" || phi.to_string() == Parameter::rational(z()).to_string();
        CHECK(r.labels[0].family == Family::C);
        CHECK(r.labels[0].index == (lossy ? 4 : 1));
        CHECK(r.labels[1].index == 1);
    }
}

TEST_CASE("constant equal to eta lands below the bound") {
    const PickSystem s = build_system(ex101());
    const ConditionLabel l = classify_parameter(s, Parameter::constant(q(1, 2)), 1);
    CHECK(l.exact);
    CHECK(l.index == 3);
    CHECK(l.threshold == doctest::Approx(-0.5));
    const RationalFunction w = apply_lft(build_theta(s), Parameter::constant(q(1, 2)));
    const PredictionCheck pc = check_prediction(s, 1, Outcome::BelowBound, w);
    CHECK(pc.verified);
    CHECK(pc.margin > 1e-6);
}

TEST_CASE("lost squares beyond kappa are inconsistent") {
    std::vector<ConditionLabel> labels(2);
    labels[0].index = 4;
    labels[1].index = 5;
    CHECK(lost_squares(labels, 2) == std::pair<std::size_t, std::size_t>{2, 0});
    CHECK_THROWS_AS(lost_squares(labels, 1), InconsistentClassification);
}

TEST_CASE("miss-set feasibility of the two-regular-node example") {
    const PickSystem s = build_system(ex101());
    CHECK(feasibility_miss_set(s, {0}) == MissSetVerdict::InfinitelyMany);
    CHECK(feasibility_miss_set(s, {1}) == MissSetVerdict::Infeasible);
    CHECK(feasibility_miss_set(s, {0, 1}) == MissSetVerdict::Infeasible);
    CHECK_FALSE(equivalence_check(s));
    CHECK(to_string(MissSetVerdict::UniqueParameter) == "unique_parameter");
}

TEST_CASE("degenerate example has the unique solution (2z+1)/(2z-1)") {
    const PickSystem s = build_system(ex103());
    CHECK(solve_degenerate(s) == w103());
    const SolutionBundle b = solve(ex103());
    REQUIRE(b.w.has_value());
    CHECK(*b.w == w103());
    CHECK(b.problem == 1);
    REQUIRE(b.verification.has_value());
    const VerificationReport& v = *b.verification;
    CHECK(v.problem1);
    CHECK(v.fmi_count == 1);
    CHECK(v.fmi_matches);
    for (const auto& n : v.nodes) {
        CHECK(n.value_error <= 1e-8);
        CHECK(n.second_error <= 1e-8);
    }
}

TEST_CASE("solve returns the resolvent for invertible P") {
    const SolutionBundle b = solve(ex101());
    CHECK(b.theta.has_value());
    CHECK_FALSE(b.w.has_value());
    CHECK(b.problem == 3);
    CHECK(b.kappa == 1);
}

TEST_CASE("verification of w = z against the two-regular-node data") {
    const VerificationReport v = verify_candidate(build_system(ex101()), z());
    REQUIRE(v.nodes.size() == 2);
    CHECK(v.nodes[0].derivative.real() == doctest::Approx(1.0));
    CHECK_FALSE(v.nodes[0].problem2);
    CHECK(v.nodes[1].problem1);
    CHECK(v.fmi_count == 1);
    CHECK(verify_candidate(build_system(ex101()), -z()).fmi_count >= 2);
}

TEST_CASE("prediction soundness on the worked examples") {
    for (const auto& d : {ex101(), ex102()}) {
        const SweepStats st = run_sweep(build_system(d), standard_sweep());
        CHECK(st.verified == st.cases);
        CHECK(st.class_matches == 7);
    }
}

TEST_CASE("property: prediction soundness on random instances") {
    Gen g(501);
    std::size_t cases = 0, verified = 0;
    const std::vector<Parameter> params{Parameter::constant(0), Parameter::infinity(), Parameter::rational(z()),
                                        Parameter::rational(c(-1) / z())};
    for (int trial = 0; trial < 12; ++trial) {
        const PickSystem s = g.invertible_system(static_cast<std::size_t>(g.integer(1, 3)));
        const SweepStats st = run_sweep(s, params);
        cases += st.cases;
        verified += st.verified;
    }
    CHECK(verified == cases);
}

TEST_CASE("property: degenerate solution does not depend on the kernel vector") {
    Gen g(502);
    int produced = 0;
    for (int trial = 0; trial < 80 && produced < 25; ++trial) {
        InterpolationData d = ex103();
        if (!singular_data(g, static_cast<std::size_t>(g.integer(2, 5)), d)) continue;
        const PickSystem s = build_system(d);
        REQUIRE(s.singular());
        const auto basis = null_space(s.P.matrix());
        REQUIRE_FALSE(basis.empty());
        try {
            const RationalFunction w = degenerate_solution(s, basis[0]);
            std::vector<Scalar> scaled = basis[0];
            const Scalar f = g.nonzero_rational() + g.rational() * Scalar::i();
            for (auto& x : scaled) x *= f;
            CHECK(degenerate_solution(s, scaled) == w);
            CHECK(solve_degenerate(s) == w);
            ++produced;
        } catch (const NoSolutionRepresentation&) {
        }
    }
    CHECK(produced >= 10);
}
