#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgx/exponent.hpp"

using namespace fgx;

namespace {

const RingPtr& Z() {
    static RingPtr r = Ring::integers();
    return r;
}

FormalGroupLaw law_by_name(const std::string& name, int trunc) {
    if (name == "additive") return FormalGroupLaw::additive(Z(), trunc);
    if (name == "multiplicative") return FormalGroupLaw::multiplicative(Z(), trunc);
    if (name == "lorentz") return FormalGroupLaw::lorentz(Z(), trunc);
    // a curve with honest nonzero coefficients
    auto one = ring_one(Z()), zero = ring_zero(Z());
    return FormalGroupLaw::elliptic({one, zero, one, zero, one}, trunc);
}

ExponentReport tau_named(const std::string& type, const std::string& from,
                         const std::string& to, int d, const GeneratorPool* pool = nullptr) {
    return tau(RootSystem::parse(type), law_by_name(from, d), law_by_name(to, d), d, pool);
}

bool reports_equal(const ExponentReport& a, const ExponentReport& b) {
    return a.type == b.type && a.d == b.d && a.fgl_from == b.fgl_from && a.fgl_to == b.fgl_to &&
           a.tau == b.tau && a.certainty == b.certainty &&
           a.elementary_divisors == b.elementary_divisors && a.source_rows == b.source_rows &&
           a.target_rows == b.target_rows;
}

}  // namespace

TEST_CASE("degree-one exponents are trivial") {
    for (const auto& type : {"A2", "C2", "B3", "G2"}) {
        CAPTURE(type);
        for (const auto& from : {"multiplicative", "lorentz", "elliptic"}) {
            auto r = tau_named(type, from, "additive", 1);
            CHECK(r.tau == 1);
            CHECK(r.certainty == TauCertainty::Exact);
            CHECK(r.elementary_divisors.empty());
            CHECK(r.source_rows == 0);
            CHECK(r.target_rows == 0);
        }
    }
}

TEST_CASE("exponent of the identity deformation is one") {
    for (const auto& type : {"A2", "B3"}) {
        CAPTURE(type);
        auto r = tau_named(type, "multiplicative", "multiplicative", 2);
        CHECK(r.tau == 1);
        CHECK(r.elementary_divisors.empty());
    }
    auto r = tau_named("A2", "additive", "additive", 3);
    CHECK(r.tau == 1);
    CHECK(r.certainty == TauCertainty::Exact);
}

TEST_CASE("degree-two exponents reproduce the Dynkin index") {
    for (const auto& type : {"A1", "A2", "A3", "C2", "C3"}) {
        CAPTURE(type);
        auto r = tau_named(type, "multiplicative", "additive", 2);
        CHECK(r.tau == 1);
        CHECK(r.certainty == TauCertainty::Exact);  // A and C pools are certified
    }
    for (const auto& type : {"B3", "B4", "D4", "G2"}) {
        CAPTURE(type);
        auto r = tau_named(type, "multiplicative", "additive", 2);
        CHECK(r.tau == 2);
        CHECK(r.certainty == TauCertainty::MultipleOfTrueTau);
        CHECK(r.elementary_divisors == std::vector<mpz_class>{2});
    }
    // any law with a nonzero uv coefficient sees the index; the Lorentz law
    // is odd, so its degree-2 part is already additive
    CHECK(tau_named("G2", "elliptic", "additive", 2).tau == 2);
    CHECK(tau_named("B3", "lorentz", "additive", 2).tau == 1);
}

TEST_CASE("higher-degree exponents: A and C stay trivial, B and G2 stay 2") {
    for (const auto& type : {"A2", "C3"}) {
        CAPTURE(type);
        for (int d = 2; d <= 4; ++d) {
            auto r = tau_named(type, "multiplicative", "additive", d);
            CHECK(r.tau == 1);
            CHECK(r.certainty == TauCertainty::Exact);
            CHECK(r.elementary_divisors.empty());
        }
    }

    // theta generators alone already certify types A and C
    GeneratorPool thetas;
    thetas.policy = PoolPolicy::ThetaOnly;
    for (int d = 2; d <= 4; ++d) {
        auto r = tau_named("A2", "multiplicative", "additive", d, &thetas);
        CHECK(r.tau == 1);
        CHECK(r.certainty == TauCertainty::Exact);
    }

    std::vector<mpz_class> expect_b3 = {1, 2, 2, 2};
    for (int d = 1; d <= 4; ++d) {
        auto r = tau_named("B3", "multiplicative", "additive", d);
        CHECK(r.tau == expect_b3[d - 1]);
        // the 2-torsion shows up as a chain of 2s
        for (const auto& q : r.elementary_divisors) CHECK(q == 2);
    }
    for (int d = 2; d <= 3; ++d) {
        CHECK(tau_named("D4", "multiplicative", "additive", d).tau == 2);
        CHECK(tau_named("G2", "multiplicative", "additive", 2 * (d - 1)).tau == 2);
    }
}

TEST_CASE("reverse deformation is generator-limited but sees no torsion") {
    // leading forms of invariant elements always land in the exact additive
    // slice, so the reverse exponent is 1; the pool-built target keeps the
    // result uncertified
    auto r = tau_named("B3", "additive", "multiplicative", 2);
    CHECK(r.tau == 1);
    CHECK(r.certainty == TauCertainty::GeneratorLimited);
}

TEST_CASE("custom pools: under-generation is flagged or rejected") {
    // pool spanning only the doubled weight on A1
    GeneratorPool doubled;
    doubled.seeds = {{mpz_class(2)}};
    doubled.policy = PoolPolicy::OrbitSums;

    auto r = tau(RootSystem::parse("A1"), law_by_name("multiplicative", 2),
                 law_by_name("additive", 2), 2, &doubled);
    // x_{2w} x_{-2w} and friends only reach 4 * the exact slice
    CHECK(r.tau == 4);
    CHECK(r.certainty == TauCertainty::MultipleOfTrueTau);

    // same pool on the target side: certainty drops to generator-limited
    auto rr = tau(RootSystem::parse("A1"), law_by_name("additive", 2),
                  law_by_name("multiplicative", 2), 2, &doubled);
    CHECK(rr.certainty == TauCertainty::GeneratorLimited);

    // a pool too small to span the degree-4 slice rationally is an error
    GeneratorPool tiny;
    tiny.seeds = {RootSystem::parse("B3").fundamental_weight(0)};
    tiny.max_length = 1;
    tiny.policy = PoolPolicy::OrbitSums;
    CHECK_THROWS_AS(tau(RootSystem::parse("B3"), law_by_name("multiplicative", 4),
                        law_by_name("additive", 4), 4, &tiny),
                    DomainError);
}

TEST_CASE("input validation") {
    auto Q = Ring::rationals();
    CHECK_THROWS_AS(tau(RootSystem::parse("A2"), FormalGroupLaw::multiplicative(Q, 2),
                        FormalGroupLaw::additive(Q, 2), 2),
                    DomainError);
    // truncation below the requested degree
    CHECK_THROWS_AS(tau(RootSystem::parse("A2"), law_by_name("multiplicative", 2),
                        law_by_name("additive", 2), 3),
                    StructuralError);
    CHECK_THROWS_AS(tau(RootSystem::parse("A2"), law_by_name("multiplicative", 2),
                        law_by_name("additive", 2), -1),
                    StructuralError);
}

TEST_CASE("exponent reports serialize deterministically and round trip") {
    auto r = tau_named("B3", "multiplicative", "additive", 2);
    auto text = exponent_to_json(r);

    // stable key order, no timing field
    const std::string prefix =
        R"({"type":"B3","d":2,"fgl_from":"multiplicative","fgl_to":"additive",)"
        R"("tau":2,"exactness":"MULTIPLE_OF_TRUE_TAU")";
    CHECK(text.substr(0, prefix.size()) == prefix);
    CHECK(text.find("wall_ms") == std::string::npos);
    CHECK(text.find("\"elementary_divisors\":[2]") != std::string::npos);
    CHECK(text == exponent_to_json(r));  // byte-stable

    auto back = exponent_from_json(text);
    CHECK(reports_equal(back, r));

    // field order in the input does not matter
    auto shuffled = exponent_from_json(
        R"({"tau":2,"d":2,"type":"B3","exactness":"MULTIPLE_OF_TRUE_TAU",)"
        R"("fgl_from":"multiplicative","fgl_to":"additive","elementary_divisors":[2],)"
        R"("source_rows":20,"target_rows":1})");
    CHECK(reports_equal(shuffled, r));

    CHECK_THROWS_AS(exponent_from_json("{"), StructuralError);
    CHECK_THROWS_AS(exponent_from_json(R"({"type":"B3"})"), StructuralError);
    CHECK_THROWS_AS(exponent_from_json(
                        R"({"type":"B3","d":2,"fgl_from":"a","fgl_to":"b","tau":1,)"
                        R"("exactness":"SOMETIMES","elementary_divisors":[]})"),
                    StructuralError);
}

TEST_CASE("certainty names round trip") {
    for (auto c : {TauCertainty::Exact, TauCertainty::MultipleOfTrueTau,
                   TauCertainty::GeneratorLimited})
        CHECK(parse_tau_certainty(tau_certainty_name(c)) == c);
    CHECK(tau_certainty_name(TauCertainty::Exact) == "EXACT");
    CHECK(tau_certainty_name(TauCertainty::MultipleOfTrueTau) == "MULTIPLE_OF_TRUE_TAU");
    CHECK(tau_certainty_name(TauCertainty::GeneratorLimited) == "GENERATOR_LIMITED");
    CHECK_THROWS_AS(parse_tau_certainty("exact"), StructuralError);
}

TEST_CASE("flag diagnostics: additive law ranks match length counts") {
    struct Row {
        const char* type;
        std::vector<int> ranks;
    };
    for (const auto& row : {Row{"A2", {1, 2, 2, 1}}, Row{"C2", {1, 2, 2, 2, 1}},
                            Row{"B3", {1, 3, 5, 7, 8}}, Row{"G2", {1, 2, 2, 2, 2}}}) {
        CAPTURE(row.type);
        auto rs = RootSystem::parse(row.type);
        for (size_t d = 0; d < row.ranks.size(); ++d) {
            auto f = flag_diagnostics(rs, law_by_name("additive", std::max<int>(2, (int)d)),
                                      (int)d, Z());
            CHECK(f.rank == row.ranks[d]);
            CHECK(f.expected_rank == row.ranks[d]);
            CHECK(f.torsion.empty());
            CHECK(f.match);
            CHECK(f.certainty == LatticeCertainty::Exact);
            CHECK(f.type == row.type);
            CHECK(f.ring == "Z");
        }
    }
    // beyond the longest element the graded piece is empty
    auto a2 = RootSystem::parse("A2");
    auto f = flag_diagnostics(a2, law_by_name("additive", 4), 4, Z());
    CHECK(f.expected_rank == 0);
    CHECK(f.rank == 0);
    CHECK(f.match);
}

TEST_CASE("flag diagnostics: multiplicative law sees 2-torsion on B3 over Z only") {
    auto b3 = RootSystem::parse("B3");
    for (int d = 2; d <= 3; ++d) {
        CAPTURE(d);
        auto over_z = flag_diagnostics(b3, law_by_name("multiplicative", d), d, Z());
        CHECK(over_z.rank == over_z.expected_rank);
        CHECK_FALSE(over_z.torsion.empty());
        for (const auto& q : over_z.torsion) CHECK(q == 2);
        CHECK_FALSE(over_z.match);

        // inverting 2 clears it
        auto loc = Ring::integers_localized({2});
        auto cleared = flag_diagnostics(b3, law_by_name("multiplicative", d), d, loc);
        CHECK(cleared.torsion.empty());
        CHECK(cleared.match);
        CHECK(cleared.ring == "Z[1/2]");

        // so does passing to the rationals
        auto rat = flag_diagnostics(b3, law_by_name("multiplicative", d), d, Ring::rationals());
        CHECK(rat.torsion.empty());
        CHECK(rat.match);
    }

    // types A and C are torsion-free over Z for the multiplicative law too
    for (const auto& type : {"A2", "C2"}) {
        CAPTURE(type);
        auto f = flag_diagnostics(RootSystem::parse(type), law_by_name("multiplicative", 3), 3, Z());
        CHECK(f.match);
        CHECK(f.torsion.empty());
    }

    CHECK_THROWS_AS(flag_diagnostics(b3, law_by_name("multiplicative", 2), 2,
                                     Ring::integers_mod(5)),
                    DomainError);
}

TEST_CASE("flag reports serialize with stable keys") {
    auto f = flag_diagnostics(RootSystem::parse("A2"), law_by_name("additive", 2), 2, Z());
    auto text = flag_to_json(f);
    CHECK(text.find(R"("type":"A2")") != std::string::npos);
    CHECK(text.find(R"("d":2)") != std::string::npos);
    CHECK(text.find(R"("fgl_from":"additive")") != std::string::npos);
    CHECK(text.find(R"("rank":2)") != std::string::npos);
    CHECK(text.find(R"("expected_rank":2)") != std::string::npos);
    CHECK(text.find(R"("torsion":[])") != std::string::npos);
    CHECK(text.find("wall_ms") == std::string::npos);
    CHECK(text == flag_to_json(f));
}

TEST_CASE("annihilator bound") {
    auto fwd = tau_named("B3", "multiplicative", "additive", 2);
    auto bwd = tau_named("B3", "additive", "multiplicative", 2);
    CHECK(annihilator_bound(fwd, bwd, 1) == 2);
    CHECK(annihilator_bound(fwd, bwd, 3) == 6);

    // degree one is torsion-free regardless of the reference
    auto f1 = tau_named("B3", "multiplicative", "additive", 1);
    auto b1 = tau_named("B3", "additive", "multiplicative", 1);
    CHECK(annihilator_bound(f1, b1, 5) == 1);

    // structural validation
    auto wrong_type = tau_named("C2", "multiplicative", "additive", 2);
    CHECK_THROWS_AS(annihilator_bound(wrong_type, bwd, 1), StructuralError);
    CHECK_THROWS_AS(annihilator_bound(fwd, fwd, 1), StructuralError);  // not a round trip
    CHECK_THROWS_AS(annihilator_bound(fwd, bwd, 0), StructuralError);
}
