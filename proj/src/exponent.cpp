#include "fgx/exponent.hpp"

#include <chrono>

#include "json.hpp"

namespace fgx {

namespace {

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    l = a / g * b;
    return l;
}

long to_long_checked(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw DomainError(std::string(what) + ": value too large to serialize");
    return v.get_si();
}

/* Strip every power of the given primes from each divisor; keep those still
   greater than one. */
std::vector<mpz_class> localize_divisors(const std::vector<mpz_class>& divs,
                                         const std::vector<mpz_class>& primes) {
    std::vector<mpz_class> out;
    for (mpz_class d : divs) {
        for (const mpz_class& p : primes)
            while (d % p == 0) d /= p;
        if (d > 1) out.push_back(d);
    }
    return out;
}

} // namespace

std::string tau_certainty_name(TauCertainty c) {
    switch (c) {
        case TauCertainty::Exact: return "EXACT";
        case TauCertainty::MultipleOfTrueTau: return "MULTIPLE_OF_TRUE_TAU";
        case TauCertainty::GeneratorLimited: return "GENERATOR_LIMITED";
    }
    throw StructuralError("tau_certainty_name: bad enum");
}

TauCertainty parse_tau_certainty(const std::string& s) {
    if (s == "EXACT") return TauCertainty::Exact;
    if (s == "MULTIPLE_OF_TRUE_TAU") return TauCertainty::MultipleOfTrueTau;
    if (s == "GENERATOR_LIMITED") return TauCertainty::GeneratorLimited;
    throw StructuralError("unknown tau certainty: " + s);
}

GradedSliceMatrix side_lattice(const RootSystem& rs, const FormalGroupLaw& law, int d,
                               const GeneratorPool* pool) {
    if (law.ring()->kind() != RingKind::Integers)
        throw DomainError("side_lattice: integer coefficients required");
    if (law.trunc() < d) throw StructuralError("side_lattice: truncation below requested degree");
    if (law.is_additive()) return additive_invariant_slice(rs, d);
    GeneratorPool p = pool ? *pool : GeneratorPool::default_for(rs, d);
    FgaCtxPtr ctx = make_context(rs, law);
    auto gens = invariant_generators(ctx, p, d);
    GradedSliceMatrix out = graded_invariant_matrix(ctx, gens, d, p.policy);
    /* The Weyl group fixes no nonzero vector of the reflection representation,
       so the true slice below degree 2 is zero: an empty matrix there is exact
       no matter how the pool was chosen. */
    if (d <= 1 && out.rows.nrows == 0) out.certainty = LatticeCertainty::Exact;
    return out;
}

ExponentReport tau(const RootSystem& rs, const FormalGroupLaw& from, const FormalGroupLaw& to,
                   int d, const GeneratorPool* pool) {
    auto t0 = std::chrono::steady_clock::now();
    if (d < 0) throw StructuralError("tau: negative degree");

    GradedSliceMatrix L = side_lattice(rs, from, d, pool);
    GradedSliceMatrix Lp = side_lattice(rs, to, d, pool);

    mpz_class t = 1;
    for (int i = 0; i < Lp.rows.nrows; ++i) {
        auto o = order_mod_lattice(Lp.rows.row(i), L.rows);
        if (!o) throw DomainError("tau: rational spans differ - enlarge pool");
        t = lcm(t, *o);
    }

    ExponentReport r;
    r.type = rs.name();
    r.d = d;
    r.fgl_from = from.name();
    r.fgl_to = to.name();
    r.tau = t;
    if (L.certainty == LatticeCertainty::Exact && Lp.certainty == LatticeCertainty::Exact)
        r.certainty = TauCertainty::Exact;
    else if (Lp.certainty == LatticeCertainty::Exact)
        r.certainty = TauCertainty::MultipleOfTrueTau;
    else
        r.certainty = TauCertainty::GeneratorLimited;
    r.elementary_divisors = quotient_divisors(L.rows, Lp.rows);
    r.source_rows = L.rows.nrows;
    r.target_rows = Lp.rows.nrows;
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string exponent_to_json(const ExponentReport& r) {
    nlohmann::ordered_json j;
    j["type"] = r.type;
    j["d"] = r.d;
    j["fgl_from"] = r.fgl_from;
    j["fgl_to"] = r.fgl_to;
    j["tau"] = to_long_checked(r.tau, "tau");
    j["exactness"] = tau_certainty_name(r.certainty);
    std::vector<long> divs;
    for (const auto& v : r.elementary_divisors) divs.push_back(to_long_checked(v, "divisor"));
    j["elementary_divisors"] = divs;
    j["source_rows"] = r.source_rows;
    j["target_rows"] = r.target_rows;
    return j.dump();
}

ExponentReport exponent_from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        ExponentReport r;
        r.type = j.at("type").get<std::string>();
        r.d = j.at("d").get<int>();
        r.fgl_from = j.at("fgl_from").get<std::string>();
        r.fgl_to = j.at("fgl_to").get<std::string>();
        r.tau = mpz_class((long)j.at("tau").get<long long>());
        r.certainty = parse_tau_certainty(j.at("exactness").get<std::string>());
        for (const auto& v : j.at("elementary_divisors"))
            r.elementary_divisors.emplace_back((long)v.get<long long>());
        r.source_rows = j.value("source_rows", 0);
        r.target_rows = j.value("target_rows", 0);
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("exponent report: ") + e.what());
    }
}

FlagReport flag_diagnostics(const RootSystem& rs, const FormalGroupLaw& law, int d,
                            const RingPtr& ring, const GeneratorPool* pool) {
    if (d < 0) throw StructuralError("flag_diagnostics: negative degree");
    if (ring->kind() != RingKind::Integers && ring->kind() != RingKind::Rationals &&
        ring->kind() != RingKind::IntegersLocalized)
        throw DomainError("flag_diagnostics: ring must be Z, Q, or a localization Z[1/p,...]");

    GradedSliceMatrix L = side_lattice(rs, law, d, pool);
    SnfResult s = snf(L.rows);

    FlagReport r;
    r.type = rs.name();
    r.d = d;
    r.fgl = law.name();
    r.ring = ring->name();
    r.rank = L.rows.ncols - s.rank;
    std::vector<mpz_class> tors;
    for (const auto& v : s.divisors)
        if (v > 1) tors.push_back(v);
    if (ring->kind() == RingKind::Rationals)
        tors.clear();
    else if (ring->kind() == RingKind::IntegersLocalized)
        tors = localize_divisors(tors, ring->inverted_primes());
    r.torsion = std::move(tors);
    auto counts = rs.length_counts();
    r.expected_rank = d < (int)counts.size() ? (int)counts[d] : 0;
    r.match = r.rank == r.expected_rank && r.torsion.empty();
    r.certainty = L.certainty;
    return r;
}

std::string flag_to_json(const FlagReport& r) {
    nlohmann::ordered_json j;
    j["type"] = r.type;
    j["d"] = r.d;
    j["fgl_from"] = r.fgl;
    j["rank"] = r.rank;
    j["expected_rank"] = r.expected_rank;
    std::vector<long> tors;
    for (const auto& v : r.torsion) tors.push_back(to_long_checked(v, "torsion"));
    j["torsion"] = tors;
    return j.dump();
}

mpz_class annihilator_bound(const ExponentReport& fwd, const ExponentReport& bwd,
                            const mpz_class& reference) {
    if (fwd.type != bwd.type || fwd.d != bwd.d)
        throw StructuralError("annihilator_bound: reports disagree on type or degree");
    if (fwd.fgl_from != bwd.fgl_to || fwd.fgl_to != bwd.fgl_from)
        throw StructuralError("annihilator_bound: reports are not a round trip");
    if (reference < 1) throw StructuralError("annihilator_bound: reference must be >= 1");
    if (fwd.d == 1) return 1;
    return fwd.tau * reference;
}

} // namespace fgx
