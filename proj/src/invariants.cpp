#include "fgx/invariants.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fgx {

namespace {

using Multiset = std::vector<std::vector<mpz_class>>;  // kept sorted

Multiset sorted_multiset(Multiset m) {
    std::sort(m.begin(), m.end());
    return m;
}

/* All distinct Weyl images of a weight multiset (images are multisets again;
   the set is closed under every simple reflection). */
std::set<Multiset> multiset_orbit(const RootSystem& rs, const Multiset& start) {
    std::set<Multiset> seen;
    std::queue<Multiset> todo;
    seen.insert(start);
    todo.push(start);
    while (!todo.empty()) {
        Multiset cur = todo.front();
        todo.pop();
        for (int i = 0; i < rs.rank(); ++i) {
            Multiset img;
            img.reserve(cur.size());
            for (const auto& w : cur) img.push_back(rs.simple_reflect(i, w));
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second) todo.push(img);
        }
    }
    return seen;
}

FgaElement sum_over_states(const FgaCtxPtr& ctx, const std::set<Multiset>& states) {
    TruncatedSeries acc(ctx->ring(), ctx->nvars(), ctx->trunc());
    for (const Multiset& st : states) {
        TruncatedSeries prod = TruncatedSeries::constant(ctx->ring(), ctx->nvars(), ctx->trunc(),
                                                         ring_one(ctx->ring()));
        for (const auto& w : st) prod *= ctx->x_of_weight(w);
        acc += prod;
    }
    return FgaElement(ctx, std::move(acc));
}

std::string weight_str(const std::vector<mpz_class>& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

std::string multiset_str(const Multiset& m) {
    std::string s = "rho{";
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += " ";
        s += weight_str(m[i]);
    }
    return s + "}";
}

std::string monomial_str(const Expo& e) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    return first ? "1" : os.str();
}

/* e_0..e_upto of the given elements, by the standard one-pass recurrence. */
std::vector<FgaElement> elementary_symmetric(const FgaCtxPtr& ctx,
                                             const std::vector<FgaElement>& ys, int upto) {
    std::vector<FgaElement> e(upto + 1, FgaElement::zero(ctx));
    e[0] = FgaElement::one(ctx);
    int used = 0;
    for (const FgaElement& y : ys) {
        ++used;
        for (int k = std::min(used, upto); k >= 1; --k) e[k] = e[k] + e[k - 1] * y;
    }
    return e;
}

std::vector<mpz_class> negate_weight(const std::vector<mpz_class>& w) {
    std::vector<mpz_class> r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = -w[i];
    return r;
}

/* Short-root representatives for G2 in fundamental-weight coordinates; the
   six short roots are these and their negatives. */
std::vector<std::vector<mpz_class>> g2_short_reps() {
    return {{mpz_class(1), mpz_class(0)}, {mpz_class(-1), mpz_class(1)}, {mpz_class(-2), mpz_class(1)}};
}

} // namespace

std::string policy_name(PoolPolicy p) {
    switch (p) {
        case PoolPolicy::ThetaOnly: return "theta_only";
        case PoolPolicy::OrbitSums: return "orbit_sums";
        case PoolPolicy::Combined: return "combined";
    }
    throw StructuralError("policy_name: bad enum");
}

PoolPolicy parse_policy(const std::string& s) {
    if (s == "theta_only") return PoolPolicy::ThetaOnly;
    if (s == "orbit_sums") return PoolPolicy::OrbitSums;
    if (s == "combined") return PoolPolicy::Combined;
    throw StructuralError("unknown pool policy: " + s);
}

std::string certainty_name(LatticeCertainty c) {
    return c == LatticeCertainty::Exact ? "exact" : "subgroup";
}

GeneratorPool GeneratorPool::default_for(const RootSystem& rs, int d) {
    GeneratorPool pool;
    std::set<std::vector<mpz_class>> seeds;
    for (int i = 0; i < rs.rank(); ++i)
        for (auto& w : rs.weyl_orbit(rs.fundamental_weight(i))) seeds.insert(w);
    pool.seeds.assign(seeds.begin(), seeds.end());
    pool.max_length = d;
    pool.policy = PoolPolicy::Combined;
    return pool;
}

GeneratorPool GeneratorPool::from_json_file(const std::string& path, const RootSystem& rs) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open pool file: " + path);
    nlohmann::json j;
    in >> j;
    GeneratorPool pool;
    if (!j.contains("weights") || !j["weights"].is_array())
        throw StructuralError("pool file: missing \"weights\" array");
    for (const auto& jw : j["weights"]) {
        if (!jw.is_array() || (int)jw.size() != rs.rank())
            throw StructuralError("pool file: weight vector of wrong length");
        std::vector<mpz_class> w;
        bool nonzero = false;
        for (const auto& c : jw) {
            if (!c.is_number_integer()) throw StructuralError("pool file: non-integer weight entry");
            w.emplace_back((long)c.get<long long>());
            if (w.back() != 0) nonzero = true;
        }
        if (!nonzero) throw StructuralError("pool file: zero weight not allowed");
        pool.seeds.push_back(std::move(w));
    }
    std::sort(pool.seeds.begin(), pool.seeds.end());
    pool.seeds.erase(std::unique(pool.seeds.begin(), pool.seeds.end()), pool.seeds.end());
    pool.max_length = j.value("max_length", 0);
    pool.policy = parse_policy(j.value("policy", std::string("combined")));
    return pool;
}

FgaElement orbit_sum(const FgaCtxPtr& ctx, const std::vector<std::vector<mpz_class>>& weights) {
    if (weights.empty()) throw StructuralError("orbit_sum: empty multiset");
    for (const auto& w : weights)
        if ((int)w.size() != ctx->root_system().rank())
            throw StructuralError("orbit_sum: weight has wrong rank");
    auto states = multiset_orbit(ctx->root_system(), sorted_multiset(weights));
    return sum_over_states(ctx, states);
}

int theta_count(const RootSystem& rs) { return rs.type() == RootType::G2 ? 2 : rs.rank(); }

int theta_degree(const RootSystem& rs, int i) {
    if (i < 1 || i > theta_count(rs)) throw StructuralError("theta_degree: index out of range");
    switch (rs.type()) {
        case RootType::A: return i + 1;
        case RootType::B:
        case RootType::C: return 2 * i;
        case RootType::D: return i < rs.rank() ? 2 * i : rs.rank();
        case RootType::G2: return i == 1 ? 2 : 6;
    }
    throw StructuralError("theta_degree: bad type");
}

FgaElement theta(const FgaCtxPtr& ctx, int i) {
    const RootSystem& rs = ctx->root_system();
    if (i < 1 || i > theta_count(rs)) throw StructuralError("theta: index out of range");
    switch (rs.type()) {
        case RootType::A: {
            std::vector<FgaElement> ys;
            for (const auto& e : rs.e_basis_weights()) ys.push_back(FgaElement::x_of_weight(ctx, e));
            return elementary_symmetric(ctx, ys, i + 1)[i + 1];
        }
        case RootType::B:
        case RootType::C: {
            std::vector<FgaElement> ys;
            for (const auto& e : rs.e_basis_weights())
                ys.push_back(FgaElement::x_of_weight(ctx, e) *
                             FgaElement::x_of_weight(ctx, negate_weight(e)));
            return elementary_symmetric(ctx, ys, i)[i];
        }
        case RootType::D: {
            auto basis = rs.e_basis_weights();
            if (i < rs.rank()) {
                std::vector<FgaElement> ys;
                for (const auto& e : basis)
                    ys.push_back(FgaElement::x_of_weight(ctx, e) *
                                 FgaElement::x_of_weight(ctx, negate_weight(e)));
                return elementary_symmetric(ctx, ys, i)[i];
            }
            FgaElement prod = FgaElement::one(ctx);
            for (const auto& e : basis)
                prod = prod * (FgaElement::x_of_weight(ctx, e) -
                               FgaElement::x_of_weight(ctx, negate_weight(e)));
            return prod;
        }
        case RootType::G2: {
            auto reps = g2_short_reps();
            if (i == 1) {
                FgaElement acc = FgaElement::zero(ctx);
                for (const auto& u : reps)
                    acc = acc + FgaElement::x_of_weight(ctx, u) *
                                    FgaElement::x_of_weight(ctx, negate_weight(u));
                return acc;
            }
            FgaElement prod = FgaElement::one(ctx);
            for (const auto& u : reps) {
                prod = prod * FgaElement::x_of_weight(ctx, u);
                prod = prod * FgaElement::x_of_weight(ctx, negate_weight(u));
            }
            return prod;
        }
    }
    throw StructuralError("theta: bad type");
}

ThetaFamily theta_family(const FgaCtxPtr& ctx) {
    ThetaFamily fam;
    for (int i = 1; i <= theta_count(ctx->root_system()); ++i) {
        fam.elems.push_back(theta(ctx, i));
        fam.degrees.push_back(theta_degree(ctx->root_system(), i));
    }
    return fam;
}

std::vector<InvariantGenerator> invariant_generators(const FgaCtxPtr& ctx,
                                                     const GeneratorPool& pool, int d) {
    if (d < 0) throw StructuralError("invariant_generators: negative degree");
    std::vector<InvariantGenerator> gens;

    if (pool.policy != PoolPolicy::OrbitSums) {
        for (int i = 1; i <= theta_count(ctx->root_system()); ++i)
            if (theta_degree(ctx->root_system(), i) <= d)
                gens.push_back({"theta_" + std::to_string(i), theta(ctx, i)});
    }

    if (pool.policy != PoolPolicy::ThetaOnly && !pool.seeds.empty()) {
        std::vector<std::vector<mpz_class>> seeds = pool.seeds;
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
        int maxlen = pool.max_length > 0 ? std::min(pool.max_length, d) : d;

        std::set<Multiset> visited;
        Multiset cur;
        /* Non-decreasing index tuples enumerate each multiset exactly once;
           whole orbits are retired in one step via the visited set. */
        auto rec = [&](auto&& self, size_t from, int remaining) -> void {
            if (!cur.empty()) {
                Multiset key = sorted_multiset(cur);
                if (!visited.count(key)) {
                    auto states = multiset_orbit(ctx->root_system(), key);
                    visited.insert(states.begin(), states.end());
                    FgaElement elem = sum_over_states(ctx, states);
                    auto val = elem.valuation();
                    if (val && *val <= d) gens.push_back({multiset_str(key), elem});
                }
            }
            if (remaining == 0) return;
            for (size_t i = from; i < seeds.size(); ++i) {
                cur.push_back(seeds[i]);
                self(self, i, remaining - 1);
                cur.pop_back();
            }
        };
        rec(rec, 0, maxlen);
    }
    return gens;
}

GradedSliceMatrix graded_invariant_matrix(const FgaCtxPtr& ctx,
                                          const std::vector<InvariantGenerator>& gens, int d,
                                          PoolPolicy policy) {
    if (ctx->ring()->kind() != RingKind::Integers)
        throw DomainError("graded_invariant_matrix: integer coefficients required");
    if (d < 0 || d > ctx->trunc())
        throw StructuralError("graded_invariant_matrix: degree out of range");

    std::vector<Expo> mons = monomials_of_degree(ctx->nvars(), d);
    std::map<Expo, int, GrlexLess> idx;
    for (size_t c = 0; c < mons.size(); ++c) idx[mons[c]] = (int)c;

    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::string> prov;
    for (const auto& gen : gens) {
        auto val = gen.elem.valuation();
        if (!val || *val > d) continue;
        int k = *val;
        TruncatedSeries lf = gen.elem.series().homogeneous_part(k);
        for (const Expo& m : monomials_of_degree(ctx->nvars(), d - k)) {
            std::vector<mpz_class> row(mons.size());
            bool nonzero = false;
            for (const auto& [e, c] : lf.terms()) {
                Expo shifted(e);
                for (size_t t = 0; t < shifted.size(); ++t) shifted[t] += m[t];
                row[idx.at(shifted)] = c.integer_value();
                nonzero = true;
            }
            if (!nonzero) continue;
            rows.push_back(std::move(row));
            prov.push_back(d - k > 0 ? gen.label + "*" + monomial_str(m) : gen.label);
        }
    }

    GradedSliceMatrix out;
    out.d = d;
    out.rows = rows.empty() ? IntMat(0, (int)mons.size()) : IntMat::from_rows(rows);
    out.provenance = std::move(prov);
    RootType t = ctx->root_system().type();
    out.certainty = (policy != PoolPolicy::OrbitSums && (t == RootType::A || t == RootType::C))
                        ? LatticeCertainty::Exact
                        : LatticeCertainty::Subgroup;
    return out;
}

IntMat symmetric_invariants(const RootSystem& rs, int k) {
    if (k < 0) throw StructuralError("symmetric_invariants: negative degree");
    int n = rs.rank();
    std::vector<Expo> mons = monomials_of_degree(n, k);
    int m = (int)mons.size();
    std::map<Expo, int, GrlexLess> idx;
    for (int c = 0; c < m; ++c) idx[mons[c]] = c;

    RingPtr Z = Ring::integers();
    IntMat stacked(n * m, m);
    for (int i = 0; i < n; ++i) {
        auto R = rs.reflection_matrix(i);
        std::vector<TruncatedSeries> imgs;
        for (int j = 0; j < n; ++j) {
            TruncatedSeries img(Z, n, k);
            for (int t = 0; t < n; ++t) {
                if (!R[t][j]) continue;
                Expo e(n, 0);
                e[t] = 1;
                img.set_coeff(e, ring_int(Z, R[t][j]));
            }
            imgs.push_back(std::move(img));
        }
        for (int col = 0; col < m; ++col) {
            TruncatedSeries prod = TruncatedSeries::constant(Z, n, k, ring_one(Z));
            for (int j = 0; j < n; ++j)
                if (mons[col][j]) prod *= imgs[j].pow((int)mons[col][j]);
            for (const auto& [e, c] : prod.terms()) stacked.at(i * m + idx.at(e), col) = c.integer_value();
            stacked.at(i * m + col, col) -= 1;
        }
    }
    return right_kernel(stacked);
}

GradedSliceMatrix additive_invariant_slice(const RootSystem& rs, int d) {
    if (d < 0) throw StructuralError("additive_invariant_slice: negative degree");
    int n = rs.rank();
    std::vector<Expo> mons = monomials_of_degree(n, d);
    std::map<Expo, int, GrlexLess> idx;
    for (size_t c = 0; c < mons.size(); ++c) idx[mons[c]] = (int)c;

    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::string> prov;
    for (int k = 1; k <= d; ++k) {
        IntMat K = symmetric_invariants(rs, k);
        std::vector<Expo> monsk = monomials_of_degree(n, k);
        for (int j = 0; j < K.nrows; ++j) {
            for (const Expo& m : monomials_of_degree(n, d - k)) {
                std::vector<mpz_class> row(mons.size());
                for (size_t c = 0; c < monsk.size(); ++c) {
                    if (K.at(j, (int)c) == 0) continue;
                    Expo shifted(monsk[c]);
                    for (size_t t = 0; t < shifted.size(); ++t) shifted[t] += m[t];
                    row[idx.at(shifted)] = K.at(j, (int)c);
                }
                rows.push_back(std::move(row));
                std::string label = "sinv[" + std::to_string(k) + "]." + std::to_string(j + 1);
                prov.push_back(d - k > 0 ? label + "*" + monomial_str(m) : label);
            }
        }
    }

    GradedSliceMatrix out;
    out.d = d;
    out.rows = rows.empty() ? IntMat(0, (int)mons.size()) : IntMat::from_rows(rows);
    out.provenance = std::move(prov);
    out.certainty = LatticeCertainty::Exact;
    return out;
}

ThetaAlphaRows theta_alpha_e_rows(const RootSystem& rs, int d) {
    if (rs.type() != RootType::B && rs.type() != RootType::D)
        throw StructuralError("theta_alpha_e_rows: types B and D only");
    if (d < 0) throw StructuralError("theta_alpha_e_rows: negative degree");
    int n = rs.rank();
    RingPtr Z = Ring::integers();

    /* Additive-law theta leading forms are exact polynomials in the
       e-variables: e_i of the squares (up to sign) and, for D_n, the product
       of the doubled variables. */
    std::vector<TruncatedSeries> T;
    std::vector<int> degs;
    {
        std::vector<TruncatedSeries> e(n + 1, TruncatedSeries(Z, n, d));
        e[0] = TruncatedSeries::constant(Z, n, d, ring_one(Z));
        for (int j = 0; j < n; ++j) {
            TruncatedSeries y(Z, n, d);
            Expo sq(n, 0);
            sq[j] = 2;
            if (d >= 2) y.set_coeff(sq, ring_int(Z, -1));
            for (int k = std::min(j + 1, n); k >= 1; --k) e[k] = e[k] + e[k - 1] * y;
        }
        int top = rs.type() == RootType::D ? n - 1 : n;
        for (int i = 1; i <= top; ++i) {
            T.push_back(e[i]);
            degs.push_back(2 * i);
        }
        if (rs.type() == RootType::D) {
            TruncatedSeries prod = TruncatedSeries::constant(Z, n, d, ring_one(Z));
            for (int j = 0; j < n; ++j) {
                TruncatedSeries twice(Z, n, d);
                Expo v(n, 0);
                v[j] = 1;
                if (d >= 1) twice.set_coeff(v, ring_int(Z, 2));
                prod *= twice;
            }
            T.push_back(prod);
            degs.push_back(n);
        }
    }

    std::vector<Expo> mons = monomials_of_degree(n, d);
    std::map<Expo, int, GrlexLess> idx;
    for (size_t c = 0; c < mons.size(); ++c) idx[mons[c]] = (int)c;

    ThetaAlphaRows out;
    std::vector<std::vector<mpz_class>> rows;
    std::vector<int> alpha(T.size(), 0);
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (i == T.size()) {
            if (remaining != 0) return;
            TruncatedSeries prod = TruncatedSeries::constant(Z, n, d, ring_one(Z));
            for (size_t t = 0; t < T.size(); ++t)
                if (alpha[t]) prod *= T[t].pow(alpha[t]);
            std::vector<mpz_class> row(mons.size());
            for (const auto& [e, c] : prod.terms()) row[idx.at(e)] = c.integer_value();
            rows.push_back(std::move(row));
            out.alphas.push_back(alpha);
            return;
        }
        for (int a = 0; a * degs[i] <= remaining; ++a) {
            alpha[i] = a;
            self(self, i + 1, remaining - a * degs[i]);
        }
        alpha[i] = 0;
    };
    rec(rec, 0, d);
    out.rows = rows.empty() ? IntMat(0, (int)mons.size()) : IntMat::from_rows(rows);
    return out;
}

} // namespace fgx
