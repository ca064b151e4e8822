#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "fgx/series.hpp"

using namespace fgx;

namespace {

RingPtr Z = Ring::integers();
RingPtr Q = Ring::rationals();

TruncatedSeries var(const RingPtr& r, int nvars, int trunc, int i) {
    return TruncatedSeries::variable(r, nvars, trunc, i);
}

/* Independent dense polynomial product, reduced into the truncation window
   afterwards: the oracle for the sparse truncating multiply. */
std::map<Expo, long> naive_mul(const std::map<Expo, long>& a, const std::map<Expo, long>& b,
                               int trunc) {
    std::map<Expo, long> out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (total_degree(e) > trunc) continue;
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<Expo, long> to_map(const TruncatedSeries& s) {
    std::map<Expo, long> out;
    for (const auto& [e, c] : s.terms()) out[e] = c.integer_value().get_si();
    return out;
}

TruncatedSeries random_series(std::mt19937& rng, int nvars, int trunc, bool zero_constant) {
    TruncatedSeries s(Z, nvars, trunc);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int d = zero_constant ? 1 : 0; d <= trunc; ++d)
        for (const Expo& e : monomials_of_degree(nvars, d))
            if (int c = coeff(rng); c != 0) s.set_coeff(e, ring_int(Z, c));
    return s;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("monomial enumeration is grlex-sorted and complete") {
    GrlexLess less;
    for (int nvars = 1; nvars <= 4; ++nvars) {
        for (int d = 0; d <= 5; ++d) {
            auto mons = monomials_of_degree(nvars, d);
            CHECK(mons.size() == (size_t)binom(nvars + d - 1, d));
            for (size_t i = 0; i < mons.size(); ++i) {
                CHECK(total_degree(mons[i]) == d);
                if (i) CHECK(less(mons[i - 1], mons[i]));
            }
        }
    }
    /* x1^2 leads its degree block */
    auto m = monomials_of_degree(2, 2);
    CHECK(m[0] == Expo{2, 0});
    CHECK(m[1] == Expo{1, 1});
    CHECK(m[2] == Expo{0, 2});
}

TEST_CASE("arithmetic basics") {
    auto u = var(Z, 2, 4, 0), v = var(Z, 2, 4, 1);
    auto f = u + v;
    auto g = u - v;
    CHECK((f + g) == u.scalar_mul(ring_int(Z, 2)));
    CHECK((f * g) == u * u - v * v);
    CHECK((-f) + f == TruncatedSeries(Z, 2, 4));
    CHECK((-f) == TruncatedSeries(Z, 2, 4) - u - v);
    CHECK(f.coeff({1, 0}) == ring_one(Z));
    CHECK(f.coeff({2, 0}).is_zero());
    CHECK(!f.is_zero());
    CHECK((f - f).is_zero());
}

TEST_CASE("multiplication truncates at total degree") {
    auto u = var(Z, 1, 3, 0);
    auto p = u * u * u;
    CHECK(p.coeff({3}) == ring_one(Z));
    CHECK((p * u).is_zero());  // degree 4 falls outside the window
}

TEST_CASE("product matches a dense polynomial oracle on random inputs") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 40; ++iter) {
        int nvars = 1 + (int)(rng() % 3);
        int trunc = 2 + (int)(rng() % 4);
        auto a = random_series(rng, nvars, trunc, false);
        auto b = random_series(rng, nvars, trunc, false);
        auto expect = naive_mul(to_map(a), to_map(b), trunc);
        CHECK(to_map(a * b) == expect);
    }
}

TEST_CASE("ring and shape mismatches are structural errors") {
    auto u = var(Z, 2, 4, 0);
    CHECK_THROWS_AS(u + var(Z, 2, 5, 0), StructuralError);
    CHECK_THROWS_AS(u + var(Z, 3, 4, 0), StructuralError);
    CHECK_THROWS_AS(u + var(Q, 2, 4, 0), StructuralError);
    CHECK_THROWS_AS(u.set_coeff({5, 0}, ring_one(Z)), StructuralError);
}

TEST_CASE("substitution composes correctly") {
    /* f(t) = t^2, g = x + x^2 => f(g) = x^2 + 2x^3 + x^4 */
    auto t = var(Z, 1, 4, 0);
    auto f = t * t;
    auto x = var(Z, 1, 4, 0);
    auto got = f.substitute({x + x * x});
    TruncatedSeries want(Z, 1, 4);
    want.set_coeff({2}, ring_int(Z, 1));
    want.set_coeff({3}, ring_int(Z, 2));
    want.set_coeff({4}, ring_int(Z, 1));
    CHECK(got == want);

    /* into a bigger space */
    auto a = var(Z, 2, 4, 0), b = var(Z, 2, 4, 1);
    auto h = f.substitute({a + b});
    CHECK(h.coeff({1, 1}) == ring_int(Z, 2));
    CHECK(h.nvars() == 2);
}

TEST_CASE("substitution requires zero constant terms") {
    auto t = var(Z, 1, 3, 0);
    auto one = TruncatedSeries::constant(Z, 1, 3, ring_one(Z));
    CHECK_THROWS_AS(t.substitute({t + one}), DomainError);
}

TEST_CASE("substitution is a ring map on random inputs") {
    std::mt19937 rng(77003);
    for (int iter = 0; iter < 15; ++iter) {
        int trunc = 3 + (int)(rng() % 3);
        auto f = random_series(rng, 2, trunc, false);
        auto g = random_series(rng, 2, trunc, false);
        auto h1 = random_series(rng, 2, trunc, true);
        auto h2 = random_series(rng, 2, trunc, true);
        std::vector<TruncatedSeries> imgs = {h1, h2};
        CHECK((f * g).substitute(imgs) == f.substitute(imgs) * g.substitute(imgs));
        CHECK((f + g).substitute(imgs) == f.substitute(imgs) + g.substitute(imgs));
    }
}

TEST_CASE("unit inversion: geometric series and random two-sided check") {
    auto u = var(Z, 1, 6, 0);
    auto one = TruncatedSeries::constant(Z, 1, 6, ring_one(Z));
    auto inv = (one - u).invert_unit();
    for (int k = 0; k <= 6; ++k) CHECK(inv.coeff({(unsigned)k}) == ring_one(Z));

    std::mt19937 rng(5150);
    for (int iter = 0; iter < 10; ++iter) {
        auto f = random_series(rng, 2, 4, true) + TruncatedSeries::constant(Z, 2, 4, ring_int(Z, -1));
        auto g = f.invert_unit();
        auto prod = f * g;
        CHECK(prod == TruncatedSeries::constant(Z, 2, 4, ring_one(Z)));
    }

    CHECK_THROWS_AS(u.invert_unit(), DomainError);  // constant term 0
    auto two = TruncatedSeries::constant(Z, 1, 6, ring_int(Z, 2));
    CHECK_THROWS_AS(two.invert_unit(), DomainError);  // 2 not a unit in Z
    auto twoq = TruncatedSeries::constant(Q, 1, 6, ring_int(Q, 2));
    CHECK((twoq.invert_unit().constant_term() == ring_rational(Q, mpq_class(1, 2))));
}

TEST_CASE("homogeneous part and valuation") {
    auto u = var(Z, 2, 4, 0), v = var(Z, 2, 4, 1);
    auto f = u * v + u * u * u;
    CHECK(f.valuation() == 2);
    CHECK(f.homogeneous_part(2) == u * v);
    CHECK(f.homogeneous_part(3) == u * u * u);
    CHECK(f.homogeneous_part(4).is_zero());
    CHECK(!TruncatedSeries(Z, 2, 4).valuation().has_value());
}

TEST_CASE("variable slicing") {
    auto u = var(Z, 2, 4, 0), v = var(Z, 2, 4, 1);
    auto F = u + v - u * v;  // multiplicative shape
    auto slice = F.extract_var_power(1, 1);  // v-linear part: 1 - u (times v)
    auto g = slice.drop_var(1);
    CHECK(g.nvars() == 1);
    CHECK(g.coeff({0}) == ring_one(Z));
    CHECK(g.coeff({1}) == ring_int(Z, -1));
    CHECK_THROWS_AS(F.drop_var(1), StructuralError);  // v still occurs
}

TEST_CASE("derivative and integration") {
    auto u = var(Q, 1, 4, 0);
    auto f = u * u * u;  // u^3
    auto df = f.partial_derivative(0);
    CHECK(df.coeff({2}) == ring_int(Q, 3));

    /* integrate 1 + u + u^2 -> u + u^2/2 + u^3/3 */
    auto g = TruncatedSeries::constant(Q, 1, 4, ring_one(Q)) + u + u * u;
    auto I = g.integrate_univar();
    CHECK(I.coeff({1}) == ring_one(Q));
    CHECK(I.coeff({2}) == ring_rational(Q, mpq_class(1, 2)));
    CHECK(I.coeff({3}) == ring_rational(Q, mpq_class(1, 3)));

    /* a degree-trunc term has no home after integration */
    auto top = u * u * u * u;
    CHECK_THROWS_AS(top.integrate_univar(), DomainError);

    /* characteristic 5 cannot integrate */
    RingPtr F5 = Ring::integers_mod(5);
    auto h = TruncatedSeries::constant(F5, 1, 3, ring_one(F5));
    CHECK_THROWS_AS(h.integrate_univar(), DomainError);
}

TEST_CASE("integers mod m arithmetic flows through series") {
    RingPtr F7 = Ring::integers_mod(7);
    auto u = var(F7, 1, 3, 0);
    auto f = u.scalar_mul(ring_int(F7, 3)) + u.scalar_mul(ring_int(F7, 4));
    CHECK(f.is_zero());  // 3+4 = 0 mod 7
    auto g = u.scalar_mul(ring_int(F7, 5)) * u.scalar_mul(ring_int(F7, 3));
    CHECK(g.coeff({2}) == ring_int(F7, 1));  // 15 = 1 mod 7
}

TEST_CASE("ring conversion embeds Z into Q") {
    auto u = var(Z, 1, 3, 0);
    auto f = u + u * u;
    auto fq = f.convert_ring(Q);
    CHECK(same_ring(fq.ring(), Q));
    CHECK(fq.coeff({2}) == ring_one(Q));
    CHECK_THROWS_AS(f.convert_ring(Ring::poly_over_integers({"s"})), StructuralError);
}

TEST_CASE("rendering is deterministic and canonical") {
    auto u = var(Z, 2, 4, 0), v = var(Z, 2, 4, 1);
    auto f = v * v - u + v * u;
    CHECK(f.to_string({"u", "v"}) == "-u + u*v + v^2");
    CHECK(TruncatedSeries(Z, 2, 4).to_string({"u", "v"}) == "0");
}
