#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "fgx/rootsys.hpp"

using namespace fgx;

namespace {

std::vector<mpz_class> wt(const std::vector<long>& v) {
    return std::vector<mpz_class>(v.begin(), v.end());
}

std::vector<mpq_class> to_q(const std::vector<mpz_class>& v) {
    return std::vector<mpq_class>(v.begin(), v.end());
}

std::vector<RootSystem> sample_systems() {
    return {RootSystem(RootType::A, 2), RootSystem(RootType::A, 3),
            RootSystem(RootType::C, 2), RootSystem(RootType::C, 3),
            RootSystem(RootType::B, 3), RootSystem(RootType::D, 4),
            RootSystem(RootType::G2, 2)};
}

std::vector<mpz_class> random_weight(const RootSystem& rs, std::mt19937& gen) {
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<mpz_class> w(rs.rank());
    for (auto& x : w) x = d(gen);
    return w;
}

mpq_class e_norm2(const RootSystem& rs, const std::vector<mpz_class>& w) {
    auto c = rs.omega_to_e(to_q(w));
    if (rs.type() == RootType::A) {
        // type A coordinates live modulo the all-ones vector; take the
        // sum-zero representative so the norm is well-defined
        mpq_class mean = 0;
        for (const auto& x : c) mean += x;
        mean /= (long)c.size();
        for (auto& x : c) x -= mean;
    }
    mpq_class s = 0;
    for (const auto& x : c) s += x * x;
    return s;
}

}  // namespace

TEST_CASE("parsing and rank validation") {
    CHECK(RootSystem::parse("A2").type() == RootType::A);
    CHECK(RootSystem::parse("A2").rank() == 2);
    CHECK(RootSystem::parse("B3").name() == "B3");
    CHECK(RootSystem::parse("G2").type() == RootType::G2);
    CHECK(RootSystem::parse("D10").rank() == 10);

    CHECK_THROWS_AS(RootSystem::parse("A0"), StructuralError);
    CHECK_THROWS_AS(RootSystem::parse("C1"), StructuralError);
    CHECK_THROWS_AS(RootSystem::parse("B2"), StructuralError);
    CHECK_THROWS_AS(RootSystem::parse("D3"), StructuralError);
    CHECK_THROWS_AS(RootSystem::parse("G3"), StructuralError);
    CHECK_THROWS_AS(RootSystem::parse("E8"), StructuralError);
    CHECK_THROWS_AS(RootSystem::parse("Bx"), StructuralError);
    CHECK_THROWS_AS(RootSystem::parse("B"), StructuralError);
}

TEST_CASE("cartan matrices in Bourbaki numbering") {
    CHECK(RootSystem::parse("A2").cartan() ==
          std::vector<std::vector<int>>({{2, -1}, {-1, 2}}));
    CHECK(RootSystem::parse("B3").cartan() ==
          std::vector<std::vector<int>>({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
    CHECK(RootSystem::parse("C3").cartan() ==
          std::vector<std::vector<int>>({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
    CHECK(RootSystem::parse("D4").cartan() ==
          std::vector<std::vector<int>>(
              {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
    CHECK(RootSystem::parse("G2").cartan() ==
          std::vector<std::vector<int>>({{2, -3}, {-1, 2}}));

    // simple root j is column j; fundamental weights are unit vectors
    auto b3 = RootSystem::parse("B3");
    CHECK(b3.simple_root(0) == wt({2, -1, 0}));
    CHECK(b3.simple_root(2) == wt({0, -1, 2}));
    CHECK(b3.fundamental_weight(1) == wt({0, 1, 0}));
    CHECK_THROWS_AS(b3.simple_root(3), StructuralError);
}

TEST_CASE("simple reflections: involution, fixed weights, matrix form") {
    std::mt19937 gen(31704);
    for (const auto& rs : sample_systems()) {
        CAPTURE(rs.name());
        for (int i = 0; i < rs.rank(); ++i) {
            // s_i fixes omega_j for j != i and moves omega_i by alpha_i
            for (int j = 0; j < rs.rank(); ++j) {
                auto w = rs.fundamental_weight(j);
                auto sw = rs.simple_reflect(i, w);
                if (i != j) {
                    CHECK(sw == w);
                } else {
                    auto alpha = rs.simple_root(i);
                    for (int k = 0; k < rs.rank(); ++k) CHECK(sw[k] == w[k] - alpha[k]);
                }
            }
            auto mat = rs.reflection_matrix(i);
            for (int rep = 0; rep < 4; ++rep) {
                auto w = random_weight(rs, gen);
                auto sw = rs.simple_reflect(i, w);
                CHECK(rs.simple_reflect(i, sw) == w);
                // matrix acts the same way
                std::vector<mpz_class> mw(rs.rank(), 0);
                for (int r = 0; r < rs.rank(); ++r)
                    for (int c = 0; c < rs.rank(); ++c) mw[r] += mpz_class(mat[r][c]) * w[c];
                CHECK(mw == sw);
            }
        }
    }
}

TEST_CASE("act composes rightmost letter first") {
    auto g2 = RootSystem::parse("G2");
    std::mt19937 gen(5520);
    auto w = random_weight(g2, gen);
    auto expect = g2.simple_reflect(0, g2.simple_reflect(1, w));
    CHECK(g2.act({0, 1}, w) == expect);
    CHECK(g2.act({}, w) == w);
    // a reduced word for the longest element squares to the identity action
    std::vector<int> coxeter = {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1};
    CHECK(g2.act(coxeter, w) == w);  // (s0 s1)^6 = e in G2
}

TEST_CASE("weyl orbits: pinned B3 vector orbit, sizes, invariance") {
    auto b3 = RootSystem::parse("B3");
    // orbit of e_1 is {+-e_1, +-e_2, +-e_3}, in weight coordinates, sorted
    auto orb = b3.weyl_orbit(wt({1, 0, 0}));
    std::vector<std::vector<mpz_class>> expect = {
        wt({-1, 0, 0}), wt({-1, 1, 0}), wt({0, -1, 2}),
        wt({0, 1, -2}), wt({1, -1, 0}), wt({1, 0, 0})};
    CHECK(orb == expect);

    CHECK(b3.weyl_orbit(wt({0, 1, 0})).size() == 12);
    CHECK(b3.weyl_orbit(wt({0, 0, 1})).size() == 8);
    CHECK(b3.weyl_orbit(wt({0, 0, 0})).size() == 1);

    auto g2 = RootSystem::parse("G2");
    CHECK(g2.weyl_orbit(wt({1, 0})).size() == 6);
    CHECK(g2.weyl_orbit(wt({0, 1})).size() == 6);
    CHECK(g2.weyl_orbit(wt({1, 1})).size() == 12);

    auto a2 = RootSystem::parse("A2");
    CHECK(a2.weyl_orbit(wt({1, 0})).size() == 3);
    CHECK(a2.weyl_orbit(wt({1, 1})).size() == 6);

    // orbit size divides the group order; orbit is sorted, contains w,
    // and preserves the euclidean norm
    std::mt19937 gen(99021);
    for (const auto& rs : sample_systems()) {
        CAPTURE(rs.name());
        auto w = random_weight(rs, gen);
        auto o = rs.weyl_orbit(w);
        CHECK(std::is_sorted(o.begin(), o.end()));
        CHECK(std::count(o.begin(), o.end(), w) == 1);
        mpz_class order = rs.weyl_order_formula();
        CHECK(order % mpz_class((long)o.size()) == 0);
        auto n0 = e_norm2(rs, w);
        for (const auto& x : o) CHECK(e_norm2(rs, x) == n0);
    }
}

TEST_CASE("length counts: pins, palindromy, group order") {
    CHECK(RootSystem::parse("A2").length_counts() == std::vector<long>({1, 2, 2, 1}));
    CHECK(RootSystem::parse("C2").length_counts() == std::vector<long>({1, 2, 2, 2, 1}));
    CHECK(RootSystem::parse("G2").length_counts() ==
          std::vector<long>({1, 2, 2, 2, 2, 2, 1}));
    CHECK(RootSystem::parse("B3").length_counts() ==
          std::vector<long>({1, 3, 5, 7, 8, 8, 7, 5, 3, 1}));

    CHECK(RootSystem::parse("A3").weyl_order_formula() == 24);
    CHECK(RootSystem::parse("B3").weyl_order_formula() == 48);
    CHECK(RootSystem::parse("C3").weyl_order_formula() == 48);
    CHECK(RootSystem::parse("B4").weyl_order_formula() == 384);
    CHECK(RootSystem::parse("D4").weyl_order_formula() == 192);
    CHECK(RootSystem::parse("G2").weyl_order_formula() == 12);

    for (const auto& rs : sample_systems()) {
        CAPTURE(rs.name());
        auto counts = rs.length_counts();
        CHECK((long)counts.size() == rs.num_positive_roots() + 1);
        CHECK(counts.front() == 1);
        CHECK(counts.back() == 1);
        long total = std::accumulate(counts.begin(), counts.end(), 0L);
        CHECK(mpz_class(total) == rs.weyl_order_formula());
        for (size_t l = 0; l < counts.size(); ++l)
            CHECK(counts[l] == counts[counts.size() - 1 - l]);
    }

    CHECK(RootSystem::parse("B3").num_positive_roots() == 9);
    CHECK(RootSystem::parse("D4").num_positive_roots() == 12);
    CHECK(RootSystem::parse("G2").num_positive_roots() == 6);
    CHECK(RootSystem::parse("A3").num_positive_roots() == 6);
}

TEST_CASE("torsion primes") {
    CHECK(RootSystem::parse("A3").torsion_primes().empty());
    CHECK(RootSystem::parse("C3").torsion_primes().empty());
    CHECK(RootSystem::parse("B3").torsion_primes() == std::vector<int>{2});
    CHECK(RootSystem::parse("D4").torsion_primes() == std::vector<int>{2});
    CHECK(RootSystem::parse("G2").torsion_primes() == std::vector<int>{2});
}

TEST_CASE("euclidean realization round trips") {
    std::mt19937 gen(60613);
    for (const auto& rs : sample_systems()) {
        CAPTURE(rs.name());
        int expect_dim = rs.type() == RootType::A ? rs.rank() + 1
                       : rs.type() == RootType::G2 ? 3 : rs.rank();
        CHECK(rs.e_dim() == expect_dim);
        for (int rep = 0; rep < 6; ++rep) {
            auto w = to_q(random_weight(rs, gen));
            w[0] /= 2;  // exercise rational weights too
            CHECK(rs.e_to_omega(rs.omega_to_e(w)) == w);
        }
    }
}

TEST_CASE("e-basis weights per type") {
    auto b3 = RootSystem::parse("B3");
    CHECK(b3.e_basis_weights() ==
          std::vector<std::vector<mpz_class>>({wt({1, 0, 0}), wt({-1, 1, 0}), wt({0, -1, 2})}));
    auto c3 = RootSystem::parse("C3");
    CHECK(c3.e_basis_weights() ==
          std::vector<std::vector<mpz_class>>({wt({1, 0, 0}), wt({-1, 1, 0}), wt({0, -1, 1})}));
    auto d4 = RootSystem::parse("D4");
    CHECK(d4.e_basis_weights() ==
          std::vector<std::vector<mpz_class>>({wt({1, 0, 0, 0}), wt({-1, 1, 0, 0}),
                                               wt({0, -1, 1, 1}), wt({0, 0, -1, 1})}));
    auto a2 = RootSystem::parse("A2");
    CHECK(a2.e_basis_weights() ==
          std::vector<std::vector<mpz_class>>({wt({1, 0}), wt({-1, 1}), wt({0, -1})}));

    // each claimed weight really maps to the corresponding coordinate vector
    for (const auto& rs : sample_systems()) {
        if (rs.type() == RootType::G2) continue;
        CAPTURE(rs.name());
        auto basis = rs.e_basis_weights();
        REQUIRE((int)basis.size() == rs.e_dim());
        for (int i = 0; i < rs.e_dim(); ++i) {
            auto c = rs.omega_to_e(to_q(basis[i]));
            if (rs.type() == RootType::A) {
                // equality up to a multiple of the all-ones vector
                mpq_class shift = c[i] - 1;
                for (int j = 0; j < rs.e_dim(); ++j)
                    CHECK(c[j] == ((i == j) ? 1 : 0) + shift);
            } else {
                for (int j = 0; j < rs.e_dim(); ++j)
                    CHECK(c[j] == ((i == j) ? 1 : 0));
            }
        }
    }

    CHECK_THROWS_AS(RootSystem::parse("G2").e_basis_weights(), DomainError);
}

TEST_CASE("simple roots in euclidean coordinates") {
    auto b3 = RootSystem::parse("B3");
    CHECK(b3.omega_to_e(to_q(b3.simple_root(0))) == std::vector<mpq_class>({1, -1, 0}));
    CHECK(b3.omega_to_e(to_q(b3.simple_root(1))) == std::vector<mpq_class>({0, 1, -1}));
    CHECK(b3.omega_to_e(to_q(b3.simple_root(2))) == std::vector<mpq_class>({0, 0, 1}));

    auto c3 = RootSystem::parse("C3");
    CHECK(c3.omega_to_e(to_q(c3.simple_root(2))) == std::vector<mpq_class>({0, 0, 2}));

    auto g2 = RootSystem::parse("G2");
    auto a1 = g2.omega_to_e(to_q(g2.simple_root(0)));
    auto a2 = g2.omega_to_e(to_q(g2.simple_root(1)));
    CHECK(a1 == std::vector<mpq_class>({1, -1, 0}));
    CHECK(a2 == std::vector<mpq_class>({-2, 1, 1}));
    // long root is 3x the short norm in G2
    mpq_class n1 = a1[0] * a1[0] + a1[1] * a1[1] + a1[2] * a1[2];
    mpq_class n2 = a2[0] * a2[0] + a2[1] * a2[1] + a2[2] * a2[2];
    CHECK(n2 == 3 * n1);
}
