#include "fgx/rootsys.hpp"

#include <algorithm>
#include <set>

namespace fgx {

namespace {

const char* letter(RootType t) {
    switch (t) {
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
        case RootType::G2: return "G";
    }
    return "?";
}

std::vector<int> mat_mul_flat(const std::vector<int>& x, const std::vector<int>& y, int n) {
    std::vector<int> r(n * n, 0);
    for (int i = 0; i < n; i++)
        for (int k = 0; k < n; k++) {
            int v = x[i * n + k];
            if (!v) continue;
            for (int j = 0; j < n; j++) r[i * n + j] += v * y[k * n + j];
        }
    return r;
}

} // namespace

RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank) {
    switch (type) {
        case RootType::A:
            if (rank < 1) throw StructuralError("type A requires rank >= 1");
            break;
        case RootType::C:
            if (rank < 2) throw StructuralError("type C requires rank >= 2");
            break;
        case RootType::B:
            if (rank < 3) throw StructuralError("type B requires rank >= 3");
            break;
        case RootType::D:
            if (rank < 4) throw StructuralError("type D requires rank >= 4");
            break;
        case RootType::G2:
            if (rank != 2) throw StructuralError("type G requires rank 2");
            break;
    }
    int n = rank_;
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; i++) cartan_[i][i] = 2;
    auto link = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
    switch (type) {
        case RootType::A:
            for (int i = 0; i + 1 < n; i++) link(i, i + 1);
            break;
        case RootType::B:
            for (int i = 0; i + 1 < n; i++) link(i, i + 1);
            cartan_[n - 1][n - 2] = -2;  // alpha_n short
            break;
        case RootType::C:
            for (int i = 0; i + 1 < n; i++) link(i, i + 1);
            cartan_[n - 2][n - 1] = -2;  // alpha_n long
            break;
        case RootType::D:
            for (int i = 0; i + 2 < n; i++) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case RootType::G2:
            cartan_ = {{2, -3}, {-1, 2}};
            break;
    }
}

RootSystem RootSystem::parse(const std::string& name) {
    if (name.size() < 2) throw StructuralError("root system name: expected letter + rank");
    RootType t;
    switch (name[0]) {
        case 'A': t = RootType::A; break;
        case 'B': t = RootType::B; break;
        case 'C': t = RootType::C; break;
        case 'D': t = RootType::D; break;
        case 'G': t = RootType::G2; break;
        default: throw StructuralError("root system name: unknown series " + name);
    }
    size_t pos = 0;
    int r;
    try {
        r = std::stoi(name.substr(1), &pos);
    } catch (const std::exception&) {
        throw StructuralError("root system name: bad rank in " + name);
    }
    if (pos + 1 != name.size()) throw StructuralError("root system name: bad rank in " + name);
    return RootSystem(t, r);
}

std::string RootSystem::name() const { return letter(type_) + std::to_string(rank_); }

std::vector<mpz_class> RootSystem::fundamental_weight(int i) const {
    if (i < 0 || i >= rank_) throw StructuralError("fundamental_weight: index out of range");
    std::vector<mpz_class> w(rank_);
    w[i] = 1;
    return w;
}

std::vector<mpz_class> RootSystem::simple_root(int i) const {
    if (i < 0 || i >= rank_) throw StructuralError("simple_root: index out of range");
    std::vector<mpz_class> r(rank_);
    for (int k = 0; k < rank_; k++) r[k] = cartan_[k][i];
    return r;
}

std::vector<mpz_class> RootSystem::simple_reflect(int i, const std::vector<mpz_class>& w) const {
    if (i < 0 || i >= rank_) throw StructuralError("simple_reflect: index out of range");
    if ((int)w.size() != rank_) throw StructuralError("simple_reflect: weight length mismatch");
    std::vector<mpz_class> r = w;
    for (int k = 0; k < rank_; k++) r[k] -= w[i] * cartan_[k][i];
    return r;
}

std::vector<std::vector<int>> RootSystem::reflection_matrix(int i) const {
    if (i < 0 || i >= rank_) throw StructuralError("reflection_matrix: index out of range");
    std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_, 0));
    for (int k = 0; k < rank_; k++) m[k][k] = 1;
    for (int k = 0; k < rank_; k++) m[k][i] -= cartan_[k][i];
    return m;
}

std::vector<mpz_class> RootSystem::act(const std::vector<int>& word,
                                       const std::vector<mpz_class>& w) const {
    std::vector<mpz_class> r = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = simple_reflect(*it, r);
    return r;
}

std::vector<std::vector<mpz_class>> RootSystem::weyl_orbit(const std::vector<mpz_class>& w) const {
    if ((int)w.size() != rank_) throw StructuralError("weyl_orbit: weight length mismatch");
    std::set<std::vector<mpz_class>> seen{w};
    std::vector<std::vector<mpz_class>> frontier{w};
    while (!frontier.empty()) {
        std::vector<std::vector<mpz_class>> next;
        for (const auto& v : frontier)
            for (int i = 0; i < rank_; i++) {
                auto r = simple_reflect(i, v);
                if (seen.insert(r).second) next.push_back(std::move(r));
            }
        frontier = std::move(next);
    }
    return std::vector<std::vector<mpz_class>>(seen.begin(), seen.end());
}

std::vector<long> RootSystem::length_counts() const {
    int n = rank_;
    std::vector<std::vector<int>> refl(n);
    for (int i = 0; i < n; i++) {
        auto m = reflection_matrix(i);
        std::vector<int> flat(n * n);
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++) flat[r * n + c] = m[r][c];
        refl[i] = std::move(flat);
    }
    std::vector<int> id(n * n, 0);
    for (int i = 0; i < n; i++) id[i * n + i] = 1;
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    std::vector<long> counts{1};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& m : frontier)
            for (int i = 0; i < n; i++) {
                auto p = mat_mul_flat(refl[i], m, n);
                if (seen.insert(p).second) next.push_back(std::move(p));
            }
        if (!next.empty()) counts.push_back((long)next.size());
        frontier = std::move(next);
    }
    return counts;
}

mpz_class RootSystem::weyl_order_formula() const {
    mpz_class f;
    switch (type_) {
        case RootType::A:
            mpz_fac_ui(f.get_mpz_t(), rank_ + 1);
            return f;
        case RootType::B:
        case RootType::C: {
            mpz_fac_ui(f.get_mpz_t(), rank_);
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, rank_);
            return f * p;
        }
        case RootType::D: {
            mpz_fac_ui(f.get_mpz_t(), rank_);
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, rank_ - 1);
            return f * p;
        }
        case RootType::G2:
            return 12;
    }
    return 0;
}

long RootSystem::num_positive_roots() const {
    long n = rank_;
    switch (type_) {
        case RootType::A: return n * (n + 1) / 2;
        case RootType::B:
        case RootType::C: return n * n;
        case RootType::D: return n * (n - 1);
        case RootType::G2: return 6;
    }
    return 0;
}

std::vector<int> RootSystem::torsion_primes() const {
    switch (type_) {
        case RootType::A:
        case RootType::C: return {};
        case RootType::B:
        case RootType::D:
        case RootType::G2: return {2};
    }
    return {};
}

int RootSystem::e_dim() const {
    switch (type_) {
        case RootType::A: return rank_ + 1;
        case RootType::G2: return 3;
        default: return rank_;
    }
}

std::vector<mpq_class> RootSystem::omega_to_e(const std::vector<mpq_class>& w) const {
    if ((int)w.size() != rank_) throw StructuralError("omega_to_e: weight length mismatch");
    int n = rank_;
    std::vector<mpq_class> r(e_dim());
    mpq_class half(1, 2);
    switch (type_) {
        case RootType::A:
            for (int j = 0; j < n; j++)
                for (int i = j; i < n; i++) r[j] += w[i];
            break;
        case RootType::B:
            for (int j = 0; j < n; j++) {
                for (int i = j; i < n - 1; i++) r[j] += w[i];
                r[j] += half * w[n - 1];
            }
            break;
        case RootType::C:
            for (int j = 0; j < n; j++)
                for (int i = j; i < n; i++) r[j] += w[i];
            break;
        case RootType::D:
            for (int j = 0; j < n - 1; j++) {
                for (int i = j; i < n - 2; i++) r[j] += w[i];
                r[j] += half * (w[n - 2] + w[n - 1]);
            }
            r[n - 1] = half * (w[n - 1] - w[n - 2]);
            break;
        case RootType::G2:
            /* omega_1 = e3 - e2, omega_2 = 2 e3 - e1 - e2 */
            r[0] = -w[1];
            r[1] = -w[0] - w[1];
            r[2] = w[0] + 2 * w[1];
            break;
    }
    return r;
}

std::vector<mpq_class> RootSystem::e_to_omega(const std::vector<mpq_class>& c) const {
    if ((int)c.size() != e_dim()) throw StructuralError("e_to_omega: coordinate length mismatch");
    int n = rank_;
    std::vector<mpq_class> w(n);
    switch (type_) {
        case RootType::A:
            for (int i = 0; i < n; i++) w[i] = c[i] - c[i + 1];
            break;
        case RootType::B:
            for (int i = 0; i + 1 < n; i++) w[i] = c[i] - c[i + 1];
            w[n - 1] = 2 * c[n - 1];
            break;
        case RootType::C:
            for (int i = 0; i + 1 < n; i++) w[i] = c[i] - c[i + 1];
            w[n - 1] = c[n - 1];
            break;
        case RootType::D:
            for (int i = 0; i + 2 < n; i++) w[i] = c[i] - c[i + 1];
            w[n - 2] = c[n - 2] - c[n - 1];
            w[n - 1] = c[n - 2] + c[n - 1];
            break;
        case RootType::G2:
            if (c[0] + c[1] + c[2] != 0)
                throw DomainError("e_to_omega: coordinates leave the sum-zero plane");
            w[0] = 2 * c[0] + c[2];
            w[1] = -c[0];
            break;
    }
    return w;
}

std::vector<std::vector<mpz_class>> RootSystem::e_basis_weights() const {
    if (type_ == RootType::G2)
        throw DomainError("e_basis_weights: the e-vectors of G2 are not weights");
    std::vector<std::vector<mpz_class>> out;
    for (int j = 0; j < e_dim(); j++) {
        std::vector<mpq_class> unit(e_dim());
        unit[j] = 1;
        auto w = e_to_omega(unit);
        std::vector<mpz_class> wi(rank_);
        for (int i = 0; i < rank_; i++) {
            if (w[i].get_den() != 1)
                throw DomainError("e_basis_weights: non-integral weight");
            wi[i] = w[i].get_num();
        }
        out.push_back(std::move(wi));
    }
    return out;
}

} // namespace fgx
