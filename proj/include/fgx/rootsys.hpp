#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "fgx/errors.hpp"

namespace fgx {

enum class RootType { A, B, C, D, G2 };

/* Crystallographic root system in Bourbaki numbering. Weights are integer
   coordinate vectors in the fundamental-weight basis throughout; the Cartan
   matrix is stored so that column j is the simple root alpha_j in that
   basis, i.e. cartan[i][j] = <alpha_j, alpha_i^vee>. */
class RootSystem {
public:
    RootSystem(RootType type, int rank);
    static RootSystem parse(const std::string& name);  // "A2", "B3", "G2", ...

    RootType type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const;

    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    std::vector<mpz_class> fundamental_weight(int i) const;
    std::vector<mpz_class> simple_root(int i) const;  // column i of the Cartan matrix

    /* s_i(w) = w - w_i * alpha_i (the pairing <w, alpha_i^vee> is the i-th
       coordinate in this basis). */
    std::vector<mpz_class> simple_reflect(int i, const std::vector<mpz_class>& w) const;
    /* Matrix of s_i acting on weight coordinates. */
    std::vector<std::vector<int>> reflection_matrix(int i) const;
    /* Apply the word s_{w[0]} s_{w[1]} ... s_{w[k-1]}, rightmost letter first. */
    std::vector<mpz_class> act(const std::vector<int>& word, const std::vector<mpz_class>& w) const;

    /* Full orbit, sorted lexicographically (deterministic). */
    std::vector<std::vector<mpz_class>> weyl_orbit(const std::vector<mpz_class>& w) const;
    /* counts[l] = number of Weyl elements of Coxeter length l; the vector has
       num_positive_roots()+1 entries and sums to the group order. */
    std::vector<long> length_counts() const;
    mpz_class weyl_order_formula() const;
    long num_positive_roots() const;
    /* Primes p for which the flag variety of this type has p-torsion. */
    std::vector<int> torsion_primes() const;

    /* Standard Euclidean realization: dimension n+1 for type A (coordinates
       modulo the all-ones vector), n for B/C/D, 3 for G2 (sum-zero plane). */
    int e_dim() const;
    std::vector<mpq_class> omega_to_e(const std::vector<mpq_class>& w) const;
    std::vector<mpq_class> e_to_omega(const std::vector<mpq_class>& c) const;
    /* The coordinate vectors e_1, ..., e_{e_dim} as integral weights; not
       available for G2, whose e-vectors are not weights. */
    std::vector<std::vector<mpz_class>> e_basis_weights() const;

private:
    RootType type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
};

} // namespace fgx
