#pragma once
#include <gmpxx.h>

#include <optional>
#include <vector>

#include "fgx/errors.hpp"

namespace fgx {

/* Dense row-major integer matrix. Rows are lattice generators throughout
   this module; none of the algorithms assume full rank. */
struct IntMat {
    int nrows = 0, ncols = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(int r, int c) : nrows(r), ncols(c), a((size_t)r * c) {
        if (r < 0 || c < 0) throw StructuralError("matrix: negative dimension");
    }
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<mpz_class>>& rows);

    mpz_class& at(int i, int j) { return a[(size_t)i * ncols + j]; }
    const mpz_class& at(int i, int j) const { return a[(size_t)i * ncols + j]; }
    std::vector<mpz_class> row(int i) const;
    bool operator==(const IntMat& o) const { return nrows == o.nrows && ncols == o.ncols && a == o.a; }
};

IntMat transpose(const IntMat& m);
IntMat mat_mul(const IntMat& x, const IntMat& y);

/* Row Hermite normal form: u * input = h with u unimodular; h is in row
   echelon form with positive pivots that strictly increase in column,
   entries above each pivot reduced into [0, pivot). Deterministic. */
struct HnfResult {
    IntMat h, u;
    int rank = 0;
    std::vector<int> pivot_cols;  // one per nonzero row of h
};
HnfResult hnf(const IntMat& m);

/* Smith normal form: u * input * v = d with u, v unimodular and d diagonal,
   d_1 | d_2 | ... | d_rank, all positive. */
struct SnfResult {
    IntMat d, u, v;
    int rank = 0;
    std::vector<mpz_class> divisors;  // the rank nonzero diagonal entries
};
SnfResult snf(const IntMat& m);

/* Basis (as rows) of {x : x m = 0}, saturated: it spans the full kernel
   lattice, not a finite-index sublattice. */
IntMat left_kernel(const IntMat& m);
/* Basis (as rows) of {x : m x^T = 0}, saturated. */
IntMat right_kernel(const IntMat& m);

/* Coordinates of v in the row span of an HNF basis, if v lies in the
   rational span: one rational per nonzero row of h. */
std::optional<std::vector<mpq_class>> solve_in_rowspan(const HnfResult& h,
                                                       const std::vector<mpq_class>& v);

/* Smallest N >= 1 with N*v in the integer row span of L; nullopt when v is
   outside the rational span (no such N). */
std::optional<mpz_class> order_mod_lattice(const std::vector<mpz_class>& v, const IntMat& L);

/* Elementary divisors of (A + B) / A for row lattices A, B in the same
   ambient space: the nontrivial finite orders (> 1) in increasing order,
   followed by one 0 per free factor. Empty means B is contained in A. */
std::vector<mpz_class> quotient_divisors(const IntMat& A, const IntMat& B);

/* Rank of m over the field Z/p (p prime). */
int rank_mod_p(const IntMat& m, const mpz_class& p);

} // namespace fgx
