#pragma once
#include <string>
#include <vector>

#include "fgx/fga.hpp"
#include "fgx/lattice.hpp"

namespace fgx {

/* Which generating family feeds the graded slice matrix. */
enum class PoolPolicy { ThetaOnly, OrbitSums, Combined };

std::string policy_name(PoolPolicy p);
PoolPolicy parse_policy(const std::string& s);

/* Seed weights for orbit-sum generators plus the length bound on products.
   max_length == 0 means "no bound beyond the working degree". */
struct GeneratorPool {
    std::vector<std::vector<mpz_class>> seeds;
    int max_length = 0;
    PoolPolicy policy = PoolPolicy::Combined;

    /* Union of the Weyl orbits of all fundamental weights, products up to
       length d, combined policy. */
    static GeneratorPool default_for(const RootSystem& rs, int d);
    /* {"weights": [[...], ...], "max_length": s, "policy": "combined"};
       weights are omega-coordinate integer vectors, validated against rs. */
    static GeneratorPool from_json_file(const std::string& path, const RootSystem& rs);
};

/* Sum of prod_j x_{mu_j} over the Weyl orbit of the multiset {w_1..w_s};
   each distinct image multiset contributes exactly once. */
FgaElement orbit_sum(const FgaCtxPtr& ctx, const std::vector<std::vector<mpz_class>>& weights);

/* Number of theta elements for the type (n for A/B/C/D, 2 for G2). */
int theta_count(const RootSystem& rs);
/* Declared valuation of theta_i (1-based): i+1 for A; 2i for B/C;
   2i for D with i < n and n for i = n; 2 and 6 for G2. */
int theta_degree(const RootSystem& rs, int i);
/* The i-th theta element (1-based):
     A:   e_{i+1} of { x_{e_j} : j = 1..n+1 }
     B/C: e_i of { x_{e_j} x_{-e_j} : j = 1..n }
     D:   as B for i < n; theta_n = prod_j (x_{e_j} - x_{-e_j})
     G2:  theta_1 = sum of the three products x_mu x_{-mu} over short-root
          pairs; theta_2 = the product of all six factors. */
FgaElement theta(const FgaCtxPtr& ctx, int i);

struct ThetaFamily {
    std::vector<FgaElement> elems;  // theta_1 .. theta_k
    std::vector<int> degrees;
};
ThetaFamily theta_family(const FgaCtxPtr& ctx);

struct InvariantGenerator {
    std::string label;
    FgaElement elem;
};

/* Generators feeding the degree-d slice: thetas of valuation <= d and/or
   orbit sums of products of <= min(max_length, d) pool weights, one per
   distinct multiset orbit, filtered to nonzero elements of valuation <= d.
   Deterministic order: thetas by index, then orbit sums by multiset
   enumeration order. */
std::vector<InvariantGenerator> invariant_generators(const FgaCtxPtr& ctx,
                                                     const GeneratorPool& pool, int d);

/* Whether a slice matrix provably spans the full invariant-ideal slice or
   only a finite-index subgroup of it. */
enum class LatticeCertainty { Exact, Subgroup };

std::string certainty_name(LatticeCertainty c);

struct GradedSliceMatrix {
    int d = 0;
    /* One row per (generator, complementary monomial) pair with nonzero
       leading contribution, over the grlex monomial basis of degree d. */
    IntMat rows;
    std::vector<std::string> provenance;  // parallel to rows
    LatticeCertainty certainty = LatticeCertainty::Subgroup;
};

/* Rows leading_form(m * f, d) for every generator f of valuation k <= d and
   every degree-(d-k) monomial m; zero rows are dropped. Requires integer
   coefficients. Certainty is Exact when the policy includes thetas and the
   type is A or C (no torsion prime); everything else is a verified subgroup. */
GradedSliceMatrix graded_invariant_matrix(const FgaCtxPtr& ctx,
                                          const std::vector<InvariantGenerator>& gens, int d,
                                          PoolPolicy policy);

/* Saturated basis (rows) of the W-invariant degree-k symmetric forms on the
   weight lattice, over the grlex monomial basis. */
IntMat symmetric_invariants(const RootSystem& rs, int k);

/* Exact degree-d slice of the ideal generated by the invariant forms, for
   the additive law: sum over k <= d of S^{d-k} * (S^k)^W. The graded pieces
   make the usual syzygy defect vanish, so this is the true lattice. */
GradedSliceMatrix additive_invariant_slice(const RootSystem& rs, int d);

/* Degree-d coefficient rows, in e-coordinates, of the products
   prod_i theta_i^{alpha_i} of additive-law theta leading forms, one row per
   exponent alpha with sum alpha_i * deg(theta_i) = d. Types B and D only
   (the thetas are exact polynomials in the e-variables there). */
struct ThetaAlphaRows {
    IntMat rows;
    std::vector<std::vector<int>> alphas;
};
ThetaAlphaRows theta_alpha_e_rows(const RootSystem& rs, int d);

} // namespace fgx
