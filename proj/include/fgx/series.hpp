#pragma once
#include <map>
#include <optional>
#include <vector>

#include "fgx/ring.hpp"

namespace fgx {

using Expo = std::vector<unsigned>;

inline int total_degree(const Expo& e) {
    int d = 0;
    for (unsigned x : e) d += (int)x;
    return d;
}

/* Graded-lex term order: lower total degree first; within a degree the
   lexicographically larger exponent vector comes first (x1^d leads). */
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a > b;  // descending lex within a degree
    }
};

/* All exponent vectors of the given total degree, in the grlex order above. */
std::vector<Expo> monomials_of_degree(int nvars, int d);

/* Multivariate power series truncated at total degree <= trunc. Terms are
   canonical: grlex-ordered, no zero coefficients. All binary operations
   require identical (ring, nvars, trunc). */
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(RingPtr ring, int nvars, int trunc);  // zero series

    static TruncatedSeries constant(const RingPtr& ring, int nvars, int trunc, const RingElem& c);
    static TruncatedSeries variable(const RingPtr& ring, int nvars, int trunc, int i);

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    int trunc() const { return trunc_; }
    const std::map<Expo, RingElem, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    RingElem coeff(const Expo& e) const;       // zero elem when absent
    RingElem constant_term() const;
    void set_coeff(const Expo& e, const RingElem& c);  // drops zero, checks degree

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    TruncatedSeries scalar_mul(const RingElem& c) const;
    TruncatedSeries pow(int k) const;  // k >= 0

    /* Composition: substitute images[i] for variable i. Every image must
       live in one common space and have zero constant term; the result lives
       in the images' space. The images' space may differ from this one in
       nvars but must share the ring and truncation order. */
    TruncatedSeries substitute(const std::vector<TruncatedSeries>& images) const;

    /* Multiplicative inverse; requires an invertible constant term. */
    TruncatedSeries invert_unit() const;

    TruncatedSeries homogeneous_part(int d) const;
    /* Smallest total degree with a nonzero term; nullopt for the zero series
       (valuation infinity). Certified only up to trunc. */
    std::optional<int> valuation() const;

    /* Terms with exponent of variable `var` equal to `k`, with that exponent
       zeroed out in the result. */
    TruncatedSeries extract_var_power(int var, unsigned k) const;
    /* Remove variable `var` from the space; every term must have exponent 0
       there. */
    TruncatedSeries drop_var(int var) const;
    TruncatedSeries partial_derivative(int var) const;

    /* Univariate term-by-term integration c*u^k -> c/(k+1)*u^(k+1); requires
       a ring containing the rationals. Degree-trunc input terms would leave
       the truncation window and are an error. */
    TruncatedSeries integrate_univar() const;

    /* Coefficient-wise ring map (identity on exponents). */
    TruncatedSeries convert_ring(const RingPtr& target) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    void check_compatible(const TruncatedSeries& o, const char* op) const;

    RingPtr ring_;
    int nvars_ = 0;
    int trunc_ = 0;
    std::map<Expo, RingElem, GrlexLess> terms_;
};

} // namespace fgx
