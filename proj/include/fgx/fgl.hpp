#pragma once
#include <string>
#include <vector>

#include "fgx/series.hpp"

namespace fgx {

/* Outcome of the axiom check. On failure, `axiom` names the first identity
   that broke and `monomial`/`lhs`/`rhs` pin the first offending coefficient
   (grlex order, so the report is deterministic). */
struct AxiomReport {
    bool ok = true;
    std::string axiom;     // "left-unit", "right-unit", "commutativity", "associativity", "inverse"
    Expo exponents;        // exponent vector of the offending monomial
    std::string monomial;  // rendered form, e.g. "u*v*w"
    std::string lhs, rhs;  // the two coefficient values at that monomial
};

/* One-dimensional commutative formal group law F(u,v) over a fixed ring,
   truncated at total degree <= trunc. */
class FormalGroupLaw {
public:
    /* u + v */
    static FormalGroupLaw additive(const RingPtr& ring, int trunc);
    /* u + v - uv */
    static FormalGroupLaw multiplicative(const RingPtr& ring, int trunc);
    /* (u + v) / (1 + uv) */
    static FormalGroupLaw lorentz(const RingPtr& ring, int trunc);
    /* Chord construction on w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3.
       coeffs = {a1, a2, a3, a4, a6}, all from one ring. */
    static FormalGroupLaw elliptic(const std::vector<RingElem>& coeffs, int trunc);
    /* The same construction over Z[a1,a2,a3,a4,a6]. */
    static FormalGroupLaw elliptic_symbolic(int trunc);
    /* u + v + sum a_ij (u^i v^j + u^j v^i) over Z[a_ij : i <= j, i+j <= trunc].
       Unit and commutativity axioms hold by construction; associativity is
       deliberately not imposed. */
    static FormalGroupLaw symbolic(int trunc);
    /* Arbitrary two-variable series with zero constant term; axioms are the
       caller's business (see verify_axioms). */
    static FormalGroupLaw custom(std::string name, TruncatedSeries f);

    const RingPtr& ring() const { return series_.ring(); }
    int trunc() const { return series_.trunc(); }
    const TruncatedSeries& series() const { return series_; }
    const std::string& name() const { return name_; }
    /* True iff F is literally u + v. */
    bool is_additive() const;

    /* Same law at a smaller truncation order (the constructions all commute
       with truncation). */
    FormalGroupLaw truncate(int new_trunc) const;
    /* Coefficient-wise ring map. */
    FormalGroupLaw convert_ring(const RingPtr& target) const;

    /* Univariate i(u) with F(u, i(u)) = 0, found degree by degree; needs the
       unit axioms but no division. */
    TruncatedSeries formal_inverse() const;
    /* Univariate l(u) with l(F(u,v)) = l(u) + l(v), over the rational
       extension of the ring; requires characteristic zero. */
    TruncatedSeries logarithm() const;

    AxiomReport verify_axioms() const;

    /* F(x, y) for series with zero constant term in a common space. */
    TruncatedSeries formal_sum(const TruncatedSeries& x, const TruncatedSeries& y) const;
    TruncatedSeries formal_negate(const TruncatedSeries& x) const;
    /* n-fold formal sum (binary method); negative n goes through the formal
       inverse. */
    TruncatedSeries int_multiple(const mpz_class& n, const TruncatedSeries& x) const;

    std::string to_string() const { return series_.to_string({"u", "v"}); }

private:
    FormalGroupLaw(std::string name, TruncatedSeries f);

    std::string name_;
    TruncatedSeries series_;
};

} // namespace fgx
