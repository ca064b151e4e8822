#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fgx/fgl.hpp"
#include "fgx/rootsys.hpp"
#include "fgx/series.hpp"

namespace fgx {

/* Truncated formal group algebra R[[x_w1, ..., x_wn]] / (degree > D) attached
   to a root system and a formal group law: one series variable per
   fundamental weight, truncation order taken from the law. Contexts are
   shared immutable objects; the caches are filled on demand and are pure
   memoization. */
class FgaContext {
public:
    FgaContext(RootSystem rs, FormalGroupLaw law);

    const RootSystem& root_system() const { return rs_; }
    const FormalGroupLaw& law() const { return law_; }
    const RingPtr& ring() const { return law_.ring(); }
    int nvars() const { return rs_.rank(); }
    int trunc() const { return law_.trunc(); }

    /* x_lambda for an integral weight lambda = sum a_i omega_i: the formal
       sum of the a_i-fold formal multiples of the generators. x_0 = 0 and
       x_{-lambda} is the formal inverse of x_lambda, both automatic. */
    const TruncatedSeries& x_of_weight(const std::vector<mpz_class>& w) const;

    /* Formal inverse series of the law, cached. */
    const TruncatedSeries& inverse_series() const;

private:
    RootSystem rs_;
    FormalGroupLaw law_;
    mutable std::map<std::vector<mpz_class>, TruncatedSeries> xcache_;
    mutable std::optional<TruncatedSeries> iota_;
};

using FgaCtxPtr = std::shared_ptr<const FgaContext>;

FgaCtxPtr make_context(RootSystem rs, FormalGroupLaw law);

/* Coefficient vector of a homogeneous degree-d form, indexed by the grlex
   list monomials_of_degree(nvars, d). */
struct SymmetricSlice {
    int d = 0;
    std::vector<RingElem> coeffs;

    bool operator==(const SymmetricSlice& o) const { return d == o.d && coeffs == o.coeffs; }
    bool operator!=(const SymmetricSlice& o) const { return !(*this == o); }
};

/* Element of the truncated formal group algebra. Arithmetic requires the two
   operands to share a context (same object or structurally equal ones). */
class FgaElement {
public:
    FgaElement() = default;
    FgaElement(FgaCtxPtr ctx, TruncatedSeries s);

    static FgaElement zero(const FgaCtxPtr& ctx);
    static FgaElement one(const FgaCtxPtr& ctx);
    static FgaElement constant(const FgaCtxPtr& ctx, const RingElem& c);
    static FgaElement x_of_weight(const FgaCtxPtr& ctx, const std::vector<mpz_class>& w);

    const FgaCtxPtr& context() const { return ctx_; }
    const TruncatedSeries& series() const { return series_; }

    FgaElement operator+(const FgaElement& o) const;
    FgaElement operator-(const FgaElement& o) const;
    FgaElement operator*(const FgaElement& o) const;
    FgaElement operator-() const;
    FgaElement scalar_mul(const RingElem& c) const;
    FgaElement pow(int k) const;
    bool operator==(const FgaElement& o) const;
    bool operator!=(const FgaElement& o) const { return !(*this == o); }
    bool is_zero() const { return series_.is_zero(); }

    /* Counit: the constant term. */
    RingElem augment() const;
    std::optional<int> valuation() const { return series_.valuation(); }

    /* Ring automorphism induced by the Weyl group element given as a word in
       simple reflections: substitutes x_{w(omega_i)} for each generator. */
    FgaElement weyl_act(const std::vector<int>& word) const;

    std::string to_string() const;

private:
    FgaCtxPtr ctx_;
    TruncatedSeries series_;
};

/* Degree-d coefficient slice of an element of valuation >= d (its leading
   form when the valuation is exactly d). Valuation < d is a precondition
   violation and throws. */
SymmetricSlice leading_form(const FgaElement& f, int d);

/* Transport along the identity-on-series deformation map between the
   algebras of two laws over the same ring, truncation, and root system:
   the coefficient data is carried unchanged, only the context is re-tagged.
   Mismatched root system, ring, or truncation throws. */
FgaElement deform(const FgaCtxPtr& src, const FgaCtxPtr& dst, const FgaElement& f);

} // namespace fgx
