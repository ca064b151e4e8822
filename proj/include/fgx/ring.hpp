#pragma once
#include <gmpxx.h>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fgx/errors.hpp"

namespace fgx {

enum class RingKind {
    Integers,
    Rationals,
    IntegersMod,        // Z/m, m >= 2
    IntegersLocalized,  // Z[1/p1,...,1/pk]
    PolyInt,            // Z[s1,...,sk], named symbols
    PolyRat,            // Q[s1,...,sk]
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/* Multivariate polynomial in the ring's named symbols. Exponent vectors are
   keyed lexicographically; coefficients are canonical mpq with no zero terms
   stored. */
struct SymPoly {
    std::map<std::vector<unsigned>, mpq_class> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const SymPoly& o) const { return terms == o.terms; }
};

class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr integers();
    static RingPtr rationals();
    static RingPtr integers_mod(const mpz_class& m);
    static RingPtr integers_localized(std::vector<mpz_class> primes);
    static RingPtr poly_over_integers(std::vector<std::string> symbols);
    static RingPtr poly_over_rationals(std::vector<std::string> symbols);

    RingKind kind() const { return kind_; }
    const mpz_class& modulus() const { return modulus_; }
    const std::vector<mpz_class>& inverted_primes() const { return primes_; }
    const std::vector<std::string>& symbols() const { return symbols_; }

    mpz_class characteristic() const;
    bool is_poly() const { return kind_ == RingKind::PolyInt || kind_ == RingKind::PolyRat; }
    std::string name() const;

private:
    Ring() = default;
    RingKind kind_ = RingKind::Integers;
    mpz_class modulus_;               // IntegersMod
    std::vector<mpz_class> primes_;   // IntegersLocalized, sorted
    std::vector<std::string> symbols_;
};

/* Structural ring equality: same kind and same parameters. */
bool same_ring(const RingPtr& a, const RingPtr& b);

/* Smallest ring containing both the given ring and Q. Errors in positive
   characteristic. Integers/Rationals/IntegersLocalized -> Rationals,
   PolyInt/PolyRat -> PolyRat over the same symbols. */
RingPtr rational_extension(const RingPtr& r);

class RingElem {
public:
    RingElem() = default;  // unusable until assigned; zero of no ring

    const RingPtr& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    RingElem inverse() const;  // DomainError when not a unit

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    /* Image of this element in ring `target`; supports the identity map and
       the canonical embeddings Z->Q, Z->Z[1/S], Z[1/S]->Q, PolyInt->PolyRat. */
    RingElem convert_to(const RingPtr& target) const;

    /* Numeric payload accessors (non-poly rings). */
    const mpq_class& rational_value() const;
    mpz_class integer_value() const;  // requires denominator 1
    const SymPoly& poly_value() const;

    std::string to_string() const;

    friend class RingOps;

private:
    RingPtr ring_;
    mpq_class num_;   // numeric kinds; IntegersMod keeps 0 <= num_ < m, den 1
    SymPoly poly_;    // poly kinds
};

/* Element factories. */
RingElem ring_zero(const RingPtr& r);
RingElem ring_one(const RingPtr& r);
RingElem ring_int(const RingPtr& r, const mpz_class& n);
RingElem ring_int(const RingPtr& r, long n);
RingElem ring_rational(const RingPtr& r, const mpq_class& q);  // Q, Z[1/S] (validated), PolyRat
RingElem ring_symbol(const RingPtr& r, const std::string& name);
RingElem ring_symbol(const RingPtr& r, size_t index);

std::string sympoly_to_string(const SymPoly& p, const std::vector<std::string>& symbols);

} // namespace fgx
