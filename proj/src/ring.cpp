#include "fgx/ring.hpp"

#include <algorithm>
#include <sstream>

namespace fgx {

namespace {

/* Divide out of n every prime in `primes`; the remainder tells whether n is
   supported on the listed primes. */
mpz_class strip_primes(mpz_class n, const std::vector<mpz_class>& primes) {
    if (n == 0) return n;
    n = abs(n);
    for (const auto& p : primes) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
    return n;
}

bool is_probable_prime(const mpz_class& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

mpq_class reduce_mod(const mpq_class& q, const mpz_class& m) {
    mpz_class n = q.get_num();  // denominator is 1 by invariant
    mpz_class r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return mpq_class(r);
}

SymPoly sympoly_add(const SymPoly& a, const SymPoly& b) {
    SymPoly r = a;
    for (const auto& [e, c] : b.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            r.terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

SymPoly sympoly_neg(const SymPoly& a) {
    SymPoly r;
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, -c);
    return r;
}

SymPoly sympoly_mul(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            std::vector<unsigned> e(ea.size());
            for (size_t i = 0; i < e.size(); i++) e[i] = ea[i] + eb[i];
            mpq_class c = ca * cb;
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

} // namespace

RingPtr Ring::integers() {
    static RingPtr r = [] {
        auto p = std::shared_ptr<Ring>(new Ring());
        p->kind_ = RingKind::Integers;
        return RingPtr(p);
    }();
    return r;
}

RingPtr Ring::rationals() {
    static RingPtr r = [] {
        auto p = std::shared_ptr<Ring>(new Ring());
        p->kind_ = RingKind::Rationals;
        return RingPtr(p);
    }();
    return r;
}

RingPtr Ring::integers_mod(const mpz_class& m) {
    if (m < 2) throw DomainError("integers_mod: modulus must be >= 2");
    auto p = std::shared_ptr<Ring>(new Ring());
    p->kind_ = RingKind::IntegersMod;
    p->modulus_ = m;
    return p;
}

RingPtr Ring::integers_localized(std::vector<mpz_class> primes) {
    if (primes.empty()) throw DomainError("integers_localized: empty prime list; use integers()");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto& p : primes)
        if (p < 2 || !is_probable_prime(p))
            throw DomainError("integers_localized: " + p.get_str() + " is not prime");
    auto p = std::shared_ptr<Ring>(new Ring());
    p->kind_ = RingKind::IntegersLocalized;
    p->primes_ = std::move(primes);
    return p;
}

static void check_symbols(const std::vector<std::string>& symbols) {
    if (symbols.empty()) throw DomainError("polynomial ring needs at least one symbol");
    for (size_t i = 0; i < symbols.size(); i++) {
        if (symbols[i].empty()) throw DomainError("empty symbol name");
        for (size_t j = i + 1; j < symbols.size(); j++)
            if (symbols[i] == symbols[j]) throw DomainError("duplicate symbol " + symbols[i]);
    }
}

RingPtr Ring::poly_over_integers(std::vector<std::string> symbols) {
    check_symbols(symbols);
    auto p = std::shared_ptr<Ring>(new Ring());
    p->kind_ = RingKind::PolyInt;
    p->symbols_ = std::move(symbols);
    return p;
}

RingPtr Ring::poly_over_rationals(std::vector<std::string> symbols) {
    check_symbols(symbols);
    auto p = std::shared_ptr<Ring>(new Ring());
    p->kind_ = RingKind::PolyRat;
    p->symbols_ = std::move(symbols);
    return p;
}

mpz_class Ring::characteristic() const {
    return kind_ == RingKind::IntegersMod ? modulus_ : mpz_class(0);
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::IntegersMod: return "Z/" + modulus_.get_str();
        case RingKind::IntegersLocalized: {
            std::string s = "Z[";
            for (size_t i = 0; i < primes_.size(); i++) {
                if (i) s += ",";
                s += "1/" + primes_[i].get_str();
            }
            return s + "]";
        }
        case RingKind::PolyInt:
        case RingKind::PolyRat: {
            std::string s = (kind_ == RingKind::PolyInt) ? "Z[" : "Q[";
            for (size_t i = 0; i < symbols_.size(); i++) {
                if (i) s += ",";
                s += symbols_[i];
            }
            return s + "]";
        }
    }
    return "?";
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case RingKind::IntegersMod: return a->modulus() == b->modulus();
        case RingKind::IntegersLocalized: return a->inverted_primes() == b->inverted_primes();
        case RingKind::PolyInt:
        case RingKind::PolyRat: return a->symbols() == b->symbols();
        default: return true;
    }
}

RingPtr rational_extension(const RingPtr& r) {
    switch (r->kind()) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::IntegersLocalized:
            return Ring::rationals();
        case RingKind::PolyInt:
        case RingKind::PolyRat:
            return Ring::poly_over_rationals(r->symbols());
        case RingKind::IntegersMod:
            throw DomainError("rational_extension: characteristic " + r->modulus().get_str() + " ring");
    }
    throw DomainError("rational_extension: unknown ring kind");
}

/* ---------------- RingElem ---------------- */

class RingOps {
public:
    static RingElem make(const RingPtr& r, mpq_class v) {
        RingElem e;
        e.ring_ = r;
        if (r->kind() == RingKind::IntegersMod) v = reduce_mod(v, r->modulus());
        e.num_ = std::move(v);
        return e;
    }
    static RingElem make_poly(const RingPtr& r, SymPoly p) {
        RingElem e;
        e.ring_ = r;
        e.poly_ = std::move(p);
        return e;
    }
};

static void require_same(const RingPtr& a, const RingPtr& b, const char* op) {
    if (!same_ring(a, b))
        throw StructuralError(std::string(op) + ": ring mismatch (" + a->name() + " vs " + b->name() + ")");
}

bool RingElem::is_zero() const {
    if (!ring_) throw StructuralError("uninitialized ring element");
    return ring_->is_poly() ? poly_.is_zero() : num_ == 0;
}

bool RingElem::is_one() const {
    if (ring_->is_poly()) {
        if (poly_.terms.size() != 1) return false;
        const auto& [e, c] = *poly_.terms.begin();
        return c == 1 && std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    }
    return num_ == 1;
}

bool RingElem::is_unit() const {
    switch (ring_->kind()) {
        case RingKind::Integers:
            return num_ == 1 || num_ == -1;
        case RingKind::Rationals:
            return num_ != 0;
        case RingKind::IntegersMod: {
            mpz_class g;
            mpz_class n = num_.get_num();
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), ring_->modulus().get_mpz_t());
            return g == 1;
        }
        case RingKind::IntegersLocalized:
            return num_ != 0 && strip_primes(num_.get_num(), ring_->inverted_primes()) == 1;
        case RingKind::PolyInt: {
            if (poly_.terms.size() != 1) return false;
            const auto& [e, c] = *poly_.terms.begin();
            if (!std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })) return false;
            return c == 1 || c == -1;
        }
        case RingKind::PolyRat: {
            if (poly_.terms.size() != 1) return false;
            const auto& [e, c] = *poly_.terms.begin();
            return c != 0 && std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        }
    }
    return false;
}

RingElem RingElem::inverse() const {
    if (!is_unit()) throw DomainError("inverse: " + to_string() + " is not a unit in " + ring_->name());
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersLocalized:
        case RingKind::Rationals:
            return RingOps::make(ring_, mpq_class(1) / num_);
        case RingKind::IntegersMod: {
            mpz_class inv, n = num_.get_num();
            mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), ring_->modulus().get_mpz_t());
            return RingOps::make(ring_, mpq_class(inv));
        }
        case RingKind::PolyInt:
        case RingKind::PolyRat: {
            SymPoly p;
            const auto& [e, c] = *poly_.terms.begin();
            p.terms.emplace(e, mpq_class(1) / c);
            return RingOps::make_poly(ring_, std::move(p));
        }
    }
    throw DomainError("inverse: unknown ring kind");
}

RingElem RingElem::operator+(const RingElem& o) const {
    require_same(ring_, o.ring_, "add");
    if (ring_->is_poly()) return RingOps::make_poly(ring_, sympoly_add(poly_, o.poly_));
    return RingOps::make(ring_, num_ + o.num_);
}

RingElem RingElem::operator-(const RingElem& o) const {
    require_same(ring_, o.ring_, "sub");
    if (ring_->is_poly()) return RingOps::make_poly(ring_, sympoly_add(poly_, sympoly_neg(o.poly_)));
    return RingOps::make(ring_, num_ - o.num_);
}

RingElem RingElem::operator*(const RingElem& o) const {
    require_same(ring_, o.ring_, "mul");
    if (ring_->is_poly()) return RingOps::make_poly(ring_, sympoly_mul(poly_, o.poly_));
    return RingOps::make(ring_, num_ * o.num_);
}

RingElem RingElem::operator-() const {
    if (ring_->is_poly()) return RingOps::make_poly(ring_, sympoly_neg(poly_));
    return RingOps::make(ring_, -num_);
}

bool RingElem::operator==(const RingElem& o) const {
    require_same(ring_, o.ring_, "eq");
    return ring_->is_poly() ? poly_ == o.poly_ : num_ == o.num_;
}

RingElem RingElem::convert_to(const RingPtr& target) const {
    if (same_ring(ring_, target)) {
        RingElem e = *this;
        e.ring_ = target;
        return e;
    }
    RingKind from = ring_->kind(), to = target->kind();
    auto numeric_ok = [&] {
        return (from == RingKind::Integers &&
                (to == RingKind::Rationals || to == RingKind::IntegersLocalized ||
                 to == RingKind::IntegersMod)) ||
               (from == RingKind::IntegersLocalized && to == RingKind::Rationals);
    };
    if (numeric_ok()) return RingOps::make(target, num_);
    if (from == RingKind::PolyInt && to == RingKind::PolyRat && ring_->symbols() == target->symbols())
        return RingOps::make_poly(target, poly_);
    throw StructuralError("convert_to: no canonical map " + ring_->name() + " -> " + target->name());
}

const mpq_class& RingElem::rational_value() const {
    if (ring_->is_poly()) throw StructuralError("rational_value on polynomial ring element");
    return num_;
}

mpz_class RingElem::integer_value() const {
    if (ring_->is_poly() || num_.get_den() != 1)
        throw DomainError("integer_value: " + to_string() + " is not an integer");
    return num_.get_num();
}

const SymPoly& RingElem::poly_value() const {
    if (!ring_->is_poly()) throw StructuralError("poly_value on numeric ring element");
    return poly_;
}

std::string sympoly_to_string(const SymPoly& p, const std::vector<std::string>& symbols) {
    if (p.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        mpq_class a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        bool coeff_shown = !has_vars || a != 1;
        if (coeff_shown) out << a.get_str();
        bool star = coeff_shown;
        for (size_t i = 0; i < e.size(); i++) {
            if (!e[i]) continue;
            if (star) out << "*";
            out << symbols[i];
            if (e[i] > 1) out << "^" << e[i];
            star = true;
        }
    }
    return out.str();
}

std::string RingElem::to_string() const {
    if (!ring_) return "<null>";
    if (ring_->is_poly()) return sympoly_to_string(poly_, ring_->symbols());
    return num_.get_str();
}

RingElem ring_zero(const RingPtr& r) {
    return r->is_poly() ? RingOps::make_poly(r, SymPoly{}) : RingOps::make(r, mpq_class(0));
}

RingElem ring_one(const RingPtr& r) { return ring_int(r, 1); }

RingElem ring_int(const RingPtr& r, const mpz_class& n) {
    if (r->is_poly()) {
        SymPoly p;
        if (n != 0) p.terms.emplace(std::vector<unsigned>(r->symbols().size(), 0), mpq_class(n));
        return RingOps::make_poly(r, std::move(p));
    }
    return RingOps::make(r, mpq_class(n));
}

RingElem ring_int(const RingPtr& r, long n) { return ring_int(r, mpz_class(n)); }

RingElem ring_rational(const RingPtr& r, const mpq_class& q) {
    mpq_class v = q;
    v.canonicalize();
    switch (r->kind()) {
        case RingKind::Rationals:
            return RingOps::make(r, v);
        case RingKind::Integers:
        case RingKind::IntegersMod:
            if (v.get_den() != 1) throw DomainError("ring_rational: " + v.get_str() + " not in " + r->name());
            return RingOps::make(r, v);
        case RingKind::IntegersLocalized: {
            if (strip_primes(v.get_den(), r->inverted_primes()) != 1)
                throw DomainError("ring_rational: " + v.get_str() + " not in " + r->name());
            return RingOps::make(r, v);
        }
        case RingKind::PolyRat:
        case RingKind::PolyInt: {
            if (r->kind() == RingKind::PolyInt && v.get_den() != 1)
                throw DomainError("ring_rational: " + v.get_str() + " not in " + r->name());
            SymPoly p;
            if (v != 0) p.terms.emplace(std::vector<unsigned>(r->symbols().size(), 0), v);
            return RingOps::make_poly(r, std::move(p));
        }
    }
    throw DomainError("ring_rational: unknown ring kind");
}

RingElem ring_symbol(const RingPtr& r, size_t index) {
    if (!r->is_poly()) throw StructuralError("ring_symbol: " + r->name() + " has no symbols");
    if (index >= r->symbols().size()) throw StructuralError("ring_symbol: index out of range");
    SymPoly p;
    std::vector<unsigned> e(r->symbols().size(), 0);
    e[index] = 1;
    p.terms.emplace(std::move(e), mpq_class(1));
    return RingOps::make_poly(r, std::move(p));
}

RingElem ring_symbol(const RingPtr& r, const std::string& name) {
    if (!r->is_poly()) throw StructuralError("ring_symbol: " + r->name() + " has no symbols");
    const auto& syms = r->symbols();
    for (size_t i = 0; i < syms.size(); i++)
        if (syms[i] == name) return ring_symbol(r, i);
    throw StructuralError("ring_symbol: no symbol " + name + " in " + r->name());
}

} // namespace fgx
