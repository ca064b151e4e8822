#include "fgx/series.hpp"

#include <algorithm>
#include <sstream>

namespace fgx {

std::vector<Expo> monomials_of_degree(int nvars, int d) {
    std::vector<Expo> out;
    Expo cur(nvars, 0);
    // lexicographically descending enumeration of compositions of d
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur[pos] = (unsigned)rem;
            out.push_back(cur);
            return;
        }
        for (int v = rem; v >= 0; v--) {
            cur[pos] = (unsigned)v;
            self(self, pos + 1, rem - v);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

TruncatedSeries::TruncatedSeries(RingPtr ring, int nvars, int trunc)
    : ring_(std::move(ring)), nvars_(nvars), trunc_(trunc) {
    if (nvars_ < 0) throw StructuralError("series: negative variable count");
    if (trunc_ < 1) throw StructuralError("series: truncation order must be positive");
}

TruncatedSeries TruncatedSeries::constant(const RingPtr& ring, int nvars, int trunc, const RingElem& c) {
    TruncatedSeries s(ring, nvars, trunc);
    if (!same_ring(ring, c.ring())) throw StructuralError("constant: coefficient ring mismatch");
    if (!c.is_zero()) s.terms_.emplace(Expo(nvars, 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(const RingPtr& ring, int nvars, int trunc, int i) {
    TruncatedSeries s(ring, nvars, trunc);
    if (i < 0 || i >= nvars) throw StructuralError("variable: index out of range");
    Expo e(nvars, 0);
    e[i] = 1;
    s.terms_.emplace(std::move(e), ring_one(ring));
    return s;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o, const char* op) const {
    if (!same_ring(ring_, o.ring_))
        throw StructuralError(std::string(op) + ": coefficient ring mismatch");
    if (nvars_ != o.nvars_)
        throw StructuralError(std::string(op) + ": variable count mismatch");
    if (trunc_ != o.trunc_)
        throw StructuralError(std::string(op) + ": truncation order mismatch");
}

RingElem TruncatedSeries::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_zero(ring_) : it->second;
}

RingElem TruncatedSeries::constant_term() const { return coeff(Expo(nvars_, 0)); }

void TruncatedSeries::set_coeff(const Expo& e, const RingElem& c) {
    if ((int)e.size() != nvars_) throw StructuralError("set_coeff: wrong exponent length");
    if (total_degree(e) > trunc_) throw StructuralError("set_coeff: degree beyond truncation");
    if (!same_ring(ring_, c.ring())) throw StructuralError("set_coeff: coefficient ring mismatch");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_compatible(o, "add");
    TruncatedSeries r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(ring_, nvars_, trunc_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + (-o); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_compatible(o, "mul");
    TruncatedSeries r(ring_, nvars_, trunc_);
    for (const auto& [ea, ca] : terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + total_degree(eb) > trunc_) continue;
            Expo e(nvars_);
            for (int i = 0; i < nvars_; i++) e[i] = ea[i] + eb[i];
            RingElem c = ca * cb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    check_compatible(o, "eq");
    return terms_ == o.terms_;
}

TruncatedSeries TruncatedSeries::scalar_mul(const RingElem& c) const {
    if (!same_ring(ring_, c.ring())) throw StructuralError("scalar_mul: coefficient ring mismatch");
    TruncatedSeries r(ring_, nvars_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) {
        RingElem p = a * c;
        if (!p.is_zero()) r.terms_.emplace(e, std::move(p));
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
    if (k < 0) throw DomainError("pow: negative exponent");
    TruncatedSeries acc = constant(ring_, nvars_, trunc_, ring_one(ring_));
    for (int i = 0; i < k; i++) acc = acc * *this;
    return acc;
}

TruncatedSeries TruncatedSeries::substitute(const std::vector<TruncatedSeries>& images) const {
    if ((int)images.size() != nvars_)
        throw StructuralError("substitute: expected " + std::to_string(nvars_) + " images");
    if (nvars_ == 0) throw StructuralError("substitute: series has no variables");
    for (const auto& im : images) {
        if (!same_ring(im.ring(), ring_)) throw StructuralError("substitute: image ring mismatch");
        if (im.trunc() != trunc_) throw StructuralError("substitute: image truncation mismatch");
        if (im.nvars() != images[0].nvars())
            throw StructuralError("substitute: images live in different spaces");
        if (!im.constant_term().is_zero())
            throw DomainError("substitute: image has nonzero constant term");
    }
    int out_vars = images[0].nvars();
    TruncatedSeries result(ring_, out_vars, trunc_);
    // powers[i][k] = images[i]^k, filled on demand
    std::vector<std::vector<TruncatedSeries>> powers(nvars_);
    auto power_of = [&](int i, unsigned k) -> const TruncatedSeries& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(ring_, out_vars, trunc_, ring_one(ring_)));
        while (pw.size() <= k) pw.push_back(pw.back() * images[i]);
        return pw[k];
    };
    for (const auto& [e, c] : terms_) {
        TruncatedSeries term = constant(ring_, out_vars, trunc_, c);
        for (int i = 0; i < nvars_ && !term.is_zero(); i++)
            if (e[i]) term = term * power_of(i, e[i]);
        result += term;
    }
    return result;
}

TruncatedSeries TruncatedSeries::invert_unit() const {
    RingElem c = constant_term();
    if (!c.is_unit())
        throw DomainError("invert_unit: constant term " + c.to_string() + " is not a unit");
    RingElem cinv = c.inverse();
    TruncatedSeries one = constant(ring_, nvars_, trunc_, ring_one(ring_));
    TruncatedSeries h = one - scalar_mul(cinv);  // valuation >= 1
    TruncatedSeries acc = one, p = one;
    for (int k = 1; k <= trunc_; k++) {
        p = p * h;
        if (p.is_zero()) break;
        acc += p;
    }
    return acc.scalar_mul(cinv);
}

TruncatedSeries TruncatedSeries::homogeneous_part(int d) const {
    TruncatedSeries r(ring_, nvars_, trunc_);
    if (d > trunc_) throw StructuralError("homogeneous_part: degree beyond truncation");
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
}

std::optional<int> TruncatedSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.begin()->first);  // grlex: first term has minimal degree
}

TruncatedSeries TruncatedSeries::extract_var_power(int var, unsigned k) const {
    if (var < 0 || var >= nvars_) throw StructuralError("extract_var_power: bad variable");
    TruncatedSeries r(ring_, nvars_, trunc_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Expo e2 = e;
        e2[var] = 0;
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::drop_var(int var) const {
    if (var < 0 || var >= nvars_) throw StructuralError("drop_var: bad variable");
    TruncatedSeries r(ring_, nvars_ - 1, trunc_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != 0) throw StructuralError("drop_var: variable occurs in a term");
        Expo e2;
        e2.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; i++)
            if (i != var) e2.push_back(e[i]);
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::partial_derivative(int var) const {
    if (var < 0 || var >= nvars_) throw StructuralError("partial_derivative: bad variable");
    TruncatedSeries r(ring_, nvars_, trunc_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo e2 = e;
        e2[var] -= 1;
        RingElem k = ring_int(ring_, (long)e[var]) * c;
        if (!k.is_zero()) r.terms_.emplace(std::move(e2), std::move(k));
    }
    return r;
}

TruncatedSeries TruncatedSeries::integrate_univar() const {
    if (nvars_ != 1) throw StructuralError("integrate_univar: series is not univariate");
    if (ring_->characteristic() != 0)
        throw DomainError("integrate_univar: positive characteristic");
    TruncatedSeries r(ring_, 1, trunc_);
    for (const auto& [e, c] : terms_) {
        if ((int)e[0] + 1 > trunc_)
            throw DomainError("integrate_univar: top-degree term leaves the truncation window");
        RingElem inv = ring_int(ring_, (long)e[0] + 1).inverse();
        r.terms_.emplace(Expo{e[0] + 1}, c * inv);
    }
    return r;
}

TruncatedSeries TruncatedSeries::convert_ring(const RingPtr& target) const {
    TruncatedSeries r(target, nvars_, trunc_);
    for (const auto& [e, c] : terms_) {
        RingElem c2 = c.convert_to(target);
        if (!c2.is_zero()) r.terms_.emplace(e, std::move(c2));
    }
    return r;
}

std::string TruncatedSeries::to_string(const std::vector<std::string>& var_names) const {
    if ((int)var_names.size() != nvars_) throw StructuralError("to_string: wrong name count");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = false;
        if (!ring_->is_poly() && c.rational_value() < 0) {
            neg = true;
            cs = (-c).to_string();
        }
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        bool has_vars = total_degree(e) > 0;
        bool multi_term_coeff = ring_->is_poly() && c.poly_value().terms.size() > 1;
        bool coeff_shown = !has_vars || cs != "1";
        if (coeff_shown) {
            if (multi_term_coeff && has_vars)
                out << "(" << cs << ")";
            else
                out << cs;
        }
        bool star = coeff_shown;
        for (int i = 0; i < nvars_; i++) {
            if (!e[i]) continue;
            if (star) out << "*";
            out << var_names[i];
            if (e[i] > 1) out << "^" << e[i];
            star = true;
        }
    }
    return out.str();
}

} // namespace fgx
