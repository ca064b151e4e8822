#include "fgx/chern.hpp"

#include <sstream>

namespace fgx {

namespace {

void check_root_space(const TruncatedSeries& s, const RingPtr& ring, int nvars, int trunc) {
    if (!same_ring(s.ring(), ring) || s.nvars() != nvars || s.trunc() != trunc)
        throw StructuralError("chern: root series in the wrong space");
    if (!s.constant_term().is_zero()) throw StructuralError("chern: root with nonzero constant term");
}

void check_bundle(const RootBundle& E, int nvars) {
    for (int idx : E.roots)
        if (idx < 0 || idx >= nvars) throw StructuralError("chern: root index outside the space");
}

/* Left fold of the formal sum over the given roots, in list order. */
TruncatedSeries fold_sum(const FormalGroupLaw& F, const std::vector<TruncatedSeries>& roots) {
    if (roots.empty()) throw StructuralError("chern: empty formal sum");
    TruncatedSeries acc = roots[0];
    for (size_t i = 1; i < roots.size(); ++i) acc = F.formal_sum(acc, roots[i]);
    return acc;
}

std::string render_first_term(const TruncatedSeries& s) {
    if (s.is_zero()) return "0";
    const auto& [e, c] = *s.terms().begin();
    std::ostringstream os;
    os << c.to_string() << " @ (";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    os << ")";
    return os.str();
}

} // namespace

TotalClass::TotalClass(RingPtr ring, int nvars, int trunc, int tmax)
    : ring_(std::move(ring)), nvars_(nvars), trunc_(trunc) {
    if (tmax < 0) throw StructuralError("TotalClass: negative t-degree");
    ch_.assign(tmax + 1, TruncatedSeries(ring_, nvars_, trunc_));
    ch_[0] = TruncatedSeries::constant(ring_, nvars_, trunc_, ring_one(ring_));
}

const TruncatedSeries& TotalClass::at(int i) const {
    if (i < 0 || i > tmax()) throw StructuralError("TotalClass: t-degree out of range");
    return ch_[i];
}

TotalClass TotalClass::operator*(const TotalClass& o) const {
    if (!same_ring(ring_, o.ring_) || nvars_ != o.nvars_ || trunc_ != o.trunc_ || tmax() != o.tmax())
        throw StructuralError("TotalClass: mismatched spaces");
    TotalClass out(ring_, nvars_, trunc_, tmax());
    for (int k = 0; k <= tmax(); ++k) {
        TruncatedSeries acc(ring_, nvars_, trunc_);
        for (int i = 0; i <= k; ++i) acc += ch_[i] * o.ch_[k - i];
        out.ch_[k] = std::move(acc);
    }
    return out;
}

TotalClass TotalClass::inverse() const {
    TotalClass out(ring_, nvars_, trunc_, tmax());
    for (int k = 1; k <= tmax(); ++k) {
        TruncatedSeries acc(ring_, nvars_, trunc_);
        for (int j = 1; j <= k; ++j) acc += ch_[j] * out.ch_[k - j];
        out.ch_[k] = -acc;
    }
    return out;
}

TotalClass TotalClass::pow_int(int e) const {
    TotalClass base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    TotalClass acc(ring_, nvars_, trunc_, tmax());
    for (int i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

TotalClass TotalClass::from_roots(const RingPtr& ring, int nvars, int trunc, int tmax,
                                  const std::vector<TruncatedSeries>& roots) {
    TotalClass acc(ring, nvars, trunc, tmax);
    for (const TruncatedSeries& root : roots) {
        check_root_space(root, ring, nvars, trunc);
        TotalClass factor(ring, nvars, trunc, tmax);
        if (tmax >= 1) factor.ch_[1] = root;
        acc = acc * factor;
    }
    return acc;
}

std::vector<TruncatedSeries> bundle_roots(const FormalGroupLaw& F, const RootBundle& E, int nvars) {
    check_bundle(E, nvars);
    std::vector<TruncatedSeries> out;
    out.reserve(E.roots.size());
    for (int idx : E.roots)
        out.push_back(TruncatedSeries::variable(F.ring(), nvars, F.trunc(), idx));
    return out;
}

std::vector<TruncatedSeries> dual_roots(const FormalGroupLaw& F, const RootBundle& E, int nvars) {
    check_bundle(E, nvars);
    TruncatedSeries iota = F.formal_inverse();
    std::vector<TruncatedSeries> out;
    out.reserve(E.roots.size());
    for (int idx : E.roots)
        out.push_back(iota.substitute({TruncatedSeries::variable(F.ring(), nvars, F.trunc(), idx)}));
    return out;
}

std::vector<TruncatedSeries> tensor_roots(const FormalGroupLaw& F,
                                          const std::vector<TruncatedSeries>& a,
                                          const std::vector<TruncatedSeries>& b) {
    std::vector<TruncatedSeries> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(F.formal_sum(x, y));
    return out;
}

std::vector<TruncatedSeries> exterior_roots(const FormalGroupLaw& F,
                                            const std::vector<TruncatedSeries>& roots, int l) {
    int r = (int)roots.size();
    if (l < 1 || l > r) throw StructuralError("exterior power index out of range");
    std::vector<TruncatedSeries> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if ((int)pick.size() == l) {
            std::vector<TruncatedSeries> chosen;
            for (int i : pick) chosen.push_back(roots[i]);
            out.push_back(fold_sum(F, chosen));
            return;
        }
        for (int i = from; i < r; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

TotalClass total_class(const FormalGroupLaw& F, const RootBundle& E, int nvars, int tmax) {
    return TotalClass::from_roots(F.ring(), nvars, F.trunc(), tmax, bundle_roots(F, E, nvars));
}

TotalClass dual_class(const FormalGroupLaw& F, const RootBundle& E, int nvars, int tmax) {
    return TotalClass::from_roots(F.ring(), nvars, F.trunc(), tmax, dual_roots(F, E, nvars));
}

TotalClass tensor_class(const FormalGroupLaw& F, const RootBundle& E, const RootBundle& Ep,
                        int nvars, int tmax) {
    return TotalClass::from_roots(F.ring(), nvars, F.trunc(), tmax,
                                  tensor_roots(F, bundle_roots(F, E, nvars), bundle_roots(F, Ep, nvars)));
}

TotalClass exterior_class(const FormalGroupLaw& F, const RootBundle& E, int l, int nvars, int tmax) {
    return TotalClass::from_roots(F.ring(), nvars, F.trunc(), tmax,
                                  exterior_roots(F, bundle_roots(F, E, nvars), l));
}

TotalClass virtual_class(const std::vector<std::pair<TotalClass, int>>& factors) {
    if (factors.empty()) throw StructuralError("virtual_class: no factors");
    TotalClass acc = factors[0].first.pow_int(factors[0].second);
    for (size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i].first.pow_int(factors[i].second);
    return acc;
}

CheckOutcome verify_gamma_congruence(const FormalGroupLaw& F, int r, int class_degree) {
    if (r < 1) throw StructuralError("verify_gamma_congruence: r must be >= 1");
    if (class_degree < r) throw StructuralError("verify_gamma_congruence: class degree below r");
    FormalGroupLaw law = F.trunc() == class_degree ? F : F.truncate(class_degree);
    const RingPtr& R = law.ring();

    RootBundle E;
    for (int i = 0; i < r; ++i) E.roots.push_back(i);
    std::vector<TruncatedSeries> duals = dual_roots(law, E, r);

    /* prod over nonempty subsets of (1 + x_S t)^{(-1)^{|S|}}; grouping by
       subset size reproduces the alternating exterior-power product. */
    TotalClass acc(R, r, class_degree, r);
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        std::vector<TruncatedSeries> chosen;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) chosen.push_back(duals[i]);
        TotalClass factor = TotalClass::from_roots(R, r, class_degree, r, {fold_sum(law, chosen)});
        acc = acc * (chosen.size() % 2 ? factor.inverse() : factor);
    }

    TruncatedSeries got = acc.at(r).homogeneous_part(r);
    TruncatedSeries want(R, r, class_degree);
    mpz_class fact = 1;
    for (int i = 2; i < r; ++i) fact *= i;
    if (r % 2 == 0) fact = -fact;
    want.set_coeff(Expo(r, 1), ring_int(R, fact));

    CheckOutcome out;
    if (got != want) {
        out.ok = false;
        TruncatedSeries diff = got - want;
        out.detail = "t^" + std::to_string(r) + " coefficient differs, first offending term " +
                     render_first_term(diff);
    }
    return out;
}

CheckOutcome verify_exterior_recursion(const FormalGroupLaw& F, int r) {
    if (r < 2) throw StructuralError("verify_exterior_recursion: r must be >= 2");
    int n = r;
    RootBundle full, sub, line;
    for (int i = 0; i < r; ++i) full.roots.push_back(i);
    for (int i = 0; i < r - 1; ++i) sub.roots.push_back(i);
    line.roots.push_back(r - 1);

    std::vector<TruncatedSeries> sub_roots = bundle_roots(F, sub, n);
    std::vector<TruncatedSeries> line_roots = bundle_roots(F, line, n);

    for (int l = 1; l <= r; ++l) {
        TotalClass lhs = exterior_class(F, full, l, n, r);
        std::vector<TruncatedSeries> mixed =
            l == 1 ? line_roots : tensor_roots(F, exterior_roots(F, sub_roots, l - 1), line_roots);
        TotalClass rhs = TotalClass::from_roots(F.ring(), n, F.trunc(), r, mixed);
        if (l < r) rhs = rhs * TotalClass::from_roots(F.ring(), n, F.trunc(), r,
                                                      exterior_roots(F, sub_roots, l));
        if (lhs != rhs) {
            CheckOutcome out;
            out.ok = false;
            for (int k = 0; k <= r; ++k) {
                if (lhs.at(k) == rhs.at(k)) continue;
                out.detail = "wedge^" + std::to_string(l) + " mismatch at t^" + std::to_string(k) +
                             ", first offending term " + render_first_term(lhs.at(k) - rhs.at(k));
                break;
            }
            return out;
        }
    }
    return {};
}

} // namespace fgx
