#include "fgx/fgl.hpp"

#include <sstream>

namespace fgx {

namespace {

TruncatedSeries retrunc(const TruncatedSeries& s, int new_trunc) {
    TruncatedSeries r(s.ring(), s.nvars(), new_trunc);
    for (const auto& [e, c] : s.terms())
        if (total_degree(e) <= new_trunc) r.set_coeff(e, c);
    return r;
}

std::string render_monomial(const Expo& e, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool star = false;
    for (size_t i = 0; i < e.size(); i++) {
        if (!e[i]) continue;
        if (star) out << "*";
        out << names[i];
        if (e[i] > 1) out << "^" << e[i];
        star = true;
    }
    std::string s = out.str();
    return s.empty() ? "1" : s;
}

/* First coefficient (grlex order) where the two sides disagree. */
bool first_defect(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                  const std::string& axiom, const std::vector<std::string>& names,
                  AxiomReport& rep) {
    TruncatedSeries d = lhs - rhs;
    if (d.is_zero()) return false;
    /* lowest total degree, ascending lex within it */
    Expo e = d.terms().begin()->first;
    int deg = total_degree(e);
    for (const auto& [cand, c] : d.terms()) {
        if (total_degree(cand) != deg) break;
        if (cand < e) e = cand;
    }
    rep.ok = false;
    rep.axiom = axiom;
    rep.exponents = e;
    rep.monomial = render_monomial(e, names);
    rep.lhs = lhs.coeff(e).to_string();
    rep.rhs = rhs.coeff(e).to_string();
    return true;
}

/* The curve equation w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3
   has a unique series solution of valuation 3; each iteration pass gains at
   least one degree of precision. */
TruncatedSeries curve_w(const RingPtr& R, const std::vector<RingElem>& a, int trunc) {
    TruncatedSeries z = TruncatedSeries::variable(R, 1, trunc, 0);
    TruncatedSeries z3 = z.pow(3);
    TruncatedSeries z2 = z.pow(2);
    TruncatedSeries w(R, 1, trunc);
    for (int pass = 0; pass <= trunc; pass++) {
        TruncatedSeries w2 = w * w;
        TruncatedSeries next = z3 + (z * w).scalar_mul(a[0]) + (z2 * w).scalar_mul(a[1]) +
                               w2.scalar_mul(a[2]) + (z * w2).scalar_mul(a[3]) +
                               (w2 * w).scalar_mul(a[4]);
        if (next == w) break;
        w = next;
    }
    return w;
}

TruncatedSeries elliptic_series(const std::vector<RingElem>& a, int trunc) {
    if (a.size() != 5) throw StructuralError("elliptic: expected coefficients a1,a2,a3,a4,a6");
    const RingPtr& R = a[0].ring();
    for (const auto& c : a)
        if (!same_ring(c.ring(), R)) throw StructuralError("elliptic: mixed coefficient rings");
    int D = trunc;

    TruncatedSeries w = curve_w(R, a, D + 1);

    /* Slope of the chord through (z1, w(z1)) and (z2, w(z2)) as a divided
       difference: z^n contributes sum_{i+j=n-1} z1^i z2^j, so no division. */
    TruncatedSeries lam(R, 2, D);
    for (const auto& [e, c] : w.terms()) {
        int n = (int)e[0];
        if (n - 1 > D) continue;
        for (int i = 0; i <= n - 1; i++) {
            Expo m{(unsigned)i, (unsigned)(n - 1 - i)};
            lam.set_coeff(m, lam.coeff(m) + c);
        }
    }

    TruncatedSeries z1 = TruncatedSeries::variable(R, 2, D, 0);
    TruncatedSeries z2 = TruncatedSeries::variable(R, 2, D, 1);
    TruncatedSeries wz1 = retrunc(w, D).substitute({z1});
    TruncatedSeries nu = wz1 - lam * z1;

    RingElem two = ring_int(R, 2), three = ring_int(R, 3);
    TruncatedSeries one2 = TruncatedSeries::constant(R, 2, D, ring_one(R));
    TruncatedSeries lam2 = lam * lam, lam3 = lam2 * lam;
    /* Substituting w = lam z + nu into the curve gives a cubic in z whose
       z^3 and z^2 coefficients are A and B below; the third chord point is
       z3 = -z1 - z2 - B/A. */
    TruncatedSeries A = one2 + lam.scalar_mul(a[1]) + lam2.scalar_mul(a[3]) + lam3.scalar_mul(a[4]);
    TruncatedSeries B = lam.scalar_mul(a[0]) + lam2.scalar_mul(a[2]) + nu.scalar_mul(a[1]) +
                        (lam * nu).scalar_mul(two * a[3]) + (lam2 * nu).scalar_mul(three * a[4]);
    TruncatedSeries z3 = -z1 - z2 - B * A.invert_unit();

    /* Group inverse on the curve: i(z) = -z (1 - a1 z - a3 w(z))^{-1}. */
    TruncatedSeries zu = TruncatedSeries::variable(R, 1, D, 0);
    TruncatedSeries one1 = TruncatedSeries::constant(R, 1, D, ring_one(R));
    TruncatedSeries den = one1 - zu.scalar_mul(a[0]) - retrunc(w, D).scalar_mul(a[2]);
    TruncatedSeries iota = (-zu) * den.invert_unit();

    return iota.substitute({z3});
}

} // namespace

FormalGroupLaw::FormalGroupLaw(std::string name, TruncatedSeries f)
    : name_(std::move(name)), series_(std::move(f)) {
    if (series_.nvars() != 2) throw StructuralError("formal group law: series must be bivariate");
    if (!series_.constant_term().is_zero())
        throw DomainError("formal group law: nonzero constant term");
}

FormalGroupLaw FormalGroupLaw::additive(const RingPtr& ring, int trunc) {
    TruncatedSeries u = TruncatedSeries::variable(ring, 2, trunc, 0);
    TruncatedSeries v = TruncatedSeries::variable(ring, 2, trunc, 1);
    return FormalGroupLaw("additive", u + v);
}

FormalGroupLaw FormalGroupLaw::multiplicative(const RingPtr& ring, int trunc) {
    TruncatedSeries u = TruncatedSeries::variable(ring, 2, trunc, 0);
    TruncatedSeries v = TruncatedSeries::variable(ring, 2, trunc, 1);
    return FormalGroupLaw("multiplicative", u + v - u * v);
}

FormalGroupLaw FormalGroupLaw::lorentz(const RingPtr& ring, int trunc) {
    TruncatedSeries u = TruncatedSeries::variable(ring, 2, trunc, 0);
    TruncatedSeries v = TruncatedSeries::variable(ring, 2, trunc, 1);
    TruncatedSeries one = TruncatedSeries::constant(ring, 2, trunc, ring_one(ring));
    return FormalGroupLaw("lorentz", (u + v) * (one + u * v).invert_unit());
}

FormalGroupLaw FormalGroupLaw::elliptic(const std::vector<RingElem>& coeffs, int trunc) {
    return FormalGroupLaw("elliptic", elliptic_series(coeffs, trunc));
}

FormalGroupLaw FormalGroupLaw::elliptic_symbolic(int trunc) {
    RingPtr R = Ring::poly_over_integers({"a1", "a2", "a3", "a4", "a6"});
    std::vector<RingElem> a;
    for (int i = 0; i < 5; i++) a.push_back(ring_symbol(R, i));
    return FormalGroupLaw("elliptic", elliptic_series(a, trunc));
}

FormalGroupLaw FormalGroupLaw::symbolic(int trunc) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;
    for (int d = 2; d <= trunc; d++)
        for (int i = 1; i <= d - i; i++) {
            pairs.emplace_back(i, d - i);
            names.push_back("a" + std::to_string(i) + std::to_string(d - i));
        }
    if (names.empty()) throw StructuralError("symbolic: truncation order below 2");
    RingPtr R = Ring::poly_over_integers(names);
    TruncatedSeries u = TruncatedSeries::variable(R, 2, trunc, 0);
    TruncatedSeries v = TruncatedSeries::variable(R, 2, trunc, 1);
    TruncatedSeries f = u + v;
    for (size_t k = 0; k < pairs.size(); k++) {
        auto [i, j] = pairs[k];
        RingElem s = ring_symbol(R, (int)k);
        TruncatedSeries m = u.pow(i) * v.pow(j);
        if (i != j) m += u.pow(j) * v.pow(i);
        f += m.scalar_mul(s);
    }
    return FormalGroupLaw("symbolic", f);
}

FormalGroupLaw FormalGroupLaw::custom(std::string name, TruncatedSeries f) {
    return FormalGroupLaw(std::move(name), std::move(f));
}

bool FormalGroupLaw::is_additive() const {
    TruncatedSeries u = TruncatedSeries::variable(ring(), 2, trunc(), 0);
    TruncatedSeries v = TruncatedSeries::variable(ring(), 2, trunc(), 1);
    return series_ == u + v;
}

FormalGroupLaw FormalGroupLaw::truncate(int new_trunc) const {
    if (new_trunc > trunc())
        throw StructuralError("truncate: cannot extend a truncated law");
    return FormalGroupLaw(name_, retrunc(series_, new_trunc));
}

FormalGroupLaw FormalGroupLaw::convert_ring(const RingPtr& target) const {
    return FormalGroupLaw(name_, series_.convert_ring(target));
}

TruncatedSeries FormalGroupLaw::formal_inverse() const {
    const RingPtr& R = ring();
    int D = trunc();
    TruncatedSeries u = TruncatedSeries::variable(R, 1, D, 0);
    TruncatedSeries zero(R, 1, D);
    if (series_.substitute({u, zero}) != u || series_.substitute({zero, u}) != u)
        throw DomainError("formal_inverse: unit axioms fail");
    /* With F(u,v) = u + v + higher, adding b u^k to the candidate shifts the
       u^k coefficient of F(u, i(u)) by exactly b, so each degree is fixed by
       one subtraction. */
    TruncatedSeries iota = -u;
    for (int k = 2; k <= D; k++) {
        TruncatedSeries g = series_.substitute({u, iota});
        RingElem d = g.coeff({(unsigned)k});
        if (d.is_zero()) continue;
        iota.set_coeff({(unsigned)k}, iota.coeff({(unsigned)k}) - d);
    }
    return iota;
}

TruncatedSeries FormalGroupLaw::logarithm() const {
    if (ring()->characteristic() != 0)
        throw DomainError("logarithm: positive characteristic");
    int D = trunc();
    /* l'(u) = 1/g(u) with g(u) the v-linear coefficient of F at v = 0. */
    TruncatedSeries g = series_.extract_var_power(1, 1).drop_var(1);
    if (!g.constant_term().is_one())
        throw DomainError("logarithm: v-linear coefficient is not unit-normalized");
    RingPtr RQ = rational_extension(ring());
    TruncatedSeries h = g.convert_ring(RQ).invert_unit();
    TruncatedSeries trimmed(RQ, 1, D);
    for (const auto& [e, c] : h.terms())
        if (total_degree(e) < D) trimmed.set_coeff(e, c);
    return trimmed.integrate_univar();
}

AxiomReport FormalGroupLaw::verify_axioms() const {
    const RingPtr& R = ring();
    int D = trunc();
    AxiomReport rep;

    TruncatedSeries u1 = TruncatedSeries::variable(R, 1, D, 0);
    TruncatedSeries zero1(R, 1, D);
    if (first_defect(series_.substitute({u1, zero1}), u1, "left-unit", {"u"}, rep)) return rep;
    if (first_defect(series_.substitute({zero1, u1}), u1, "right-unit", {"v"}, rep)) return rep;

    TruncatedSeries u2 = TruncatedSeries::variable(R, 2, D, 0);
    TruncatedSeries v2 = TruncatedSeries::variable(R, 2, D, 1);
    if (first_defect(series_, series_.substitute({v2, u2}), "commutativity", {"u", "v"}, rep))
        return rep;

    TruncatedSeries u3 = TruncatedSeries::variable(R, 3, D, 0);
    TruncatedSeries v3 = TruncatedSeries::variable(R, 3, D, 1);
    TruncatedSeries w3 = TruncatedSeries::variable(R, 3, D, 2);
    TruncatedSeries lhs = series_.substitute({series_.substitute({u3, v3}), w3});
    TruncatedSeries rhs = series_.substitute({u3, series_.substitute({v3, w3})});
    if (first_defect(lhs, rhs, "associativity", {"u", "v", "w"}, rep)) return rep;

    TruncatedSeries iota = formal_inverse();
    if (first_defect(series_.substitute({u1, iota}), TruncatedSeries(R, 1, D), "inverse", {"u"},
                     rep))
        return rep;
    return rep;
}

TruncatedSeries FormalGroupLaw::formal_sum(const TruncatedSeries& x,
                                           const TruncatedSeries& y) const {
    return series_.substitute({x, y});
}

TruncatedSeries FormalGroupLaw::formal_negate(const TruncatedSeries& x) const {
    return formal_inverse().substitute({x});
}

TruncatedSeries FormalGroupLaw::int_multiple(const mpz_class& n, const TruncatedSeries& x) const {
    TruncatedSeries result(x.ring(), x.nvars(), x.trunc());
    if (n == 0) return result;
    TruncatedSeries base = n < 0 ? formal_negate(x) : x;
    mpz_class m = abs(n);
    while (m > 0) {
        if (mpz_odd_p(m.get_mpz_t()))
            result = result.is_zero() ? base : formal_sum(result, base);
        m >>= 1;
        if (m > 0) base = formal_sum(base, base);
    }
    return result;
}

} // namespace fgx
