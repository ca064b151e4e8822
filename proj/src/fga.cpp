#include "fgx/fga.hpp"

#include <sstream>

namespace fgx {

namespace {

/* Structural context equality: same root system, same law name and series. */
bool same_context(const FgaCtxPtr& a, const FgaCtxPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->root_system().type() == b->root_system().type() &&
           a->root_system().rank() == b->root_system().rank() &&
           same_ring(a->ring(), b->ring()) && a->trunc() == b->trunc() &&
           a->law().series() == b->law().series();
}

std::vector<std::string> var_names(const RootSystem& rs) {
    std::vector<std::string> names;
    for (int i = 0; i < rs.rank(); ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

} // namespace

FgaContext::FgaContext(RootSystem rs, FormalGroupLaw law) : rs_(std::move(rs)), law_(std::move(law)) {}

FgaCtxPtr make_context(RootSystem rs, FormalGroupLaw law) {
    return std::make_shared<const FgaContext>(std::move(rs), std::move(law));
}

const TruncatedSeries& FgaContext::inverse_series() const {
    if (!iota_) iota_ = law_.formal_inverse();
    return *iota_;
}

const TruncatedSeries& FgaContext::x_of_weight(const std::vector<mpz_class>& w) const {
    if ((int)w.size() != rs_.rank())
        throw StructuralError("x_of_weight: weight has wrong rank");
    auto it = xcache_.find(w);
    if (it != xcache_.end()) return it->second;

    TruncatedSeries acc(ring(), nvars(), trunc());
    for (int i = 0; i < rs_.rank(); ++i) {
        if (w[i] == 0) continue;
        TruncatedSeries xi = TruncatedSeries::variable(ring(), nvars(), trunc(), i);
        TruncatedSeries term = law_.int_multiple(w[i], xi);
        acc = acc.is_zero() ? term : law_.formal_sum(acc, term);
    }
    return xcache_.emplace(w, std::move(acc)).first->second;
}

FgaElement::FgaElement(FgaCtxPtr ctx, TruncatedSeries s) : ctx_(std::move(ctx)), series_(std::move(s)) {
    if (!ctx_) throw StructuralError("FgaElement: null context");
    if (series_.nvars() != ctx_->nvars() || series_.trunc() != ctx_->trunc() ||
        !same_ring(series_.ring(), ctx_->ring()))
        throw StructuralError("FgaElement: series does not match context");
}

FgaElement FgaElement::zero(const FgaCtxPtr& ctx) {
    return FgaElement(ctx, TruncatedSeries(ctx->ring(), ctx->nvars(), ctx->trunc()));
}

FgaElement FgaElement::one(const FgaCtxPtr& ctx) {
    return constant(ctx, ring_one(ctx->ring()));
}

FgaElement FgaElement::constant(const FgaCtxPtr& ctx, const RingElem& c) {
    return FgaElement(ctx, TruncatedSeries::constant(ctx->ring(), ctx->nvars(), ctx->trunc(), c));
}

FgaElement FgaElement::x_of_weight(const FgaCtxPtr& ctx, const std::vector<mpz_class>& w) {
    return FgaElement(ctx, ctx->x_of_weight(w));
}

FgaElement FgaElement::operator+(const FgaElement& o) const {
    if (!same_context(ctx_, o.ctx_)) throw StructuralError("FgaElement: context mismatch");
    return FgaElement(ctx_, series_ + o.series_);
}

FgaElement FgaElement::operator-(const FgaElement& o) const {
    if (!same_context(ctx_, o.ctx_)) throw StructuralError("FgaElement: context mismatch");
    return FgaElement(ctx_, series_ - o.series_);
}

FgaElement FgaElement::operator*(const FgaElement& o) const {
    if (!same_context(ctx_, o.ctx_)) throw StructuralError("FgaElement: context mismatch");
    return FgaElement(ctx_, series_ * o.series_);
}

FgaElement FgaElement::operator-() const { return FgaElement(ctx_, -series_); }

FgaElement FgaElement::scalar_mul(const RingElem& c) const {
    return FgaElement(ctx_, series_.scalar_mul(c));
}

FgaElement FgaElement::pow(int k) const { return FgaElement(ctx_, series_.pow(k)); }

bool FgaElement::operator==(const FgaElement& o) const {
    if (!same_context(ctx_, o.ctx_)) throw StructuralError("FgaElement: context mismatch");
    return series_ == o.series_;
}

RingElem FgaElement::augment() const { return series_.constant_term(); }

FgaElement FgaElement::weyl_act(const std::vector<int>& word) const {
    const RootSystem& rs = ctx_->root_system();
    std::vector<TruncatedSeries> images;
    images.reserve(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) {
        std::vector<mpz_class> w = rs.act(word, rs.fundamental_weight(j));
        images.push_back(ctx_->x_of_weight(w));
    }
    return FgaElement(ctx_, series_.substitute(images));
}

std::string FgaElement::to_string() const {
    return series_.to_string(var_names(ctx_->root_system()));
}

SymmetricSlice leading_form(const FgaElement& f, int d) {
    if (d < 0) throw StructuralError("leading_form: negative degree");
    const FgaCtxPtr& ctx = f.context();
    if (d > ctx->trunc()) throw StructuralError("leading_form: degree exceeds truncation");
    auto val = f.valuation();
    if (val && *val < d)
        throw DomainError("leading_form: element has valuation below the requested degree");
    std::vector<Expo> mons = monomials_of_degree(ctx->nvars(), d);
    SymmetricSlice slice;
    slice.d = d;
    slice.coeffs.reserve(mons.size());
    for (const Expo& e : mons) slice.coeffs.push_back(f.series().coeff(e));
    return slice;
}

FgaElement deform(const FgaCtxPtr& src, const FgaCtxPtr& dst, const FgaElement& f) {
    if (!same_context(src, f.context()))
        throw StructuralError("deform: element does not belong to the source context");
    if (src->root_system().type() != dst->root_system().type() ||
        src->root_system().rank() != dst->root_system().rank())
        throw StructuralError("deform: root systems differ");
    if (!same_ring(src->ring(), dst->ring())) throw StructuralError("deform: coefficient rings differ");
    if (src->trunc() != dst->trunc()) throw StructuralError("deform: truncation orders differ");
    return FgaElement(dst, f.series());
}

} // namespace fgx
