#pragma once
#include <string>
#include <utility>
#include <vector>

#include "fgx/fgl.hpp"

namespace fgx {

/* Formal bundle presented by its Chern roots: indices of variables in a
   shared multivariate series space (one space per computation, so classes of
   different bundles multiply freely). */
struct RootBundle {
    std::vector<int> roots;
    int rank() const { return (int)roots.size(); }
};

/* Total characteristic class 1 + ch_1 t + ... + ch_tmax t^tmax. The t^0
   coefficient is identically 1 and ch_i has valuation >= i in the roots;
   both are preserved by every operation here. */
class TotalClass {
public:
    TotalClass(RingPtr ring, int nvars, int trunc, int tmax);  // the class 1

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    int trunc() const { return trunc_; }
    int tmax() const { return (int)ch_.size() - 1; }
    const TruncatedSeries& at(int i) const;

    TotalClass operator*(const TotalClass& o) const;
    /* Inverse in t; the unit constant term makes this total. */
    TotalClass inverse() const;
    /* Integer power, negative through the inverse. */
    TotalClass pow_int(int e) const;
    bool operator==(const TotalClass& o) const { return ch_ == o.ch_; }
    bool operator!=(const TotalClass& o) const { return !(*this == o); }

    /* prod_i (1 + root_i t); all roots must live in the stated space and
       have zero constant term. */
    static TotalClass from_roots(const RingPtr& ring, int nvars, int trunc, int tmax,
                                 const std::vector<TruncatedSeries>& roots);

private:
    RingPtr ring_;
    int nvars_ = 0, trunc_ = 0;
    std::vector<TruncatedSeries> ch_;
};

/* Chern-root series of a bundle: the bare variables. */
std::vector<TruncatedSeries> bundle_roots(const FormalGroupLaw& F, const RootBundle& E, int nvars);
/* Roots of the dual bundle: the formal inverse applied to each variable. */
std::vector<TruncatedSeries> dual_roots(const FormalGroupLaw& F, const RootBundle& E, int nvars);
/* Roots of a tensor product of root lists: all pairwise formal sums, left
   factor index ascending first. */
std::vector<TruncatedSeries> tensor_roots(const FormalGroupLaw& F,
                                          const std::vector<TruncatedSeries>& a,
                                          const std::vector<TruncatedSeries>& b);
/* Roots of the l-th exterior power: formal sums over ascending index
   subsets of size l; requires 1 <= l <= #roots. */
std::vector<TruncatedSeries> exterior_roots(const FormalGroupLaw& F,
                                            const std::vector<TruncatedSeries>& roots, int l);

TotalClass total_class(const FormalGroupLaw& F, const RootBundle& E, int nvars, int tmax);
TotalClass dual_class(const FormalGroupLaw& F, const RootBundle& E, int nvars, int tmax);
TotalClass tensor_class(const FormalGroupLaw& F, const RootBundle& E, const RootBundle& Ep,
                        int nvars, int tmax);
TotalClass exterior_class(const FormalGroupLaw& F, const RootBundle& E, int l, int nvars, int tmax);

/* Product of classes raised to integer exponents (negative exponents through
   the truncated inverse). */
TotalClass virtual_class(const std::vector<std::pair<TotalClass, int>>& factors);

struct CheckOutcome {
    bool ok = true;
    std::string detail;  // first discrepancy when not ok
};

/* Alternating product over exterior powers of the dual of the rank-r bundle
   with roots x_1..x_r: the t^r coefficient of
   prod_{S nonempty} (1 + x_S t)^{(-1)^{|S|}}, x_S the formal sum of the
   inverted roots over S, must have degree-r homogeneous part equal to
   (-1)^{r-1} (r-1)! x_1 ... x_r. Root degrees above class_degree are
   discarded throughout. */
CheckOutcome verify_gamma_congruence(const FormalGroupLaw& F, int r, int class_degree);

/* ch(wedge^l (E + L)) == ch(wedge^{l-1} E tensor L) * ch(wedge^l E) for a
   rank r-1 bundle E and a line L, checked for l = 1..r at the law's
   truncation. */
CheckOutcome verify_exterior_recursion(const FormalGroupLaw& F, int r);

} // namespace fgx
