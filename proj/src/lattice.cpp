#include "fgx/lattice.hpp"

namespace fgx {

namespace {

void swap_rows(IntMat& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.ncols; c++) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.nrows; r++) std::swap(m.at(r, i), m.at(r, j));
}

/* row_i += q * row_j */
void row_axpy(IntMat& m, int i, int j, const mpz_class& q) {
    for (int c = 0; c < m.ncols; c++) m.at(i, c) += q * m.at(j, c);
}

/* col_i += q * col_j */
void col_axpy(IntMat& m, int i, int j, const mpz_class& q) {
    for (int r = 0; r < m.nrows; r++) m.at(r, i) += q * m.at(r, j);
}

void negate_row(IntMat& m, int i) {
    for (int c = 0; c < m.ncols; c++) m.at(i, c) = -m.at(i, c);
}

bool abs_less(const mpz_class& x, const mpz_class& y) {
    return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()) < 0;
}

} // namespace

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
    int r = (int)rows.size();
    int c = r == 0 ? 0 : (int)rows[0].size();
    IntMat m(r, c);
    for (int i = 0; i < r; i++) {
        if ((int)rows[i].size() != c) throw StructuralError("from_rows: ragged rows");
        for (int j = 0; j < c; j++) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<mpz_class> IntMat::row(int i) const {
    return std::vector<mpz_class>(a.begin() + (size_t)i * ncols, a.begin() + (size_t)(i + 1) * ncols);
}

IntMat transpose(const IntMat& m) {
    IntMat t(m.ncols, m.nrows);
    for (int i = 0; i < m.nrows; i++)
        for (int j = 0; j < m.ncols; j++) t.at(j, i) = m.at(i, j);
    return t;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.ncols != y.nrows) throw StructuralError("mat_mul: dimension mismatch");
    IntMat r(x.nrows, y.ncols);
    for (int i = 0; i < x.nrows; i++)
        for (int k = 0; k < x.ncols; k++) {
            const mpz_class& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.ncols; j++) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

HnfResult hnf(const IntMat& m) {
    HnfResult res;
    res.h = m;
    res.u = IntMat::identity(m.nrows);
    IntMat& h = res.h;
    IntMat& u = res.u;
    int r = 0;
    for (int c = 0; c < h.ncols && r < h.nrows; c++) {
        /* Euclid on the column below r: repeatedly move the entry of least
           absolute value to the pivot row and reduce the others by it. */
        while (true) {
            int best = -1;
            for (int i = r; i < h.nrows; i++) {
                if (h.at(i, c) == 0) continue;
                if (best < 0 || abs_less(h.at(i, c), h.at(best, c))) best = i;
            }
            if (best < 0) break;
            swap_rows(h, r, best);
            swap_rows(u, r, best);
            bool leftover = false;
            for (int i = r + 1; i < h.nrows; i++) {
                if (h.at(i, c) == 0) continue;
                mpz_class q = h.at(i, c) / h.at(r, c);
                row_axpy(h, i, r, -q);
                row_axpy(u, i, r, -q);
                if (h.at(i, c) != 0) leftover = true;
            }
            if (!leftover) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (int i = 0; i < r; i++) {
            if (h.at(i, c) == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
            if (q != 0) {
                row_axpy(h, i, r, -q);
                row_axpy(u, i, r, -q);
            }
        }
        res.pivot_cols.push_back(c);
        r++;
    }
    res.rank = r;
    return res;
}

SnfResult snf(const IntMat& m) {
    SnfResult res;
    res.d = m;
    res.u = IntMat::identity(m.nrows);
    res.v = IntMat::identity(m.ncols);
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;
    int lim = std::min(m.nrows, m.ncols);
    int t = 0;
    while (t < lim) {
        int bi = -1, bj = -1;
        for (int i = t; i < d.nrows; i++)
            for (int j = t; j < d.ncols; j++) {
                if (d.at(i, j) == 0) continue;
                if (bi < 0 || abs_less(d.at(i, j), d.at(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;
        swap_rows(d, t, bi);
        swap_rows(u, t, bi);
        swap_cols(d, t, bj);
        swap_cols(v, t, bj);

        bool stable = false;
        while (!stable) {
            stable = true;
            for (int i = t + 1; i < d.nrows; i++) {
                while (d.at(i, t) != 0) {
                    mpz_class q = d.at(i, t) / d.at(t, t);
                    if (q != 0) {
                        row_axpy(d, i, t, -q);
                        row_axpy(u, i, t, -q);
                    }
                    if (d.at(i, t) != 0) {
                        swap_rows(d, i, t);
                        swap_rows(u, i, t);
                    }
                }
            }
            for (int j = t + 1; j < d.ncols; j++) {
                while (d.at(t, j) != 0) {
                    mpz_class q = d.at(t, j) / d.at(t, t);
                    if (q != 0) {
                        col_axpy(d, j, t, -q);
                        col_axpy(v, j, t, -q);
                    }
                    if (d.at(t, j) != 0) {
                        swap_cols(d, j, t);
                        swap_cols(v, j, t);
                        stable = false;
                    }
                }
            }
            for (int i = t + 1; i < d.nrows && stable; i++)
                if (d.at(i, t) != 0) stable = false;
            if (stable) {
                /* Divisibility chain: fold any entry the pivot misses into
                   the pivot row and reduce again. */
                for (int i = t + 1; i < d.nrows && stable; i++)
                    for (int j = t + 1; j < d.ncols && stable; j++)
                        if (d.at(i, j) % d.at(t, t) != 0) {
                            row_axpy(d, t, i, 1);
                            row_axpy(u, t, i, 1);
                            stable = false;
                        }
            }
        }
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
        t++;
    }
    res.rank = t;
    for (int k = 0; k < t; k++) res.divisors.push_back(d.at(k, k));
    return res;
}

IntMat left_kernel(const IntMat& m) {
    HnfResult r = hnf(m);
    IntMat k(m.nrows - r.rank, m.nrows);
    for (int i = r.rank; i < m.nrows; i++)
        for (int j = 0; j < m.nrows; j++) k.at(i - r.rank, j) = r.u.at(i, j);
    return k;
}

IntMat right_kernel(const IntMat& m) { return left_kernel(transpose(m)); }

std::optional<std::vector<mpq_class>> solve_in_rowspan(const HnfResult& h,
                                                       const std::vector<mpq_class>& v) {
    if ((int)v.size() != h.h.ncols) throw StructuralError("solve_in_rowspan: length mismatch");
    std::vector<mpq_class> rem = v;
    std::vector<mpq_class> x(h.rank);
    for (int k = 0; k < h.rank; k++) {
        int c = h.pivot_cols[k];
        if (rem[c] == 0) continue;
        mpq_class coef = rem[c] / mpq_class(h.h.at(k, c));
        x[k] = coef;
        for (int j = c; j < h.h.ncols; j++)
            if (h.h.at(k, j) != 0) rem[j] -= coef * mpq_class(h.h.at(k, j));
    }
    for (const auto& q : rem)
        if (q != 0) return std::nullopt;
    return x;
}

std::optional<mpz_class> order_mod_lattice(const std::vector<mpz_class>& v, const IntMat& L) {
    if ((int)v.size() != L.ncols) throw StructuralError("order_mod_lattice: length mismatch");
    HnfResult h = hnf(L);
    std::vector<mpq_class> vq;
    vq.reserve(v.size());
    for (const auto& z : v) vq.emplace_back(z);
    auto x = solve_in_rowspan(h, vq);
    if (!x) return std::nullopt;
    mpz_class n = 1;
    for (const auto& q : *x) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
    return n;
}

std::vector<mpz_class> quotient_divisors(const IntMat& A, const IntMat& B) {
    if (A.ncols != B.ncols) throw StructuralError("quotient_divisors: ambient space mismatch");
    IntMat stack(A.nrows + B.nrows, A.ncols);
    for (int i = 0; i < A.nrows; i++)
        for (int j = 0; j < A.ncols; j++) stack.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.nrows; i++)
        for (int j = 0; j < B.ncols; j++) stack.at(A.nrows + i, j) = B.at(i, j);
    HnfResult h = hnf(stack);
    if (h.rank == 0) return {};

    /* Coordinates of A's rows in the HNF basis of A + B; integral since
       A is contained in A + B. */
    IntMat coords(A.nrows, h.rank);
    for (int i = 0; i < A.nrows; i++) {
        std::vector<mpq_class> vq;
        for (int j = 0; j < A.ncols; j++) vq.emplace_back(A.at(i, j));
        auto x = solve_in_rowspan(h, vq);
        if (!x) throw DomainError("quotient_divisors: row escaped its own span");
        for (int k = 0; k < h.rank; k++) {
            if ((*x)[k].get_den() != 1)
                throw DomainError("quotient_divisors: non-integral coordinate");
            coords.at(i, k) = (*x)[k].get_num();
        }
    }
    SnfResult s = snf(coords);
    std::vector<mpz_class> out;
    for (const auto& dk : s.divisors)
        if (dk > 1) out.push_back(dk);
    for (int k = s.rank; k < h.rank; k++) out.push_back(0);
    return out;
}

int rank_mod_p(const IntMat& m, const mpz_class& p) {
    if (p < 2) throw DomainError("rank_mod_p: modulus below 2");
    IntMat w(m.nrows, m.ncols);
    for (int i = 0; i < m.nrows; i++)
        for (int j = 0; j < m.ncols; j++)
            mpz_mod(w.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), p.get_mpz_t());
    int rank = 0;
    for (int c = 0; c < w.ncols && rank < w.nrows; c++) {
        int piv = -1;
        for (int i = rank; i < w.nrows; i++)
            if (w.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        swap_rows(w, rank, piv);
        mpz_class inv;
        if (!mpz_invert(inv.get_mpz_t(), w.at(rank, c).get_mpz_t(), p.get_mpz_t()))
            throw DomainError("rank_mod_p: modulus is not prime");
        for (int j = c; j < w.ncols; j++)
            mpz_mod(w.at(rank, j).get_mpz_t(), mpz_class(w.at(rank, j) * inv).get_mpz_t(),
                    p.get_mpz_t());
        for (int i = 0; i < w.nrows; i++) {
            if (i == rank || w.at(i, c) == 0) continue;
            mpz_class f = w.at(i, c);
            for (int j = c; j < w.ncols; j++)
                mpz_mod(w.at(i, j).get_mpz_t(), mpz_class(w.at(i, j) - f * w.at(rank, j)).get_mpz_t(),
                        p.get_mpz_t());
        }
        rank++;
    }
    return rank;
}

} // namespace fgx
