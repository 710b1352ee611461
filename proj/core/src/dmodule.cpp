#include "subext/dmodule.hpp"

#include "subext/error.hpp"

namespace subext {

int free_rank(const Exps& e) {
    int r = 0;
    for (int x : e) {
        r += is_free_exp(x) ? 1 : 0;
    }
    return r;
}

int torsion_length(const Exps& e) {
    int l = 0;
    for (int x : e) {
        if (!is_free_exp(x)) {
            l += x;
        }
    }
    return l;
}

int length_of(const Exps& e) {
    if (free_rank(e) > 0) {
        fail(ErrorCode::InfiniteLength, "module has a free D-summand");
    }
    return torsion_length(e);
}

DMatrix relation_matrix(const Exps& e, int p) {
    int n = static_cast<int>(e.size());
    int t = n - free_rank(e);
    DMatrix r(p, n, t);
    int c = 0;
    for (int i = 0; i < n; ++i) {
        if (!is_free_exp(e[i])) {
            r(i, c++) = Scalar::monomial(p, 1, e[i]);
        }
    }
    return r;
}

DMatrix reduce_mod(const DMatrix& x, const Exps& e) {
    check(x.rows() == static_cast<int>(e.size()), "reduce_mod shape mismatch");
    DMatrix r = x;
    for (int i = 0; i < x.rows(); ++i) {
        if (is_free_exp(e[i])) {
            continue;
        }
        for (int j = 0; j < x.cols(); ++j) {
            Scalar& s = r(i, j);
            if (s.is_zero()) {
                continue;
            }
            if (!s.is_poly() || static_cast<int>(s.num().size()) > e[i]) {
                s = s.truncated(e[i]);
            }
        }
    }
    return r;
}

bool is_zero_mod(const DMatrix& x, const Exps& e) {
    check(x.rows() == static_cast<int>(e.size()), "is_zero_mod shape mismatch");
    for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < x.cols(); ++j) {
            const Scalar& s = x(i, j);
            if (s.is_zero()) {
                continue;
            }
            if (is_free_exp(e[i]) || s.valuation() < e[i]) {
                return false;
            }
        }
    }
    return true;
}

DSub d_submodule(const Exps& ambient, const DMatrix& gens) {
    const int n = static_cast<int>(ambient.size());
    check(gens.rows() == n, "d_submodule shape mismatch");
    const int p = gens.p();
    DSub sub;
    sub.p = p;
    sub.ambient = ambient;
    DMatrix P = relation_matrix(ambient, p);
    DMatrix C = DMatrix::hcat(gens, P);
    sub.outer = local_smith(C);
    const int r = sub.outer.rank;
    // B = Uinv[:, :r] * diag(s^d); P = B * Cm
    DMatrix UP = sub.outer.U * P;
    DMatrix Cm(p, r, P.cols());
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < P.cols(); ++j) {
            if (!UP(i, j).is_zero()) {
                Cm(i, j) = UP(i, j).shift_down(sub.outer.diag[i]);
            }
        }
    }
    DMatrix B(p, n, r);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j) {
            if (!sub.outer.Uinv(i, j).is_zero()) {
                B(i, j) = sub.outer.Uinv(i, j).shift_up(sub.outer.diag[j]);
            }
        }
    }
    SmithForm inner = local_smith(Cm);
    sub.U2 = inner.U;
    DMatrix BG = B * inner.Uinv;
    for (int i = 0; i < r; ++i) {
        if (i < inner.rank) {
            if (inner.diag[i] > 0) {
                sub.kept.push_back(i);
                sub.exps.push_back(inner.diag[i]);
            }
        } else {
            sub.kept.push_back(i);
            sub.exps.push_back(kFreeExp);
        }
    }
    sub.incl = reduce_mod(BG.select_cols(sub.kept), ambient);
    return sub;
}

std::optional<DMatrix> DSub::coords(const DMatrix& y) const {
    const int r = outer.rank;
    DMatrix uy = outer.U * y;
    DMatrix z(p, r, y.cols());
    for (int c = 0; c < y.cols(); ++c) {
        for (int i = 0; i < uy.rows(); ++i) {
            const Scalar& v = uy(i, c);
            if (v.is_zero()) {
                continue;
            }
            if (i >= r || v.valuation() < outer.diag[i]) {
                return std::nullopt;
            }
            z(i, c) = v.shift_down(outer.diag[i]);
        }
    }
    DMatrix w = (U2 * z).select_rows(kept);
    return reduce_mod(w, exps);
}

DMatrix DSub::coords_or_throw(const DMatrix& y) const {
    auto c = coords(y);
    if (!c) {
        fail(ErrorCode::LiftFailure, "element does not lie in the submodule");
    }
    return *c;
}

DQuot d_quotient(const Exps& ambient, const DMatrix& gens) {
    const int n = static_cast<int>(ambient.size());
    check(gens.rows() == n, "d_quotient shape mismatch");
    const int p = gens.p();
    DMatrix C = DMatrix::hcat(gens, relation_matrix(ambient, p));
    SmithForm sf = local_smith(C);
    DQuot q;
    std::vector<int> kept;
    for (int i = 0; i < n; ++i) {
        if (i < sf.rank) {
            if (sf.diag[i] > 0) {
                kept.push_back(i);
                q.exps.push_back(sf.diag[i]);
            }
        } else {
            kept.push_back(i);
            q.exps.push_back(kFreeExp);
        }
    }
    q.proj = reduce_mod(sf.U.select_rows(kept), q.exps);
    q.lift = reduce_mod(sf.Uinv.select_cols(kept), ambient);
    return q;
}

DMatrix DQuot::project(const DMatrix& y) const { return reduce_mod(proj * y, exps); }

DMatrix d_kernel_gens(const DMatrix& F, const Exps& src, const Exps& tgt) {
    check(F.cols() == static_cast<int>(src.size()) && F.rows() == static_cast<int>(tgt.size()),
          "d_kernel_gens shape mismatch");
    DMatrix K = kernel_basis(DMatrix::hcat(F, relation_matrix(tgt, F.p())));
    return K.rows_range(0, F.cols());
}

std::vector<Coef> digits_of(const DMatrix& coords, const Exps& e) {
    std::vector<Coef> d;
    for (int i = 0; i < coords.rows(); ++i) {
        check(!is_free_exp(e[i]), "digits of a free coordinate");
        Scalar s = coords(i, 0).truncated(e[i]);
        for (int k = 0; k < e[i]; ++k) {
            d.push_back(k < static_cast<int>(s.num().size()) ? s.num()[k] : 0);
        }
    }
    return d;
}

DMatrix coords_of(const std::vector<Coef>& digits, const Exps& e, int p) {
    DMatrix c(p, static_cast<int>(e.size()), 1);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        check(!is_free_exp(e[i]), "digits of a free coordinate");
        CoefVec v(digits.begin() + static_cast<long>(pos), digits.begin() + static_cast<long>(pos + e[i]));
        pos += e[i];
        c(static_cast<int>(i), 0) = Scalar::from_poly(p, std::move(v));
    }
    return c;
}

} // namespace subext
