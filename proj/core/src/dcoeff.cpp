#include "subext/dcoeff.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "subext/error.hpp"

namespace subext {

namespace {

struct InverseTables {
    std::array<std::vector<Coef>, kMaxPrime + 1> inv;
    InverseTables() {
        for (int p = 2; p <= kMaxPrime; ++p) {
            if (!is_prime(p)) {
                continue;
            }
            auto& t = inv[p];
            t.assign(p, 0);
            for (int a = 1; a < p; ++a) {
                for (int b = 1; b < p; ++b) {
                    if (a * b % p == 1) {
                        t[a] = static_cast<Coef>(b);
                        break;
                    }
                }
            }
        }
    }
};

const InverseTables& tables() {
    static const InverseTables t;
    return t;
}

inline Coef addm(Coef a, Coef b, int p) {
    int s = a + b;
    return static_cast<Coef>(s >= p ? s - p : s);
}
inline Coef subm(Coef a, Coef b, int p) {
    int s = static_cast<int>(a) - static_cast<int>(b);
    return static_cast<Coef>(s < 0 ? s + p : s);
}
inline Coef mulm(Coef a, Coef b, int p) {
    return static_cast<Coef>((static_cast<unsigned>(a) * b) % static_cast<unsigned>(p));
}
inline Coef reduce_ll(long long c, int p) {
    long long r = c % p;
    return static_cast<Coef>(r < 0 ? r + p : r);
}

} // namespace

bool is_prime(int p) {
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

void check_prime(int p) {
    if (p > kMaxPrime) {
        fail(ErrorCode::FieldTooLarge, "prime " + std::to_string(p) + " exceeds " + std::to_string(kMaxPrime));
    }
    if (!is_prime(p)) {
        fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    }
}

Coef inv_mod(Coef a, int p) {
    check(a % p != 0, "inverse of zero mod p");
    return tables().inv[p][a % p];
}

namespace poly {

void trim(CoefVec& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

CoefVec add(const CoefVec& a, const CoefVec& b, int p) {
    const CoefVec& lo = a.size() < b.size() ? a : b;
    const CoefVec& hi = a.size() < b.size() ? b : a;
    CoefVec r(hi.begin(), hi.end());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        r[i] = addm(r[i], lo[i], p);
    }
    trim(r);
    return r;
}

CoefVec sub(const CoefVec& a, const CoefVec& b, int p) {
    CoefVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] = subm(r[i], b[i], p);
    }
    trim(r);
    return r;
}

CoefVec mul(const CoefVec& a, const CoefVec& b, int p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<unsigned> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<unsigned>(a[i]) * b[j]) % static_cast<unsigned>(p);
        }
    }
    CoefVec r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        r[i] = static_cast<Coef>(acc[i]);
    }
    trim(r);
    return r;
}

CoefVec scale(const CoefVec& a, Coef c, int p) {
    if (c == 0) {
        return {};
    }
    CoefVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = mulm(a[i], c, p);
    }
    return r;
}

void divmod(const CoefVec& a, const CoefVec& b, int p, CoefVec& q, CoefVec& r) {
    check(!b.empty(), "polynomial division by zero");
    r = a;
    trim(r);
    q.clear();
    if (r.size() < b.size()) {
        return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    Coef lead_inv = inv_mod(b.back(), p);
    for (int k = static_cast<int>(r.size()) - static_cast<int>(b.size()); k >= 0; --k) {
        Coef c = mulm(r[k + b.size() - 1], lead_inv, p);
        q[k] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[k + j] = subm(r[k + j], mulm(c, b[j], p), p);
        }
    }
    trim(r);
    trim(q);
}

CoefVec gcd(CoefVec a, CoefVec b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        CoefVec q, r;
        divmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        a = scale(a, inv_mod(a.back(), p), p);
    }
    return a;
}

int order(const CoefVec& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) {
            return static_cast<int>(i);
        }
    }
    return kInfValuation;
}

} // namespace poly

Scalar Scalar::constant(int p, long long c) {
    Scalar s(p);
    Coef v = reduce_ll(c, p);
    if (v != 0) {
        s.num_.push_back(v);
    }
    return s;
}

Scalar Scalar::monomial(int p, long long c, int degree) {
    Scalar s(p);
    Coef v = reduce_ll(c, p);
    if (v != 0) {
        s.num_.assign(degree + 1, 0);
        s.num_[degree] = v;
    }
    return s;
}

Scalar Scalar::from_poly(int p, CoefVec num) {
    Scalar s(p);
    s.num_ = std::move(num);
    poly::trim(s.num_);
    return s;
}

Scalar Scalar::fraction(int p, CoefVec num, CoefVec den) {
    Scalar s(p);
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    poly::trim(s.num_);
    poly::trim(s.den_);
    check(!s.den_.empty() && s.den_[0] != 0, "denominator must have nonzero constant term");
    s.normalize();
    return s;
}

CoefVec Scalar::den() const {
    if (den_.empty()) {
        return CoefVec{1};
    }
    return den_;
}

void Scalar::normalize() {
    if (num_.empty()) {
        den_.clear();
        return;
    }
    if (den_.empty()) {
        return;
    }
    if (den_.size() > 1) {
        CoefVec g = poly::gcd(num_, den_, p_);
        if (g.size() > 1) {
            CoefVec q, r;
            poly::divmod(num_, g, p_, q, r);
            num_ = std::move(q);
            poly::divmod(den_, g, p_, q, r);
            den_ = std::move(q);
        }
    }
    Coef c = den_[0];
    if (c != 1) {
        Coef ci = inv_mod(c, p_);
        num_ = poly::scale(num_, ci, p_);
        den_ = poly::scale(den_, ci, p_);
    }
    if (den_.size() == 1) {
        den_.clear();
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (o.num_.empty()) {
        return *this;
    }
    if (num_.empty()) {
        return o;
    }
    Scalar r(p_);
    if (den_.empty() && o.den_.empty()) {
        r.num_ = poly::add(num_, o.num_, p_);
        return r;
    }
    if (den_ == o.den_) {
        r.num_ = poly::add(num_, o.num_, p_);
        r.den_ = den_;
    } else {
        CoefVec d1 = den(), d2 = o.den();
        r.num_ = poly::add(poly::mul(num_, d2, p_), poly::mul(o.num_, d1, p_), p_);
        r.den_ = poly::mul(d1, d2, p_);
    }
    r.normalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(p_);
    r.num_ = poly::sub(CoefVec{}, num_, p_);
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r(p_);
    if (num_.empty() || o.num_.empty()) {
        return r;
    }
    r.num_ = poly::mul(num_, o.num_, p_);
    if (den_.empty() && o.den_.empty()) {
        return r;
    }
    r.den_ = poly::mul(den(), o.den(), p_);
    r.normalize();
    return r;
}

Scalar Scalar::inverse() const {
    check(is_unit(), "inverse of a non-unit");
    Scalar r(p_);
    r.num_ = den();
    r.den_ = num_;
    r.normalize();
    return r;
}

Scalar Scalar::shift_down(int k) const {
    if (k == 0 || num_.empty()) {
        return *this;
    }
    check(valuation() >= k, "shift_down below valuation");
    Scalar r = *this;
    r.num_.erase(r.num_.begin(), r.num_.begin() + k);
    return r;
}

Scalar Scalar::shift_up(int k) const {
    if (k == 0 || num_.empty()) {
        return *this;
    }
    Scalar r = *this;
    r.num_.insert(r.num_.begin(), static_cast<std::size_t>(k), Coef{0});
    return r;
}

Scalar Scalar::unit_part() const {
    check(!num_.empty(), "unit part of zero");
    return shift_down(valuation());
}

Scalar Scalar::truncated(int e) const {
    Scalar r(p_);
    if (e <= 0 || num_.empty()) {
        return r;
    }
    if (den_.empty()) {
        if (static_cast<int>(num_.size()) <= e) {
            return *this;
        }
        r.num_.assign(num_.begin(), num_.begin() + e);
        poly::trim(r.num_);
        return r;
    }
    // inverse of the denominator as a power series; den_[0] == 1
    std::vector<Coef> inv(e, 0);
    inv[0] = 1;
    for (int k = 1; k < e; ++k) {
        unsigned acc = 0;
        for (int j = 1; j <= k && j < static_cast<int>(den_.size()); ++j) {
            acc = (acc + static_cast<unsigned>(den_[j]) * inv[k - j]) % p_;
        }
        inv[k] = static_cast<Coef>((p_ - acc) % p_);
    }
    r.num_.assign(e, 0);
    for (int i = 0; i < e && i < static_cast<int>(num_.size()); ++i) {
        if (num_[i] == 0) {
            continue;
        }
        for (int j = 0; i + j < e; ++j) {
            r.num_[i + j] = addm(r.num_[i + j], mulm(num_[i], inv[j], p_), p_);
        }
    }
    poly::trim(r.num_);
    return r;
}

Coef Scalar::series_coeff(int k) const {
    if (den_.empty()) {
        return k < static_cast<int>(num_.size()) ? num_[k] : 0;
    }
    Scalar t = truncated(k + 1);
    return k < static_cast<int>(t.num_.size()) ? t.num_[k] : 0;
}

namespace {
std::string poly_string(const CoefVec& a, const char* var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        if (i == 0) {
            os << a[i];
            continue;
        }
        if (a[i] != 1) {
            os << a[i] << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    if (first) {
        os << "0";
    }
    return os.str();
}
} // namespace

std::string Scalar::to_string(const char* var) const {
    if (den_.empty()) {
        return poly_string(num_, var);
    }
    return "(" + poly_string(num_, var) + ")/(" + poly_string(den_, var) + ")";
}

std::size_t Scalar::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (Coef c : num_) {
        h = (h ^ c) * 1099511628211ULL;
    }
    h = (h ^ 0xffff) * 1099511628211ULL;
    for (Coef c : den_) {
        h = (h ^ c) * 1099511628211ULL;
    }
    return h;
}

Scalar exact_div(const Scalar& a, const Scalar& b) {
    check(!b.is_zero(), "division by zero");
    if (a.is_zero()) {
        return Scalar(a.p());
    }
    int vb = b.valuation();
    check(a.valuation() >= vb, "exact_div: valuation obstruction");
    Scalar ub = b.shift_down(vb);
    Scalar as = a.shift_down(vb);
    if (ub.is_poly() && ub.num().size() == 1) {
        Coef ci = inv_mod(ub.num()[0], a.p());
        return as * Scalar::constant(a.p(), ci);
    }
    return as * ub.inverse();
}

// ---------------------------------------------------------------- DMatrix

DMatrix::DMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Scalar(p)) {}

DMatrix DMatrix::identity(int p, int n) {
    DMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = Scalar::constant(p, 1);
    }
    return m;
}

DMatrix DMatrix::diagonal_powers(int p, const std::vector<int>& exps) {
    int n = static_cast<int>(exps.size());
    DMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = Scalar::monomial(p, 1, exps[i]);
    }
    return m;
}

DMatrix DMatrix::operator*(const DMatrix& o) const {
    check(cols_ == o.rows_, "matrix product shape mismatch");
    int p = p_ ? p_ : o.p_;
    DMatrix r(p, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& y = o(k, j);
                if (y.is_zero()) {
                    continue;
                }
                r(i, j) += x * y;
            }
        }
    }
    return r;
}

DMatrix DMatrix::operator+(const DMatrix& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    DMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) {
        r.a_[k] += o.a_[k];
    }
    return r;
}

DMatrix DMatrix::operator-(const DMatrix& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    DMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) {
        r.a_[k] -= o.a_[k];
    }
    return r;
}

DMatrix DMatrix::scaled(const Scalar& c) const {
    DMatrix r = *this;
    for (auto& x : r.a_) {
        if (!x.is_zero()) {
            x = x * c;
        }
    }
    return r;
}

bool DMatrix::operator==(const DMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool DMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x.is_zero(); });
}

DMatrix DMatrix::col(int j) const { return block(0, j, rows_, 1); }

DMatrix DMatrix::cols_range(int from, int to) const { return block(0, from, rows_, to - from); }

DMatrix DMatrix::rows_range(int from, int to) const { return block(from, 0, to - from, cols_); }

DMatrix DMatrix::select_cols(const std::vector<int>& idx) const {
    DMatrix r(p_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            r(i, static_cast<int>(j)) = (*this)(i, idx[j]);
        }
    }
    return r;
}

DMatrix DMatrix::select_rows(const std::vector<int>& idx) const {
    DMatrix r(p_, static_cast<int>(idx.size()), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (int j = 0; j < cols_; ++j) {
            r(static_cast<int>(i), j) = (*this)(idx[i], j);
        }
    }
    return r;
}

DMatrix DMatrix::block(int r0, int c0, int nr, int nc) const {
    check(r0 >= 0 && c0 >= 0 && r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    DMatrix r(p_, nr, nc);
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nc; ++j) {
            r(i, j) = (*this)(r0 + i, c0 + j);
        }
    }
    return r;
}

void DMatrix::set_block(int r0, int c0, const DMatrix& b) {
    check(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "set_block out of range");
    for (int i = 0; i < b.rows_; ++i) {
        for (int j = 0; j < b.cols_; ++j) {
            (*this)(r0 + i, c0 + j) = b(i, j);
        }
    }
}

DMatrix DMatrix::transpose() const {
    DMatrix r(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

void DMatrix::swap_rows(int i, int j) {
    if (i == j) {
        return;
    }
    for (int k = 0; k < cols_; ++k) {
        std::swap((*this)(i, k), (*this)(j, k));
    }
}

void DMatrix::swap_cols(int i, int j) {
    if (i == j) {
        return;
    }
    for (int k = 0; k < rows_; ++k) {
        std::swap((*this)(k, i), (*this)(k, j));
    }
}

DMatrix DMatrix::hcat(const DMatrix& a, const DMatrix& b) {
    check(a.rows_ == b.rows_, "hcat row mismatch");
    int p = a.p_ ? a.p_ : b.p_;
    DMatrix r(p, a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
}

DMatrix DMatrix::vcat(const DMatrix& a, const DMatrix& b) {
    check(a.cols_ == b.cols_, "vcat column mismatch");
    int p = a.p_ ? a.p_ : b.p_;
    DMatrix r(p, a.rows_ + b.rows_, a.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
}

DMatrix DMatrix::hcat(const std::vector<DMatrix>& parts, int p, int rows) {
    int cols = 0;
    for (const auto& m : parts) {
        check(m.rows_ == rows, "hcat row mismatch");
        cols += m.cols_;
    }
    DMatrix r(p, rows, cols);
    int c = 0;
    for (const auto& m : parts) {
        r.set_block(0, c, m);
        c += m.cols_;
    }
    return r;
}

DMatrix DMatrix::block_diag(const std::vector<DMatrix>& parts, int p) {
    int rows = 0, cols = 0;
    for (const auto& m : parts) {
        rows += m.rows_;
        cols += m.cols_;
    }
    DMatrix r(p, rows, cols);
    int i = 0, j = 0;
    for (const auto& m : parts) {
        r.set_block(i, j, m);
        i += m.rows_;
        j += m.cols_;
    }
    return r;
}

std::string DMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) {
            os << (j ? ", " : "") << (*this)(i, j).to_string();
        }
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- Smith form

namespace {

void row_axpy(DMatrix& m, int target, const Scalar& q, int source) {
    // row_target -= q * row_source
    for (int k = 0; k < m.cols(); ++k) {
        const Scalar& x = m(source, k);
        if (!x.is_zero()) {
            m(target, k) -= q * x;
        }
    }
}

void col_axpy(DMatrix& m, int target, const Scalar& q, int source) {
    // col_target -= q * col_source
    for (int k = 0; k < m.rows(); ++k) {
        const Scalar& x = m(k, source);
        if (!x.is_zero()) {
            m(k, target) -= q * x;
        }
    }
}

void row_scale(DMatrix& m, int r, const Scalar& c) {
    for (int k = 0; k < m.cols(); ++k) {
        if (!m(r, k).is_zero()) {
            m(r, k) = m(r, k) * c;
        }
    }
}

void col_scale(DMatrix& m, int c, const Scalar& x) {
    for (int k = 0; k < m.rows(); ++k) {
        if (!m(k, c).is_zero()) {
            m(k, c) = m(k, c) * x;
        }
    }
}

} // namespace

SmithForm local_smith(const DMatrix& A) {
    const int p = A.p();
    const int m = A.rows();
    const int n = A.cols();
    SmithForm sf;
    sf.U = DMatrix::identity(p, m);
    sf.Uinv = DMatrix::identity(p, m);
    sf.V = DMatrix::identity(p, n);
    sf.Vinv = DMatrix::identity(p, n);
    DMatrix B = A;
    const int kmax = std::min(m, n);
    for (int k = 0; k < kmax; ++k) {
        int bi = -1, bj = -1, bv = kInfValuation;
        for (int i = k; i < m && bv > 0; ++i) {
            for (int j = k; j < n; ++j) {
                int v = B(i, j).valuation();
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                    if (v == 0) {
                        break;
                    }
                }
            }
        }
        if (bi < 0) {
            break;
        }
        B.swap_rows(k, bi);
        sf.U.swap_rows(k, bi);
        sf.Uinv.swap_cols(k, bi);
        B.swap_cols(k, bj);
        sf.V.swap_cols(k, bj);
        sf.Vinv.swap_rows(k, bj);

        Scalar u = B(k, k).unit_part();
        if (!u.is_one()) {
            Scalar ui = u.inverse();
            row_scale(B, k, ui);
            row_scale(sf.U, k, ui);
            col_scale(sf.Uinv, k, u);
        }
        for (int i = k + 1; i < m; ++i) {
            if (B(i, k).is_zero()) {
                continue;
            }
            Scalar q = B(i, k).shift_down(bv);
            row_axpy(B, i, q, k);
            row_axpy(sf.U, i, q, k);
            col_axpy(sf.Uinv, k, -q, i);
        }
        for (int j = k + 1; j < n; ++j) {
            if (B(k, j).is_zero()) {
                continue;
            }
            Scalar q = B(k, j).shift_down(bv);
            col_axpy(B, j, q, k);
            col_axpy(sf.V, j, q, k);
            row_axpy(sf.Vinv, k, -q, j);
        }
        sf.diag.push_back(bv);
        sf.rank = k + 1;
    }
    return sf;
}

DMatrix kernel_basis(const DMatrix& A) {
    SmithForm sf = local_smith(A);
    return sf.V.cols_range(sf.rank, A.cols());
}

std::optional<DMatrix> solve_with(const SmithForm& sf, const DMatrix& b) {
    const int p = sf.U.p();
    DMatrix y = sf.U * b;
    const int n = sf.V.rows();
    DMatrix z(p, n, b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        for (int i = 0; i < y.rows(); ++i) {
            const Scalar& yi = y(i, c);
            if (i >= sf.rank) {
                if (!yi.is_zero()) {
                    return std::nullopt;
                }
                continue;
            }
            if (yi.is_zero()) {
                continue;
            }
            if (yi.valuation() < sf.diag[i]) {
                return std::nullopt;
            }
            z(i, c) = yi.shift_down(sf.diag[i]);
        }
    }
    return sf.V * z;
}

std::optional<DMatrix> solve(const DMatrix& A, const DMatrix& b) {
    check(A.rows() == b.rows(), "solve shape mismatch");
    return solve_with(local_smith(A), b);
}

CokernelInvariants cokernel_invariants(const DMatrix& A) {
    SmithForm sf = local_smith(A);
    CokernelInvariants ci;
    ci.free_rank = A.rows() - sf.rank;
    for (int e : sf.diag) {
        if (e > 0) {
            ci.torsion.push_back(e);
        }
    }
    return ci;
}

// ---------------------------------------------------------------- F_p helpers

int FpMatrix::rank() const {
    std::vector<Coef> a = a_;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i) {
            if (a[static_cast<std::size_t>(i) * cols_ + c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        if (piv != r) {
            for (int k = 0; k < cols_; ++k) {
                std::swap(a[static_cast<std::size_t>(piv) * cols_ + k], a[static_cast<std::size_t>(r) * cols_ + k]);
            }
        }
        Coef inv = inv_mod(a[static_cast<std::size_t>(r) * cols_ + c], p_);
        for (int i = r + 1; i < rows_; ++i) {
            Coef f = a[static_cast<std::size_t>(i) * cols_ + c];
            if (f == 0) {
                continue;
            }
            Coef q = mulm(f, inv, p_);
            for (int k = c; k < cols_; ++k) {
                Coef x = a[static_cast<std::size_t>(r) * cols_ + k];
                if (x != 0) {
                    Coef& t = a[static_cast<std::size_t>(i) * cols_ + k];
                    t = subm(t, mulm(q, x, p_), p_);
                }
            }
        }
        ++r;
    }
    return r;
}

bool FpSpan::insert(std::vector<Coef> v) {
    for (int i = 0; i < n_; ++i) {
        if (v[i] == 0) {
            continue;
        }
        int pr = pivot_row_[i];
        if (pr < 0) {
            Coef inv = inv_mod(v[i], p_);
            for (int k = i; k < n_; ++k) {
                v[k] = mulm(v[k], inv, p_);
            }
            pivot_row_[i] = static_cast<int>(rows_.size());
            pivots_.push_back(i);
            rows_.push_back(std::move(v));
            return true;
        }
        const auto& row = rows_[pr];
        Coef f = v[i];
        for (int k = i; k < n_; ++k) {
            if (row[k] != 0) {
                v[k] = subm(v[k], mulm(f, row[k], p_), p_);
            }
        }
    }
    return false;
}

} // namespace subext
