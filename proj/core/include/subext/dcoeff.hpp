#pragma once

// Scalars and matrices over the coefficient base D = F_p[s] localized at (s).
// The field F_p is handled as the constant scalars; modules over it carry
// torsion exponent 1 (see dmodule.hpp).

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace subext {

using Coef = std::uint16_t;
using CoefVec = boost::container::small_vector<Coef, 6>;

constexpr int kMaxPrime = 257;
constexpr int kInfValuation = std::numeric_limits<int>::max();

bool is_prime(int p);
// Throws FieldTooLarge / InvalidArgument.
void check_prime(int p);
Coef inv_mod(Coef a, int p);

namespace poly {
void trim(CoefVec& a);
CoefVec add(const CoefVec& a, const CoefVec& b, int p);
CoefVec sub(const CoefVec& a, const CoefVec& b, int p);
CoefVec mul(const CoefVec& a, const CoefVec& b, int p);
CoefVec scale(const CoefVec& a, Coef c, int p);
// Quotient and remainder; b must be nonzero.
void divmod(const CoefVec& a, const CoefVec& b, int p, CoefVec& q, CoefVec& r);
CoefVec gcd(CoefVec a, CoefVec b, int p);
int order(const CoefVec& a);
} // namespace poly

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(int p) : p_(static_cast<std::uint16_t>(p)) {}

    static Scalar constant(int p, long long c);
    static Scalar monomial(int p, long long c, int degree);
    static Scalar from_poly(int p, CoefVec num);
    static Scalar fraction(int p, CoefVec num, CoefVec den);

    int p() const { return p_; }
    bool is_zero() const { return num_.empty(); }
    bool is_one() const { return den_.empty() && num_.size() == 1 && num_[0] == 1; }
    bool is_poly() const { return den_.empty(); }
    bool is_unit() const { return !num_.empty() && num_[0] != 0; }
    int valuation() const { return num_.empty() ? kInfValuation : poly::order(num_); }
    const CoefVec& num() const { return num_; }
    // Denominator; empty storage stands for 1.
    CoefVec den() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Inverse of a unit.
    Scalar inverse() const;
    // Division by s^k; requires valuation() >= k.
    Scalar shift_down(int k) const;
    Scalar shift_up(int k) const;
    // The unit u with *this = u * s^valuation(); requires nonzero.
    Scalar unit_part() const;
    // Power series truncated modulo s^e, returned as a polynomial of degree < e.
    Scalar truncated(int e) const;
    // Coefficient of s^k in the power series expansion.
    Coef series_coeff(int k) const;

    std::string to_string(const char* var = "t") const;
    std::size_t hash() const;

private:
    void normalize();

    std::uint16_t p_ = 0;
    CoefVec num_;
    CoefVec den_;
};

// Exact quotient a / b in D; requires v(a) >= v(b) and b != 0.
Scalar exact_div(const Scalar& a, const Scalar& b);

class DMatrix {
public:
    DMatrix() = default;
    DMatrix(int p, int rows, int cols);

    static DMatrix identity(int p, int n);
    static DMatrix diagonal_powers(int p, const std::vector<int>& exps);

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    DMatrix operator*(const DMatrix& o) const;
    DMatrix operator+(const DMatrix& o) const;
    DMatrix operator-(const DMatrix& o) const;
    DMatrix scaled(const Scalar& c) const;
    bool operator==(const DMatrix& o) const;
    bool operator!=(const DMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    DMatrix col(int j) const;
    DMatrix cols_range(int from, int to) const;
    DMatrix rows_range(int from, int to) const;
    DMatrix select_cols(const std::vector<int>& idx) const;
    DMatrix select_rows(const std::vector<int>& idx) const;
    DMatrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const DMatrix& b);
    DMatrix transpose() const;
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    static DMatrix hcat(const DMatrix& a, const DMatrix& b);
    static DMatrix vcat(const DMatrix& a, const DMatrix& b);
    static DMatrix hcat(const std::vector<DMatrix>& parts, int p, int rows);
    static DMatrix block_diag(const std::vector<DMatrix>& parts, int p);

    std::string to_string() const;

private:
    int p_ = 0;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

struct SmithForm {
    DMatrix U, Uinv, V, Vinv;
    // diag[i] is the s-exponent of the i-th nonzero diagonal entry, i < rank.
    std::vector<int> diag;
    int rank = 0;
};

// U * A * V = diag(s^diag[0], ..., s^diag[rank-1], 0, ...), exponents non-decreasing.
SmithForm local_smith(const DMatrix& A);
DMatrix kernel_basis(const DMatrix& A);
std::optional<DMatrix> solve(const DMatrix& A, const DMatrix& b);
std::optional<DMatrix> solve_with(const SmithForm& sf, const DMatrix& b);

struct CokernelInvariants {
    int free_rank = 0;
    std::vector<int> torsion;
};
CokernelInvariants cokernel_invariants(const DMatrix& A);

// Dense matrices over F_p used for fast rank computations.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }
    Coef& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    Coef operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    int rank() const;

private:
    int p_ = 2;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Coef> a_;
};

// Incremental row echelon basis of a subspace of F_p^n.
class FpSpan {
public:
    FpSpan(int p, int n) : p_(p), n_(n), pivot_row_(n, -1) {}
    // Returns true when v was independent of the current span.
    bool insert(std::vector<Coef> v);
    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return n_; }
    const std::vector<std::vector<Coef>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int p_;
    int n_;
    std::vector<std::vector<Coef>> rows_;
    std::vector<int> pivots_;
    std::vector<int> pivot_row_;
};

} // namespace subext
