#include <doctest.h>

#include <random>
#include <set>

#include "subext/dcoeff.hpp"
#include "subext/dmodule.hpp"

using namespace subext;

namespace {

Scalar mono(int p, int c, int d) { return Scalar::monomial(p, c, d); }

DMatrix mat(int p, std::initializer_list<std::initializer_list<Scalar>> rows) {
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows.begin()->size());
    DMatrix m(p, r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (const auto& x : row) {
            m(i, j++) = x;
        }
        ++i;
    }
    return m;
}

// determinant by cofactor expansion, independent of the Smith code
Scalar cofactor_det(const DMatrix& a) {
    const int n = a.rows();
    if (n == 1) {
        return a(0, 0);
    }
    Scalar d(a.p());
    for (int j = 0; j < n; ++j) {
        std::vector<int> rows, cols;
        for (int i = 1; i < n; ++i) {
            rows.push_back(i);
        }
        for (int k = 0; k < n; ++k) {
            if (k != j) {
                cols.push_back(k);
            }
        }
        Scalar term = a(0, j) * cofactor_det(a.select_rows(rows).select_cols(cols));
        d = (j % 2 == 0) ? d + term : d - term;
    }
    return d;
}

bool is_diag_form(const DMatrix& D, const SmithForm& sf) {
    for (int i = 0; i < D.rows(); ++i) {
        for (int j = 0; j < D.cols(); ++j) {
            if (i == j && i < sf.rank) {
                if (D(i, j) != mono(D.p(), 1, sf.diag[i])) {
                    return false;
                }
            } else if (!D(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

DMatrix random_matrix(std::mt19937& rng, int p, int r, int c, int maxdeg) {
    DMatrix m(p, r, c);
    std::uniform_int_distribution<int> coef(0, p - 1), deg(0, maxdeg);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            CoefVec v;
            int d = deg(rng);
            for (int k = 0; k <= d; ++k) {
                v.push_back(static_cast<Coef>(coef(rng)));
            }
            m(i, j) = Scalar::from_poly(p, v);
        }
    }
    return m;
}

} // namespace

TEST_CASE("scalar normalization and valuation") {
    Scalar a = Scalar::fraction(3, {0, 0, 1}, {2, 1});
    CHECK(a.den()[0] == 1);
    CHECK(a.valuation() == 2);
    Scalar b = Scalar::fraction(3, {1, 1}, {1, 1});
    CHECK(b.is_one());
    Scalar u = Scalar::from_poly(2, {1, 1});
    CHECK(u.is_unit());
    CHECK((u * u.inverse()).is_one());
    CHECK((mono(5, 2, 3) * mono(5, 3, 4)).valuation() == 7);
    CHECK_THROWS(check_prime(263));
    CHECK_THROWS(check_prime(4));
}

TEST_CASE("series truncation agrees with multiplication") {
    Scalar u = Scalar::from_poly(3, {1, 2, 1});
    Scalar inv = u.inverse().truncated(6);
    Scalar prod = (u * inv).truncated(6);
    CHECK(prod.is_one());
}

TEST_CASE("smith: identity and unit diagonal") {
    DMatrix I = DMatrix::identity(2, 2);
    auto sf = local_smith(I);
    CHECK(sf.rank == 2);
    CHECK(sf.diag == std::vector<int>{0, 0});

    DMatrix A = mat(2, {{mono(2, 1, 1), Scalar(2)}, {Scalar(2), Scalar::from_poly(2, {1, 1})}});
    auto s2 = local_smith(A);
    CHECK(s2.diag == std::vector<int>{0, 1});
    CHECK(is_diag_form(s2.U * A * s2.V, s2));
    CHECK((s2.U * s2.Uinv) == DMatrix::identity(2, 2));
    CHECK((s2.V * s2.Vinv) == DMatrix::identity(2, 2));
}

TEST_CASE("smith exponent sum equals determinant valuation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        DMatrix A = random_matrix(rng, 3, 3, 3, 3);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                A(i, j) = A(i, j) * mono(3, 1, (i + j + trial) % 3);
            }
        }
        auto sf = local_smith(A);
        CHECK(is_diag_form(sf.U * A * sf.V, sf));
        for (std::size_t k = 1; k < sf.diag.size(); ++k) {
            CHECK(sf.diag[k - 1] <= sf.diag[k]);
        }
        Scalar det = cofactor_det(A);
        if (det.is_zero()) {
            CHECK(sf.rank < 3);
        } else {
            REQUIRE(sf.rank == 3);
            CHECK(sf.diag[0] + sf.diag[1] + sf.diag[2] == det.valuation());
        }
        CHECK(cofactor_det(sf.U).is_unit());
        CHECK(cofactor_det(sf.V).is_unit());
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(DMatrix::identity(2, 1)).cols() == 0);
    DMatrix A = mat(2, {{mono(2, 1, 2), mono(2, 1, 3)}});
    DMatrix K = kernel_basis(A);
    REQUIRE(K.cols() == 1);
    CHECK((A * K).is_zero());
    CHECK(local_smith(K).diag == std::vector<int>{0});
    CHECK(kernel_basis(DMatrix(2, 2, 2)) .cols() == 2);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        DMatrix B = random_matrix(rng, 5, 2, 4, 2);
        DMatrix KB = kernel_basis(B);
        CHECK((B * KB).is_zero());
        auto sk = local_smith(KB);
        CHECK(sk.rank == KB.cols());
        for (int d : sk.diag) {
            CHECK(d == 0);
        }
        CHECK(KB.cols() + local_smith(B).rank == 4);
    }
}

TEST_CASE("solve") {
    DMatrix b = mat(2, {{Scalar::constant(2, 1)}, {mono(2, 1, 2)}});
    CHECK(*solve(DMatrix::identity(2, 2), b) == b);
    CHECK(!solve(mat(2, {{mono(2, 1, 1)}}), mat(2, {{Scalar::constant(2, 1)}})));
    auto x = solve(mat(2, {{mono(2, 1, 1)}}), mat(2, {{mono(2, 1, 3)}}));
    REQUIRE(x);
    CHECK((*x)(0, 0) == mono(2, 1, 2));
}

TEST_CASE("cokernel invariants") {
    auto c1 = cokernel_invariants(mat(2, {{mono(2, 1, 2)}}));
    CHECK(c1.free_rank == 0);
    CHECK(c1.torsion == std::vector<int>{2});
    auto c2 = cokernel_invariants(DMatrix(2, 2, 0));
    CHECK(c2.free_rank == 2);
    CHECK(c2.torsion.empty());
    DMatrix A = mat(2, {{mono(2, 1, 1), mono(2, 1, 2)}, {Scalar(2), mono(2, 1, 3)}});
    auto c3 = cokernel_invariants(A);
    auto sf = local_smith(A);
    CHECK(c3.torsion == sf.diag);
}

TEST_CASE("field case: cokernel length matches brute-force quotient count") {
    // over F_p (torsion exponent 1 everywhere) length of coker = n - rank;
    // brute force: count distinct images of F_p^n modulo the column span
    std::mt19937 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        const int p = 2 + (trial % 2);
        std::uniform_int_distribution<int> dim(1, 4);
        int n = dim(rng), m = dim(rng);
        DMatrix A = random_matrix(rng, p, n, m, 0);
        std::vector<int> one(n, 1);
        DQuot q = d_quotient(one, A);
        // count the span by enumeration
        std::vector<std::vector<int>> span;
        int total = 1;
        for (int k = 0; k < m; ++k) {
            total *= p;
        }
        std::set<std::vector<int>> seen;
        for (int code = 0; code < total; ++code) {
            std::vector<int> v(n, 0);
            int c = code;
            for (int k = 0; k < m; ++k) {
                int a = c % p;
                c /= p;
                for (int i = 0; i < n; ++i) {
                    int e = A(i, k).is_zero() ? 0 : A(i, k).num()[0];
                    v[i] = (v[i] + a * e) % p;
                }
            }
            seen.insert(v);
        }
        int span_dim = 0;
        for (std::size_t s = seen.size(); s > 1; s /= p) {
            ++span_dim;
        }
        CHECK(length_of(q.exps) == n - span_dim);
    }
}

TEST_CASE("fp span echelon") {
    FpSpan s(2, 4);
    CHECK(s.insert({0, 1, 1, 0}));
    CHECK(s.insert({0, 1, 0, 0}));
    CHECK(!s.insert({0, 0, 1, 0}));
    CHECK(s.dim() == 2);
}
