#include <doctest.h>

#include <algorithm>
#include <set>

#include "subext/error.hpp"
#include "subext/rings.hpp"

using namespace subext;

namespace {

RingPtr semigroup(std::vector<int> gens, int p = 2) {
    RingSpec s;
    s.family = Family::Semigroup;
    s.p = p;
    s.gens = std::move(gens);
    return Ring::build(s);
}

RingPtr dvr(int p) {
    RingSpec s;
    s.family = Family::Dvr;
    s.p = p;
    return Ring::build(s);
}

RingPtr artin_sq(int nvars, int p = 2) {
    RingSpec s;
    s.family = Family::Artin;
    s.p = p;
    const char* names[] = {"x", "y", "z"};
    for (int i = 0; i < nvars; ++i) {
        s.vars.push_back(names[i]);
    }
    for (int i = 0; i < nvars; ++i) {
        for (int j = i; j < nvars; ++j) {
            std::vector<int> e(nvars, 0);
            ++e[i];
            ++e[j];
            s.ideal.push_back(e);
        }
    }
    return Ring::build(s);
}

FracIdeal mono(const RingPtr& R, std::vector<int> e) { return FracIdeal::monomial(R, e); }

// independent: semigroup elements of an ideal generated by monomials
std::set<int> exps_of_monomial_ideal(const RingPtr& R, const std::vector<int>& gens, int upto) {
    std::set<int> out;
    for (int g : gens) {
        for (int s = 0; g + s < upto; ++s) {
            if (R->in_semigroup(s)) {
                out.insert(g + s);
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("build examples") {
    auto A = artin_sq(2);
    CHECK(A->basis_size() == 3);
    CHECK(A->num_gens() == 2);
    auto E2 = semigroup({2, 3});
    CHECK(E2->basis_size() == 2);
    CHECK(E2->apery() == std::vector<int>{0, 3});
    auto D = dvr(5);
    CHECK(D->basis_size() == 1);
    CHECK(D->frobenius() == -1);
}

TEST_CASE("build errors") {
    RingSpec bad;
    bad.family = Family::Semigroup;
    bad.gens = {2, 4};
    try {
        Ring::build(bad);
        FAIL("expected BadSemigroup");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadSemigroup);
    }
    RingSpec art;
    art.family = Family::Artin;
    art.vars = {"x", "y"};
    art.ideal = {{2, 0}, {1, 1}};
    try {
        Ring::build(art);
        FAIL("expected NotMPrimary");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMPrimary);
    }
    RingSpec big;
    big.family = Family::Dvr;
    big.p = 263;
    try {
        Ring::build(big);
        FAIL("expected FieldTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldTooLarge);
    }
    CHECK(minimal_semigroup_gens({3, 4, 5, 6, 7}) == std::vector<int>{3, 4, 5});
}

TEST_CASE("semigroup multiplication is additive on exponents") {
    for (auto gens : std::vector<std::vector<int>>{{2, 3}, {3, 4, 5}, {2, 5}, {3, 7, 8}}) {
        auto R = semigroup(gens);
        for (int a = 0; a < 12; ++a) {
            for (int b = 0; b < 12; ++b) {
                if (!R->in_semigroup(a) || !R->in_semigroup(b)) {
                    continue;
                }
                CHECK(R->mul(R->t_power(a), R->t_power(b)) == R->t_power(a + b));
                CHECK(R->valuation(R->t_power(a)) == a);
            }
        }
    }
}

TEST_CASE("colon examples over <2,3>") {
    auto R = semigroup({2, 3});
    auto m = FracIdeal::maximal(R);
    auto x = mono(R, {2});
    CHECK(ideal_equals(ideal_colon(x, m), m));
    auto Rm = ideal_colon(FracIdeal::unit(R), m);
    CHECK(ideal_equals(Rm, mono(R, {0, 1})));
    CHECK(value_set(Rm, 6) == std::vector<int>{0, 1, 2, 3, 4, 5});
    auto D = dvr(2);
    auto t = mono(D, {1});
    CHECK(ideal_equals(ideal_colon(t, t), FracIdeal::unit(D)));
}

TEST_CASE("quotient lengths") {
    for (auto R : {semigroup({2, 3}), semigroup({3, 4, 5}), dvr(3), artin_sq(2)}) {
        CHECK(quotient_length(FracIdeal::maximal(R)) == 1);
    }
    auto R = semigroup({2, 3});
    CHECK(quotient_length(ideal_power(FracIdeal::maximal(R), 2)) == 3);
    auto D = dvr(2);
    for (int a = 0; a < 5; ++a) {
        CHECK(quotient_length(mono(D, {a})) == a);
    }
    try {
        quotient_length(FracIdeal::of(R, {R->zero()}));
        FAIL("expected InfiniteLength");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InfiniteLength);
    }
}

TEST_CASE("quotient length monotone and matches exponent count") {
    auto R = semigroup({3, 4, 5});
    std::vector<std::vector<int>> ideals = {{3}, {4, 5}, {3, 4}, {5, 6, 7}, {6}, {3, 4, 5}};
    for (const auto& g : ideals) {
        auto I = mono(R, g);
        auto inI = exps_of_monomial_ideal(R, g, 40);
        int gaps = 0;
        for (int e = 0; e < 40; ++e) {
            if (R->in_semigroup(e) && !inI.count(e)) {
                ++gaps;
            }
        }
        CHECK(quotient_length(I) == gaps);
        for (const auto& h : ideals) {
            auto J = mono(R, h);
            CHECK(quotient_length(ideal_product(I, J)) >= quotient_length(I));
        }
    }
}

TEST_CASE("nzd") {
    auto R = semigroup({2, 3});
    CHECK(is_nzd(R, R->t_power(2)));
    CHECK(is_nzd(R, R->add(R->one(), R->t_power(3))));
    auto A = artin_sq(2);
    CHECK(!is_nzd(A, A->gen(0)));
    CHECK(is_nzd(A, A->one()));
    CHECK_THROWS(nzd_generators(FracIdeal::maximal(A)));
    CHECK(nzd_generators(FracIdeal::maximal(R)).size() == 2);
}

TEST_CASE("principal reductions") {
    auto R = semigroup({2, 3});
    auto m = FracIdeal::maximal(R);
    auto red = principal_reduction(m);
    CHECK(R->valuation(red.x) == 2);
    CHECK(red.n == 1);
    auto D = dvr(2);
    auto red2 = principal_reduction(mono(D, {3}));
    CHECK(red2.n == 0);
    CHECK(D->valuation(red2.x) == 3);
    auto R3 = semigroup({3, 4, 5});
    auto red3 = principal_reduction(FracIdeal::maximal(R3));
    CHECK(R3->valuation(red3.x) == 3);
    CHECK(red3.n == 1);
    // x not in mI
    auto I = FracIdeal::maximal(R3);
    CHECK(!elem_in_ideal(ideal_product(I, I), red3.x));
}

TEST_CASE("trace, blow-up, canonical ideal") {
    auto R = semigroup({2, 3});
    auto m = FracIdeal::maximal(R);
    CHECK(ideal_equals(trace_ideal(m), m));
    auto D = dvr(2);
    CHECK(ideal_equals(trace_ideal(mono(D, {1})), FracIdeal::unit(D)));

    auto B = blow_up(m);
    CHECK(B.ring->semigroup_gens() == std::vector<int>{1});
    CHECK(B.ring->base_element() == 2);
    CHECK(ideal_equals(B.as_module, mono(R, {0, 1})));
    auto R3 = semigroup({3, 4, 5});
    CHECK(blow_up(FracIdeal::maximal(R3)).ring->semigroup_gens() == std::vector<int>{1});
    auto R25 = semigroup({2, 5});
    CHECK(blow_up(FracIdeal::maximal(R25)).ring->semigroup_gens() == std::vector<int>{2, 3});
    auto BB = blow_up(FracIdeal::unit(B.ring));
    CHECK(BB.ring->semigroup_gens() == B.ring->semigroup_gens());

    CHECK(ideal_equals(canonical_ideal(R), FracIdeal::unit(R)));
    auto w = canonical_ideal(R3);
    CHECK(ideal_equals(w, mono(R3, {0, 1})));
    CHECK(ideal_equals(ideal_colon(w, w), FracIdeal::unit(R3)));
    CHECK(ideal_equals(canonical_ideal(D), FracIdeal::unit(D)));
    CHECK_THROWS(canonical_ideal(artin_sq(2)));
}

TEST_CASE("parser") {
    auto R = semigroup({2, 3}, 3);
    auto e = parse_element(R, "t^2 + 2*t^3 - t^5");
    CHECK(R->format(e) == "t^2 + 2*t^3 + 2*t^5");
    int shift = 0;
    auto f = parse_element(R, "t", &shift);
    CHECK(shift == 1);
    CHECK(R->valuation(f) == 3);
    auto I = parse_frac_ideal(R, {"1", "t"});
    CHECK(ideal_equals(I, mono(R, {0, 1})));
    auto A = artin_sq(2);
    auto g = parse_element(A, "x + y");
    CHECK(A->format(g) == "x + y");
    CHECK_THROWS(parse_element(A, "w"));
}
