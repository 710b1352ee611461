#include <doctest.h>

#include "fixtures.hpp"
#include "subext/error.hpp"
#include "subext/subfun.hpp"
#include "subext/ulrich.hpp"

using namespace subext;
using namespace fx;

namespace {

ModulePtr max_ideal(const RingPtr& R) { return from_fractional_ideal(FracIdeal::maximal(R)); }

ModulePtr blowup_module(const RingPtr& R) { return from_fractional_ideal(blow_up(FracIdeal::maximal(R)).as_module); }

bool has_name(const std::vector<UlSample>& s, const std::string& n) {
    for (auto& u : s) {
        if (u.name == n) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("multiplicity") {
    auto R = semigroup({2, 3});
    auto m = FracIdeal::maximal(R);
    auto e = multiplicity(m, free1(R));
    CHECK(e.e == 2);
    CHECK(e.e_reduction == e.e_hilbert);
    CHECK(multiplicity(m, residue_field(R)).e == 1);
    CHECK(multiplicity(m, residue_field(R)).dim == 0);
    CHECK(multiplicity(m, blowup_module(R)).e == 2);
    // e(m, R) of a semigroup ring is its smallest generator; e(m, R^2) doubles it
    for (auto g : std::vector<std::vector<int>>{{3, 4, 5}, {2, 5}, {3, 7, 8}, {4, 5, 6, 7}, {1}}) {
        auto S = semigroup(g);
        CHECK(multiplicity(FracIdeal::maximal(S), free1(S)).e == g.front());
        CHECK(multiplicity(FracIdeal::maximal(S), free_module(S, 2)).e == 2 * g.front());
        CHECK(multiplicity(FracIdeal::maximal(S), max_ideal(S)).e == g.front());
    }
    // torsion does not change e in dimension one
    auto M = direct_sum({free1(R), residue_field(R)});
    CHECK(multiplicity(m, M).e == 2);
    CHECK(multiplicity(FracIdeal::maximal(artin_sq(2)), free1(artin_sq(2))).e == 3);
}

TEST_CASE("phi and Ulrich membership") {
    auto R = semigroup({2, 3});
    auto m = FracIdeal::maximal(R);
    CHECK(phi_I(m, max_ideal(R)) == 0);
    CHECK(phi_I(m, free1(R)) == -1);
    CHECK(phi_I(m, residue_field(R)) == 0);
    CHECK(phi_I(ideal_power(m, 2), residue_field(R)) == 0);
    CHECK(is_ulrich(max_ideal(R), m, 1));
    CHECK_FALSE(is_ulrich(free1(R), m, 1));
    CHECK_FALSE(is_ulrich(max_ideal(R), m, 0));
    CHECK(is_ulrich(residue_field(R), m, 0));
    CHECK_FALSE(is_ulrich(cyclic(R, 2), m, 0));
    auto mixed = direct_sum({free1(R), residue_field(R)});
    CHECK(cm_stratum(mixed) == -1);
    CHECK_THROWS_AS(phi_I(m, mixed), Error);
    CHECK_FALSE(is_ulrich(mixed, m, 1));

    auto D = dvr(3);
    auto t = FracIdeal::maximal(D);
    for (auto& M : {free1(D), max_ideal(D), free_module(D, 2), from_fractional_ideal(mono(D, {3}))}) {
        CHECK(is_ulrich(M, t, 1));
    }
    // phi is additive on direct sums and never positive
    auto S = semigroup({3, 4, 5});
    auto mS = FracIdeal::maximal(S);
    std::vector<ModulePtr> mods = {free1(S), max_ideal(S), canonical_module(S), blowup_module(S)};
    for (auto& A : mods) {
        CHECK(phi_I(mS, A) <= 0);
        for (auto& B : mods) {
            CHECK(phi_I(mS, direct_sum({A, B})) == phi_I(mS, A) + phi_I(mS, B));
        }
    }
}

TEST_CASE("monomial reductions") {
    auto R = semigroup({3, 4, 5});
    auto red = monomial_reduction(FracIdeal::maximal(R));
    CHECK(red.v == 3);
    CHECK(red.n == 1);
    auto I = parse_frac_ideal(R, {"t^4", "t^5"});
    CHECK(monomial_reduction(I).v == 4);
    CHECK(monomial_reduction(ideal_power(FracIdeal::maximal(R), 2)).v == 6);
}

TEST_CASE("Ulrich samples") {
    auto R = semigroup({2, 3});
    auto m = FracIdeal::maximal(R);
    auto s = ul_sample(m, 8, 7);
    CHECK(has_name(s, "B(I)"));
    CHECK(has_name(s, "I^1"));
    CHECK(has_name(s, "I^2"));
    CHECK(s.size() == 8);
    for (auto& u : s) {
        CHECK(is_ulrich(u.module, m, 1));
    }
    auto s2 = ul_sample(m, 8, 7);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].name == s2[i].name);
    }
    auto D = dvr(2);
    auto sd = ul_sample(FracIdeal::maximal(D), 4, 1);
    CHECK(sorted_exps(sd[0].module) == sorted_exps(free1(D)));
    CHECK(has_name(sd, "I^1"));
    auto E = semigroup({3, 4, 5});
    auto se = ul_sample(FracIdeal::maximal(E), 6, 3);
    CHECK(has_name(se, "B(I)"));
    CHECK(has_name(se, "I^1"));
    CHECK_THROWS_AS(ul_sample(FracIdeal::maximal(artin_sq(2)), 4, 1), Error);
}

TEST_CASE("blow-up views") {
    auto R = semigroup({2, 3});
    auto m = FracIdeal::maximal(R);
    auto B = blowup_module(R);
    auto v = restrict_to_blowup(B, m);
    CHECK(v.blowup.ring->semigroup_gens() == std::vector<int>{1});
    CHECK(is_isomorphic(restrict_scalars(v.module, R), B));
    auto bb = ext1_over_blowup(B, B, m);
    CHECK(bb.over_b->length() == 0);
    auto ul = ext1_ul(B, B, m, 1);
    CHECK(ul.ul.size() == 1);

    auto M = max_ideal(R);
    auto mm = ext1_over_blowup(M, M, m);
    auto ulm = ext1_ul(M, M, m, 1);
    CHECK(mm.injective);
    CHECK(mm.image.size() == ulm.ul.size());
    auto img = mm.image;
    std::sort(img.begin(), img.end());
    CHECK(img == ulm.ul.indices);
    CHECK_THROWS_AS(restrict_to_blowup(free1(R), m), Error);

    auto D = dvr(2);
    auto vd = restrict_to_blowup(free1(D), FracIdeal::maximal(D));
    CHECK(vd.module->exps() == free1(D)->exps());

    auto E = semigroup({2, 5});
    auto mE = FracIdeal::maximal(E);
    auto BE = blowup_module(E);
    auto ve = restrict_to_blowup(BE, mE);
    CHECK(ve.blowup.ring->semigroup_gens() == std::vector<int>{2, 3});
    auto ee = ext1_over_blowup(max_ideal(E), BE, mE);
    CHECK(ee.injective);
    CHECK(ee.image.size() == ext1_ul(max_ideal(E), BE, mE, 1).ul.size());
}

TEST_CASE("add membership") {
    auto R = semigroup({2, 3});
    auto B = blowup_module(R);
    auto m = max_ideal(R);
    CHECK(in_add(B, B));
    CHECK(in_add(m, B));
    CHECK(in_add(direct_sum({m, B}), B));
    CHECK_FALSE(in_add(residue_field(R), free1(R)));
    CHECK_FALSE(in_add(free1(R), B));
    CHECK(in_add(free1(R), free1(R)));
    auto E = semigroup({3, 4, 5});
    CHECK_FALSE(in_add(canonical_module(E), free1(E)));
    CHECK(in_add(max_ideal(E), blowup_module(E)));
}

TEST_CASE("minimal MCM approximation of k") {
    auto R = semigroup({2, 3});
    auto a = min_mcm_approx_k(R);
    CHECK(mu(*a.E) == 2);
    CHECK(is_exact(a.seq));
    CHECK_FALSE(is_split(a.seq));
    CHECK(is_additive(NumFn::mu(), a.seq));
    auto E = semigroup({3, 4, 5});
    auto b = min_mcm_approx_k(E);
    CHECK(mu(*b.E) == 3);
    CHECK_FALSE(is_split(b.seq));
    CHECK(is_additive(NumFn::mu(), b.seq));
    CHECK(mu(*min_mcm_approx_k(semigroup({2, 5})).E) == 2);
    CHECK_THROWS_AS(min_mcm_approx_k(dvr(2)), Error);
    CHECK_THROWS_AS(min_mcm_approx_k(artin_sq(2)), Error);
}

TEST_CASE("ring invariants") {
    auto e3 = ring_invariants(semigroup({3, 4, 5}));
    CHECK(e3.type == 2);
    CHECK(e3.multiplicity == 3);
    CHECK(e3.embedding_dim == 3);
    CHECK(e3.minimal_multiplicity);
    CHECK_FALSE(e3.gorenstein);
    CHECK(e3.almost_gorenstein);
    auto e2 = ring_invariants(semigroup({2, 3}));
    CHECK(e2.gorenstein);
    CHECK(e2.minimal_multiplicity);
    CHECK(ring_invariants(dvr(2)).regular);
    auto bad = ring_invariants(semigroup({3, 7, 8}));
    CHECK_FALSE(bad.almost_gorenstein);
    CHECK_FALSE(bad.gorenstein);
    for (auto g : std::vector<std::vector<int>>{{2, 3}, {3, 4, 5}, {2, 5}, {3, 7, 8}, {4, 5, 6, 7}, {3, 5, 7}, {4, 5, 11},
                                                {4, 6, 9}, {5, 6, 7, 8, 9}, {3, 4}, {4, 5, 6}}) {
        auto inv = ring_invariants(semigroup(g));
        CHECK(inv.almost_gorenstein == inv.almost_gorenstein_semigroup);
        if (inv.gorenstein) {
            CHECK(inv.almost_gorenstein);
        }
    }
    auto a2 = ring_invariants(artin_sq(2));
    CHECK(a2.type == 2);
    CHECK(a2.embedding_dim == 2);
    CHECK(a2.minimal_multiplicity);
}

TEST_CASE("canonical module over rings with square-zero maximal ideal") {
    for (int e : {2, 3}) {
        auto R = artin_sq(e, 2);
        auto w = canonical_module(R);
        CHECK(mu(*w) == e);
        auto om = syzygy(w, 1);
        auto kk = direct_sum(std::vector<ModulePtr>(static_cast<std::size_t>(e * e - 1), residue_field(R)));
        CHECK(is_isomorphic(om, kk));
    }
}
