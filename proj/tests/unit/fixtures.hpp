#pragma once

#include <string>
#include <vector>

#include "subext/modules.hpp"
#include "subext/rings.hpp"

namespace fx {

using namespace subext;

inline RingPtr semigroup(std::vector<int> gens, int p = 2) {
    RingSpec s;
    s.family = Family::Semigroup;
    s.p = p;
    s.gens = std::move(gens);
    return Ring::build(s);
}

inline RingPtr dvr(int p = 2) {
    RingSpec s;
    s.family = Family::Dvr;
    s.p = p;
    return Ring::build(s);
}

// F_p[x_1..x_n]/(x_1..x_n)^2
inline RingPtr artin_sq(int nvars, int p = 2) {
    RingSpec s;
    s.family = Family::Artin;
    s.p = p;
    const char* names[] = {"x", "y", "z", "w"};
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

inline FracIdeal mono(const RingPtr& R, std::vector<int> e) { return FracIdeal::monomial(R, e); }

// R/t^a over a DVR (or any semigroup ring, t^a in S)
inline ModulePtr cyclic(const RingPtr& R, int a) {
    if (a == 0) {
        return from_quotient(FracIdeal::unit(R));
    }
    return from_quotient(mono(R, {a}));
}

// R/(v) for a single variable (or element) of an Artinian ring
inline ModulePtr artin_quot(const RingPtr& R, const std::string& elem) {
    return from_quotient(parse_frac_ideal(R, {elem}));
}

inline ModulePtr free1(const RingPtr& R) { return free_module(R, 1); }

inline std::vector<int> sorted_exps(const ModulePtr& M) {
    auto e = M->exps();
    std::sort(e.begin(), e.end());
    return e;
}

} // namespace fx
