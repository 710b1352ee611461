#pragma once

// Multiplicities, Ulrich modules with respect to an m-primary ideal, the
// blow-up algebra view of Ulrich modules, add-membership and the minimal
// MCM approximation of the residue field.

#include <cstdint>
#include <string>
#include <vector>

#include "subext/ext.hpp"

namespace subext {

struct MultiplicityReport {
    int e = 0;
    int e_reduction = 0; // lambda(M/xM) - lambda(0:_M x), or lambda(M) in dimension 0
    int e_hilbert = 0;   // stabilized first difference of lambda(M/I^n M)
    int dim = 0;
    std::vector<int> window; // lambda(M/I^n M) for n = 0, 1, ...
};

MultiplicityReport multiplicity(const FracIdeal& I, const ModulePtr& M);

// s with M in CM^s: 0 for finite length, 1 for MCM over a dimension-one
// ring, -1 otherwise.  The zero module reports its ring's dimension.
int cm_stratum(const ModulePtr& M);
bool in_cm(const ModulePtr& M, int s);

// lambda(M/IM) - e(I, M); throws NotCM outside CM^s.
int phi_I(const FracIdeal& I, const ModulePtr& M);
bool is_ulrich(const ModulePtr& M, const FracIdeal& I, int s);
// Dimension one: M is MCM and IM = xM for a principal reduction x of I.
bool is_ulrich_by_reduction(const ModulePtr& M, const FracIdeal& I, const RElem& x);

// Monomial principal reduction t^v of I with I^{n+1} = t^v I^n.
struct MonomialReduction {
    int v = 0;
    int n = 0;
    RElem x;
};
MonomialReduction monomial_reduction(const FracIdeal& I, int n_max = 16);

struct UlSample {
    std::string name;
    ModulePtr module;
};
std::vector<UlSample> ul_sample(const FracIdeal& I, int count, std::uint64_t seed);

struct BlowupView {
    BlowUp blowup;
    ModulePtr module; // the same D-module with B(I) acting
};
BlowupView restrict_to_blowup(const ModulePtr& M, const FracIdeal& I);
// Same, over an already computed blow-up of I.
BlowupView restrict_to_blowup(const ModulePtr& M, const FracIdeal& I, const BlowUp& bu);
// A B-module viewed over R through R -> B.
ModulePtr restrict_scalars(const ModulePtr& X, const RingPtr& R);

struct BlowupExt {
    ExtPtr over_b;
    ExtPtr over_r;
    std::vector<std::uint64_t> image; // R-class index of each B-class
    bool injective = false;
};
// Ext^1 over B(I) with the restriction map into Ext^1 over R.
BlowupExt ext1_over_blowup(const ModulePtr& M, const ModulePtr& N, const FracIdeal& I);

// Whether M is a direct summand of some X^n.
bool in_add(const ModulePtr& M, const ModulePtr& X, int n_max = 0);

struct Approximation {
    ModulePtr E; // Hom(m, omega)
    SES seq;     // 0 -> omega -> E -> k -> 0
};
Approximation min_mcm_approx_k(const RingPtr& R);

struct RingInvariants {
    std::string family;
    int p = 2;
    int dim = 0;
    int embedding_dim = 0;
    int multiplicity = 0;
    int type = 0;
    int frobenius = -1;
    std::vector<int> semigroup_gens;
    bool regular = false;
    bool gorenstein = false;
    bool minimal_multiplicity = false;
    bool almost_gorenstein = false;            // m*omega in xR
    bool almost_gorenstein_semigroup = false;  // L(S) contained in PF(S)
};
RingInvariants ring_invariants(const RingPtr& R);

} // namespace subext
