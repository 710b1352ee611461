#include "subext/ulrich.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "subext/error.hpp"

namespace subext {

namespace {

constexpr int kStabilizationMax = 24;

int length_mod(const ModulePtr& M, const DMatrix& gens) { return length_of(d_quotient(M->exps(), gens).exps); }

DMatrix mat_power(const ModulePtr& M, const DMatrix& A, int n) {
    DMatrix P = DMatrix::identity(M->p(), M->size());
    for (int i = 0; i < n; ++i) {
        P = M->reduce(A * P);
    }
    return P;
}

std::optional<DMatrix> solve_columns(const DMatrix& A, const DMatrix& B) {
    DMatrix Z(A.p(), A.cols(), B.cols());
    for (int j = 0; j < B.cols(); ++j) {
        auto z = solve(A, B.col(j));
        if (!z) {
            return std::nullopt;
        }
        Z.set_block(0, j, *z);
    }
    return Z;
}

bool same_span(const ModulePtr& M, const DMatrix& a, const DMatrix& b) {
    DSub A = d_submodule(M->exps(), a);
    DSub B = d_submodule(M->exps(), b);
    return A.coords(M->reduce(b)).has_value() && B.coords(M->reduce(a)).has_value();
}

} // namespace

// ---------------------------------------------------------------- multiplicity

MultiplicityReport multiplicity(const FracIdeal& I, const ModulePtr& M) {
    MultiplicityReport rep;
    rep.dim = (M->ring()->dim() == 1 && free_rank(M->exps()) > 0) ? 1 : 0;
    rep.window.push_back(0);
    FracIdeal In = FracIdeal::unit(I.ring);
    int stable = 0;
    for (int n = 1; n <= kStabilizationMax; ++n) {
        In = ideal_product(In, I);
        rep.window.push_back(nu(In, *M));
        const int k = static_cast<int>(rep.window.size());
        if (rep.dim == 0) {
            stable = (rep.window[k - 1] == rep.window[k - 2]) ? stable + 1 : 0;
        } else if (k >= 3) {
            int d1 = rep.window[k - 1] - rep.window[k - 2];
            int d0 = rep.window[k - 2] - rep.window[k - 3];
            stable = d1 == d0 ? stable + 1 : 0;
        }
        if (stable >= 2) {
            break;
        }
    }
    if (stable < 2) {
        fail(ErrorCode::StabilizationBudget, "Hilbert-Samuel function did not stabilize within n <= 24");
    }
    const int k = static_cast<int>(rep.window.size());
    if (rep.dim == 0) {
        rep.e_hilbert = rep.window.back();
        rep.e_reduction = length(*M);
    } else {
        rep.e_hilbert = rep.window[k - 1] - rep.window[k - 2];
        MonomialReduction red = monomial_reduction(I);
        DMatrix Ax = M->elem_action(red.x);
        int coker = length_mod(M, Ax);
        int ker = length(*kernel(ModMap{M, M, Ax}).module);
        rep.e_reduction = coker - ker;
    }
    check(rep.e_hilbert == rep.e_reduction, "multiplicity routes disagree");
    rep.e = rep.e_hilbert;
    return rep;
}

int cm_stratum(const ModulePtr& M) {
    const int d = M->ring()->dim();
    if (M->is_zero() || d == 0) {
        return d;
    }
    if (free_rank(M->exps()) == 0) {
        return 0;
    }
    return is_mcm(*M) ? 1 : -1;
}

bool in_cm(const ModulePtr& M, int s) {
    if (M->is_zero()) {
        return true;
    }
    return cm_stratum(M) == s;
}

int phi_I(const FracIdeal& I, const ModulePtr& M) {
    if (cm_stratum(M) < 0) {
        fail(ErrorCode::NotCM, "module is not in CM^s");
    }
    int phi = nu(I, *M) - multiplicity(I, M).e;
    check(phi <= 0, "phi_I is positive");
    return phi;
}

MonomialReduction monomial_reduction(const FracIdeal& I, int n_max) {
    const RingPtr& R = I.ring;
    if (R->dim() != 1) {
        fail(ErrorCode::DimensionMismatch, "principal reductions need a dimension-one ring");
    }
    FracIdeal J = ideal_normalize(I);
    if (J.shift != 0) {
        fail(ErrorCode::InvalidArgument, "reduction of a fractional ideal");
    }
    int v = kInfValuation;
    for (const auto& g : J.gens) {
        v = std::min(v, R->valuation(g));
    }
    if (v == kInfValuation || !elem_in_ideal(J, R->t_power(v))) {
        fail(ErrorCode::NoReductionFound, "no monomial of minimal value in the ideal");
    }
    MonomialReduction red;
    red.v = v;
    red.x = R->t_power(v);
    FracIdeal xR = FracIdeal::of(R, {red.x});
    FracIdeal In = FracIdeal::unit(R);
    for (int n = 0; n <= n_max; ++n) {
        FracIdeal next = ideal_product(In, J);
        if (ideal_equals(next, ideal_product(xR, In))) {
            red.n = n;
            return red;
        }
        In = next;
    }
    fail(ErrorCode::NoReductionFound, "monomial of minimal value is not a reduction within n <= " + std::to_string(n_max));
}

bool is_ulrich(const ModulePtr& M, const FracIdeal& I, int s) {
    if (M->is_zero()) {
        return true;
    }
    if (!in_cm(M, s)) {
        return false;
    }
    bool ul = phi_I(I, M) == 0;
    if (s == 1) {
        MonomialReduction red = monomial_reduction(I);
        bool eq = same_span(M, ideal_times(I, *M), M->elem_action(red.x));
        check(eq == ul, "Ulrich criteria disagree");
    }
    return ul;
}

bool is_ulrich_by_reduction(const ModulePtr& M, const FracIdeal& I, const RElem& x) {
    if (M->is_zero()) {
        return true;
    }
    return in_cm(M, 1) && same_span(M, ideal_times(I, *M), M->elem_action(x));
}

// ---------------------------------------------------------------- sampling

std::vector<UlSample> ul_sample(const FracIdeal& I, int count, std::uint64_t seed) {
    const RingPtr& R = I.ring;
    if (R->dim() != 1) {
        fail(ErrorCode::WrongFamily, "Ulrich samples need a dimension-one ring");
    }
    MonomialReduction red = monomial_reduction(I);
    BlowUp bu = blow_up(I);
    const int n0 = std::max(red.n, 1);
    std::vector<UlSample> fixed = {
        {"B(I)", from_fractional_ideal(bu.as_module)},
        {"I^" + std::to_string(n0), from_fractional_ideal(ideal_power(I, n0))},
        {"I^" + std::to_string(n0 + 1), from_fractional_ideal(ideal_power(I, n0 + 1))},
    };
    std::vector<UlSample> extra;
    const RingPtr& B = bu.ring;
    for (int a = 1; a <= B->frobenius(); ++a) {
        if (B->in_semigroup(a)) {
            continue;
        }
        FracIdeal J = ideal_product(FracIdeal::monomial(R, {0, a}), bu.as_module);
        extra.push_back({"(1,t^" + std::to_string(a) + ")B(I)", from_fractional_ideal(J)});
    }
    const std::size_t singles = fixed.size() + extra.size();
    std::vector<UlSample> pool = fixed;
    pool.insert(pool.end(), extra.begin(), extra.end());
    for (std::size_t i = 0; i < singles; ++i) {
        for (std::size_t j = i; j < singles; ++j) {
            extra.push_back({pool[i].name + "+" + pool[j].name, direct_sum({pool[i].module, pool[j].module})});
        }
    }
    std::mt19937_64 rng(seed);
    std::shuffle(extra.begin(), extra.end(), rng);
    std::vector<UlSample> out;
    std::set<std::string> names;
    for (auto* list : {&fixed, &extra}) {
        for (auto& u : *list) {
            if (static_cast<int>(out.size()) >= count || names.count(u.name)) {
                continue;
            }
            check(is_ulrich(u.module, I, 1), "sample member is not Ulrich");
            names.insert(u.name);
            out.push_back(u);
        }
    }
    return out;
}

// ---------------------------------------------------------------- blow-up views

BlowupView restrict_to_blowup(const ModulePtr& M, const FracIdeal& I) {
    if (M->ring()->dim() != 1) {
        fail(ErrorCode::NotUlrich, "module is not I-Ulrich");
    }
    return restrict_to_blowup(M, I, blow_up(I));
}

BlowupView restrict_to_blowup(const ModulePtr& M, const FracIdeal& I, const BlowUp& bu) {
    const RingPtr& R = M->ring();
    if (R->dim() != 1 || !is_ulrich(M, I, 1) || M->is_zero()) {
        if (M->is_zero() && R->dim() == 1) {
            return BlowupView{bu, Module::make(bu.ring, {}, std::vector<DMatrix>(bu.ring->num_gens()))};
        }
        fail(ErrorCode::NotUlrich, "module is not I-Ulrich");
    }
    const RingPtr& B = bu.ring;
    check(B->base_element() == R->base_element(), "blow-up over a different base");
    MonomialReduction red = monomial_reduction(I);
    DMatrix Ax = M->elem_action(red.x);
    std::vector<DMatrix> acts;
    for (int b : B->semigroup_gens()) {
        bool done = false;
        FracIdeal In = FracIdeal::unit(R);
        for (int n = 0; n <= kStabilizationMax && !done; ++n) {
            const int e = b + n * red.v;
            if (R->in_semigroup(e) && elem_in_ideal(In, R->t_power(e))) {
                auto Z = solve_columns(mat_power(M, Ax, n), M->elem_action(R->t_power(e)));
                if (!Z) {
                    fail(ErrorCode::NotUlrich, "blow-up action does not exist");
                }
                acts.push_back(M->reduce(*Z));
                done = true;
            }
            In = ideal_product(In, I);
        }
        check(done, "blow-up generator not reached");
    }
    ModulePtr MB = Module::make(B, M->exps(), acts);
    for (int g = 0; g < R->num_gens(); ++g) {
        DMatrix a = MB->elem_action(B->t_power(R->semigroup_gens()[g]));
        check(is_zero_mod(a - M->action(g), M->exps()), "blow-up action does not extend the ring action");
    }
    return BlowupView{bu, MB};
}

ModulePtr restrict_scalars(const ModulePtr& X, const RingPtr& R) {
    const RingPtr& B = X->ring();
    check(B->base_element() == R->base_element(), "restriction over a different base");
    std::vector<DMatrix> acts;
    for (int a : R->semigroup_gens()) {
        acts.push_back(X->elem_action(B->t_power(a)));
    }
    return Module::make(R, X->exps(), acts);
}

BlowupExt ext1_over_blowup(const ModulePtr& M, const ModulePtr& N, const FracIdeal& I) {
    BlowUp bu = blow_up(I);
    BlowupView vm = restrict_to_blowup(M, I, bu);
    BlowupView vn = restrict_to_blowup(N, I, bu);
    BlowupExt out;
    out.over_b = ExtPresentation::build(vm.module, vn.module);
    out.over_r = ExtPresentation::build(M, N);
    const RingPtr& R = M->ring();
    std::set<std::uint64_t> seen;
    out.over_b->for_each(kDefaultBudget, [&](const ExtClass& c) {
        SES s = middle(c);
        ModulePtr X = restrict_scalars(s.X, R);
        SES r{N, X, M, ModMap{N, X, s.i.mat}, ModMap{X, M, s.p.mat}};
        std::uint64_t idx = out.over_r->index_of(classify(out.over_r, r));
        out.image.push_back(idx);
        seen.insert(idx);
    });
    out.injective = seen.size() == out.image.size();
    return out;
}

// ---------------------------------------------------------------- add, approximations

bool in_add(const ModulePtr& M, const ModulePtr& X, int /*n_max*/) {
    if (M->is_zero()) {
        return true;
    }
    HomSpace hs = hom(X, M);
    std::vector<int> idx = min_gen_indices(*hs.H);
    if (idx.empty()) {
        return false;
    }
    ModulePtr Xn = power_raw(X, static_cast<int>(idx.size()));
    std::vector<DMatrix> blocks;
    for (int i : idx) {
        blocks.push_back(hs.map_of(hs.H->unit_vector(i)).mat);
    }
    ModMap trace{Xn, M, DMatrix::hcat(blocks, M->p(), M->size())};
    return is_split_epi(trace);
}

Approximation min_mcm_approx_k(const RingPtr& R) {
    if (R->family() == Family::Artin) {
        fail(ErrorCode::WrongFamily, "approximation of k needs a dimension-one ring");
    }
    if (R->semigroup_gens() == std::vector<int>{1}) {
        fail(ErrorCode::Regular, "the ring is regular");
    }
    ModulePtr k = residue_field(R);
    ModulePtr w = canonical_module(R);
    ExtPtr e = ExtPresentation::build(k, w);
    check(e->length() == 1, "Ext^1(k, omega) is not k");
    Approximation a;
    a.seq = middle(e->class_at(1));
    a.E = dualize_omega(from_fractional_ideal(FracIdeal::maximal(R)));
    check(is_isomorphic(a.seq.X, a.E), "middle of Ext^1(k, omega) differs from Hom(m, omega)");
    return a;
}

RingInvariants ring_invariants(const RingPtr& R) {
    RingInvariants inv;
    inv.family = family_name(R->family());
    inv.p = R->p();
    inv.dim = R->dim();
    ModulePtr m = from_fractional_ideal(FracIdeal::maximal(R));
    inv.embedding_dim = mu(*m);
    inv.type = mu(*canonical_module(R));
    if (R->dim() == 0) {
        inv.multiplicity = R->basis_size();
        inv.regular = inv.embedding_dim == 0;
    } else {
        inv.multiplicity = multiplicity(FracIdeal::maximal(R), free_module(R, 1)).e;
        inv.regular = inv.embedding_dim == 1;
        inv.frobenius = R->frobenius();
        inv.semigroup_gens = R->semigroup_gens();
    }
    inv.gorenstein = inv.type == 1;
    inv.minimal_multiplicity = inv.multiplicity == inv.embedding_dim - inv.dim + 1;
    if (R->dim() == 1) {
        FracIdeal K = canonical_ideal(R);
        Reduction red = principal_reduction(K);
        FracIdeal xR = FracIdeal::of(R, {red.x}, K.shift);
        inv.almost_gorenstein = ideal_contains(xR, ideal_product(FracIdeal::maximal(R), K));
        // L(S) = {x not in S : F - x not in S} inside PF(S)
        const int F = R->frobenius();
        auto pseudo_frobenius = [&](int x) {
            if (R->in_semigroup(x)) {
                return false;
            }
            for (int a : R->semigroup_gens()) {
                if (!R->in_semigroup(x + a)) {
                    return false;
                }
            }
            return true;
        };
        bool ok = true;
        for (int x = 1; x <= F; ++x) {
            if (!R->in_semigroup(x) && !R->in_semigroup(F - x) && !pseudo_frobenius(x)) {
                ok = false;
            }
        }
        inv.almost_gorenstein_semigroup = ok;
    } else {
        inv.almost_gorenstein = inv.gorenstein;
        inv.almost_gorenstein_semigroup = inv.gorenstein;
    }
    return inv;
}

} // namespace subext
