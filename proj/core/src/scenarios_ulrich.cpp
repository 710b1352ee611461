// Scenarios about Ulrich modules, blow-ups and the exact-structure axioms.

#include <algorithm>

#include "harness.hpp"
#include "subext/error.hpp"
#include "subext/ulrich.hpp"

namespace subext::detail {

namespace {

constexpr int kUlCount = 5;
// Ulrich pairs whose Ext^1 has more classes are left out (each class costs a
// middle object and an Ulrich test).
constexpr std::uint64_t kPairClassCap = 256;

std::string ext_label(const std::string& rn, const std::string& mn, const std::string& nn) {
    return rn + " Ext(" + mn + ", " + nn + ")";
}

Inputs ext_inputs(const std::string& rn, const std::string& in, const std::string& mn, const std::string& nn) {
    return {{"ring", rn}, {"I", in}, {"M", mn}, {"N", nn}};
}

// J * Ext^1 = 0, read off the Ext module without enumerating classes
bool kills(const FracIdeal& J, const ExtPtr& e) {
    const ModulePtr& E = e->module();
    return is_zero_mod(ideal_times(J, *E), E->exps());
}

std::vector<std::pair<std::string, FracIdeal>> m_and_m2(const RingPtr& R) {
    const FracIdeal m = FracIdeal::maximal(R);
    return {{"m", m}, {"m^2", ideal_power(m, 2)}};
}

void jane(Ctx& ctx) {
    for (const std::string rn : {"DVR2", "E2", "E3"}) {
        const RingPtr& R = ctx.ring(rn);
        auto sample = general_sample(R);
        for (const auto& [in, I] : m_and_m2(R)) {
            for (const auto& [mn, M] : sample) {
                for (const auto& [nn, N] : sample) {
                    ctx.run(ext_label(rn, mn, nn) + " I=" + in, ext_inputs(rn, in, mn, nn), "I*Ext contained in Ext^{nu_I}",
                            [&](Instance& v) {
                                ExtPtr e = ctx.ext(M, N);
                                auto iext = ideal_times_classes(e, I, ctx.budget());
                                SubsetResult sub = ext1_sub(e, {NumFn::nu(I)}, ctx.budget());
                                v.values["i_ext_classes"] = str(static_cast<std::uint64_t>(iext.size()));
                                v.values["nu_classes"] = str(sub.size());
                                return included(iext, sub.indices);
                            });
                }
            }
        }
    }
}

// Pairs of the sample whose Ext^1 stays under kPairClassCap; the others are
// counted in `skipped`.
std::vector<std::pair<Named, Named>> capped_pairs(const std::vector<Named>& sample, int* skipped) {
    std::vector<std::pair<Named, Named>> out;
    for (const auto& a : sample) {
        for (const auto& b : sample) {
            try {
                ExtPresentation::build(a.second, b.second)->class_count(kPairClassCap);
                out.emplace_back(a, b);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ResourceBudget) {
                    throw;
                }
                ++*skipped;
            }
        }
    }
    return out;
}

void skipped_instance(Ctx& ctx, int skipped) {
    ctx.run("pairs over the class cap", {}, "recorded, not checked", [&](Instance& v) {
        v.values["cap"] = str(kPairClassCap);
        v.values["skipped_pairs"] = str(skipped);
        return true;
    });
}

// Runs body over the capped pairs of the I-Ulrich sample.
template <class Body>
void ulrich_pairs(Ctx& ctx, const std::vector<std::string>& rings, bool with_m2, const std::string& expected, Body body) {
    int skipped = 0;
    for (const auto& rn : rings) {
        const RingPtr& R = ctx.ring(rn);
        auto ideals = m_and_m2(R);
        if (!with_m2) {
            ideals.pop_back();
        }
        for (const auto& [in, I] : ideals) {
            for (const auto& [a, b] : capped_pairs(ulrich_sample(I, kUlCount, ctx.seed()), &skipped)) {
                const ModulePtr &M = a.second, &N = b.second;
                ctx.run(ext_label(rn, a.first, b.first) + " I=" + in, ext_inputs(rn, in, a.first, b.first), expected,
                        [&](Instance& v) { return body(v, R, I, M, N); });
            }
        }
    }
    skipped_instance(ctx, skipped);
}

void uladd(Ctx& ctx) {
    ulrich_pairs(ctx, {"E2", "E3"}, true, "Ul classes = NU(I) classes, closed, containing I*Ext",
                 [&](Instance& v, const RingPtr&, const FracIdeal& I, const ModulePtr& M, const ModulePtr& N) {
                     ctx.consume(ExtPresentation::build(M, N)->class_count(ctx.budget()));
                     UlResult u = ext1_ul(M, N, I, 1, ctx.budget());
                     auto iext = ideal_times_classes(u.ul.ext, I, ctx.budget());
                     v.values["classes"] = str(u.ul.total);
                     v.values["ul_classes"] = str(u.ul.size());
                     v.values["closed"] = str(u.ul.certificate.closed);
                     return u.agree && u.ul.certificate.closed && included(iext, u.ul.indices);
                 });
    for (const std::string rn : {"E2", "E3", "A2", "A3"}) {
        const RingPtr& R = ctx.ring(rn);
        const FracIdeal m = FracIdeal::maximal(R);
        auto sample = ulrich0_sample(R);
        for (const auto& [mn, M] : sample) {
            for (const auto& [nn, N] : sample) {
                ctx.run(ext_label(rn, mn, nn) + " s=0", ext_inputs(rn, "m", mn, nn),
                        "finite length: Ul classes = NU(m) classes, closed", [&](Instance& v) {
                            UlResult u = ext1_ul(M, N, m, 0, ctx.budget());
                            ctx.consume(u.ul.total);
                            v.values["classes"] = str(u.ul.total);
                            v.values["ul_classes"] = str(u.ul.size());
                            return u.agree && u.ul.certificate.closed;
                        });
            }
        }
    }
}

void prop1_ulrich(Ctx& ctx) {
    ulrich_pairs(ctx, {"E2", "E3"}, true, "Ul classes = I*Ext = x*Ext for the reduction x",
                 [&](Instance& v, const RingPtr& R, const FracIdeal& I, const ModulePtr& M, const ModulePtr& N) {
                     UlResult u = ext1_ul(M, N, I, 1, ctx.budget());
                     ctx.consume(u.ul.total);
                     MonomialReduction red = monomial_reduction(I);
                     auto iext = ideal_times_classes(u.ul.ext, I, ctx.budget());
                     auto xext = ideal_times_classes(u.ul.ext, FracIdeal::of(R, {red.x}), ctx.budget());
                     v.values["reduction"] = "t^" + str(red.v);
                     v.values["ul_classes"] = str(u.ul.size());
                     v.values["i_ext_classes"] = str(static_cast<std::uint64_t>(iext.size()));
                     v.values["x_ext_classes"] = str(static_cast<std::uint64_t>(xext.size()));
                     return u.ul.indices == iext && iext == xext;
                 });
}

void uliso(Ctx& ctx) {
    ulrich_pairs(ctx, {"E2", "E3"}, true, "Ext over B(I) maps injectively onto the Ul classes",
                 [&](Instance& v, const RingPtr&, const FracIdeal& I, const ModulePtr& M, const ModulePtr& N) {
                     UlResult u = ext1_ul(M, N, I, 1, ctx.budget());
                     ctx.consume(u.ul.total);
                     BlowupExt b = ext1_over_blowup(M, N, I);
                     std::vector<std::uint64_t> img = b.image;
                     std::sort(img.begin(), img.end());
                     v.values["b_classes"] = str(b.over_b->class_count(ctx.budget()));
                     v.values["ul_classes"] = str(u.ul.size());
                     v.values["injective"] = str(b.injective);
                     return b.injective && img == u.ul.indices;
                 });
}

void trset(Ctx& ctx) {
    ulrich_pairs(ctx, {"E2", "E3"}, true, "tr(I)*Ext contained in the Ul classes",
                 [&](Instance& v, const RingPtr&, const FracIdeal& I, const ModulePtr& M, const ModulePtr& N) {
                     UlResult u = ext1_ul(M, N, I, 1, ctx.budget());
                     ctx.consume(u.ul.total);
                     FracIdeal tr = trace_ideal(I);
                     auto text = ideal_times_classes(u.ul.ext, tr, ctx.budget());
                     v.values["trace"] = tr.to_string();
                     v.values["tr_ext_classes"] = str(static_cast<std::uint64_t>(text.size()));
                     v.values["ul_classes"] = str(u.ul.size());
                     return included(text, u.ul.indices);
                 });
}

void projgor(Ctx& ctx) {
    for (const std::string rn : {"E2", "E3", "E25", "E378"}) {
        const RingPtr& R = ctx.ring(rn);
        const FracIdeal m = FracIdeal::maximal(R);
        BlowUp bu = blow_up(m);
        const bool gor = ring_invariants(bu.ring).gorenstein;
        ModulePtr B = from_fractional_ideal(bu.as_module);
        FracIdeal tr = trace_ideal(m);
        auto sample = ulrich_sample(m, kUlCount, ctx.seed());
        bool witness = false;
        for (const auto& [mn, M] : sample) {
            ctx.run(ext_label(rn, mn, "B(m)"), {{"ring", rn}, {"M", mn}, {"B(m) gorenstein", str(gor)}},
                    gor ? "B(m) Gorenstein: tr(m)*Ext(M, B(m)) = m*Ext(M, B(m)) = 0" : "record m*Ext(M, B(m))",
                    [&](Instance& v) {
                        ExtPtr e = ExtPresentation::build(M, B);
                        const bool tr_zero = kills(tr, e), m_zero = kills(m, e);
                        v.values["ext_length"] = str(e->length());
                        v.values["tr_ext_zero"] = str(tr_zero);
                        v.values["m_ext_zero"] = str(m_zero);
                        witness = witness || !m_zero;
                        return !gor || (tr_zero && m_zero);
                    });
            ctx.run(rn + " " + mn + " in add(B(m))", {{"ring", rn}, {"M", mn}}, "M in add(B(m)) implies m*Ext(M, Ul) = 0",
                    [&](Instance& v) {
                        const bool add = in_add(M, B);
                        bool zero = true;
                        for (const auto& [nn, N] : sample) {
                            zero = zero && kills(m, ExtPresentation::build(M, N));
                        }
                        v.values["in_add"] = str(add);
                        v.values["m_ext_zero"] = str(zero);
                        return !add || zero;
                    });
        }
        if (!gor) {
            ctx.run(rn + " converse witness", {{"ring", rn}}, "B(m) not Gorenstein: some m*Ext(M, B(m)) != 0",
                    [&](Instance& v) {
                        v.values["witness_found"] = str(witness);
                        return witness;
                    });
        }
    }
}

void algor(Ctx& ctx) {
    for (const std::string rn : {"E2", "E3", "E25", "E378"}) {
        const RingPtr& R = ctx.ring(rn);
        ctx.run(rn + " almost Gorenstein", {{"ring", rn}},
                "minimal multiplicity: almost Gorenstein iff m*Ext(M, m) = 0 for all Ulrich M", [&](Instance& v) {
                    RingInvariants inv = ring_invariants(R);
                    const FracIdeal m = FracIdeal::maximal(R);
                    ModulePtr mm = max_ideal_module(R);
                    bool zero = true;
                    std::string witness;
                    for (const auto& [mn, M] : ulrich_sample(m, kUlCount, ctx.seed())) {
                        if (!kills(m, ExtPresentation::build(M, mm))) {
                            zero = false;
                            witness = mn;
                            break;
                        }
                    }
                    v.values["minimal_multiplicity"] = str(inv.minimal_multiplicity);
                    v.values["almost_gorenstein"] = str(inv.almost_gorenstein);
                    v.values["almost_gorenstein_semigroup"] = str(inv.almost_gorenstein_semigroup);
                    v.values["m_ext_zero"] = str(zero);
                    if (!witness.empty()) {
                        v.values["witness"] = witness;
                    }
                    return inv.minimal_multiplicity && inv.almost_gorenstein == inv.almost_gorenstein_semigroup &&
                           inv.almost_gorenstein == zero;
                });
    }
}

void redul(Ctx& ctx) {
    for (const std::string rn : {"E2", "E3", "E25", "E378"}) {
        const RingPtr& R = ctx.ring(rn);
        const FracIdeal m = FracIdeal::maximal(R);
        const auto& g = R->semigroup_gens();
        std::vector<FracIdeal> ideals = {m, ideal_power(m, 2), ideal_power(m, 3), FracIdeal::monomial(R, {g[0]}),
                                         FracIdeal::monomial(R, {g[0], g[1]}), FracIdeal::monomial(R, {g[1]})};
        ModulePtr mm = max_ideal_module(R);
        for (const auto& I : ideals) {
            ctx.run(rn + " m is " + I.to_string() + "-Ulrich", {{"ring", rn}, {"I", I.to_string()}},
                    "m is I-Ulrich iff m is contained in ((x) : I) for a reduction x", [&](Instance& v) {
                        Reduction red = principal_reduction(I);
                        FracIdeal xR = FracIdeal::of(R, {red.x});
                        const bool ul = is_ulrich(mm, I, 1);
                        const bool colon = ideal_contains(ideal_colon_in_ring(xR, I), m);
                        v.values["ulrich"] = str(ul);
                        v.values["m_in_colon"] = str(colon);
                        return ul == colon;
                    });
        }
    }
}

void ulfaith(Ctx& ctx) {
    int skipped = 0;
    for (const std::string rn : {"DVR2", "DVR3", "E2", "E3", "E25"}) {
        const RingPtr& R = ctx.ring(rn);
        const bool regular = ring_invariants(R).regular;
        const FracIdeal m = FracIdeal::maximal(R);
        for (const auto& [a, b] : capped_pairs(ulrich_sample(m, kUlCount, ctx.seed()), &skipped)) {
            const ModulePtr &M = a.second, &N = b.second;
            ctx.run(ext_label(rn, a.first, b.first), ext_inputs(rn, "m", a.first, b.first),
                    regular ? "regular: every middle is Ulrich" : "singular: some middle is not Ulrich", [&](Instance& v) {
                        UlResult u = ext1_ul(M, N, m, 1, ctx.budget());
                        ctx.consume(u.ul.total);
                        v.values["classes"] = str(u.ul.total);
                        v.values["ul_classes"] = str(u.ul.size());
                        return regular ? u.ul.size() == u.ul.total : u.ul.size() < u.ul.total;
                    });
        }
    }
    skipped_instance(ctx, skipped);
}

std::vector<ModulePtr> modules_of(const std::vector<Named>& s) {
    std::vector<ModulePtr> out;
    for (const auto& [n, M] : s) {
        out.push_back(M);
    }
    return out;
}

void axiom_instance(Ctx& ctx, const std::string& label, const std::string& rn, const Admissibility& pred,
                    const std::vector<Named>& sample, int* total) {
    ctx.run(label, {{"ring", rn}, {"predicate", pred.name}}, "no axiom violations", [&](Instance& v) {
        SampleSpec spec;
        spec.checks = 40;
        AxiomReport rep = check_exact_axioms(pred, modules_of(sample), spec, ctx.seed());
        *total += rep.checks;
        ctx.consume(static_cast<std::uint64_t>(rep.checks));
        v.values["checks"] = str(rep.checks);
        v.values["violations"] = str(static_cast<int>(rep.violations.size()));
        if (!rep.violations.empty()) {
            v.values["first_violation"] = rep.violations.front().axiom + ": " + rep.violations.front().witness;
        }
        return rep.violations.empty();
    });
}

void total_instance(Ctx& ctx, int total) {
    ctx.run("total checks", {}, "at least 200 checks", [&](Instance& v) {
        v.values["checks"] = str(total);
        return total >= 200;
    });
}

void axioms_mu(Ctx& ctx) {
    int total = 0;
    for (const auto& rn : ctx.ws().ring_order) {
        const RingPtr& R = ctx.ring(rn);
        axiom_instance(ctx, rn + " MU", rn, admissibility_of(NumFn::mu()), general_sample(R), &total);
    }
    total_instance(ctx, total);
}

void axioms_nu(Ctx& ctx) {
    int total = 0;
    for (const auto& rn : ctx.ws().ring_order) {
        const RingPtr& R = ctx.ring(rn);
        const FracIdeal m = FracIdeal::maximal(R);
        auto sample = R->dim() == 1 ? ulrich_sample(m, kUlCount, ctx.seed()) : general_sample(R);
        axiom_instance(ctx, rn + " NU(m)", rn, admissibility_of(NumFn::nu(m)), sample, &total);
        if (R->dim() == 1) {
            FracIdeal m2 = ideal_power(m, 2);
            axiom_instance(ctx, rn + " NU(m^2)", rn, admissibility_of(NumFn::nu(m2)), ulrich_sample(m2, kUlCount, ctx.seed()),
                           &total);
        }
    }
    total_instance(ctx, total);
}

void axioms_ul(Ctx& ctx) {
    int total = 0;
    for (const auto& rn : ctx.ws().ring_order) {
        const RingPtr& R = ctx.ring(rn);
        const FracIdeal m = FracIdeal::maximal(R);
        if (R->dim() == 1) {
            axiom_instance(ctx, rn + " Ul^1_m", rn, admissibility_ul(m, 1), ulrich_sample(m, kUlCount, ctx.seed()), &total);
        }
        axiom_instance(ctx, rn + " Ul^0_m", rn, admissibility_ul(m, 0), ulrich0_sample(R), &total);
    }
    total_instance(ctx, total);
}

void negative_control(Ctx& ctx) {
    for (const std::string rn : {"DVR2", "E2"}) {
        const RingPtr& R = ctx.ring(rn);
        std::vector<Named> sample = {{"k", residue_field(R)}};
        for (int a = 2; a <= 3; ++a) {
            sample.emplace_back("R/t^" + str(a), from_quotient(FracIdeal::monomial(R, {a})));
        }
        const Admissibility pred = admissibility_even_length();
        ctx.run(rn + " even length", {{"ring", rn}, {"predicate", pred.name}}, "at least one axiom violation",
                [&](Instance& v) {
                    SampleSpec spec;
                    spec.checks = 40;
                    AxiomReport rep = check_exact_axioms(pred, modules_of(sample), spec, ctx.seed());
                    ctx.consume(static_cast<std::uint64_t>(rep.checks));
                    v.values["checks"] = str(rep.checks);
                    v.values["violations"] = str(static_cast<int>(rep.violations.size()));
                    if (!rep.violations.empty()) {
                        v.values["first_violation"] = rep.violations.front().axiom + ": " + rep.violations.front().witness;
                    }
                    return !rep.violations.empty();
                });
    }
}

void tony_et(Ctx& ctx) {
    const RingPtr& R = ctx.ring("E2");
    const FracIdeal m = FracIdeal::maximal(R);
    const NumFn et = NumFn::et(m);
    std::vector<Named> sample;
    for (const auto& nm : mcm_sample(R)) {
        if (nm.first.find('+') == std::string::npos) {
            sample.push_back(nm);
        }
    }
    for (const auto& [mn, M] : sample) {
        for (const auto& [nn, N] : sample) {
            ctx.run(ext_label("E2", mn, nn), ext_inputs("E2", "m", mn, nn),
                    "e^T_m subadditive on every class; additive classes form a submodule", [&](Instance& v) {
                        ExtPtr e = ctx.ext(M, N);
                        const int eM = eval(et, M), eN = eval(et, N);
                        std::vector<std::uint64_t> additive;
                        bool sub = true;
                        const std::uint64_t n = e->class_count(ctx.budget());
                        for (std::uint64_t k = 0; k < n; ++k) {
                            SES s = middle(e->class_at(k));
                            const int x = eval(et, s.X);
                            sub = sub && x <= eM + eN;
                            if (x == eM + eN) {
                                additive.push_back(k);
                            }
                        }
                        Exps ex;
                        ClosureCertificate cert = certify_submodule(e, additive, &ex);
                        v.values["classes"] = str(n);
                        v.values["additive_classes"] = str(static_cast<std::uint64_t>(additive.size()));
                        v.values["subadditive"] = str(sub);
                        v.values["closed"] = str(cert.closed);
                        return sub && cert.closed;
                    });
        }
    }
}

} // namespace

std::vector<ScenarioDef> ulrich_scenarios() {
    return {
        {"jane", "I*Ext^1(M, N) consists of nu_I-additive classes", jane},
        {"uladd", "for I-Ulrich M, N the classes with I-Ulrich middle are the nu_I-additive ones and form a submodule containing I*Ext^1",
         uladd},
        {"prop1-ulrich", "for I-Ulrich M, N the Ulrich classes are I*Ext^1 = x*Ext^1 for a principal reduction x",
         prop1_ulrich},
        {"uliso", "Ext^1 over the blow-up B(I) is isomorphic to the Ulrich classes of Ext^1 over R", uliso},
        {"trset", "tr(I)*Ext^1(M, N) consists of Ulrich classes", trset},
        {"projgor", "if B(m) is Gorenstein then m*Ext^1(M, B(m)) = 0 for Ulrich M, and add(B(m)) members kill Ext by m",
         projgor},
        {"algor", "a ring of minimal multiplicity is almost Gorenstein iff m*Ext^1(M, m) = 0 for every Ulrich M", algor},
        {"redul", "m is I-Ulrich iff m is contained in ((x) : I) for a principal reduction x of I", redul},
        {"ulfaith", "all extensions of Ulrich modules are Ulrich exactly over a regular ring", ulfaith},
        {"axioms-mu", "MU satisfies the exact-structure axioms on sampled objects", axioms_mu},
        {"axioms-nu", "NU(I) satisfies the exact-structure axioms on sampled Ulrich objects", axioms_nu},
        {"axioms-ul", "Ul^s_I with its Ulrich-middle sequences satisfies the exact-structure axioms", axioms_ul},
        {"axioms-mu-negative-control", "a deliberately broken predicate (even length middle) is caught violating the axioms",
         negative_control},
        {"tony-et", "e^T_m is subadditive on MCM extensions and its additive classes form a submodule", tony_et},
    };
}

} // namespace subext::detail
