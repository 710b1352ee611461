#include "subext/subfun.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "subext/error.hpp"
#include "subext/ulrich.hpp"

namespace subext {

namespace {

constexpr int kEtMax = 24;

void require_finite_length(const ModulePtr& C) {
    if (free_rank(C->exps()) > 0) {
        fail(ErrorCode::InvalidArgument, "test module must have finite length");
    }
}

std::string ses_text(const SES& s) {
    return "N=" + s.N->describe() + " X=" + s.X->describe() + " M=" + s.M->describe();
}

} // namespace

// ---------------------------------------------------------------- numerical functions

NumFn NumFn::mu() { return NumFn{}; }

NumFn NumFn::nu(const FracIdeal& I) {
    NumFn f;
    f.tag = NumFnTag::Nu;
    f.ideal = I;
    return f;
}

NumFn NumFn::len_hom_from(const ModulePtr& C) {
    require_finite_length(C);
    NumFn f;
    f.tag = NumFnTag::LenHomFrom;
    f.module = C;
    return f;
}

NumFn NumFn::len_hom_to(const ModulePtr& C) {
    require_finite_length(C);
    NumFn f;
    f.tag = NumFnTag::LenHomTo;
    f.module = C;
    return f;
}

NumFn NumFn::len_tensor(const ModulePtr& C) {
    require_finite_length(C);
    NumFn f;
    f.tag = NumFnTag::LenTensor;
    f.module = C;
    return f;
}

NumFn NumFn::et(const FracIdeal& I) {
    if (I.ring->dim() != 1) {
        fail(ErrorCode::WrongFamily, "e^T needs a dimension-one ring");
    }
    NumFn f;
    f.tag = NumFnTag::Et;
    f.ideal = I;
    return f;
}

std::string NumFn::name() const {
    switch (tag) {
    case NumFnTag::Mu:
        return "MU";
    case NumFnTag::Nu:
        return "NU(" + ideal->to_string() + ")";
    case NumFnTag::LenHomFrom:
        return "LEN_HOM_FROM(" + module->describe() + ")";
    case NumFnTag::LenHomTo:
        return "LEN_HOM_TO(" + module->describe() + ")";
    case NumFnTag::LenTensor:
        return "LEN_TENSOR(" + module->describe() + ")";
    case NumFnTag::Et:
        return "ET(" + ideal->to_string() + ")";
    }
    return "?";
}

std::vector<int> et_window(const FracIdeal& I, const ModulePtr& M) {
    if (M->ring()->dim() != 1) {
        fail(ErrorCode::WrongFamily, "e^T needs a dimension-one ring");
    }
    if (!M->is_zero() && !is_mcm(*M)) {
        fail(ErrorCode::NotCM, "e^T is evaluated on MCM modules only");
    }
    std::vector<int> w;
    FracIdeal In = I;
    for (int n = 0; n <= kEtMax; ++n) {
        w.push_back(length(*tor1(M, In)));
        const std::size_t k = w.size();
        if (k >= 3 && w[k - 1] == w[k - 2] && w[k - 2] == w[k - 3]) {
            return w;
        }
        In = ideal_product(In, I);
    }
    fail(ErrorCode::StabilizationBudget, "Tor_1 lengths did not stabilize within n <= 24");
}

int eval(const NumFn& fn, const ModulePtr& M) {
    switch (fn.tag) {
    case NumFnTag::Mu:
        return mu(*M);
    case NumFnTag::Nu:
        return nu(*fn.ideal, *M);
    case NumFnTag::LenHomFrom:
        return length(*hom(fn.module, M).H);
    case NumFnTag::LenHomTo:
        return length(*hom(M, fn.module).H);
    case NumFnTag::LenTensor:
        return length(*tensor(M, fn.module));
    case NumFnTag::Et:
        return et_window(*fn.ideal, M).back();
    }
    return 0;
}

bool is_additive(const NumFn& fn, const SES& s) { return eval(fn, s.X) == eval(fn, s.N) + eval(fn, s.M); }

bool is_subadditive(const NumFn& fn, const SES& s) { return eval(fn, s.X) <= eval(fn, s.N) + eval(fn, s.M); }

// ---------------------------------------------------------------- fast middle invariants

std::vector<Coef> class_digits(const ExtClass& c) { return digits_of(c.coords, c.ext->exps()); }

MiddleNuEvaluator::MiddleNuEvaluator(ExtPtr ext, const FracIdeal& I) : ext_(std::move(ext)) {
    const ExtPresentation& e = *ext_;
    const ModulePtr& N = e.N();
    const RingPtr& R = N->ring();
    p_ = R->p();
    const Resolution& res = e.resolution();
    ModulePtr F0 = free_module(R, res.betti[0]);
    ModulePtr amb = direct_sum_raw({N, F0});
    DQuot V = d_quotient(amb->exps(), ideal_times(I, *amb));
    dimV_ = length_of(V.exps);
    int J = 0;
    for (int x : V.exps) {
        J = std::max(J, x);
    }
    const int nN = N->size();
    const int b1 = res.betti[1];
    const int nb = R->basis_size();
    // generator columns s^j A_b (v ; w) projected to V, flattened to F_p digits
    auto project = [&](const DMatrix& top, const DMatrix& bottom, std::vector<std::vector<Coef>>& out) {
        DMatrix x = DMatrix::vcat(top, bottom);
        for (int b = 0; b < nb; ++b) {
            DMatrix y = amb->reduce(amb->basis_action(b) * x);
            for (int j = 0; j < J; ++j) {
                DMatrix z = y.scaled(Scalar::monomial(p_, 1, j));
                out.push_back(digits_of(reduce_mod(V.proj * z, V.exps), V.exps));
            }
        }
    };
    for (int a = 0; a < b1; ++a) {
        project(DMatrix(p_, nN, 1), res.images[0].col(a), const_cols_);
    }
    const Exps& ee = e.exps();
    for (std::size_t i = 0; i < ee.size(); ++i) {
        for (int k = 0; k < ee[i]; ++k) {
            DMatrix u(p_, static_cast<int>(ee.size()), 1);
            u(static_cast<int>(i), 0) = Scalar::monomial(p_, 1, k);
            DMatrix psi = e.cocycle(e.from_coords(u));
            std::vector<std::vector<Coef>> cols;
            for (int a = 0; a < b1; ++a) {
                DMatrix top = psi.rows_range(a * nN, (a + 1) * nN).scaled(Scalar::constant(p_, -1));
                project(top, DMatrix(p_, F0->size(), 1), cols);
            }
            lin_.push_back(std::move(cols));
        }
    }
}

int MiddleNuEvaluator::value_digits(const std::vector<Coef>& digits) const {
    FpSpan span(p_, dimV_);
    for (std::size_t col = 0; col < const_cols_.size(); ++col) {
        std::vector<Coef> v = const_cols_[col];
        for (std::size_t pos = 0; pos < digits.size(); ++pos) {
            const Coef d = digits[pos];
            if (!d) {
                continue;
            }
            const auto& l = lin_[pos][col];
            for (int r = 0; r < dimV_; ++r) {
                v[r] = static_cast<Coef>((v[r] + d * l[r]) % p_);
            }
        }
        span.insert(std::move(v));
    }
    return dimV_ - span.dim();
}

int MiddleNuEvaluator::value(const ExtClass& c) const { return value_digits(class_digits(c)); }

int MiddleNuEvaluator::value_at(std::uint64_t index) const { return value(ext_->class_at(index)); }

// ---------------------------------------------------------------- class sets

bool SubsetResult::contains(std::uint64_t index) const {
    return std::binary_search(indices.begin(), indices.end(), index);
}

ClosureCertificate certify_submodule(const ExtPtr& ext, const std::vector<std::uint64_t>& sorted, Exps* exps) {
    ClosureCertificate cert;
    const int p = ext->M()->p();
    auto in_set = [&](std::uint64_t i) { return std::binary_search(sorted.begin(), sorted.end(), i); };
    FpSpan span(p, ext->length());
    std::vector<std::uint64_t> gens;
    for (std::uint64_t i : sorted) {
        if (span.insert(class_digits(ext->class_at(i)))) {
            gens.push_back(i);
        }
    }
    cert.span_dim = span.dim();
    if (sorted.empty() || !in_set(0)) {
        cert.closed = false;
        cert.counterexamples.push_back("zero class missing");
    }
    std::uint64_t full = 1;
    for (int i = 0; i < span.dim(); ++i) {
        full *= static_cast<std::uint64_t>(p);
    }
    if (sorted.size() != full) {
        cert.closed = false;
        // some x + g falls outside, find one
        for (std::uint64_t x : sorted) {
            bool hit = false;
            for (std::uint64_t g : gens) {
                std::uint64_t y = ext->index_of(baer_sum(ext->class_at(x), ext->class_at(g)));
                if (!in_set(y)) {
                    cert.counterexamples.push_back("class " + std::to_string(x) + " + class " + std::to_string(g) +
                                                   " = class " + std::to_string(y) + " not in set");
                    hit = true;
                    break;
                }
            }
            if (hit) {
                break;
            }
        }
    }
    const RingPtr& R = ext->M()->ring();
    for (std::uint64_t g : gens) {
        for (int r = 0; r < R->num_gens(); ++r) {
            std::uint64_t y = ext->index_of(scalar(R->gen(r), ext->class_at(g)));
            if (!in_set(y)) {
                cert.closed = false;
                cert.counterexamples.push_back(R->gen_names()[r] + " * class " + std::to_string(g) + " = class " +
                                               std::to_string(y) + " not in set");
            }
        }
    }
    if (exps) {
        DMatrix G(p, ext->module()->size(), static_cast<int>(gens.size()));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            G.set_block(0, static_cast<int>(j), ext->class_at(gens[j]).coords);
        }
        Exps e = submodule(ext->module(), G).module->exps();
        std::sort(e.begin(), e.end());
        *exps = e;
    }
    return cert;
}

std::vector<std::uint64_t> submodule_classes(const ExtPtr& ext, const DMatrix& gens, std::uint64_t budget) {
    SubModule S = submodule(ext->module(), gens);
    const int p = ext->M()->p();
    const int len = length_of(S.module->exps());
    std::uint64_t total = 1;
    for (int i = 0; i < len; ++i) {
        total *= static_cast<std::uint64_t>(p);
        if (total > budget) {
            fail(ErrorCode::ResourceBudget, "submodule has too many classes");
        }
    }
    std::vector<std::uint64_t> out;
    std::vector<Coef> digits(static_cast<std::size_t>(len), 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        std::uint64_t r = k;
        for (int i = 0; i < len; ++i) {
            digits[i] = static_cast<Coef>(r % p);
            r /= p;
        }
        DMatrix c = coords_of(digits, S.module->exps(), p);
        out.push_back(ext->index_of(ext->from_coords(S.incl.mat * c)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> ideal_times_classes(const ExtPtr& ext, const FracIdeal& J, std::uint64_t budget) {
    FracIdeal Jn = ideal_normalize(J);
    if (Jn.shift != 0) {
        fail(ErrorCode::InvalidArgument, "J * Ext needs an ideal of R");
    }
    const ModulePtr& E = ext->module();
    std::vector<DMatrix> parts;
    for (const auto& x : Jn.gens) {
        parts.push_back(E->elem_action(x));
    }
    return submodule_classes(ext, DMatrix::hcat(parts, E->p(), E->size()), budget);
}

SubsetResult ext1_sub(const ModulePtr& M, const ModulePtr& N, const std::vector<NumFn>& fns, std::uint64_t budget) {
    return ext1_sub(ExtPresentation::build(M, N), fns, budget);
}

SubsetResult ext1_sub(const ExtPtr& ext, const std::vector<NumFn>& fns, std::uint64_t budget) {
    SubsetResult out;
    out.ext = ext;
    out.total = ext->class_count(budget);
    struct Fast {
        MiddleNuEvaluator ev;
        int target;
    };
    std::vector<Fast> fast;
    std::vector<NumFn> slow;
    const RingPtr& R = ext->M()->ring();
    for (const auto& fn : fns) {
        if (fn.tag == NumFnTag::Mu || fn.tag == NumFnTag::Nu) {
            FracIdeal I = fn.tag == NumFnTag::Mu ? FracIdeal::maximal(R) : *fn.ideal;
            fast.push_back(Fast{MiddleNuEvaluator(ext, I), nu(I, *ext->N()) + nu(I, *ext->M())});
        } else {
            slow.push_back(fn);
        }
    }
    std::vector<int> slow_target;
    for (const auto& fn : slow) {
        slow_target.push_back(eval(fn, ext->N()) + eval(fn, ext->M()));
    }
    for (std::uint64_t k = 0; k < out.total; ++k) {
        ExtClass c = ext->class_at(k);
        bool ok = true;
        if (!fast.empty()) {
            auto digits = class_digits(c);
            for (const auto& f : fast) {
                if (f.ev.value_digits(digits) != f.target) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && !slow.empty()) {
            SES s = middle(c);
            for (std::size_t i = 0; i < slow.size() && ok; ++i) {
                ok = eval(slow[i], s.X) == slow_target[i];
            }
        }
        if (ok) {
            out.indices.push_back(k);
        }
    }
    out.certificate = certify_submodule(ext, out.indices, &out.exps);
    return out;
}

constexpr std::uint64_t kFullUlrichChecks = 8;

UlResult ext1_ul(const ModulePtr& M, const ModulePtr& N, const FracIdeal& I, int s, std::uint64_t budget) {
    if (!is_ulrich(M, I, s) || !is_ulrich(N, I, s)) {
        fail(ErrorCode::NotUlrich, "ext1_ul needs I-Ulrich end terms");
    }
    ExtPtr ext = ExtPresentation::build(M, N);
    UlResult out;
    out.ul.ext = ext;
    out.ul.total = ext->class_count(budget);
    // Full two-route test on the first classes, reduction criterion after.
    std::optional<RElem> x;
    if (s == 1) {
        x = monomial_reduction(I).x;
    }
    for (std::uint64_t k = 0; k < out.ul.total; ++k) {
        ModulePtr X = middle(ext->class_at(k)).X;
        const bool ul = (s == 0 || k < kFullUlrichChecks) ? is_ulrich(X, I, s) : is_ulrich_by_reduction(X, I, *x);
        if (ul) {
            out.ul.indices.push_back(k);
        }
    }
    out.ul.certificate = certify_submodule(ext, out.ul.indices, &out.ul.exps);
    out.nu = ext1_sub(ext, {NumFn::nu(I)}, budget);
    out.agree = out.ul.indices == out.nu.indices;
    return out;
}

// ---------------------------------------------------------------- half-exact functors

HalfExactCheck hom_exactness_subfunctor(const ModulePtr& C, HomSide side, const SES& s) {
    require_finite_length(C);
    HalfExactCheck out;
    DMatrix f, g;
    Exps e0, e1, e2;
    if (side == HomSide::From) {
        HomSpace hn = hom(C, s.N), hx = hom(C, s.X), hm = hom(C, s.M);
        f = hom_post_matrix(hn, hx, s.i);
        g = hom_post_matrix(hx, hm, s.p);
        e0 = hn.H->exps();
        e1 = hx.H->exps();
        e2 = hm.H->exps();
        out.additive = is_additive(NumFn::len_hom_from(C), s);
    } else {
        HomSpace hm = hom(s.M, C), hx = hom(s.X, C), hn = hom(s.N, C);
        f = hom_pre_matrix(hm, hx, s.p);
        g = hom_pre_matrix(hx, hn, s.i);
        e0 = hm.H->exps();
        e1 = hx.H->exps();
        e2 = hn.H->exps();
        out.additive = is_additive(NumFn::len_hom_to(C), s);
    }
    const int p = C->p();
    DMatrix in(p, static_cast<int>(e0.size()), 0);
    DMatrix out_map(p, 0, static_cast<int>(e2.size()));
    out.exact = exact_at(in, f, e0, e1) && exact_at(f, g, e1, e2) && exact_at(g, out_map, e2, {});
    return out;
}

// ---------------------------------------------------------------- exact-structure axioms

Admissibility admissibility_of(const NumFn& fn) {
    Admissibility a;
    a.name = fn.name();
    if (fn.tag == NumFnTag::Et) {
        a.in_domain = [](const ModulePtr& M) { return M->is_zero() || is_mcm(*M); };
    } else {
        a.in_domain = [](const ModulePtr&) { return true; };
    }
    a.admissible = [fn](const SES& s) { return is_additive(fn, s); };
    return a;
}

Admissibility admissibility_ul(const FracIdeal& I, int s) {
    Admissibility a;
    a.name = "UL(" + I.to_string() + "," + std::to_string(s) + ")";
    a.in_domain = [I, s](const ModulePtr& M) { return is_ulrich(M, I, s); };
    a.admissible = [I, s](const SES& q) { return is_ulrich(q.X, I, s); };
    return a;
}

Admissibility admissibility_even_length() {
    Admissibility a;
    a.name = "EVEN_LENGTH";
    a.in_domain = [](const ModulePtr& M) { return free_rank(M->exps()) == 0; };
    a.admissible = [](const SES& s) { return length(*s.X) % 2 == 0; };
    return a;
}

namespace {

class AxiomRun {
public:
    AxiomRun(const Admissibility& pred, std::vector<ModulePtr> mods, const SampleSpec& spec, std::uint64_t seed)
        : pred_(pred), mods_(std::move(mods)), spec_(spec), rng_(seed) {}

    AxiomReport run() {
        AxiomReport rep;
        rep.predicate = pred_.name;
        report_ = &rep;
        if (mods_.empty()) {
            return rep;
        }
        R_ = mods_.front()->ring();
        zero_ = free_module(R_, 0);
        for (const auto& M : mods_) {
            identity_checks(M);
        }
        const int max_rounds = 40 * spec_.checks;
        for (int round = 0; rep.checks < spec_.checks && round < max_rounds; ++round) {
            switch (round % 5) {
            case 0:
                iso_check();
                break;
            case 1:
                deflation_check();
                break;
            case 2:
                inflation_check();
                break;
            case 3:
                pushout_pullback_check();
                break;
            default:
                group_check();
                break;
            }
        }
        return rep;
    }

private:
    void record(const std::string& axiom, bool ok, const std::string& witness) {
        ++report_->checks;
        if (!ok) {
            report_->violations.push_back({axiom, witness});
        }
    }

    ModulePtr pick() { return mods_[rng_() % mods_.size()]; }

    ExtPtr small_ext(const ModulePtr& M, const ModulePtr& N) {
        ExtPtr e = ExtPresentation::build(M, N);
        std::uint64_t n = 1;
        for (int i = 0; i < e->length(); ++i) {
            n *= static_cast<std::uint64_t>(M->p());
            if (n > static_cast<std::uint64_t>(spec_.max_classes)) {
                return nullptr;
            }
        }
        return e;
    }

    // A random admissible class, preferring nonzero ones.
    std::optional<ExtClass> admissible_class(const ExtPtr& e) {
        const std::uint64_t n = e->class_count();
        for (int t = 0; t < 6; ++t) {
            ExtClass c = e->class_at(rng_() % n);
            if (!c.is_zero() && pred_.admissible(middle(c))) {
                return c;
            }
        }
        return e->zero();
    }

    ModMap random_map(const ModulePtr& A, const ModulePtr& B) {
        HomSpace hs = hom(A, B);
        const int p = A->p();
        DMatrix c(p, hs.H->size(), 1);
        for (int i = 0; i < hs.H->size(); ++i) {
            const int e = hs.H->exps()[i];
            const int deg = is_free_exp(e) ? 3 : e;
            CoefVec v(static_cast<std::size_t>(deg));
            for (auto& x : v) {
                x = static_cast<Coef>(rng_() % p);
            }
            c(i, 0) = Scalar::from_poly(p, v);
        }
        return hs.map_of(c);
    }

    void identity_checks(const ModulePtr& M) {
        const int p = M->p();
        SES a{M, M, zero_, ModMap::identity(M), ModMap{M, zero_, DMatrix(p, 0, M->size())}};
        record("E0", pred_.admissible(a), "identity inflation on " + M->describe());
        SES b{zero_, M, M, ModMap{zero_, M, DMatrix(p, M->size(), 0)}, ModMap::identity(M)};
        record("E0op", pred_.admissible(b), "identity deflation on " + M->describe());
    }

    void iso_check() {
        ExtPtr e = small_ext(pick(), pick());
        if (!e) {
            return;
        }
        ExtClass c = e->class_at(rng_() % e->class_count());
        SES s = middle(c);
        const ModulePtr& X = s.X;
        if (X->is_zero() || R_->num_gens() == 0) {
            return;
        }
        // unipotent automorphism id + g*h with g in m
        ModMap h = random_map(X, X);
        DMatrix g = X->action(static_cast<int>(rng_() % R_->num_gens()));
        DMatrix alpha = X->reduce(DMatrix::identity(X->p(), X->size()) + g * h.mat);
        DMatrix rel = relation_matrix(X->exps(), X->p());
        DMatrix inv(X->p(), X->size(), X->size());
        for (int j = 0; j < X->size(); ++j) {
            auto z = solve(DMatrix::hcat(alpha, rel), X->unit_vector(j));
            check(z.has_value(), "unipotent map is not invertible");
            inv.set_block(0, j, z->rows_range(0, X->size()));
        }
        SES t{s.N, X, s.M, ModMap{s.N, X, X->reduce(alpha * s.i.mat)}, ModMap{X, s.M, s.M->reduce(s.p.mat * inv)}};
        check(is_exact(t), "conjugated sequence is not exact");
        record("iso", pred_.admissible(s) == pred_.admissible(t), "class " + std::to_string(e->index_of(c)) + ": " + ses_text(s));
    }

    void deflation_check() {
        ModulePtr Z = pick(), K2 = pick(), K1 = pick();
        ExtPtr e2 = small_ext(Z, K2);
        if (!e2) {
            return;
        }
        auto c2 = admissible_class(e2);
        SES s2 = middle(*c2);
        if (!pred_.in_domain(s2.X)) {
            return;
        }
        ExtPtr e1 = small_ext(s2.X, K1);
        if (!e1) {
            return;
        }
        auto c1 = admissible_class(e1);
        SES s1 = middle(*c1);
        ModMap q = s1.p.then(s2.p);
        SubModule K = kernel(q);
        SES t{K.module, s1.X, Z, K.incl, q};
        record("E1op", pred_.admissible(t) && pred_.in_domain(K.module), "composite deflation " + ses_text(t));
    }

    void inflation_check() {
        ModulePtr A = pick(), C1 = pick(), C2 = pick();
        ExtPtr e1 = small_ext(C1, A);
        if (!e1) {
            return;
        }
        SES s1 = middle(*admissible_class(e1));
        if (!pred_.in_domain(s1.X)) {
            return;
        }
        ExtPtr e2 = small_ext(C2, s1.X);
        if (!e2) {
            return;
        }
        SES s2 = middle(*admissible_class(e2));
        ModMap j = s1.i.then(s2.i);
        QuotientModule Q = cokernel(j);
        SES t{A, s2.X, Q.module, j, Q.proj};
        record("E1", pred_.admissible(t) && pred_.in_domain(Q.module), "composite inflation " + ses_text(t));
    }

    void pushout_pullback_check() {
        ExtPtr e = small_ext(pick(), pick());
        if (!e) {
            return;
        }
        SES s = middle(*admissible_class(e));
        if (!pred_.admissible(s)) {
            return;
        }
        ModulePtr N2 = pick();
        SES po = pushout_seq(s, random_map(s.N, N2)).seq;
        record("E2", pred_.admissible(po), "pushout of " + ses_text(s) + " into " + N2->describe());
        ModulePtr M2 = pick();
        SES pb = pullback_seq(s, random_map(M2, s.M)).seq;
        record("E2op", pred_.admissible(pb), "pullback of " + ses_text(s) + " from " + M2->describe());
    }

    void group_check() {
        ExtPtr e = small_ext(pick(), pick());
        if (!e) {
            return;
        }
        ExtClass a = *admissible_class(e), b = *admissible_class(e);
        record("baer", pred_.admissible(middle(baer_sum(a, b))),
               "classes " + std::to_string(e->index_of(a)) + ", " + std::to_string(e->index_of(b)) + " of " +
                   e->M()->describe() + " by " + e->N()->describe());
        for (int g = 0; g < R_->num_gens(); ++g) {
            record("scalar", pred_.admissible(middle(scalar(R_->gen(g), a))),
                   R_->gen_names()[g] + " * class " + std::to_string(e->index_of(a)));
        }
    }

    const Admissibility& pred_;
    std::vector<ModulePtr> mods_;
    SampleSpec spec_;
    std::mt19937_64 rng_;
    AxiomReport* report_ = nullptr;
    RingPtr R_;
    ModulePtr zero_;
};

} // namespace

AxiomReport check_exact_axioms(const Admissibility& pred, const std::vector<ModulePtr>& sample, const SampleSpec& spec,
                               std::uint64_t seed) {
    std::vector<ModulePtr> mods;
    for (const auto& M : sample) {
        if (static_cast<int>(mods.size()) < spec.max_modules && pred.in_domain(M)) {
            mods.push_back(M);
        }
    }
    return AxiomRun(pred, mods, spec, seed).run();
}

} // namespace subext
