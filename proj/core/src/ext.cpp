#include "subext/ext.hpp"

#include "subext/error.hpp"

namespace subext {

namespace {

DMatrix stack_identity_zero(int p, int top, int bottom) {
    // [I_top ; 0_bottom]
    DMatrix m(p, top + bottom, top);
    for (int i = 0; i < top; ++i) {
        m(i, i) = Scalar::constant(p, 1);
    }
    return m;
}

DMatrix stack_zero_identity(int p, int top, int bottom) {
    // [0_top ; I_bottom]
    DMatrix m(p, top + bottom, bottom);
    for (int i = 0; i < bottom; ++i) {
        m(top + i, i) = Scalar::constant(p, 1);
    }
    return m;
}

bool same_module(const ModulePtr& a, const ModulePtr& b) { return a == b || a->exps() == b->exps(); }

// Matrix of a D-linear map between modules, columns = images of unit vectors.
bool contained_in_image(const DMatrix& f, const Exps& tgt, const DMatrix& y) {
    DMatrix A = DMatrix::hcat(f, relation_matrix(tgt, y.p()));
    for (int j = 0; j < y.cols(); ++j) {
        if (!solve(A, y.col(j))) {
            return false;
        }
    }
    return true;
}

} // namespace

// ---------------------------------------------------------------- SES

bool is_exact(const SES& s) {
    if (!s.i.then(s.p).is_zero()) {
        return false;
    }
    if (!is_injective(s.i) || !is_surjective(s.p)) {
        return false;
    }
    DMatrix K = d_kernel_gens(s.p.mat, s.X->exps(), s.M->exps());
    return contained_in_image(s.i.mat, s.X->exps(), s.X->reduce(K));
}

SES make_ses(const ModMap& i, const ModMap& p) {
    SES s{i.src, i.tgt, p.tgt, i, p};
    if (!same_module(i.tgt, p.src)) {
        fail(ErrorCode::LiftFailure, "maps do not compose");
    }
    if (!is_exact(s)) {
        fail(ErrorCode::LiftFailure, "sequence is not exact");
    }
    return s;
}

SES split_ses(const ModulePtr& N, const ModulePtr& M) {
    ModulePtr X = direct_sum_raw({N, M});
    const int p = N->p();
    ModMap i{N, X, stack_identity_zero(p, N->size(), M->size())};
    ModMap q{X, M, stack_zero_identity(p, N->size(), M->size()).transpose()};
    return SES{N, X, M, i, q};
}

// ---------------------------------------------------------------- presentation

ExtPtr ExtPresentation::build(const ModulePtr& M, const ModulePtr& N) {
    check(M->ring() == N->ring(), "Ext over different rings");
    auto e = std::shared_ptr<ExtPresentation>(new ExtPresentation());
    e->M_ = M;
    e->N_ = N;
    e->res_ = M->resolution(2);
    const auto& res = *e->res_;
    const int p = M->p();
    const int b1 = res.betti[1];
    const int b2 = res.betti.size() > 2 ? res.betti[2] : 0;
    e->N1_ = power_raw(N, b1);
    ModulePtr N2 = power_raw(N, b2);
    e->psi1_ = ring_matrix_action(*N, res.images[0], true);
    e->psi2_ = (b2 > 0 && b1 > 0) ? ring_matrix_action(*N, res.images[1], true) : DMatrix(p, N2->size(), e->N1_->size());
    DMatrix K = d_kernel_gens(e->psi2_, e->N1_->exps(), N2->exps());
    e->Z_ = submodule(e->N1_, K);
    DMatrix B = e->Z_.lattice.coords_or_throw(e->N1_->reduce(e->psi1_));
    QuotientModule Q = quotient(e->Z_.module, B);
    e->E_ = Q.module;
    e->proj_ = Q.proj.mat;
    e->lift_ = Q.lift;
    return e;
}

DMatrix ExtPresentation::cocycle(const ExtClass& c) const { return N1_->reduce(Z_.incl.mat * (lift_ * c.coords)); }

ExtClass ExtPresentation::class_of_cocycle(const DMatrix& z) const {
    auto zc = Z_.lattice.coords(N1_->reduce(z));
    if (!zc) {
        fail(ErrorCode::LiftFailure, "not a cocycle");
    }
    return ExtClass{shared_from_this(), E_->reduce(proj_ * *zc)};
}

bool ExtPresentation::is_cocycle(const DMatrix& z) const { return Z_.lattice.coords(N1_->reduce(z)).has_value(); }

bool ExtPresentation::is_coboundary(const DMatrix& z) const {
    return contained_in_image(psi1_, N1_->exps(), N1_->reduce(z));
}

ExtClass ExtPresentation::zero() const { return ExtClass{shared_from_this(), DMatrix(M_->p(), E_->size(), 1)}; }

ExtClass ExtPresentation::from_coords(const DMatrix& coords) const {
    return ExtClass{shared_from_this(), E_->reduce(coords)};
}

std::uint64_t ExtPresentation::class_count(std::uint64_t budget) const {
    if (free_rank(exps()) > 0) {
        fail(ErrorCode::InfiniteLength, "Ext^1 has infinite length");
    }
    std::uint64_t n = 1;
    for (int i = 0; i < length(); ++i) {
        n *= static_cast<std::uint64_t>(M_->p());
        if (n > budget) {
            fail(ErrorCode::ResourceBudget,
                 "Ext^1 has " + std::to_string(M_->p()) + "^" + std::to_string(length()) + " classes, over budget");
        }
    }
    return n;
}

ExtClass ExtPresentation::class_at(std::uint64_t index) const {
    const int p = M_->p();
    const Exps& e = exps();
    std::vector<Coef> digits(static_cast<std::size_t>(length()), 0);
    int pos = length();
    for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i) {
        pos -= e[i];
        for (int k = 0; k < e[i]; ++k) {
            digits[pos + k] = static_cast<Coef>(index % p);
            index /= p;
        }
    }
    return ExtClass{shared_from_this(), coords_of(digits, e, p)};
}

std::uint64_t ExtPresentation::index_of(const ExtClass& c) const {
    const int p = M_->p();
    const Exps& e = exps();
    auto digits = digits_of(c.coords, e);
    std::uint64_t index = 0;
    int pos = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint64_t v = 0, w = 1;
        for (int k = 0; k < e[i]; ++k) {
            v += digits[pos + k] * w;
            w *= p;
        }
        index = index * w + v;
        pos += e[i];
    }
    return index;
}

void ExtPresentation::for_each(std::uint64_t budget, const std::function<void(const ExtClass&)>& fn) const {
    std::uint64_t n = class_count(budget);
    for (std::uint64_t k = 0; k < n; ++k) {
        fn(class_at(k));
    }
}

bool ExtClass::is_zero() const { return is_zero_mod(coords, ext->exps()); }

bool ExtClass::operator==(const ExtClass& o) const {
    check(ext->exps() == o.ext->exps(), "comparing classes of different Ext groups");
    return is_zero_mod(coords - o.coords, ext->exps());
}

ModulePtr ext_module(const ModulePtr& M, const ModulePtr& N, int i) {
    check(i >= 1, "ext_module needs i >= 1");
    auto res = M->resolution(i + 1);
    auto betti = [&](int j) { return j < static_cast<int>(res->betti.size()) ? res->betti[j] : 0; };
    const int p = M->p();
    ModulePtr Ni = power_raw(N, betti(i));
    ModulePtr Nprev = power_raw(N, betti(i - 1));
    ModulePtr Nnext = power_raw(N, betti(i + 1));
    if (Ni->size() == 0) {
        return Ni;
    }
    DMatrix in = betti(i - 1) > 0 ? ring_matrix_action(*N, res->images[i - 1], true) : DMatrix(p, Ni->size(), 0);
    DMatrix out = betti(i + 1) > 0 ? ring_matrix_action(*N, res->images[i], true) : DMatrix(p, 0, Ni->size());
    (void)Nprev;
    return homology(Ni, in, out, Nnext->exps());
}

// ---------------------------------------------------------------- middle / classify

SES middle(const ExtClass& c) {
    const ExtPresentation& e = *c.ext;
    const ModulePtr& N = e.N();
    const ModulePtr& M = e.M();
    const RingPtr& R = M->ring();
    const int p = M->p();
    const Resolution& res = e.resolution();
    ModulePtr F0 = free_module(R, res.betti[0]);
    ModulePtr amb = direct_sum_raw({N, F0});
    DMatrix psi = e.cocycle(c);
    const int b1 = res.betti[1];
    const int nN = N->size();
    DMatrix gens(p, amb->size(), b1);
    for (int a = 0; a < b1; ++a) {
        for (int i = 0; i < nN; ++i) {
            gens(i, a) = -psi(a * nN + i, 0);
        }
        for (int i = 0; i < F0->size(); ++i) {
            gens(nN + i, a) = res.images[0](i, a);
        }
    }
    QuotientModule Q = quotient(amb, gens);
    ModMap i{N, Q.module, Q.module->reduce(Q.proj.mat * stack_identity_zero(p, nN, F0->size()))};
    DMatrix toM = DMatrix::hcat(DMatrix(p, M->size(), nN), res.cover);
    ModMap q{Q.module, M, M->reduce(toM * Q.lift)};
    return SES{N, Q.module, M, i, q};
}

ExtClass classify(const ExtPtr& ext, const SES& s) {
    if (!same_module(s.M, ext->M()) || !same_module(s.N, ext->N())) {
        fail(ErrorCode::InvalidArgument, "sequence ends do not match the Ext presentation");
    }
    const Resolution& res = ext->resolution();
    const ModulePtr& X = s.X;
    const int p = X->p();
    const int b0 = res.betti[0], b1 = res.betti[1];
    DMatrix lifts(p, X->size(), b0);
    for (int l = 0; l < b0; ++l) {
        auto x = preimage(s.p, s.M->unit_vector(res.gen_index[l]));
        if (!x) {
            fail(ErrorCode::LiftFailure, "surjection does not hit a generator");
        }
        for (int r = 0; r < X->size(); ++r) {
            lifts(r, l) = (*x)(r, 0);
        }
    }
    DMatrix Phi0 = free_map_matrix(*X, lifts);
    const int nN = s.N->size();
    DMatrix psi(p, b1 * nN, 1);
    for (int a = 0; a < b1; ++a) {
        DMatrix v = X->reduce(Phi0 * res.images[0].col(a));
        auto n = preimage(s.i, v);
        if (!n) {
            fail(ErrorCode::LiftFailure, "relation image is not in the image of the injection");
        }
        for (int r = 0; r < nN; ++r) {
            psi(a * nN + r, 0) = (*n)(r, 0);
        }
    }
    return ext->class_of_cocycle(psi);
}

ExtClass baer_sum(const ExtClass& a, const ExtClass& b) {
    return ExtClass{a.ext, a.ext->module()->reduce(a.coords + b.coords)};
}

ExtClass scalar(const RElem& r, const ExtClass& c) {
    return ExtClass{c.ext, c.ext->module()->reduce(c.ext->module()->elem_action(r) * c.coords)};
}

ExtClass negate(const ExtClass& c) {
    return ExtClass{c.ext, c.ext->module()->reduce(c.coords.scaled(Scalar::constant(c.coords.p(), -1)))};
}

// ---------------------------------------------------------------- pushout / pullback

PushoutResult pushout_seq(const SES& s, const ModMap& f) {
    check(same_module(f.src, s.N), "pushout map must start at N");
    const ModulePtr& N2 = f.tgt;
    const int p = N2->p();
    ModulePtr amb = direct_sum_raw({N2, s.X});
    DMatrix gens = DMatrix::vcat(f.mat, s.i.mat.scaled(Scalar::constant(p, -1)));
    QuotientModule Q = quotient(amb, gens);
    const int n2 = N2->size(), nx = s.X->size();
    ModMap i2{N2, Q.module, Q.module->reduce(Q.proj.mat * stack_identity_zero(p, n2, nx))};
    DMatrix toM = DMatrix::hcat(DMatrix(p, s.M->size(), n2), s.p.mat);
    ModMap p2{Q.module, s.M, s.M->reduce(toM * Q.lift)};
    ModMap w{s.X, Q.module, Q.module->reduce(Q.proj.mat * stack_zero_identity(p, n2, nx))};
    return PushoutResult{SES{N2, Q.module, s.M, i2, p2}, w};
}

PullbackResult pullback_seq(const SES& s, const ModMap& g) {
    check(same_module(g.tgt, s.M), "pullback map must end at M");
    const ModulePtr& M2 = g.src;
    const int p = M2->p();
    ModulePtr amb = direct_sum_raw({s.X, M2});
    ModMap phi{amb, s.M, DMatrix::hcat(s.p.mat, g.mat.scaled(Scalar::constant(p, -1)))};
    SubModule K = kernel(phi);
    const int nx = s.X->size(), m2 = M2->size();
    DMatrix iN = DMatrix::vcat(s.i.mat, DMatrix(p, m2, s.N->size()));
    ModMap i2{s.N, K.module, K.lattice.coords_or_throw(amb->reduce(iN))};
    ModMap p2{K.module, M2, M2->reduce(stack_zero_identity(p, nx, m2).transpose() * K.incl.mat)};
    ModMap w{K.module, s.X, s.X->reduce(stack_identity_zero(p, nx, m2).transpose() * K.incl.mat)};
    return PullbackResult{SES{s.N, K.module, M2, i2, p2}, w};
}

SES ses_sum(const SES& a, const SES& b) {
    ModulePtr N = direct_sum_raw({a.N, b.N});
    ModulePtr X = direct_sum_raw({a.X, b.X});
    ModulePtr M = direct_sum_raw({a.M, b.M});
    const int p = N->p();
    ModMap i{N, X, DMatrix::block_diag({a.i.mat, b.i.mat}, p)};
    ModMap q{X, M, DMatrix::block_diag({a.p.mat, b.p.mat}, p)};
    return SES{N, X, M, i, q};
}

ExtClass baer_sum_by_diagram(const ExtClass& a, const ExtClass& b) {
    SES sa = middle(a), sb = middle(b);
    SES sum = ses_sum(sa, sb);
    const ModulePtr& N = a.ext->N();
    const ModulePtr& M = a.ext->M();
    const int p = N->p();
    DMatrix In = DMatrix::identity(p, N->size());
    ModMap codiag{sum.N, N, DMatrix::hcat(In, In)};
    SES po = pushout_seq(sum, codiag).seq;
    DMatrix Im = DMatrix::identity(p, M->size());
    ModMap diag{M, sum.M, DMatrix::vcat(Im, Im)};
    SES pb = pullback_seq(po, diag).seq;
    return classify(a.ext, pb);
}

ExtClass scalar_by_pushout(const RElem& r, const ExtClass& c) {
    SES s = middle(c);
    ModMap f = ModMap::identity(c.ext->N()).scaled(r);
    return classify(c.ext, pushout_seq(s, f).seq);
}

ExtClass scalar_by_pullback(const RElem& r, const ExtClass& c) {
    SES s = middle(c);
    ModMap g = ModMap::identity(c.ext->M()).scaled(r);
    return classify(c.ext, pullback_seq(s, g).seq);
}

bool has_section(const SES& s) { return is_split_epi(s.p); }

bool is_split(const SES& s) {
    ExtPtr e = ExtPresentation::build(s.M, s.N);
    bool by_class = classify(e, s).is_zero();
    bool by_section = has_section(s);
    check(by_class == by_section, "split criteria disagree");
    return by_class;
}

// ---------------------------------------------------------------- functoriality

ExtClass ext_map_covariant(const ExtPtr& target, const ModMap& f, const ExtClass& c) {
    const ExtPresentation& src = *c.ext;
    check(same_module(f.src, src.N()) && same_module(f.tgt, target->N()), "covariant map mismatch");
    check(src.resolution().images[0] == target->resolution().images[0], "resolutions differ");
    const int b1 = src.beta(1);
    DMatrix psi = src.cocycle(c);
    std::vector<DMatrix> blocks(b1, f.mat);
    DMatrix F = b1 ? DMatrix::block_diag(blocks, f.mat.p()) : DMatrix(f.mat.p(), 0, 0);
    return target->class_of_cocycle(b1 ? F * psi : DMatrix(f.mat.p(), 0, 1));
}

ExtClass ext_map_contravariant(const ExtPtr& target, const ModMap& g, const ExtClass& c) {
    const ExtPresentation& src = *c.ext;
    check(same_module(g.tgt, src.M()) && same_module(g.src, target->M()), "contravariant map mismatch");
    const Resolution& res = src.resolution();
    const Resolution& res2 = target->resolution();
    const RingPtr& R = g.src->ring();
    const int p = R->p();
    ModulePtr F0 = free_module(R, res.betti[0]);
    const ModulePtr& M = src.M();
    // chain lift g0: F'_0 -> F_0
    DMatrix coverA = DMatrix::hcat(res.cover, relation_matrix(M->exps(), p));
    DMatrix g0img(p, F0->size(), res2.betti[0]);
    for (int l = 0; l < res2.betti[0]; ++l) {
        DMatrix y = g.mat.col(res2.gen_index[l]);
        auto z = solve(coverA, y);
        check(z.has_value(), "cover is not surjective");
        for (int r = 0; r < F0->size(); ++r) {
            g0img(r, l) = (*z)(r, 0);
        }
    }
    DMatrix G0 = free_map_matrix(*F0, g0img);
    // g1: F'_1 -> F_1 with d1 g1 = g0 d1'
    DMatrix C1 = DMatrix::hcat(free_map_matrix(*F0, res.images[0]), relation_matrix(F0->exps(), p));
    const int nF1 = res.betti[1] * R->basis_size();
    DMatrix g1img(p, nF1, res2.betti[1]);
    for (int a = 0; a < res2.betti[1]; ++a) {
        DMatrix v = F0->reduce(G0 * res2.images[0].col(a));
        auto y = solve(C1, v);
        check(y.has_value(), "chain lift failed");
        for (int r = 0; r < nF1; ++r) {
            g1img(r, a) = (*y)(r, 0);
        }
    }
    DMatrix psi = src.cocycle(c);
    const ModulePtr& N = src.N();
    if (res2.betti[1] == 0) {
        return target->zero();
    }
    DMatrix T = ring_matrix_action(*N, g1img, true);
    return target->class_of_cocycle(res.betti[1] ? T * psi : DMatrix(p, res2.betti[1] * N->size(), 1));
}

ExtClass connecting(const ExtPtr& target, const SES& s, const ModMap& h) {
    return classify(target, pullback_seq(s, h).seq);
}

namespace {

struct LinMap {
    DMatrix mat;
    Exps src, tgt;
};

void check_node(const LinMap& f, const LinMap& g, const std::string& where, LongExactReport& rep) {
    if (!exact_at(f.mat, g.mat, g.src, g.tgt)) {
        rep.exact = false;
        rep.failures.push_back(where + ": image and kernel differ");
    }
}

LinMap hom_post(const HomSpace& from, const HomSpace& to, const ModMap& f) {
    return LinMap{hom_post_matrix(from, to, f), from.H->exps(), to.H->exps()};
}

LinMap ext_post(const ExtPtr& from, const ExtPtr& to, const ModMap& f) {
    const int p = f.mat.p();
    DMatrix m(p, to->module()->size(), from->module()->size());
    for (int j = 0; j < from->module()->size(); ++j) {
        ExtClass c = from->from_coords(from->module()->unit_vector(j));
        m.set_block(0, j, ext_map_covariant(to, f, c).coords);
    }
    return LinMap{m, from->exps(), to->exps()};
}

} // namespace

LongExactReport check_long_exact(const SES& s, const ModulePtr& A) {
    LongExactReport rep;
    HomSpace hN = hom(A, s.N), hX = hom(A, s.X), hM = hom(A, s.M);
    ExtPtr eN = ExtPresentation::build(A, s.N);
    ExtPtr eX = ExtPresentation::build(A, s.X);
    ExtPtr eM = ExtPresentation::build(A, s.M);
    const int p = A->p();
    LinMap hi = hom_post(hN, hX, s.i);
    LinMap hp = hom_post(hX, hM, s.p);
    DMatrix dm(p, eN->module()->size(), hM.H->size());
    auto basis = hM.basis();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        dm.set_block(0, static_cast<int>(j), connecting(eN, s, basis[j]).coords);
    }
    LinMap delta{dm, hM.H->exps(), eN->exps()};
    LinMap ei = ext_post(eN, eX, s.i);
    LinMap ep = ext_post(eX, eM, s.p);
    LinMap zero_in{DMatrix(p, hN.H->size(), 0), {}, hN.H->exps()};
    check_node(zero_in, hi, "Hom(A,N)", rep);
    check_node(hi, hp, "Hom(A,X)", rep);
    check_node(hp, delta, "Hom(A,M)", rep);
    check_node(delta, ei, "Ext(A,N)", rep);
    check_node(ei, ep, "Ext(A,X)", rep);
    return rep;
}

} // namespace subext
