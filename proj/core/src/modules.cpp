#include "subext/modules.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "subext/error.hpp"

namespace subext {

namespace {

Coef const_term(const Scalar& s) {
    if (s.is_zero() || s.valuation() > 0) {
        return 0;
    }
    return s.num()[0];
}

DMatrix hcat_all(const std::vector<DMatrix>& parts, int p, int rows) { return DMatrix::hcat(parts, p, rows); }

Exps concat_exps(const std::vector<ModulePtr>& parts) {
    Exps e;
    for (const auto& m : parts) {
        e.insert(e.end(), m->exps().begin(), m->exps().end());
    }
    return e;
}

// new coordinate k takes old coordinate perm[k]
DMatrix perm_matrix(int p, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    DMatrix P(p, n, n);
    for (int k = 0; k < n; ++k) {
        P(k, perm[k]) = Scalar::constant(p, 1);
    }
    return P;
}

std::vector<int> sorting_perm(const Exps& e) {
    std::vector<int> perm(e.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return e[a] < e[b]; });
    return perm;
}

} // namespace

std::vector<std::vector<Coef>> fp_columns(const DMatrix& m) {
    std::vector<std::vector<Coef>> cols(m.cols(), std::vector<Coef>(m.rows(), 0));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            cols[j][i] = const_term(m(i, j));
        }
    }
    return cols;
}

// ---------------------------------------------------------------- Module

ModulePtr Module::make(RingPtr R, Exps exps, std::vector<DMatrix> actions, bool validate) {
    check(static_cast<int>(actions.size()) == R->num_gens(), "one action per ring generator");
    auto M = std::shared_ptr<Module>(new Module());
    M->ring_ = std::move(R);
    M->exps_ = std::move(exps);
    const int n = M->size();
    const int p = M->ring_->p();
    for (auto& a : actions) {
        check(a.rows() == n && a.cols() == n, "action matrix shape");
        M->act_.push_back(reduce_mod(a, M->exps_));
    }
    const Ring& ring = *M->ring_;
    for (int b = 0; b < ring.basis_size(); ++b) {
        DMatrix A = DMatrix::identity(p, n);
        const auto& f = ring.basis_factorization(b);
        for (int g = 0; g < ring.num_gens(); ++g) {
            for (int k = 0; k < f[g]; ++k) {
                A = reduce_mod(M->act_[g] * A, M->exps_);
            }
        }
        M->basis_act_.push_back(A);
    }
    if (validate && n > 0) {
        DMatrix rel = relation_matrix(M->exps_, p);
        for (int g = 0; g < ring.num_gens(); ++g) {
            if (!is_zero_mod(M->act_[g] * rel, M->exps_)) {
                fail(ErrorCode::InvalidArgument, "action does not preserve the D-relations");
            }
            for (int h = g + 1; h < ring.num_gens(); ++h) {
                if (!is_zero_mod(M->act_[g] * M->act_[h] - M->act_[h] * M->act_[g], M->exps_)) {
                    fail(ErrorCode::InvalidArgument, "ring generator actions do not commute");
                }
            }
            for (int b = 0; b < ring.basis_size(); ++b) {
                DMatrix lhs = M->act_[g] * M->basis_act_[b];
                DMatrix rhs(p, n, n);
                for (int b2 = 0; b2 < ring.basis_size(); ++b2) {
                    const Scalar& c = ring.gen_action(g)(b2, b);
                    if (!c.is_zero()) {
                        rhs = rhs + M->basis_act_[b2].scaled(c);
                    }
                }
                if (!is_zero_mod(lhs - rhs, M->exps_)) {
                    fail(ErrorCode::InvalidArgument, "actions violate the ring relations");
                }
            }
        }
    }
    return M;
}

DMatrix Module::elem_action(const RElem& r) const {
    DMatrix A(p(), size(), size());
    for (int b = 0; b < ring_->basis_size(); ++b) {
        if (!r(b, 0).is_zero()) {
            A = A + basis_act_[b].scaled(r(b, 0));
        }
    }
    return reduce(A);
}

DMatrix Module::unit_vector(int i) const {
    DMatrix e(p(), size(), 1);
    e(i, 0) = Scalar::constant(p(), 1);
    return e;
}

std::string Module::describe() const {
    std::ostringstream os;
    int fr = free_rank(exps_);
    std::vector<std::string> parts;
    if (fr > 0) {
        parts.push_back("D^" + std::to_string(fr));
    }
    for (int e : exps_) {
        if (!is_free_exp(e)) {
            parts.push_back("D/s^" + std::to_string(e));
        }
    }
    if (parts.empty()) {
        return "0";
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        os << (i ? " + " : "") << parts[i];
    }
    return os.str();
}

namespace {

// cover F -> M by the chosen minimal generators (D-basis indices of M)
DMatrix cover_matrix(const Module& M, const std::vector<int>& idx) {
    const int nb = M.ring()->basis_size();
    DMatrix C(M.p(), M.size(), static_cast<int>(idx.size()) * nb);
    for (std::size_t l = 0; l < idx.size(); ++l) {
        for (int b = 0; b < nb; ++b) {
            const DMatrix& A = M.basis_action(b);
            for (int i = 0; i < M.size(); ++i) {
                C(i, static_cast<int>(l) * nb + b) = A(i, idx[l]);
            }
        }
    }
    return C;
}

} // namespace

std::shared_ptr<const Resolution> Module::resolution(int len) const {
    std::lock_guard<std::mutex> lock(res_mutex_);
    if (res_ && (static_cast<int>(res_->images.size()) >= len || res_->terminated)) {
        return res_;
    }
    // extend a private copy, then publish it
    auto r = res_ ? std::make_shared<Resolution>(*res_) : std::make_shared<Resolution>();
    const RingPtr& R = ring_;
    if (!res_) {
        r->gen_index = min_gen_indices(*this);
        r->cover = cover_matrix(*this, r->gen_index);
        r->betti.push_back(static_cast<int>(r->gen_index.size()));
    }
    while (static_cast<int>(r->images.size()) < len && !r->terminated) {
        const int j = static_cast<int>(r->images.size());
        ModulePtr Fj = free_module(R, r->betti[j]);
        DMatrix cov;
        Exps tgt;
        if (j == 0) {
            cov = r->cover;
            tgt = exps_;
        } else {
            const Module& Om = *r->syzygies[j - 1];
            cov = cover_matrix(Om, min_gen_indices(Om));
            tgt = Om.exps();
        }
        DMatrix K = d_kernel_gens(cov, Fj->exps(), tgt);
        SubModule S = submodule(Fj, K);
        std::vector<int> idx = min_gen_indices(*S.module);
        DMatrix img(p(), Fj->size(), static_cast<int>(idx.size()));
        for (std::size_t l = 0; l < idx.size(); ++l) {
            for (int i = 0; i < Fj->size(); ++i) {
                img(i, static_cast<int>(l)) = S.incl.mat(i, idx[l]);
            }
        }
        r->images.push_back(img);
        r->syzygies.push_back(S.module);
        r->syz_incl.push_back(S.incl.mat);
        r->betti.push_back(static_cast<int>(idx.size()));
        if (idx.empty()) {
            r->terminated = true;
        }
    }
    res_ = r;
    return res_;
}

// ---------------------------------------------------------------- ModMap

ModMap ModMap::make(ModulePtr src, ModulePtr tgt, DMatrix mat, bool validate) {
    check(mat.rows() == tgt->size() && mat.cols() == src->size(), "map shape mismatch");
    ModMap f{std::move(src), std::move(tgt), DMatrix()};
    f.mat = f.tgt->reduce(mat);
    if (validate) {
        DMatrix rel = relation_matrix(f.src->exps(), f.src->p());
        if (!is_zero_mod(f.mat * rel, f.tgt->exps())) {
            fail(ErrorCode::InvalidArgument, "map does not respect the source relations");
        }
        if (!f.is_r_linear()) {
            fail(ErrorCode::InvalidArgument, "map is not R-linear");
        }
    }
    return f;
}

bool ModMap::is_r_linear() const {
    for (int g = 0; g < src->ring()->num_gens(); ++g) {
        if (!is_zero_mod(tgt->action(g) * mat - mat * src->action(g), tgt->exps())) {
            return false;
        }
    }
    return true;
}

ModMap ModMap::identity(const ModulePtr& M) { return ModMap{M, M, DMatrix::identity(M->p(), M->size())}; }

ModMap ModMap::zero(const ModulePtr& M, const ModulePtr& N) { return ModMap{M, N, DMatrix(M->p(), N->size(), M->size())}; }

ModMap ModMap::then(const ModMap& g) const {
    check(g.src.get() == tgt.get() || g.src->exps() == tgt->exps(), "composition mismatch");
    return ModMap{src, g.tgt, g.tgt->reduce(g.mat * mat)};
}

ModMap ModMap::scaled(const RElem& r) const { return ModMap{src, tgt, tgt->reduce(tgt->elem_action(r) * mat)}; }

ModMap operator+(const ModMap& a, const ModMap& b) { return ModMap{a.src, a.tgt, a.tgt->reduce(a.mat + b.mat)}; }

// ---------------------------------------------------------------- constructors

ModulePtr free_module(const RingPtr& R, int rank) {
    Exps e;
    std::vector<DMatrix> act;
    for (int r = 0; r < rank; ++r) {
        e.insert(e.end(), R->basis_exps().begin(), R->basis_exps().end());
    }
    for (int g = 0; g < R->num_gens(); ++g) {
        std::vector<DMatrix> blocks(rank, R->gen_action(g));
        act.push_back(DMatrix::block_diag(blocks, R->p()));
        if (rank == 0) {
            act.back() = DMatrix(R->p(), 0, 0);
        }
    }
    return Module::make(R, e, act, false);
}

ModulePtr direct_sum_raw(const std::vector<ModulePtr>& parts) {
    check(!parts.empty(), "empty direct sum");
    const RingPtr& R = parts[0]->ring();
    std::vector<DMatrix> act;
    const int n = static_cast<int>(concat_exps(parts).size());
    for (int g = 0; g < R->num_gens(); ++g) {
        std::vector<DMatrix> blocks;
        for (const auto& m : parts) {
            blocks.push_back(m->action(g));
        }
        act.push_back(n == 0 ? DMatrix(R->p(), 0, 0) : DMatrix::block_diag(blocks, R->p()));
    }
    return Module::make(R, concat_exps(parts), act, false);
}

ModulePtr power_raw(const ModulePtr& M, int n) {
    if (n == 0) {
        return Module::make(M->ring(), {}, std::vector<DMatrix>(M->ring()->num_gens(), DMatrix(M->p(), 0, 0)), false);
    }
    return direct_sum_raw(std::vector<ModulePtr>(n, M));
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts) {
    ModulePtr raw = direct_sum_raw(parts);
    auto perm = sorting_perm(raw->exps());
    DMatrix P = perm_matrix(raw->p(), perm);
    Exps e;
    for (int k : perm) {
        e.push_back(raw->exps()[k]);
    }
    std::vector<DMatrix> act;
    for (int g = 0; g < raw->ring()->num_gens(); ++g) {
        act.push_back(P * raw->action(g) * P.transpose());
    }
    return Module::make(raw->ring(), e, act, false);
}

ModMap sum_injection(const std::vector<ModulePtr>& parts, const ModulePtr& sum, int k) {
    auto perm = sorting_perm(concat_exps(parts));
    DMatrix P = perm_matrix(sum->p(), perm);
    int off = 0;
    for (int i = 0; i < k; ++i) {
        off += parts[i]->size();
    }
    DMatrix raw(sum->p(), sum->size(), parts[k]->size());
    for (int i = 0; i < parts[k]->size(); ++i) {
        raw(off + i, i) = Scalar::constant(sum->p(), 1);
    }
    return ModMap{parts[k], sum, P * raw};
}

ModMap sum_projection(const std::vector<ModulePtr>& parts, const ModulePtr& sum, int k) {
    ModMap inj = sum_injection(parts, sum, k);
    return ModMap{sum, parts[k], inj.mat.transpose()};
}

DMatrix free_map_matrix(const Module& N, const DMatrix& images) {
    const int nb = N.ring()->basis_size();
    DMatrix W(N.p(), N.size(), images.cols() * nb);
    for (int l = 0; l < images.cols(); ++l) {
        DMatrix col = images.col(l);
        for (int b = 0; b < nb; ++b) {
            DMatrix v = N.basis_action(b) * col;
            for (int i = 0; i < N.size(); ++i) {
                W(i, l * nb + b) = v(i, 0);
            }
        }
    }
    return N.reduce(W);
}

DMatrix ring_matrix_action(const Module& Q, const DMatrix& ring_entries, bool transposed) {
    const int nb = Q.ring()->basis_size();
    const int nrows = ring_entries.rows() / nb;
    const int ncols = ring_entries.cols();
    const int q = Q.size();
    DMatrix out = transposed ? DMatrix(Q.p(), ncols * q, nrows * q) : DMatrix(Q.p(), nrows * q, ncols * q);
    for (int l = 0; l < nrows; ++l) {
        for (int a = 0; a < ncols; ++a) {
            RElem r(Q.p(), nb, 1);
            bool nz = false;
            for (int b = 0; b < nb; ++b) {
                r(b, 0) = ring_entries(l * nb + b, a);
                nz = nz || !r(b, 0).is_zero();
            }
            if (!nz) {
                continue;
            }
            DMatrix A = Q.elem_action(r);
            if (transposed) {
                out.set_block(a * q, l * q, A);
            } else {
                out.set_block(l * q, a * q, A);
            }
        }
    }
    return out;
}

DMatrix r_span(const Module& M, const DMatrix& gens) {
    std::vector<DMatrix> parts;
    for (int b = 0; b < M.ring()->basis_size(); ++b) {
        parts.push_back(M.basis_action(b) * gens);
    }
    return M.reduce(hcat_all(parts, M.p(), M.size()));
}

ModulePtr from_fractional_ideal(const FracIdeal& I) {
    // s^{-k} J is isomorphic to J
    const RingPtr& R = I.ring;
    ModulePtr Rm = free_module(R, 1);
    return submodule(Rm, I.lattice_gens()).module;
}

ModulePtr from_quotient(const FracIdeal& I) {
    FracIdeal J = ideal_normalize(I);
    if (J.shift != 0) {
        fail(ErrorCode::InvalidArgument, "R/I needs an ideal of R");
    }
    ModulePtr Rm = free_module(J.ring, 1);
    return quotient(Rm, J.lattice_gens()).module;
}

ModulePtr residue_field(const RingPtr& R) { return from_quotient(FracIdeal::maximal(R)); }

// ---------------------------------------------------------------- subquotients

SubModule submodule(const ModulePtr& M, const DMatrix& gens) {
    DMatrix span = gens.cols() == 0 ? DMatrix(M->p(), M->size(), 0) : r_span(*M, gens);
    SubModule S;
    S.lattice = d_submodule(M->exps(), span);
    std::vector<DMatrix> act;
    for (int g = 0; g < M->ring()->num_gens(); ++g) {
        act.push_back(S.lattice.coords_or_throw(M->action(g) * S.lattice.incl));
    }
    S.module = Module::make(M->ring(), S.lattice.exps, act, false);
    S.incl = ModMap{S.module, M, S.lattice.incl};
    return S;
}

QuotientModule quotient(const ModulePtr& M, const DMatrix& gens) {
    DMatrix span = gens.cols() == 0 ? DMatrix(M->p(), M->size(), 0) : r_span(*M, gens);
    DQuot Q = d_quotient(M->exps(), span);
    std::vector<DMatrix> act;
    for (int g = 0; g < M->ring()->num_gens(); ++g) {
        act.push_back(Q.proj * M->action(g) * Q.lift);
    }
    QuotientModule out;
    out.module = Module::make(M->ring(), Q.exps, act, false);
    out.proj = ModMap{M, out.module, Q.proj};
    out.lift = Q.lift;
    return out;
}

SubModule kernel(const ModMap& f) {
    DMatrix K = d_kernel_gens(f.mat, f.src->exps(), f.tgt->exps());
    return submodule(f.src, K);
}

SubModule image(const ModMap& f) { return submodule(f.tgt, f.mat); }

QuotientModule cokernel(const ModMap& f) { return quotient(f.tgt, f.mat); }

bool is_injective(const ModMap& f) {
    DMatrix K = d_kernel_gens(f.mat, f.src->exps(), f.tgt->exps());
    return d_submodule(f.src->exps(), K).exps.empty();
}

bool is_surjective(const ModMap& f) {
    const Module& N = *f.tgt;
    FpSpan span(N.p(), N.size());
    for (auto& c : fp_columns(max_times(N))) {
        span.insert(std::move(c));
    }
    for (auto& c : fp_columns(f.mat)) {
        span.insert(std::move(c));
    }
    return span.dim() == N.size();
}

std::optional<DMatrix> preimage(const ModMap& f, const DMatrix& y) {
    DMatrix A = DMatrix::hcat(f.mat, relation_matrix(f.tgt->exps(), f.tgt->p()));
    auto x = solve(A, y);
    if (!x) {
        return std::nullopt;
    }
    return f.src->reduce(x->rows_range(0, f.src->size()));
}

// ---------------------------------------------------------------- invariants

DMatrix max_times(const Module& M) {
    std::vector<DMatrix> parts;
    for (int g = 0; g < M.ring()->num_gens(); ++g) {
        parts.push_back(M.action(g));
    }
    return hcat_all(parts, M.p(), M.size());
}

std::vector<int> min_gen_indices(const Module& M) {
    FpSpan span(M.p(), M.size());
    for (auto& c : fp_columns(max_times(M))) {
        span.insert(std::move(c));
    }
    std::vector<int> idx;
    for (int i = 0; i < M.size(); ++i) {
        std::vector<Coef> e(M.size(), 0);
        e[i] = 1;
        if (span.insert(std::move(e))) {
            idx.push_back(i);
        }
    }
    return idx;
}

int mu(const Module& M) { return static_cast<int>(min_gen_indices(M).size()); }

int length(const Module& M) { return length_of(M.exps()); }

DMatrix ideal_times(const FracIdeal& I, const Module& M) {
    FracIdeal J = ideal_normalize(I);
    if (J.shift != 0) {
        fail(ErrorCode::InvalidArgument, "I*M needs an ideal of R");
    }
    std::vector<DMatrix> parts;
    for (const auto& x : J.gens) {
        parts.push_back(M.elem_action(x));
    }
    return hcat_all(parts, M.p(), M.size());
}

int nu(const FracIdeal& I, const Module& M) {
    DQuot Q = d_quotient(M.exps(), ideal_times(I, M));
    return length_of(Q.exps);
}

// ---------------------------------------------------------------- Hom

HomSpace hom(const ModulePtr& M, const ModulePtr& N) {
    check(M->ring() == N->ring(), "hom over different rings");
    HomSpace hs;
    hs.M = M;
    hs.N = N;
    auto res = M->resolution(1);
    hs.beta0 = res->betti[0];
    ModulePtr N0 = power_raw(N, hs.beta0);
    ModulePtr N1 = power_raw(N, res->betti[1]);
    DMatrix Psi = ring_matrix_action(*N, res->images[0], true);
    DMatrix K = d_kernel_gens(Psi, N0->exps(), N1->exps());
    SubModule S = submodule(N0, K);
    hs.H = S.module;
    hs.lattice = S.lattice;
    if (M->size() > 0) {
        DMatrix A = DMatrix::hcat(res->cover, relation_matrix(M->exps(), M->p()));
        DMatrix I = DMatrix::identity(M->p(), M->size());
        auto Y = solve(A, I);
        check(Y.has_value(), "cover is not surjective");
        hs.Y = Y->rows_range(0, res->cover.cols());
    } else {
        hs.Y = DMatrix(M->p(), 0, 0);
    }
    return hs;
}

ModMap HomSpace::map_of(const DMatrix& coords) const {
    DMatrix n = lattice.incl * coords;
    const int q = N->size();
    DMatrix images(N->p(), q, beta0);
    for (int l = 0; l < beta0; ++l) {
        for (int i = 0; i < q; ++i) {
            images(i, l) = n(l * q + i, 0);
        }
    }
    DMatrix W = free_map_matrix(*N, images);
    return ModMap{M, N, N->reduce(W * Y)};
}

DMatrix HomSpace::coords_of(const ModMap& f) const {
    auto res = M->resolution(0);
    const int q = N->size();
    DMatrix n(N->p(), beta0 * q, 1);
    for (int l = 0; l < beta0; ++l) {
        DMatrix v = f.mat.col(res->gen_index[l]);
        for (int i = 0; i < q; ++i) {
            n(l * q + i, 0) = v(i, 0);
        }
    }
    return lattice.coords_or_throw(n);
}

std::vector<ModMap> HomSpace::basis() const {
    std::vector<ModMap> out;
    for (int i = 0; i < H->size(); ++i) {
        out.push_back(map_of(H->unit_vector(i)));
    }
    return out;
}

DMatrix hom_post_matrix(const HomSpace& from, const HomSpace& to, const ModMap& f) {
    DMatrix m(f.mat.p(), to.H->size(), from.H->size());
    auto basis = from.basis();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        m.set_block(0, static_cast<int>(j), to.coords_of(basis[j].then(f)));
    }
    return m;
}

DMatrix hom_pre_matrix(const HomSpace& from, const HomSpace& to, const ModMap& f) {
    DMatrix m(f.mat.p(), to.H->size(), from.H->size());
    auto basis = from.basis();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        m.set_block(0, static_cast<int>(j), to.coords_of(f.then(basis[j])));
    }
    return m;
}

bool exact_at(const DMatrix& f, const DMatrix& g, const Exps& mid, const Exps& tgt) {
    if (!is_zero_mod(g * f, tgt)) {
        return false;
    }
    DMatrix K = d_kernel_gens(g, mid, tgt);
    DMatrix A = DMatrix::hcat(f, relation_matrix(mid, f.p()));
    for (int j = 0; j < K.cols(); ++j) {
        if (!solve(A, K.col(j))) {
            return false;
        }
    }
    return true;
}

bool is_split_epi(const ModMap& f) {
    if (f.tgt->is_zero()) {
        return true;
    }
    HomSpace hx = hom(f.tgt, f.src);
    HomSpace hm = hom(f.tgt, f.tgt);
    DMatrix P = hom_post_matrix(hx, hm, f);
    DMatrix target = hm.coords_of(ModMap::identity(f.tgt));
    return solve(DMatrix::hcat(P, relation_matrix(hm.H->exps(), f.mat.p())), target).has_value();
}

ModulePtr syzygy(const ModulePtr& M, int j) {
    if (j == 0) {
        return M;
    }
    auto res = M->resolution(j);
    if (static_cast<int>(res->syzygies.size()) < j) {
        return power_raw(M, 0);
    }
    return res->syzygies[j - 1];
}

ModulePtr transpose(const ModulePtr& M) {
    auto res = M->resolution(1);
    const RingPtr& R = M->ring();
    const int b0 = res->betti[0], b1 = res->betti[1];
    const int nb = R->basis_size();
    ModulePtr F1 = free_module(R, b1);
    DMatrix cols(M->p(), b1 * nb, b0);
    for (int l = 0; l < b0; ++l) {
        for (int a = 0; a < b1; ++a) {
            for (int b = 0; b < nb; ++b) {
                cols(a * nb + b, l) = res->images[0](l * nb + b, a);
            }
        }
    }
    return quotient(F1, cols).module;
}

SubModule socle(const ModulePtr& M) {
    std::vector<ModulePtr> copies(M->ring()->num_gens(), M);
    Exps tgt = concat_exps(copies);
    DMatrix F(M->p(), 0, M->size());
    for (int g = 0; g < M->ring()->num_gens(); ++g) {
        F = DMatrix::vcat(F, M->action(g));
    }
    return submodule(M, d_kernel_gens(F, M->exps(), tgt));
}

FracIdeal annihilator(const ModulePtr& M) {
    const RingPtr& R = M->ring();
    const int nb = R->basis_size();
    const int n = M->size();
    if (n == 0) {
        return FracIdeal::unit(R);
    }
    DMatrix F(M->p(), n * n, nb);
    Exps tgt;
    for (int i = 0; i < n; ++i) {
        tgt.insert(tgt.end(), M->exps().begin(), M->exps().end());
        for (int b = 0; b < nb; ++b) {
            for (int r = 0; r < n; ++r) {
                F(i * n + r, b) = M->basis_action(b)(r, i);
            }
        }
    }
    DMatrix K = d_kernel_gens(F, R->basis_exps(), tgt);
    std::vector<RElem> gens;
    for (int j = 0; j < K.cols(); ++j) {
        gens.push_back(K.col(j));
    }
    if (gens.empty()) {
        gens.push_back(R->zero());
    }
    return FracIdeal::of(R, gens);
}

SubModule torsion_part(const ModulePtr& M) {
    std::vector<DMatrix> cols;
    for (int i = 0; i < M->size(); ++i) {
        if (M->ring()->dim() == 0 || !is_free_exp(M->exps()[i])) {
            cols.push_back(M->unit_vector(i));
        }
    }
    return submodule(M, hcat_all(cols, M->p(), M->size()));
}

ModulePtr homology(const ModulePtr& mid, const DMatrix& in, const DMatrix& out, const Exps& out_tgt) {
    DMatrix K = d_kernel_gens(out, mid->exps(), out_tgt);
    SubModule Z = submodule(mid, K);
    DMatrix B = Z.lattice.coords_or_throw(mid->reduce(in));
    return quotient(Z.module, B).module;
}

int loewy_length(const ModulePtr& M) {
    ModulePtr T = torsion_part(M).module;
    DMatrix cur = DMatrix::identity(T->p(), T->size());
    int n = 0;
    while (true) {
        DSub L = d_submodule(T->exps(), cur.cols() ? r_span(*T, cur) : cur);
        if (L.exps.empty()) {
            return n;
        }
        std::vector<DMatrix> parts;
        for (int g = 0; g < T->ring()->num_gens(); ++g) {
            parts.push_back(T->action(g) * L.incl);
        }
        cur = T->reduce(hcat_all(parts, T->p(), T->size()));
        ++n;
        check(n < 10000, "Loewy length runaway");
    }
}

SubModule colon_in_module(const ModulePtr& M, const DMatrix& gens, ColonMode mode) {
    DMatrix Nspan = gens.cols() ? r_span(*M, gens) : DMatrix(M->p(), M->size(), 0);
    DMatrix target = Nspan;
    if (mode == ColonMode::MaxN) {
        std::vector<DMatrix> parts;
        for (int g = 0; g < M->ring()->num_gens(); ++g) {
            parts.push_back(M->action(g) * Nspan);
        }
        target = M->reduce(hcat_all(parts, M->p(), M->size()));
    }
    DQuot Q = d_quotient(M->exps(), target);
    DMatrix F(M->p(), 0, M->size());
    Exps tgt;
    for (int g = 0; g < M->ring()->num_gens(); ++g) {
        F = DMatrix::vcat(F, Q.proj * M->action(g));
        tgt.insert(tgt.end(), Q.exps.begin(), Q.exps.end());
    }
    return submodule(M, d_kernel_gens(F, M->exps(), tgt));
}

bool is_mcm(const Module& M) {
    if (M.ring()->dim() == 0) {
        return true;
    }
    return free_rank(M.exps()) == M.size();
}

int depth01(const Module& M) {
    if (M.ring()->dim() == 0) {
        return 0;
    }
    return free_rank(M.exps()) == M.size() ? 1 : 0;
}

bool is_isomorphic(const ModulePtr& M, const ModulePtr& N, std::uint64_t budget) {
    Exps a = M->exps(), b = N->exps();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
        return false;
    }
    if (M->is_zero()) {
        return true;
    }
    if (mu(*M) != mu(*N)) {
        return false;
    }
    // both killed by m: vector spaces of the same dimension
    if (is_zero_mod(max_times(*M), M->exps()) && is_zero_mod(max_times(*N), N->exps())) {
        return true;
    }
    auto hom_exps = [](const ModulePtr& A, const ModulePtr& B) {
        Exps e = hom(A, B).H->exps();
        std::sort(e.begin(), e.end());
        return e;
    };
    // Hom(X, -) invariants must agree for X = k, M, N.
    ModulePtr kf = residue_field(M->ring());
    if (hom_exps(kf, M) != hom_exps(kf, N) || hom_exps(M, M) != hom_exps(M, N) ||
        hom_exps(N, M) != hom_exps(N, N)) {
        return false;
    }
    // M ~ N iff some map is surjective mod m; only the induced maps
    // M/mM -> N/mN matter, so enumerate a basis of those.
    HomSpace hs = hom(M, N);
    const int p = M->p();
    QuotientModule top = quotient(N, max_times(*N));
    const std::vector<int> mgens = min_gen_indices(*M);
    const int mn = top.module->size(), mm = static_cast<int>(mgens.size());
    FpSpan reduced(p, mn * mm);
    for (int i : min_gen_indices(*hs.H)) {
        DMatrix f = top.proj.mat * hs.map_of(hs.H->unit_vector(i)).mat;
        auto cols = fp_columns(f.select_cols(mgens));
        std::vector<Coef> flat;
        for (auto& c : cols) {
            flat.insert(flat.end(), c.begin(), c.end());
        }
        reduced.insert(std::move(flat));
    }
    const auto& basis = reduced.rows();
    const int k = reduced.dim();
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= static_cast<std::uint64_t>(p);
        if (total > budget) {
            fail(ErrorCode::ResourceBudget, "isomorphism search exceeds the budget");
        }
    }
    std::vector<int> digits(k, 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        int pos = k - 1;
        while (++digits[pos] == p) {
            digits[pos] = 0;
            --pos;
        }
        // scalar multiples have the same rank: leading nonzero digit 1 only
        int lead = 0;
        while (digits[lead] == 0) {
            ++lead;
        }
        if (digits[lead] != 1) {
            continue;
        }
        FpSpan span(p, mn);
        for (int col = 0; col < mm; ++col) {
            std::vector<Coef> v(mn, 0);
            for (int h = 0; h < k; ++h) {
                if (!digits[h]) {
                    continue;
                }
                for (int r = 0; r < mn; ++r) {
                    v[r] = static_cast<Coef>((v[r] + digits[h] * basis[h][col * mn + r]) % p);
                }
            }
            span.insert(std::move(v));
        }
        if (span.dim() == mn) {
            return true;
        }
    }
    return false;
}

ModulePtr canonical_module(const RingPtr& R) {
    if (R->family() == Family::Artin) {
        // Matlis dual Hom_k(R, k): transposed regular actions
        std::vector<DMatrix> act;
        for (int g = 0; g < R->num_gens(); ++g) {
            act.push_back(R->gen_action(g).transpose());
        }
        return Module::make(R, R->basis_exps(), act);
    }
    return from_fractional_ideal(canonical_ideal(R));
}

ModulePtr dualize_omega(const ModulePtr& M) { return hom(M, canonical_module(M->ring())).H; }

ModulePtr tensor(const ModulePtr& M, const ModulePtr& C) {
    auto res = C->resolution(1);
    ModulePtr M0 = power_raw(M, res->betti[0]);
    if (res->betti[1] == 0) {
        return quotient(M0, DMatrix(M->p(), M0->size(), 0)).module;
    }
    DMatrix B = ring_matrix_action(*M, res->images[0], false);
    return quotient(M0, B).module;
}

ModulePtr tor1(const ModulePtr& M, const FracIdeal& J) {
    ModulePtr Q = from_quotient(J);
    auto res = M->resolution(2);
    ModulePtr Q1 = power_raw(Q, res->betti[1]);
    ModulePtr Q0 = power_raw(Q, res->betti[0]);
    DMatrix d1 = ring_matrix_action(*Q, res->images[0], false);
    DMatrix d2 = res->betti[2] > 0 ? ring_matrix_action(*Q, res->images[1], false)
                                   : DMatrix(M->p(), Q1->size(), 0);
    if (Q1->size() == 0) {
        return Q1;
    }
    return homology(Q1, d2, d1, Q0->exps());
}

} // namespace subext
