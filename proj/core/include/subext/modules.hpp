#pragma once

// Finitely generated R-modules stored as a normal-form D-module together with
// one action matrix per ring generator.  Presentations, resolutions and Hom
// are derived on demand.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "subext/dmodule.hpp"
#include "subext/rings.hpp"

namespace subext {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

// Minimal free resolution data.  F_j = R^{betti[j]}; images[j] holds the
// D-coordinates in F_j of the generators of F_{j+1}.
struct Resolution {
    std::vector<int> gen_index; // D-basis indices of M used as minimal generators
    DMatrix cover;              // F_0 -> M
    std::vector<int> betti;
    std::vector<DMatrix> images;
    std::vector<ModulePtr> syzygies; // syzygies[j] = Omega^{j+1} M as a submodule of F_j
    std::vector<DMatrix> syz_incl;   // inclusion of syzygies[j] into F_j
    bool terminated = false;         // a syzygy vanished
};

class Module {
public:
    // Validates commutation, well-definedness and the ring's multiplication table.
    static ModulePtr make(RingPtr R, Exps exps, std::vector<DMatrix> actions, bool validate = true);

    const RingPtr& ring() const { return ring_; }
    int p() const { return ring_->p(); }
    const Exps& exps() const { return exps_; }
    int size() const { return static_cast<int>(exps_.size()); }
    bool is_zero() const { return exps_.empty(); }
    const DMatrix& action(int g) const { return act_[g]; }
    // Action of the b-th D-basis element of R.
    const DMatrix& basis_action(int b) const { return basis_act_[b]; }
    DMatrix elem_action(const RElem& r) const;
    DMatrix reduce(const DMatrix& x) const { return reduce_mod(x, exps_); }
    DMatrix unit_vector(int i) const;

    // Minimal resolution computed at least up to F_{len}; cached.
    std::shared_ptr<const Resolution> resolution(int len) const;

    std::string describe() const;

private:
    Module() = default;

    RingPtr ring_;
    Exps exps_;
    std::vector<DMatrix> act_;
    std::vector<DMatrix> basis_act_;

    mutable std::mutex res_mutex_;
    mutable std::shared_ptr<Resolution> res_;
};

struct ModMap {
    ModulePtr src, tgt;
    DMatrix mat;

    static ModMap make(ModulePtr src, ModulePtr tgt, DMatrix mat, bool validate = true);
    static ModMap identity(const ModulePtr& M);
    static ModMap zero(const ModulePtr& M, const ModulePtr& N);
    ModMap then(const ModMap& g) const; // g o this
    ModMap scaled(const RElem& r) const;
    DMatrix apply(const DMatrix& x) const { return tgt->reduce(mat * x); }
    bool is_zero() const { return is_zero_mod(mat, tgt->exps()); }
    bool is_r_linear() const;
};

ModMap operator+(const ModMap& a, const ModMap& b);

// A submodule given by generators inside an ambient module.
struct SubModule {
    ModulePtr module;
    ModMap incl;
    DSub lattice;
};

// Constructors.
ModulePtr free_module(const RingPtr& R, int rank);
ModulePtr from_fractional_ideal(const FracIdeal& I);
ModulePtr from_quotient(const FracIdeal& I);
ModulePtr residue_field(const RingPtr& R);
ModulePtr direct_sum(const std::vector<ModulePtr>& parts);
ModMap sum_injection(const std::vector<ModulePtr>& parts, const ModulePtr& sum, int k);
ModMap sum_projection(const std::vector<ModulePtr>& parts, const ModulePtr& sum, int k);
// Direct sum with summand coordinates concatenated in order (no re-sorting);
// used for ambient modules of intermediate constructions.
ModulePtr direct_sum_raw(const std::vector<ModulePtr>& parts);
ModulePtr power_raw(const ModulePtr& M, int n);

// Map R^n -> N sending the l-th basis vector to column l of `images`.
DMatrix free_map_matrix(const Module& N, const DMatrix& images);
// The R-matrix with (l, a) entry stored in rows l*|basis|.. of column a of
// `ring_entries`, acting blockwise on Q: Q^{cols} -> Q^{rows}, or the
// transposed arrangement Q^{rows} -> Q^{cols}.
DMatrix ring_matrix_action(const Module& Q, const DMatrix& ring_entries, bool transposed);
// R-span of the columns as D-generators.
DMatrix r_span(const Module& M, const DMatrix& gens);
// Constant terms (reduction mod s) of the columns, as F_p vectors.
std::vector<std::vector<Coef>> fp_columns(const DMatrix& m);

// Subquotients.
SubModule submodule(const ModulePtr& M, const DMatrix& gens);
struct QuotientModule {
    ModulePtr module;
    ModMap proj;
    DMatrix lift;
};
QuotientModule quotient(const ModulePtr& M, const DMatrix& gens);
SubModule kernel(const ModMap& f);
SubModule image(const ModMap& f);
QuotientModule cokernel(const ModMap& f);
bool is_injective(const ModMap& f);
bool is_surjective(const ModMap& f);
// Elements x with f(x) = y, or nullopt.
std::optional<DMatrix> preimage(const ModMap& f, const DMatrix& y);

// Numerical invariants.
int mu(const Module& M);
int length(const Module& M);
int nu(const FracIdeal& I, const Module& M);
// D-generators of I*M.
DMatrix ideal_times(const FracIdeal& I, const Module& M);
// D-generators of m*M.
DMatrix max_times(const Module& M);
std::vector<int> min_gen_indices(const Module& M);

// Homological toolkit.
struct HomSpace {
    ModulePtr M, N;
    ModulePtr H;  // Hom(M, N) as an R-module
    DSub lattice; // H inside N^{beta0}
    DMatrix Y;    // D-basis of M in terms of the cover
    int beta0 = 0;

    ModMap map_of(const DMatrix& coords) const;
    DMatrix coords_of(const ModMap& f) const;
    std::vector<ModMap> basis() const;
};
HomSpace hom(const ModulePtr& M, const ModulePtr& N);
// Hom(A, f): Hom(A, X) -> Hom(A, Y) and Hom(f, A): Hom(Y, A) -> Hom(X, A)
// for f: X -> Y, in Hom coordinates.
DMatrix hom_post_matrix(const HomSpace& from, const HomSpace& to, const ModMap& f);
DMatrix hom_pre_matrix(const HomSpace& from, const HomSpace& to, const ModMap& f);
// Exactness im f = ker g at the middle term (exponents mid); g lands in tgt.
bool exact_at(const DMatrix& f, const DMatrix& g, const Exps& mid, const Exps& tgt);
// Whether f admits a right inverse.
bool is_split_epi(const ModMap& f);
ModulePtr syzygy(const ModulePtr& M, int j);
ModulePtr transpose(const ModulePtr& M);
SubModule socle(const ModulePtr& M);
FracIdeal annihilator(const ModulePtr& M);
SubModule torsion_part(const ModulePtr& M);
// Homology ker(out) / im(in) at `mid`, both maps given as D-matrices.
ModulePtr homology(const ModulePtr& mid, const DMatrix& in, const DMatrix& out, const Exps& out_tgt);
int loewy_length(const ModulePtr& M);

enum class ColonMode { MaxN, N };
// (mN :_M m) or (N :_M m) for N generated by the columns of gens.
SubModule colon_in_module(const ModulePtr& M, const DMatrix& gens, ColonMode mode);

bool is_mcm(const Module& M);
int depth01(const Module& M);

bool is_isomorphic(const ModulePtr& M, const ModulePtr& N, std::uint64_t budget = kDefaultBudget);
ModulePtr dualize_omega(const ModulePtr& M);
ModulePtr canonical_module(const RingPtr& R);

// H_1 of the resolution of M tensored with R/J.
ModulePtr tor1(const ModulePtr& M, const FracIdeal& J);
ModulePtr tensor(const ModulePtr& M, const ModulePtr& C);

} // namespace subext
