#pragma once

// Yoneda Ext^1 from minimal resolutions: cocycles in Hom(F_1, N), classes as
// coordinates in the normal form of Ext^1, middle objects, classification of
// short exact sequences, Baer sum, scalar action, pushouts and pullbacks.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subext/modules.hpp"

namespace subext {

// 0 -> N -i-> X -p-> M -> 0
struct SES {
    ModulePtr N, X, M;
    ModMap i, p;
};

// Builds and certifies exactness; throws LiftFailure on a non-exact pair.
SES make_ses(const ModMap& i, const ModMap& p);
bool is_exact(const SES& s);
SES split_ses(const ModulePtr& N, const ModulePtr& M);

class ExtPresentation;
using ExtPtr = std::shared_ptr<const ExtPresentation>;

struct ExtClass {
    ExtPtr ext;
    DMatrix coords;

    bool is_zero() const;
    bool operator==(const ExtClass& o) const;
    bool operator!=(const ExtClass& o) const { return !(*this == o); }
};

class ExtPresentation : public std::enable_shared_from_this<ExtPresentation> {
public:
    static ExtPtr build(const ModulePtr& M, const ModulePtr& N);

    const ModulePtr& M() const { return M_; }
    const ModulePtr& N() const { return N_; }
    const ModulePtr& module() const { return E_; }
    const Exps& exps() const { return E_->exps(); }
    int length() const { return length_of(E_->exps()); }
    const Resolution& resolution() const { return *res_; }
    int beta(int j) const { return res_->betti[j]; }

    // Cocycle in Hom(F_1, N) = N^{beta1} of a class, and back.
    DMatrix cocycle(const ExtClass& c) const;
    ExtClass class_of_cocycle(const DMatrix& z) const;
    bool is_cocycle(const DMatrix& z) const;
    bool is_coboundary(const DMatrix& z) const;

    ExtClass zero() const;
    ExtClass from_coords(const DMatrix& coords) const;
    // Enumeration in coordinate-lexicographic order (first coordinate most significant).
    std::uint64_t class_count(std::uint64_t budget = kDefaultBudget) const;
    ExtClass class_at(std::uint64_t index) const;
    std::uint64_t index_of(const ExtClass& c) const;
    void for_each(std::uint64_t budget, const std::function<void(const ExtClass&)>& fn) const;

    // Block data of the cochain complex.
    const DMatrix& psi1() const { return psi1_; }
    const DMatrix& psi2() const { return psi2_; }

private:
    ExtPresentation() = default;

    ModulePtr M_, N_;
    std::shared_ptr<const Resolution> res_;
    ModulePtr N1_;
    DMatrix psi1_, psi2_;
    SubModule Z_;
    ModulePtr E_;
    DMatrix proj_, lift_;
};

// Ext^i(M, N) as an R-module, i >= 1.
ModulePtr ext_module(const ModulePtr& M, const ModulePtr& N, int i);

SES middle(const ExtClass& c);
ExtClass classify(const ExtPtr& ext, const SES& s);
ExtClass baer_sum(const ExtClass& a, const ExtClass& b);
ExtClass scalar(const RElem& r, const ExtClass& c);
ExtClass negate(const ExtClass& c);

struct PushoutResult {
    SES seq;
    ModMap witness; // X -> X'
};
struct PullbackResult {
    SES seq;
    ModMap witness; // X' -> X
};
PushoutResult pushout_seq(const SES& s, const ModMap& f);
PullbackResult pullback_seq(const SES& s, const ModMap& g);
// Direct sum of two sequences (raw coordinate order).
SES ses_sum(const SES& a, const SES& b);
// Baer sum through the diagonal/codiagonal construction.
ExtClass baer_sum_by_diagram(const ExtClass& a, const ExtClass& b);
ExtClass scalar_by_pushout(const RElem& r, const ExtClass& c);
ExtClass scalar_by_pullback(const RElem& r, const ExtClass& c);

bool has_section(const SES& s);
bool is_split(const SES& s);

// Induced maps Ext^1(M, N) -> Ext^1(M, N') along f: N -> N', and
// Ext^1(M, N) -> Ext^1(M', N) along g: M' -> M.
ExtClass ext_map_covariant(const ExtPtr& target, const ModMap& f, const ExtClass& c);
ExtClass ext_map_contravariant(const ExtPtr& target, const ModMap& g, const ExtClass& c);
// Connecting map Hom(A, M) -> Ext^1(A, N) of the sequence s.
ExtClass connecting(const ExtPtr& target, const SES& s, const ModMap& h);

// Exactness of Hom(A,N) -> Hom(A,X) -> Hom(A,M) -> Ext^1(A,N) -> Ext^1(A,X) -> Ext^1(A,M).
struct LongExactReport {
    bool exact = true;
    std::vector<std::string> failures;
};
LongExactReport check_long_exact(const SES& s, const ModulePtr& A);

} // namespace subext
