#pragma once

// Subsets of Ext^1 cut out by additivity of numerical functions on middle
// objects, the Ulrich subfunctor, Hom-exactness subfunctors and an empirical
// checker for the exact-structure axioms.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subext/ext.hpp"

namespace subext {

enum class NumFnTag { Mu, Nu, LenHomFrom, LenHomTo, LenTensor, Et };

struct NumFn {
    NumFnTag tag = NumFnTag::Mu;
    std::optional<FracIdeal> ideal; // Nu, Et
    ModulePtr module;               // LenHom*, LenTensor (finite length)

    static NumFn mu();
    static NumFn nu(const FracIdeal& I);
    static NumFn len_hom_from(const ModulePtr& C);
    static NumFn len_hom_to(const ModulePtr& C);
    static NumFn len_tensor(const ModulePtr& C);
    static NumFn et(const FracIdeal& I);
    std::string name() const;
};

int eval(const NumFn& fn, const ModulePtr& M);
// Values of lambda(Tor_1(M, R/I^{n+1})) until three consecutive agree.
std::vector<int> et_window(const FracIdeal& I, const ModulePtr& M);
bool is_additive(const NumFn& fn, const SES& s);
// eval(X) <= eval(N) + eval(M).
bool is_subadditive(const NumFn& fn, const SES& s);

// nu_I of every middle object of an Ext presentation, evaluated from the
// unreduced presentation of the middle object (mu is the case I = m).
class MiddleNuEvaluator {
public:
    MiddleNuEvaluator(ExtPtr ext, const FracIdeal& I);
    int value(const ExtClass& c) const;
    int value_at(std::uint64_t index) const;
    int value_digits(const std::vector<Coef>& digits) const;

private:
    ExtPtr ext_;
    int p_ = 2;
    int dimV_ = 0;
    std::vector<std::vector<Coef>> const_cols_;
    // lin_[pos][col]: contribution of the pos-th F_p digit of the class
    std::vector<std::vector<std::vector<Coef>>> lin_;
};

// The F_p digits of class coordinates and back.
std::vector<Coef> class_digits(const ExtClass& c);

struct ClosureCertificate {
    bool closed = true;
    int span_dim = 0;
    std::vector<std::string> counterexamples;
};

struct SubsetResult {
    ExtPtr ext;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> indices; // sorted class indices in the subset
    Exps exps;                          // D-invariants of the generated submodule
    ClosureCertificate certificate;

    bool contains(std::uint64_t index) const;
    std::uint64_t size() const { return indices.size(); }
};

// Closure of an explicit class set under Baer sum and the ring action.
ClosureCertificate certify_submodule(const ExtPtr& ext, const std::vector<std::uint64_t>& sorted_indices, Exps* exps);
// The classes of the R-submodule of Ext^1 generated by coordinate columns.
std::vector<std::uint64_t> submodule_classes(const ExtPtr& ext, const DMatrix& gens, std::uint64_t budget = kDefaultBudget);
// J * Ext^1 for an ideal J.
std::vector<std::uint64_t> ideal_times_classes(const ExtPtr& ext, const FracIdeal& J, std::uint64_t budget = kDefaultBudget);

SubsetResult ext1_sub(const ModulePtr& M, const ModulePtr& N, const std::vector<NumFn>& fns,
                      std::uint64_t budget = kDefaultBudget);
SubsetResult ext1_sub(const ExtPtr& ext, const std::vector<NumFn>& fns, std::uint64_t budget = kDefaultBudget);

struct UlResult {
    SubsetResult ul;      // classes with I-Ulrich middle
    SubsetResult nu;      // ext1_sub with NU(I)
    bool agree = false;
};
// Throws NotUlrich when M or N is not in Ul^s_I.
UlResult ext1_ul(const ModulePtr& M, const ModulePtr& N, const FracIdeal& I, int s,
                 std::uint64_t budget = kDefaultBudget);

enum class HomSide { From, To };
struct HalfExactCheck {
    bool exact = false;    // Hom(C, s) or Hom(s, C) short exact
    bool additive = false; // lambda of the Hom'd terms additive
    bool agree() const { return exact == additive; }
};
HalfExactCheck hom_exactness_subfunctor(const ModulePtr& C, HomSide side, const SES& s);

// Admissibility predicate of a candidate exact structure.
struct Admissibility {
    std::string name;
    std::function<bool(const ModulePtr&)> in_domain;
    std::function<bool(const SES&)> admissible;
};
Admissibility admissibility_of(const NumFn& fn);
Admissibility admissibility_ul(const FracIdeal& I, int s);
// Deliberately broken predicate: the middle object has even length.
Admissibility admissibility_even_length();

struct SampleSpec {
    int checks = 200;         // minimum number of closure checks
    int max_modules = 8;      // sampled objects per ring
    int max_classes = 243;    // skip Ext groups larger than this
};

struct AxiomViolation {
    std::string axiom;
    std::string witness;
};
struct AxiomReport {
    std::string predicate;
    int checks = 0;
    std::vector<AxiomViolation> violations;
};
AxiomReport check_exact_axioms(const Admissibility& pred, const std::vector<ModulePtr>& sample,
                               const SampleSpec& spec, std::uint64_t seed);

} // namespace subext
