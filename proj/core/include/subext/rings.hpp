#pragma once

// Local rings as finite D-algebras: Artinian monomial quotients of
// F_p[x_1..x_n], and numerical semigroup rings F_p[[t^a_1..t^a_k]] (the DVR
// being the semigroup <1>).  Ring elements are coordinate columns over the
// D-basis of R.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subext/dcoeff.hpp"
#include "subext/dmodule.hpp"

namespace subext {

enum class Family { Artin, Dvr, Semigroup };

const char* family_name(Family f);

struct RingSpec {
    Family family = Family::Dvr;
    int p = 2;
    std::vector<std::string> vars;             // Artin
    std::vector<std::vector<int>> ideal;       // Artin: monomial exponent vectors
    std::vector<int> gens;                     // Semigroup
    int base = 0;                              // Semigroup: element c of S with s = t^c (0: smallest generator)
    std::string label;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;
using RElem = DMatrix; // column over the D-basis of R

class Ring {
public:
    static RingPtr build(const RingSpec& spec);

    const RingSpec& spec() const { return spec_; }
    Family family() const { return spec_.family; }
    int p() const { return spec_.p; }
    int dim() const { return family() == Family::Artin ? 0 : 1; }
    const std::string& label() const { return spec_.label; }
    std::string describe() const;

    int basis_size() const { return static_cast<int>(basis_exps_.size()); }
    const Exps& basis_exps() const { return basis_exps_; }
    int num_gens() const { return static_cast<int>(gen_action_.size()); }
    const std::vector<std::string>& gen_names() const { return gen_names_; }
    // Regular representation of the i-th generator.
    const DMatrix& gen_action(int g) const { return gen_action_[g]; }
    // Exponent vector over the generators giving each basis element.
    const std::vector<int>& basis_factorization(int b) const { return basis_factor_[b]; }
    std::string basis_name(int b) const;

    // Semigroup data (dimension one).
    const std::vector<int>& semigroup_gens() const { return sg_gens_; }
    int base_element() const { return c_; }
    const std::vector<int>& apery() const { return apery_; }
    int frobenius() const { return frobenius_; }
    bool in_semigroup(int e) const;
    // Artin data.
    const std::vector<std::vector<int>>& monomials() const { return monos_; }

    RElem zero() const;
    RElem one() const;
    RElem gen(int g) const;
    RElem scalar(const Scalar& c) const;
    // t^e for e in S.
    RElem t_power(int e) const;
    // Monomial in the Artin variables; zero when outside the standard basis.
    RElem monomial(const std::vector<int>& exps) const;
    RElem mul(const RElem& a, const RElem& b) const;
    RElem add(const RElem& a, const RElem& b) const { return reduce_mod(a + b, basis_exps_); }
    RElem neg(const RElem& a) const { return DMatrix(p(), basis_size(), 1) - a; }
    // Matrix of multiplication by a on the regular module.
    DMatrix mult_matrix(const RElem& a) const;
    // Regular action of the b-th basis element.
    const DMatrix& basis_mult(int b) const { return basis_mult_[b]; }
    bool is_zero(const RElem& a) const { return is_zero_mod(a, basis_exps_); }
    // t-adic valuation (dimension one), kInfValuation for zero.
    int valuation(const RElem& a) const;
    std::string format(const RElem& a) const;

    // Generators of the maximal ideal.
    std::vector<RElem> max_ideal_gens() const;

private:
    Ring() = default;
    void build_artin();
    void build_semigroup();
    void finish();

    RingSpec spec_;
    Exps basis_exps_;
    std::vector<std::string> gen_names_;
    std::vector<DMatrix> gen_action_;
    std::vector<std::vector<int>> basis_factor_;
    std::vector<DMatrix> basis_mult_;
    std::vector<int> sg_gens_;
    int c_ = 1;
    std::vector<int> apery_;
    int frobenius_ = -1;
    std::vector<char> member_; // membership of 0..frobenius
    std::vector<std::vector<int>> monos_;
};

// Reduce a list of semigroup generators to the minimal generating set; throws BadSemigroup.
std::vector<int> minimal_semigroup_gens(std::vector<int> gens);

// A fractional ideal s^{-shift} * J with J an ideal of R given by generators.
struct FracIdeal {
    RingPtr ring;
    int shift = 0;
    std::vector<RElem> gens;

    static FracIdeal of(RingPtr R, std::vector<RElem> gens, int shift = 0);
    static FracIdeal unit(RingPtr R);
    static FracIdeal maximal(RingPtr R);
    // Monomial fractional ideal generated by t^e for the given (possibly negative or gap) exponents.
    static FracIdeal monomial(RingPtr R, const std::vector<int>& exps);

    // D-lattice of J inside the regular module (closed under R).
    DSub lattice() const;
    DMatrix lattice_gens() const;
    bool is_ideal() const { return shift == 0; }
    std::string to_string() const;
};

FracIdeal ideal_sum(const FracIdeal& I, const FracIdeal& J);
FracIdeal ideal_product(const FracIdeal& I, const FracIdeal& J);
FracIdeal ideal_power(const FracIdeal& I, int n);
// (J : I) = {x : x I in J}; inside Q(R) for dimension one, inside R for Artin rings.
FracIdeal ideal_colon(const FracIdeal& J, const FracIdeal& I);
// Colon taken inside R: {x in R : x I in J} for ideals I, J.
FracIdeal ideal_colon_in_ring(const FracIdeal& J, const FracIdeal& I);
bool ideal_contains(const FracIdeal& big, const FracIdeal& small);
bool ideal_equals(const FracIdeal& I, const FracIdeal& J);
FracIdeal ideal_scale(const FracIdeal& I, const RElem& x);
// Clear the shift: returns the ideal J with I = s^{-k} J, shift removed where possible.
FracIdeal ideal_normalize(const FracIdeal& I);
int quotient_length(const FracIdeal& I);
bool elem_in_ideal(const FracIdeal& I, const RElem& x, int elem_shift = 0);

bool is_nzd(const RingPtr& R, const RElem& r);
std::vector<RElem> nzd_generators(const FracIdeal& I);

struct Reduction {
    RElem x;
    int n = 0;
};
Reduction principal_reduction(const FracIdeal& I, int n_max = 16);

// Value set {v(x) : x in I} (dimension one), listed up to `upto` (exclusive).
std::vector<int> value_set(const FracIdeal& I, int upto);
bool is_monomial_ideal(const FracIdeal& I);

FracIdeal trace_ideal(const FracIdeal& I);

struct BlowUp {
    RingPtr ring;        // B(I) as a semigroup ring over the same base
    FracIdeal as_module; // B(I) as fractional ideal of R
    int stabilized_at = 1;
};
BlowUp blow_up(const FracIdeal& I, int n_max = 16);

FracIdeal canonical_ideal(const RingPtr& R);

// Parse elements such as "t^3 + 2*t^5", "1", "x*y + y^2"; `shift` receives the
// power of s^{-1} needed when exponents fall outside the semigroup.
RElem parse_element(const RingPtr& R, const std::string& text, int* shift = nullptr);
FracIdeal parse_frac_ideal(const RingPtr& R, const std::vector<std::string>& gens);

} // namespace subext
