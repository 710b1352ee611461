#pragma once

// Finitely generated D-modules in normal form D^r + sum D/s^e_i and the
// subquotient toolkit everything else is built from.  A module is described
// by its exponent list; kFreeExp marks a free summand.  Elements are column
// vectors reduced coordinatewise modulo s^e_i.

#include <limits>
#include <optional>
#include <vector>

#include "subext/dcoeff.hpp"

namespace subext {

constexpr int kFreeExp = std::numeric_limits<int>::max();

using Exps = std::vector<int>;

inline bool is_free_exp(int e) { return e == kFreeExp; }

int free_rank(const Exps& e);
// Sum of torsion exponents; throws InfiniteLength when a free summand exists.
int length_of(const Exps& e);
int torsion_length(const Exps& e);

// Columns s^e_i * epsilon_i for every torsion coordinate.
DMatrix relation_matrix(const Exps& e, int p);
// Coordinatewise reduction modulo s^e_i of every column.
DMatrix reduce_mod(const DMatrix& x, const Exps& e);
bool is_zero_mod(const DMatrix& x, const Exps& e);

// Submodule of an ambient normal-form module generated by columns.
struct DSub {
    Exps exps;      // normal form of the submodule
    DMatrix incl;   // ambient coordinates of its generators (reduced)
    // Coordinates of ambient elements lying in the submodule.
    std::optional<DMatrix> coords(const DMatrix& y) const;
    DMatrix coords_or_throw(const DMatrix& y) const;

    // internal solve data
    int p = 2;
    Exps ambient;
    SmithForm outer;       // Smith form of [G | P]
    DMatrix U2;            // left transform of the inner relation matrix
    std::vector<int> kept; // kept inner indices
};

DSub d_submodule(const Exps& ambient, const DMatrix& gens);

struct DQuot {
    Exps exps;
    DMatrix proj;  // ambient -> quotient coordinates
    DMatrix lift;  // quotient generators as ambient elements
    DMatrix project(const DMatrix& y) const;
};

DQuot d_quotient(const Exps& ambient, const DMatrix& gens);

// Generators (in source coordinates) of ker(F: S -> T).
DMatrix d_kernel_gens(const DMatrix& F, const Exps& src, const Exps& tgt);

// Number of F_p-digits per coordinate (the exponent) and the enumeration size.
std::vector<Coef> digits_of(const DMatrix& coords, const Exps& e);
DMatrix coords_of(const std::vector<Coef>& digits, const Exps& e, int p);

} // namespace subext
