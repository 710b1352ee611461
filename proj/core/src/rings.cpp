#include "subext/rings.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "subext/error.hpp"

namespace subext {

const char* family_name(Family f) {
    switch (f) {
    case Family::Artin:
        return "artin";
    case Family::Dvr:
        return "dvr";
    case Family::Semigroup:
        return "semigroup";
    }
    return "?";
}

std::vector<int> minimal_semigroup_gens(std::vector<int> gens) {
    if (gens.empty()) {
        fail(ErrorCode::BadSemigroup, "empty generator list");
    }
    for (int a : gens) {
        if (a <= 0) {
            fail(ErrorCode::BadSemigroup, "semigroup generators must be positive");
        }
    }
    int g = 0;
    for (int a : gens) {
        g = std::gcd(g, a);
    }
    if (g != 1) {
        fail(ErrorCode::BadSemigroup, "gcd of semigroup generators is " + std::to_string(g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const int bound = gens.back() + 1;
    // a generator is redundant when it is a sum of smaller generators
    std::vector<int> minimal;
    std::vector<char> reach(bound, 0);
    reach[0] = 1;
    for (int a : gens) {
        if (!reach[a]) {
            minimal.push_back(a);
            for (int v = a; v < bound; ++v) {
                if (reach[v - a]) {
                    reach[v] = 1;
                }
            }
        }
    }
    return minimal;
}

RingPtr Ring::build(const RingSpec& spec) {
    check_prime(spec.p);
    auto R = std::shared_ptr<Ring>(new Ring());
    R->spec_ = spec;
    if (spec.family == Family::Artin) {
        R->build_artin();
    } else {
        if (spec.family == Family::Dvr) {
            R->spec_.gens = {1};
        }
        R->build_semigroup();
    }
    R->finish();
    return R;
}

void Ring::build_artin() {
    const int nv = static_cast<int>(spec_.vars.size());
    if (nv == 0) {
        fail(ErrorCode::InvalidArgument, "Artinian ring needs at least one variable");
    }
    std::vector<int> bound(nv, -1);
    for (const auto& m : spec_.ideal) {
        if (static_cast<int>(m.size()) != nv) {
            fail(ErrorCode::InvalidArgument, "monomial arity does not match the variables");
        }
        int nonzero = 0, which = -1;
        for (int i = 0; i < nv; ++i) {
            if (m[i] < 0) {
                fail(ErrorCode::InvalidArgument, "negative exponent in monomial ideal");
            }
            if (m[i] > 0) {
                ++nonzero;
                which = i;
            }
        }
        if (nonzero == 0) {
            fail(ErrorCode::InvalidArgument, "unit ideal gives the zero ring");
        }
        if (nonzero == 1 && (bound[which] < 0 || m[which] < bound[which])) {
            bound[which] = m[which];
        }
    }
    for (int i = 0; i < nv; ++i) {
        if (bound[i] < 0) {
            fail(ErrorCode::NotMPrimary, "ideal contains no power of " + spec_.vars[i]);
        }
    }
    auto in_ideal = [&](const std::vector<int>& e) {
        for (const auto& m : spec_.ideal) {
            bool div = true;
            for (int i = 0; i < nv && div; ++i) {
                div = e[i] >= m[i];
            }
            if (div) {
                return true;
            }
        }
        return false;
    };
    std::vector<int> cur(nv, 0);
    while (true) {
        if (!in_ideal(cur)) {
            monos_.push_back(cur);
        }
        int i = nv - 1;
        while (i >= 0 && cur[i] + 1 >= bound[i]) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) {
            break;
        }
        ++cur[i];
    }
    std::sort(monos_.begin(), monos_.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) {
            return da < db;
        }
        return a > b;
    });
    const int n = static_cast<int>(monos_.size());
    basis_exps_.assign(n, 1);
    std::map<std::vector<int>, int> index;
    for (int b = 0; b < n; ++b) {
        index[monos_[b]] = b;
        basis_factor_.push_back(monos_[b]);
    }
    for (int v = 0; v < nv; ++v) {
        gen_names_.push_back(spec_.vars[v]);
        DMatrix A(spec_.p, n, n);
        for (int b = 0; b < n; ++b) {
            auto e = monos_[b];
            ++e[v];
            auto it = index.find(e);
            if (it != index.end()) {
                A(it->second, b) = Scalar::constant(spec_.p, 1);
            }
        }
        gen_action_.push_back(A);
    }
}

void Ring::build_semigroup() {
    sg_gens_ = minimal_semigroup_gens(spec_.gens);
    const int amax = sg_gens_.back();
    const int limit = sg_gens_.front() * amax + amax + 2;
    member_.assign(limit, 0);
    member_[0] = 1;
    for (int v = 1; v < limit; ++v) {
        for (int a : sg_gens_) {
            if (v >= a && member_[v - a]) {
                member_[v] = 1;
                break;
            }
        }
    }
    frobenius_ = -1;
    for (int v = 0; v < limit; ++v) {
        if (!member_[v]) {
            frobenius_ = v;
        }
    }
    member_.resize(frobenius_ + 1);
    c_ = spec_.base > 0 ? spec_.base : sg_gens_.front();
    if (!in_semigroup(c_)) {
        fail(ErrorCode::InvalidArgument, "base element is not in the semigroup");
    }
    std::vector<int> ap(c_, -1);
    for (int v = 0, found = 0; found < c_; ++v) {
        if (in_semigroup(v) && ap[v % c_] < 0) {
            ap[v % c_] = v;
            ++found;
        }
    }
    apery_ = ap;
    std::sort(apery_.begin(), apery_.end());
    const int n = c_;
    basis_exps_.assign(n, kFreeExp);
    std::vector<int> idx_of_res(c_);
    for (int b = 0; b < n; ++b) {
        idx_of_res[apery_[b] % c_] = b;
    }
    const int ng = static_cast<int>(sg_gens_.size());
    for (int a : sg_gens_) {
        gen_names_.push_back("t^" + std::to_string(a));
        DMatrix A(spec_.p, n, n);
        for (int b = 0; b < n; ++b) {
            int h = a + apery_[b];
            int b2 = idx_of_res[h % c_];
            int q = (h - apery_[b2]) / c_;
            A(b2, b) = Scalar::monomial(spec_.p, 1, q);
        }
        gen_action_.push_back(A);
    }
    // factor each Apery element as a sum of generators
    for (int b = 0; b < n; ++b) {
        int w = apery_[b];
        std::vector<int> best(w + 1, -1);
        best[0] = ng;
        for (int v = 1; v <= w; ++v) {
            for (int g = 0; g < ng; ++g) {
                if (v >= sg_gens_[g] && best[v - sg_gens_[g]] >= 0) {
                    best[v] = g;
                    break;
                }
            }
        }
        check(best[w] >= 0, "Apery element without factorization");
        std::vector<int> e(ng, 0);
        for (int v = w; v > 0; v -= sg_gens_[best[v]]) {
            ++e[best[v]];
        }
        basis_factor_.push_back(e);
    }
}

void Ring::finish() {
    const int n = basis_size();
    const int p = spec_.p;
    for (int b = 0; b < n; ++b) {
        DMatrix M = DMatrix::identity(p, n);
        for (int g = 0; g < num_gens(); ++g) {
            for (int k = 0; k < basis_factor_[b][g]; ++k) {
                M = reduce_mod(gen_action_[g] * M, basis_exps_);
            }
        }
        basis_mult_.push_back(M);
    }
    // basis element b applied to 1 must be the b-th unit vector
    for (int b = 0; b < n; ++b) {
        DMatrix e = basis_mult_[b].col(0);
        DMatrix u(p, n, 1);
        u(b, 0) = Scalar::constant(p, 1);
        check(is_zero_mod(e - u, basis_exps_), "basis factorization does not reproduce the basis");
    }
    for (int g = 0; g < num_gens(); ++g) {
        for (int h = g + 1; h < num_gens(); ++h) {
            check(is_zero_mod(gen_action_[g] * gen_action_[h] - gen_action_[h] * gen_action_[g], basis_exps_),
                  "ring generator actions do not commute");
        }
        for (int b = 0; b < n; ++b) {
            DMatrix lhs = gen_action_[g] * basis_mult_[b];
            DMatrix rhs(p, n, n);
            for (int b2 = 0; b2 < n; ++b2) {
                const Scalar& c = gen_action_[g](b2, b);
                if (!c.is_zero()) {
                    rhs = rhs + basis_mult_[b2].scaled(c);
                }
            }
            check(is_zero_mod(lhs - rhs, basis_exps_), "ring actions violate the multiplication table");
        }
    }
    if (spec_.label.empty()) {
        spec_.label = describe();
    }
}

std::string Ring::describe() const {
    std::ostringstream os;
    if (family() == Family::Artin) {
        os << "F_" << p() << "[";
        for (std::size_t i = 0; i < spec_.vars.size(); ++i) {
            os << (i ? "," : "") << spec_.vars[i];
        }
        os << "]/(";
        for (std::size_t k = 0; k < spec_.ideal.size(); ++k) {
            os << (k ? "," : "");
            bool any = false;
            for (std::size_t i = 0; i < spec_.vars.size(); ++i) {
                int e = spec_.ideal[k][i];
                if (e == 0) {
                    continue;
                }
                os << (any ? "*" : "") << spec_.vars[i];
                if (e > 1) {
                    os << "^" << e;
                }
                any = true;
            }
        }
        os << ")";
        return os.str();
    }
    if (sg_gens_.size() == 1) {
        os << "DVR/F_" << p();
    } else {
        os << "<";
        for (std::size_t i = 0; i < sg_gens_.size(); ++i) {
            os << (i ? "," : "") << sg_gens_[i];
        }
        os << ">/F_" << p();
    }
    if (c_ != sg_gens_.front()) {
        os << " (base t^" << c_ << ")";
    }
    return os.str();
}

std::string Ring::basis_name(int b) const {
    if (family() == Family::Artin) {
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < spec_.vars.size(); ++i) {
            int e = monos_[b][i];
            if (e == 0) {
                continue;
            }
            os << (any ? "*" : "") << spec_.vars[i];
            if (e > 1) {
                os << "^" << e;
            }
            any = true;
        }
        return any ? os.str() : "1";
    }
    return apery_[b] == 0 ? "1" : "t^" + std::to_string(apery_[b]);
}

bool Ring::in_semigroup(int e) const {
    if (e < 0) {
        return false;
    }
    if (e > frobenius_) {
        return true;
    }
    return member_[e] != 0;
}

RElem Ring::zero() const { return DMatrix(p(), basis_size(), 1); }

RElem Ring::one() const {
    RElem e = zero();
    e(0, 0) = Scalar::constant(p(), 1);
    return e;
}

RElem Ring::gen(int g) const { return reduce_mod(gen_action_[g] * one(), basis_exps_); }

RElem Ring::scalar(const Scalar& c) const {
    RElem e = zero();
    e(0, 0) = c;
    return reduce_mod(e, basis_exps_);
}

RElem Ring::t_power(int e) const {
    check(family() != Family::Artin, "t_power over an Artinian ring");
    if (!in_semigroup(e)) {
        fail(ErrorCode::InvalidArgument, "t^" + std::to_string(e) + " is not in the ring");
    }
    RElem r = zero();
    for (int b = 0; b < basis_size(); ++b) {
        if ((e - apery_[b]) % c_ == 0 && e >= apery_[b]) {
            r(b, 0) = Scalar::monomial(p(), 1, (e - apery_[b]) / c_);
            return r;
        }
    }
    check(false, "no Apery element matches");
    return r;
}

RElem Ring::monomial(const std::vector<int>& exps) const {
    check(family() == Family::Artin, "monomial over a semigroup ring");
    RElem r = zero();
    for (int b = 0; b < basis_size(); ++b) {
        if (monos_[b] == exps) {
            r(b, 0) = Scalar::constant(p(), 1);
        }
    }
    return r;
}

DMatrix Ring::mult_matrix(const RElem& a) const {
    const int n = basis_size();
    DMatrix M(p(), n, n);
    for (int b = 0; b < n; ++b) {
        const Scalar& c = a(b, 0);
        if (!c.is_zero()) {
            M = M + basis_mult_[b].scaled(c);
        }
    }
    return reduce_mod(M, basis_exps_);
}

RElem Ring::mul(const RElem& a, const RElem& b) const { return reduce_mod(mult_matrix(a) * b, basis_exps_); }

int Ring::valuation(const RElem& a) const {
    check(family() != Family::Artin, "valuation over an Artinian ring");
    int v = kInfValuation;
    for (int b = 0; b < basis_size(); ++b) {
        if (!a(b, 0).is_zero()) {
            v = std::min(v, apery_[b] + c_ * a(b, 0).valuation());
        }
    }
    return v;
}

std::string Ring::format(const RElem& a) const {
    std::vector<std::string> terms;
    for (int b = 0; b < basis_size(); ++b) {
        const Scalar& c = a(b, 0);
        if (c.is_zero()) {
            continue;
        }
        if (family() == Family::Artin) {
            std::string name = basis_name(b);
            std::string coef = c.to_string();
            terms.push_back(name == "1" ? coef : (coef == "1" ? name : coef + "*" + name));
            continue;
        }
        if (c.is_poly()) {
            for (std::size_t k = 0; k < c.num().size(); ++k) {
                if (c.num()[k] == 0) {
                    continue;
                }
                int e = apery_[b] + c_ * static_cast<int>(k);
                std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
                std::string coef = std::to_string(c.num()[k]);
                if (mono.empty()) {
                    terms.push_back(coef);
                } else {
                    terms.push_back(coef == "1" ? mono : coef + "*" + mono);
                }
            }
        } else {
            std::string s = "t^" + std::to_string(c_);
            terms.push_back("(" + c.to_string(s.c_str()) + ")*" + basis_name(b));
        }
    }
    if (terms.empty()) {
        return "0";
    }
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) {
        out += " + " + terms[i];
    }
    return out;
}

std::vector<RElem> Ring::max_ideal_gens() const {
    std::vector<RElem> g;
    for (int i = 0; i < num_gens(); ++i) {
        g.push_back(gen(i));
    }
    return g;
}

// ---------------------------------------------------------------- FracIdeal

namespace {

RElem shift_elem(const RElem& a, int k) {
    RElem r = a;
    for (int i = 0; i < r.rows(); ++i) {
        r(i, 0) = r(i, 0).shift_up(k);
    }
    return r;
}

std::vector<RElem> shifted(const std::vector<RElem>& g, int k) {
    std::vector<RElem> r;
    for (const auto& x : g) {
        r.push_back(shift_elem(x, k));
    }
    return r;
}

DMatrix gens_matrix(const Ring& R, const std::vector<RElem>& gens) {
    // D-span of the R-submodule generated by gens
    std::vector<DMatrix> cols;
    for (const auto& g : gens) {
        for (int b = 0; b < R.basis_size(); ++b) {
            cols.push_back(reduce_mod(R.basis_mult(b) * g, R.basis_exps()));
        }
    }
    return DMatrix::hcat(cols, R.p(), R.basis_size());
}

void same_ring(const FracIdeal& I, const FracIdeal& J) {
    check(I.ring == J.ring, "fractional ideals over different rings");
}

} // namespace

FracIdeal FracIdeal::of(RingPtr R, std::vector<RElem> gens, int shift) {
    FracIdeal I;
    I.ring = std::move(R);
    I.shift = shift;
    for (auto& g : gens) {
        I.gens.push_back(reduce_mod(g, I.ring->basis_exps()));
    }
    return I;
}

FracIdeal FracIdeal::unit(RingPtr R) {
    RElem one = R->one();
    return of(std::move(R), {one});
}

FracIdeal FracIdeal::maximal(RingPtr R) {
    auto g = R->max_ideal_gens();
    return of(std::move(R), g);
}

FracIdeal FracIdeal::monomial(RingPtr R, const std::vector<int>& exps) {
    check(R->family() != Family::Artin, "monomial fractional ideal over an Artinian ring");
    const int c = R->base_element();
    int K = 0;
    for (int e : exps) {
        int k = 0;
        while (!R->in_semigroup(e + c * k)) {
            ++k;
        }
        K = std::max(K, k);
    }
    std::vector<RElem> g;
    for (int e : exps) {
        g.push_back(R->t_power(e + c * K));
    }
    return of(std::move(R), g, K);
}

DMatrix FracIdeal::lattice_gens() const { return gens_matrix(*ring, gens); }

DSub FracIdeal::lattice() const { return d_submodule(ring->basis_exps(), lattice_gens()); }

std::string FracIdeal::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        os << (i ? ", " : "") << ring->format(gens[i]);
    }
    os << ")";
    if (shift > 0) {
        os << " * t^-" << shift * ring->base_element();
    }
    return os.str();
}

FracIdeal ideal_sum(const FracIdeal& I, const FracIdeal& J) {
    same_ring(I, J);
    int k = std::max(I.shift, J.shift);
    auto g = shifted(I.gens, k - I.shift);
    auto h = shifted(J.gens, k - J.shift);
    g.insert(g.end(), h.begin(), h.end());
    return FracIdeal::of(I.ring, g, k);
}

FracIdeal ideal_product(const FracIdeal& I, const FracIdeal& J) {
    same_ring(I, J);
    // products already in the ideal of the kept ones are dropped, so that
    // powers do not multiply their generator count
    std::vector<RElem> g;
    for (const auto& a : I.gens) {
        for (const auto& b : J.gens) {
            RElem ab = I.ring->mul(a, b);
            if (I.ring->is_zero(ab) || (!g.empty() && FracIdeal::of(I.ring, g).lattice().coords(ab).has_value())) {
                continue;
            }
            g.push_back(std::move(ab));
        }
    }
    if (g.empty()) {
        g.push_back(I.ring->zero());
    }
    return FracIdeal::of(I.ring, g, I.shift + J.shift);
}

FracIdeal ideal_power(const FracIdeal& I, int n) {
    FracIdeal r = FracIdeal::unit(I.ring);
    for (int i = 0; i < n; ++i) {
        r = ideal_product(r, I);
    }
    return r;
}

FracIdeal ideal_scale(const FracIdeal& I, const RElem& x) {
    std::vector<RElem> g;
    for (const auto& a : I.gens) {
        g.push_back(I.ring->mul(a, x));
    }
    return FracIdeal::of(I.ring, g, I.shift);
}

bool elem_in_ideal(const FracIdeal& I, const RElem& x, int elem_shift) {
    // x * s^{-elem_shift} in s^{-I.shift} J
    FracIdeal J = I;
    RElem y = x;
    if (elem_shift >= I.shift) {
        J = FracIdeal::of(I.ring, shifted(I.gens, elem_shift - I.shift), elem_shift);
    } else {
        y = shift_elem(x, I.shift - elem_shift);
    }
    return J.lattice().coords(y).has_value();
}

bool ideal_contains(const FracIdeal& big, const FracIdeal& small) {
    same_ring(big, small);
    int k = std::max(big.shift, small.shift);
    FracIdeal B = FracIdeal::of(big.ring, shifted(big.gens, k - big.shift), k);
    DSub L = B.lattice();
    for (const auto& g : small.gens) {
        if (!L.coords(shift_elem(g, k - small.shift))) {
            return false;
        }
    }
    return true;
}

bool ideal_equals(const FracIdeal& I, const FracIdeal& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

FracIdeal ideal_normalize(const FracIdeal& I) {
    FracIdeal r = I;
    if (r.ring->family() == Family::Artin) {
        return r;
    }
    while (r.shift > 0) {
        bool divisible = true;
        for (const auto& g : r.gens) {
            for (int b = 0; b < g.rows() && divisible; ++b) {
                divisible = g(b, 0).is_zero() || g(b, 0).valuation() >= 1;
            }
        }
        if (!divisible) {
            break;
        }
        for (auto& g : r.gens) {
            for (int b = 0; b < g.rows(); ++b) {
                g(b, 0) = g(b, 0).shift_down(std::min(1, g(b, 0).valuation()));
            }
        }
        --r.shift;
    }
    return r;
}

FracIdeal ideal_colon_in_ring(const FracIdeal& J, const FracIdeal& I) {
    same_ring(I, J);
    check(I.shift == 0 && J.shift == 0, "colon in R needs ideals");
    const Ring& R = *I.ring;
    DQuot Q = d_quotient(R.basis_exps(), J.lattice_gens());
    std::vector<DMatrix> blocks;
    Exps tgt;
    for (const auto& g : I.gens) {
        blocks.push_back(Q.proj * R.mult_matrix(g));
        tgt.insert(tgt.end(), Q.exps.begin(), Q.exps.end());
    }
    DMatrix F(R.p(), 0, R.basis_size());
    for (const auto& b : blocks) {
        F = DMatrix::vcat(F, b);
    }
    DMatrix K = d_kernel_gens(F, R.basis_exps(), tgt);
    std::vector<RElem> gens;
    for (int j = 0; j < K.cols(); ++j) {
        gens.push_back(K.col(j));
    }
    if (gens.empty()) {
        gens.push_back(R.zero());
    }
    return FracIdeal::of(I.ring, gens);
}

FracIdeal ideal_colon(const FracIdeal& J, const FracIdeal& I) {
    same_ring(I, J);
    const Ring& R = *I.ring;
    if (R.family() == Family::Artin) {
        if (I.shift != 0 || J.shift != 0) {
            fail(ErrorCode::DimensionMismatch, "fractional colon over an Artinian ring");
        }
        return ideal_colon_in_ring(J, I);
    }
    FracIdeal Ip = FracIdeal::of(I.ring, I.gens);
    DSub L = Ip.lattice();
    int e = 0;
    const int emax = 256;
    while (e <= emax && !L.coords(R.scalar(Scalar::monomial(R.p(), 1, e)))) {
        ++e;
    }
    if (e > emax) {
        fail(ErrorCode::NotMPrimary, "colon denominator ideal contains no power of s");
    }
    FracIdeal sJ = FracIdeal::of(J.ring, shifted(J.gens, e));
    FracIdeal Y = ideal_colon_in_ring(sJ, Ip);
    int shift = J.shift + e - I.shift;
    if (shift < 0) {
        return FracIdeal::of(I.ring, shifted(Y.gens, -shift), 0);
    }
    return ideal_normalize(FracIdeal::of(I.ring, Y.gens, shift));
}

int quotient_length(const FracIdeal& I) {
    FracIdeal J = ideal_normalize(I);
    if (J.shift != 0) {
        fail(ErrorCode::InvalidArgument, "quotient_length needs an ideal of R");
    }
    DQuot Q = d_quotient(J.ring->basis_exps(), J.lattice_gens());
    return length_of(Q.exps);
}

bool is_nzd(const RingPtr& R, const RElem& r) {
    DMatrix A = R->mult_matrix(r);
    DMatrix K = d_kernel_gens(A, R->basis_exps(), R->basis_exps());
    DSub S = d_submodule(R->basis_exps(), K);
    return S.exps.empty();
}

std::vector<RElem> nzd_generators(const FracIdeal& I) {
    const RingPtr& R = I.ring;
    if (R->dim() == 0) {
        for (const auto& g : I.gens) {
            if (is_nzd(R, g)) {
                return I.gens;
            }
        }
        fail(ErrorCode::NoNZD, "every element of the ideal is a zero-divisor");
    }
    std::vector<RElem> out;
    for (const auto& g : I.gens) {
        if (!R->is_zero(g)) {
            out.push_back(g);
        }
    }
    if (out.empty()) {
        fail(ErrorCode::NoNZD, "zero ideal");
    }
    return out;
}

Reduction principal_reduction(const FracIdeal& I, int n_max) {
    const RingPtr& R = I.ring;
    if (R->dim() != 1) {
        fail(ErrorCode::DimensionMismatch, "principal reductions need a dimension-one ring");
    }
    std::vector<int> order(I.gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return R->valuation(I.gens[a]) < R->valuation(I.gens[b]); });
    for (int gi : order) {
        const RElem& x = I.gens[gi];
        if (R->is_zero(x)) {
            continue;
        }
        FracIdeal In = FracIdeal::unit(R);
        for (int n = 0; n <= n_max; ++n) {
            FracIdeal next = ideal_product(In, I);
            FracIdeal xIn = ideal_scale(In, x);
            xIn.shift += I.shift;
            if (ideal_equals(next, xIn)) {
                Reduction red;
                red.x = x;
                red.n = n;
                return red;
            }
            In = next;
        }
    }
    fail(ErrorCode::NoReductionFound, "no principal reduction among the generators within n <= " + std::to_string(n_max));
}

std::vector<int> value_set(const FracIdeal& I, int upto) {
    const RingPtr& R = I.ring;
    check(R->family() != Family::Artin, "value sets need a dimension-one ring");
    const int c = R->base_element();
    FracIdeal J = FracIdeal::of(R, I.gens);
    DSub L = J.lattice();
    if (L.exps.empty()) {
        return {};
    }
    int E = std::max(R->frobenius() + 1, upto + c * I.shift);
    E = ((E + c - 1) / c) * c;
    auto tail_inside = [&](int e0) {
        for (int e = e0; e < e0 + c; ++e) {
            if (!L.coords(R->t_power(e))) {
                return false;
            }
        }
        return true;
    };
    while (!tail_inside(E)) {
        E += c;
        check(E < 100000, "value set bound runaway");
    }
    FpSpan span(R->p(), E);
    for (int j = 0; j < L.incl.cols(); ++j) {
        for (int q = 0; q * c < E; ++q) {
            std::vector<Coef> v(E, 0);
            bool any = false;
            for (int b = 0; b < R->basis_size(); ++b) {
                const Scalar& s = L.incl(b, j);
                if (s.is_zero()) {
                    continue;
                }
                int w = R->apery()[b];
                int kmax = (E - w) / c + 1;
                Scalar tr = s.truncated(std::max(0, kmax));
                for (std::size_t k = 0; k < tr.num().size(); ++k) {
                    int ex = w + c * (static_cast<int>(k) + q);
                    if (ex < E && tr.num()[k] != 0) {
                        v[ex] = tr.num()[k];
                        any = true;
                    }
                }
            }
            if (any) {
                span.insert(std::move(v));
            }
        }
    }
    std::vector<int> vals(span.pivots().begin(), span.pivots().end());
    for (int e = E; e < upto + c * I.shift; ++e) {
        vals.push_back(e);
    }
    std::sort(vals.begin(), vals.end());
    std::vector<int> out;
    for (int v : vals) {
        int w = v - c * I.shift;
        if (w < upto) {
            out.push_back(w);
        }
    }
    return out;
}

bool is_monomial_ideal(const FracIdeal& I) {
    const RingPtr& R = I.ring;
    if (R->family() == Family::Artin) {
        return true; // Artin constructions only produce monomial ideals through the parser
    }
    FracIdeal J = FracIdeal::of(R, I.gens);
    int bound = R->frobenius() + 1 + 4 * R->base_element();
    for (const auto& g : J.gens) {
        if (!R->is_zero(g)) {
            bound = std::max(bound, R->valuation(g) + R->frobenius() + 2 * R->base_element() + 1);
        }
    }
    auto vals = value_set(J, bound);
    DSub L = J.lattice();
    for (int v : vals) {
        if (!L.coords(R->t_power(v))) {
            return false;
        }
    }
    return true;
}

FracIdeal trace_ideal(const FracIdeal& I) {
    FracIdeal colon = ideal_colon(FracIdeal::unit(I.ring), I);
    return ideal_normalize(ideal_product(colon, I));
}

BlowUp blow_up(const FracIdeal& I, int n_max) {
    const RingPtr& R = I.ring;
    if (R->dim() != 1) {
        fail(ErrorCode::DimensionMismatch, "blow-up needs a dimension-one ring");
    }
    FracIdeal In = I;
    FracIdeal Cn = ideal_colon(In, In);
    for (int n = 1; n <= n_max; ++n) {
        FracIdeal In1 = ideal_product(In, I);
        FracIdeal Cn1 = ideal_colon(In1, In1);
        if (ideal_equals(Cn, Cn1)) {
            if (!is_monomial_ideal(Cn)) {
                fail(ErrorCode::InvalidArgument, "blow-up algebra is not monomial");
            }
            const int c = R->base_element();
            int bound = R->frobenius() + 2 * c + 2;
            auto vals = value_set(Cn, bound);
            std::vector<char> inV(bound, 0);
            for (int v : vals) {
                if (v >= 0 && v < bound) {
                    inV[v] = 1;
                }
            }
            std::vector<int> gens;
            for (int v = 1; v < bound; ++v) {
                if (!inV[v]) {
                    continue;
                }
                bool decomposable = false;
                for (int a = 1; a < v && !decomposable; ++a) {
                    decomposable = inV[a] && inV[v - a];
                }
                if (!decomposable) {
                    gens.push_back(v);
                }
            }
            RingSpec spec;
            spec.family = Family::Semigroup;
            spec.p = R->p();
            spec.gens = gens;
            spec.base = c;
            BlowUp bu;
            bu.ring = Ring::build(spec);
            bu.as_module = ideal_normalize(Cn);
            bu.stabilized_at = n;
            return bu;
        }
        In = In1;
        Cn = Cn1;
    }
    fail(ErrorCode::StabilizationBudget, "blow-up did not stabilize within n <= " + std::to_string(n_max));
}

FracIdeal canonical_ideal(const RingPtr& R) {
    if (R->family() == Family::Artin) {
        fail(ErrorCode::WrongFamily, "canonical ideal needs a semigroup ring");
    }
    const int F = R->frobenius();
    auto inK = [&](int x) { return x >= 0 && !R->in_semigroup(F - x); };
    std::vector<int> gens;
    for (int x = 0; x <= F + R->semigroup_gens().front() + 1; ++x) {
        if (!inK(x)) {
            continue;
        }
        bool minimal = true;
        for (int a : R->semigroup_gens()) {
            if (inK(x - a)) {
                minimal = false;
            }
        }
        if (minimal) {
            gens.push_back(x);
        }
    }
    return ideal_normalize(FracIdeal::monomial(R, gens));
}

// ---------------------------------------------------------------- parsing

namespace {

struct Term {
    long long coef = 1;
    int texp = 0;              // semigroup
    std::vector<int> vexp;     // artin
};

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

} // namespace

RElem parse_element(const RingPtr& R, const std::string& text, int* shift_out) {
    std::vector<std::pair<int, std::string>> raw; // sign, term text
    std::string cur;
    int sign = 1;
    std::string t = strip(text);
    if (t.empty()) {
        fail(ErrorCode::ParseError, "empty element");
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        bool in_exp = i > 0 && t[i - 1] == '^';
        if ((ch == '+' || ch == '-') && !in_exp) {
            if (!strip(cur).empty()) {
                raw.push_back({sign, strip(cur)});
            }
            cur.clear();
            sign = ch == '-' ? -1 : 1;
            continue;
        }
        cur += ch;
    }
    if (!strip(cur).empty()) {
        raw.push_back({sign, strip(cur)});
    }
    const int nv = static_cast<int>(R->spec().vars.size());
    std::vector<Term> terms;
    for (auto& [sg, body] : raw) {
        Term term;
        term.coef = sg;
        term.vexp.assign(nv, 0);
        std::stringstream ss(body);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            factor = strip(factor);
            if (factor.empty()) {
                fail(ErrorCode::ParseError, "empty factor in '" + text + "'");
            }
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                term.coef *= std::stoll(factor);
                continue;
            }
            std::string name = factor;
            int e = 1;
            auto caret = factor.find('^');
            if (caret != std::string::npos) {
                name = strip(factor.substr(0, caret));
                try {
                    e = std::stoi(factor.substr(caret + 1));
                } catch (...) {
                    fail(ErrorCode::ParseError, "bad exponent in '" + factor + "'");
                }
            }
            if (R->family() == Family::Artin) {
                auto it = std::find(R->spec().vars.begin(), R->spec().vars.end(), name);
                if (it == R->spec().vars.end()) {
                    fail(ErrorCode::ParseError, "unknown variable '" + name + "'");
                }
                if (e < 0) {
                    fail(ErrorCode::ParseError, "negative exponent over an Artinian ring");
                }
                term.vexp[it - R->spec().vars.begin()] += e;
            } else {
                if (name != "t") {
                    fail(ErrorCode::ParseError, "unknown variable '" + name + "'");
                }
                term.texp += e;
            }
        }
        terms.push_back(term);
    }
    RElem r = R->zero();
    if (R->family() == Family::Artin) {
        for (const auto& term : terms) {
            RElem m = R->monomial(term.vexp);
            r = R->add(r, m.scaled(Scalar::constant(R->p(), term.coef)));
        }
        if (shift_out) {
            *shift_out = 0;
        }
        return r;
    }
    const int c = R->base_element();
    int K = 0;
    for (const auto& term : terms) {
        int k = 0;
        while (!R->in_semigroup(term.texp + c * k)) {
            ++k;
            if (k > 10000) {
                fail(ErrorCode::ParseError, "exponent out of range");
            }
        }
        K = std::max(K, k);
    }
    if (K > 0 && !shift_out) {
        fail(ErrorCode::InvalidArgument, "'" + text + "' is not an element of the ring");
    }
    for (const auto& term : terms) {
        RElem m = R->t_power(term.texp + c * K);
        r = R->add(r, m.scaled(Scalar::constant(R->p(), term.coef)));
    }
    if (shift_out) {
        *shift_out = K;
    }
    return r;
}

FracIdeal parse_frac_ideal(const RingPtr& R, const std::vector<std::string>& gens) {
    std::vector<std::pair<RElem, int>> elems;
    int K = 0;
    for (const auto& g : gens) {
        int k = 0;
        RElem e = parse_element(R, g, &k);
        elems.push_back({e, k});
        K = std::max(K, k);
    }
    std::vector<RElem> out;
    for (auto& [e, k] : elems) {
        out.push_back(shift_elem(e, K - k));
    }
    return ideal_normalize(FracIdeal::of(R, out, K));
}

} // namespace subext
