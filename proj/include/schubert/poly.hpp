#pragma once

#include "schubert/ints.hpp"

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

// Indeterminate families used across the calculi. `z` is the single unindexed
// variable of the Anderson-Fulton ring; everything else carries an index >= 1.
enum class Fam : uint8_t { T = 0, Beta, Gamma, Alpha, X, Y, Z, C };

const char* fam_name(Fam f);

struct Var {
    Fam fam;
    int idx; // 0 for Fam::Z

    friend auto operator<=>(const Var&, const Var&) = default;
};

inline Var tvar(int i) { return {Fam::T, i}; }
inline Var bvar(int i) { return {Fam::Beta, i}; }
inline Var gvar(int i) { return {Fam::Gamma, i}; }
inline Var avar(int i) { return {Fam::Alpha, i}; }
inline Var xvar(int i) { return {Fam::X, i}; }
inline Var yvar(int i) { return {Fam::Y, i}; }
inline Var zvar() { return {Fam::Z, 0}; }
inline Var cvar(int i) { return {Fam::C, i}; }

std::string var_name(Var v);

// Sparse exponent vector, sorted by variable; exponents are > 0.
struct Mono {
    std::vector<std::pair<Var, int>> pows;

    int degree() const;
    int exponent(Var v) const;
    bool divisible_by(Var v) const { return exponent(v) > 0; }
    Mono times(const Mono& o) const;
    Mono without(Var v) const; // drops every power of v

    friend bool operator==(const Mono&, const Mono&) = default;
};

// Display/storage order: graded lex, higher degree first, then earlier
// variables with larger exponents first.
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const;
};

using Substitution = std::map<Var, class Poly>;

class Poly {
public:
    Poly() = default;
    static Poly constant(Int c);
    static Poly variable(Var v);
    static Poly monomial(Mono m, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Int constant_term() const;
    int degree() const;
    size_t term_count() const { return terms_.size(); }

    const std::map<Mono, Int, MonoOrder>& terms() const { return terms_; }
    Int coeff(const Mono& m) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly pow(int e) const;
    friend bool operator==(const Poly&, const Poly&) = default;

    void add_term(const Mono& m, const Int& c);

    // Ring homomorphism; variables absent from `s` map to themselves.
    Poly substitute(const Substitution& s) const;

    // All variables that occur.
    std::set<Var> variables() const;
    int max_index(Fam f) const; // 0 if the family is absent

    // Split as a polynomial in v: power -> coefficient (a Poly without v).
    std::map<int, Poly> by_power(Var v) const;

    // Exponent vectors over an explicit variable list; throws on strays.
    std::vector<std::vector<int>> support(const std::vector<Var>& vars) const;

    std::string str() const;
    // array of {exponents, coefficient} records in display order
    std::string json() const;
    static Poly parse(const std::string& text);

private:
    std::map<Mono, Int, MonoOrder> terms_;
};

inline Poly operator*(const Poly& p, const Int& c) { return p * Poly::constant(c); }
inline Poly operator*(const Int& c, const Poly& p) { return p * Poly::constant(c); }

// beta_e + beta_{e+1} + ... + beta_{f-1}; the telescoped form of t_e - t_f.
Poly t_interval_to_beta(int e, int f);

// Rewrites a polynomial in the t family as a polynomial in beta_i = t_i - t_{i+1}
// (t_n is eliminated against the highest index present). Throws if the input is
// not invariant under a common shift of all t's, i.e. not in the beta subring.
Poly t_to_beta(const Poly& p);

// Every coefficient nonnegative.
bool nonneg_coeffs(const Poly& p);

// Pfaffian of a skew-symmetric, even-order matrix of polynomials, by recursive
// expansion along the first row. Throws on odd order or non-skew input.
Poly pfaffian(const std::vector<std::vector<Poly>>& m);

// Exact determinant (cofactor expansion; test-oracle sizes only).
Poly determinant(const std::vector<std::vector<Poly>>& m);

// Expands `target` in `basis` with coefficients that are polynomials in the
// `coeff_vars` families; the basis must be graded-triangular in the remaining
// ("main") variables with constant leading coefficients. Throws if the basis is
// rank-deficient for the peel or the target is not in the span (the error
// carries the nonzero residual's leading term).
std::vector<Poly> expand_in_basis(const Poly& target, const std::vector<Poly>& basis,
                                  const std::set<Fam>& coeff_fams);

// Newton-polytope support operations. Membership of a lattice point in the
// convex hull is decided exactly (rational elimination over point subsets).
std::set<std::vector<int>> newton_support(const Poly& p, const std::vector<Var>& vars);
bool in_convex_hull(const std::vector<int>& q, const std::vector<std::vector<int>>& pts);
bool is_snp(const Poly& p, const std::vector<Var>& vars);

} // namespace schubert
