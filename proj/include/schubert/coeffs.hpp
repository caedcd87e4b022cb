#pragma once

#include "schubert/jdt.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace schubert {

enum class LrMethod { Jdt, Ballot, Polytope };
enum class EqMethod { Ejdt, Eballot, Factorial };
enum class ShMethod { Jdt, Ballot };

// Classical Littlewood-Richardson coefficient.
long lr(const Partition& la, const Partition& mu, const Partition& nu, LrMethod m);
bool lr_nonzero(const Partition& la, const Partition& mu, const Partition& nu);

// Equivariant structure constant as a polynomial in t_1, t_2, ...; depends on
// the row count k only (stable in the ambient rank).
Poly eq_C(const Partition& la, const Partition& mu, const Partition& nu, int k, EqMethod m);
bool eq_C_nonzero(const Partition& la, const Partition& mu, const Partition& nu, int k);

Poly factorial_schur(const Partition& la, int nrows, int ncols);
// Coefficients of s_la(X;Y) s_mu(X;Y) in the factorial basis, as polynomials in Y.
std::map<Partition, Poly> factorial_product_expansion(const Partition& la, const Partition& mu,
                                                      int k);
// The same, with the y_j -> -t_j calibration applied.
std::map<Partition, Poly> eq_C_factorial_table(const Partition& la, const Partition& mu, int k);
// Loud check of the calibration constant (forces y_3 - y_2 = t_2 - t_3 at k = 2).
void factorial_calibration_check();

// Classical Schur polynomial in k variables (SSYT generating function).
Poly schur_classical(const Partition& la, int k);
// SSYT of shape outer/inner with entries bounded by max_val.
bool for_each_ssyt_bounded(const Partition& outer, const Partition& inner, int max_val,
                           const std::function<bool(const Filling&)>& fn);

// Shifted Littlewood-Richardson coefficients.
long shifted_o(const StrictPartition& la, const StrictPartition& mu, const StrictPartition& nu,
               ShMethod m);
bool shifted_o_nonzero(const StrictPartition& la, const StrictPartition& mu,
                       const StrictPartition& nu);
Int l_from_o(const StrictPartition& la, const StrictPartition& mu, const StrictPartition& nu,
             long o);

// Schur P and Q polynomials in nvars variables.
Poly schur_P(const StrictPartition& la, int nvars);
Poly schur_Q(const StrictPartition& la, int nvars);
// Q_{(r,s)} = q_r q_s + 2 sum_i (-1)^i q_{r+i} q_{s-i}, with q built combinatorially.
Poly q_rs(int r, int s, int nvars);
bool pfaffian_check(const StrictPartition& la, int nvars);

// Shifted edge labeled counts and the star product.
long d_coeff(const StrictPartition& la, const StrictPartition& mu, const StrictPartition& nu);

struct DCoeff {
    long d = 0;
    long L = 0;     // l(la)+l(mu)-l(nu)
    long Delta = 0; // |la|+|mu|-|nu| (the z power)

    bool nonzero() const { return d != 0; }
    Rat scale() const { return Rat(d) * pow2(L - Delta); }
    bool integral() const;
    std::string str() const; // e.g. "3z^2" or "1/2z^3"
};

DCoeff D_coeff(const StrictPartition& la, const StrictPartition& mu, const StrictPartition& nu);
std::map<StrictPartition, DCoeff> star(const StrictPartition& la, const StrictPartition& mu,
                                       int n);
std::string star_row_str(const std::map<StrictPartition, DCoeff>& row);
std::string star_table_csv(int n);

// Structure-constant tables with CSV/JSON serialization.
struct CoeffTable {
    std::string context;
    std::map<std::array<std::string, 3>, Poly> entries;

    std::string csv() const;
    std::string json() const;
};

CoeffTable eq_C_table(int k, int w, EqMethod m);

struct CheckReport {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
};

// Associativity against the divisor class, on the full C table of k x w.
CheckReport eq_assoc_pieri_check(int k, int w);
// Box-adding recurrences on the embedded rank-2 product fixtures.
CheckReport table1_recurrence_checks();
// O = 2^{l(nu)-l(la)-l(mu)} L~ on each fixture row (with the corrected
// ([2],[2],[2]) entry, which the raw table misprints).
CheckReport ol_fixture_checks();

struct OLRow {
    StrictPartition la, mu, nu;
    Poly O, L;
};
const std::vector<OLRow>& table1_rows();
std::string table1_csv();

} // namespace schubert
