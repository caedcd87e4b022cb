#pragma once

#include "schubert/horn.hpp"

#include <map>

namespace schubert {

// Generators of the quotient ring Z[z, c_1, c_2, ...]/(c_{p,p} = 0): the
// deformed products c_{p,q} and the Pfaffian classes sigma_lambda.
// Conventions: c_0 = 1, c_{negative} = 0, binom(m,k) = 0 for m < 0, k < 0 or
// k > m (so the b = a coefficient is always 1).
Poly af_c_pq(int p, int q);
Poly af_sigma(const StrictPartition& la);

// deg z = 1, deg c_i = i
int weighted_degree(const Mono& m);
std::vector<Mono> monomials_of_wdegree(int d);

struct AFCoeff {
    Int coeff;
    long zpow = 0;
    bool nonzero() const { return coeff != 0; }
};

// Expands sigma_la * sigma_mu in the sigma basis by reducing the weighted
// degree-d slice modulo the span of {m * c_{p,p}} with exact elimination; the
// independence of the sigma images modulo the ideal slice is asserted.
std::map<StrictPartition, AFCoeff> af_expand_product(const StrictPartition& la,
                                                     const StrictPartition& mu);

// Diagonal structure constant divided by 2^{L-Delta} z^Delta, two ways.
Rat frak_d_diagonal(const StrictPartition& la, const StrictPartition& mu);
Rat eyd_shortcut(const StrictPartition& la, const StrictPartition& mu);

// Ring expansion versus the tableau-defined star product, for all shapes in
// rho_n; terms with nu outside rho_n are recorded, not compared.
ScanReport compare_D(int n);

// Loud sanity check of the binomial/c conventions.
void af_convention_check();

} // namespace schubert
