#pragma once

#include "schubert/coeffs.hpp"

#include <string>
#include <vector>

namespace schubert {

enum class HornMode { Nonzero, Belkale };

struct HornInequality {
    std::vector<int> I, J, K;
    long witness; // c_{tau(I),tau(J)}^{tau(K)}
};

struct HornSystem {
    int r = 0;
    HornMode mode = HornMode::Nonzero;
    std::vector<HornInequality> ineqs;
};

// Recursive generation over d < r; witnesses are memoized across calls.
HornSystem horn_list(int r, HornMode mode);

enum class DecideMethod { Direct, Horn };

bool classical_nonvanishing(const Partition& la, const Partition& mu, const Partition& nu, int r,
                            DecideMethod m, HornMode mode = HornMode::Nonzero);
bool equiv_nonvanishing(const Partition& la, const Partition& mu, const Partition& nu, int r,
                        DecideMethod m, HornMode mode = HornMode::Nonzero);

struct ScanItem {
    std::string triple;
    std::string verdict_a, verdict_b;
    bool agree;
};

struct ScanReport {
    std::string name;
    std::vector<ScanItem> items; // disagreements (and notable findings) only
    long checked = 0;
    std::vector<std::string> notes;

    bool ok() const { return items.empty(); }
    std::string json() const;
};

enum class SatKind { Classical, Equivariant };

// Stretch-invariance of nonvanishing for all triples inside r x bound, N <= n_max.
ScanReport saturation_scan(SatKind kind, int r, int bound, int n_max, int threads = 1);
// The shifted analogue fails; reproduces the known counterexample.
ScanReport shifted_saturation_counterexample();

enum class SemiKind { LR, EqLR };

ScanReport semigroup_scan(SemiKind kind, int r, int bound);

// Purbhoo-Sottile nonvanishing test for o_{la,mu}^{nu^c}.
bool purbhoo_sottile_inequalities(const StrictPartition& la, const StrictPartition& mu,
                                  const StrictPartition& nu, int n);
ScanReport purbhoo_sottile_scan(int n, int threads = 1);

// Monical's Horn-type inequalities for O_{la,mu}^{nu^c}.
bool monical_inequalities(const StrictPartition& la, const StrictPartition& mu,
                          const StrictPartition& nu, int n);
// Sound direction only: a violation is a triple where the inequalities say
// "vanishing" yet the z-specialized product detector D is nonzero. Triples the
// detector cannot confirm (inequalities say nonzero, D = 0) are reported as
// inconclusive notes, since D only sees the pure-alpha_1 part of L.
ScanReport monical_scan(int n);

// SNP verdicts for every nonzero C with shapes in k x w, in beta variables.
ScanReport snp_scan(int k, int w);

// Exhaustive (1) <=> (2) checks of the Horn characterizations.
ScanReport classical_horn_equivalence_scan(int r, int bound, HornMode mode, int threads = 1);
ScanReport equiv_horn_equivalence_scan(int r, int bound, HornMode mode, int threads = 1);

} // namespace schubert
