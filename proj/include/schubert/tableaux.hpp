#pragma once

#include "schubert/shapes.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace schubert {

// ---------------------------------------------------------------------------
// Unshifted skew tableaux, optionally with edge-label sets. Edge sets live on
// the southern edge of a box (r,c) of the outer shape whenever (r+1,c) is not
// an inner-shape box; they are stored sorted ascending, keyed by (r,c).
// ---------------------------------------------------------------------------
struct EqTab {
    Partition outer, inner;
    std::map<Cell, int> box;                // filled boxes of outer/inner
    std::map<Cell, std::vector<int>> edge;  // nonempty sorted sets only

    bool edge_slot_ok(Cell above) const;
    int box_at(int r, int c) const;
    std::string str() const; // "..5/..4/.6 | e(1,3):{1,2} e(3,1):{3}"
    friend auto operator<=>(const EqTab&, const EqTab&) = default;
};

// Shifted skew tableaux with edge labels confined to the southern edges of
// diagonal boxes (i,i) of the outer shape.
struct ShTab {
    StrictPartition outer, inner;
    std::map<Cell, int> box;
    std::vector<std::vector<int>> dedge; // dedge[i-1]: labels on diagonal edge i

    int box_at(int r, int c) const;
    const std::vector<int>& dedge_at(int i) const;
    void add_dedge(int i, int label);
    std::string str() const;
    friend auto operator<=>(const ShTab&, const ShTab&) = default;
};

// Fillings of straight or skew shapes with plain values (SYT/SSYT); also used
// for shifted semistandard tableaux over the primed alphabet, where value i' is
// encoded as 2i-1 and i as 2i.
struct Filling {
    std::vector<std::vector<int>> rows; // 0 entries mark inner-shape boxes
    std::string str() const;
    friend auto operator<=>(const Filling&, const Filling&) = default;
};

// --- validation ------------------------------------------------------------

// Returns an empty string when valid, else the first violated rule.
std::string validate_eq_standard(const EqTab& t, int N);
std::string validate_eq_semistandard(const EqTab& t);
std::string validate_sh_eq_standard(const ShTab& t, int N);
// primed == true allows 2i-1 ("i'") entries; diagonal primes controlled separately.
std::string validate_filling(const Filling& f, const Partition& outer, const Partition& inner,
                             bool standard);
std::string validate_shifted_primed(const Filling& f, const StrictPartition& outer,
                                    const StrictPartition& inner, bool allow_diag_primes);

// --- superstandard ----------------------------------------------------------

EqTab superstandard(const Partition& mu);
ShTab superstandard_shifted(const StrictPartition& mu);

// --- reading words and ballot tests -----------------------------------------

// Row reading word: right to left along rows, top to bottom.
std::vector<int> row_reading_word(const Filling& f);
// Shifted reading word: rows left to right, starting with the bottom row.
std::vector<int> shifted_reading_word(const Filling& f);

bool ballot_word(const std::vector<int>& w);
// Stembridge ballot test over the primed alphabet (2i-1 = i', 2i = i).
bool shifted_ballot_word(const std::vector<int>& w);
// Column-wise lattice test for equivariant semistandard tableaux.
bool eq_lattice(const EqTab& t);

// Labels that sit weakly above the upper edge of a box in their own row.
std::vector<int> too_high(const EqTab& t);

Filling standardize(const Filling& f, const Partition& outer, const Partition& inner);

// --- enumeration (callback returns true to stop early) ----------------------

bool for_each_syt(const Partition& outer, const Partition& inner,
                  const std::function<bool(const EqTab&)>& fn);
bool for_each_ssyt(const Partition& outer, const Partition& inner, const std::vector<int>& content,
                   const std::function<bool(const Filling&)>& fn);
bool for_each_eqsyt(const Partition& outer, const Partition& inner, int N,
                    const std::function<bool(const EqTab&)>& fn);
bool for_each_eq_ssyt(const Partition& outer, const Partition& inner,
                      const std::vector<int>& content,
                      const std::function<bool(const EqTab&)>& fn);
bool for_each_shsyt(const StrictPartition& outer, const StrictPartition& inner,
                    const std::function<bool(const ShTab&)>& fn);
bool for_each_sh_eqsyt(const StrictPartition& outer, const StrictPartition& inner, int N,
                       const std::function<bool(const ShTab&)>& fn);
// content fixed: content[i-1] counts labels of family i (primed or not);
// max_val bounds the family when content is empty.
bool for_each_shifted_primed(const StrictPartition& outer, const StrictPartition& inner,
                             const std::vector<int>& content, int max_val, bool allow_diag_primes,
                             const std::function<bool(const Filling&)>& fn);

// --- plus diagrams -----------------------------------------------------------

struct PlusDiagram {
    int nrows, ncols;
    std::vector<Cell> pluses; // sorted

    friend auto operator<=>(const PlusDiagram&, const PlusDiagram&) = default;
};

std::vector<PlusDiagram> plus_diagrams(const Partition& lambda, int nrows, int ncols);
Poly wt_x(const PlusDiagram& p);
Poly wt_xy(const PlusDiagram& p);

// --- excited Young diagrams ---------------------------------------------------

using EydCells = std::vector<Cell>; // sorted cell set inside D_lambda (shifted)

std::vector<EydCells> eyd_enumerate(const StrictPartition& lambda, const StrictPartition& mu);

} // namespace schubert
