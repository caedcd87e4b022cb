#pragma once

#include "schubert/tableaux.hpp"

#include <optional>
#include <set>

namespace schubert {

// One jeu-de-taquin slide into an inner corner. The inner shape loses the
// corner; if the bullet comes to rest the outer shape loses the vacated box,
// while a J4/J4' consumption leaves the outer shape unchanged.
struct SlideEvents {
    bool consumed = false;
    int consumed_label = 0;
    Cell consumed_at{0, 0};
    std::vector<std::pair<int, Cell>> moved; // (label, box it moved into), in order
    bool vacated = false;
    Cell vacated_at{0, 0};
    std::vector<std::pair<char, Cell>> trace; // rule fired at bullet position
};

SlideEvents eq_slide(EqTab& t, Cell corner);
SlideEvents sh_slide(ShTab& t, Cell corner);

enum class CornerPolicy { Eastmost, Southmost };

Cell pick_corner(const Partition& inner, CornerPolicy p);
Cell pick_corner(const StrictPartition& inner, CornerPolicy p);

EqTab eq_rectify(EqTab t, CornerPolicy p);
ShTab sh_rectify(ShTab t, CornerPolicy p);

// One line per slide step, "rule@{row,col}: state-hash", for golden tests.
std::string trace_dump(const EqTab& start, CornerPolicy p);

// Straight-shape target comparisons: boxes agree and no edge labels remain.
bool rectifies_to(const EqTab& rectified, const EqTab& target);
bool rectifies_to(const ShTab& rectified, const ShTab& target);

// Every distinct outcome over all inner-corner sequences.
std::set<EqTab> all_rectifications(const EqTab& t);
std::set<ShTab> all_rectifications(const ShTab& t);

// Equivariant jdt weight under eastmost-first rectification, with the
// pass/zero bookkeeping evaluated at the end of each column's run of slides.
Poly ejdt_weight(const EqTab& t, int k);

// Ballot-rule weight: product over edge labels of
// t_dist(x) - t_{dist(x)+i-l+1+rho_l(x)}.
Poly eballot_weight(const EqTab& t, int k);

// --- growth diagrams ---------------------------------------------------------

struct EPart {
    std::vector<std::pair<int, int>> rows; // (part, edge count), trailing (0,0) stripped

    int part(int i) const;
    int ecount(int i) const;
    StrictPartition shape() const;
    void normalize();
    std::string str() const;
    friend auto operator<=>(const EPart&, const EPart&) = default;
};

struct CoverUnit {
    bool is_edge;
    int row;
    friend auto operator<=>(const CoverUnit&, const CoverUnit&) = default;
};

std::optional<CoverUnit> covers(const EPart& lo, const EPart& hi); // hi covers lo
EPart apply_unit(const EPart& p, CoverUnit u);
EPart join(const EPart& a, const EPart& b);

EPart epart_of(const ShTab& t);
std::vector<EPart> epart_chain(const ShTab& t, int N);

// grid[0] is the top row (the input tableau's chain); the last row is the
// rectified chain.
using Growth = std::vector<std::vector<EPart>>;

Growth rect_diagram(const ShTab& t, int N);
bool g2_holds(const EPart& alpha, const EPart& beta, const EPart& gamma, const EPart& delta);
std::string validate_growth(const Growth& g);
Growth reflect(const Growth& g);
std::vector<Growth> enumerate_growth(const StrictPartition& lambda, const StrictPartition& mu,
                                     const StrictPartition& nu, int nbound);

// --- rho_n/rho_n slide calculus ------------------------------------------------

using EdgeTuple = std::vector<std::vector<int>>; // E_1..E_n, sorted

EdgeTuple u_tableau(int n);
EdgeTuple sl_apply(const EdgeTuple& t, int i, const std::vector<int>& I);
std::vector<int> slidable_minima(const EdgeTuple& t, int i, int n);
bool n_slidable(const EdgeTuple& t, int i, const std::vector<int>& I, int n);
std::set<EdgeTuple> slide_generated(int n);
ShTab tab_from_edges(int n, const EdgeTuple& e);

} // namespace schubert
