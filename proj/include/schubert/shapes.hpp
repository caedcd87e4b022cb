#pragma once

#include "schubert/poly.hpp"

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace schubert {

// Coordinates are 1-indexed (row, column), English notation. Shifted row i
// starts at column i. Trailing zeros are normalized away, so (2,0,0) == (2).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i >= 1 && i <= length() ? parts[i - 1] : 0; }
    bool has_cell(int r, int c) const { return r >= 1 && c >= 1 && c <= part(r); }

    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string str() const; // "3,2,1"; empty renders as "0"
    static Partition parse(const std::string& text);
};

struct StrictPartition {
    std::vector<int> parts; // strictly decreasing, positive

    StrictPartition() = default;
    StrictPartition(std::initializer_list<int> p);
    explicit StrictPartition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i >= 1 && i <= length() ? parts[i - 1] : 0; }
    // shifted diagram: row i occupies columns i .. i+parts[i]-1
    bool has_cell(int r, int c) const { return r >= 1 && c >= r && c <= part(r) + r - 1; }

    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

    std::string str() const;
    static StrictPartition parse(const std::string& text);
};

struct Rectangle {
    int k = 1; // rows
    int w = 0; // columns
};

StrictPartition staircase(int n); // rho_n = (n, n-1, ..., 1)

bool contains(const Partition& inner, const Partition& outer);
bool contains(const StrictPartition& inner, const StrictPartition& outer);

// 180-degree rotation of the complement inside Lambda = k x w.
Partition complement(const Partition& nu, const Rectangle& rect);
// Complement inside rho_n, after reflecting across the antidiagonal.
StrictPartition shifted_complement(const StrictPartition& nu, int n);

struct Cell {
    int r, c;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Inner corners of nu/lambda: maximally southeast boxes of lambda, row order.
std::vector<Cell> inner_corners(const Partition& lambda);
std::vector<Cell> inner_corners(const StrictPartition& lambda);

std::vector<Partition> with_box_added(const Partition& p);
std::vector<Partition> with_box_removed(const Partition& p);
std::vector<StrictPartition> with_box_added(const StrictPartition& p);
std::vector<StrictPartition> with_box_removed(const StrictPartition& p);

// dist(x) = k + j - i for a box x = (i, j) in the k-row ambient rectangle;
// the box weight is beta(x) = t_dist - t_{dist+1}.
int dist(Cell x, int k);
Poly beta_box(Cell x, int k);

enum class WtFlavor { Y, Z };

// Diagonal d = j - i + 1 weights: Y gives gamma_d per box; Z gives alpha_1 on
// the main diagonal and 2*alpha_d beyond. Skew weight is the difference of
// straight weights.
Poly wt_YZ(const StrictPartition& shape, WtFlavor flavor);
Poly wt_YZ_skew(const StrictPartition& outer, const StrictPartition& inner, WtFlavor flavor);

// tau(I) = (i_d - d >= ... >= i_1 - 1) for I = {i_1 < ... < i_d} in [r].
Partition tau_of_subset(const std::vector<int>& I);
// I_n(alpha) = {n-r+i-alpha_i : 1 <= i <= r} for alpha inside r x (n-r).
std::vector<int> I_n_alpha(const Partition& alpha, int n, int r);
// Cells of rho_n killed by crossing, for each corner index in I: the corner's
// row to its right and its column above.
std::set<Cell> crossed_cells(const std::vector<int>& I, int n);
// [lambda]_alpha: surviving boxes of lambda inside rho_n.
int ps_statistic(const StrictPartition& lambda, const Partition& alpha, int n, int r);

std::vector<Partition> partitions_in_rectangle(int k, int w);
std::vector<StrictPartition> strict_partitions_in(const StrictPartition& bound);
std::vector<Partition> partitions_of(int n, int max_len, int max_part);

Partition stretch(const Partition& p, int N);
StrictPartition stretch(const StrictPartition& p, int N);
Partition add(const Partition& a, const Partition& b);

} // namespace schubert
