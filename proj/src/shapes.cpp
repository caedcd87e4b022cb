#include "schubert/shapes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

void check_weak(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) throw std::invalid_argument("negative part");
        if (i + 1 < p.size() && p[i] < p[i + 1])
            throw std::invalid_argument("parts must be weakly decreasing");
    }
}

std::vector<int> strip_zeros(std::vector<int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = tok.find_last_not_of(" \t");
        parts.push_back(std::stoi(tok.substr(a, b - a + 1)));
    }
    return parts;
}

} // namespace

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) {
    check_weak(p);
    parts = strip_zeros(std::move(p));
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string Partition::str() const {
    if (parts.empty()) return "0";
    std::string r;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) r += ",";
        r += std::to_string(parts[i]);
    }
    return r;
}

Partition Partition::parse(const std::string& text) { return Partition(parse_parts(text)); }

StrictPartition::StrictPartition(std::initializer_list<int> p)
    : StrictPartition(std::vector<int>(p)) {}

StrictPartition::StrictPartition(std::vector<int> p) {
    p = strip_zeros(std::move(p));
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw std::invalid_argument("strict partition parts must be positive");
        if (i + 1 < p.size() && p[i] <= p[i + 1])
            throw std::invalid_argument("parts must be strictly decreasing");
    }
    parts = std::move(p);
}

int StrictPartition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string StrictPartition::str() const {
    if (parts.empty()) return "0";
    std::string r;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) r += ",";
        r += std::to_string(parts[i]);
    }
    return r;
}

StrictPartition StrictPartition::parse(const std::string& text) {
    return StrictPartition(parse_parts(text));
}

StrictPartition staircase(int n) {
    std::vector<int> p;
    for (int i = n; i >= 1; --i) p.push_back(i);
    return StrictPartition(std::move(p));
}

bool contains(const Partition& inner, const Partition& outer) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

bool contains(const StrictPartition& inner, const StrictPartition& outer) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

Partition complement(const Partition& nu, const Rectangle& rect) {
    if (nu.length() > rect.k || nu.part(1) > rect.w)
        throw std::invalid_argument("shape does not fit in the rectangle");
    std::vector<int> p;
    for (int i = rect.k; i >= 1; --i) p.push_back(rect.w - nu.part(i));
    return Partition(std::move(p));
}

StrictPartition shifted_complement(const StrictPartition& nu, int n) {
    if (!contains(nu, staircase(n)))
        throw std::invalid_argument("shape does not fit in the staircase");
    // reflect rho_n \ nu across the antidiagonal (i,j) -> (n+1-j, n+1-i)
    std::vector<int> row_count(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            bool in_nu = nu.has_cell(i, j);
            if (!in_nu) row_count[n + 1 - j]++;
        }
    std::vector<int> p;
    for (int r = 1; r <= n; ++r)
        if (row_count[r] > 0) p.push_back(row_count[r]);
    return StrictPartition(std::move(p));
}

std::vector<Cell> inner_corners(const Partition& lambda) {
    std::vector<Cell> cs;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) > lambda.part(i + 1)) cs.push_back({i, lambda.part(i)});
    return cs;
}

std::vector<Cell> inner_corners(const StrictPartition& lambda) {
    std::vector<Cell> cs;
    for (int i = 1; i <= lambda.length(); ++i) {
        Cell end{i, i + lambda.part(i) - 1};
        // maximally southeast: nothing of lambda east (automatic) or south
        if (!lambda.has_cell(i + 1, end.c)) cs.push_back(end);
    }
    return cs;
}

std::vector<Partition> with_box_added(const Partition& p) {
    std::vector<Partition> out;
    for (int i = 1; i <= p.length() + 1; ++i) {
        if (i > 1 && p.part(i) >= p.part(i - 1)) continue;
        std::vector<int> q = p.parts;
        if (i > p.length())
            q.push_back(1);
        else
            q[i - 1]++;
        out.emplace_back(std::move(q));
    }
    return out;
}

std::vector<Partition> with_box_removed(const Partition& p) {
    std::vector<Partition> out;
    for (int i = 1; i <= p.length(); ++i)
        if (p.part(i) > p.part(i + 1)) {
            std::vector<int> q = p.parts;
            q[i - 1]--;
            out.emplace_back(std::move(q));
        }
    return out;
}

std::vector<StrictPartition> with_box_added(const StrictPartition& p) {
    std::vector<StrictPartition> out;
    for (int i = 1; i <= p.length(); ++i)
        if (i == 1 || p.part(i - 1) >= p.part(i) + 2) {
            std::vector<int> q = p.parts;
            q[i - 1]++;
            out.emplace_back(std::move(q));
        }
    if (p.length() == 0 || p.parts.back() >= 2) {
        std::vector<int> q = p.parts;
        q.push_back(1);
        out.emplace_back(std::move(q));
    }
    return out;
}

std::vector<StrictPartition> with_box_removed(const StrictPartition& p) {
    std::vector<StrictPartition> out;
    for (int i = 1; i <= p.length(); ++i) {
        std::vector<int> q = p.parts;
        q[i - 1]--;
        try {
            out.emplace_back(StrictPartition(std::move(q)));
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

int dist(Cell x, int k) { return k + x.c - x.r; }

Poly beta_box(Cell x, int k) {
    int d = dist(x, k);
    return Poly::variable(tvar(d)) - Poly::variable(tvar(d + 1));
}

Poly wt_YZ(const StrictPartition& shape, WtFlavor flavor) {
    Poly w;
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = i; j <= shape.part(i) + i - 1; ++j) {
            int d = j - i + 1;
            if (flavor == WtFlavor::Y) {
                w += Poly::variable(gvar(d));
            } else {
                w += (d == 1 ? Poly::variable(avar(1))
                             : Int(2) * Poly::variable(avar(d)));
            }
        }
    return w;
}

Poly wt_YZ_skew(const StrictPartition& outer, const StrictPartition& inner, WtFlavor flavor) {
    return wt_YZ(outer, flavor) - wt_YZ(inner, flavor);
}

Partition tau_of_subset(const std::vector<int>& I) {
    std::vector<int> sorted = I;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> p;
    for (int j = static_cast<int>(sorted.size()); j >= 1; --j)
        p.push_back(sorted[j - 1] - j);
    return Partition(std::move(p));
}

std::vector<int> I_n_alpha(const Partition& alpha, int n, int r) {
    if (alpha.length() > r || alpha.part(1) > n - r)
        throw std::invalid_argument("alpha does not fit in r x (n-r)");
    std::vector<int> I;
    for (int i = 1; i <= r; ++i) I.push_back(n - r + i - alpha.part(i));
    return I;
}

std::set<Cell> crossed_cells(const std::vector<int>& I, int n) {
    std::set<Cell> dead;
    for (int c : I) {
        if (c < 1 || c > n) throw std::invalid_argument("corner index out of range");
        for (int j = c; j <= n; ++j) dead.insert({c, j}); // row of corner c, to the right
        for (int i = 1; i < c; ++i) dead.insert({i, c});  // column above it
    }
    return dead;
}

int ps_statistic(const StrictPartition& lambda, const Partition& alpha, int n, int r) {
    if (!contains(lambda, staircase(n)))
        throw std::invalid_argument("lambda does not fit in the staircase");
    auto dead = crossed_cells(I_n_alpha(alpha, n, r), n);
    int live = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = i; j <= lambda.part(i) + i - 1; ++j)
            if (!dead.count({i, j})) ++live;
    return live;
}

std::vector<Partition> partitions_in_rectangle(int k, int w) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxp) {
        if (row > k) {
            out.emplace_back(strip_zeros(cur));
            return;
        }
        for (int v = maxp; v >= 0; --v) {
            cur.push_back(v);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(1, w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<StrictPartition> strict_partitions_in(const StrictPartition& bound) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int row) {
        out.emplace_back(StrictPartition(cur));
        if (row > bound.length()) return;
        int hi = bound.part(row);
        int lo = 1;
        int prev = cur.empty() ? INT32_MAX : cur.back();
        for (int v = std::min(hi, prev - 1); v >= lo; --v) {
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int v = std::min(rem, maxp); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v);
            cur.pop_back();
        }
    };
    rec(n, std::min(n, max_part));
    return out;
}

Partition stretch(const Partition& p, int N) {
    std::vector<int> q = p.parts;
    for (int& v : q) v *= N;
    return Partition(std::move(q));
}

StrictPartition stretch(const StrictPartition& p, int N) {
    std::vector<int> q = p.parts;
    for (int& v : q) v *= N;
    return StrictPartition(std::move(q));
}

Partition add(const Partition& a, const Partition& b) {
    std::vector<int> q;
    int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) q.push_back(a.part(i) + b.part(i));
    return Partition(std::move(q));
}

} // namespace schubert
