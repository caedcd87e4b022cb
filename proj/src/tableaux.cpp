#include "schubert/tableaux.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schubert {

bool EqTab::edge_slot_ok(Cell above) const {
    return outer.has_cell(above.r, above.c) && !inner.has_cell(above.r + 1, above.c);
}

int EqTab::box_at(int r, int c) const {
    auto it = box.find({r, c});
    return it == box.end() ? 0 : it->second;
}

std::string EqTab::str() const {
    std::ostringstream os;
    for (int r = 1; r <= outer.length(); ++r) {
        if (r > 1) os << "/";
        for (int c = 1; c <= outer.part(r); ++c) {
            int v = box_at(r, c);
            if (v == 0)
                os << ".";
            else if (v < 10)
                os << v;
            else
                os << "(" << v << ")";
        }
    }
    if (!edge.empty()) {
        os << " |";
        for (auto& [cell, labels] : edge) {
            os << " e(" << cell.r << "," << cell.c << "):{";
            for (size_t i = 0; i < labels.size(); ++i) {
                if (i) os << ",";
                os << labels[i];
            }
            os << "}";
        }
    }
    return os.str();
}

int ShTab::box_at(int r, int c) const {
    auto it = box.find({r, c});
    return it == box.end() ? 0 : it->second;
}

const std::vector<int>& ShTab::dedge_at(int i) const {
    static const std::vector<int> empty;
    if (i < 1 || i > static_cast<int>(dedge.size())) return empty;
    return dedge[i - 1];
}

void ShTab::add_dedge(int i, int label) {
    if (static_cast<int>(dedge.size()) < i) dedge.resize(i);
    auto& v = dedge[i - 1];
    v.insert(std::upper_bound(v.begin(), v.end(), label), label);
}

std::string ShTab::str() const {
    std::ostringstream os;
    for (int r = 1; r <= outer.length(); ++r) {
        if (r > 1) os << "/";
        for (int c = r; c <= outer.part(r) + r - 1; ++c) {
            int v = box_at(r, c);
            if (v == 0)
                os << ".";
            else if (v < 10)
                os << v;
            else
                os << "(" << v << ")";
        }
    }
    bool any = false;
    for (auto& v : dedge) any = any || !v.empty();
    if (any) {
        os << " |";
        for (int i = 1; i <= static_cast<int>(dedge.size()); ++i) {
            if (dedge[i - 1].empty()) continue;
            os << " d(" << i << "):{";
            for (size_t j = 0; j < dedge[i - 1].size(); ++j) {
                if (j) os << ",";
                os << dedge[i - 1][j];
            }
            os << "}";
        }
    }
    return os.str();
}

std::string Filling::str() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) os << "/";
        for (int v : rows[r]) {
            if (v == 0)
                os << ".";
            else
                os << v << ";";
        }
    }
    return os.str();
}

// --- validation --------------------------------------------------------------

std::string validate_eq_standard(const EqTab& t, int N) {
    std::vector<int> seen(N + 1, 0);
    auto mark = [&](int v) -> bool {
        if (v < 1 || v > N) return false;
        return ++seen[v] == 1;
    };
    for (auto& [cell, v] : t.box) {
        if (!t.outer.has_cell(cell.r, cell.c) || t.inner.has_cell(cell.r, cell.c))
            return "box outside the skew shape";
        if (!mark(v)) return "label repeated or out of range";
    }
    for (auto& [cell, labels] : t.edge) {
        if (!t.edge_slot_ok(cell)) return "edge labels on an illegal slot";
        if (labels.empty()) return "empty edge set stored";
        if (!std::is_sorted(labels.begin(), labels.end())) return "edge set not sorted";
        for (int v : labels)
            if (!mark(v)) return "label repeated or out of range";
    }
    for (int v = 1; v <= N; ++v)
        if (!seen[v]) return "label missing";
    // box labels must fill the whole skew shape
    for (int r = 1; r <= t.outer.length(); ++r)
        for (int c = t.inner.part(r) + 1; c <= t.outer.part(r); ++c)
            if (t.box_at(r, c) == 0) return "unfilled box";
    for (auto& [cell, v] : t.box) {
        int right = t.box_at(cell.r, cell.c + 1);
        if (right && right < v) return "row decrease";
        int below = t.box_at(cell.r + 1, cell.c);
        if (below && below < v) return "column decrease";
        auto se = t.edge.find({cell.r, cell.c});
        if (se != t.edge.end() && se->second.front() < v)
            return "southern edge label below its box";
        auto ne = t.edge.find({cell.r - 1, cell.c});
        if (ne != t.edge.end() && ne->second.back() > v)
            return "northern edge label above its box";
    }
    return "";
}

std::string validate_eq_semistandard(const EqTab& t) {
    for (int r = 1; r <= t.outer.length(); ++r)
        for (int c = t.inner.part(r) + 1; c <= t.outer.part(r); ++c)
            if (t.box_at(r, c) == 0) return "unfilled box";
    for (auto& [cell, v] : t.box) {
        if (!t.outer.has_cell(cell.r, cell.c) || t.inner.has_cell(cell.r, cell.c))
            return "box outside the skew shape";
        if (v < 1) return "label out of range";
        int right = t.box_at(cell.r, cell.c + 1);
        if (right && right < v) return "row decrease";
        int below = t.box_at(cell.r + 1, cell.c);
        if (below && below <= v) return "column not strictly increasing";
    }
    for (auto& [cell, labels] : t.edge) {
        if (!t.edge_slot_ok(cell)) return "edge labels on an illegal slot";
        if (labels.empty()) return "empty edge set stored";
        if (!std::is_sorted(labels.begin(), labels.end())) return "edge set not sorted";
        for (size_t i = 1; i < labels.size(); ++i)
            if (labels[i] == labels[i - 1]) return "repeated label on one edge";
        int above = t.box_at(cell.r, cell.c);
        if (above && labels.front() <= above) return "edge label not above its box";
        int below = t.box_at(cell.r + 1, cell.c);
        if (below && labels.back() >= below) return "edge label not below the next box";
    }
    return "";
}

std::string validate_sh_eq_standard(const ShTab& t, int N) {
    std::vector<int> seen(N + 1, 0);
    auto mark = [&](int v) -> bool {
        if (v < 1 || v > N) return false;
        return ++seen[v] == 1;
    };
    for (int r = 1; r <= t.outer.length(); ++r)
        for (int c = std::max(r, t.inner.part(r) + r); c <= t.outer.part(r) + r - 1; ++c)
            if (t.box_at(r, c) == 0) return "unfilled box";
    for (auto& [cell, v] : t.box) {
        if (!t.outer.has_cell(cell.r, cell.c) || t.inner.has_cell(cell.r, cell.c))
            return "box outside the skew shape";
        if (!mark(v)) return "label repeated or out of range";
        int right = t.box_at(cell.r, cell.c + 1);
        if (right && right < v) return "row decrease";
        int below = t.box_at(cell.r + 1, cell.c);
        if (below && below < v) return "column decrease";
    }
    for (int i = 1; i <= static_cast<int>(t.dedge.size()); ++i) {
        auto& labels = t.dedge[i - 1];
        if (labels.empty()) continue;
        if (i > t.outer.length()) return "edge labels beyond the last diagonal box";
        if (!std::is_sorted(labels.begin(), labels.end())) return "edge set not sorted";
        for (int v : labels) {
            if (!mark(v)) return "label repeated or out of range";
            for (int j = 1; j <= i; ++j) {
                int above = t.box_at(j, i);
                if (above && above > v) return "diagonal edge label below a larger box label";
            }
        }
    }
    for (int v = 1; v <= N; ++v)
        if (!seen[v]) return "label missing";
    return "";
}

std::string validate_filling(const Filling& f, const Partition& outer, const Partition& inner,
                             bool standard) {
    int N = outer.size() - inner.size();
    std::vector<int> seen(standard ? N + 1 : 0, 0);
    for (int r = 1; r <= outer.length(); ++r) {
        if (static_cast<int>(f.rows.size()) < r) return "missing row";
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) {
            if (static_cast<int>(f.rows[r - 1].size()) < c) return "missing box";
            int v = f.rows[r - 1][c - 1];
            if (v < 1) return "unfilled box";
            if (standard) {
                if (v > N || seen[v]++) return "label repeated or out of range";
            }
            if (c > inner.part(r) + 1) {
                int left = f.rows[r - 1][c - 2];
                if (standard ? left >= v : left > v) return "row violation";
            }
            if (r > 1 && inner.part(r - 1) < c && c <= outer.part(r - 1)) {
                int up = f.rows[r - 2][c - 1];
                if (up >= v) return "column violation";
            }
        }
    }
    return "";
}

std::string validate_shifted_primed(const Filling& f, const StrictPartition& outer,
                                    const StrictPartition& inner, bool allow_diag_primes) {
    for (int r = 1; r <= outer.length(); ++r) {
        for (int c = r; c <= outer.part(r) + r - 1; ++c) {
            if (inner.has_cell(r, c)) continue;
            if (static_cast<int>(f.rows.size()) < r ||
                static_cast<int>(f.rows[r - 1].size()) < c)
                return "missing box";
            int v = f.rows[r - 1][c - 1];
            if (v < 1) return "unfilled box";
            if (r == c && !allow_diag_primes && v % 2 == 1) return "primed entry on the diagonal";
            if (c > r && !inner.has_cell(r, c - 1)) {
                int left = f.rows[r - 1][c - 2];
                if (left > v) return "row decrease";
                if (left == v && v % 2 == 1) return "two primed entries in a row";
            }
            if (r > 1 && outer.has_cell(r - 1, c) && !inner.has_cell(r - 1, c)) {
                int up = f.rows[r - 2][c - 1];
                if (up > v) return "column decrease";
                if (up == v && v % 2 == 0) return "two unprimed entries in a column";
            }
        }
    }
    return "";
}

// --- superstandard -------------------------------------------------------------

EqTab superstandard(const Partition& mu) {
    EqTab t;
    t.outer = mu;
    int k = 0;
    for (int r = 1; r <= mu.length(); ++r)
        for (int c = 1; c <= mu.part(r); ++c) t.box[{r, c}] = ++k;
    return t;
}

ShTab superstandard_shifted(const StrictPartition& mu) {
    ShTab t;
    t.outer = mu;
    int k = 0;
    for (int r = 1; r <= mu.length(); ++r)
        for (int c = r; c <= mu.part(r) + r - 1; ++c) t.box[{r, c}] = ++k;
    return t;
}

// --- words and ballot tests ------------------------------------------------------

std::vector<int> row_reading_word(const Filling& f) {
    std::vector<int> w;
    for (auto& row : f.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it)
            if (*it) w.push_back(*it);
    return w;
}

std::vector<int> shifted_reading_word(const Filling& f) {
    std::vector<int> w;
    for (auto it = f.rows.rbegin(); it != f.rows.rend(); ++it)
        for (int v : *it)
            if (v) w.push_back(v);
    return w;
}

bool ballot_word(const std::vector<int>& w) {
    std::map<int, int> cnt;
    for (int v : w) {
        cnt[v]++;
        if (v > 1 && cnt[v] > cnt[v - 1]) return false;
    }
    return true;
}

bool shifted_ballot_word(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    int maxfam = 0;
    for (int v : w) maxfam = std::max(maxfam, (v + 1) / 2);
    if (maxfam == 0) return true;
    // JS[f][j], 0 <= j <= 2n
    std::vector<std::vector<int>> js(maxfam + 1, std::vector<int>(2 * n + 1, 0));
    for (int f = 1; f <= maxfam; ++f) {
        for (int j = 1; j <= n; ++j)
            js[f][j] = js[f][j - 1] + (w[n - j] == 2 * f ? 1 : 0);
        for (int j = 1; j <= n; ++j)
            js[f][n + j] = js[f][n + j - 1] + (w[j - 1] == 2 * f - 1 ? 1 : 0);
    }
    for (int f = 2; f <= maxfam; ++f) {
        for (int j = 0; j < 2 * n; ++j) {
            if (js[f][j] != js[f - 1][j]) continue;
            if (j < n) {
                int letter = w[n - j - 1]; // w_{n-j}
                if (letter == 2 * f || letter == 2 * f - 1) return false;
            } else {
                int letter = w[j - n]; // w_{j-n+1}
                if (letter == 2 * (f - 1) || letter == 2 * f - 1) return false;
            }
        }
    }
    // the leftmost letter of each family must be unprimed
    std::vector<bool> seen(maxfam + 1, false);
    for (int v : w) {
        int f = (v + 1) / 2;
        if (!seen[f]) {
            seen[f] = true;
            if (v % 2 == 1) return false;
        }
    }
    return true;
}

bool eq_lattice(const EqTab& t) {
    int maxlab = 0;
    for (auto& [c, v] : t.box) maxlab = std::max(maxlab, v);
    for (auto& [c, labels] : t.edge)
        for (int v : labels) maxlab = std::max(maxlab, v);
    if (maxlab == 0) return true;
    int width = t.outer.part(1);
    std::vector<int> cnt(maxlab + 2, 0); // occurrences weakly right of the scan column
    for (int c = width; c >= 1; --c) {
        for (auto& [cell, v] : t.box)
            if (cell.c == c) cnt[v]++;
        for (auto& [cell, labels] : t.edge)
            if (cell.c == c)
                for (int v : labels) cnt[v]++;
        for (int v = 1; v < maxlab; ++v)
            if (cnt[v] < cnt[v + 1]) return false;
    }
    return true;
}

std::vector<int> too_high(const EqTab& t) {
    std::set<int> bad;
    for (auto& [cell, v] : t.box)
        if (cell.r < v) bad.insert(v);
    for (auto& [cell, labels] : t.edge)
        for (int v : labels)
            if (cell.r + 1 <= v) bad.insert(v);
    return {bad.begin(), bad.end()};
}

Filling standardize(const Filling& f, const Partition& outer, const Partition& inner) {
    int maxv = 0;
    for (auto& row : f.rows)
        for (int v : row) maxv = std::max(maxv, v);
    Filling out = f;
    int next = 1;
    for (int v = 1; v <= maxv; ++v) {
        std::vector<Cell> where;
        for (int r = 1; r <= outer.length(); ++r)
            for (int c = inner.part(r) + 1; c <= outer.part(r); ++c)
                if (f.rows[r - 1][c - 1] == v) where.push_back({r, c});
        std::sort(where.begin(), where.end(),
                  [](const Cell& a, const Cell& b) { return a.c < b.c; });
        for (auto& cell : where) out.rows[cell.r - 1][cell.c - 1] = next++;
    }
    return out;
}

// --- enumerations ------------------------------------------------------------------

bool for_each_syt(const Partition& outer, const Partition& inner,
                  const std::function<bool(const EqTab&)>& fn) {
    if (!contains(inner, outer)) return false;
    int N = outer.size() - inner.size();
    EqTab t;
    t.outer = outer;
    t.inner = inner;
    std::vector<int> theta(outer.length() + 1, 0);
    for (int i = 1; i <= outer.length(); ++i) theta[i] = inner.part(i);
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k > N) return fn(t);
        for (int i = 1; i <= outer.length(); ++i) {
            int c = theta[i] + 1;
            if (c > outer.part(i)) continue;
            if (i > 1 && theta[i - 1] < c) continue;
            theta[i] = c;
            t.box[{i, c}] = k;
            if (rec(k + 1)) return true;
            t.box.erase({i, c});
            theta[i] = c - 1;
        }
        return false;
    };
    return rec(1);
}

bool for_each_ssyt(const Partition& outer, const Partition& inner, const std::vector<int>& content,
                   const std::function<bool(const Filling&)>& fn) {
    if (!contains(inner, outer)) return false;
    int total = 0;
    for (int v : content) total += v;
    if (total != outer.size() - inner.size()) return false;
    int m = static_cast<int>(content.size());
    Filling f;
    f.rows.resize(outer.length());
    for (int r = 1; r <= outer.length(); ++r) f.rows[r - 1].assign(outer.part(r), 0);
    std::vector<int> used(m + 1, 0);
    std::vector<Cell> cells;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) cells.push_back({r, c});
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == cells.size()) return fn(f);
        auto [r, c] = cells[i];
        int lo = 1, hi = m;
        if (c > inner.part(r) + 1) lo = std::max(lo, f.rows[r - 1][c - 2]);
        if (r > 1 && c > inner.part(r - 1) && c <= outer.part(r - 1))
            lo = std::max(lo, f.rows[r - 2][c - 1] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= content[v - 1]) continue;
            used[v]++;
            f.rows[r - 1][c - 1] = v;
            if (rec(i + 1)) return true;
            f.rows[r - 1][c - 1] = 0;
            used[v]--;
        }
        return false;
    };
    return rec(0);
}

bool for_each_eqsyt(const Partition& outer, const Partition& inner, int N,
                    const std::function<bool(const EqTab&)>& fn) {
    if (!contains(inner, outer)) return false;
    int boxes = outer.size() - inner.size();
    if (N < boxes) return false;
    EqTab t;
    t.outer = outer;
    t.inner = inner;
    std::vector<int> theta(outer.length() + 2, 0);
    for (int i = 1; i <= outer.length(); ++i) theta[i] = inner.part(i);
    int boxes_left = boxes;
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k > N) {
            if (boxes_left != 0) return false;
            return fn(t);
        }
        if (N - k + 1 < boxes_left) return false;
        // place k in a box
        for (int i = 1; i <= outer.length(); ++i) {
            int c = theta[i] + 1;
            if (c > outer.part(i)) continue;
            if (i > 1 && theta[i - 1] < c) continue;
            theta[i] = c;
            t.box[{i, c}] = k;
            --boxes_left;
            if (rec(k + 1)) return true;
            ++boxes_left;
            t.box.erase({i, c});
            theta[i] = c - 1;
        }
        // place k on an edge slot (r,c): box above already covered, box below unfilled
        for (int r = 1; r <= outer.length(); ++r) {
            for (int c = 1; c <= theta[r]; ++c) {
                if (inner.has_cell(r + 1, c)) continue;          // illegal slot
                if (outer.has_cell(r + 1, c) && theta[r + 1] >= c) continue; // below filled
                t.edge[{r, c}].push_back(k);
                if (rec(k + 1)) return true;
                auto it = t.edge.find({r, c});
                it->second.pop_back();
                if (it->second.empty()) t.edge.erase(it);
            }
        }
        return false;
    };
    return rec(1);
}

bool for_each_eq_ssyt(const Partition& outer, const Partition& inner,
                      const std::vector<int>& content,
                      const std::function<bool(const EqTab&)>& fn) {
    if (!contains(inner, outer)) return false;
    int m = static_cast<int>(content.size());
    int total = 0;
    for (int v : content) total += v;
    int boxes = outer.size() - inner.size();
    if (total < boxes) return false;

    std::vector<Cell> cells;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) cells.push_back({r, c});
    std::vector<Cell> slots;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = 1; c <= outer.part(r); ++c)
            if (!inner.has_cell(r + 1, c)) slots.push_back({r, c});

    EqTab t;
    t.outer = outer;
    t.inner = inner;
    std::vector<int> used(m + 1, 0);

    // distribute the remaining content on edge slots, value by value
    std::function<bool(int)> edges = [&](int v) -> bool {
        if (v > m) return fn(t);
        int rem = content[v - 1] - used[v];
        if (rem == 0) return edges(v + 1);
        std::vector<Cell> ok;
        for (auto& s : slots) {
            int above = t.box_at(s.r, s.c);
            if (above && above >= v) continue;
            int below = t.box_at(s.r + 1, s.c);
            if (outer.has_cell(s.r + 1, s.c) && !inner.has_cell(s.r + 1, s.c) && below <= v)
                continue;
            ok.push_back(s);
        }
        if (static_cast<int>(ok.size()) < rem) return false;
        std::vector<int> pick(rem);
        std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
            if (idx == rem) {
                for (int i = 0; i < rem; ++i) t.edge[ok[pick[i]]].push_back(v);
                bool stop = edges(v + 1);
                for (int i = 0; i < rem; ++i) {
                    auto it = t.edge.find(ok[pick[i]]);
                    it->second.pop_back();
                    if (it->second.empty()) t.edge.erase(it);
                }
                return stop;
            }
            for (int j = from; j <= static_cast<int>(ok.size()) - (rem - idx); ++j) {
                pick[idx] = j;
                if (choose(idx + 1, j + 1)) return true;
            }
            return false;
        };
        return choose(0, 0);
    };

    std::function<bool(size_t)> boxes_rec = [&](size_t i) -> bool {
        if (i == cells.size()) return edges(1);
        auto [r, c] = cells[i];
        int lo = 1;
        if (c > inner.part(r) + 1) lo = std::max(lo, t.box_at(r, c - 1));
        if (r > 1 && c > inner.part(r - 1) && c <= outer.part(r - 1))
            lo = std::max(lo, t.box_at(r - 1, c) + 1);
        for (int v = lo; v <= m; ++v) {
            if (used[v] >= content[v - 1]) continue;
            used[v]++;
            t.box[{r, c}] = v;
            if (boxes_rec(i + 1)) return true;
            t.box.erase({r, c});
            used[v]--;
        }
        return false;
    };
    return boxes_rec(0);
}

bool for_each_shsyt(const StrictPartition& outer, const StrictPartition& inner,
                    const std::function<bool(const ShTab&)>& fn) {
    if (!contains(inner, outer)) return false;
    int N = outer.size() - inner.size();
    ShTab t;
    t.outer = outer;
    t.inner = inner;
    std::vector<int> theta(outer.length() + 2, 0);
    for (int i = 1; i <= outer.length(); ++i) theta[i] = inner.part(i);
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k > N) return fn(t);
        for (int i = 1; i <= outer.length(); ++i) {
            if (theta[i] >= outer.part(i)) continue;
            if (i > 1 && theta[i - 1] < theta[i] + 2) continue;
            theta[i]++;
            int c = i + theta[i] - 1;
            t.box[{i, c}] = k;
            if (rec(k + 1)) return true;
            t.box.erase({i, c});
            theta[i]--;
        }
        return false;
    };
    return rec(1);
}

bool for_each_sh_eqsyt(const StrictPartition& outer, const StrictPartition& inner, int N,
                       const std::function<bool(const ShTab&)>& fn) {
    if (!contains(inner, outer)) return false;
    int boxes = outer.size() - inner.size();
    if (N < boxes) return false;
    ShTab t;
    t.outer = outer;
    t.inner = inner;
    t.dedge.resize(outer.length());
    std::vector<int> theta(outer.length() + 2, 0);
    for (int i = 1; i <= outer.length(); ++i) theta[i] = inner.part(i);
    int boxes_left = boxes;
    // column col of the outer shape is fully covered by theta
    auto column_covered = [&](int col) {
        for (int j = 1; j <= std::min(col, outer.length()); ++j)
            if (outer.has_cell(j, col) && theta[j] < col - j + 1) return false;
        return true;
    };
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k > N) {
            if (boxes_left != 0) return false;
            return fn(t);
        }
        if (N - k + 1 < boxes_left) return false;
        for (int i = 1; i <= outer.length(); ++i) {
            if (theta[i] >= outer.part(i)) continue;
            if (i > 1 && theta[i - 1] < theta[i] + 2) continue;
            theta[i]++;
            int c = i + theta[i] - 1;
            t.box[{i, c}] = k;
            --boxes_left;
            if (rec(k + 1)) return true;
            ++boxes_left;
            t.box.erase({i, c});
            theta[i]--;
        }
        for (int i = 1; i <= outer.length(); ++i) {
            if (!column_covered(i)) continue;
            t.dedge[i - 1].push_back(k);
            if (rec(k + 1)) return true;
            t.dedge[i - 1].pop_back();
        }
        return false;
    };
    return rec(1);
}

bool for_each_shifted_primed(const StrictPartition& outer, const StrictPartition& inner,
                             const std::vector<int>& content, int max_val, bool allow_diag_primes,
                             const std::function<bool(const Filling&)>& fn) {
    if (!contains(inner, outer)) return false;
    int m = content.empty() ? max_val : static_cast<int>(content.size());
    if (!content.empty()) {
        int total = 0;
        for (int v : content) total += v;
        if (total != outer.size() - inner.size()) return false;
    }
    Filling f;
    f.rows.resize(outer.length());
    for (int r = 1; r <= outer.length(); ++r) f.rows[r - 1].assign(outer.part(r) + r - 1, 0);
    std::vector<Cell> cells;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = std::max(r, inner.part(r) + r); c <= outer.part(r) + r - 1; ++c)
            cells.push_back({r, c});
    std::vector<int> used(m + 1, 0);
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == cells.size()) return fn(f);
        auto [r, c] = cells[i];
        int left = (c > r && !inner.has_cell(r, c - 1)) ? f.rows[r - 1][c - 2] : 0;
        int up = (r > 1 && outer.has_cell(r - 1, c) && !inner.has_cell(r - 1, c))
                     ? f.rows[r - 2][c - 1]
                     : 0;
        for (int e = std::max({1, left, up}); e <= 2 * m; ++e) {
            int fam = (e + 1) / 2;
            if (!content.empty() && used[fam] >= content[fam - 1]) continue;
            if (e == left && e % 2 == 1) continue;
            if (e == up && e % 2 == 0) continue;
            if (r == c && !allow_diag_primes && e % 2 == 1) continue;
            used[fam]++;
            f.rows[r - 1][c - 1] = e;
            if (rec(i + 1)) return true;
            f.rows[r - 1][c - 1] = 0;
            used[fam]--;
        }
        return false;
    };
    return rec(0);
}

// --- plus diagrams ------------------------------------------------------------------

std::vector<PlusDiagram> plus_diagrams(const Partition& lambda, int nrows, int ncols) {
    if (ncols < nrows + lambda.part(1) - 1)
        throw std::invalid_argument("grid too narrow for the initial diagram");
    std::vector<Cell> init;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c) init.push_back({r, c});
    std::set<std::vector<Cell>> seen;
    std::vector<std::vector<Cell>> queue{init};
    seen.insert(init);
    auto has = [](const std::vector<Cell>& v, Cell x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto cur = queue[qi];
        for (auto& p : cur) {
            if (p.r + 1 > nrows || p.c + 1 > ncols) continue;
            if (has(cur, {p.r, p.c + 1}) || has(cur, {p.r + 1, p.c}) ||
                has(cur, {p.r + 1, p.c + 1}))
                continue;
            std::vector<Cell> nxt = cur;
            nxt.erase(std::find(nxt.begin(), nxt.end(), p));
            nxt.insert(std::upper_bound(nxt.begin(), nxt.end(), Cell{p.r + 1, p.c + 1}),
                       Cell{p.r + 1, p.c + 1});
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    std::vector<PlusDiagram> out;
    for (auto& cells : seen) out.push_back({nrows, ncols, cells});
    return out;
}

Poly wt_x(const PlusDiagram& p) {
    Poly w = Poly::constant(1);
    for (auto& cell : p.pluses) w = w * Poly::variable(xvar(cell.r));
    return w;
}

Poly wt_xy(const PlusDiagram& p) {
    Poly w = Poly::constant(1);
    for (auto& cell : p.pluses)
        w = w * (Poly::variable(xvar(cell.r)) - Poly::variable(yvar(cell.c)));
    return w;
}

// --- excited Young diagrams -----------------------------------------------------------

std::vector<EydCells> eyd_enumerate(const StrictPartition& lambda, const StrictPartition& mu) {
    if (!contains(mu, lambda)) return {};
    EydCells init;
    for (int r = 1; r <= mu.length(); ++r)
        for (int c = r; c <= mu.part(r) + r - 1; ++c) init.push_back({r, c});
    std::set<EydCells> seen{init};
    std::vector<EydCells> queue{init};
    auto in_lambda = [&](Cell x) { return lambda.has_cell(x.r, x.c); };
    auto free_cell = [&](const EydCells& cs, Cell x) {
        return in_lambda(x) && !std::binary_search(cs.begin(), cs.end(), x);
    };
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto cur = queue[qi];
        for (auto& x : cur) {
            bool movable;
            if (x.r == x.c) {
                movable = free_cell(cur, {x.r, x.c + 1}) && free_cell(cur, {x.r + 1, x.c + 1});
            } else {
                movable = free_cell(cur, {x.r, x.c + 1}) && free_cell(cur, {x.r + 1, x.c}) &&
                          free_cell(cur, {x.r + 1, x.c + 1});
            }
            if (!movable) continue;
            EydCells nxt = cur;
            nxt.erase(std::find(nxt.begin(), nxt.end(), x));
            Cell y{x.r + 1, x.c + 1};
            nxt.insert(std::upper_bound(nxt.begin(), nxt.end(), y), y);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace schubert
