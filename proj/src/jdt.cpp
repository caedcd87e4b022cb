#include "schubert/jdt.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

bool is_inner_corner(const Partition& inner, Cell c) {
    auto cs = inner_corners(inner);
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

bool is_inner_corner(const StrictPartition& inner, Cell c) {
    auto cs = inner_corners(inner);
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

} // namespace

SlideEvents eq_slide(EqTab& t, Cell corner) {
    if (!is_inner_corner(t.inner, corner))
        throw std::invalid_argument("not an inner corner");
    SlideEvents ev;
    t.inner.parts[corner.r - 1]--;
    if (t.inner.parts.back() == 0) t.inner.parts.pop_back();
    Cell cur = corner;
    while (true) {
        int a = t.box_at(cur.r, cur.c + 1);
        int b = t.box_at(cur.r + 1, cur.c);
        auto se = t.edge.find(cur);
        bool has_s = se != t.edge.end() && !se->second.empty();
        if (has_s) {
            // with a box below, standardness forces min(S) < b; J1 cannot fire
            assert(!b || se->second.front() < b);
            int s = se->second.front();
            if (a && a < s) {
                ev.trace.push_back({'3', cur});
                t.box[cur] = a;
                t.box.erase({cur.r, cur.c + 1});
                ev.moved.push_back({a, cur});
                cur = {cur.r, cur.c + 1};
            } else {
                ev.trace.push_back({'4', cur});
                se->second.erase(se->second.begin());
                if (se->second.empty()) t.edge.erase(se);
                t.box[cur] = s;
                ev.consumed = true;
                ev.consumed_label = s;
                ev.consumed_at = cur;
                return ev;
            }
        } else if (b && (!a || b < a)) {
            ev.trace.push_back({'1', cur});
            t.box[cur] = b;
            t.box.erase({cur.r + 1, cur.c});
            ev.moved.push_back({b, cur});
            cur = {cur.r + 1, cur.c};
        } else if (a) {
            ev.trace.push_back({'2', cur});
            t.box[cur] = a;
            t.box.erase({cur.r, cur.c + 1});
            ev.moved.push_back({a, cur});
            cur = {cur.r, cur.c + 1};
        } else {
            assert(t.outer.part(cur.r) == cur.c && t.outer.part(cur.r + 1) < cur.c);
            t.outer.parts[cur.r - 1]--;
            if (!t.outer.parts.empty() && t.outer.parts.back() == 0) t.outer.parts.pop_back();
            ev.vacated = true;
            ev.vacated_at = cur;
            return ev;
        }
    }
}

SlideEvents sh_slide(ShTab& t, Cell corner) {
    if (!is_inner_corner(t.inner, corner))
        throw std::invalid_argument("not an inner corner");
    SlideEvents ev;
    t.inner.parts[corner.r - 1]--;
    while (!t.inner.parts.empty() && t.inner.parts.back() == 0) t.inner.parts.pop_back();
    Cell cur = corner;
    while (true) {
        int a = t.box_at(cur.r, cur.c + 1);
        int b = t.box_at(cur.r + 1, cur.c);
        bool diag = cur.r == cur.c;
        const std::vector<int>* S = nullptr;
        if (diag && cur.r <= static_cast<int>(t.dedge.size()) && !t.dedge[cur.r - 1].empty())
            S = &t.dedge[cur.r - 1];
        if (S) {
            assert(!b);
            int s = S->front();
            if (a && a < s) {
                ev.trace.push_back({'3', cur});
                t.box[cur] = a;
                t.box.erase({cur.r, cur.c + 1});
                ev.moved.push_back({a, cur});
                cur = {cur.r, cur.c + 1};
            } else {
                ev.trace.push_back({'4', cur});
                t.dedge[cur.r - 1].erase(t.dedge[cur.r - 1].begin());
                t.box[cur] = s;
                ev.consumed = true;
                ev.consumed_label = s;
                ev.consumed_at = cur;
                return ev;
            }
        } else if (b && (!a || b < a)) {
            ev.trace.push_back({'1', cur});
            t.box[cur] = b;
            t.box.erase({cur.r + 1, cur.c});
            ev.moved.push_back({b, cur});
            cur = {cur.r + 1, cur.c};
        } else if (a) {
            ev.trace.push_back({'2', cur});
            t.box[cur] = a;
            t.box.erase({cur.r, cur.c + 1});
            ev.moved.push_back({a, cur});
            cur = {cur.r, cur.c + 1};
        } else {
            assert(t.outer.part(cur.r) + cur.r - 1 == cur.c && !t.outer.has_cell(cur.r + 1, cur.c));
            t.outer.parts[cur.r - 1]--;
            while (!t.outer.parts.empty() && t.outer.parts.back() == 0) t.outer.parts.pop_back();
            ev.vacated = true;
            ev.vacated_at = cur;
            return ev;
        }
    }
}

Cell pick_corner(const Partition& inner, CornerPolicy p) {
    auto cs = inner_corners(inner);
    if (cs.empty()) throw std::invalid_argument("no inner corner");
    if (p == CornerPolicy::Eastmost)
        return *std::max_element(cs.begin(), cs.end(),
                                 [](Cell a, Cell b) { return a.c < b.c; });
    return *std::max_element(cs.begin(), cs.end(), [](Cell a, Cell b) { return a.r < b.r; });
}

Cell pick_corner(const StrictPartition& inner, CornerPolicy p) {
    auto cs = inner_corners(inner);
    if (cs.empty()) throw std::invalid_argument("no inner corner");
    if (p == CornerPolicy::Eastmost)
        return *std::max_element(cs.begin(), cs.end(),
                                 [](Cell a, Cell b) { return a.c < b.c; });
    return *std::max_element(cs.begin(), cs.end(), [](Cell a, Cell b) { return a.r < b.r; });
}

EqTab eq_rectify(EqTab t, CornerPolicy p) {
    while (t.inner.length() > 0) eq_slide(t, pick_corner(t.inner, p));
    return t;
}

ShTab sh_rectify(ShTab t, CornerPolicy p) {
    while (t.inner.length() > 0) sh_slide(t, pick_corner(t.inner, p));
    return t;
}

namespace {

// stable 64-bit FNV-1a so trace dumps are reproducible across platforms
uint64_t state_hash(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string trace_dump(const EqTab& start, CornerPolicy p) {
    EqTab t = start;
    std::ostringstream os;
    while (t.inner.length() > 0) {
        SlideEvents ev = eq_slide(t, pick_corner(t.inner, p));
        for (auto& [rule, at] : ev.trace)
            os << "J" << rule << "@{" << at.r << "," << at.c << "}: " << std::hex
               << state_hash(t.str()) << std::dec << "\n";
    }
    return os.str();
}

bool rectifies_to(const EqTab& rectified, const EqTab& target) {
    return rectified.inner.length() == 0 && rectified.edge.empty() &&
           rectified.outer == target.outer && rectified.box == target.box;
}

bool rectifies_to(const ShTab& rectified, const ShTab& target) {
    if (rectified.inner.length() != 0 || rectified.outer != target.outer ||
        rectified.box != target.box)
        return false;
    for (auto& v : rectified.dedge)
        if (!v.empty()) return false;
    return true;
}

std::set<EqTab> all_rectifications(const EqTab& t) {
    std::set<EqTab> out;
    std::set<EqTab> seen;
    std::function<void(const EqTab&)> rec = [&](const EqTab& cur) {
        if (!seen.insert(cur).second) return;
        if (cur.inner.length() == 0) {
            out.insert(cur);
            return;
        }
        for (Cell c : inner_corners(cur.inner)) {
            EqTab next = cur;
            eq_slide(next, c);
            rec(next);
        }
    };
    rec(t);
    return out;
}

std::set<ShTab> all_rectifications(const ShTab& t) {
    std::set<ShTab> out;
    std::set<ShTab> seen;
    std::function<void(const ShTab&)> rec = [&](const ShTab& cur) {
        if (!seen.insert(cur).second) return;
        if (cur.inner.length() == 0) {
            out.insert(cur);
            return;
        }
        for (Cell c : inner_corners(cur.inner)) {
            ShTab next = cur;
            sh_slide(next, c);
            rec(next);
        }
    };
    rec(t);
    return out;
}

Poly ejdt_weight(const EqTab& start, int k) {
    std::map<int, int> col0; // starting column of each edge label
    for (auto& [cell, labels] : start.edge)
        for (int v : labels) col0[v] = cell.c;
    if (col0.empty()) return Poly::constant(1);

    EqTab t = start;
    std::map<int, std::vector<Cell>> passes;
    std::map<int, int> consumed_in; // run column where the label was consumed
    int run_col = 0;                // 0 = before any slide

    auto finalize = [&](int col) {
        // nothing to compute here; factors are assembled at the end, but the
        // y-boxes must be read off at the moment the run closes
        for (auto& [lab, c0] : col0) {
            if (c0 != col) continue;
            auto it = consumed_in.find(lab);
            if (it == consumed_in.end() || it->second != col) continue;
            // append the hook arm: filled boxes strictly right of the last pass
            Cell last = passes[lab].back();
            for (int cc = last.c + 1; cc <= t.outer.part(last.r); ++cc)
                if (t.box_at(last.r, cc)) passes[lab].push_back({-last.r, cc});
        }
    };

    while (t.inner.length() > 0) {
        Cell corner = pick_corner(t.inner, CornerPolicy::Eastmost);
        if (run_col != 0 && corner.c != run_col) finalize(run_col);
        run_col = corner.c;
        SlideEvents ev = eq_slide(t, corner);
        if (ev.consumed && col0.count(ev.consumed_label)) {
            consumed_in[ev.consumed_label] = run_col;
            if (col0[ev.consumed_label] == run_col)
                passes[ev.consumed_label] = {ev.consumed_at};
        }
        for (auto& [lab, cell] : ev.moved) {
            auto it = consumed_in.find(lab);
            if (it != consumed_in.end() && it->second == run_col && col0[lab] == run_col)
                passes[lab].push_back(cell);
        }
    }
    if (run_col != 0) finalize(run_col);

    Poly w = Poly::constant(1);
    for (auto& [lab, c0] : col0) {
        auto it = consumed_in.find(lab);
        if (it == consumed_in.end() || it->second != c0) return Poly(); // factor zero
        Poly factor;
        for (Cell cell : passes[lab])
            factor += beta_box({std::abs(cell.r), cell.c}, k);
        // every factor is t_e - t_f with e < f
        assert(factor.term_count() == 2);
        w = w * factor;
    }
    return w;
}

Poly eballot_weight(const EqTab& t, int k) {
    Poly w = Poly::constant(1);
    for (auto& [cell, labels] : t.edge) {
        for (int lab : labels) {
            int rho = 0;
            for (auto& [bc, v] : t.box)
                if (bc.c > cell.c && v == lab) ++rho;
            for (auto& [ec, vs] : t.edge)
                if (ec.c > cell.c)
                    for (int v : vs)
                        if (v == lab) ++rho;
            int d = dist(cell, k);
            int far = d + cell.r - lab + 1 + rho;
            if (far <= d) throw std::invalid_argument("eballot factor is not of the form t_p - t_q, p < q");
            w = w * (Poly::variable(tvar(d)) - Poly::variable(tvar(far)));
        }
    }
    return w;
}

// --- growth diagrams -----------------------------------------------------------

int EPart::part(int i) const {
    return i >= 1 && i <= static_cast<int>(rows.size()) ? rows[i - 1].first : 0;
}

int EPart::ecount(int i) const {
    return i >= 1 && i <= static_cast<int>(rows.size()) ? rows[i - 1].second : 0;
}

StrictPartition EPart::shape() const {
    std::vector<int> p;
    for (auto& [part, e] : rows)
        if (part > 0) p.push_back(part);
    return StrictPartition(std::move(p));
}

void EPart::normalize() {
    while (!rows.empty() && rows.back().first == 0 && rows.back().second == 0) rows.pop_back();
}

std::string EPart::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ",";
        os << rows[i].first << "^" << rows[i].second;
    }
    os << ")";
    return os.str();
}

std::optional<CoverUnit> covers(const EPart& lo, const EPart& hi) {
    int n = std::max(lo.rows.size(), hi.rows.size());
    int diffs = 0;
    CoverUnit unit{false, 0};
    for (int i = 1; i <= n; ++i) {
        int dp = hi.part(i) - lo.part(i);
        int de = hi.ecount(i) - lo.ecount(i);
        if (dp == 0 && de == 0) continue;
        if (dp == 1 && de == 0) {
            unit = {false, i};
        } else if (dp == 0 && de == 1) {
            unit = {true, i};
        } else {
            return std::nullopt;
        }
        if (++diffs > 1) return std::nullopt;
    }
    if (diffs != 1) return std::nullopt;
    return unit;
}

EPart apply_unit(const EPart& p, CoverUnit u) {
    EPart q = p;
    if (static_cast<int>(q.rows.size()) < u.row) q.rows.resize(u.row, {0, 0});
    if (u.is_edge)
        q.rows[u.row - 1].second++;
    else
        q.rows[u.row - 1].first++;
    q.normalize();
    return q;
}

EPart join(const EPart& a, const EPart& b) {
    EPart r;
    int n = std::max(a.rows.size(), b.rows.size());
    for (int i = 1; i <= n; ++i)
        r.rows.push_back({std::max(a.part(i), b.part(i)), a.ecount(i) + b.ecount(i)});
    r.normalize();
    return r;
}

EPart epart_of(const ShTab& t) {
    EPart p;
    int n = t.outer.length();
    for (int i = 1; i <= n; ++i)
        p.rows.push_back({t.outer.part(i),
                          i <= static_cast<int>(t.dedge.size())
                              ? static_cast<int>(t.dedge[i - 1].size())
                              : 0});
    p.normalize();
    return p;
}

std::vector<EPart> epart_chain(const ShTab& t, int N) {
    std::map<int, CoverUnit> where;
    for (auto& [cell, v] : t.box) where[v] = {false, cell.r};
    for (int i = 1; i <= static_cast<int>(t.dedge.size()); ++i)
        for (int v : t.dedge[i - 1]) where[v] = {true, i};
    EPart cur;
    for (int i = 1; i <= t.inner.length(); ++i) cur.rows.push_back({t.inner.part(i), 0});
    cur.normalize();
    std::vector<EPart> chain{cur};
    for (int v = 1; v <= N; ++v) {
        auto it = where.find(v);
        if (it == where.end()) throw std::invalid_argument("missing label in chain");
        cur = apply_unit(cur, it->second);
        chain.push_back(cur);
    }
    return chain;
}

Growth rect_diagram(const ShTab& t, int N) {
    Growth g;
    ShTab cur = t;
    g.push_back(epart_chain(cur, N));
    while (cur.inner.length() > 0) {
        sh_slide(cur, pick_corner(cur.inner, CornerPolicy::Southmost));
        g.push_back(epart_chain(cur, N));
    }
    return g;
}

bool g2_holds(const EPart& alpha, const EPart& beta, const EPart& gamma, const EPart& delta) {
    auto cov_ba = covers(alpha, beta);
    auto cov_bd = covers(delta, beta);
    auto cov_ag = covers(gamma, alpha);
    auto cov_dg = covers(gamma, delta);
    if (!cov_ba || !cov_bd || !cov_ag || !cov_dg) return false;

    auto one_label_tab = [](const EPart& inner_ep, const EPart& outer_ep,
                            CoverUnit add) -> ShTab {
        ShTab t;
        t.outer = outer_ep.shape();
        t.inner = inner_ep.shape();
        t.dedge.resize(std::max<size_t>(t.outer.length(), 1));
        if (add.is_edge)
            t.dedge[add.row - 1].push_back(1);
        else
            t.box[{add.row, add.row + inner_ep.part(add.row)}] = 1;
        return t;
    };

    // delta = gamma v epart(shEjdt_{alpha/gamma}(filling of beta/alpha by 1))
    {
        ShTab t = one_label_tab(alpha, beta, *cov_ba);
        if (!cov_ag->is_edge) {
            Cell corner{cov_ag->row, cov_ag->row + gamma.part(cov_ag->row)};
            sh_slide(t, corner);
        }
        if (!(delta == join(gamma, epart_of(t)))) return false;
    }
    // alpha = gamma v epart(shEjdt_{delta/gamma}(filling of beta/delta by 1))
    {
        ShTab t = one_label_tab(delta, beta, *cov_bd);
        if (!cov_dg->is_edge) {
            Cell corner{cov_dg->row, cov_dg->row + gamma.part(cov_dg->row)};
            sh_slide(t, corner);
        }
        if (!(alpha == join(gamma, epart_of(t)))) return false;
    }
    return true;
}

std::string validate_growth(const Growth& g) {
    if (g.empty()) return "empty diagram";
    size_t cols = g[0].size();
    for (auto& row : g)
        if (row.size() != cols) return "ragged diagram";
    for (size_t r = 0; r < g.size(); ++r)
        for (size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols && !covers(g[r][c], g[r][c + 1]))
                return "row cover fails at (" + std::to_string(r) + "," + std::to_string(c) + ")";
            if (r + 1 < g.size() && !covers(g[r + 1][c], g[r][c]))
                return "column cover fails at (" + std::to_string(r) + "," + std::to_string(c) + ")";
        }
    for (size_t r = 0; r + 1 < g.size(); ++r)
        for (size_t c = 0; c + 1 < cols; ++c)
            if (!g2_holds(g[r][c], g[r][c + 1], g[r + 1][c], g[r + 1][c + 1]))
                return "local rule fails at (" + std::to_string(r) + "," + std::to_string(c) + ")";
    return "";
}

Growth reflect(const Growth& g) {
    size_t R = g.size(), C = g[0].size();
    Growth out(C, std::vector<EPart>(R));
    for (size_t r = 0; r < C; ++r)
        for (size_t c = 0; c < R; ++c) out[r][c] = g[R - 1 - c][C - 1 - r];
    return out;
}

std::vector<Growth> enumerate_growth(const StrictPartition& lambda, const StrictPartition& mu,
                                     const StrictPartition& nu, int nbound) {
    int R = lambda.size(), C = mu.size();
    // border chains from the superstandard tableaux
    auto chain_of = [](const StrictPartition& p) {
        std::vector<EPart> chain;
        EPart cur;
        chain.push_back(cur);
        for (int r = 1; r <= p.length(); ++r)
            for (int c = 1; c <= p.part(r); ++c) {
                cur = apply_unit(cur, {false, r});
                chain.push_back(cur);
            }
        return chain;
    };
    auto lam_chain = chain_of(lambda); // size R+1
    auto mu_chain = chain_of(mu);      // size C+1

    Growth g(R + 1, std::vector<EPart>(C + 1));
    for (int c = 0; c <= C; ++c) g[R][c] = mu_chain[c];
    for (int r = 0; r <= R; ++r) g[r][0] = lam_chain[R - r];

    std::vector<Growth> found;
    // candidate covers of alpha bounded by the ambient staircase
    auto cover_candidates = [&](const EPart& p) {
        std::vector<EPart> cands;
        StrictPartition sh = p.shape();
        for (int i = 1; i <= sh.length() + 1 && i <= nbound; ++i) {
            int cur = p.part(i);
            if (cur + 1 > nbound - i + 1) continue; // stay inside rho_n
            if (i > 1 && p.part(i - 1) < cur + 2) continue;
            cands.push_back(apply_unit(p, {false, i}));
        }
        for (int i = 1; i <= sh.length(); ++i)
            if (p.part(i) >= 1) cands.push_back(apply_unit(p, {true, i}));
        return cands;
    };

    std::function<bool(int, int)> fill = [&](int c, int r) -> bool {
        if (c > C) {
            if (g[0][C].shape() == nu) found.push_back(g);
            return false;
        }
        if (r < 0) return fill(c + 1, R - 1);
        const EPart& alpha = g[r][c - 1];
        const EPart& gamma = g[r + 1][c - 1];
        const EPart& delta = g[r + 1][c];
        std::vector<EPart> cands;
        if (alpha == delta) {
            cands = cover_candidates(alpha);
        } else {
            auto ua = covers(gamma, alpha);
            auto ud = covers(gamma, delta);
            if (!ua || !ud) return false;
            EPart combined = apply_unit(delta, *ua);
            // validity: parts strictly decreasing where positive
            bool ok = true;
            for (size_t i = 1; i < combined.rows.size(); ++i)
                if (combined.rows[i].first > 0 &&
                    combined.rows[i].first >= combined.rows[i - 1].first)
                    ok = false;
            for (size_t i = 0; i < combined.rows.size(); ++i)
                if (combined.rows[i].first == 0 && combined.rows[i].second > 0) ok = false;
            if (ok) cands.push_back(combined);
        }
        for (auto& beta : cands) {
            if (!covers(alpha, beta) || !covers(delta, beta)) continue;
            if (!g2_holds(alpha, beta, gamma, delta)) continue;
            g[r][c] = beta;
            if (fill(c, r - 1)) return true;
        }
        g[r][c] = EPart{};
        return false;
    };
    fill(1, R - 1);
    return found;
}

// --- rho_n/rho_n slide calculus ----------------------------------------------------

namespace {

int superstandard_label(int n, int r, int c) {
    // S_{rho_n}: row r holds labels offset by the previous rows, columns r..n
    int off = 0;
    for (int i = 1; i < r; ++i) off += n - i + 1;
    return off + (c - r + 1);
}

} // namespace

EdgeTuple u_tableau(int n) {
    EdgeTuple e(n);
    for (int i = 1; i <= n; ++i)
        for (int r = 1; r <= i; ++r) e[i - 1].push_back(superstandard_label(n, r, i));
    for (auto& v : e) std::sort(v.begin(), v.end());
    return e;
}

EdgeTuple sl_apply(const EdgeTuple& t, int i, const std::vector<int>& I) {
    EdgeTuple out = t;
    for (int v : I) {
        auto it = std::find(out[i - 1].begin(), out[i - 1].end(), v);
        if (it == out[i - 1].end()) throw std::invalid_argument("label not on edge i");
        out[i - 1].erase(it);
        out[i].insert(std::upper_bound(out[i].begin(), out[i].end(), v), v);
    }
    return out;
}

std::vector<int> slidable_minima(const EdgeTuple& t, int i, int n) {
    std::vector<int> mins;
    for (int k = 1; k <= i; ++k) {
        int best = 0;
        for (int v : t[i - 1]) {
            int lo = superstandard_label(n, k, k), hi = superstandard_label(n, k, n);
            if (v >= lo && v <= hi && (best == 0 || v < best)) best = v;
        }
        if (best) mins.push_back(best);
    }
    std::sort(mins.begin(), mins.end());
    mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
    return mins;
}

bool n_slidable(const EdgeTuple& t, int i, const std::vector<int>& I, int n) {
    if (i < 1 || i >= n) return false;
    auto mins = slidable_minima(t, i, n);
    for (int v : I)
        if (!std::binary_search(mins.begin(), mins.end(), v)) return false;
    EdgeTuple u = u_tableau(n);
    for (int k = i + 1; k <= n; ++k)
        if (t[k - 1] != u[k - 1]) return false;
    return true;
}

std::set<EdgeTuple> slide_generated(int n) {
    std::set<EdgeTuple> out;
    EdgeTuple u = u_tableau(n);
    std::function<void(EdgeTuple, int)> rec = [&](EdgeTuple cur, int i) {
        if (i == n) {
            out.insert(cur);
            return;
        }
        auto mins = slidable_minima(cur, i, n);
        size_t m = mins.size();
        for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
            std::vector<int> I;
            for (size_t b = 0; b < m; ++b)
                if (mask & (size_t{1} << b)) I.push_back(mins[b]);
            if (!n_slidable(cur, i, I, n)) continue;
            rec(sl_apply(cur, i, I), i + 1);
        }
    };
    rec(u, 1);
    return out;
}

ShTab tab_from_edges(int n, const EdgeTuple& e) {
    ShTab t;
    t.outer = staircase(n);
    t.inner = staircase(n);
    t.dedge.assign(n, {});
    for (int i = 1; i <= n; ++i) {
        t.dedge[i - 1] = e[i - 1];
        std::sort(t.dedge[i - 1].begin(), t.dedge[i - 1].end());
    }
    return t;
}

} // namespace schubert
