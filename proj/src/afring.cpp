#include "schubert/afring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

Poly c_gen(int i) {
    if (i < 0) return Poly();
    if (i == 0) return Poly::constant(1);
    return Poly::variable(cvar(i));
}

std::map<std::pair<int, int>, Poly> cpq_memo;

} // namespace

Poly af_c_pq(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = cpq_memo.find(key);
    if (it != cpq_memo.end()) return it->second;
    Poly out;
    for (int b = 0; b <= q; ++b)
        for (int a = 0; a <= b; ++a) {
            Int coef = binom(b, a) + binom(b - 1, a);
            if (coef == 0) continue;
            if (b % 2 == 1) coef = -coef;
            Poly term = Poly::constant(coef) * Poly::variable(zvar()).pow(a) *
                        c_gen(p + b - a) * c_gen(q - b);
            out += term;
        }
    cpq_memo.emplace(key, out);
    return out;
}

Poly af_sigma(const StrictPartition& la) {
    if (la.length() == 0) return Poly::constant(1);
    std::vector<int> parts = la.parts;
    if (parts.size() % 2 == 1) parts.push_back(0);
    size_t n = parts.size();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            m[i][j] = af_c_pq(parts[i], parts[j]);
            m[j][i] = -m[i][j];
        }
    return pfaffian(m);
}

int weighted_degree(const Mono& m) {
    int d = 0;
    for (auto& [v, e] : m.pows) {
        if (v.fam == Fam::Z)
            d += e;
        else if (v.fam == Fam::C)
            d += e * v.idx;
        else
            throw std::invalid_argument("weighted degree defined on z, c variables only");
    }
    return d;
}

std::vector<Mono> monomials_of_wdegree(int d) {
    std::vector<Mono> out;
    // z^a times a partition of d-a into c indices
    for (int a = 0; a <= d; ++a) {
        std::vector<std::pair<int, int>> cpart; // (index, multiplicity), decreasing indices
        std::function<void(int, int)> rec = [&](int rem, int maxi) {
            if (rem == 0) {
                Mono m;
                if (a > 0) m.pows.push_back({zvar(), a});
                for (auto it = cpart.rbegin(); it != cpart.rend(); ++it)
                    m.pows.push_back({cvar(it->first), it->second});
                out.push_back(std::move(m));
                return;
            }
            for (int i = std::min(rem, maxi); i >= 1; --i)
                for (int mult = 1; i * mult <= rem; ++mult) {
                    cpart.push_back({i, mult});
                    rec(rem - i * mult, i - 1);
                    cpart.pop_back();
                }
        };
        rec(d - a, d - a);
    }
    return out;
}

namespace {

struct SliceSolver {
    int d;
    std::vector<Mono> monos;
    std::map<Mono, int, MonoOrder> index;
    std::vector<StrictPartition> sigmas;
    size_t n_ideal = 0;
    size_t rank = 0;
    std::vector<long> pivot_of_col;
    // recorded row operations, replayed on each right-hand side:
    // kind 0: swap(r1, r2); kind 1: b[r1] *= f; kind 2: b[r1] -= f * b[r2]
    struct Op {
        int kind;
        size_t r1, r2;
        Rat f;
    };
    std::vector<Op> ops;

    explicit SliceSolver(int degree) : d(degree) {
        monos = monomials_of_wdegree(d);
        for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], static_cast<int>(i));
        auto vec_of = [&](const Poly& p) {
            std::vector<Rat> v(monos.size(), 0);
            for (auto& [m, c] : p.terms()) {
                auto it = index.find(m);
                if (it == index.end())
                    throw std::runtime_error("monomial outside the degree slice");
                v[it->second] = Rat(c);
            }
            return v;
        };
        std::vector<std::vector<Rat>> columns;
        for (int p = 1; 2 * p <= d; ++p) {
            Poly rel = af_c_pq(p, p);
            for (auto& m : monomials_of_wdegree(d - 2 * p))
                columns.push_back(vec_of(Poly::monomial(m, 1) * rel));
        }
        n_ideal = columns.size();
        std::function<void(int, int, std::vector<int>&)> strict_rec = [&](int rem, int maxp,
                                                                          std::vector<int>& cur) {
            if (rem == 0) {
                sigmas.emplace_back(StrictPartition(cur));
                return;
            }
            for (int v = std::min(rem, maxp); v >= 1; --v) {
                cur.push_back(v);
                strict_rec(rem - v, v - 1, cur);
                cur.pop_back();
            }
        };
        for (int s = 0; s <= d; ++s) {
            std::vector<int> cur;
            strict_rec(s, s, cur);
        }
        for (auto& nu : sigmas)
            columns.push_back(
                vec_of(Poly::variable(zvar()).pow(d - nu.size()) * af_sigma(nu)));

        size_t rows = monos.size(), cols = columns.size();
        std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols, 0));
        for (size_t c = 0; c < cols; ++c)
            for (size_t r = 0; r < rows; ++r) a[r][c] = columns[c][r];
        pivot_of_col.assign(cols, -1);
        size_t row = 0;
        for (size_t col = 0; col < cols && row < rows; ++col) {
            size_t pr = row;
            while (pr < rows && a[pr][col] == 0) ++pr;
            if (pr == rows) continue;
            if (pr != row) {
                std::swap(a[row], a[pr]);
                ops.push_back({0, row, pr, Rat(0)});
            }
            Rat inv = a[row][col];
            if (inv != 1) {
                for (size_t cc = col; cc < cols; ++cc) a[row][cc] /= inv;
                ops.push_back({1, row, 0, Rat(1) / inv});
            }
            for (size_t rr = 0; rr < rows; ++rr) {
                if (rr == row || a[rr][col] == 0) continue;
                Rat f = a[rr][col];
                for (size_t cc = col; cc < cols; ++cc) a[rr][cc] -= f * a[row][cc];
                ops.push_back({2, rr, row, f});
            }
            pivot_of_col[col] = static_cast<long>(row);
            ++row;
        }
        rank = row;
        // sigma images must be independent modulo the ideal slice
        for (size_t c = n_ideal; c < cols; ++c)
            if (pivot_of_col[c] < 0)
                throw std::runtime_error("sigma images are dependent modulo the ideal slice");
    }

    // solve [ideal | sigma] x = target with free ideal coordinates zero;
    // returns the sigma coordinates
    std::vector<Rat> solve(const Poly& target) const {
        std::vector<Rat> b(monos.size(), 0);
        for (auto& [m, coef] : target.terms()) {
            auto it = index.find(m);
            if (it == index.end()) throw std::runtime_error("target outside the degree slice");
            b[it->second] = Rat(coef);
        }
        for (auto& op : ops) {
            if (op.kind == 0)
                std::swap(b[op.r1], b[op.r2]);
            else if (op.kind == 1)
                b[op.r1] *= op.f;
            else
                b[op.r1] -= op.f * b[op.r2];
        }
        for (size_t rr = rank; rr < b.size(); ++rr)
            if (b[rr] != 0) throw std::runtime_error("target not in ideal + sigma span");
        std::vector<Rat> x(sigmas.size(), 0);
        for (size_t i = 0; i < sigmas.size(); ++i) x[i] = b[pivot_of_col[n_ideal + i]];
        return x;
    }
};

std::map<int, SliceSolver>& solver_cache() {
    static std::map<int, SliceSolver> cache;
    return cache;
}

const SliceSolver& solver_for(int d) {
    auto& cache = solver_cache();
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, SliceSolver(d)).first;
    return it->second;
}

} // namespace

std::map<StrictPartition, AFCoeff> af_expand_product(const StrictPartition& la,
                                                     const StrictPartition& mu) {
    int d = la.size() + mu.size();
    const SliceSolver& solver = solver_for(d);
    Poly target = af_sigma(la) * af_sigma(mu);
    auto coords = solver.solve(target);
    std::map<StrictPartition, AFCoeff> out;
    for (size_t i = 0; i < solver.sigmas.size(); ++i) {
        if (coords[i] == 0) continue;
        if (coords[i].get_den() != 1)
            throw std::runtime_error("non-integral sigma coordinate"); // basis over Z[z]
        out[solver.sigmas[i]] = {coords[i].get_num(),
                                 static_cast<long>(d - solver.sigmas[i].size())};
    }
    return out;
}

Rat frak_d_diagonal(const StrictPartition& la, const StrictPartition& mu) {
    auto row = af_expand_product(la, mu);
    auto it = row.find(la);
    Int coeff = it == row.end() ? Int(0) : it->second.coeff;
    return Rat(coeff) * pow2(mu.size() - mu.length());
}

Rat eyd_shortcut(const StrictPartition& la, const StrictPartition& mu) {
    long count = static_cast<long>(eyd_enumerate(staircase(la.length()), mu).size());
    return Rat(count) * pow2(mu.size() - mu.length());
}

ScanReport compare_D(int n) {
    ScanReport rep;
    rep.name = "product-ring-vs-tableaux-n" + std::to_string(n);
    auto shapes = strict_partitions_in(staircase(n));
    long truncated = 0;
    for (auto& la : shapes)
        for (auto& mu : shapes) {
            auto ring = af_expand_product(la, mu);
            auto tabs = star(la, mu, n);
            for (auto& nu : shapes) {
                auto rit = ring.find(nu);
                auto tit = tabs.find(nu);
                Rat ring_c = rit == ring.end() ? Rat(0) : Rat(rit->second.coeff);
                long ring_z = rit == ring.end() ? 0 : rit->second.zpow;
                Rat tab_c = tit == tabs.end() ? Rat(0) : tit->second.scale();
                long tab_z = tit == tabs.end() ? 0 : tit->second.Delta;
                ++rep.checked;
                bool same = ring_c == tab_c && (ring_c == 0 || ring_z == tab_z);
                if (!same)
                    rep.items.push_back(
                        {"(" + la.str() + ";" + mu.str() + ";" + nu.str() + ")",
                         ring_c.get_str() + "*z^" + std::to_string(ring_z),
                         tab_c.get_str() + "*z^" + std::to_string(tab_z), false});
            }
            for (auto& [nu, c] : ring)
                if (!contains(nu, staircase(n))) ++truncated;
        }
    rep.notes.push_back(std::to_string(truncated) +
                        " ring terms fall outside the staircase and are truncated");
    return rep;
}

void af_convention_check() {
    for (int p = 1; p <= 4; ++p)
        if (af_c_pq(p, 0) != c_gen(p))
            throw std::runtime_error("c_{p,0} convention broken");
    Poly c21_z0 = af_c_pq(2, 1).substitute({{zvar(), Poly()}});
    Poly expect = c_gen(2) * c_gen(1) - Int(2) * c_gen(3);
    if (c21_z0 != expect) throw std::runtime_error("c_{2,1} at z=0 convention broken");
    auto row = af_expand_product(StrictPartition{1}, StrictPartition{1});
    AFCoeff one = row[StrictPartition{1}], two = row[StrictPartition{2}];
    if (!(one.coeff == 1 && one.zpow == 1 && two.coeff == 2 && two.zpow == 0))
        throw std::runtime_error("sigma_1^2 expansion convention broken");
}

} // namespace schubert
