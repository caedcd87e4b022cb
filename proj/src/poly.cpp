#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace schubert {

const char* fam_name(Fam f) {
    switch (f) {
        case Fam::T: return "t";
        case Fam::Beta: return "b";
        case Fam::Gamma: return "g";
        case Fam::Alpha: return "a";
        case Fam::X: return "x";
        case Fam::Y: return "y";
        case Fam::Z: return "z";
        case Fam::C: return "c";
    }
    return "?";
}

std::string var_name(Var v) {
    if (v.fam == Fam::Z) return "z";
    return std::string(fam_name(v.fam)) + "_" + std::to_string(v.idx);
}

int Mono::degree() const {
    int d = 0;
    for (auto& [v, e] : pows) d += e;
    return d;
}

int Mono::exponent(Var v) const {
    for (auto& [w, e] : pows)
        if (w == v) return e;
    return 0;
}

Mono Mono::times(const Mono& o) const {
    Mono r;
    size_t i = 0, j = 0;
    while (i < pows.size() || j < o.pows.size()) {
        if (j == o.pows.size() || (i < pows.size() && pows[i].first < o.pows[j].first)) {
            r.pows.push_back(pows[i++]);
        } else if (i == pows.size() || o.pows[j].first < pows[i].first) {
            r.pows.push_back(o.pows[j++]);
        } else {
            r.pows.emplace_back(pows[i].first, pows[i].second + o.pows[j].second);
            ++i, ++j;
        }
    }
    return r;
}

Mono Mono::without(Var v) const {
    Mono r;
    for (auto& p : pows)
        if (!(p.first == v)) r.pows.push_back(p);
    return r;
}

bool MonoOrder::operator()(const Mono& a, const Mono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    size_t i = 0, j = 0;
    while (i < a.pows.size() && j < b.pows.size()) {
        if (a.pows[i].first != b.pows[j].first)
            return a.pows[i].first < b.pows[j].first;
        if (a.pows[i].second != b.pows[j].second)
            return a.pows[i].second > b.pows[j].second;
        ++i, ++j;
    }
    return a.pows.size() > b.pows.size() ? false : j < b.pows.size();
}

Poly Poly::constant(Int c) {
    Poly p;
    if (c != 0) p.terms_[Mono{}] = std::move(c);
    return p;
}

Poly Poly::variable(Var v) {
    Poly p;
    p.terms_[Mono{{{v, 1}}}] = 1;
    return p;
}

Poly Poly::monomial(Mono m, Int c) {
    Poly p;
    if (c != 0) p.terms_[std::move(m)] = std::move(c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.pows.empty());
}

Int Poly::constant_term() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Int(0) : it->second;
}

int Poly::degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Int Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add_term(const Mono& m, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms())
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

Poly Poly::pow(int e) const {
    Poly r = Poly::constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::substitute(const Substitution& s) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Poly term = Poly::constant(c);
        for (auto& [v, e] : m.pows) {
            auto it = s.find(v);
            Poly base = it == s.end() ? Poly::variable(v) : it->second;
            term = term * base.pow(e);
        }
        r += term;
    }
    return r;
}

std::set<Var> Poly::variables() const {
    std::set<Var> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.pows) vs.insert(v);
    return vs;
}

int Poly::max_index(Fam f) const {
    int mx = 0;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.pows)
            if (v.fam == f) mx = std::max(mx, v.idx);
    return mx;
}

std::map<int, Poly> Poly::by_power(Var v) const {
    std::map<int, Poly> r;
    for (auto& [m, c] : terms_) r[m.exponent(v)].add_term(m.without(v), c);
    return r;
}

std::vector<std::vector<int>> Poly::support(const std::vector<Var>& vars) const {
    std::vector<std::vector<int>> pts;
    for (auto& [m, c] : terms_) {
        std::vector<int> pt(vars.size(), 0);
        for (auto& [v, e] : m.pows) {
            auto it = std::find(vars.begin(), vars.end(), v);
            if (it == vars.end())
                throw std::invalid_argument("stray variable " + var_name(v));
            pt[static_cast<size_t>(it - vars.begin())] = e;
        }
        pts.push_back(std::move(pt));
    }
    return pts;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Int a = c;
        if (a < 0) {
            os << "-";
            a = -a;
        } else if (!first) {
            os << "+";
        }
        first = false;
        bool need_star = false;
        if (a != 1 || m.pows.empty()) {
            os << a.get_str();
            need_star = true;
        }
        for (auto& [v, e] : m.pows) {
            if (need_star) os << "*";
            os << var_name(v);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

std::string Poly::json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto& [m, coef] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "{\"exponents\":{";
        for (size_t i = 0; i < m.pows.size(); ++i) {
            if (i) os << ",";
            os << "\"" << var_name(m.pows[i].first) << "\":" << m.pows[i].second;
        }
        os << "},\"coefficient\":\"" << coef.get_str() << "\"}";
    }
    os << "]";
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(i) + ": " + what);
    }

    Poly parse_sum() {
        Poly r;
        bool neg = eat('-');
        if (!neg) eat('+');
        r += parse_term() * Int(neg ? -1 : 1);
        while (true) {
            skip_ws();
            if (eat('+')) {
                r += parse_term();
            } else if (eat('-')) {
                r -= parse_term();
            } else {
                break;
            }
        }
        return r;
    }

    Poly parse_term() {
        Poly r = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                r = r * parse_factor();
                continue;
            }
            if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '(')) {
                r = r * parse_factor();
                continue;
            }
            break;
        }
        return r;
    }

    Poly parse_factor() {
        skip_ws();
        Poly base;
        if (eat('(')) {
            base = parse_sum();
            if (!eat(')')) fail("expected )");
        } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            base = Poly::constant(Int(s.substr(i, j - i)));
            i = j;
        } else if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            char f = s[i++];
            Fam fam;
            switch (f) {
                case 't': fam = Fam::T; break;
                case 'b': fam = Fam::Beta; break;
                case 'g': fam = Fam::Gamma; break;
                case 'a': fam = Fam::Alpha; break;
                case 'x': fam = Fam::X; break;
                case 'y': fam = Fam::Y; break;
                case 'z': fam = Fam::Z; break;
                case 'c': fam = Fam::C; break;
                default: fail(std::string("unknown variable family ") + f);
            }
            if (fam == Fam::Z) {
                base = Poly::variable(zvar());
            } else {
                eat('_');
                skip_ws();
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    fail("expected variable index");
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                base = Poly::variable({fam, std::stoi(s.substr(i, j - i))});
                i = j;
            }
        } else {
            fail("expected factor");
        }
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) fail("expected exponent");
            base = base.pow(std::stoi(s.substr(i, j - i)));
            i = j;
        }
        return base;
    }
};

} // namespace

Poly Poly::parse(const std::string& text) {
    Parser p(text);
    p.skip_ws();
    if (p.i == text.size()) return Poly();
    Poly r = p.parse_sum();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

Poly t_interval_to_beta(int e, int f) {
    if (e >= f) throw std::invalid_argument("t_interval_to_beta requires e < f");
    Poly r;
    for (int i = e; i < f; ++i) r += Poly::variable(bvar(i));
    return r;
}

Poly t_to_beta(const Poly& p) {
    int n = p.max_index(Fam::T);
    Substitution s;
    for (int i = 1; i < n; ++i) s[tvar(i)] = t_interval_to_beta(i, n);
    s[tvar(n)] = Poly();
    Poly b = p.substitute(s);
    Substitution back;
    for (int i = 1; i < n; ++i)
        back[bvar(i)] = Poly::variable(tvar(i)) - Poly::variable(tvar(i + 1));
    Substitution drop; // the round trip reproduces p with t_n eliminated by shift
    for (int i = 1; i <= n; ++i)
        drop[tvar(i)] = Poly::variable(tvar(i)) - Poly::variable(tvar(n));
    if (b.substitute(back) != p.substitute(drop))
        throw std::invalid_argument("polynomial is not shift-invariant in t");
    return b;
}

bool nonneg_coeffs(const Poly& p) {
    for (auto& [m, c] : p.terms())
        if (c < 0) return false;
    return true;
}

namespace {

Poly pfaffian_rec(const std::vector<std::vector<Poly>>& m, std::vector<int>& idx) {
    if (idx.empty()) return Poly::constant(1);
    int first = idx[0];
    Poly r;
    for (size_t j = 1; j < idx.size(); ++j) {
        std::vector<int> rest;
        for (size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest.push_back(idx[k]);
        Poly sub = pfaffian_rec(m, rest);
        Poly term = m[first][idx[j]] * sub;
        if (j % 2 == 0) term = -term;
        r += term;
    }
    return r;
}

} // namespace

Poly pfaffian(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian requires even order");
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("pfaffian requires a square matrix");
        if (!m[i][i].is_zero()) throw std::invalid_argument("pfaffian requires zero diagonal");
        for (size_t j = i + 1; j < n; ++j)
            if (!(m[i][j] + m[j][i]).is_zero())
                throw std::invalid_argument("pfaffian requires skew symmetry");
    }
    std::vector<int> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
    return pfaffian_rec(m, idx);
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(1);
    std::function<Poly(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> Poly {
        if (rows.empty()) return Poly::constant(1);
        Poly r;
        int row = rows[0];
        std::vector<int> rrest(rows.begin() + 1, rows.end());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (m[row][cols[j]].is_zero()) continue;
            std::vector<int> crest;
            for (size_t k = 0; k < cols.size(); ++k)
                if (k != j) crest.push_back(cols[k]);
            Poly term = m[row][cols[j]] * det(rrest, crest);
            if (j % 2 == 1) term = -term;
            r += term;
        }
        return r;
    };
    std::vector<int> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    return det(all, all);
}

namespace {

// main-variable part of a monomial (families outside coeff_fams)
Mono main_part(const Mono& m, const std::set<Fam>& coeff_fams) {
    Mono r;
    for (auto& p : m.pows)
        if (!coeff_fams.count(p.first.fam)) r.pows.push_back(p);
    return r;
}

Mono coeff_part(const Mono& m, const std::set<Fam>& coeff_fams) {
    Mono r;
    for (auto& p : m.pows)
        if (coeff_fams.count(p.first.fam)) r.pows.push_back(p);
    return r;
}

} // namespace

std::vector<Poly> expand_in_basis(const Poly& target, const std::vector<Poly>& basis,
                                  const std::set<Fam>& coeff_fams) {
    MonoOrder less;
    // leading main monomial of each basis element; its full coefficient there
    // must be a constant for the peel to be exact.
    std::vector<Mono> lead(basis.size());
    std::vector<Int> lead_coeff(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) throw std::invalid_argument("zero basis element");
        bool have = false;
        Mono best;
        for (auto& [m, c] : basis[i].terms()) {
            Mono mp = main_part(m, coeff_fams);
            if (!have || less(mp, best)) {
                best = mp;
                have = true;
            }
        }
        Poly lc;
        for (auto& [m, c] : basis[i].terms())
            if (main_part(m, coeff_fams) == best) lc.add_term(coeff_part(m, coeff_fams), c);
        if (!lc.is_constant())
            throw std::invalid_argument("basis element has non-constant leading coefficient");
        for (size_t j = 0; j < i; ++j)
            if (lead[j] == best) throw std::invalid_argument("rank-deficient basis (shared leading term)");
        lead[i] = best;
        lead_coeff[i] = lc.constant_term();
    }

    std::vector<Poly> coeffs(basis.size());
    Poly residual = target;
    while (!residual.is_zero()) {
        // leading main monomial of the residual
        bool have = false;
        Mono best;
        for (auto& [m, c] : residual.terms()) {
            Mono mp = main_part(m, coeff_fams);
            if (!have || less(mp, best)) {
                best = mp;
                have = true;
            }
        }
        Poly q;
        for (auto& [m, c] : residual.terms())
            if (main_part(m, coeff_fams) == best) q.add_term(coeff_part(m, coeff_fams), c);
        size_t which = basis.size();
        for (size_t i = 0; i < basis.size(); ++i)
            if (lead[i] == best) which = i;
        if (which == basis.size())
            throw std::invalid_argument("target not in span; residual leads with " +
                                        Poly::monomial(best, 1).str());
        Poly scaled;
        for (auto& [m, c] : q.terms()) {
            if (!mpz_divisible_p(c.get_mpz_t(), lead_coeff[which].get_mpz_t()))
                throw std::invalid_argument("target not in integral span");
            scaled.add_term(m, c / lead_coeff[which]);
        }
        coeffs[which] += scaled;
        residual -= scaled * basis[which];
    }
    return coeffs;
}

std::set<std::vector<int>> newton_support(const Poly& p, const std::vector<Var>& vars) {
    auto raw = p.support(vars);
    return {raw.begin(), raw.end()};
}

// Exact feasibility of sum a_i p_i = q, sum a_i = 1, a_i >= 0, by phase-one
// simplex with Bland's rule over rationals.
bool in_convex_hull(const std::vector<int>& q, const std::vector<std::vector<int>>& pts) {
    if (pts.empty()) return false;
    for (auto& p : pts)
        if (p == q) return true;
    size_t dim = q.size();
    size_t rows = dim + 1, n = pts.size();
    // tableau: columns [a_1..a_n | art_1..art_rows | rhs], rows sign-fixed so rhs >= 0
    std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(n + rows + 1, 0));
    for (size_t r = 0; r < rows; ++r) {
        Rat rhs = r < dim ? Rat(q[r]) : Rat(1);
        int sgn = rhs < 0 ? -1 : 1;
        for (size_t c = 0; c < n; ++c)
            tab[r][c] = sgn * (r < dim ? Rat(pts[c][r]) : Rat(1));
        tab[r][n + r] = 1;
        tab[r].back() = sgn * rhs;
    }
    std::vector<size_t> basis(rows);
    for (size_t r = 0; r < rows; ++r) basis[r] = n + r;
    // phase-one objective row: reduced costs of sum-of-artificials; the basic
    // artificial columns start at zero
    std::vector<Rat> obj(n + rows + 1, 0);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < n; ++c) obj[c] += tab[r][c];
        obj[n + rows] += tab[r].back();
    }

    while (true) {
        size_t enter = n + rows;
        for (size_t c = 0; c < n + rows; ++c)
            if (obj[c] > 0) {
                enter = c;
                break; // Bland: smallest index
            }
        if (enter == n + rows) break;
        size_t leave = rows;
        Rat best;
        for (size_t r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rat ratio = tab[r].back() / tab[r][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave == rows) break; // unbounded cannot happen in phase one
        Rat piv = tab[leave][enter];
        for (auto& v : tab[leave]) v /= piv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            Rat f = tab[r][enter];
            for (size_t c = 0; c <= n + rows; ++c) tab[r][c] -= f * tab[leave][c];
        }
        Rat f = obj[enter];
        for (size_t c = 0; c <= n + rows; ++c) obj[c] -= f * tab[leave][c];
        basis[leave] = enter;
    }
    // feasible iff every artificial variable left the basis or sits at zero
    for (size_t r = 0; r < rows; ++r)
        if (basis[r] >= n && tab[r].back() != 0) return false;
    return true;
}

bool is_snp(const Poly& p, const std::vector<Var>& vars) {
    auto supp = newton_support(p, vars);
    if (supp.empty()) return true;
    size_t dim = vars.size();
    std::vector<std::vector<int>> pts(supp.begin(), supp.end());
    std::vector<int> lo(dim, INT32_MAX), hi(dim, INT32_MIN);
    int lo_sum = INT32_MAX, hi_sum = INT32_MIN;
    for (auto& pt : pts) {
        int s = 0;
        for (size_t i = 0; i < dim; ++i) {
            lo[i] = std::min(lo[i], pt[i]);
            hi[i] = std::max(hi[i], pt[i]);
            s += pt[i];
        }
        lo_sum = std::min(lo_sum, s);
        hi_sum = std::max(hi_sum, s);
    }
    std::vector<int> q(dim);
    std::function<bool(size_t, int)> scan = [&](size_t i, int sum) -> bool {
        if (i == dim) {
            if (sum < lo_sum || sum > hi_sum) return true;
            if (supp.count(q)) return true;
            return !in_convex_hull(q, pts);
        }
        for (q[i] = lo[i]; q[i] <= hi[i]; ++q[i])
            if (!scan(i + 1, sum + q[i])) return false;
        return true;
    };
    return scan(0, 0);
}

} // namespace schubert
