// Acceptance suite: one line per criterion, exact checks at desk scale.
// Exit status is the number of failing criteria.

#include "schubert/afring.hpp"
#include "schubert/parallel.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>

using namespace schubert;

namespace {

struct Criterion {
    int id;
    std::string what;
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

std::vector<Criterion> results;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(Criterion& c, const Timer& t) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.what << " ("
              << std::fixed;
    std::cout.precision(1);
    std::cout << t.secs() << "s)\n";
    for (auto& n : c.notes) std::cout << "       - " << n << "\n";
    std::cout.flush();
    results.push_back(c);
}

// full table of shifted edge labeled counts inside rho_n
struct DTable {
    int n;
    std::vector<StrictPartition> shapes;
    std::map<std::string, long> d; // "la|mu|nu" -> count

    long get(const StrictPartition& la, const StrictPartition& mu,
             const StrictPartition& nu) const {
        auto it = d.find(la.str() + "|" + mu.str() + "|" + nu.str());
        return it == d.end() ? 0 : it->second;
    }
};

bool superstandard_boxes(const ShTab& t) {
    int k = 0;
    for (int r = 1; r <= t.outer.length(); ++r)
        for (int c = r; c <= t.outer.part(r) + r - 1; ++c)
            if (t.box_at(r, c) != ++k) return false;
    return true;
}

DTable build_d_table(int n, int threads) {
    DTable table;
    table.n = n;
    table.shapes = strict_partitions_in(staircase(n));
    struct Task {
        StrictPartition la, nu;
        int N;
    };
    std::vector<Task> tasks;
    for (auto& la : table.shapes)
        for (auto& nu : table.shapes) {
            if (!contains(la, nu)) continue;
            int boxes = nu.size() - la.size();
            for (int N = boxes; N <= n * (n + 1) / 2; ++N) tasks.push_back({la, nu, N});
        }
    std::vector<std::map<std::string, long>> slot(tasks.size());
    parallel_for(tasks.size(), threads, [&](size_t i) {
        auto& [la, nu, N] = tasks[i];
        for_each_sh_eqsyt(nu, la, N, [&](const ShTab& t) {
            ShTab r = sh_rectify(t, CornerPolicy::Southmost);
            bool clean = r.inner.length() == 0;
            for (auto& e : r.dedge) clean = clean && e.empty();
            if (clean && superstandard_boxes(r) && r.outer.size() == N)
                slot[i][la.str() + "|" + r.outer.str() + "|" + nu.str()]++;
            return false;
        });
    });
    for (auto& m : slot)
        for (auto& [k, v] : m) table.d[k] += v;
    return table;
}

const std::map<std::string, std::string>& table2_rows() {
    static const std::map<std::string, std::string> rows = {
        {"[1]|[1]", "z[1]+2[2]"},
        {"[1]|[2]", "z[2]+[2,1]+2[3]"},
        {"[1]|[2,1]", "2z[2,1]+2[3,1]"},
        {"[1]|[3]", "z[3]+[3,1]"},
        {"[1]|[3,1]", "2z[3,1]+2[3,2]"},
        {"[1]|[3,2]", "2z[3,2]+[3,2,1]"},
        {"[1]|[3,2,1]", "3z[3,2,1]"},
        {"[2]|[2]", "z[2,1]+z[3]+2[3,1]"},
        {"[2]|[2,1]", "z^2[2,1]+3z[3,1]+2[3,2]"},
        {"[2]|[3]", "z[3,1]+[3,2]"},
        {"[2]|[3,1]", "z^2[3,1]+3z[3,2]+[3,2,1]"},
        {"[2]|[3,2]", "z^2[3,2]+2z[3,2,1]"},
        {"[2]|[3,2,1]", "3z^2[3,2,1]"},
        {"[2,1]|[2,1]", "z^3[2,1]+3z^2[3,1]+6z[3,2]"},
        {"[2,1]|[3]", "z^2[3,1]+z[3,2]+[3,2,1]"},
        {"[2,1]|[3,1]", "z^3[3,1]+3z^2[3,2]+3z[3,2,1]"},
        {"[2,1]|[3,2]", "z^3[3,2]+3z^2[3,2,1]"},
        {"[2,1]|[3,2,1]", "4z^3[3,2,1]"},
        {"[3]|[3]", "z[3,2]"},
        {"[3]|[3,1]", "z^2[3,2]+z[3,2,1]"},
        {"[3]|[3,2]", "z^2[3,2,1]"},
        {"[3]|[3,2,1]", "z^3[3,2,1]"},
        {"[3,1]|[3,1]", "z^3[3,2]+3z^2[3,2,1]"},
        {"[3,1]|[3,2]", "2z^3[3,2,1]"},
        {"[3,1]|[3,2,1]", "2z^4[3,2,1]"},
        {"[3,2]|[3,2]", "z^4[3,2,1]"},
        {"[3,2]|[3,2,1]", "z^5[3,2,1]"},
        {"[3,2,1]|[3,2,1]", "z^6[3,2,1]"},
    };
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string g_data_dir = "data";

void criterion1() {
    Timer t;
    Criterion c{1, "star products for the rank-3 staircase match all 28 fixture rows"};
    auto& expect = table2_rows();
    long matched = 0;
    for (auto& [key, product] : expect) {
        auto bar = key.find('|');
        StrictPartition la = StrictPartition::parse(key.substr(1, bar - 2));
        StrictPartition mu = StrictPartition::parse(key.substr(bar + 2, key.size() - bar - 3));
        std::string got = star_row_str(star(la, mu, 3));
        if (got != product)
            c.fail(key + " computed " + got + " expected " + product);
        else
            ++matched;
    }
    c.require(matched == 28, "expected 28 rows, matched " + std::to_string(matched));
    std::string golden = read_file(g_data_dir + "/star_products_rank3.csv");
    c.require(!golden.empty(), "missing golden file star_products_rank3.csv");
    c.require(star_table_csv(3) == golden, "CSV emitter deviates from the golden file");
    report(c, t);
}

void criterion2() {
    Timer t;
    Criterion c{2, "rank-2 orthogonal/Lagrangian fixture rows satisfy the power-of-two relation"};
    auto rep = ol_fixture_checks();
    for (auto& f : rep.failures) c.fail(f);
    bool corrected = false;
    for (auto& n : rep.notes) corrected = corrected || n.find("g_1*g_2+g_2^2") != std::string::npos;
    c.require(corrected, "the misprinted ([2],[2],[2]) entry was not caught and corrected");
    std::string golden = read_file(g_data_dir + "/og_lg_products_rank2.csv");
    c.require(table1_csv() == golden, "fixture CSV deviates from the golden file");
    report(c, t);
}

void criterion3() {
    Timer t;
    Criterion c{3, "worked-example fixtures across every rule"};
    Poly expect = Poly::parse("(t_1-t_4)+(t_2-t_5)");
    c.require(eq_C({2, 2}, {2, 1}, {3, 3}, 2, EqMethod::Ejdt) == expect, "ejdt fixture");
    c.require(eq_C({2, 2}, {2, 1}, {3, 3}, 2, EqMethod::Eballot) == expect, "eballot fixture");
    c.require(eq_C({2, 2}, {2, 1}, {3, 3}, 2, EqMethod::Factorial) == expect, "factorial fixture");
    for (auto m : {LrMethod::Jdt, LrMethod::Ballot, LrMethod::Polytope})
        c.require(lr({2, 1}, {2, 1}, {3, 2, 1}, m) == 2, "classical fixture");
    for (auto m : {ShMethod::Jdt, ShMethod::Ballot})
        c.require(shifted_o(StrictPartition{3, 1}, StrictPartition{3, 1},
                            StrictPartition{4, 3, 1}, m) == 2,
                  "shifted fixture");
    c.require(d_coeff(StrictPartition{2, 1}, StrictPartition{3, 1}, StrictPartition{3, 1}) == 2,
              "edge labeled count fixture");
    c.require(D_coeff(StrictPartition{2, 1}, StrictPartition{3, 1}, StrictPartition{3, 1}).str() ==
                  "z^3",
              "z-power fixture");
    report(c, t);
}

void criterion4(int threads) {
    Timer t;
    Criterion c{4, "independent rules agree on full desk-scale scans"};
    // classical: three methods on all triples in 3x3
    {
        auto shapes = partitions_in_rectangle(3, 3);
        std::vector<std::pair<Partition, Partition>> nl;
        for (auto& nu : shapes)
            for (auto& la : shapes)
                if (contains(la, nu)) nl.push_back({nu, la});
        std::mutex guard;
        parallel_for(nl.size(), threads, [&](size_t i) {
            auto& [nu, la] = nl[i];
            std::map<std::string, long> jdt_counts;
            for_each_syt(nu, la, [&](const EqTab& tab) {
                EqTab r = eq_rectify(tab, CornerPolicy::Eastmost);
                if (r.edge.empty()) {
                    EqTab s = superstandard(r.outer);
                    if (r.box == s.box) jdt_counts[r.outer.str()]++;
                }
                return false;
            });
            for (auto& mu : shapes) {
                if (mu.size() != nu.size() - la.size()) continue;
                long viaj = jdt_counts.count(mu.str()) ? jdt_counts[mu.str()] : 0;
                long viab = lr(la, mu, nu, LrMethod::Ballot);
                long viap = lr(la, mu, nu, LrMethod::Polytope);
                if (viaj != viab || viab != viap) {
                    std::lock_guard<std::mutex> lock(guard);
                    c.fail("classical methods disagree at (" + la.str() + ";" + mu.str() + ";" +
                           nu.str() + "): " + std::to_string(viaj) + "/" + std::to_string(viab) +
                           "/" + std::to_string(viap));
                }
            }
        });
    }
    // equivariant: three methods on all triples in 2x3
    {
        auto shapes = partitions_in_rectangle(2, 3);
        std::vector<std::pair<Partition, Partition>> pairs;
        for (auto& la : shapes)
            for (auto& mu : shapes) pairs.push_back({la, mu});
        std::mutex guard;
        parallel_for(pairs.size(), threads, [&](size_t i) {
            auto& [la, mu] = pairs[i];
            auto table = eq_C_factorial_table(la, mu, 2);
            for (auto& nu : shapes) {
                Poly viaf = table.count(nu) ? table[nu] : Poly();
                Poly viaj = eq_C(la, mu, nu, 2, EqMethod::Ejdt);
                Poly viab = eq_C(la, mu, nu, 2, EqMethod::Eballot);
                if (!(viaf == viaj && viaj == viab)) {
                    std::lock_guard<std::mutex> lock(guard);
                    c.fail("equivariant methods disagree at (" + la.str() + ";" + mu.str() +
                           ";" + nu.str() + ")");
                }
            }
        });
    }
    // shifted: two methods on all strict triples in rho_4
    {
        auto shapes = strict_partitions_in(staircase(4));
        std::vector<std::pair<StrictPartition, StrictPartition>> nl;
        for (auto& nu : shapes)
            for (auto& la : shapes)
                if (contains(la, nu)) nl.push_back({nu, la});
        std::mutex guard;
        parallel_for(nl.size(), threads, [&](size_t i) {
            auto& [nu, la] = nl[i];
            std::map<std::string, long> jdt_counts;
            for_each_shsyt(nu, la, [&](const ShTab& tab) {
                ShTab r = sh_rectify(tab, CornerPolicy::Southmost);
                if (superstandard_boxes(r)) jdt_counts[r.outer.str()]++;
                return false;
            });
            for (auto& mu : shapes) {
                if (mu.size() != nu.size() - la.size()) continue;
                long viaj = jdt_counts.count(mu.str()) ? jdt_counts[mu.str()] : 0;
                long viab = shifted_o(la, mu, nu, ShMethod::Ballot);
                if (viaj != viab) {
                    std::lock_guard<std::mutex> lock(guard);
                    c.fail("shifted methods disagree at (" + la.str() + ";" + mu.str() + ";" +
                           nu.str() + "): " + std::to_string(viaj) + " vs " +
                           std::to_string(viab));
                }
            }
        });
    }
    report(c, t);
}

void criterion5() {
    Timer t;
    Criterion c{5, "every equivariant coefficient in 2x3 is beta-positive of the stated degree"};
    auto shapes = partitions_in_rectangle(2, 3);
    long checked = 0;
    for (auto& la : shapes)
        for (auto& mu : shapes) {
            auto table = eq_C_factorial_table(la, mu, 2);
            for (auto& [nu, poly] : table) {
                if (nu.length() > 2 || nu.part(1) > 3) continue;
                Poly b = t_to_beta(poly);
                ++checked;
                if (!nonneg_coeffs(b))
                    c.fail("negative beta coefficient at (" + la.str() + ";" + mu.str() + ";" +
                           nu.str() + ")");
                if (poly.degree() != la.size() + mu.size() - nu.size())
                    c.fail("degree mismatch at (" + la.str() + ";" + mu.str() + ";" + nu.str() +
                           ")");
            }
        }
    c.require(checked > 0, "no coefficients checked");
    c.notes.push_back(std::to_string(checked) + " nonzero coefficients checked");
    report(c, t);
}

void criterion6(const DTable& d4, int threads) {
    Timer t;
    Criterion c{6, "star product commutes (rank <= 4); growth-diagram reflection (rank <= 3)"};
    for (auto& la : d4.shapes)
        for (auto& mu : d4.shapes)
            for (auto& nu : d4.shapes)
                if (d4.get(la, mu, nu) != d4.get(mu, la, nu))
                    c.fail("commutativity fails at (" + la.str() + ";" + mu.str() + ";" +
                           nu.str() + ")");
    auto shapes3 = strict_partitions_in(staircase(3));
    std::vector<std::array<StrictPartition, 3>> trips;
    for (auto& la : shapes3)
        for (auto& mu : shapes3)
            for (auto& nu : shapes3) trips.push_back({la, mu, nu});
    std::mutex guard;
    parallel_for(trips.size(), threads, [&](size_t i) {
        auto& [la, mu, nu] = trips[i];
        long f_count = 0;
        ShTab target = superstandard_shifted(mu);
        for_each_sh_eqsyt(nu, la, mu.size(), [&](const ShTab& tab) {
            if (rectifies_to(sh_rectify(tab, CornerPolicy::Southmost), target)) {
                ++f_count;
                Growth g = rect_diagram(tab, mu.size());
                std::string err = validate_growth(g);
                if (!err.empty()) {
                    std::lock_guard<std::mutex> lock(guard);
                    c.fail("rectification diagram invalid at (" + la.str() + ";" + mu.str() +
                           ";" + nu.str() + "): " + err);
                }
            }
            return false;
        });
        auto growths = enumerate_growth(la, mu, nu, 3);
        if (static_cast<long>(growths.size()) != f_count) {
            std::lock_guard<std::mutex> lock(guard);
            c.fail("growth count mismatch at (" + la.str() + ";" + mu.str() + ";" + nu.str() +
                   "): " + std::to_string(growths.size()) + " vs " + std::to_string(f_count));
        }
        for (auto& g : growths) {
            Growth r = reflect(g);
            if (!validate_growth(r).empty() || !(reflect(r) == g)) {
                std::lock_guard<std::mutex> lock(guard);
                c.fail("reflection fails at (" + la.str() + ";" + mu.str() + ";" + nu.str() + ")");
            }
        }
    });
    report(c, t);
}

void criterion7(const DTable& d4, const DTable& d3) {
    Timer t;
    Criterion c{7, "conjecture scans: integrality, associativity, ring comparison, SNP, Monical"};
    for (auto& [key, count] : d4.d) {
        auto p1 = key.find('|'), p2 = key.rfind('|');
        StrictPartition la = StrictPartition::parse(key.substr(0, p1));
        StrictPartition mu = StrictPartition::parse(key.substr(p1 + 1, p2 - p1 - 1));
        StrictPartition nu = StrictPartition::parse(key.substr(p2 + 1));
        DCoeff D{count, la.length() + mu.length() - nu.length(),
                 la.size() + mu.size() - nu.size()};
        if (!D.integral()) c.fail("non-integral star coefficient at (" + key + ")");
    }
    {
        using Elt = std::map<std::string, std::map<long, Rat>>; // nu -> zpow -> coeff
        auto clean = [](Elt& e) {
            for (auto it = e.begin(); it != e.end();) {
                for (auto jt = it->second.begin(); jt != it->second.end();)
                    jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
                it = it->second.empty() ? e.erase(it) : std::next(it);
            }
        };
        auto mult = [&](const Elt& a, const StrictPartition& mu) {
            Elt out;
            for (auto& [lst, zc] : a) {
                StrictPartition la = StrictPartition::parse(lst);
                for (auto& nu : d3.shapes) {
                    long dd = d3.get(la, mu, nu);
                    if (dd == 0) continue;
                    DCoeff D{dd, la.length() + mu.length() - nu.length(),
                             la.size() + mu.size() - nu.size()};
                    for (auto& [zp, co] : zc) out[nu.str()][zp + D.Delta] += co * D.scale();
                }
            }
            clean(out);
            return out;
        };
        for (auto& la : d3.shapes)
            for (auto& mu : d3.shapes)
                for (auto& nu : d3.shapes) {
                    Elt unit_la{{la.str(), {{0, Rat(1)}}}};
                    Elt lhs = mult(mult(unit_la, mu), nu);
                    Elt mn = mult(Elt{{mu.str(), {{0, Rat(1)}}}}, nu);
                    Elt rhs;
                    for (auto& [wst, zc] : mn) {
                        StrictPartition w = StrictPartition::parse(wst);
                        for (auto& ka : d3.shapes) {
                            long dd = d3.get(la, w, ka);
                            if (dd == 0) continue;
                            DCoeff D{dd, la.length() + w.length() - ka.length(),
                                     la.size() + w.size() - ka.size()};
                            for (auto& [zp, co] : zc)
                                rhs[ka.str()][zp + D.Delta] += co * D.scale();
                        }
                    }
                    clean(rhs);
                    if (!(lhs == rhs))
                        c.fail("associativity fails at (" + la.str() + ";" + mu.str() + ";" +
                               nu.str() + ")");
                }
    }
    {
        auto rep = compare_D(3);
        for (auto& item : rep.items)
            c.fail("ring/tableau mismatch " + item.triple + ": " + item.verdict_a + " vs " +
                   item.verdict_b);
    }
    {
        auto rep = snp_scan(2, 3);
        for (auto& item : rep.items) c.fail("SNP fails at " + item.triple);
        c.notes.push_back("SNP verified for " + std::to_string(rep.checked) +
                          " nonzero coefficients in 2x3");
    }
    for (int n = 2; n <= 3; ++n) {
        auto rep = monical_scan(n);
        for (auto& item : rep.items) c.fail("Monical violation at " + item.triple);
        for (auto& note : rep.notes)
            c.notes.push_back("monical n=" + std::to_string(n) + ": " + note);
    }
    report(c, t);
}

void criterion8(const DTable& d4) {
    Timer t;
    Criterion c{8, "closed forms: hook counts, staircase powers of two, slide-generated sets"};
    for (auto& la : d4.shapes) {
        if (la.length() == 0) continue;
        for (int p = 1; p <= 4; ++p) {
            if (!contains(StrictPartition{p}, la)) continue;
            Int expect = binom(la.length(), p) * int_pow(2, static_cast<unsigned long>(p - 1));
            if (Int(d4.get(la, StrictPartition{p}, la)) != expect)
                c.fail("hook count fails at la=" + la.str() + " p=" + std::to_string(p));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        long dn = n == 4 ? d4.get(staircase(4), staircase(4), staircase(4))
                         : d_coeff(staircase(n), staircase(n), staircase(n));
        if (Int(dn) != int_pow(2, static_cast<unsigned long>(n * (n - 1) / 2)))
            c.fail("staircase power fails at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 4; ++n) {
        auto rhs = slide_generated(n);
        long N = n * (n + 1) / 2;
        ShTab target = superstandard_shifted(staircase(n));
        long mismatching = 0, lhs_count = 0;
        std::vector<int> assign(N, 0);
        std::function<void(int)> rec = [&](int lab) {
            if (lab == N) {
                EdgeTuple e(n);
                for (int i = 0; i < N; ++i) e[assign[i]].push_back(i + 1);
                bool rect = rectifies_to(sh_rectify(tab_from_edges(n, e), CornerPolicy::Southmost),
                                         target);
                bool gen = rhs.count(e) > 0;
                if (rect != gen) ++mismatching;
                if (rect) ++lhs_count;
                return;
            }
            for (int i = 0; i < n; ++i) {
                assign[lab] = i;
                rec(lab + 1);
            }
        };
        rec(0);
        if (mismatching != 0)
            c.fail("slide-generated set differs from the rectifying set at n=" +
                   std::to_string(n) + " (" + std::to_string(mismatching) + " tableaux)");
        if (lhs_count != (1L << (n * (n - 1) / 2)))
            c.fail("rectifying-set size is not 2^C(n,2) at n=" + std::to_string(n));
    }
    report(c, t);
}

void criterion9(int threads) {
    Timer t;
    Criterion c{9, "Horn equivalences, saturation, non-saturation, Purbhoo-Sottile"};
    {
        auto rep = classical_horn_equivalence_scan(3, 4, HornMode::Nonzero);
        for (auto& item : rep.items) c.fail("classical Horn fails at " + item.triple);
        c.notes.push_back("classical Horn (1)<=>(2): " + std::to_string(rep.checked) +
                          " size-matched triples, r <= 3, entries <= 4");
        auto repb = classical_horn_equivalence_scan(3, 4, HornMode::Belkale);
        for (auto& item : repb.items) c.fail("minimal-list Horn fails at " + item.triple);
    }
    {
        auto rep = equiv_horn_equivalence_scan(3, 3, HornMode::Nonzero);
        for (auto& item : rep.items) c.fail("equivariant Horn fails at " + item.triple);
        c.notes.push_back("equivariant Horn (1)<=>(2): " + std::to_string(rep.checked) +
                          " triples, r <= 3, entries <= 3");
    }
    {
        auto rep = saturation_scan(SatKind::Classical, 3, 3, 3);
        for (auto& item : rep.items) c.fail("classical saturation fails at " + item.triple);
        auto repC = saturation_scan(SatKind::Equivariant, 2, 2, 3);
        for (auto& item : repC.items) c.fail("equivariant saturation fails at " + item.triple);
    }
    {
        bool first =
            shifted_o_nonzero(StrictPartition{2, 1}, StrictPartition{2}, StrictPartition{3, 2});
        c.require(first, "o((2,1),(2);(3,2)) vanishes unexpectedly");
        long quoted =
            shifted_o(StrictPartition{4, 2}, StrictPartition{4}, StrictPartition{6, 4},
                      ShMethod::Jdt);
        if (quoted != 0)
            c.fail("stated value o((4,2),(4);(6,4)) = 0 is not reproduced: jeu de taquin, the "
                   "ballot rule and the direct P-function product all give " +
                   std::to_string(quoted) +
                   "; non-saturation itself is verified at ((2,1),(2,1);(3,2,1)) -> doubled");
        auto rep = shifted_saturation_counterexample();
        for (auto& item : rep.items)
            c.fail("verified non-saturation counterexample broke: " + item.triple);
        for (auto& note : rep.notes) c.notes.push_back(note);
    }
    {
        if (ps_statistic(StrictPartition{6, 4, 3, 1}, Partition{3, 2, 1}, 6, 3) != 3)
            c.fail("crossing statistic fixture broke");
        for (int n = 2; n <= 3; ++n) {
            auto rep = purbhoo_sottile_scan(n);
            for (auto& item : rep.items)
                c.fail("Purbhoo-Sottile fails at n=" + std::to_string(n) + " " + item.triple);
        }
        auto shapes = strict_partitions_in(staircase(4));
        std::mutex guard;
        parallel_for(shapes.size(), threads, [&](size_t i) {
            auto& la = shapes[i];
            for (auto& mu : shapes)
                for (auto& nu : shapes) {
                    bool direct = shifted_o_nonzero(la, mu, shifted_complement(nu, 4));
                    bool ineq = purbhoo_sottile_inequalities(la, mu, nu, 4);
                    if (direct != ineq) {
                        std::lock_guard<std::mutex> lock(guard);
                        c.fail("Purbhoo-Sottile fails at n=4 (" + la.str() + ";" + mu.str() +
                               ";" + nu.str() + ")");
                    }
                }
        });
    }
    report(c, t);
}

void criterion10() {
    Timer t;
    Criterion c{10, "Schur P/Q fixtures, Pfaffian identity, Q-side constants"};
    c.require(schur_P(StrictPartition{2, 1}, 3) ==
                  Poly::parse("x_1^2*x_2+x_1*x_2^2+x_1^2*x_3+2x_1*x_2*x_3+x_1*x_3^2+x_2^2*x_3+"
                              "x_2*x_3^2"),
              "P_(2,1) monomials in three variables");
    for (auto& la : strict_partitions_in(staircase(3))) {
        Poly q = schur_Q(la, 4), p = schur_P(la, 4);
        if (!(q == int_pow(2, static_cast<unsigned long>(la.length())) * p))
            c.fail("Q != 2^l P at " + la.str());
        if (la.length() > 0 && !pfaffian_check(la, 4))
            c.fail("Pfaffian identity fails at " + la.str());
    }
    {
        int N = 4;
        auto shapes = strict_partitions_in(staircase(3));
        auto all = strict_partitions_in(StrictPartition{12, 11, 10, 9});
        for (auto& la : shapes)
            for (auto& mu : shapes) {
                if (la.length() == 0 || mu.length() == 0) continue;
                int d = la.size() + mu.size();
                Poly prod = schur_Q(la, N) * schur_Q(mu, N);
                std::vector<StrictPartition> sized;
                for (auto& s : all)
                    if (s.size() == d && s.length() <= N) sized.push_back(s);
                std::vector<Poly> basis;
                for (auto& s : sized) basis.push_back(schur_Q(s, N));
                auto coeffs = expand_in_basis(prod, basis, {});
                for (size_t i = 0; i < sized.size(); ++i) {
                    long o = shifted_o(la, mu, sized[i], ShMethod::Ballot);
                    Int expect = l_from_o(la, mu, sized[i], o);
                    if (coeffs[i].is_zero() ? expect != 0 : coeffs[i] != Poly::constant(expect))
                        c.fail("Q-side constant mismatch at (" + la.str() + ";" + mu.str() + ";" +
                               sized[i].str() + ")");
                }
            }
    }
    {
        auto shapes = strict_partitions_in(staircase(4));
        for (auto& la : shapes)
            for (auto& mu : shapes)
                for (auto& nu : shapes) {
                    if (la.size() + mu.size() != nu.size()) continue;
                    if (!shifted_o_nonzero(la, mu, nu)) continue;
                    if (nu.length() > la.length() + mu.length())
                        c.fail("negative two-power at (" + la.str() + ";" + mu.str() + ";" +
                               nu.str() + ")");
                }
    }
    report(c, t);
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2)
        if (std::string(argv[i]) == "--data") g_data_dir = argv[i + 1];
    int threads = default_threads();
    std::cout << "acceptance suite (threads=" << threads << ")\n";
    af_convention_check();
    factorial_calibration_check();

    Timer total;
    criterion1();
    criterion2();
    criterion3();
    criterion4(threads);
    criterion5();
    Timer dtimer;
    DTable d4 = build_d_table(4, threads);
    DTable d3 = build_d_table(3, 1);
    std::cout << "       (shifted edge labeled tables for ranks 3,4 built in " << std::fixed;
    std::cout.precision(1);
    std::cout << dtimer.secs() << "s)\n";
    criterion6(d4, threads);
    criterion7(d4, d3);
    criterion8(d4);
    criterion9(threads);
    criterion10();

    int failed = 0;
    for (auto& c : results)
        if (!c.pass) ++failed;
    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL")
              << " (" << total.secs() << "s total)\n";
    return failed;
}
