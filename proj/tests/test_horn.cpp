#include "doctest.h"

#include "schubert/horn.hpp"

using namespace schubert;

TEST_CASE("horn lists") {
    CHECK(horn_list(1, HornMode::Nonzero).ineqs.empty());
    HornSystem r2 = horn_list(2, HornMode::Nonzero);
    // d = 1: tau({i}) = (i-1); witnesses are Pieri coefficients
    for (auto& iq : r2.ineqs) CHECK(iq.witness != 0);
    CHECK(!r2.ineqs.empty());
    HornSystem nz = horn_list(3, HornMode::Nonzero), bk = horn_list(3, HornMode::Belkale);
    CHECK(bk.ineqs.size() <= nz.ineqs.size());
    for (auto& iq : bk.ineqs) CHECK(iq.witness == 1);
}

TEST_CASE("classical nonvanishing, both deciders") {
    Partition la{2, 1}, mu{2, 1}, nu{3, 2, 1};
    CHECK(classical_nonvanishing(la, mu, nu, 3, DecideMethod::Direct));
    CHECK(classical_nonvanishing(la, mu, nu, 3, DecideMethod::Horn));
    CHECK_FALSE(classical_nonvanishing(Partition{1}, Partition{1}, Partition{1}, 2,
                                       DecideMethod::Horn)); // sizes differ
    CHECK_FALSE(
        classical_nonvanishing(Partition{1}, Partition{1}, Partition{}, 1, DecideMethod::Direct));
}

TEST_CASE("equivariant nonvanishing, both deciders") {
    Partition one{1};
    CHECK(equiv_nonvanishing(one, one, one, 2, DecideMethod::Direct));
    CHECK(equiv_nonvanishing(one, one, one, 2, DecideMethod::Horn));
    CHECK_FALSE(equiv_nonvanishing(one, one, Partition{}, 1, DecideMethod::Horn));
    CHECK_FALSE(equiv_nonvanishing(one, one, Partition{}, 1, DecideMethod::Direct));
    CHECK_FALSE(equiv_nonvanishing(Partition{2}, one, Partition{1, 1}, 2, DecideMethod::Direct));
}

TEST_CASE("horn equivalence scans at small rank") {
    auto c2 = classical_horn_equivalence_scan(2, 3, HornMode::Nonzero);
    CHECK(c2.ok());
    auto e2 = equiv_horn_equivalence_scan(2, 2, HornMode::Nonzero);
    CHECK(e2.ok());
    auto b2 = classical_horn_equivalence_scan(2, 3, HornMode::Belkale);
    CHECK(b2.ok());
}

TEST_CASE("saturation scans") {
    auto c = saturation_scan(SatKind::Classical, 2, 2, 3);
    CHECK(c.ok());
    auto C = saturation_scan(SatKind::Equivariant, 2, 2, 2);
    CHECK(C.ok());
    auto sh = shifted_saturation_counterexample();
    CHECK(sh.ok());
    CHECK(!sh.notes.empty());
}

TEST_CASE("semigroup scans") {
    CHECK(semigroup_scan(SemiKind::LR, 2, 2).ok());
    CHECK(semigroup_scan(SemiKind::EqLR, 2, 2).ok());
}

TEST_CASE("purbhoo-sottile") {
    // the worked statistic feeds the rank-3 inequality
    CHECK(ps_statistic(StrictPartition{6, 4, 3, 1}, Partition{3, 2, 1}, 6, 3) == 3);
    auto scan = purbhoo_sottile_scan(3);
    CHECK(scan.ok());
    CHECK(scan.checked == 8 * 8 * 8);
}

TEST_CASE("monical scan, sound direction") {
    auto m2 = monical_scan(2);
    CHECK(m2.ok());
    auto m3 = monical_scan(3);
    CHECK(m3.ok());
    CHECK(!m3.notes.empty());
}

TEST_CASE("snp scan on the 2x2 rectangle") {
    auto rep = snp_scan(2, 2);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
}

TEST_CASE("report serialization") {
    auto rep = shifted_saturation_counterexample();
    auto js = rep.json();
    CHECK(js.find("\"scan\"") != std::string::npos);
    CHECK(js.find("\"ok\":true") != std::string::npos);
}
