#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schubert/afring.hpp"

namespace py = pybind11;
using namespace schubert;

namespace {

LrMethod lr_method(const std::string& m) {
    if (m == "jdt") return LrMethod::Jdt;
    if (m == "ballot") return LrMethod::Ballot;
    if (m == "polytope") return LrMethod::Polytope;
    throw std::invalid_argument("unknown method " + m);
}

EqMethod eq_method(const std::string& m) {
    if (m == "ejdt") return EqMethod::Ejdt;
    if (m == "eballot") return EqMethod::Eballot;
    if (m == "factorial") return EqMethod::Factorial;
    throw std::invalid_argument("unknown method " + m);
}

ShMethod sh_method(const std::string& m) {
    if (m == "jdt") return ShMethod::Jdt;
    if (m == "ballot") return ShMethod::Ballot;
    throw std::invalid_argument("unknown method " + m);
}

py::dict report_dict(const ScanReport& rep) {
    py::dict d;
    d["scan"] = rep.name;
    d["checked"] = rep.checked;
    d["ok"] = rep.ok();
    py::list items;
    for (auto& it : rep.items) items.append(py::make_tuple(it.triple, it.verdict_a, it.verdict_b));
    d["disagreements"] = items;
    d["notes"] = rep.notes;
    return d;
}

} // namespace

PYBIND11_MODULE(pyschubert, m) {
    m.doc() = "exact Littlewood-Richardson calculi: classical, equivariant, shifted, and "
              "shifted edge labeled";

    m.def(
        "lr",
        [](const std::string& la, const std::string& mu, const std::string& nu,
           const std::string& method) {
            return lr(Partition::parse(la), Partition::parse(mu), Partition::parse(nu),
                      lr_method(method));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("method") = "ballot");

    m.def(
        "eq_lr",
        [](const std::string& la, const std::string& mu, const std::string& nu, int k,
           const std::string& method) {
            return eq_C(Partition::parse(la), Partition::parse(mu), Partition::parse(nu), k,
                        eq_method(method))
                .str();
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("k") = 2,
        py::arg("method") = "eballot");

    m.def(
        "shifted_lr",
        [](const std::string& la, const std::string& mu, const std::string& nu,
           const std::string& method) {
            return shifted_o(StrictPartition::parse(la), StrictPartition::parse(mu),
                             StrictPartition::parse(nu), sh_method(method));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("method") = "ballot");

    m.def(
        "d_coeff",
        [](const std::string& la, const std::string& mu, const std::string& nu) {
            return d_coeff(StrictPartition::parse(la), StrictPartition::parse(mu),
                           StrictPartition::parse(nu));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));

    m.def(
        "star_product",
        [](const std::string& la, const std::string& mu, int n) {
            return star_row_str(star(StrictPartition::parse(la), StrictPartition::parse(mu), n));
        },
        py::arg("lam"), py::arg("mu"), py::arg("n") = 3);

    m.def("star_table_csv", &star_table_csv, py::arg("n") = 3);

    m.def(
        "schur_p",
        [](const std::string& la, int nvars) {
            return schur_P(StrictPartition::parse(la), nvars).str();
        },
        py::arg("lam"), py::arg("nvars"));

    m.def(
        "classical_nonvanishing",
        [](const std::string& la, const std::string& mu, const std::string& nu, int r,
           const std::string& method) {
            return classical_nonvanishing(Partition::parse(la), Partition::parse(mu),
                                          Partition::parse(nu), r,
                                          method == "horn" ? DecideMethod::Horn
                                                           : DecideMethod::Direct);
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("r"), py::arg("method") = "direct");

    m.def(
        "equiv_nonvanishing",
        [](const std::string& la, const std::string& mu, const std::string& nu, int r,
           const std::string& method) {
            return equiv_nonvanishing(Partition::parse(la), Partition::parse(mu),
                                      Partition::parse(nu), r,
                                      method == "horn" ? DecideMethod::Horn
                                                       : DecideMethod::Direct);
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("r"), py::arg("method") = "direct");

    m.def("compare_ring_products", [](int n) { return report_dict(compare_D(n)); },
          py::arg("n") = 2);
    m.def("snp_scan", [](int k, int w) { return report_dict(snp_scan(k, w)); }, py::arg("k") = 2,
          py::arg("w") = 2);
    m.def("monical_scan", [](int n) { return report_dict(monical_scan(n)); }, py::arg("n") = 2);
    m.def("purbhoo_sottile_scan", [](int n) { return report_dict(purbhoo_sottile_scan(n)); },
          py::arg("n") = 3);
}
