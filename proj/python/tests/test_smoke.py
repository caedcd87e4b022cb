"""Smoke tests for the python bindings; values mirror the C++ fixtures."""

import sys

import pyschubert as ps


def main() -> int:
    assert ps.lr("2,1", "2,1", "3,2,1") == 2
    assert ps.lr("3,2,1", "3,2,1", "4,4,3,1", method="polytope") == 3
    assert ps.lr("0", "0", "0") == 1

    c = ps.eq_lr("2,2", "2,1", "3,3", k=2)
    assert c == "t_1+t_2-t_4-t_5", c
    assert ps.eq_lr("1", "1", "1", k=2, method="factorial") == "t_2-t_3"

    assert ps.shifted_lr("3,1", "3,1", "4,3,1") == 2
    assert ps.shifted_lr("3,1", "3,1", "4,3,1", method="jdt") == 2

    assert ps.d_coeff("2,1", "3,1", "3,1") == 2
    assert ps.star_product("2,1", "2,1", n=3) == "z^3[2,1]+3z^2[3,1]+6z[3,2]"
    assert ps.star_table_csv(3).count("\n") == 29  # header + 28 rows

    assert ps.classical_nonvanishing("2,1", "2,1", "3,2,1", 3)
    assert ps.classical_nonvanishing("2,1", "2,1", "3,2,1", 3, method="horn")
    assert not ps.equiv_nonvanishing("1", "1", "0", 1, method="horn")

    assert "x_1^2*x_2" in ps.schur_p("2,1", 3)

    assert ps.compare_ring_products(2)["ok"]
    assert ps.snp_scan(2, 2)["ok"]
    assert ps.monical_scan(2)["ok"]
    assert ps.purbhoo_sottile_scan(2)["ok"]

    print("python smoke tests pass")
    return 0


if __name__ == "__main__":
    sys.exit(main())
