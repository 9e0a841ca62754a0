"""Smoke test for the asgenus extension module.

Build and install first, e.g. `maturin develop --release` from crates/py,
then run `python python/smoke_test.py`.
"""

import asgenus


def main():
    f2 = asgenus.Field("2")
    assert (f2.p, f2.n, f2.q) == (2, 1, 2)
    assert f2.parse("(t^3+1)/t") == f2.parse("t^2 + 1/t")
    assert f2.factor("t^3 + t") == [("t", 1), ("t + 1", 2)]

    norm = asgenus.normalize(f2, "1/t^2")
    assert norm["parts"] == [("t", 1, "1")]
    assert norm["witness"] == "1/t"
    assert norm["classification"] == "real"

    for place in ["t + 1", "t^2 + t + 1"]:
        assert asgenus.hasse_symbol(f2, "1/t", place) == 1
        assert asgenus.hasse_symbol_powersum(f2, "1/t", place) == 1
        assert not asgenus.splits_completely(f2, "1/t", place)
    assert asgenus.splits_completely(f2, "1/(t+1)", "t^3 + t + 1")

    assert asgenus.redei_matrix(f2, "1/(t^2+t)") == (["t", "t + 1"], [[1, 1], [1, 1]])
    assert asgenus.lambdas(f2, "1/(t^2+t)") == (1, 1, 0)
    assert asgenus.lambdas(f2, "1/t + t") == (1, 0, 1)

    assert asgenus.genus(f2, "1/t + t") == 1
    assert asgenus.point_counts(f2, "1/t + t", 2) == [4, 8]
    assert asgenus.l_polynomial(f2, "1/t + t") == [1, 1, 2]
    assert asgenus.class_number(f2, "1/t + t") == 4

    report = asgenus.analyze("2", "1/t + t", zeta=True)
    assert report["schema"] == "as-genus/1"
    assert report["zeta"]["divisibility"]["pass"] is True

    f4 = asgenus.Field("4")
    assert f4.modulus == [1, 1, 1]
    try:
        asgenus.normalize(f4, "g")
    except asgenus.AsGenusError as e:
        assert "not geometric" in str(e)
    else:
        raise AssertionError("expected a non-geometric error")

    print("asgenus smoke test passed")


if __name__ == "__main__":
    main()
