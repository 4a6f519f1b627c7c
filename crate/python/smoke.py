"""Smoke test for the dunkl extension module.

    pip install --no-build-isolation -e crates/python
    python python/smoke.py
"""

import json

import dunkl


def main():
    s4 = dunkl.Group("Sn:4")
    assert s4.rank == 4 and s4.degrees == [1, 2, 3, 4]
    assert s4.h_c() == "3*c"

    e4 = s4.elementary(4)
    coefs = {name: coef for _, name, coef in e4.expansion}
    assert coefs["e4"] == "1"
    assert coefs["e2^2"] == "(-4*c+1)/(48*c-20)"

    lim = s4.limit(4, "1/4")
    assert not lim.is_zero()
    try:
        s4.limit(4, "5/12")
    except ArithmeticError as err:
        assert "12*c-5" in str(err)
    else:
        raise AssertionError("expected a pole at c = 5/12")

    x1, x2 = s4.var(0), s4.var(1)
    left = s4.dunkl(0, s4.dunkl(1, x1 * x1 * x2))
    right = s4.dunkl(1, s4.dunkl(0, x1 * x1 * x2))
    assert left == right
    assert s4.pairing(x1, x1) == "-3*c+1"

    i5 = dunkl.Group("I2:5")
    b = i5.canonical([0, 2])
    assert [c for _, _, c in b.expansion] == ["1", "2/(c-1)"]
    assert i5.laplacian(b.poly).is_zero()
    terms = json.loads(b.poly.to_json())["terms"]
    assert all(len(t["exp"]) == 2 for t in terms)

    report = json.loads(dunkl.verify("gf", "I2:5", order=3))
    assert report["suite"] == "gf" and report["failures"] == []

    code, out, _ = dunkl.run_cli(["limit", "--group", "Sn:4", "--degree", "4", "--at", "5/12"])
    assert code == 4 and json.loads(out)["denominator"] == "12*c-5"

    print("smoke ok:", e4)


if __name__ == "__main__":
    main()
