"""Smoke test for the pyflagcode extension module."""

import json

import pyflagcode as fc


def main() -> None:
    assert "sec3_C" in fc.fixture_names()

    c = fc.FlagCode.fixture("sec3_C")
    assert len(c) == 3 and c.dims == [1, 2] and (c.q, c.n) == (2, 3)
    assert c.is_sic() and not c.is_determined()
    assert sorted(c.multiplicities()) == [[1, 2], [2, 1], [2, 2]]
    assert c.sic_closure() == c
    assert fc.FlagCode.from_json(c.to_json()) == c

    cprime = fc.FlagCode.fixture("sec4_Cprime")
    rep = fc.FlagCode.fixture("sec4_C").equivalence(cprime)
    assert rep["equivalent"] is False and rep["pruned_by"] == "cardinality"

    two = fc.FlagCode.fixture("sec4_aut_equal_nonsic")
    aut = two.automorphisms()
    inter, sizes, sic = two.automorphisms_via_projected()
    assert len(aut) == 2 and sizes == [8, 8] and not sic
    assert sorted(json.dumps(g) for g in aut) == sorted(json.dumps(g) for g in inter)

    big = fc.FlagCode.fixture("sec5_n10_type47")
    cl = big.classify()
    assert cl["increasing"]["holds"] and not cl["decreasing"]["holds"]
    assert (cl["t_a"], cl["t_b"]) == (4, 7)
    try:
        big.automorphisms()
    except fc.SearchTooLarge:
        pass
    else:
        raise AssertionError("expected SearchTooLarge")

    frob = fc.ConstantDimensionCode.fixture("frobenius_cdc")
    assert len(frob.automorphisms("semilinear")) == 2 * len(frob.automorphisms("linear"))

    r = fc.FlagCode.random(1, 2, 6, [1, 2], 4, "odfc-attempt")
    assert r.is_odfc() and r == fc.FlagCode.random(1, 2, 6, [1, 2], 4, "odfc-attempt")

    code, out, err = fc.run_cli(["check-sic", "--help"])
    assert code == 0 and out and not err
    code, out, err = fc.run_cli(["fixtures", "nonexistent"])
    assert code == 2 and json.loads(err)["error"] == "UnknownFixture"

    try:
        fc.FlagCode.fixture("nonexistent")
    except fc.FlagcodeError as e:
        assert "UnknownFixture" in str(e)
    else:
        raise AssertionError("expected FlagcodeError")

    print("pyflagcode smoke test passed")


if __name__ == "__main__":
    main()
