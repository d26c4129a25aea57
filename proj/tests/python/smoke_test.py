"""Smoke tests for the ctlpy module against the bundled example fixtures."""

import os
import sys

import ctlpy


def fixtures_root():
    root = os.environ.get("CTL_FIXTURES", "fixtures")
    cand = os.path.join(root, "condition")
    return cand if os.path.isdir(cand) else root


def main():
    ws = ctlpy.Workspace(fixtures_root())
    assert ws.characteristic == 2
    assert ws.dimension() == 9
    assert ws.global_dimension() == 2

    names = ws.catalog()
    assert len(names) == 11
    assert ws.catalog_ok()
    assert ws.dims("P4") == {"1": 1, "2": 1, "3": 1, "4": 1}
    assert ws.dims("I2") == {"2": 1, "4": 1}

    assert ws.hom_dim("P4", "I2") == 1
    assert ws.ext_dim("S2", "P1") == 1
    assert ws.ext_dim("P2", "S2") == 0
    assert ws.ext_dim("I4", "P1", 2) == 1
    assert ws.projective_dimension("I4") == 2

    d = ws.class_members("D")
    assert ws.right_orth(d) == {"P2", "P4", "I2", "I3", "I4", "M2", "S2"}
    assert ws.left_orth(ws.class_members("inj")) == set(names)

    assert ws.middle_term("S2", "P1", [1]) == {"P2": 1}
    assert ws.middle_term("I2", "M1", [1]) == {"P4": 1, "S2": 1}
    assert ws.is_split("S2", "P1", [0])
    assert not ws.is_split("S2", "P1", [1])

    assert ws.verify_pair("D", "Dperp") == "certified"
    assert ws.verify_pair("proj", "all") == "certified"

    rep = ws.theorem("i", "all", "inj", "proj", "all")
    assert rep["certified"]
    assert rep["conclusion_x"] == {"P1", "P2", "P3", "P4"}

    try:
        ws.theorem("ii", "D1", "D1perp", "D2", "D2perp")
    except ctlpy.HypothesisViolated as e:
        assert "D2perp" in str(e)
    else:
        raise AssertionError("cross pairing must violate the hypothesis")

    assert ws.decompose_sum({"P4": 2, "S2": 1}) == {"P4": 2, "S2": 1}

    ws3 = ctlpy.Workspace(fixtures_root(), characteristic=3)
    assert ws3.right_orth(d) == ws.right_orth(d)

    print("ctlpy smoke: all assertions passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
