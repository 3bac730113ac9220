"""Smoke test for the semitopo extension module."""

import semitopo
from semitopo import Space


def main():
    s = Space.sierpinski()
    assert s.opens == [[], [0], [0, 1]]
    assert s.semi_open_family() == [[], [0], [0, 1]]
    assert s.kernel([1]) == [0, 1]
    assert s.semi_closure([0]) == [0, 1]
    assert s.is_semi_closed([1]) and not s.is_semi_open([1])

    profile = s.classify()
    assert profile["semi_T0"] and not profile["semi_T1"] and profile["semi_T_omega"]
    assert s.classify_subset([1])["sg_star_closed"]

    three = Space(3, [[], [0], [1], [0, 1], [0, 1, 2]])
    assert three.is_semi_open([0, 2]) and three.is_semi_open([1, 2])
    assert not three.is_semi_open([2])
    assert three.classify()["semi_T1"]

    try:
        Space(2, [[], [0]])
    except semitopo.SpaceError as e:
        assert "MissingFull" in str(e)
    else:
        raise AssertionError("missing whole set accepted")

    assert len(semitopo.enumerate_topologies(3)) == 29
    assert len(semitopo.enumerate_topologies(4, up_to_homeo=True)) == 33
    assert Space(2, [[], [1], [0, 1]]).is_homeomorphic(s)

    w = semitopo.find_witness("semi_T_omega AND NOT semi_T1")
    assert w["witness"]["opens"] == [[], [0], [0, 1]]
    assert semitopo.find_witness("semi_T1 AND NOT semi_T_omega")["witness"] is None

    report = semitopo.verify_theorems(3)
    assert report["violations"] == []
    assert [c["spaces"] for c in report["spaces_per_n"]] == [1, 4, 29]
    print("smoke test passed")


if __name__ == "__main__":
    main()
