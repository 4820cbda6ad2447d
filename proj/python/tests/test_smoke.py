import pytest

import mincw


def test_minimal_codewords():
    assert mincw.minimal_codewords(["1011", "0111"]) == ["1100", "1011", "0111"]


def test_analyze_agrees():
    report = mincw.analyze(["101", "011"])
    assert report["count"] == 3
    assert report["M_formula"] == 3
    assert report["consistent"]


def test_input_errors():
    with pytest.raises(ValueError):
        mincw.analyze(["110", "110"])
    with pytest.raises(ValueError):
        mincw.minimal_codewords(["10x"])


def test_counting_formula():
    assert mincw.count(2, [0, 3, 3, 3]) == 63
    report = mincw.count_report(2, [0, 1, 1, 1])
    assert report["M"] == 6


def test_catalog_sizes():
    assert mincw.catalog(3)["size_counts"] == {"2": 15, "3": 19, "4": 7}


def test_maxmin_witness():
    r = mincw.maxmin(11, 9)
    assert r["value"] == 63
    assert r["witness"] == {"00": 0, "10": 3, "01": 3, "11": 3}


def test_table_matches_reference():
    tab = mincw.table(8, 4)
    for cell in tab["cells"]:
        if cell["value"] is not None and cell["reference"] is not None:
            assert cell["value"] == cell["reference"]
    assert mincw.table_csv(3).startswith("n\\k,1,2,3\n")


def test_bounds_and_census():
    b = mincw.bounds(6, 3)
    assert b["matroid_ub"] == 15
    assert b["exact"]["value"] == 7
    assert mincw.census(6, 3)["max_m"] == 7


def test_conjectures():
    t3 = mincw.conjecture_t3(4, 12, mode="exhaustive")
    assert all(row["verdict"] == "equal" for row in t3["rows"])
    leading = mincw.conjecture_leading(2, 3, 12)
    assert all(row["holds"] for row in leading["rows"])
