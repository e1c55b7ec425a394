import json

import pytest

import laxforge


def test_algebra_layout():
    a = laxforge.algebra(3, 2)
    assert a["layout"] == ["mu1", "i1", "i2", "i3", "mu2"]
    assert a["bar"] == [5, 4, 3, 2, 1]


def test_sigma_anchor():
    s = laxforge.sigma(3, 0)
    assert s["entries"]["i1,i3"]["matrix"] == [[1, 3, "-1 + 1*s^2"]]


def test_r_matrix_at_s_two():
    doc = laxforge.evaluate_r(3, 0, 2)
    assert [4, 2, "15/4"] in doc["entries"]
    assert laxforge.r_matrix(3, 0)["v_dim"] == 3


def test_verify_all_passes():
    reports = laxforge.verify(3, 0)
    assert len(reports) == len(laxforge.suite_names())
    assert all(r["status"] != "fail" for r in reports)


def test_spectral_document():
    doc = laxforge.spectral(3, 2, "twisted")
    assert doc["kind"] == "twisted"
    assert doc["dim"] == 25


def test_errors_map_to_exceptions():
    with pytest.raises(laxforge.UnsupportedRank, match="m > 2"):
        laxforge.algebra(2, 0)
    with pytest.raises(laxforge.RelationViolation):
        laxforge.spectral(4, 2, "untwisted")
    with pytest.raises(laxforge.LaxforgeError):
        laxforge.evaluate_r(3, 0, 0)


def test_run_cli(tmp_path):
    code, out, err = laxforge.run_cli(["generate", "--m", "3", "--n", "0", "--out", str(tmp_path)])
    assert code == 0, err
    assert json.loads(out)["cache"] == "miss"
    assert (tmp_path / "sigma_3_0_vector.json").exists()
    code, _, err = laxforge.run_cli(["generate", "--m", "2", "--n", "0", "--out", str(tmp_path)])
    assert code == 2 and "m > 2" in err
