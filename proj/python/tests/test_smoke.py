import pervpn


def test_algebra_dimensions():
    assert [pervpn.algebra_dim(n) for n in (1, 2, 3)] == [5, 9, 13]
    assert pervpn.cartan_matrix(1) == [[2, 1], [1, 1]]


def test_resolution_of_top_simple():
    r = pervpn.resolution(1, "IC1")
    assert r["lo"] == -2
    assert r["terms"] == [[1], [0], [1]]


def test_module_json():
    m = pervpn.module(2, "Z+(2,0)")
    assert m["dims"] == [1, 1, 1]


def test_ext_dims_between_simples():
    assert pervpn.ext_dims(2, "IC1", "IC1") == [1, 0, 1, 0, 0]
    assert pervpn.ext_dims(2, "IC0", "IC2") == [0, 0, 1, 0, 0]


def test_census_size():
    for n in (1, 2, 3):
        assert len(pervpn.census(n)) == n + (n + 1) ** 2


def test_twist():
    assert pervpn.twist_is_inverse_serre(2, "Z-(2,0)") == "certified"


def test_run_report():
    rep = pervpn.run(1, ["census", "cy"])
    assert rep["schema_version"] == 1
    assert rep["ok"] is True
    assert [s["name"] for s in rep["suites"]] == ["census", "cy"]
    assert all(row["status"] == "pass" for s in rep["suites"] for row in s["rows"])


def test_bad_tag_raises():
    try:
        pervpn.ext_dims(1, "Q7", "IC0")
    except ValueError:
        return
    raise AssertionError("expected ValueError")
