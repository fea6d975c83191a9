import pytest

import sepsys


def test_knn_system_separates():
    fam = sepsys.knn_system(8)
    host = sepsys.complete_bipartite(8, 8)
    assert len(fam) <= 12
    ok, pair = sepsys.check_strong(host, fam)
    assert ok and pair is None


def test_sub_k3_system_on_k4():
    g = sepsys.complete(4)
    fam = sepsys.sub_k3_system(g)
    assert sepsys.check_strong(g, fam)[0]
    assert set(fam.kinds()) == {"cert"}


def test_separate_k3_on_k20():
    g = sepsys.complete(20)
    fam = sepsys.separate(g, sepsys.complete(3))
    ok, _ = sepsys.check_strong(g, fam)
    assert ok
    assert fam.certs == len(fam)


def test_tutte_two_triangles():
    d = sepsys.tutte(sepsys.two_triangles())
    assert d["ok"]
    assert [b["kind"] for b in d["bags"]] == ["cycle", "cycle"]


def test_blowup_separator():
    h = sepsys.complete(3)
    host, fam, tier = sepsys.blowup_separator(h, 2, seed=0)
    assert host.num_vertices == 6
    ok, copies = sepsys.check_h_separation(host, h, fam)
    assert ok and copies == 8


def test_constraint_family():
    cs = [([i], [(i + 1) % 10]) for i in range(10)]
    sets = sepsys.constraint_family(10, cs, seed=1)
    for inc, exc in cs:
        assert any(set(inc) <= set(s) and not set(exc) & set(s) for s in sets)


def test_parse_error_has_line():
    with pytest.raises(ValueError, match="line 2"):
        sepsys.Graph.from_text("2 1\n0 x\n")


def test_edge_list_round_trip():
    g = sepsys.Graph(3, [(2, 0), (0, 1)])
    assert g.edges() == [(0, 2), (0, 1)]
    assert sepsys.Graph.from_text(g.to_text()).edges() == g.edges()
