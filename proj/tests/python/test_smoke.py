import qhall


def test_roots():
    roots = qhall.positive_roots("A2")
    assert sorted(roots) == [[0, 1], [1, 0], [1, 1]]
    assert qhall.cartan_matrix("A2") == [[2, -1], [-1, 2]]


def test_hall_product():
    terms = qhall.hall_simple_product("A2", 1, 2)
    assert len(terms) == 2
    classes = {t["cls"] for t in terms}
    assert any("M(1,1)" in c for c in classes)


def test_canonical_basis_sl2():
    fam = qhall.canonical_basis("A1", [3])
    assert fam["classes"] == ["M(1)^3"] or len(fam["classes"]) == 1
    assert fam["transition"][0][0] == {0: "1"}


def test_double_basis_window():
    elts = qhall.double_basis("A1", [1], [1])
    assert len(elts) == 3


def test_iqg_presentation():
    assert qhall.iqg_verify_presentation("A2")


def test_ihall_dual_L():
    assert qhall.ihall_dual_L(0, 1) == "(v^(-1/2))[M(1)]"


def test_nks():
    assert len(qhall.nks_ldominant("A1", [2, 2])) == 6
    assert qhall.nks_dot("A1").startswith("digraph")


def test_rank1():
    table = qhall.rank1_iL(0, 2)
    assert table[(2, 0)] == "1" and table[(0, 1)] == "-1"


def test_verify_target():
    ok, detail = qhall.verify("nks-indexing")
    assert ok and detail == ""
