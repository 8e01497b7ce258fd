import pytest

import mist


def test_bowtie():
    g = mist.Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert g.n == 5 and g.m == 6
    assert set(mist.classify(g)) == {"block", "cactus", "cograph"}
    t = mist.solve(g)
    assert t.internal_count == 3
    assert len(t.edges()) == 4
    assert mist.oracle_mist(g) == 3


def test_parse_is_one_based():
    g = mist.Graph.parse("3 2\n1 2\n2 3\n")
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.neighbors(1) == [0, 2]
    assert mist.Graph.parse(g.to_text()).edges() == g.edges()


def test_errors():
    with pytest.raises(mist.GraphError):
        mist.Graph.parse("4 2\n1 2\n3 4\n")
    with pytest.raises(ValueError):
        mist.Graph(3, [(0, 0), (1, 2)])
    p4 = mist.Graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(mist.GraphError):
        mist.solve(p4, "cograph")
    with pytest.raises(ValueError):
        mist.solve(p4, "tree")
    with pytest.raises(mist.BudgetExceeded):
        mist.oracle_mist(mist.generate("block", 14))


def test_families():
    for k in range(1, 4):
        assert mist.solve(mist.family_block_cactus(k)).internal_count == 3 * k
        assert mist.solve(mist.family_bp(k), "bp").internal_count == 3 * k


def test_path_cover():
    c4 = mist.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    paths = mist.path_cover(c4)
    assert len(paths) == 1 and sorted(paths[0]) == [0, 1, 2, 3]
    assert mist.oracle_max_pathcover_edges(c4) == 3
    assert mist.spanning_tree_count(c4) == 4


def test_generated_against_oracle():
    for cls in ["block", "cactus", "cograph", "bp", "chain"]:
        for seed in range(5):
            g = mist.generate(cls, 9, seed=seed)
            assert mist.solve(g, cls).internal_count == mist.oracle_mist(g)


def test_verify():
    rep = mist.verify(trials=4, seed=2)
    assert rep["ok"] and rep["instances"] == 20
    assert rep["checks"]["oracle-equivalence"] == (20, 0)
