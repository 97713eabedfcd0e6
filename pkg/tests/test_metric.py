import pytest

from cayleycurv.groups import make_abelian, make_dihedral_inf, make_free, make_heisenberg, make_z2_rtimes_z6
from cayleycurv.metric import (
    MemoryBudgetExceeded,
    OutOfTable,
    WordMetric,
    build_ball,
    cached_build,
    distance,
    load_table,
    save_table,
    word_length,
)


def test_shell_sizes():
    assert build_ball(make_free(2), 3).shell_sizes == [1, 4, 12, 36]
    assert build_ball(make_abelian(2), 3).shell_sizes == [1, 4, 8, 12]
    assert build_ball(make_dihedral_inf(), 3).shell_sizes == [1, 2, 2, 2]
    assert build_ball(make_heisenberg(), 3).shell_sizes == [1, 4, 12, 36]


def test_shells_are_sorted_and_deterministic():
    G = make_heisenberg()
    t1, t2 = build_ball(G, 6), build_ball(G, 6)
    for r in range(7):
        assert t1.sphere(r) == t2.sphere(r) == sorted(t1.sphere(r))


def test_word_length_examples():
    H = make_heisenberg()
    M = WordMetric(H, 6)
    assert word_length(M, H.from_coords([1, 1, 1])) == 4
    assert word_length(M, H.identity()) == 0
    F = make_free(2)
    assert word_length(WordMetric(F, 4), F.parse_word("a b a^-1 b^-1")) == 4


def test_distance_examples():
    Z2 = make_abelian(2)
    M = WordMetric(Z2, 0)
    assert distance(M, Z2.from_coords([0, 0]), Z2.from_coords([2, 1])) == 3
    F = make_free(2)
    MF = WordMetric(F, 0)
    assert distance(MF, F.parse_word("a"), F.parse_word("b")) == 2


def test_out_of_table():
    H = make_heisenberg()
    M = WordMetric(H, 3)
    with pytest.raises(OutOfTable):
        M.length(H.from_coords([5, 0, 0]))
    with pytest.raises(OutOfTable):
        M.require(5)


def test_memory_budget():
    with pytest.raises(MemoryBudgetExceeded) as info:
        build_ball(make_free(3), 10, max_elements=500)
    assert info.value.completed_radius < 10


@pytest.mark.parametrize("group", [make_heisenberg(), make_z2_rtimes_z6(), make_free(2)], ids=lambda g: g.name)
def test_cache_round_trip(tmp_path, group):
    table = build_ball(group, 5)
    path = tmp_path / "t.ball"
    save_table(table, path, "x")
    back = load_table(path, group)
    assert back.radius == table.radius
    assert back.lengths == table.lengths
    assert [back.sphere(r) for r in range(6)] == [table.sphere(r) for r in range(6)]
    assert type(back.sphere(1)[0]) is type(table.sphere(1)[0])


def test_cached_build_env(tmp_path, monkeypatch):
    monkeypatch.setenv("CAYLEYCURV_CACHE_DIR", str(tmp_path))
    G = make_heisenberg()
    desc = {"type": "heisenberg"}
    first = cached_build(G, 6, desc)
    assert len(list(tmp_path.iterdir())) == 1
    second = cached_build(G, 6, desc)
    assert first.lengths == second.lengths
