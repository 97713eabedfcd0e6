import pytest

from cayleycurv.core import (
    AxiomViolation,
    ContainsIdentity,
    EmptyGeneratorSet,
    InverseMismatch,
    NotInvolution,
    ParseError,
    group_axiom_probe,
    validate_genset,
)
from cayleycurv.groups import make_abelian, make_dihedral_inf, make_free, make_heisenberg
from cayleycurv.groups.heisenberg import HeisenbergGroup, MalcevTriple


def test_free_rank_one_pairing():
    gs = validate_genset(["a", "a^-1"], [1, 0])
    assert gs.size == 2
    assert gs.inverse_index(0) == 1


def test_dihedral_self_paired_involutions():
    D = make_dihedral_inf()
    gs = validate_genset(["a", "b"], [0, 1], group=D, elements=D.gens)
    assert gs.inverse_pairing == (0, 1)


def test_self_pairing_rejected_in_z():
    # the pairing is formally an involution, but a * a != e in Z
    Z = make_abelian(1)
    with pytest.raises(InverseMismatch):
        validate_genset(["a"], [0], group=Z, elements=[Z.gens[0]])


def test_bad_gensets():
    with pytest.raises(EmptyGeneratorSet):
        validate_genset([], [])
    with pytest.raises(NotInvolution):
        validate_genset(["a", "b"], [1, 1])
    Z = make_abelian(1)
    with pytest.raises(ContainsIdentity):
        validate_genset(["e", "f"], [1, 0], group=Z, elements=[Z.identity(), Z.identity()])


@pytest.mark.parametrize("group", [make_free(2), make_abelian(2), make_heisenberg(), make_dihedral_inf()])
def test_probe_passes(group):
    assert group_axiom_probe(group, trials=1000, seed=0).passed


class DroppedCommutator(HeisenbergGroup):
    def multiply(self, g, h):
        return MalcevTriple(g[0] + h[0], g[1] + h[1], g[2] + h[2])


def test_probe_catches_corrupted_heisenberg():
    with pytest.raises(AxiomViolation) as info:
        group_axiom_probe(DroppedCommutator(), trials=200, seed=1)
    assert info.value.witness is not None


def test_word_parsing():
    F = make_free(2)
    assert F.parse_word("a b a^-1") == F.parse_word("aba^-1")
    assert F.parse_word("a^3 b^-2") == (1, 1, 1, -2, -2)
    assert F.parse_word("") == ()
    with pytest.raises(ParseError):
        F.parse_word("a q")
