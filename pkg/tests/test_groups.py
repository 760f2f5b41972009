import pytest

from su2comm.errors import UnresolvedExtension
from su2comm.homalg.groups import (
    GradedGroup,
    assemble_decomposition,
    canonical,
    group_str,
    hom_cokernel,
    hom_kernel,
    is_homomorphism,
    resolve_extension,
    suspension_shift,
    wedge_sum,
)

RP3 = GradedGroup.of({0: [0], 2: [2], 3: [0]})


def test_canonical():
    assert canonical([2, 3]) == (6,)
    assert canonical([0, 4, 2]) == (2, 4, 0)
    assert canonical([1, 1]) == ()
    with pytest.raises(ValueError):
        canonical([-2])


def test_group_str():
    assert group_str(()) == "0"
    assert group_str((0, 0, 0, 0)) == "Z^4"
    assert group_str((4, 0, 0, 0, 0)) == "Z^4 + Z/4"
    assert group_str((2, 2, 2, 2)) == "(Z/2)^4"


def test_graded_basics():
    g = GradedGroup.of({0: [0], 2: [0], 3: [0, 0], 4: [2]})
    assert g.top == 4 and g[5] == () and g.rank(3) == 2 and g.torsion(4) == (2,)
    assert [g.f2_dim(q) for q in range(6)] == [1, 0, 1, 3, 1, 0]
    assert g.euler_characteristic() == 0
    assert str(GradedGroup.of([[0], [], [4]])) == "(Z, 0, Z/4)"
    assert GradedGroup.of({1: [0]}).to_json() == {"0": [], "1": [0]}


def test_suspension_and_wedge():
    s = suspension_shift(RP3, 3)
    assert s[5] == (2,) and s[6] == (0,) and s.top == 6 and s[0] == ()
    s1 = GradedGroup.of({0: [0], 1: [0]})
    assert suspension_shift(s1, 3) == GradedGroup.of({4: [0]})
    assert wedge_sum([]) == GradedGroup(())


def test_assemble():
    core = GradedGroup.of({0: [0], 3: [0]})
    assert assemble_decomposition(core, [], (0, 6)) == core
    w = [GradedGroup.of({0: [0], 3: [0]})] * 2
    out = assemble_decomposition(core, w, (0, 6))
    assert out[3] == (0, 0, 0) and out[0] == (0,)
    # the endpoints keep the core value
    out = assemble_decomposition(core, w, (0, 3))
    assert out[3] == (0,)


def test_hom_kernel_cokernel():
    # Z --2--> Z
    assert hom_kernel([[2]], (0,), (0,)) == ()
    assert hom_cokernel([[2]], (0,), (0,)) == (2,)
    # Z --1--> Z/4
    assert hom_kernel([[1]], (0,), (4,)) == (0,)
    assert hom_cokernel([[1]], (0,), (4,)) == ()
    # Z/4 --2--> Z/8
    assert hom_kernel([[2]], (4,), (8,)) == ()
    assert hom_cokernel([[2]], (4,), (8,)) == (2,)
    assert is_homomorphism([[2]], (4,), (8,))
    assert not is_homomorphism([[1]], (4,), (8,))
    assert not is_homomorphism([[1]], (2,), (0,))


def test_resolve_extension():
    assert resolve_extension(4, 1) == (4,)
    assert resolve_extension(4, 2) == (2, 2)
    assert resolve_extension(2, 1) == (2,)
    assert resolve_extension(8, 1) == (8,)
    assert resolve_extension(8, 2) == (2, 4)
    assert resolve_extension(1, 0) == ()
    with pytest.raises(UnresolvedExtension):
        resolve_extension(16, 2)
    with pytest.raises(UnresolvedExtension):
        resolve_extension(6, 1)
