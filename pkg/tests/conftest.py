from __future__ import annotations

from itertools import permutations

import pytest

from catmod import (
    CGroup,
    corpus_modules,
    cyclic_table,
    default_corpus,
    from_group,
    gen_brown_spencer,
    gen_delooping,
    gen_discrete,
    gen_skeletal_cocycle,
    standard_cocycle,
)


def s3_table() -> tuple[list[str], dict[tuple[str, str], str]]:
    """The symmetric group on three points, elements written as the
    image string of (0, 1, 2)."""
    perms = [''.join(str(v) for v in p) for p in permutations(range(3))]

    def compose(p: str, q: str) -> str:
        return ''.join(p[int(ch)] for ch in q)

    return perms, {(p, q): compose(p, q) for p in perms for q in perms}


@pytest.fixture
def z2eq() -> CGroup:
    elements, add = cyclic_table(2)
    return from_group(elements, add, name="Z2eq")


@pytest.fixture
def z4eq() -> CGroup:
    elements, add = cyclic_table(4)
    return from_group(elements, add, name="Z4eq")


@pytest.fixture
def x2tot() -> CGroup:
    elements, add = cyclic_table(2)
    return CGroup(elements, add, "0", {"0": "0", "1": "1"}, (("0", "1"),), name="X2tot")


@pytest.fixture
def dz2():
    return gen_discrete(*cyclic_table(2), name="DZ2")


@pytest.fixture
def bz2():
    return gen_delooping(*cyclic_table(2), name="BZ2")


@pytest.fixture
def skz2():
    elements, add = cyclic_table(2)
    return gen_skeletal_cocycle(elements, add, elements, add, standard_cocycle(2), name="SkZ2")


@pytest.fixture
def bs():
    t_elements, t_add = cyclic_table(2)
    g_elements, g_add = cyclic_table(4)
    return gen_brown_spencer(
        t_elements,
        t_add,
        g_elements,
        g_add,
        boundary={"0": "0", "1": "2"},
        action={(g, t): t for g in g_elements for t in t_elements},
        name="BS",
    )


@pytest.fixture
def m1():
    return corpus_modules()[0]


@pytest.fixture
def m2():
    return corpus_modules()[1]


@pytest.fixture
def corpus():
    return default_corpus()
