# tests/test_morphisms.py
import itertools

import pytest

from libs.congruences.congruences import is_congruence, quotient
from libs.constructions.generators import gen_modring, gen_powerset
from libs.errors import (
    ArityMismatchError,
    DomainMismatchError,
    ElementRangeError,
    NotAHomomorphismError,
    NotAnEpimorphismError,
    NotAnIdealError,
    SearchSpaceError,
)
from libs.ideals.ideals import enumerate_ideals, is_ideal
from libs.morphisms.morphism import (
    Morphism,
    classify_morphism,
    identity_morphism,
    is_homomorphism,
)
from libs.morphisms.operations import compose, image, kernel, push_ideal
from libs.morphisms.search import find_homomorphisms
from libs.substructures.subalgebras import is_subseminearring, restrict
from libs.substructures.subset import Subset


def mod(domain, codomain):
    return Morphism.from_function(domain, codomain, lambda x: x % codomain.k)


def test_morphism_validation(z6, z3):
    with pytest.raises(ArityMismatchError):
        Morphism(z6, z3, (0, 1, 2))
    with pytest.raises(ElementRangeError):
        Morphism(z3, z3, (0, 1, 3))
    with pytest.raises(ArityMismatchError):
        Morphism(z3, gen_modring(3, 3, 2), (0, 1, 2))


def test_is_homomorphism_examples(z6, z3, b2):
    assert is_homomorphism(mod(z6, z3)).holds
    assert is_homomorphism(identity_morphism(b2)).holds

    verdict = is_homomorphism(Morphism(b2, b2, (1, 0)))
    assert not verdict.holds
    w = verdict.witness
    assert w.operation == "f"
    assert w.args == (0, 1)
    assert (w.lhs, w.rhs) == (0, 1)


def test_classify_morphism_examples(z6, z3, b2):
    kind = classify_morphism(mod(z6, z3))
    assert kind.epi and not kind.mono and not kind.iso
    assert classify_morphism(identity_morphism(z3)).iso

    const = classify_morphism(Morphism(b2, b2, (0, 0)))
    assert not const.mono and not const.epi
    with pytest.raises(NotAHomomorphismError):
        classify_morphism(Morphism(b2, b2, (1, 0)))


def test_compose_examples(z6, z3):
    psi = mod(z6, z3)
    assert compose(identity_morphism(z3), psi).map == psi.map
    assert compose(psi, identity_morphism(z6)).map == psi.map

    to_z2 = mod(z6, gen_modring(2, 2, 2))
    with pytest.raises(DomainMismatchError):
        compose(to_z2, psi)


def test_find_homomorphisms_examples(b2, z3):
    assert [h.map for h in find_homomorphisms(b2, b2)] == [(0, 0), (0, 1), (1, 1)]
    assert [h.map for h in find_homomorphisms(z3, z3)] == [(0, 0, 0), (0, 1, 2)]
    one = gen_modring(1, 2, 2)
    assert [h.map for h in find_homomorphisms(z3, one)] == [(0, 0, 0)]


def test_find_homomorphisms_limit_and_guard(b2, env):
    assert len(find_homomorphisms(b2, b2, limit=2)) == 2
    assert find_homomorphisms(b2, b2, limit=0) == []

    env("SNR_HOM_SEARCH_SPACE", "3")
    with pytest.raises(SearchSpaceError):
        find_homomorphisms(b2, b2)
    assert len(find_homomorphisms(b2, b2, limit=5)) == 3


def test_find_homomorphisms_arity_mismatch(b2):
    with pytest.raises(ArityMismatchError):
        find_homomorphisms(b2, gen_powerset(1, 2, 3))


def test_image_examples(z6, z3, b2, z4):
    assert image(mod(z6, z3)).is_full
    assert image(Morphism(b2, b2, (0, 0))) == Subset.of([0], 2)

    sub, inclusion = restrict(z4, Subset.of([0, 2], 4))
    assert image(Morphism(sub, z4, inclusion)) == Subset.of([0, 2], 4)


def test_push_ideal_examples(z6, z3):
    psi = mod(z6, z3)
    assert push_ideal(psi, Subset.of([0, 2, 4], 6)).is_full
    assert push_ideal(psi, Subset.of([0, 3], 6)) == Subset.of([0], 3)
    ideal = Subset.of([0, 2, 4], 6)
    assert push_ideal(identity_morphism(z6), ideal) == ideal


def test_push_ideal_contract(z6, z3, b2):
    with pytest.raises(NotAnEpimorphismError):
        push_ideal(Morphism(b2, b2, (0, 0)), Subset.of([0], 2))
    with pytest.raises(NotAnIdealError):
        push_ideal(mod(z6, z3), Subset.of([1], 6))


def test_kernel_examples(z6, z3, b2):
    assert str(kernel(mod(z6, z3))) == "0,3|1,4|2,5"
    assert kernel(identity_morphism(z3)).block_count == 3
    assert kernel(Morphism(b2, b2, (0, 0))).block_count == 1


# ---------------------------------------------------------------------
# 全语料交叉检查
# ---------------------------------------------------------------------
CORPUS = [
    gen_powerset(1, 2, 2),
    gen_powerset(2, 2, 2),
    gen_modring(1, 2, 2),
    gen_modring(2, 2, 2),
    gen_modring(3, 2, 2),
    gen_modring(4, 2, 2),
    gen_modring(6, 2, 2),
]
PAIRS = [(a, b) for a in CORPUS for b in CORPUS if b.k**a.k <= 2**16]


def _naive_homomorphisms(s1, s2):
    found = []
    for images in itertools.product(range(s2.k), repeat=s1.k):
        if is_homomorphism(Morphism(s1, s2, images)).holds:
            found.append(images)
    return found


@pytest.mark.parametrize("pair", PAIRS, ids=lambda p: f"{p[0].name}->{p[1].name}")
def test_search_matches_naive_oracle(pair):
    s1, s2 = pair
    assert [h.map for h in find_homomorphisms(s1, s2)] == _naive_homomorphisms(s1, s2)


@pytest.mark.parametrize("pair", PAIRS, ids=lambda p: f"{p[0].name}->{p[1].name}")
def test_homomorphism_theorems(pair):
    s1, s2 = pair
    domain_ideals = enumerate_ideals(s1)
    for psi in find_homomorphisms(s1, s2):
        assert compose(identity_morphism(s2), psi).map == psi.map
        assert compose(psi, identity_morphism(s1)).map == psi.map
        assert is_subseminearring(s2, image(psi)).holds

        ker = kernel(psi)
        assert is_congruence(s1, ker).holds
        assert quotient(s1, ker).k == len(image(psi))

        if classify_morphism(psi).epi:
            for ideal in domain_ideals:
                assert is_ideal(s2, push_ideal(psi, ideal)).holds


def test_composition_of_found_homomorphisms(z6, z3):
    z2 = gen_modring(2, 2, 2)
    for psi in find_homomorphisms(z6, z3):
        for phi in find_homomorphisms(z3, z2):
            assert is_homomorphism(compose(phi, psi)).holds
