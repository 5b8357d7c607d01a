# libs/morphisms/operations.py
"""Composition, images, ideal push-forwards and kernels of homomorphisms."""
from __future__ import annotations

from libs.carrier.structure import FinStructure
from libs.congruences.congruences import is_congruence
from libs.congruences.partition import Partition
from libs.errors import (
    DomainMismatchError,
    NotAnEpimorphismError,
    NotAnIdealError,
    TheoremViolationError,
)
from libs.ideals.ideals import is_ideal
from libs.morphisms.morphism import (
    Morphism,
    classify_morphism,
    is_homomorphism,
    require_homomorphism,
)
from libs.substructures.subalgebras import is_subseminearring
from libs.substructures.subset import Subset


def _same_structure(a: FinStructure, b: FinStructure) -> bool:
    return a is b or a.tables_equal(b)


def compose(phi: Morphism, psi: Morphism) -> Morphism:
    """phi o psi : R -> T for psi : R -> S and phi : S -> T."""
    if not _same_structure(psi.codomain, phi.domain):
        raise DomainMismatchError(
            f"codomain {psi.codomain.name} of the inner map is not the domain "
            f"{phi.domain.name} of the outer map"
        )
    require_homomorphism(psi)
    require_homomorphism(phi)

    out = Morphism(psi.domain, phi.codomain, tuple(phi.map[v] for v in psi.map))
    verdict = is_homomorphism(out)
    if not verdict.holds:
        raise TheoremViolationError(
            f"composite {out.describe()} is not a homomorphism: "
            f"{verdict.witness.describe()}"
        )
    return out


def image(psi: Morphism) -> Subset:
    require_homomorphism(psi)
    result = Subset.of(psi.map, psi.codomain.k)
    verdict = is_subseminearring(psi.codomain, result)
    if not verdict.holds:
        raise TheoremViolationError(
            f"image {{{result}}} is not closed in {psi.codomain.name}: "
            f"{verdict.witness.describe()}"
        )
    return result


def push_ideal(psi: Morphism, ideal: Subset) -> Subset:
    """psi(I) for an epimorphism psi and an ideal I of the domain."""
    if not classify_morphism(psi).epi:
        raise NotAnEpimorphismError(f"{psi.describe()} is not surjective")
    verdict = is_ideal(psi.domain, ideal)
    if not verdict.holds:
        raise NotAnIdealError(
            f"{{{ideal}}} is not an ideal of {psi.domain.name}: "
            f"{verdict.witness.describe()}"
        )

    result = Subset.of((psi.map[x] for x in ideal.elements()), psi.codomain.k)
    verdict = is_ideal(psi.codomain, result)
    if not verdict.holds:
        raise TheoremViolationError(
            f"pushed ideal {{{result}}} is not an ideal of {psi.codomain.name}: "
            f"{verdict.witness.describe()}"
        )
    return result


def kernel(psi: Morphism) -> Partition:
    """Fibres of psi as a partition of the domain."""
    require_homomorphism(psi)
    result = Partition.from_labels(psi.map)
    verdict = is_congruence(psi.domain, result)
    if not verdict.holds:
        raise TheoremViolationError(
            f"kernel {result} is not a congruence: {verdict.witness.describe()}"
        )
    return result
