"""Deductive systems, invariance under self-maps, and quotient algebras.

A deductive system contains the unit and is closed under detachment:
x in D and x -> y in D imply y in D.  The squig form of detachment selects
the same subsets (a theorem), which enumeration asserts.  Compatible means
both implications detect membership identically; closed means the subset is
a subalgebra.  Quotients exist exactly for compatible closed systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import AlgebraSpec, PseudoBciAlgebra, bck_part, is_subalgebra, validate
from .errors import (
    CongruenceError,
    EnumerationCapExceeded,
    InternalInconsistencyError,
    NotCompatibleOrClosedError,
)
from .limits import DS_CAP, effective_cap


@dataclass(frozen=True)
class DeductiveSystem:
    members: frozenset[int]
    compatible: bool
    closed: bool

    def __contains__(self, x: int) -> bool:
        return x in self.members


def _detachment_closed(A: PseudoBciAlgebra, members: frozenset[int], table) -> bool:
    n = A.size
    for x in members:
        row = table[x]
        for y in range(n):
            if row[y] in members and y not in members:
                return False
    return True


def _flags(A: PseudoBciAlgebra, members: frozenset[int]) -> DeductiveSystem:
    n = A.size
    compatible = all(
        (A.arrow[x][y] in members) == (A.squig[x][y] in members)
        for x in range(n) for y in range(n))
    return DeductiveSystem(members=members, compatible=compatible,
                           closed=is_subalgebra(A, members))


def as_deductive_system(A: PseudoBciAlgebra, members: Iterable[int]) -> DeductiveSystem:
    """Wrap a subset after checking the deductive-system axioms.

    Raises ValueError when the subset is not a deductive system.  The two
    detachment forms select the same subsets (a theorem), so disagreement
    between them is an internal bug, not bad input.
    """
    ms = frozenset(members)
    if A.unit not in ms:
        raise ValueError("a deductive system must contain the unit")
    by_arrow = _detachment_closed(A, ms, A.arrow)
    if by_arrow != _detachment_closed(A, ms, A.squig):
        raise InternalInconsistencyError(
            "arrow- and squig-detachment disagree on "
            f"{{{', '.join(A.name_set(ms))}}}")
    if not by_arrow:
        raise ValueError("subset is not closed under detachment")
    return _flags(A, ms)


def enumerate_ds(A: PseudoBciAlgebra, *, cap: int | None = None) -> list[DeductiveSystem]:
    """Every deductive system, sorted by (size, membership indices).

    Brute force over the 2^(n-1) subsets containing the unit; asserts that
    arrow- and squig-detachment select the same subsets.
    """
    n = A.size
    limit = effective_cap(cap, DS_CAP)
    if n > limit:
        raise EnumerationCapExceeded(
            f"universe size {n} exceeds subset-enumeration cap {limit}")
    rest = [x for x in range(n) if x != A.unit]
    found: list[DeductiveSystem] = []
    for bits in range(1 << len(rest)):
        members = frozenset(
            [A.unit] + [rest[i] for i in range(len(rest)) if bits >> i & 1])
        by_arrow = _detachment_closed(A, members, A.arrow)
        by_squig = _detachment_closed(A, members, A.squig)
        if by_arrow != by_squig:
            raise InternalInconsistencyError(
                "arrow- and squig-detachment disagree on "
                f"{{{', '.join(A.name_set(members))}}}")
        if by_arrow:
            found.append(_flags(A, members))
    found.sort(key=lambda d: (len(d.members), tuple(sorted(d.members))))
    return found


def generate_ds(A: PseudoBciAlgebra, generators: Iterable[int]) -> DeductiveSystem:
    """The least deductive system containing the generators.

    Closure under detachment from the generators plus the unit; usable above
    the enumeration cap.
    """
    members = set(generators) | {A.unit}
    changed = True
    while changed:
        changed = False
        for x in tuple(members):
            row = A.arrow[x]
            for y in A.elements():
                if row[y] in members and y not in members:
                    members.add(y)
                    changed = True
    return _flags(A, frozenset(members))


def bck_part_system(A: PseudoBciAlgebra) -> DeductiveSystem:
    """K(A) as a deductive system; always compatible and closed (asserted)."""
    ds = as_deductive_system(A, bck_part(A))
    if not (ds.compatible and ds.closed):
        raise InternalInconsistencyError("BCK part is not compatible and closed")
    return ds


def is_invariant(A: PseudoBciAlgebra, D: DeductiveSystem, d: tuple[int, ...]) -> bool:
    """True iff the image of the system under the map stays inside it."""
    return all(d[x] in D.members for x in D.members)


def congruence_classes(A: PseudoBciAlgebra, D: DeductiveSystem) -> list[tuple[int, ...]]:
    """Blocks of x ~ y iff x->y and y->x both lie in D, ordered by least index.

    Verifies that ~ is an equivalence compatible with both operations;
    violations raise CongruenceError with a witness.
    """
    if not (D.compatible and D.closed):
        raise NotCompatibleOrClosedError(
            "quotients require a compatible closed deductive system")
    n = A.size
    members = D.members
    names = A.names

    def related(x: int, y: int) -> bool:
        return A.arrow[x][y] in members and A.arrow[y][x] in members

    for x in range(n):
        if not related(x, x):
            raise CongruenceError(f"relation not reflexive at {names[x]}")
        for y in range(n):
            for z in range(n):
                if related(x, y) and related(y, z) and not related(x, z):
                    raise CongruenceError(
                        f"relation not transitive at ({names[x]}, {names[y]}, {names[z]})")

    rep = list(range(n))
    for x in range(n):
        for y in range(x):
            if related(x, y):
                rep[x] = rep[y]
                break
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(rep[x], []).append(x)
    classes = [tuple(blocks[r]) for r in sorted(blocks)]

    for bx in classes:
        for by in classes:
            for table in (A.arrow, A.squig):
                results = {rep[table[x][y]] for x in bx for y in by}
                if len(results) != 1:
                    raise CongruenceError(
                        "operation not constant on classes "
                        f"[{names[bx[0]]}] op [{names[by[0]]}]")
    return classes


def quotient(A: PseudoBciAlgebra, D: DeductiveSystem) -> PseudoBciAlgebra:
    """The quotient by a compatible closed deductive system.

    Classes are named by their lexicographically least member in brackets
    and ordered by least member index; the result is re-validated through
    the full axiom checker rather than trusting the correspondence theorem.
    """
    classes = congruence_classes(A, D)
    n = A.size
    rep_of = [0] * n
    for ci, block in enumerate(classes):
        for x in block:
            rep_of[x] = ci
    names = tuple("[" + min(A.names[x] for x in block) + "]" for block in classes)
    unit_name = names[rep_of[A.unit]]
    arrow = tuple(
        tuple(names[rep_of[A.arrow[bx[0]][by[0]]]] for by in classes)
        for bx in classes)
    squig = tuple(
        tuple(names[rep_of[A.squig[bx[0]][by[0]]]] for by in classes)
        for bx in classes)
    spec = AlgebraSpec(names=names, unit=unit_name, arrow=arrow, squig=squig)
    try:
        return validate(spec, max_size=A.size)
    except Exception as exc:  # correspondence theorem guarantees validity
        raise InternalInconsistencyError(
            f"quotient tables failed validation: {exc}") from exc
