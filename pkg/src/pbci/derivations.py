"""Derivation operators: membership tests, enumeration, and map analysis.

A self-map is a plain tuple ``d`` with ``d[i]`` the image of element ``i``.
Each derivation class is a pair of defining identities, one per implication
table; ``satisfies`` checks both over all ordered pairs, and
``enumerate_derivations`` backtracks over partial image assignments,
checking every identity instance as soon as all elements it mentions have
assigned images.  ``brute_force_derivations`` is the independent oracle: a
plain filter over all n^n maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .core import PseudoBciAlgebra, atoms, bck_part, is_subalgebra
from .errors import (
    EnumerationCapExceeded,
    InternalInconsistencyError,
    TypeRequiresPseudoBckError,
)
from .limits import ENUM_CAP, effective_cap

SelfMap = tuple[int, ...]


class DerivationClass(Enum):
    """The six derivation-operator classes, (kind, type)."""

    IMPLICATIVE_I = ("implicative", "I")
    IMPLICATIVE_II = ("implicative", "II")
    IMPLICATIVE_III = ("implicative", "III")
    IMPLICATIVE_IV = ("implicative", "IV")
    SYMMETRIC_I = ("symmetric", "I")
    SYMMETRIC_II = ("symmetric", "II")

    @property
    def kind(self) -> str:
        return self.value[0]

    @property
    def dtype(self) -> str:
        return self.value[1]

    @property
    def requires_pseudo_bck(self) -> bool:
        """Types III/IV are defined only when 1 is the greatest element."""
        return self in (DerivationClass.IMPLICATIVE_III, DerivationClass.IMPLICATIVE_IV)

    @classmethod
    def from_strings(cls, kind: str, dtype: str) -> "DerivationClass":
        kind = kind.lower()
        dtype = dtype.upper()
        for member in cls:
            if member.kind == kind and member.dtype == dtype:
                return member
        raise ValueError(f"no derivation class with kind={kind!r}, type={dtype!r}")

    def __str__(self) -> str:
        return f"{self.kind}-{self.dtype}"


CLASS_ORDER = (
    DerivationClass.IMPLICATIVE_I,
    DerivationClass.IMPLICATIVE_II,
    DerivationClass.IMPLICATIVE_III,
    DerivationClass.IMPLICATIVE_IV,
    DerivationClass.SYMMETRIC_I,
    DerivationClass.SYMMETRIC_II,
)


def identity_map(A: PseudoBciAlgebra) -> SelfMap:
    return tuple(range(A.size))


def _pair_checker(A: PseudoBciAlgebra, cls: DerivationClass):
    """check(d, x, y, on_arrow) -> bool for one identity instance.

    The second operand of every cup term is kept exactly as defined: cup
    order matters because the joins are not commutative in general.
    """
    arrow, squig = A.arrow, A.squig

    def cup1(u: int, v: int) -> int:
        return squig[arrow[u][v]][v]

    def cup2(u: int, v: int) -> int:
        return arrow[squig[u][v]][v]

    C = DerivationClass
    if cls is C.IMPLICATIVE_I:
        def check(d, x, y, on_arrow):
            if on_arrow:
                return d[arrow[x][y]] == cup2(arrow[x][d[y]], arrow[d[x]][y])
            return d[squig[x][y]] == cup1(squig[x][d[y]], squig[d[x]][y])
    elif cls is C.IMPLICATIVE_II:
        def check(d, x, y, on_arrow):
            if on_arrow:
                return d[arrow[x][y]] == cup2(arrow[d[x]][y], arrow[x][d[y]])
            return d[squig[x][y]] == cup1(squig[d[x]][y], squig[x][d[y]])
    elif cls is C.IMPLICATIVE_III:
        def check(d, x, y, on_arrow):
            if on_arrow:
                return d[arrow[x][y]] == cup1(arrow[x][d[y]], arrow[d[x]][y])
            return d[squig[x][y]] == cup2(squig[x][d[y]], squig[d[x]][y])
    elif cls is C.IMPLICATIVE_IV:
        def check(d, x, y, on_arrow):
            if on_arrow:
                return d[arrow[x][y]] == cup1(arrow[d[x]][y], arrow[x][d[y]])
            return d[squig[x][y]] == cup2(squig[d[x]][y], squig[x][d[y]])
    elif cls is C.SYMMETRIC_I:
        def check(d, x, y, on_arrow):
            if on_arrow:
                return d[arrow[x][y]] == cup2(arrow[x][d[y]], arrow[y][d[x]])
            return d[squig[x][y]] == cup1(squig[x][d[y]], squig[y][d[x]])
    else:  # SYMMETRIC_II
        def check(d, x, y, on_arrow):
            if on_arrow:
                return d[arrow[x][y]] == cup2(arrow[d[x]][y], arrow[d[y]][x])
            return d[squig[x][y]] == cup1(squig[d[x]][y], squig[d[y]][x])
    return check


def _is_pseudo_bck(A: PseudoBciAlgebra) -> bool:
    return all(A.leq[x][A.unit] for x in A.elements())


def _gate_class(A: PseudoBciAlgebra, cls: DerivationClass, force: bool) -> None:
    if cls.requires_pseudo_bck and not force and not _is_pseudo_bck(A):
        raise TypeRequiresPseudoBckError(
            f"{cls} is defined only on pseudo-BCK algebras; "
            "pass force=True to evaluate the identities anyway")


def _check_map(A: PseudoBciAlgebra, d: SelfMap) -> None:
    n = A.size
    if len(d) != n or any(not (0 <= v < n) for v in d):
        raise ValueError(f"self-map {d!r} is not total on a universe of size {n}")


def satisfies(A: PseudoBciAlgebra, d: SelfMap, cls: DerivationClass, *,
              force: bool = False) -> bool:
    """True iff both defining identities of the class hold for all pairs."""
    _check_map(A, d)
    _gate_class(A, cls, force)
    check = _pair_checker(A, cls)
    n = A.size
    for x in range(n):
        for y in range(n):
            if not check(d, x, y, True) or not check(d, x, y, False):
                return False
    return True


def _identity_schedule(A: PseudoBciAlgebra) -> list[list[tuple[int, int, bool]]]:
    """Instances grouped by the assignment step at which they become checkable.

    Instance (x, y, on_arrow) mentions x, y and t = x op y, so it is decided
    once images are assigned for indices 0..max(x, y, t).
    """
    n = A.size
    sched: list[list[tuple[int, int, bool]]] = [[] for _ in range(n)]
    for x in range(n):
        for y in range(n):
            sched[max(x, y, A.arrow[x][y])].append((x, y, True))
            sched[max(x, y, A.squig[x][y])].append((x, y, False))
    return sched


def _backtrack(n: int, domains: list[tuple[int, ...]],
               schedule: list[list[tuple[int, int, bool]]],
               check) -> list[SelfMap]:
    """All total maps passing every scheduled instance, in lexicographic order."""
    found: list[SelfMap] = []
    images = [0] * n

    def extend(k: int) -> None:
        if k == n:
            found.append(tuple(images))
            return
        ready = schedule[k]
        for v in domains[k]:
            images[k] = v
            ok = True
            for x, y, on_arrow in ready:
                if not check(images, x, y, on_arrow):
                    ok = False
                    break
            if ok:
                extend(k + 1)

    extend(0)
    return found


def enumerate_derivations(A: PseudoBciAlgebra, cls: DerivationClass, *,
                          regular: bool = False, force: bool = False,
                          cap: int | None = None) -> list[SelfMap]:
    """All self-maps in the class, sorted lexicographically by image tuple.

    With regular=True only maps fixing the unit are produced.  The result is
    a pure function of (algebra, class, filter); the backtracking order is
    an internal detail and brute force over all n^n maps returns the same
    set (tested for small n).
    """
    _gate_class(A, cls, force)
    n = A.size
    limit = effective_cap(cap, ENUM_CAP)
    if n > limit:
        raise EnumerationCapExceeded(
            f"universe size {n} exceeds enumeration cap {limit}")
    full = tuple(range(n))
    domains = [full] * n
    if regular:
        domains = list(domains)
        domains[A.unit] = (A.unit,)
    return _backtrack(n, domains, _identity_schedule(A), _pair_checker(A, cls))


def brute_force_derivations(A: PseudoBciAlgebra, cls: DerivationClass, *,
                            regular: bool = False, force: bool = False) -> list[SelfMap]:
    """Oracle enumeration: filter every one of the n^n total maps.

    Exponential by construction; intended for cross-checking the pruned
    enumerator at small sizes.
    """
    _gate_class(A, cls, force)
    check = _pair_checker(A, cls)
    n = A.size
    unit = A.unit
    pairs = [(x, y) for x in range(n) for y in range(n)]
    out: list[SelfMap] = []
    for d in itertools.product(range(n), repeat=n):
        if regular and d[unit] != unit:
            continue
        if all(check(d, x, y, True) and check(d, x, y, False) for x, y in pairs):
            out.append(d)
    return out


def regular_translation_maps(A: PseudoBciAlgebra, *,
                             cap: int | None = None) -> list[SelfMap]:
    """Maps with d(1)=1, d(x->y) = x->d(y) and d(x~>y) = x~>d(y) everywhere.

    This family characterizes the regular type II implicative derivations;
    enumerating it independently lets the theorem suite compare the two
    routes as whole sets.
    """
    n = A.size
    limit = effective_cap(cap, ENUM_CAP)
    if n > limit:
        raise EnumerationCapExceeded(
            f"universe size {n} exceeds enumeration cap {limit}")
    arrow, squig = A.arrow, A.squig
    sched: list[list[tuple[int, int, bool]]] = [[] for _ in range(n)]
    for x in range(n):
        for y in range(n):
            sched[max(y, arrow[x][y])].append((x, y, True))
            sched[max(y, squig[x][y])].append((x, y, False))

    def check(d, x, y, on_arrow):
        if on_arrow:
            return d[arrow[x][y]] == arrow[x][d[y]]
        return d[squig[x][y]] == squig[x][d[y]]

    domains: list[tuple[int, ...]] = [tuple(range(n))] * n
    domains[A.unit] = (A.unit,)
    return _backtrack(n, domains, sched, check)


# ---------------------------------------------------------------------------
# map algebra


def compose(d1: SelfMap, d2: SelfMap) -> SelfMap:
    """Function composition d1 after d2."""
    return tuple(d1[v] for v in d2)


def pointwise(A: PseudoBciAlgebra, op: str, d1: SelfMap, d2: SelfMap) -> SelfMap:
    """x |-> d1(x) op d2(x) for op 'arrow' or 'squig'."""
    _check_map(A, d1)
    _check_map(A, d2)
    if op == "arrow":
        table = A.arrow
    elif op == "squig":
        table = A.squig
    else:
        raise ValueError(f"op must be 'arrow' or 'squig', got {op!r}")
    return tuple(table[d1[x]][d2[x]] for x in A.elements())


@dataclass(frozen=True)
class MapPropertyRecord:
    """Exhaustively computed per-map facts."""

    regular: bool
    isotone: bool
    idempotent: bool
    kernel: frozenset[int]
    image: frozenset[int]
    kernel_is_subalgebra: bool
    kernel_in_bck_part: bool
    image_in_atoms: bool
    maps_bck_into_bck: bool
    maps_atoms_into_atoms: bool


def map_properties(A: PseudoBciAlgebra, d: SelfMap) -> MapPropertyRecord:
    """Compute every MapPropertyRecord field by direct exhaustive check."""
    _check_map(A, d)
    n = A.size
    unit = A.unit
    leq = A.leq
    kernel = frozenset(x for x in range(n) if d[x] == unit)
    image = frozenset(d)
    part = bck_part(A)
    ats = atoms(A)
    return MapPropertyRecord(
        regular=d[unit] == unit,
        isotone=all(leq[d[x]][d[y]] for x in range(n) for y in range(n) if leq[x][y]),
        idempotent=all(d[d[x]] == d[x] for x in range(n)),
        kernel=kernel,
        image=image,
        kernel_is_subalgebra=is_subalgebra(A, kernel),
        kernel_in_bck_part=kernel <= part,
        image_in_atoms=image <= ats,
        maps_bck_into_bck=all(d[x] in part for x in part),
        maps_atoms_into_atoms=all(d[a] in ats for a in ats),
    )


def phi_map(A: PseudoBciAlgebra) -> SelfMap:
    """The map x |-> (x -> 1) ~> 1.

    Always a type I implicative and a type I symmetric derivation; both
    facts are theorems, so their failure raises InternalInconsistencyError.
    Whether it is also type II varies by algebra (guaranteed under
    commutativity) and can be queried with ``satisfies``.
    """
    d = tuple(A.phi(x) for x in A.elements())
    if not satisfies(A, d, DerivationClass.IMPLICATIVE_I):
        raise InternalInconsistencyError("phi map fails the type I implicative identities")
    if not satisfies(A, d, DerivationClass.SYMMETRIC_I):
        raise InternalInconsistencyError("phi map fails the type I symmetric identities")
    return d


@dataclass(frozen=True)
class MonoidReport:
    """Composition structure of a finite set of self-maps.

    Associativity of function composition is unconditional, so all three
    flags true means the set is a commutative monoid under composition.
    """

    closed_under_composition: bool
    commutative: bool
    has_identity: bool
    composition_table: tuple[tuple[int | None, ...], ...]
    witnesses: tuple[str, ...]


def monoid_report(A: PseudoBciAlgebra, maps: list[SelfMap]) -> MonoidReport:
    """Build the full composition table over the given maps."""
    if not maps:
        raise ValueError("maps must be non-empty")
    if len(set(maps)) != len(maps):
        raise ValueError("maps must be pairwise distinct")
    for d in maps:
        _check_map(A, d)
    index = {d: i for i, d in enumerate(maps)}
    witnesses: list[str] = []
    closed = True
    commutative = True
    table: list[tuple[int | None, ...]] = []
    for i, di in enumerate(maps):
        row: list[int | None] = []
        for j, dj in enumerate(maps):
            comp = compose(di, dj)
            cell = index.get(comp)
            if cell is None:
                closed = False
                witnesses.append(f"composition of maps {i} and {j} escapes the set")
            if comp != compose(dj, di):
                commutative = False
                if i < j:
                    witnesses.append(f"maps {i} and {j} do not commute")
            row.append(cell)
        table.append(tuple(row))
    return MonoidReport(
        closed_under_composition=closed,
        commutative=commutative,
        has_identity=identity_map(A) in index,
        composition_table=tuple(table),
        witnesses=tuple(witnesses),
    )
