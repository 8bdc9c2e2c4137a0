"""Groups of knot codes (arc and over presentations), peripheral pairs and
abelianization."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import InvariantError, PreconditionError, ValidationError
from .knotcode import (
    KnotCode,
    arcs,
    bridge_decomposition,
    standard_normal_form,
)
from .words import Presentation, Word

__all__ = [
    "WirtingerPresentation",
    "PeripheralPair",
    "wirtinger_relator",
    "cyclic_chain",
    "arc_presentation",
    "over_presentation",
    "peripheral_pair",
    "abelianization_two_gen",
    "abelianization",
    "smith_invariants",
]


def wirtinger_relator(x_i: str, w: Word, x_j: str) -> Word:
    """The relator ``w^-1 x_i w x_j^-1``, saying x_j is x_i conjugated by w."""
    return w.inverse() * Word.gen(x_i) * w * Word.gen(x_j, -1)


@dataclass(frozen=True)
class WirtingerPresentation:
    """A presentation whose relators are conjugations between generators.

    ``links[k] = (i, w, j)`` records that relator ``k`` is
    ``w^-1 x_i w x_j^-1`` (generator indices are 0-based).
    """

    generators: tuple[str, ...]
    links: tuple[tuple[int, Word, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "links", tuple((int(i), w, int(j)) for i, w, j in self.links))
        n = len(self.generators)
        for i, w, j in self.links:
            if not (0 <= i < n and 0 <= j < n):
                raise ValidationError(f"link ({i}, {w}, {j}) refers to a missing generator")

    @property
    def base(self) -> Presentation:
        rels = tuple(
            wirtinger_relator(self.generators[i], w, self.generators[j])
            for i, w, j in self.links
        )
        return Presentation(self.generators, rels)

    @property
    def conjugators(self) -> tuple[Word, ...]:
        return tuple(w for _, w, _ in self.links)

    @property
    def cyclic(self) -> bool:
        n = len(self.generators)
        return len(self.links) == n and all(
            i == k and j == (k + 1) % n for k, (i, _, j) in enumerate(self.links)
        )

    @property
    def is_chain(self) -> bool:
        """Deficiency-one chain: relator k sends generator k to k+1, k < n-1."""
        n = len(self.generators)
        return len(self.links) == n - 1 and all(
            i == k and j == k + 1 for k, (i, _, j) in enumerate(self.links)
        )

    def __str__(self):
        return str(self.base)

    @classmethod
    def from_presentation(cls, P: Presentation) -> "WirtingerPresentation":
        """Recognise a cyclic (n relators) or chain (n-1 relators) presentation.

        Relator k must say that generator k+1 is a conjugate of generator k;
        the relator may be any cyclic rotation of ``w^-1 x_k w x_{k+1}^-1``.
        """
        gens = P.generators
        n = len(gens)
        if len(P.relators) not in (n, n - 1) or n == 0:
            raise PreconditionError(
                f"need {n} or {n - 1} relators for a cyclic Wirtinger presentation, "
                f"got {len(P.relators)}"
            )
        links = []
        for k, r in enumerate(P.relators):
            src, dst = gens[k], gens[(k + 1) % n]
            w = _find_conjugator(r, src, dst)
            if w is None:
                raise PreconditionError(
                    f"relator {k + 1} ({r}) does not conjugate {src} to {dst}"
                )
            links.append((k, w, (k + 1) % n))
        return cls(gens, tuple(links))


def _conjugate_of_letter(u: Word, g: str) -> Word | None:
    """If ``u == c^-1 g c`` (reduced) return ``c``."""
    lets = list(u.letters())
    if len(lets) % 2 == 0:
        return None
    mid = len(lets) // 2
    if lets[mid] != (g, 1):
        return None
    c = Word(lets[mid + 1 :])
    return c if c.inverse() * Word.gen(g) * c == u else None


def _find_conjugator(r: Word, src: str, dst: str) -> Word | None:
    total = max(r.length, 1)
    for k in range(total):
        c = _conjugate_of_letter(r.rotate(k) * Word.gen(dst), src)
        if c is not None:
            return c
    return None


def cyclic_chain(generators: Sequence[str], conjugators: Sequence[Word]) -> WirtingerPresentation:
    """Chain ``x_k -> x_{k+1}`` by ``conjugators[k]``, wrapping if there are n of them."""
    n = len(generators)
    if len(conjugators) not in (n, n - 1):
        raise PreconditionError("a chain needs n or n-1 conjugators")
    links = tuple((k, w, (k + 1) % n) for k, w in enumerate(conjugators))
    return WirtingerPresentation(tuple(generators), links)


def arc_presentation(K: KnotCode) -> WirtingerPresentation:
    """Arc presentation on generators ``S1..Sn``.

    Relator j conjugates S_j to S_{j+1} by ``S_{t_j}^eps`` where j lies in
    A_{t_j} and eps is the sign of crossing j+1 (crossing 1 for j = n).

    The overpass is taken at crossing j, where S_j begins, not at crossing
    j+1 where it ends. On codes with kinks this can give a different group
    from `over_presentation`, which reads the overpass at the end crossing.
    """
    if K.is_trivial():
        return WirtingerPresentation(("S1",), ())
    K = standard_normal_form(K)
    dec = arcs(K)
    n = K.n
    gens = tuple(f"S{i}" for i in range(1, n + 1))
    owner = {lab: i for i in range(n) for lab in dec.over_labels(i + 1)}
    links = []
    for j in range(n):
        t = owner[j + 1]
        eps = K.sign((j + 1) % n + 1)
        links.append((j, Word.gen(gens[t], eps), (j + 1) % n))
    return WirtingerPresentation(gens, tuple(links))


def over_presentation(K: KnotCode) -> WirtingerPresentation:
    """Cyclic over presentation on one generator ``y_t`` per bridge."""
    if K.is_trivial():
        return WirtingerPresentation(("y1",), ())
    dec = bridge_decomposition(K)
    code = dec.code
    m = dec.segments
    gens = tuple(f"y{t}" for t in range(1, m + 1))
    owner = dec.bridge_of()
    ws = [
        Word((gens[owner[lab]], code.sign(lab)) for lab in run)
        for run in dec.under_runs
    ]
    return cyclic_chain(gens, ws)


@dataclass(frozen=True)
class PeripheralPair:
    longitude: Word
    meridian: str
    writhe_p: int


def peripheral_pair(K: KnotCode) -> PeripheralPair:
    """Longitude ``w_1 ... w_n m^-p`` with meridian ``y1`` and p the sign sum."""
    if K.is_trivial():
        raise PreconditionError("the trivial code has no over presentation to read")
    W = over_presentation(K)
    p = sum(K.signs)
    meridian = W.generators[0]
    product = Word()
    for w in W.conjugators:
        product = product * w
    longitude = product * Word.gen(meridian, -p)
    if sum(e for _, e in longitude.syllables) != 0:
        raise InvariantError(f"longitude {longitude} is not in the commutator subgroup")
    return PeripheralPair(longitude, meridian, p)


def abelianization_two_gen(P: Presentation) -> tuple[int, int]:
    """``(free_rank, torsion)`` of ``Z^2 / (l_x(r), l_y(r))``.

    Torsion 1 means no torsion; ``(2, 0)`` when both exponent sums vanish.
    """
    if len(P.generators) != 2 or len(P.relators) != 1:
        raise PreconditionError("need exactly two generators and one relator")
    (lx, ly), = P.exponent_matrix()
    g = gcd(lx, ly)
    return (2, 0) if g == 0 else (1, g)


def smith_invariants(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Nonzero invariant factors (Smith normal form diagonal) of an integer matrix."""
    A = [list(row) for row in matrix]
    rows = len(A)
    cols = ncols if ncols is not None else (len(A[0]) if A else 0)
    diag = []
    r0 = 0
    for c0 in range(cols):
        if r0 >= rows:
            break
        while True:
            piv = None
            for i in range(r0, rows):
                for j in range(c0, cols):
                    if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return diag
            i, j = piv
            A[r0], A[i] = A[i], A[r0]
            for row in A:
                row[c0], row[j] = row[j], row[c0]
            p = A[r0][c0]
            clean = True
            for i in range(r0 + 1, rows):
                q = A[i][c0] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r0])]
                if A[i][c0]:
                    clean = False
            for j in range(c0 + 1, cols):
                q = A[r0][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[c0]
                if A[r0][j]:
                    clean = False
            if clean:
                # pivot must divide the rest of the block
                bad = next(
                    (i for i in range(r0 + 1, rows) for j in range(c0 + 1, cols) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[r0] = [a + b for a, b in zip(A[r0], A[bad])]
        diag.append(abs(A[r0][c0]))
        r0 += 1
    return diag


def abelianization(P: Presentation) -> tuple[int, tuple[int, ...]]:
    """``(free_rank, torsion_factors)`` of ``P``; factors exclude 1s."""
    n = len(P.generators)
    diag = smith_invariants(P.exponent_matrix(), ncols=n)
    return n - len(diag), tuple(d for d in diag if d != 1)
