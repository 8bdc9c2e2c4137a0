"""From presentations back to knot codes.

* `cyclic_wirtinger_to_code`: a cyclic Wirtinger presentation becomes a knot
  code whose over presentation is that presentation.
* `close_deficiency_one`: a chain of n-1 conjugations is closed with
  ``w_n = (w_1 ... w_{n-1})^-1``; the resulting code has trivial longitude.
* `onerel_to_cyclic_wirtinger`: ``<x, y | r>`` with ``l_y(r) = +-1`` becomes a
  chain.
* `bs_virtual_code`: BS(m, m+1) as a two-bridge virtual knot code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionError
from .groups import WirtingerPresentation, cyclic_chain
from .knotcode import KnotCode
from .words import Presentation, Word

__all__ = [
    "BlockForm",
    "to_block_form",
    "reduce_cyclic_chain",
    "cyclic_wirtinger_to_code",
    "close_deficiency_one",
    "onerel_to_cyclic_wirtinger",
    "bs_presentation",
    "bs_virtual_code",
    "presentation_to_code",
]


@dataclass(frozen=True)
class BlockForm:
    """Exponents of ``(x_1^i1 ... x_n^in)(x_1^i(n+1) ...)...``; zeros allowed."""

    generators: tuple[str, ...]
    blocks: tuple[int, ...]

    @property
    def rounds(self) -> int:
        return len(self.blocks) // len(self.generators)

    def evaluate(self) -> Word:
        n = len(self.generators)
        return Word((self.generators[s % n], e) for s, e in enumerate(self.blocks))


def to_block_form(w: Word, generators: Sequence[str]) -> BlockForm:
    """Write ``w`` in cyclic generator blocks using the fewest rounds."""
    gens = tuple(generators)
    index = {g: k for k, g in enumerate(gens)}
    n = len(gens)
    blocks: list[int] = []
    last = n  # forces a new round on the first syllable
    for g, e in w.syllables:
        if g not in index:
            raise PreconditionError(f"generator {g!r} not in {gens}")
        k = index[g]
        if k <= last:
            blocks.extend([0] * n)
        blocks[len(blocks) - n + k] = e
        last = k
    return BlockForm(gens, tuple(blocks))


def reduce_cyclic_chain(
    generators: Sequence[str], conjugators: Sequence[Word], merge_unused: bool = True
) -> tuple[list[str], list[Word]]:
    """Tietze-simplify a cyclic chain before building a code.

    Two moves, repeated until neither applies:

    * a trivial conjugator ``w_i`` identifies ``x_{i+1}`` with ``x_i``;
    * a generator occurring in no conjugator is eliminated by merging the
      conjugators on either side of it (``w_{k-1} w_k``).

    Both keep the group. An empty result means the group is Z. With
    ``merge_unused=False`` only the first move is applied.
    """
    gens = list(generators)
    ws = [Word(w.syllables) for w in conjugators]
    changed = True
    while changed and gens:
        changed = False
        n = len(gens)
        for i in range(n):
            if ws[i].is_identity():
                if n == 1:
                    return [], []
                j = (i + 1) % n
                sub = {gens[j]: Word.gen(gens[i])}
                ws = [w.substitute(sub) for w in ws]
                ws[i] = ws[j]
                del gens[j], ws[j]
                changed = True
                break
        if changed or len(gens) < 2 or not merge_unused:
            continue
        used = set().union(*(w.generators() for w in ws))
        for k in range(n):
            if gens[k] not in used:
                ws[k - 1] = ws[k - 1] * ws[k]
                del gens[k], ws[k]
                changed = True
                break
    return gens, ws


def cyclic_wirtinger_to_code(P: WirtingerPresentation, merge_unused: bool = True) -> KnotCode:
    """Knot code whose over presentation is the cyclic presentation ``P``.

    With ``a_i = |w_i|`` and ``c_t = a_1 + ... + a_t`` the crossing list is
    ``(A_1, -1, ..., -c_1, A_2, -(c_1+1), ..., -c_2, ..., A_n, ..., -c_n)``.
    Block ``s`` of ``w_i`` (generator ``x_t``, exponent ``p``) owns the labels
    ``c_{i-1} + f_i(s-1) + l`` for ``l = 1..|p|``, where ``f_i(s)`` is the sum
    of the first ``s`` absolute block exponents; these labels go into ``A_t``
    with sign ``sign(p)``.

    A generator that occurs in no conjugator owns no over-crossings, so its
    bridge would be empty and could not be read back from the code. By default
    such generators are eliminated first (see `reduce_cyclic_chain`), which
    makes ``over_presentation(code)`` reproduce the reduced chain. Pass
    ``merge_unused=False`` to keep them; the code is still valid.
    """
    if not P.cyclic:
        raise PreconditionError("presentation is not cyclic Wirtinger (relator k: x_k -> x_{k+1})")
    gens, ws = reduce_cyclic_chain(P.generators, P.conjugators, merge_unused)
    if not gens:
        return KnotCode((), ())
    n = len(gens)
    c = [0]
    for w in ws:
        c.append(c[-1] + w.length)
    over: list[list[int]] = [[] for _ in range(n)]
    signs = [0] * c[-1]
    for i, w in enumerate(ws):
        blocks = to_block_form(w, gens).blocks
        f = 0
        for s, p in enumerate(blocks):
            t = s % n
            for l in range(1, abs(p) + 1):
                label = c[i] + f + l
                over[t].append(label)
                signs[label - 1] = 1 if p > 0 else -1
            f += abs(p)
    crossings: list[int] = []
    for t in range(n):
        crossings.extend(sorted(over[t]))
        crossings.extend(-lab for lab in range(c[t] + 1, c[t + 1] + 1))
    return KnotCode(tuple(crossings), tuple(signs))


def close_deficiency_one(P: WirtingerPresentation) -> WirtingerPresentation:
    """Append ``w_n^-1 x_n w_n x_1^-1`` with ``w_n = (w_1 ... w_{n-1})^-1``."""
    if not P.is_chain:
        raise PreconditionError("expected a chain x_1 -> x_2 -> ... -> x_n of n-1 relators")
    product = Word()
    for w in P.conjugators:
        product = product * w
    return cyclic_chain(P.generators, [*P.conjugators, product.inverse()])


def _alternating_form(r: Word, x: str, y: str) -> list[tuple[int, int]]:
    """Rotate ``r`` cyclically to ``x^n1 y^m1 ... x^nk y^mk``; return ``[(n_t, m_t)]``."""
    syl = list(r.cyclically_reduce().syllables)
    if not any(g == x for g, _ in syl):
        raise PreconditionError(f"relator {r} has no {x}-syllable, so k >= 1 fails")
    start = next(i for i, (g, _) in enumerate(syl) if g == x)
    syl = syl[start:] + syl[:start]
    pairs = []
    for g, e in syl:
        if g == x:
            pairs.append([e, 0])
        else:
            pairs[-1][1] = e
    return [tuple(p) for p in pairs]


def onerel_to_cyclic_wirtinger(
    r: Word, x: str = "x", y: str = "y"
) -> WirtingerPresentation:
    """Chain presentation on ``x, y1, ..., yk`` for ``<x, y | r>`` with ``l_y(r) = +-1``.

    With ``M_t = m_t + ... + m_k`` put ``y_t = y^-M_t x y^M_t``. Then
    ``y_1 = y^-l x y^l`` and ``y_{t+1} = y^{m_t} y_t y^{-m_t}``, while the
    relator becomes ``y_1^n1 ... y_k^nk = y^-l`` and so ``y = (y_1^n1 ... y_k^nk)^-l``.
    Substituting that expression for ``y`` leaves a chain of k conjugations.
    """
    extra = r.generators() - {x, y}
    if extra:
        raise PreconditionError(f"relator uses generators other than {x}, {y}: {sorted(extra)}")
    if r.is_identity():
        raise PreconditionError("relator is trivial")
    l = r.exponent_sum(y)
    if l not in (1, -1):
        raise PreconditionError(f"l_{y}(r) = {l}, expected +1 or -1")
    pairs = _alternating_form(r, x, y)
    k = len(pairs)
    ys = [f"{y}{t}" for t in range(1, k + 1)]
    if x in ys:
        raise PreconditionError(f"generator name {x!r} clashes with {ys}")
    product = Word()
    for name, (n_t, _) in zip(ys, pairs):
        product = product * Word.gen(name, n_t)
    y_expr = product ** (-l)
    sub = {y: y_expr}
    conj = [Word.gen(y, l).substitute(sub)]
    for t in range(1, k):
        m_prev = pairs[t - 1][1]
        conj.append(Word.gen(y, -m_prev).substitute(sub))
    return cyclic_chain([x, *ys], conj)


def presentation_to_code(P: WirtingerPresentation) -> KnotCode:
    """Close a chain if needed, then build the code."""
    if P.is_chain:
        P = close_deficiency_one(P)
    return cyclic_wirtinger_to_code(P)


def bs_presentation(m: int) -> WirtingerPresentation:
    """``<y1, y2 | y2 = w^-1 y1 w>`` with ``w = (y2^-1 y1)^m``, a presentation of BS(m, m+1)."""
    if m == 0:
        raise PreconditionError("m must be nonzero")
    w = (Word.gen("y2", -1) * Word.gen("y1")) ** m
    return cyclic_chain(("y1", "y2"), [w])


def bs_virtual_code(m: int) -> tuple[Presentation, KnotCode]:
    chain = bs_presentation(m)
    return chain.base, cyclic_wirtinger_to_code(close_deficiency_one(chain))
