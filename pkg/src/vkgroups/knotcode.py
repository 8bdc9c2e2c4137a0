"""Knot codes: validation, standard normal form, arcs and bridges.

A knot code is a pair ``(crossings, signs)``. ``crossings`` lists the
crossing labels met along the knot, negative for an under-pass and positive
for an over-pass; ``signs[k-1]`` is the sign of crossing ``k``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import ParseError, PreconditionError, ValidationError

__all__ = [
    "KnotCode",
    "ArcDecomposition",
    "BridgeDecomposition",
    "validate_code",
    "standard_normal_form",
    "is_standard_normal_form",
    "arcs",
    "bridge_decomposition",
    "bridge_number",
    "parse_code_text",
    "load_code",
]


@dataclass(frozen=True)
class KnotCode:
    """Knot code with labels exactly ``1..n``. Use `validate_code` for raw input."""

    crossings: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(int(c) for c in self.crossings))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        n = len(self.signs)
        if len(self.crossings) != 2 * n:
            raise ValidationError(
                f"{len(self.crossings)} crossing entries but {n} signs"
            )
        _check_pairing(self.crossings)
        labels = {abs(c) for c in self.crossings}
        if labels != set(range(1, n + 1)):
            raise ValidationError(f"labels must be exactly 1..{n}")
        for k, s in enumerate(self.signs, 1):
            if s not in (1, -1):
                raise ValidationError(f"sign of crossing {k} must be +1 or -1, got {s}")

    @property
    def n(self) -> int:
        return len(self.signs)

    def is_trivial(self) -> bool:
        return not self.crossings

    def sign(self, label: int) -> int:
        return self.signs[label - 1]

    def relabel(self, mapping: Mapping[int, int]) -> "KnotCode":
        """Apply a label permutation ``old -> new`` to crossings and signs."""
        crossings = tuple((1 if c > 0 else -1) * mapping[abs(c)] for c in self.crossings)
        signs = [0] * self.n
        for old, new in mapping.items():
            signs[new - 1] = self.signs[old - 1]
        return KnotCode(crossings, tuple(signs))

    def rotate(self, k: int) -> "KnotCode":
        if not self.crossings:
            return self
        k %= len(self.crossings)
        return KnotCode(self.crossings[k:] + self.crossings[:k], self.signs)

    def to_dict(self) -> dict:
        return {"crossings": list(self.crossings), "signs": list(self.signs)}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def to_text(self) -> str:
        signs = ("+" if s > 0 else "-" for s in self.signs)
        return " ".join(["code:", *map(str, self.crossings), ";", "signs:", *signs])

    def __str__(self):
        return f"({tuple(self.crossings)}, {tuple(self.signs)})"


def _check_pairing(crossings: Sequence[int]) -> None:
    seen: set[int] = set()
    for c in crossings:
        if c == 0:
            raise ValidationError("crossing label 0 is not allowed")
        if c in seen:
            raise ValidationError(f"label {c:+d} appears more than once")
        seen.add(c)
    for c in seen:
        if -c not in seen:
            raise ValidationError(
                f"label {abs(c)} is unpaired: {c:+d} appears but {-c:+d} does not"
            )


def validate_code(crossings: Sequence[int], signs: Sequence[int]) -> KnotCode:
    """Check a raw knot code and renumber its labels to ``1..n``.

    Labels may be arbitrary positive integers; the sign list is then indexed
    by label and must have length equal to the largest label. Codes already
    labelled ``1..n`` are returned unchanged, otherwise labels are renumbered
    in order of first appearance.
    """
    try:
        crossings = [int(c) for c in crossings]
        signs = [int(s) for s in signs]
    except (TypeError, ValueError):
        raise ValidationError("crossings and signs must be integers") from None
    _check_pairing(crossings)
    labels = {abs(c) for c in crossings}
    top = max(labels, default=0)
    if len(signs) != top:
        raise ValidationError(
            f"sign list has length {len(signs)} but the largest label is {top}"
        )
    for lab in labels:
        if signs[lab - 1] not in (1, -1):
            raise ValidationError(f"sign of label {lab} must be +1 or -1")
    if labels == set(range(1, top + 1)):
        return KnotCode(tuple(crossings), tuple(signs))
    order: dict[int, int] = {}
    for c in crossings:
        order.setdefault(abs(c), len(order) + 1)
    new_crossings = tuple((1 if c > 0 else -1) * order[abs(c)] for c in crossings)
    new_signs = [0] * len(order)
    for old, new in order.items():
        new_signs[new - 1] = signs[old - 1]
    return KnotCode(new_crossings, tuple(new_signs))


def is_standard_normal_form(K: KnotCode) -> bool:
    unders = [-c for c in K.crossings if c < 0]
    return unders == list(range(1, K.n + 1)) and (not K.crossings or K.crossings[0] == -1)


def standard_normal_form(K: KnotCode) -> KnotCode:
    """Rotate to the first under-crossing and number crossings in under-pass order."""
    if K.is_trivial():
        return K
    start = next((i for i, c in enumerate(K.crossings) if c < 0), None)
    if start is None:
        raise ValidationError("nonempty code without under-crossings")
    rotated = K.rotate(start)
    mapping: dict[int, int] = {}
    for c in rotated.crossings:
        if c < 0:
            mapping[-c] = len(mapping) + 1
    return rotated.relabel(mapping)


@dataclass(frozen=True)
class ArcDecomposition:
    arcs: tuple[tuple[int, ...], ...]

    def over_labels(self, i: int) -> tuple[int, ...]:
        """The list A_i of arc ``i`` (1-based)."""
        return self.arcs[i - 1][1:-1]

    def __len__(self):
        return len(self.arcs)


def arcs(K: KnotCode) -> ArcDecomposition:
    """Arcs ``S_i = (-i, A_i, -(i+1))`` of a code in standard normal form."""
    if not is_standard_normal_form(K):
        raise PreconditionError("arcs need a code in standard normal form")
    if K.is_trivial():
        return ArcDecomposition(())
    n, L = K.n, K.crossings
    pos = [L.index(-i) for i in range(1, n + 1)] + [len(L)]
    out = []
    for i in range(n):
        inner = L[pos[i] + 1 : pos[i + 1]]
        end = -(i + 2) if i + 1 < n else -1
        out.append((L[pos[i]], *inner, end))
    return ArcDecomposition(tuple(out))


def bridge_number(K: KnotCode) -> int:
    """Number of arcs of length > 2 of the code (not the class minimum)."""
    return sum(1 for a in arcs(standard_normal_form(K)).arcs if len(a) > 2)


@dataclass(frozen=True)
class BridgeDecomposition:
    """Bridges and under-runs of a code rewritten in the over form.

    ``code`` is the rotated and relabelled code
    ``(A_1, -1, ..., -a_1, A_2, -(a_1+1), ..., -a_m)``; ``bridges[t]`` is
    ``(-a_{t-1}, A_{t+1}, -(a_{t-1}+1))`` in 0-based Python indexing and
    ``under_runs[t]`` the labels passed under right after bridge ``t``.
    """

    code: KnotCode
    bridges: tuple[tuple[int, ...], ...]
    under_runs: tuple[tuple[int, ...], ...]

    def over_labels(self, t: int) -> tuple[int, ...]:
        return self.bridges[t][1:-1]

    @property
    def segments(self) -> int:
        return len(self.bridges)

    @property
    def bridge_count(self) -> int:
        return sum(1 for b in self.bridges if len(b) > 2)

    def bridge_of(self) -> dict[int, int]:
        """Map each label to the index of the bridge passing over it."""
        return {lab: t for t, b in enumerate(self.bridges) for lab in b[1:-1]}


def bridge_decomposition(K: KnotCode) -> BridgeDecomposition:
    """Split a code into maximal over-runs (bridges) and under-runs.

    The list is rotated to the first maximal over-run starting at or after
    position 0, and under-crossings are renumbered in traversal order so
    that the under-runs become consecutive blocks.
    """
    if K.is_trivial():
        return BridgeDecomposition(K, (), ())
    L = K.crossings
    N = len(L)
    start = next(i for i in range(N) if L[i] > 0 and L[i - 1] < 0)
    rotated = K.rotate(start)
    mapping: dict[int, int] = {}
    for c in rotated.crossings:
        if c < 0:
            mapping[-c] = len(mapping) + 1
    code = rotated.relabel(mapping)

    overs: list[list[int]] = []
    unders: list[list[int]] = []
    for c in code.crossings:
        if c > 0:
            if len(overs) == len(unders):
                overs.append([])
            overs[-1].append(c)
        else:
            if len(unders) < len(overs):
                unders.append([])
            unders[-1].append(-c)
    bridges = []
    m = len(overs)
    for t in range(m):
        prev = unders[t - 1][-1]
        bridges.append((-prev, *overs[t], -unders[t][0]))
    return BridgeDecomposition(
        code, tuple(bridges), tuple(tuple(u) for u in unders)
    )


_TEXT = re.compile(r"^\s*code\s*:(?P<code>[^;]*);\s*signs\s*:(?P<signs>.*)$", re.S)


def parse_code_text(text: str) -> KnotCode:
    """Parse ``code: -1 2 -3 1 -2 3 ; signs: - + +``."""
    m = _TEXT.match(text)
    if not m:
        raise ParseError("expected 'code: ... ; signs: ...'", 0)
    crossings = []
    for tok in m.group("code").split():
        try:
            crossings.append(int(tok))
        except ValueError:
            raise ParseError(f"bad crossing label {tok!r}", text.find(tok)) from None
    signs = []
    for tok in m.group("signs").split():
        if tok in ("+", "+1", "1"):
            signs.append(1)
        elif tok in ("-", "-1"):
            signs.append(-1)
        else:
            raise ParseError(f"bad sign {tok!r}", m.start("signs") + m.group("signs").find(tok))
    return validate_code(crossings, signs)


def load_code(text: str) -> KnotCode:
    """Accept either the JSON or the compact text form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        if not isinstance(data, dict) or "crossings" not in data or "signs" not in data:
            raise ValidationError("knot code JSON needs 'crossings' and 'signs'")
        return validate_code(data["crossings"], data["signs"])
    return parse_code_text(stripped)
