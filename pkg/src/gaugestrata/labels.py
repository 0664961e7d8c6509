"""Howe-subgroup labels of SU(n) and their partial order.

A Howe subgroup of SU(n) (a subgroup that is the centralizer of some subset)
is determined, up to conjugacy, by a pair of positive integer sequences
(k, m) with sum(k_i * m_i) = n, taken up to simultaneous permutation.
This module provides canonical representatives of these labels, the
splitting/merging calculus that generates direct successors in the
subgroup-inclusion order, and the resulting Hasse diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache


class LabelError(ValueError):
    """Invalid label data or malformed label string."""


@dataclass(frozen=True, order=True)
class HoweLabel:
    """Canonical label (k, m) with all entries >= 1 and sum(k_i*m_i) = n.

    The pairs (k_i, m_i) are stored in descending lexicographic order, so
    two labels related by a simultaneous permutation compare equal. Use
    :func:`canonicalize` to build one from arbitrary input order.
    """

    k: tuple[int, ...]
    m: tuple[int, ...]

    def __post_init__(self):
        if len(self.k) != len(self.m):
            raise LabelError(f"length mismatch: k has {len(self.k)} entries, m has {len(self.m)}")
        if len(self.k) == 0:
            raise LabelError("label must have at least one factor")
        for seq in (self.k, self.m):
            if any(not isinstance(x, int) or x < 1 for x in seq):
                raise LabelError(f"entries must be positive integers, got {seq}")
        if list(self.pairs) != sorted(self.pairs, reverse=True):
            raise LabelError(f"pairs {self.pairs} not in canonical order; use canonicalize()")

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.k, self.m))

    @property
    def r(self) -> int:
        """Number of factors."""
        return len(self.k)

    @property
    def n(self) -> int:
        return sum(ki * mi for ki, mi in zip(self.k, self.m))

    def __str__(self) -> str:
        return format_label(self)


def canonicalize(k, m) -> HoweLabel:
    """Build the canonical representative of the label class of (k, m).

    Inputs related by a simultaneous permutation of k and m yield the
    identical result. Raises LabelError on length mismatch or entries < 1.
    """
    k = tuple(k)
    m = tuple(m)
    if len(k) != len(m):
        raise LabelError(f"length mismatch: k has {len(k)} entries, m has {len(m)}")
    pairs = sorted(zip(k, m), reverse=True)
    return HoweLabel(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


_LABEL_RE = re.compile(r"^\s*\(\s*([0-9,\s]+)\|\s*([0-9,\s]+)\)\s*$")


def parse_label(text: str) -> HoweLabel:
    """Parse a label string `(k1 k2 ...|m1 m2 ...)`.

    Separators may be spaces, commas, or both; the result is canonical.
    """
    match = _LABEL_RE.match(text)
    if not match:
        raise LabelError(f"cannot parse label {text!r}; expected '(k1 k2 ...|m1 m2 ...)'")
    try:
        k = [int(tok) for tok in re.split(r"[,\s]+", match.group(1).strip()) if tok]
        m = [int(tok) for tok in re.split(r"[,\s]+", match.group(2).strip()) if tok]
    except ValueError as exc:
        raise LabelError(f"bad integer in label {text!r}") from exc
    if not k or not m:
        raise LabelError(f"empty sequence in label {text!r}")
    return canonicalize(k, m)


def format_label(label: HoweLabel) -> str:
    """Emit the grammar form with single-space separators, e.g. `(6 4 4|2 1 1)`."""
    return "({}|{})".format(" ".join(map(str, label.k)), " ".join(map(str, label.m)))


def enumerate_labels(n: int) -> list[HoweLabel]:
    """All canonical labels with total n, sorted deterministically.

    Labels are emitted directly in canonical form by descending over pair
    multisets, so no dedup pass is needed.
    """
    if n < 1:
        raise LabelError(f"n must be positive, got {n}")
    out: list[HoweLabel] = []

    def descend(remaining: int, max_pair: tuple[int, int], acc: list[tuple[int, int]]):
        if remaining == 0:
            out.append(HoweLabel(tuple(p[0] for p in acc), tuple(p[1] for p in acc)))
            return
        for ki in range(min(max_pair[0], remaining), 0, -1):
            m_top = remaining // ki
            if ki == max_pair[0]:
                m_top = min(m_top, max_pair[1])
            for mi in range(m_top, 0, -1):
                acc.append((ki, mi))
                descend(remaining - ki * mi, (ki, mi), acc)
                acc.pop()

    descend(n, (n, n), [])
    return sorted(out)


def dual(label: HoweLabel) -> HoweLabel:
    """Centralizer label: swap the roles of k and m.

    An involution on canonical labels; it inverts the partial order.
    """
    return canonicalize(label.m, label.k)


def split(label: HoweLabel, i: int, m1: int, m2: int) -> HoweLabel:
    """Split factor i (0-based): duplicate k_i and replace m_i by (m1, m2).

    Requires m_i >= 2 and m1 + m2 = m_i with both parts positive.
    """
    if not 0 <= i < label.r:
        raise LabelError(f"index {i} out of range for r={label.r}")
    if label.m[i] < 2:
        raise LabelError(f"cannot split factor {i}: m_i = 1")
    if m1 < 1 or m2 < 1 or m1 + m2 != label.m[i]:
        raise LabelError(f"split parts ({m1}, {m2}) must be positive and sum to m_i = {label.m[i]}")
    k = label.k[: i + 1] + (label.k[i],) + label.k[i + 1 :]
    m = label.m[:i] + (m1, m2) + label.m[i + 1 :]
    return canonicalize(k, m)


def merge(label: HoweLabel, i: int, j: int) -> HoweLabel:
    """Merge factors i < j (0-based): replace k_i by k_i + k_j, drop factor j.

    Requires m_i = m_j.
    """
    if not 0 <= i < j < label.r:
        raise LabelError(f"need 0 <= i < j < r, got i={i}, j={j}, r={label.r}")
    if label.m[i] != label.m[j]:
        raise LabelError(f"cannot merge: m_i = {label.m[i]} != m_j = {label.m[j]}")
    k = list(label.k)
    m = list(label.m)
    k[i] += k[j]
    del k[j], m[j]
    return canonicalize(k, m)


def direct_successors(label: HoweLabel) -> frozenset[HoweLabel]:
    """Labels covering this one, from all admissible splits and merges."""
    out = set()
    for i in range(label.r):
        mi = label.m[i]
        for m1 in range(1, mi // 2 + 1):
            out.add(split(label, i, m1, mi - m1))
        for j in range(i + 1, label.r):
            if label.m[i] == label.m[j]:
                out.add(merge(label, i, j))
    return frozenset(out)


@lru_cache(maxsize=None)
def descendants(label: HoweLabel) -> frozenset[HoweLabel]:
    """All labels strictly above `label`. The successor graph is acyclic
    (sum(k_i^2) strictly increases along edges), so plain recursion is safe."""
    out: set[HoweLabel] = set()
    for succ in direct_successors(label):
        out.add(succ)
        out |= descendants(succ)
    return frozenset(out)


def leq(a: HoweLabel, b: HoweLabel) -> bool:
    """Partial order: SU(a) is conjugate to a subgroup of SU(b)."""
    if a.n != b.n:
        raise LabelError(f"labels have different totals: {a.n} != {b.n}")
    return a == b or b in descendants(a)


@dataclass(frozen=True)
class HasseDiagram:
    """Covering relation of a finite set of labels, as a DAG."""

    n: int
    nodes: frozenset[HoweLabel]
    edges: frozenset[tuple[HoweLabel, HoweLabel]]

    def successors(self, label: HoweLabel) -> frozenset[HoweLabel]:
        return frozenset(b for a, b in self.edges if a == label)

    def sorted_nodes(self) -> list[HoweLabel]:
        return sorted(self.nodes)

    def sorted_edges(self) -> list[tuple[HoweLabel, HoweLabel]]:
        return sorted(self.edges)


class TransitiveReductionError(RuntimeError):
    """The covering relation implied an edge by a longer path."""


def _check_reduced(edges: frozenset[tuple[HoweLabel, HoweLabel]],
                   succ_of) -> None:
    # An edge (u, v) is redundant iff v is reachable from some other
    # successor of u. Flag rather than silently reduce.
    for u, v in edges:
        for w in succ_of(u):
            if w != v and v in descendants(w):
                raise TransitiveReductionError(
                    f"edge {format_label(u)} -> {format_label(v)} is implied "
                    f"by a path through {format_label(w)}")


def hasse_diagram(n: int) -> HasseDiagram:
    """Hasse diagram of all labels with total n.

    The successor calculus is expected to produce the covering relation
    directly; a transitive-reduction check guards against that assumption
    failing.
    """
    nodes = enumerate_labels(n)
    edges = frozenset((a, b) for a in nodes for b in direct_successors(a))
    _check_reduced(edges, direct_successors)
    return HasseDiagram(n=n, nodes=frozenset(nodes), edges=edges)
