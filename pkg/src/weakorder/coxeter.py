"""Finite Coxeter systems: root tables, reflection tables, and group elements.

Everything is exact.  A Coxeter graph with edge labels m_ij determines the
bilinear form B_ii = 1, B_ij = -cos(pi/m_ij) over Q(2*cos(pi/L)) with L the
lcm of the finite labels >= 3 (L = 3 when there are none).  Positive roots
are generated by closing the simple roots under simple reflections; group
elements are enumerated by breadth-first products and keyed canonically by
their inversion bit-set over the positive-root indices.

The element model is permutation-based: each element w stores the signed
action of w^{-1} on the positive-root indices, from which inversion sets,
lengths, products by reflections, and the root-to-reflection dictionary phi
all follow without further vector arithmetic.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Iterator, Sequence

import numpy as np

from .scalar import make_field

DEFAULT_ROOT_CAP = 10_000
DEFAULT_ELEMENT_CAP = 2_000_000


class CoxeterError(Exception):
    """Base class for construction and lookup failures."""


class FinitenessExceeded(CoxeterError):
    """Root or element generation exceeded the configured cap."""


class NotAReflection(CoxeterError):
    """phi_inverse applied to an element that is not a reflection."""


class WrongType(CoxeterError):
    """An operation restricted to a specific family got another type."""


# -- Coxeter graphs -------------------------------------------------------------

_NAME_RE = re.compile(r"^([ABDEFH])(\d+)$")
_I2_RE = re.compile(r"^I2\((\d+)\)$")


@dataclass(frozen=True)
class CoxeterGraph:
    """A symmetric Coxeter matrix with 1s on the diagonal, plus a display name."""

    rank: int
    m: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self) -> None:
        if self.rank < 1 or len(self.m) != self.rank:
            raise ValueError("matrix size does not match rank")
        for i, row in enumerate(self.m):
            if len(row) != self.rank:
                raise ValueError("Coxeter matrix is not square")
            for j, mij in enumerate(row):
                if i == j and mij != 1:
                    raise ValueError("diagonal entries must be 1")
                if i != j and mij < 2:
                    raise ValueError("off-diagonal entries must be >= 2")
                if mij != self.m[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")

    @property
    def ring_parameter(self) -> int:
        """L = lcm of the labels >= 3 (3 when there are none)."""
        L = 1
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.m[i][j] >= 3:
                    L = math.lcm(L, self.m[i][j])
        return L if L > 1 else 3

    @classmethod
    def from_matrix(
        cls, rows: Sequence[Sequence[int]], name: str | None = None
    ) -> "CoxeterGraph":
        return cls(len(rows), tuple(tuple(int(x) for x in r) for r in rows), name)

    @classmethod
    def from_name(cls, name: str) -> "CoxeterGraph":
        """Build one of the finite families: A_n, B_n, D_n, E6-8, F4, H3, H4, I2(m).

        >>> CoxeterGraph.from_name("A2").m
        ((1, 3), (3, 1))
        >>> CoxeterGraph.from_name("I2(7)").m
        ((1, 7), (7, 1))
        """
        text = name.strip().upper().replace(" ", "")
        match = _I2_RE.match(text)
        if match:
            m = int(match.group(1))
            if m < 2:
                raise ValueError("I2(m) needs m >= 2")
            return cls.from_matrix([[1, m], [m, 1]], name=f"I2({m})")
        match = _NAME_RE.match(text)
        if not match:
            raise ValueError(f"unrecognized type name {name!r}")
        family, n = match.group(1), int(match.group(2))
        chain_label = {i: 3 for i in range(n - 1)}
        extra: list[tuple[int, int, int]] = []
        if family == "A":
            if n < 1:
                raise ValueError("A_n needs n >= 1")
        elif family == "B":
            if n < 2:
                raise ValueError("B_n needs n >= 2")
            chain_label[n - 2] = 4
        elif family == "D":
            if n < 4:
                raise ValueError("D_n needs n >= 4")
            del chain_label[n - 2]
            extra.append((n - 3, n - 1, 3))
        elif family == "E":
            if n not in (6, 7, 8):
                raise ValueError("E_n exists for n in {6, 7, 8}")
            del chain_label[n - 2]
            extra.append((2, n - 1, 3))
        elif family == "F":
            if n != 4:
                raise ValueError("F_n exists only for n = 4")
            chain_label[1] = 4
        elif family == "H":
            if n not in (3, 4):
                raise ValueError("H_n exists for n in {3, 4}")
            chain_label[0] = 5
        rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for i, label in chain_label.items():
            rows[i][i + 1] = rows[i + 1][i] = label
        for i, j, label in extra:
            rows[i][j] = rows[j][i] = label
        return cls.from_matrix(rows, name=text)

    @classmethod
    def from_json(cls, obj: dict) -> "CoxeterGraph":
        graph = cls.from_matrix(obj["m"], name=obj.get("name"))
        if "rank" in obj and int(obj["rank"]) != graph.rank:
            raise ValueError("declared rank does not match the matrix size")
        return graph


# -- positive roots --------------------------------------------------------------


@dataclass(frozen=True)
class Root:
    """A positive root: exact coordinates in the simple-root basis."""

    index: int
    coords: tuple
    depth: int

    def render(self) -> str:
        parts = []
        for k, c in enumerate(self.coords):
            if c.is_zero():
                continue
            coeff = c.render()
            if coeff == "1":
                parts.append(f"a{k + 1}")
                continue
            if " " in coeff or "/" in coeff or coeff.startswith("-"):
                coeff = f"({coeff})"
            parts.append(f"{coeff}*a{k + 1}")
        return " + ".join(parts) if parts else "0"


def bilinear_form(graph: CoxeterGraph, field) -> tuple[tuple, ...]:
    """The symmetric form with B_ii = 1 and B_ij = -cos(pi/m_ij)."""
    one = field.from_rational(1)
    neg_half = field.from_rational(Fraction(-1, 2))
    rows = []
    for i in range(graph.rank):
        row = []
        for j in range(graph.rank):
            row.append(one if i == j else field.two_cos(graph.m[i][j]) * neg_half)
        rows.append(tuple(row))
    return tuple(rows)


class RootTable:
    """Deterministically ordered positive roots with the full reflection table.

    Ordering: the simple roots first in generator order, then by generation
    depth, ties broken by exact lexicographic coordinate comparison.  The
    table act[t][r] records s_{beta_t}(beta_r) as a signed 1-based root
    index; it is the only geometric data the group model needs.
    """

    def __init__(self, graph: CoxeterGraph, field, cap: int = DEFAULT_ROOT_CAP):
        self.graph = graph
        self.field = field
        self.form = bilinear_form(graph, field)
        self.roots: list[Root] = []
        self._cone_cache: dict[tuple[int, int], int] = {}
        self._generate(cap)
        self._build_act()

    # construction ---------------------------------------------------------

    def _pair_with_simple(self, coords: Sequence, i: int):
        acc = None
        for j, vj in enumerate(coords):
            if vj.is_zero():
                continue
            term = vj * self.form[j][i]
            acc = term if acc is None else acc + term
        return self.field.from_rational(0) if acc is None else acc

    def _generate(self, cap: int) -> None:
        n = self.graph.rank
        zero = self.field.from_rational(0)
        one = self.field.from_rational(1)
        vectors: list[tuple] = [
            tuple(one if j == i else zero for j in range(n)) for i in range(n)
        ]
        depths = [0] * n
        frontier = list(range(n))
        while frontier:
            fresh: list[int] = []
            for idx in frontier:
                coords = vectors[idx]
                for i in range(n):
                    if depths[idx] == 0 and idx == i:
                        continue  # s_i(alpha_i) = -alpha_i
                    ci = coords[i] - 2 * self._pair_with_simple(coords, i)
                    cand = coords[:i] + (ci,) + coords[i + 1:]
                    if any(cand == v for v in vectors):
                        continue
                    vectors.append(cand)
                    depths.append(depths[idx] + 1)
                    fresh.append(len(vectors) - 1)
                    if len(vectors) > cap:
                        raise FinitenessExceeded(
                            f"more than {cap} positive roots; the group is "
                            "infinite or the cap is too small"
                        )
            frontier = fresh

        def cmp_vectors(a: int, b: int) -> int:
            if depths[a] != depths[b]:
                return depths[a] - depths[b]
            for x, y in zip(vectors[a], vectors[b]):
                s = (x - y).sign()
                if s:
                    return s
            return 0

        order = list(range(n)) + sorted(range(n, len(vectors)), key=cmp_to_key(cmp_vectors))
        self.roots = [
            Root(new_idx, vectors[old], depths[old])
            for new_idx, old in enumerate(order)
        ]
        for root in self.roots:
            signs = [c.sign() for c in root.coords]
            if min(signs) < 0 or max(signs) <= 0:
                raise CoxeterError("generated a non-positive root vector")

    def _build_act(self) -> None:
        n_roots = len(self.roots)
        # Gram matrix via one B-image per root.
        b_images = []
        for root in self.roots:
            img = []
            for j in range(self.graph.rank):
                acc = None
                for i, vi in enumerate(root.coords):
                    if vi.is_zero():
                        continue
                    term = vi * self.form[i][j]
                    acc = term if acc is None else acc + term
                img.append(self.field.from_rational(0) if acc is None else acc)
            b_images.append(tuple(img))
        gram = [
            [
                sum_scalars(
                    self.field,
                    (b_images[t][j] * self.roots[r].coords[j]
                     for j in range(self.graph.rank)),
                )
                for r in range(n_roots)
            ]
            for t in range(n_roots)
        ]
        one = self.field.from_rational(1)
        for t in range(n_roots):
            if not (gram[t][t] == one):
                raise CoxeterError("root table lost the unit normalization")
        act_rows: list[tuple[int, ...]] = []
        for t in range(n_roots):
            beta = self.roots[t].coords
            row = []
            for r in range(n_roots):
                if r == t:
                    row.append(-(t + 1))
                    continue
                factor = 2 * gram[t][r]
                image = tuple(
                    v - factor * b for v, b in zip(self.roots[r].coords, beta)
                )
                row.append(self._signed_index(image))
            act_rows.append(tuple(row))
        self.act = tuple(act_rows)

    def _signed_index(self, coords: tuple) -> int:
        """Locate +/-(index+1) of a vector that must be a root of the table."""
        for root in self.roots:
            if root.coords == coords:
                return root.index + 1
        negated = tuple(-c for c in coords)
        for root in self.roots:
            if root.coords == negated:
                return -(root.index + 1)
        raise CoxeterError("reflection image is not a root of the table")

    # queries ---------------------------------------------------------------

    @property
    def n_roots(self) -> int:
        return len(self.roots)

    def pairing(self, u: Sequence, v: Sequence):
        """The bilinear form (u, v) on coordinate vectors."""
        acc = None
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if vj.is_zero():
                    continue
                term = ui * self.form[i][j] * vj
                acc = term if acc is None else acc + term
        return self.field.from_rational(0) if acc is None else acc

    def cone_mask(self, i: int, j: int) -> int:
        """Bit-set of positive roots expressible as a*beta_i + b*beta_j, a,b >= 0.

        Solved exactly by Cramer's rule on a coordinate pair with nonzero
        minor, then verified on every coordinate.  Roots are pairwise
        non-proportional, so i == j is the only parallel case.
        """
        if i > j:
            i, j = j, i
        key = (i, j)
        cached = self._cone_cache.get(key)
        if cached is not None:
            return cached
        if i == j:
            self._cone_cache[key] = 1 << i
            return self._cone_cache[key]
        alpha = self.roots[i].coords
        beta = self.roots[j].coords
        n = self.graph.rank
        pivot = None
        for p in range(n):
            for q in range(p + 1, n):
                det = alpha[p] * beta[q] - alpha[q] * beta[p]
                if det.sign() != 0:
                    pivot = (p, q, det.inverse())
                    break
            if pivot:
                break
        if pivot is None:
            raise CoxeterError("distinct positive roots cannot be proportional")
        p, q, det_inv = pivot
        mask = (1 << i) | (1 << j)
        for k in range(len(self.roots)):
            if k == i or k == j:
                continue
            gamma = self.roots[k].coords
            a = (gamma[p] * beta[q] - gamma[q] * beta[p]) * det_inv
            b = (alpha[p] * gamma[q] - alpha[q] * gamma[p]) * det_inv
            if a.sign() < 0 or b.sign() < 0:
                continue
            if all((a * alpha[c] + b * beta[c] - gamma[c]).is_zero() for c in range(n)):
                mask |= 1 << k
        self._cone_cache[key] = mask
        return mask


def sum_scalars(field, items: Iterable):
    acc = None
    for x in items:
        acc = x if acc is None else acc + x
    return field.from_rational(0) if acc is None else acc


def generate_positive_roots(
    graph: CoxeterGraph, backend: str = "exact", cap: int = DEFAULT_ROOT_CAP
) -> RootTable:
    """Close the simple roots under simple reflections, exactly."""
    field = make_field(graph.ring_parameter, backend)
    return RootTable(graph, field, cap=cap)


# -- root subsets ----------------------------------------------------------------


@dataclass(frozen=True)
class RootSubset:
    """An immutable subset of the positive roots of one table, as a bit-set."""

    table: RootTable
    bits: int

    @classmethod
    def from_indices(cls, table: RootTable, indices: Iterable[int]) -> "RootSubset":
        bits = 0
        for i in indices:
            if not 0 <= i < table.n_roots:
                raise ValueError(f"root index {i} out of range")
            bits |= 1 << i
        return cls(table, bits)

    @classmethod
    def empty(cls, table: RootTable) -> "RootSubset":
        return cls(table, 0)

    @classmethod
    def full(cls, table: RootTable) -> "RootSubset":
        return cls(table, (1 << table.n_roots) - 1)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.table.n_roots) if self.bits >> i & 1)

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __or__(self, other: "RootSubset") -> "RootSubset":
        self._check(other)
        return RootSubset(self.table, self.bits | other.bits)

    def __and__(self, other: "RootSubset") -> "RootSubset":
        self._check(other)
        return RootSubset(self.table, self.bits & other.bits)

    def __sub__(self, other: "RootSubset") -> "RootSubset":
        self._check(other)
        return RootSubset(self.table, self.bits & ~other.bits)

    def complement(self) -> "RootSubset":
        return RootSubset(self.table, ~self.bits & ((1 << self.table.n_roots) - 1))

    def issubset(self, other: "RootSubset") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def _check(self, other: "RootSubset") -> None:
        if self.table is not other.table:
            raise ValueError("root subsets belong to different tables")

    def __repr__(self) -> str:
        return f"RootSubset{self.indices()}"


# -- the group model -------------------------------------------------------------


class GroupElement:
    """A group element: a handle into its system, keyed by inversion bit-set."""

    __slots__ = ("system", "index")

    def __init__(self, system: "CoxeterSystem", index: int):
        self.system = system
        self.index = index

    @property
    def length(self) -> int:
        return self.system.lengths[self.index]

    @property
    def word(self) -> tuple[int, ...]:
        """A reduced word, 1-based generator indices."""
        return self.system.words[self.index]

    @property
    def inversion_bits(self) -> int:
        return self.system.inv_bits[self.index]

    def word_str(self) -> str:
        return " ".join(str(i) for i in self.word) if self.word else "e"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.system is other.system
            and self.index == other.index
        )

    def __hash__(self) -> int:
        return hash((id(self.system), self.index))

    def __repr__(self) -> str:
        return f"<{self.word_str()}>"


class _NumpyTables:
    """Vectorized multiplication/length tables shared by reachability sweeps."""

    def __init__(self, system: "CoxeterSystem"):
        n_roots = system.table.n_roots
        size = system.size
        act = system.table.act
        sigmas = system._sigmas
        id_by_bits = system._id_by_bits
        left = np.empty((n_roots, size), dtype=np.int32)
        right = np.empty((n_roots, size), dtype=np.int32)
        for t in range(n_roots):
            act_t = act[t]
            row_l = left[t]
            row_r = right[t]
            for x in range(size):
                sig = sigmas[x]
                bits_l = 0
                bits_r = 0
                for v in range(n_roots):
                    a = act_t[v]
                    s = sig[a - 1] if a > 0 else -sig[-a - 1]
                    if s < 0:
                        bits_l |= 1 << v
                    s = sig[v]
                    b = act_t[s - 1] if s > 0 else -act_t[-s - 1]
                    if b < 0:
                        bits_r |= 1 << v
                row_l[x] = id_by_bits[bits_l]
                row_r[x] = id_by_bits[bits_r]
        self.left = left
        self.right = right
        self.lengths = np.array(system.lengths, dtype=np.int16)
        self.asc_left = self.lengths[left] > self.lengths[None, :]
        self.asc_right = self.lengths[right] > self.lengths[None, :]
        self.refl_ids = np.array(
            [system._refl_elem[r] for r in range(n_roots)], dtype=np.int32
        )
        max_len = int(self.lengths.max())
        self.levels = [
            np.nonzero(self.lengths == k)[0].astype(np.int32)
            for k in range(max_len + 1)
        ]
        if n_roots <= 62:
            self.bits64 = np.array(system.inv_bits, dtype=np.int64)
            self.pow2 = (np.int64(1) << np.arange(n_roots, dtype=np.int64))
            self.invm = (self.bits64[:, None] >> np.arange(n_roots)[None, :]) & 1 != 0
        else:  # pragma: no cover - beyond the supported desk scale
            self.bits64 = None
            self.pow2 = None
            self.invm = np.zeros((size, n_roots), dtype=bool)
            for x, bits in enumerate(system.inv_bits):
                for r in range(n_roots):
                    if bits >> r & 1:
                        self.invm[x, r] = True


class CoxeterSystem:
    """A fully enumerated finite Coxeter group over its exact root table."""

    def __init__(self, table: RootTable, element_cap: int = DEFAULT_ELEMENT_CAP):
        self.table = table
        self.graph = table.graph
        self._enumerate(element_cap)
        self._np_tables: _NumpyTables | None = None

    def _enumerate(self, element_cap: int) -> None:
        n = self.graph.rank
        n_roots = self.table.n_roots
        act = self.table.act
        identity_sigma = tuple(range(1, n_roots + 1))
        self._sigmas: list[tuple[int, ...]] = [identity_sigma]
        self.inv_bits: list[int] = [0]
        self.words: list[tuple[int, ...]] = [()]
        self.lengths: list[int] = [0]
        self._id_by_bits: dict[int, int] = {0: 0}
        self._right_by_gen: list[list[int]] = [[-1] * n]
        queue: deque[int] = deque([0])
        while queue:
            x = queue.popleft()
            sig = self._sigmas[x]
            for i in range(n):
                act_i = act[i]
                out = []
                bits = 0
                for v in range(n_roots):
                    s = sig[v]
                    b = act_i[s - 1] if s > 0 else -act_i[-s - 1]
                    out.append(b)
                    if b < 0:
                        bits |= 1 << v
                y = self._id_by_bits.get(bits)
                if y is None:
                    y = len(self.inv_bits)
                    if y >= element_cap:
                        raise FinitenessExceeded(
                            f"more than {element_cap} group elements"
                        )
                    self._id_by_bits[bits] = y
                    self._sigmas.append(tuple(out))
                    self.inv_bits.append(bits)
                    self.words.append(self.words[x] + (i + 1,))
                    self.lengths.append(bits.bit_count())
                    # breadth-first arrival: the recorded word is reduced
                    assert self.lengths[y] == len(self.words[y])
                    self._right_by_gen.append([-1] * n)
                    queue.append(y)
                self._right_by_gen[x][i] = y
        self.size = len(self.inv_bits)
        self._refl_elem: list[int] = []
        self._root_of_elem: dict[int, int] = {}
        for r in range(n_roots):
            bits = 0
            for v, image in enumerate(act[r]):
                if image < 0:
                    bits |= 1 << v
            elem = self._id_by_bits[bits]
            assert self.lengths[elem] % 2 == 1
            self._refl_elem.append(elem)
            self._root_of_elem[elem] = r
        self._w0 = self._id_by_bits[(1 << n_roots) - 1]

    # -- basic access -------------------------------------------------------

    def element(self, index: int) -> GroupElement:
        return GroupElement(self, index)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, 0)

    @property
    def longest_element(self) -> GroupElement:
        return GroupElement(self, self._w0)

    def elements(self) -> Iterator[GroupElement]:
        return (GroupElement(self, i) for i in range(self.size))

    def element_from_word(self, word: Iterable[int]) -> GroupElement:
        """Multiply out a (not necessarily reduced) 1-based generator word."""
        x = 0
        for letter in word:
            i = int(letter) - 1
            if not 0 <= i < self.graph.rank:
                raise ValueError(f"generator index {letter} out of range")
            x = self._right_by_gen[x][i]
        return GroupElement(self, x)

    def element_by_bits(self, bits: int) -> GroupElement:
        return GroupElement(self, self._id_by_bits[bits])

    # -- reflections and phi --------------------------------------------------

    def reflection(self, root_index: int) -> GroupElement:
        """phi: positive root index -> the reflection through that root."""
        if not 0 <= root_index < self.table.n_roots:
            raise ValueError(f"root index {root_index} out of range")
        return GroupElement(self, self._refl_elem[root_index])

    def reflection_root(self, element: GroupElement) -> int:
        """phi^{-1}: reflection element -> its positive root index."""
        if element.system is not self:
            raise ValueError("element belongs to a different system")
        root = self._root_of_elem.get(element.index)
        if root is None:
            raise NotAReflection(f"{element!r} is not a reflection")
        return root

    def reflections(self) -> list[GroupElement]:
        return [GroupElement(self, i) for i in self._refl_elem]

    # -- products by reflections ----------------------------------------------

    def numpy_tables(self) -> _NumpyTables:
        if self._np_tables is None:
            self._np_tables = _NumpyTables(self)
        return self._np_tables

    def left_mul_reflection(self, root_index: int, element_index: int) -> int:
        return int(self.numpy_tables().left[root_index, element_index])

    def right_mul_reflection(self, element_index: int, root_index: int) -> int:
        return int(self.numpy_tables().right[root_index, element_index])

    def reachable_ids(self, label_bits: int, side: str) -> np.ndarray:
        """Length-increasing reachability from the identity, as a bool vector.

        side="left" steps x -> s_alpha * x (Bruhat-path arrival vertices),
        side="right" steps x -> x * s_alpha (the tau product map); in both
        cases only steps that increase length are taken and the start
        vertex (the identity) is marked.
        """
        npt = self.numpy_tables()
        mul = npt.left if side == "left" else npt.right
        asc = npt.asc_left if side == "left" else npt.asc_right
        visited = np.zeros(self.size, dtype=bool)
        visited[0] = True
        labels = np.array(
            [r for r in range(self.table.n_roots) if label_bits >> r & 1],
            dtype=np.intp,
        )
        if labels.size == 0:
            return visited
        frontier = np.array([0], dtype=np.intp)
        while frontier.size:
            grid = np.ix_(labels, frontier)
            targets = mul[grid][asc[grid]]
            if targets.size == 0:
                break
            targets = np.unique(targets)
            targets = targets[~visited[targets]]
            visited[targets] = True
            frontier = targets.astype(np.intp)
        return visited

    # -- type-A permutation dictionary ----------------------------------------

    def is_type_a(self) -> bool:
        n = self.graph.rank
        for i in range(n):
            for j in range(i + 1, n):
                expected = 3 if j == i + 1 else 2
                if self.graph.m[i][j] != expected:
                    return False
        return True

    def permutation_of(self, element: GroupElement) -> tuple[int, ...]:
        """One-line notation in S_{rank+1} under s_i <-> t_{i,i+1}."""
        if not self.is_type_a():
            raise WrongType("one-line notation needs a type-A chain graph")
        line = list(range(1, self.graph.rank + 2))
        for i in element.word:
            line[i - 1], line[i] = line[i], line[i - 1]
        return tuple(line)

    def element_of_permutation(self, line: Sequence[int]) -> GroupElement:
        if not self.is_type_a():
            raise WrongType("one-line notation needs a type-A chain graph")
        if sorted(line) != list(range(1, self.graph.rank + 2)):
            raise ValueError(f"{line!r} is not a permutation of 1..{self.graph.rank + 1}")
        work = list(line)
        letters = []
        flag = True
        while flag:
            flag = False
            for i in range(len(work) - 1):
                if work[i] > work[i + 1]:
                    work[i], work[i + 1] = work[i + 1], work[i]
                    letters.append(i + 1)
                    flag = True
        letters.reverse()
        return self.element_from_word(letters)


def enumerate_group(
    table: RootTable, element_cap: int = DEFAULT_ELEMENT_CAP
) -> CoxeterSystem:
    """Breadth-first enumeration of the whole group over a finite root table."""
    return CoxeterSystem(table, element_cap=element_cap)


def build_system(
    type_or_graph: str | CoxeterGraph,
    backend: str = "exact",
    cap: int = DEFAULT_ROOT_CAP,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> CoxeterSystem:
    """Convenience: graph -> root table -> enumerated system."""
    graph = (
        CoxeterGraph.from_name(type_or_graph)
        if isinstance(type_or_graph, str)
        else type_or_graph
    )
    return enumerate_group(
        generate_positive_roots(graph, backend=backend, cap=cap),
        element_cap=element_cap,
    )


def left_reflection_set(element: GroupElement) -> RootSubset:
    """The inversion set Phi_w as a root subset (so |result| = length)."""
    return RootSubset(element.system.table, element.inversion_bits)
