"""Finite monounary algebras, i.e. functional graphs on ``{0, ..., n-1}``."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple, Sequence

from .indexset import AP, EMPTY, IndexSet, Singleton


class AlgebraError(ValueError):
    pass


class OrbitInfo(NamedTuple):
    tail_length: int
    cycle_length: int
    cycle_entry: int


@dataclass(frozen=True)
class MonounaryAlgebra:
    succ: tuple[int, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        succ = tuple(self.succ)
        object.__setattr__(self, "succ", succ)
        n = len(succ)
        if n < 1:
            raise AlgebraError("an algebra needs at least one element")
        for i, s in enumerate(succ):
            if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < n:
                raise AlgebraError(f"succ[{i}] = {s!r} is out of range for size {n}")
        if self.names is not None:
            names = tuple(self.names)
            object.__setattr__(self, "names", names)
            if len(names) != n:
                raise AlgebraError(f"{len(names)} names given for {n} elements")
            if len(set(names)) != n:
                dup = sorted({x for x in names if names.count(x) > 1})
                raise AlgebraError(f"duplicate element names: {', '.join(dup)}")

    @property
    def size(self) -> int:
        return len(self.succ)

    def __len__(self) -> int:
        return len(self.succ)

    def S(self, x: int) -> int:
        return self.succ[x]

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def element(self, token: str | int) -> int:
        """Resolve a display name (preferred) or a 0-based index."""
        if isinstance(token, int):
            if not 0 <= token < self.size:
                raise AlgebraError(f"element {token} out of range for size {self.size}")
            return token
        if self.names is not None and token in self.names:
            return self.names.index(token)
        try:
            idx = int(token)
        except ValueError:
            raise AlgebraError(f"unknown element {token!r}") from None
        return self.element(idx)

    @cached_property
    def orbits(self) -> tuple[tuple[tuple[int, ...], int, int], ...]:
        """Per element: (orbit path without repeats, tail length, cycle length)."""
        out = []
        for o in range(self.size):
            seen: dict[int, int] = {}
            path = []
            x = o
            while x not in seen:
                seen[x] = len(path)
                path.append(x)
                x = self.succ[x]
            tail = seen[x]
            out.append((tuple(path), tail, len(path) - tail))
        return tuple(out)

    @cached_property
    def cycle_lengths(self) -> frozenset[int]:
        return frozenset(cyc for _, _, cyc in self.orbits)

    def relabel(self, perm: Sequence[int]) -> "MonounaryAlgebra":
        """Image of the algebra under ``x -> perm[x]``."""
        succ = [0] * self.size
        for x, s in enumerate(self.succ):
            succ[perm[x]] = perm[s]
        names = None
        if self.names is not None:
            names = [""] * self.size
            for x, nm in enumerate(self.names):
                names[perm[x]] = nm
        return MonounaryAlgebra(tuple(succ), None if names is None else tuple(names))


def worked_example() -> MonounaryAlgebra:
    """Four elements: 1 <-> 2, 3 -> 4, and a loop at 4."""
    return MonounaryAlgebra((1, 0, 3, 3), ("1", "2", "3", "4"))


def orbit_info(A: MonounaryAlgebra, o: int) -> OrbitInfo:
    path, tail, cycle = A.orbits[o]
    return OrbitInfo(tail, cycle, path[tail])


def iterate(A: MonounaryAlgebra, o: int, k: int) -> int:
    """S^k(o), with k reduced modulo the cycle length once past the tail."""
    if k < 0:
        raise ValueError("negative iteration count")
    path, tail, cycle = A.orbits[o]
    if k >= tail:
        k = tail + (k - tail) % cycle
    return path[k]


def exponents(A: MonounaryAlgebra, o: int, x: int) -> IndexSet:
    """The exact set {k : S^k(o) = x}."""
    path, tail, cycle = A.orbits[o]
    try:
        j = path.index(x)
    except ValueError:
        return EMPTY
    return Singleton(j) if j < tail else AP(j, cycle)


# --- serialization ----------------------------------------------------------


def parse_algebra(text: str) -> MonounaryAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraError(f"malformed algebra description: {exc}") from None
    return algebra_from_dict(data)


def algebra_from_dict(data) -> MonounaryAlgebra:
    if not isinstance(data, dict) or "succ" not in data:
        raise AlgebraError('algebra description must be an object with a "succ" array')
    succ = data["succ"]
    if not isinstance(succ, list):
        raise AlgebraError('"succ" must be an array of naturals')
    names = data.get("names")
    if names is not None and (
        not isinstance(names, list) or not all(isinstance(x, str) for x in names)
    ):
        raise AlgebraError('"names" must be an array of strings')
    return MonounaryAlgebra(tuple(succ), None if names is None else tuple(names))


def algebra_to_dict(A: MonounaryAlgebra) -> dict:
    d: dict = {}
    if A.names is not None:
        d["names"] = list(A.names)
    d["succ"] = list(A.succ)
    return d


def dump_algebra(A: MonounaryAlgebra) -> str:
    return json.dumps(algebra_to_dict(A))


def load_algebra(path) -> MonounaryAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def to_dot(A: MonounaryAlgebra, graph_name: str = "A") -> str:
    lines = [f"digraph {graph_name} {{"]
    for x in range(A.size):
        lines.append(f'  n{x} [label="{_dot_escape(A.name(x))}"];')
    for x, s in enumerate(A.succ):
        lines.append(f'  n{x} -> n{s} [label="S"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


# --- isomorphism classes ----------------------------------------------------
#
# A functional graph is determined up to isomorphism by the multiset of its
# components; a component is a directed cycle of rooted in-trees, determined by
# the cyclic sequence of tree codes up to rotation.  Tree codes are sorted
# nested tuples (AHU encoding).


def structure_code(A: MonounaryAlgebra) -> tuple:
    """Complete isomorphism invariant of A."""
    preds: list[list[int]] = [[] for _ in range(A.size)]
    for x, s in enumerate(A.succ):
        preds[s].append(x)
    cyclic = {x for x in range(A.size) if A.orbits[x][1] == 0}

    def tree(x: int) -> tuple:
        return tuple(sorted(tree(y) for y in preds[x] if y not in cyclic))

    comps = []
    done: set[int] = set()
    for start in sorted(cyclic):
        if start in done:
            continue
        cyc = A.orbits[start][0]
        done.update(cyc)
        seq = [tree(x) for x in cyc]
        comps.append(min(tuple(seq[i:] + seq[:i]) for i in range(len(seq))))
    return tuple(sorted(comps))


def table_from_code(code: tuple) -> tuple[int, ...]:
    succ: list[int] = []

    def add_tree(children: tuple, parent: int) -> None:
        label = len(succ)
        succ.append(parent)
        for child in children:
            add_tree(child, label)

    for comp in code:
        base, p = len(succ), len(comp)
        succ.extend(base + (i + 1) % p for i in range(p))
        for i, children in enumerate(comp):
            for child in children:
                add_tree(child, base + i)
    return tuple(succ)


def canonical_form(A: MonounaryAlgebra) -> MonounaryAlgebra:
    """The representative of A's isomorphism class (names dropped)."""
    return MonounaryAlgebra(table_from_code(structure_code(A)))


def is_isomorphic(A: MonounaryAlgebra, B: MonounaryAlgebra) -> bool:
    return A.size == B.size and structure_code(A) == structure_code(B)


@lru_cache(maxsize=None)
def _multisets(size: int, parts) -> tuple:
    """Sorted tuples of items whose sizes sum to ``size``; ``parts(m)`` lists items of size m."""
    if size == 0:
        return ((),)
    out = set()
    for m in range(1, size + 1):
        for item in parts(m):
            for rest in _multisets(size - m, parts):
                out.add(tuple(sorted((item,) + rest)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _trees(size: int) -> tuple:
    return tuple(_multisets(size - 1, _trees))


@lru_cache(maxsize=None)
def _components(size: int) -> tuple:
    out = set()
    for p in range(1, size + 1):
        for comp in _compositions(size, p):
            for seq in itertools.product(*(_trees(m) for m in comp)):
                out.add(min(tuple(seq[i:] + seq[:i]) for i in range(p)))
    return tuple(sorted(out))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_algebras(n: int, canonical: bool = False) -> Iterator[MonounaryAlgebra]:
    """All n^n algebras on {0..n-1} in lexicographic order of the succ table,
    or one canonical representative per isomorphism class."""
    if n < 1:
        raise ValueError("n must be positive")
    if not canonical:
        for succ in itertools.product(range(n), repeat=n):
            yield MonounaryAlgebra(succ)
        return
    tables = sorted(table_from_code(code) for code in _multisets(n, _components))
    for succ in tables:
        yield MonounaryAlgebra(succ)
