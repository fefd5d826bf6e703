"""Congruences of finite monounary algebras and quotient experiments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .algebra import AlgebraError, MonounaryAlgebra
from .proportion import proportion_holds


class CongruenceError(ValueError):
    pass


MAX_CONGRUENCE_SIZE = 10  # Bell(10) = 115975 partitions


@dataclass(frozen=True)
class Partition:
    """Blocks sorted by least element, each block sorted."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, size: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        """Unlisted elements become singleton blocks."""
        seen: set[int] = set()
        out = []
        for block in blocks:
            block = tuple(sorted(block))
            if not block:
                raise CongruenceError("empty block")
            for x in block:
                if not 0 <= x < size:
                    raise CongruenceError(f"element {x} out of range for size {size}")
                if x in seen:
                    raise CongruenceError(f"element {x} occurs in two blocks")
                seen.add(x)
            out.append(block)
        out.extend((x,) for x in range(size) if x not in seen)
        return cls(tuple(sorted(out)))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        groups: dict[int, list[int]] = {}
        for x, lab in enumerate(labels):
            groups.setdefault(lab, []).append(x)
        return cls(tuple(sorted(tuple(g) for g in groups.values())))

    @property
    def size(self) -> int:
        return sum(map(len, self.blocks))

    def block_of(self) -> list[int]:
        out = [0] * self.size
        for i, block in enumerate(self.blocks):
            for x in block:
                out[x] = i
        return out


def parse_partition(A: MonounaryAlgebra, spec: str) -> Partition:
    """``"a,a'|b,b'|c|d"`` with elements given by name or index."""
    blocks = []
    for chunk in spec.split("|"):
        chunk = chunk.strip()
        if not chunk:
            raise CongruenceError(f"empty block in {spec!r}")
        try:
            blocks.append([A.element(tok.strip()) for tok in chunk.split(",")])
        except AlgebraError as exc:
            raise CongruenceError(str(exc)) from None
    return Partition.from_blocks(A.size, blocks)


def format_partition(A: MonounaryAlgebra, p: Partition) -> str:
    return "|".join(",".join(A.name(x) for x in block) for block in p.blocks)


def is_congruence(A: MonounaryAlgebra, p: Partition) -> bool:
    if p.size != A.size:
        raise CongruenceError(f"partition covers {p.size} elements, algebra has {A.size}")
    block = p.block_of()
    # each block must map into a single block
    return all(len({block[A.succ[x]] for x in blk}) == 1 for blk in p.blocks)


def _restricted_growth(n: int) -> Iterator[list[int]]:
    labels = [0] * n

    def fill(i: int, top: int) -> Iterator[list[int]]:
        if i == n:
            yield labels
            return
        for lab in range(top + 2):
            labels[i] = lab
            yield from fill(i + 1, max(top, lab))

    if n == 0:
        yield []
        return
    yield from fill(1, 0)


def all_partitions(n: int) -> Iterator[Partition]:
    for labels in _restricted_growth(n):
        yield Partition.from_labels(labels)


def all_congruences(A: MonounaryAlgebra) -> Iterator[Partition]:
    if A.size > MAX_CONGRUENCE_SIZE:
        raise CongruenceError(f"congruence enumeration is capped at size {MAX_CONGRUENCE_SIZE}")
    for p in all_partitions(A.size):
        if is_congruence(A, p):
            yield p


class FactorAlgebra(NamedTuple):
    algebra: MonounaryAlgebra
    projection: tuple[int, ...]


def factor(A: MonounaryAlgebra, theta: Partition) -> FactorAlgebra:
    if not is_congruence(A, theta):
        raise CongruenceError("partition is not a congruence")
    block = theta.block_of()
    succ = tuple(block[A.succ[blk[0]]] for blk in theta.blocks)
    names = tuple("{" + ",".join(A.name(x) for x in blk) + "}" for blk in theta.blocks)
    return FactorAlgebra(MonounaryAlgebra(succ, names), tuple(block))


class QuotientReport(NamedTuple):
    in_A: bool
    in_quotient: bool
    cross: bool


def quotient_compat_experiment(
    A: MonounaryAlgebra, theta: Partition, a: int, b: int, c: int, d: int
) -> QuotientReport:
    """a:b::c:d in A, a/t:b/t::c/t:d/t in A/t, and a:b::a/t:b/t across (A, A/t)."""
    Q, proj = factor(A, theta)
    return QuotientReport(
        proportion_holds(A, A, a, b, c, d).holds,
        proportion_holds(Q, Q, proj[a], proj[b], proj[c], proj[d]).holds,
        proportion_holds(A, Q, a, b, proj[a], proj[b]).holds,
    )


def _alg(edges: dict[str, str]) -> MonounaryAlgebra:
    names = tuple(edges)
    return MonounaryAlgebra(tuple(names.index(edges[x]) for x in names), names)


def congruence_fixtures() -> dict[str, tuple[MonounaryAlgebra, str]]:
    """The three algebras separating proportions from quotients, with their congruence."""
    return {
        # proportion holds in A but not in A/theta
        "lost-in-quotient": (
            _alg({"a": "b'", "a'": "b", "b": "b", "b'": "b'", "c": "c", "d": "d"}),
            "a,a'|b,b'|c|d",
        ),
        # proportion holds in A/theta but not in A
        "gained-in-quotient": (
            _alg({"a": "b'", "a'": "b", "b": "b", "b'": "b'", "c": "d", "d": "d"}),
            "a,a'|b,b'|c|d",
        ),
        # a:b::a/theta:b/theta fails across (A, A/theta)
        "cross-quotient": (
            _alg({"a": "b'", "a'": "b", "b": "b", "b'": "b'"}),
            "a,a'|b,b'",
        ),
    }
