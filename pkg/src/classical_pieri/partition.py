"""Partitions, Young-diagram containment and strip enumeration."""

from __future__ import annotations

from typing import Iterable, Iterator, Literal

StripKind = Literal["horizontal", "vertical"]
_KINDS = ("horizontal", "vertical")


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are trimmed on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same value (same hash, equal).
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"not weakly decreasing: {tuple(parts)}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part: {tuple(parts)}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma separated form ``3,2,1`` (empty string is ``()``)."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(t) for t in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition: {text!r}") from None
        return cls(parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), zero past the length."""
        return self[i] if i < len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} nonzero parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment ``other ⊆ self``."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def _check_kind(kind: str) -> None:
    if kind not in _KINDS:
        raise ValueError(f"strip kind must be 'horizontal' or 'vertical', got {kind!r}")


def _strip_by_cells(kind: StripKind, inner: Partition, outer: Partition) -> bool:
    # Definitional check: count boxes of outer/inner per column (per row).
    if not outer.contains(inner):
        return False
    cells = [(r, c) for r in range(len(outer)) for c in range(inner.part(r), outer[r])]
    index = 1 if kind == "horizontal" else 0
    seen = set()
    for cell in cells:
        if cell[index] in seen:
            return False
        seen.add(cell[index])
    return True


def _strip_by_interleaving(kind: StripKind, inner: Partition, outer: Partition) -> bool:
    if kind == "vertical":
        inner, outer = conjugate(inner), conjugate(outer)
    # outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
    for r in range(len(outer)):
        if not outer[r] >= inner.part(r) >= outer.part(r + 1):
            return False
    return len(inner) <= len(outer)


def is_strip(kind: StripKind, inner: Iterable[int], outer: Iterable[int]) -> bool:
    """True iff ``inner ⊆ outer`` and ``outer/inner`` is a strip of ``kind``."""
    _check_kind(kind)
    inner, outer = Partition(inner), Partition(outer)
    result = _strip_by_interleaving(kind, inner, outer)
    assert result == _strip_by_cells(kind, inner, outer), (kind, inner, outer)
    return result


def strips_above(
    kind: StripKind, lam: Iterable[int], k: int, max_len: int
) -> set[Partition]:
    """All ``mu ⊇ lam`` with ``mu/lam`` a ``k``-box strip and ``length(mu) <= max_len``."""
    _check_kind(kind)
    lam = Partition(lam)
    if len(lam) > max_len:
        raise ValueError(f"{lam} is longer than max_len={max_len}")
    if k < 0:
        return set()
    rows = lam.padded(max_len)
    out: set[Partition] = set()

    if kind == "vertical":
        # one box or none per row; row r may grow only if row r-1 stays ahead
        def rec(r: int, left: int, prev: int | None, acc: list[int]) -> None:
            if left > max_len - r:
                return
            if r == max_len:
                out.add(Partition(acc))
                return
            for add in (0, 1):
                if add > left:
                    break
                new = rows[r] + add
                if prev is not None and new > prev:
                    continue
                acc.append(new)
                rec(r + 1, left - add, new, acc)
                acc.pop()

    else:
        # mu_1 >= lam_1 >= mu_2 >= lam_2 >= ...
        def rec(r: int, left: int, prev: int | None, acc: list[int]) -> None:
            if r == max_len:
                if left == 0:
                    out.add(Partition(acc))
                return
            hi = rows[r] + left if prev is None else min(rows[r - 1], rows[r] + left)
            for new in range(rows[r], hi + 1):
                acc.append(new)
                rec(r + 1, left - (new - rows[r]), new, acc)
                acc.pop()

    rec(0, k, None, [])
    return out


def strips_below(kind: StripKind, lam: Iterable[int], k: int) -> set[Partition]:
    """All ``mu ⊆ lam`` with ``lam/mu`` a ``k``-box strip of ``kind``."""
    _check_kind(kind)
    lam = Partition(lam)
    n = len(lam)
    out: set[Partition] = set()
    if k < 0:
        return out

    def rec(r: int, left: int, acc: list[int]) -> None:
        if r == n:
            if left == 0:
                out.add(Partition(acc))
            return
        if kind == "vertical":
            choices = (lam[r], lam[r] - 1)
        else:
            # lam_r >= mu_r >= lam_{r+1}
            choices = range(lam[r], lam.part(r + 1) - 1, -1)
        for new in choices:
            removed = lam[r] - new
            if removed > left:
                break
            if acc and new > acc[-1]:
                continue
            acc.append(new)
            rec(r + 1, left - removed, acc)
            acc.pop()

    rec(0, k, [])
    return out


def partitions_of(size: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``size`` in reverse lexicographic order, optionally bounded."""
    if size < 0:
        return
    max_len = size if max_len is None else max_len
    max_part = size if max_part is None else max_part

    def rec(left: int, cap: int, slots: int, acc: list[int]) -> Iterator[Partition]:
        if left == 0:
            yield Partition(acc)
            return
        if slots == 0:
            return
        for p in range(min(left, cap), 0, -1):
            if p * slots < left:
                break
            acc.append(p)
            yield from rec(left - p, p, slots - 1, acc)
            acc.pop()

    yield from rec(size, max_part, max_len, [])


def partitions_up_to(max_size: int, max_len: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions with ``|lam| <= max_size`` and ``length <= max_len``."""
    for s in range(max_size + 1):
        yield from partitions_of(s, max_len, max_part)
