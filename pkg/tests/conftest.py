"""Independent oracles shared by the test modules.

Nothing here calls the library's Weyl-group code: the group is rebuilt by
brute force as signed permutations, and characters are checked through the
Weyl character identity in the group ring.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from functools import lru_cache
from itertools import permutations, product

from classical_pieri.rootdata import GroupType


def perm_sign(p) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def brute_weyl_group(family: str, n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """Elements as ``(perm, signs, det)`` acting by ``(w v)_i = signs[i] * v[perm[i]]``."""
    out = []
    sign_choices = [(1,) * n] if family == "A" else list(product((1, -1), repeat=n))
    for perm in permutations(range(n)):
        for signs in sign_choices:
            flips = signs.count(-1)
            if family == "D" and flips % 2:
                continue
            det = perm_sign(perm) * (-1) ** flips
            if family == "D":
                det = perm_sign(perm)
            out.append((perm, signs, det))
    return tuple(out)


def act(element, v):
    perm, signs, _ = element
    return tuple(s * v[p] for s, p in zip(signs, perm))


def brute_dominant(family: str, v) -> bool:
    n = len(v)
    if family == "A":
        return all(v[i] >= v[i + 1] for i in range(n - 1))
    if family == "D":
        return all(v[i] >= v[i + 1] for i in range(n - 2)) and (n < 2 or v[n - 2] >= abs(v[n - 1]))
    return all(v[i] >= v[i + 1] for i in range(n - 1)) and v[-1] >= 0


def brute_straighten(family: str, v):
    """``(det w, w v)`` for the element taking ``v`` into the dominant chamber, or ``(0, None)`` on a wall."""
    group = brute_weyl_group(family, len(v))
    images = [act(w, v) for w in group]
    if len(set(images)) < len(group):
        return 0, None
    for w, image in zip(group, images):
        if brute_dominant(family, image):
            return w[2], image
    raise AssertionError("no dominant image")


def brute_rho(family: str, n: int) -> tuple[int, ...]:
    """Doubled rho, computed as the sum of positive roots."""
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i], e[j] = 1, -1
            roots.append(tuple(e))
            if family != "A":
                e = [0] * n
                e[i], e[j] = 1, 1
                roots.append(tuple(e))
        if family in "BC":
            e = [0] * n
            e[i] = 1 if family == "B" else 2
            roots.append(tuple(e))
    return tuple(sum(r[k] for r in roots) for k in range(n))


def alternant(family: str, v) -> Counter:
    acc: Counter = Counter()
    for w in brute_weyl_group(family, len(v)):
        acc[act(w, v)] += w[2]
    return acc


def multiply(p: dict, q: dict) -> dict:
    acc: dict = defaultdict(int)
    for a, x in p.items():
        for b, y in q.items():
            acc[tuple(s + t for s, t in zip(a, b))] += x * y
    return {k: v for k, v in acc.items() if v}


def weyl_identity_holds(g: GroupType, lam, diagram) -> bool:
    """``char(lam) * A(rho) == A(lam + rho)`` exactly, in doubled coordinates."""
    r = brute_rho(g.family, g.rank)
    lhs = multiply(dict(diagram.items()), {k: v for k, v in alternant(g.family, r).items() if v})
    rhs = {k: v for k, v in alternant(g.family, tuple(a + b for a, b in zip(lam, r))).items() if v}
    return lhs == rhs


def kostka(shape, content) -> int:
    """Number of semistandard tableaux of ``shape`` with the given content (brute force)."""
    shape = [p for p in shape if p]
    n_letters = len(content)
    rows: list[list[int]] = [[0] * p for p in shape]
    cells = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    need = list(content)

    def fill(k: int) -> int:
        if k == len(cells):
            return int(all(x == 0 for x in need))
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        total = 0
        for letter in range(lo, n_letters + 1):
            if need[letter - 1] == 0:
                continue
            need[letter - 1] -= 1
            rows[r][c] = letter
            total += fill(k + 1)
            need[letter - 1] += 1
        return total

    return fill(0)
