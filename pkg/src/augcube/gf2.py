"""GF(2)^n linear algebra on int bitsets.

Group elements are plain Python ints: bit k (value 1 << k) is the k+1-st
coordinate.  The group operation is XOR and every element is its own
inverse.  Text form is the n-character binary string with the highest
bit first, so ``"011"`` is the element with bits 1 and 2 set.
"""

from __future__ import annotations

from itertools import combinations


class InvalidDimensionError(ValueError):
    """Dimension outside the supported range."""


def element_to_str(v: int, n: int) -> str:
    """Render a group element as an n-bit binary string, highest bit first."""
    if not 0 <= v < (1 << n):
        raise ValueError(f"element {v} does not fit in {n} bits")
    return format(v, f"0{n}b")


def element_from_str(s: str) -> int:
    return int(s, 2)


def unit_vector(i: int) -> int:
    """The i-th standard generator (1-based), a single bit."""
    if i < 1:
        raise ValueError("unit vector index is 1-based")
    return 1 << (i - 1)


def low_prefix(j: int) -> int:
    """All-ones prefix on the lowest j coordinates."""
    if j < 1:
        raise ValueError("prefix length must be positive")
    return (1 << j) - 1


def standard_generators(n: int) -> list[int]:
    """The 2n-1 canonical generators: units e_1..e_n, then prefixes of
    length 2..n, in that fixed order.  All downstream enumeration order
    keys off this ordering."""
    if n < 2:
        raise InvalidDimensionError(f"need n >= 2, got {n}")
    return [unit_vector(i) for i in range(1, n + 1)] + [low_prefix(j) for j in range(2, n + 1)]


def rank_gf2(vs: list[int]) -> int:
    """Rank of a set of GF(2) vectors via elimination on int bitsets."""
    pivots: dict[int, int] = {}
    for v in vs:
        if v < 0:
            raise ValueError("negative bitset")
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                v ^= pivots[h]
            else:
                pivots[h] = v
                break
    return len(pivots)


def is_minimal_generating(T: list[int], n: int) -> bool:
    """A minimal generating subset of GF(2)^n is exactly a basis of size n."""
    if any(v >= (1 << n) for v in T):
        raise ValueError("element wider than ambient dimension")
    return len(T) == n and rank_gf2(T) == n


def solve_gf2(columns: list[int], target: int, n: int) -> int | None:
    """Express target as an XOR of the given column vectors.

    Returns a bitmask over column indices, or None when target is
    outside the span.  Deterministic: elimination in input order.
    """
    # track, alongside each pivot, which input columns were combined
    pivots: dict[int, tuple[int, int]] = {}
    for k, c in enumerate(columns):
        v, tag = c, 1 << k
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                pv, ptag = pivots[h]
                v, tag = v ^ pv, tag ^ ptag
            else:
                pivots[h] = (v, tag)
                break
    v, tag = target, 0
    while v:
        h = v.bit_length() - 1
        if h not in pivots:
            return None
        pv, ptag = pivots[h]
        v, tag = v ^ pv, tag ^ ptag
    return tag


def invert_basis(basis: list[int], n: int) -> list[int]:
    """Given a basis b_1..b_n of GF(2)^n, return the images of the unit
    vectors under the inverse of the map e_k -> b_k.

    Result M satisfies: applying M to b_k yields e_k.  Raises ValueError
    when the input is not a basis.
    """
    if not is_minimal_generating(list(basis), n):
        raise ValueError("not a basis of GF(2)^n")
    images = []
    for i in range(1, n + 1):
        tag = solve_gf2(list(basis), unit_vector(i), n)
        assert tag is not None
        images.append(tag)
    return images


def apply_linear(M: list[int], v: int) -> int:
    """Apply a linear map (list of unit-vector images) to v."""
    out = 0
    k = 0
    while v:
        if v & 1:
            out ^= M[k]
        v >>= 1
        k += 1
    return out


def compose_linear(M2: list[int], M1: list[int]) -> list[int]:
    """Composition M2 after M1."""
    return [apply_linear(M2, c) for c in M1]


def f_lower_bound(n: int) -> int:
    """Closed-form count of size-n bases inside the canonical generator
    set: 1 plus, over every nonempty subset {j_1<...<j_k} of {2..n}, the
    product (j_k - j_{k-1}) ... (j_2 - j_1) * j_1.  Exact integers; the
    direct subset iteration costs 2^(n-1) terms.
    """
    if n < 2:
        raise InvalidDimensionError(f"need n >= 2, got {n}")
    total = 1
    js = list(range(2, n + 1))
    for k in range(1, n):
        for subset in combinations(js, k):
            prod = subset[0]
            for a, b in zip(subset, subset[1:]):
                prod *= b - a
            total += prod
    return total


def enumerate_cayley_generator_subsets(n: int) -> list[list[int]]:
    """All size-n full-rank subsets of the canonical generators, in
    lexicographic order over the canonical generator indices."""
    gens = standard_generators(n)
    out = []
    for idxs in combinations(range(len(gens)), n):
        T = [gens[i] for i in idxs]
        if rank_gf2(T) == n:
            out.append(T)
    return out
