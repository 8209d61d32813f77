"""Bijective codecs between colored compositions, binary words, and
restricted compositions.

Binary words are ASCII 0/1 strings written most-significant-first; bit
positions are counted right to left starting at 0.  The rank/unrank pair
uses the combinatorial number system (colex) on m - 1: the word of rank m
has ones at the unique positions c_d > ... > c_1 >= 0 with

    m - 1 = C(c_d, d) + ... + C(c_1, 1).

On top of that sit the colored-composition <-> binary-word codec and the
three maps onto restricted composition families, each with an exact
inverse.
"""

from __future__ import annotations

from math import comb

from .compgen import ColoredComposition
from .errors import DomainError, InputError

__all__ = [
    "unrank_word",
    "rank_word",
    "to_binary",
    "from_binary",
    "map_ones_m",
    "map_ones_m_inv",
    "map_mod_m",
    "map_mod_m_inv",
    "map_ge_m",
    "map_ge_m_inv",
]


def unrank_word(m, n, d):
    """The m-th (1-based) binary word of length n with exactly d ones.

    Greedy colex decoding of m - 1: for j = d down to 1 pick the largest
    c_j with C(c_j, j) <= remainder.  Requires 1 <= m <= C(n, d) and
    d <= n.
    """
    if d < 1 or n < 1 or d > n:
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    total = comb(n, d)
    if not 1 <= m <= total:
        raise DomainError(f"rank {m} out of range 1..{total} for n={n}, d={d}")
    remainder = m - 1
    bits = ["0"] * n
    cur = n - 1
    for j in range(d, 0, -1):
        while comb(cur, j) > remainder:
            cur -= 1
        remainder -= comb(cur, j)
        bits[n - 1 - cur] = "1"  # position cur, counted from the right
        cur -= 1
    return "".join(bits)


def _one_positions(word):
    """Zero-based right-to-left positions of the ones, ascending."""
    positions = []
    n = len(word)
    for i, ch in enumerate(word):
        if ch == "1":
            positions.append(n - 1 - i)
        elif ch != "0":
            raise InputError(f"binary word may contain only 0/1, got {word!r}")
    positions.reverse()
    return positions


def rank_word(word, d):
    """1-based colex rank of a binary word with exactly d ones; inverts unrank_word."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    positions = _one_positions(word)
    if len(positions) != d:
        raise InputError(
            f"word {word!r} has {len(positions)} ones, expected {d}"
        )
    return 1 + sum(comb(p, j) for j, p in enumerate(positions, start=1))


def to_binary(alpha):
    """Encode a colored composition as a binary word.

    Each part (size n, color c) becomes the rank-c word of length
    n + d - 1 with d ones; parts are joined by single '1' separators.
    The result has length nu + d*k - 1 and exactly (d+1)*k - 1 ones.
    """
    d = alpha.d
    return "1".join(unrank_word(c, s + d - 1, d) for s, c in alpha.parts)


def from_binary(beta, d):
    """Decode a binary word back into a colored composition; inverts to_binary.

    Segmentation cuts strictly before every (d+1)-th remaining one, so
    each segment carries exactly d ones and trailing zeros stay attached
    to their part.
    """
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    n = len(beta)
    one_indices = [i for i, ch in enumerate(beta) if ch == "1"]
    if any(ch not in "01" for ch in beta):
        raise InputError(f"binary word may contain only 0/1, got {beta!r}")
    ones = len(one_indices)
    if (ones + 1) % (d + 1) != 0:
        raise InputError(
            f"word with {ones} ones cannot split into segments of {d} ones"
        )
    k = (ones + 1) // (d + 1)
    parts = []
    start = 0
    for i in range(k):
        if i < k - 1:
            sep = one_indices[d + i * (d + 1)]
            segment = beta[start:sep]
            start = sep + 1
        else:
            segment = beta[start:]
        if len(segment) < d:
            raise InputError(f"segment {i + 1} of {beta!r} too short for d={d}")
        size = len(segment) - d + 1
        parts.append((size, rank_word(segment, d)))
    return ColoredComposition(d, tuple(parts))


def map_ones_m(alpha):
    """Colored composition -> composition of (d+1)nu - 1 with parts in {1, d+1}.

    Every '1' of the binary word becomes a part 1, every '0' a part d+1.
    """
    d = alpha.d
    return tuple(1 if ch == "1" else d + 1 for ch in to_binary(alpha))


def map_ones_m_inv(parts, d):
    """Inverse of map_ones_m; rejects parts outside {1, d+1}."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if not parts:
        raise InputError("empty composition")
    for p in parts:
        if p not in (1, d + 1):
            raise InputError(f"part {p} not in {{1, {d + 1}}}")
    beta = "".join("1" if p == 1 else "0" for p in parts)
    return from_binary(beta, d)


def map_mod_m(alpha):
    """Colored composition -> composition of (d+1)nu with parts = 1 mod (d+1).

    The ones of the binary word act as separators; a gap of j zeros
    (empty gaps included) becomes a part (d+1)j + 1.
    """
    d = alpha.d
    return tuple((d + 1) * len(gap) + 1 for gap in to_binary(alpha).split("1"))


def map_mod_m_inv(parts, d):
    """Inverse of map_mod_m; rejects parts not congruent to 1 mod d+1."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if not parts:
        raise InputError("empty composition")
    runs = []
    for p in parts:
        if p < 1 or (p - 1) % (d + 1) != 0:
            raise InputError(f"part {p} is not 1 modulo {d + 1}")
        runs.append((p - 1) // (d + 1))
    return from_binary("1".join("0" * r for r in runs), d)


def map_ge_m(alpha):
    """Colored composition -> composition of (d+1)nu + d with parts >= d+1.

    The zeros of the binary word act as separators; a gap of j ones
    (empty gaps included) becomes a part j + d + 1.
    """
    d = alpha.d
    return tuple(len(gap) + d + 1 for gap in to_binary(alpha).split("0"))


def map_ge_m_inv(parts, d):
    """Inverse of map_ge_m; rejects parts smaller than d+1."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if not parts:
        raise InputError("empty composition")
    runs = []
    for p in parts:
        if p < d + 1:
            raise InputError(f"part {p} smaller than {d + 1}")
        runs.append(p - d - 1)
    return from_binary("0".join("1" * r for r in runs), d)
