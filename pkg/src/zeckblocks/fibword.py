"""The Fibonacci morphism a -> ab, b -> a and the finite words it generates."""

from __future__ import annotations

from .codec import block_at, psi_range, validate_block


def morphism_iterate(n: int) -> str:
    """The n-th iterate of the morphism on 'a': "a", "ab", "aba", "abaab", ...

    Each iterate is a prefix of the next; the n-th has length F(n+2).
    """
    if n < 0:
        raise ValueError(f"iteration count must be non-negative, got {n}")
    word = "a"
    for _ in range(n):
        word = "".join("ab" if c == "a" else "a" for c in word)
    return word


def occurrence_coding(w: str, n: int) -> str:
    """Scan 0 <= N < F(m+n) for expansions ending in 0w (coded 'a') or 1w
    (coded 'b'), in increasing order of N; w must start with 0 and have
    length m >= 2, so both extensions are legal blocks.

    The suffix test reads small N in zero-padded form, which is what makes
    N = 0 an occurrence of 0w.
    """
    validate_block(w)
    if w[0] != "0":
        raise ValueError(f"block must start with 0 to extend both ways: {w!r}")
    if len(w) < 2:
        raise ValueError("block must have length at least 2")
    if n < 3:
        raise ValueError(f"level must be at least 3, got {n}")
    zero_w, one_w = "0" + w, "1" + w
    out = []
    for value in psi_range(len(w) + n):
        if block_at(value, zero_w):
            out.append("a")
        elif block_at(value, one_w):
            out.append("b")
    return "".join(out)


def positions_of(letter: str, word: str) -> list[int]:
    """1-based positions of a letter in a word."""
    return [i + 1 for i, c in enumerate(word) if c == letter]
