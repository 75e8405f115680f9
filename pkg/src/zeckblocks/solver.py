"""Closed forms for the numbers whose Zeckendorf expansion carries a given
digit block: compound Wythoff words, GBS parameters, the block tree,
positional unions and exact densities.

The compound word of a block w is built by left extension.  Writing w with
its most significant digit first:

* the one-digit bases are C(0) = A - 1 and C(1) = AA (pointwise B - 1);
* prepending 0 to a block starting with 0 composes with A on the right;
* prepending 1 composes with B on the right;
* prepending 0 to a block starting with 1 changes nothing, because a digit
  above a 1 is forced to be 0 anyway.

Blocks 1 0^j would come out of that recursion as the shifted word
(A^j - 1) B; they are normalized to the shift-free forms B^((j+1)/2) A
(j odd) and A B^(j/2) A (j even), which are pointwise equal.  All-zero
blocks keep their shifted form A^m - 1: they are not a plain composition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .beatty import GBS, OccurrenceSet
from .codec import valid_blocks, validate_block
from .fibcore import GoldenNumber, fib, phi_pow
from .wythoff import WythoffWord

MAX_TREE_DEPTH = 20


def gamma(w: str) -> int:
    """The constant term of the GBS form of a block's occurrence sequence:
    -(1 + sum of F(k) over the interior positions k where w reads "00").

    The digit pair at positions k, k-1 sits at string offsets m-1-k, m-k.
    """
    validate_block(w, allow_empty=True)
    m = len(w)
    total = 1
    for k in range(1, m):
        if w[m - 1 - k] == "0" and w[m - k] == "0":
            total += fib(k)
    return -total


def _compound(w: str) -> WythoffWord:
    if "1" not in w:
        return WythoffWord("A" * len(w), -1)
    low = w.rindex("1")
    j = len(w) - 1 - low
    if j == 0:
        word = WythoffWord("AA")
    elif j % 2:
        word = WythoffWord("B" * ((j + 1) // 2) + "A")
    else:
        word = WythoffWord("A" + "B" * (j // 2) + "A")
    for i in range(low - 1, -1, -1):
        if w[i] == "1":
            word = word.then("B")
        elif w[i + 1] == "0":
            word = word.then("A")
        # prepending 0 above a 1: same occurrence set, same word
    return word


@dataclass(frozen=True)
class BlockSolution:
    """Both closed forms for the increasing sequence of numbers whose
    expansion ends with `word`, plus the offset they share.

    `exceptional` marks the cases where the sequence is not a plain
    composition word: the all-zero blocks (A^m - 1), the block "1" (stored
    as AA, pointwise equal to B - 1) and the empty block (the shifted
    identity, an extension: every number trivially ends with it).
    """

    word: str
    compound: WythoffWord
    gbs: GBS
    gamma: int
    exceptional: bool = False

    def terms(self, count: int) -> list[int]:
        return self.gbs.terms(count)

    def to_record(self, terms: int = 0) -> dict:
        rec = {
            "word": self.word,
            "compound": str(self.compound),
            "p": self.gbs.p,
            "q": self.gbs.q,
            "r": self.gbs.r,
            "exceptional": self.exceptional,
        }
        if terms:
            rec["first_terms"] = self.terms(terms)
        return rec


def solve_block(w: str) -> BlockSolution:
    """Closed forms for the numbers whose expansion ends with the block w.

    The GBS coefficients are (F(m), F(m-1)) when w starts with 0 and
    (F(m+1), F(m)) when it starts with 1, the constant being gamma(w).
    The empty block is accepted and yields the shifted identity n -> n - 1,
    whose values run through all of 0, 1, 2, ...
    """
    validate_block(w, allow_empty=True)
    if not w:
        return BlockSolution("", WythoffWord("", -1), GBS(0, 1, -1), -1, True)
    m = len(w)
    top = 1 if w[0] == "1" else 0
    g = gamma(w)
    gbs = GBS(fib(m + top), fib(m - 1 + top), g)
    exceptional = "1" not in w or w == "1"
    return BlockSolution(w, _compound(w), gbs, g, exceptional)


@dataclass(frozen=True)
class TreeNode:
    solution: BlockSolution
    children: tuple["TreeNode", ...]

    @property
    def word(self) -> str:
        return self.solution.word

    def walk(self):
        """Yield nodes depth-first, 0-extension child before 1-extension."""
        yield self
        for child in self.children:
            yield from child.walk()


def tree(depth: int) -> TreeNode:
    """The block tree down to the given level: the root is the empty block,
    and a node w has children 0w always and 1w only when w starts with 0,
    so level m holds all F(m+2) valid blocks of length m.
    """
    if not 0 <= depth <= MAX_TREE_DEPTH:
        raise ValueError(f"depth must be between 0 and {MAX_TREE_DEPTH}, got {depth}")

    def build(w: str, level: int) -> TreeNode:
        children = []
        if level < depth:
            children.append(build("0" + w, level + 1))
            if not w or w[0] == "0":
                children.append(build("1" + w, level + 1))
        return TreeNode(solve_block(w), tuple(children))

    return build("", 0)


def level_solutions(m: int) -> list[BlockSolution]:
    """The solutions for all blocks of length m, in increasing block value."""
    return [solve_block(w) for w in valid_blocks(m)]


def solve_positional(w: str, k: int = 0) -> OccurrenceSet:
    """The numbers carrying the block w at digit position k, as a union of
    F(k+2-w0) disjoint GBS branches (w0 = last digit of w).

    All branches share the coefficients of the length m+k blocks that start
    like w; their offsets are the consecutive run starting at gamma(w 0^k).
    For k = 0 this is the single branch of solve_block.
    """
    validate_block(w)
    if k < 0:
        raise ValueError(f"position must be non-negative, got {k}")
    m = len(w)
    top = 1 if w[0] == "1" else 0
    count = fib(k + 2 - int(w[-1]))
    base = gamma(w + "0" * k)
    p, q = fib(k + m + top), fib(k + m - 1 + top)
    return OccurrenceSet(tuple(GBS(p, q, base + t) for t in range(count)))


@dataclass(frozen=True)
class DensityValue:
    """An exact natural density: coefficient * phi**exponent, expanded in Z[phi]."""

    coefficient: int
    exponent: int
    value: GoldenNumber

    def to_record(self) -> dict:
        return {
            "coeff": self.coefficient,
            "exponent": self.exponent,
            "golden_a": self.value.a,
            "golden_b": self.value.b,
            "decimal": float(self.value),
        }


def density(w: str, k: int = 0) -> DensityValue:
    """Exact density of the numbers carrying w at position k:
    F(k+2-w0) * phi**-(k+m+w_top).  For k = 0 this is phi**-m when w starts
    with 0 and phi**-(m+1) when it starts with 1.
    """
    validate_block(w)
    if k < 0:
        raise ValueError(f"position must be non-negative, got {k}")
    top = 1 if w[0] == "1" else 0
    coeff = fib(k + 2 - int(w[-1]))
    expo = -(k + len(w) + top)
    return DensityValue(coeff, expo, coeff * phi_pow(expo))


def density_total(m: int, k: int = 0) -> GoldenNumber:
    """Sum of density(w, k) over every block w of length m; identically 1."""
    if m < 1:
        raise ValueError(f"block length must be at least 1, got {m}")
    total = GoldenNumber(0, 0)
    for w in valid_blocks(m):
        total = total + density(w, k).value
    return total
