"""Words over a finite alphabet and their refined pair statistics.

A word is a finite sequence of letters from {1, ..., k}.  Every adjacent
pair is a descent, a level, or a rise, and is charged to the block of a
fixed alphabet partition that contains the pair's *first* letter.  Letter
counts per block are tracked alongside, so a word of length n always
accounts for n letters and n-1 classified pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class InputError(ValueError):
    """A documented precondition was violated by the caller."""


class PairKind(Enum):
    DESCENT = "descent"
    LEVEL = "level"
    RISE = "rise"


def classify_pair(a: int, b: int, k: int) -> PairKind:
    """Classify the adjacent pair (a, b): descent a>b, level a=b, rise a<b."""
    for letter in (a, b):
        if not 1 <= letter <= k:
            raise InputError(f"letter {letter} outside alphabet 1..{k}")
    if a > b:
        return PairKind.DESCENT
    if a == b:
        return PairKind.LEVEL
    return PairKind.RISE


@dataclass(frozen=True)
class Word:
    """Immutable word over the alphabet {1, ..., k}.  Length 0 is legal."""

    letters: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.k < 1:
            raise InputError(f"alphabet size must be at least 1, got {self.k}")
        for letter in self.letters:
            if not 1 <= letter <= self.k:
                raise InputError(f"letter {letter} outside alphabet 1..{self.k}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def complement(self) -> "Word":
        """Letter-wise map l -> k+1-l; an involution that swaps descents and rises."""
        return Word(tuple(self.k + 1 - letter for letter in self.letters), self.k)


def complement(word: Word) -> Word:
    return word.complement()


@dataclass(frozen=True)
class BlockPartition:
    """Assignment of each letter 1..k to one of t blocks (both 1-based).

    ``blocks[j-1]`` is the block of letter j.  Blocks may be empty on the
    alphabet (e.g. a threshold partition with the cut at k leaves block 2
    without letters); t is the declared number of blocks, not the number
    of inhabited ones.
    """

    k: int
    blocks: tuple[int, ...]
    t: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.k < 1:
            raise InputError(f"alphabet size must be at least 1, got {self.k}")
        if self.t < 1:
            raise InputError(f"block count must be at least 1, got {self.t}")
        if len(self.blocks) != self.k:
            raise InputError(
                f"partition covers {len(self.blocks)} letters, alphabet has {self.k}"
            )
        for letter, block in enumerate(self.blocks, start=1):
            if not 1 <= block <= self.t:
                raise InputError(
                    f"letter {letter} assigned to block {block}, valid range 1..{self.t}"
                )

    @classmethod
    def threshold(cls, k: int, t: int) -> "BlockPartition":
        """Two blocks: letters 1..t in block 1, letters t+1..k in block 2.

        t = 0 and t = k are allowed; they leave one block empty on [k],
        which is how "descents over all letters" style queries arise.
        """
        if not 0 <= t <= k:
            raise InputError(f"threshold {t} outside 0..{k}")
        return cls(k, tuple(1 if j <= t else 2 for j in range(1, k + 1)), 2)

    @classmethod
    def mod_residue(cls, k: int, s: int) -> "BlockPartition":
        """s blocks by residue: letter j sits in block ((j-1) mod s) + 1.

        Block r holds the letters congruent to r mod s, with block s
        holding the multiples of s.
        """
        if s < 1:
            raise InputError(f"modulus must be at least 1, got {s}")
        return cls(k, tuple((j - 1) % s + 1 for j in range(1, k + 1)), s)

    @classmethod
    def from_blocks(cls, blocks, t: int | None = None) -> "BlockPartition":
        """Explicit assignment; t defaults to the largest block index used."""
        blocks = tuple(blocks)
        if not blocks:
            raise InputError("explicit partition needs at least one letter")
        if t is None:
            t = max(blocks)
        return cls(len(blocks), blocks, t)

    def block_of(self, letter: int) -> int:
        if not 1 <= letter <= self.k:
            raise InputError(f"letter {letter} outside alphabet 1..{self.k}")
        return self.blocks[letter - 1]

    def block_sizes(self) -> tuple[int, ...]:
        """Number of alphabet letters in each block, indexed 1..t."""
        sizes = [0] * self.t
        for block in self.blocks:
            sizes[block - 1] += 1
        return tuple(sizes)

    def letters_in(self, block: int) -> tuple[int, ...]:
        if not 1 <= block <= self.t:
            raise InputError(f"block {block} outside 1..{self.t}")
        return tuple(j for j in range(1, self.k + 1) if self.blocks[j - 1] == block)


@dataclass(frozen=True)
class StatVector:
    """Per-block (descents, rises, levels, letter count) totals of one word."""

    blocks: tuple[tuple[int, int, int, int], ...]

    @classmethod
    def zero(cls, t: int) -> "StatVector":
        return cls(((0, 0, 0, 0),) * t)

    @property
    def t(self) -> int:
        return len(self.blocks)

    def des(self, block: int) -> int:
        return self.blocks[block - 1][0]

    def ris(self, block: int) -> int:
        return self.blocks[block - 1][1]

    def lev(self, block: int) -> int:
        return self.blocks[block - 1][2]

    def cnt(self, block: int) -> int:
        return self.blocks[block - 1][3]

    @property
    def length(self) -> int:
        """Word length implied by the letter counts."""
        return sum(row[3] for row in self.blocks)

    @property
    def pair_total(self) -> int:
        """Total classified pairs; equals max(length - 1, 0) for a real word."""
        return sum(row[0] + row[1] + row[2] for row in self.blocks)


def _stat_key(letters, blocks, t: int) -> tuple[tuple[int, int, int, int], ...]:
    """Raw nested-tuple statistics; hot path shared by the oracles."""
    rows = [[0, 0, 0, 0] for _ in range(t)]
    prev = 0
    for letter in letters:
        rows[blocks[letter - 1] - 1][3] += 1
        if prev:
            row = rows[blocks[prev - 1] - 1]
            if prev > letter:
                row[0] += 1
            elif prev == letter:
                row[2] += 1
            else:
                row[1] += 1
        prev = letter
    return tuple(tuple(row) for row in rows)


def stat_vector(word: Word, partition: BlockPartition) -> StatVector:
    """Evaluate all per-block statistics of ``word`` under ``partition``."""
    if word.k != partition.k:
        raise InputError(
            f"alphabet mismatch: word over [{word.k}], partition over [{partition.k}]"
        )
    return StatVector(_stat_key(word.letters, partition.blocks, partition.t))
