"""Ground-truth engines for the joint statistic distributions.

Two independent routes produce the same exact object: ``brute_distribution``
walks every word of [k]^n, while ``transfer_distribution`` runs a dynamic
program over (last letter, accumulated statistics).  Their agreement is a
load-bearing cross-check, so neither is ever expressed in terms of the
other.  A third oracle, ``rearrangement_distribution``, enumerates a fixed
rearrangement class and counts descents whose top letter lies in one set
and whose bottom letter lies in another.

All counts are exact Python integers; nothing here floats.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from .words import BlockPartition, InputError, StatVector, _stat_key

DEFAULT_ENUMERATION_BUDGET = 1 << 24
BUDGET_ENV_VAR = "WORDSTATS_ENUM_BUDGET"

_STAT_INDEX = {"des": 0, "ris": 1, "lev": 2, "cnt": 3}


class BudgetExceededError(RuntimeError):
    """Enumeration would exceed the configured budget."""

    def __init__(self, required: int, limit: int):
        super().__init__(
            f"enumeration needs {required} words, over the budget of {limit} "
            f"(override with an explicit budget or {BUDGET_ENV_VAR})"
        )
        self.required = required
        self.limit = limit


def resolve_budget(budget: int | None = None) -> int:
    """Explicit argument wins, then the environment, then the default cap."""
    if budget is not None:
        return budget
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InputError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")
    return DEFAULT_ENUMERATION_BUDGET


@dataclass
class DistPolynomial:
    """Exact joint distribution: StatVector -> number of words attaining it."""

    entries: dict[StatVector, int]
    k: int
    n: int
    partition: BlockPartition

    def total(self) -> int:
        return sum(self.entries.values())

    def count(self, vector: StatVector) -> int:
        return self.entries.get(vector, 0)

    def marginal(self, block: int, stat: str) -> dict[int, int]:
        """Distribution of one coordinate, e.g. descents charged to a block."""
        index = _stat_index(stat)
        out: dict[int, int] = {}
        for vector, count in self.entries.items():
            value = vector.blocks[block - 1][index]
            out[value] = out.get(value, 0) + count
        return out


def _stat_index(stat: str) -> int:
    try:
        return _STAT_INDEX[stat]
    except KeyError:
        raise InputError(f"unknown statistic {stat!r}, expected des/ris/lev/cnt")


def _validate_shape(k: int, n: int, partition: BlockPartition) -> None:
    if k < 1:
        raise InputError(f"alphabet size must be at least 1, got {k}")
    if n < 0:
        raise InputError(f"word length must be nonnegative, got {n}")
    if partition.k != k:
        raise InputError(
            f"partition covers [{partition.k}], queried alphabet is [{k}]"
        )


def brute_distribution(
    k: int, n: int, partition: BlockPartition, budget: int | None = None
) -> DistPolynomial:
    """Joint distribution by summing over all k**n words."""
    _validate_shape(k, n, partition)
    limit = resolve_budget(budget)
    required = k**n
    if required > limit:
        raise BudgetExceededError(required, limit)
    blocks = partition.blocks
    t = partition.t
    raw: dict[tuple, int] = {}
    for letters in itertools.product(range(1, k + 1), repeat=n):
        key = _stat_key(letters, blocks, t)
        raw[key] = raw.get(key, 0) + 1
    entries = {StatVector(key): count for key, count in raw.items()}
    return DistPolynomial(entries=entries, k=k, n=n, partition=partition)


def transfer_distribution(k: int, n: int, partition: BlockPartition) -> DistPolynomial:
    """Same distribution via a dynamic program over the last letter.

    State is (last letter, accumulated raw statistics); appending a letter
    charges the new pair to the block of the old last letter.  Runs in time
    polynomial in n for fixed k, independent of the enumeration budget.
    """
    _validate_shape(k, n, partition)
    t = partition.t
    blocks = partition.blocks
    if n == 0:
        return DistPolynomial(
            entries={StatVector.zero(t): 1}, k=k, n=n, partition=partition
        )

    def bump(key: tuple, block: int, index: int) -> tuple:
        rows = [list(row) for row in key]
        rows[block - 1][index] += 1
        return tuple(tuple(row) for row in rows)

    zero = tuple((0, 0, 0, 0) for _ in range(t))
    states: dict[tuple[int, tuple], int] = {}
    for letter in range(1, k + 1):
        states[(letter, bump(zero, blocks[letter - 1], 3))] = 1

    for _ in range(n - 1):
        new_states: dict[tuple[int, tuple], int] = {}
        for (last, key), count in states.items():
            last_block = blocks[last - 1]
            for nxt in range(1, k + 1):
                if last > nxt:
                    pair_index = 0
                elif last == nxt:
                    pair_index = 2
                else:
                    pair_index = 1
                new_key = bump(bump(key, last_block, pair_index), blocks[nxt - 1], 3)
                state = (nxt, new_key)
                new_states[state] = new_states.get(state, 0) + count
        states = new_states

    raw: dict[tuple, int] = {}
    for (_, key), count in states.items():
        raw[key] = raw.get(key, 0) + count
    entries = {StatVector(key): count for key, count in raw.items()}
    return DistPolynomial(entries=entries, k=k, n=n, partition=partition)


def statistic_distribution(
    k: int,
    n: int,
    partition: BlockPartition,
    coords: Sequence[tuple[int, str]],
) -> dict[tuple[int, ...], int]:
    """Joint distribution of selected (block, statistic) coordinates only.

    A reduced version of the transfer dynamic program that tracks just the
    requested coordinates, keeping the state space small when a query needs
    a single marginal out of a large partition.
    """
    _validate_shape(k, n, partition)
    coords = list(coords)
    for block, stat in coords:
        if not 1 <= block <= partition.t:
            raise InputError(f"block {block} outside 1..{partition.t}")
        _stat_index(stat)
    zero = (0,) * len(coords)
    if n == 0:
        return {zero: 1}

    blocks = partition.blocks
    cnt_slot: dict[int, list[int]] = {}
    pair_slot: dict[tuple[int, int], list[int]] = {}
    for position, (block, stat) in enumerate(coords):
        if stat == "cnt":
            cnt_slot.setdefault(block, []).append(position)
        else:
            pair_slot.setdefault((block, _stat_index(stat)), []).append(position)

    def add_count(values: tuple, letter: int) -> tuple:
        slots = cnt_slot.get(blocks[letter - 1])
        if not slots:
            return values
        out = list(values)
        for position in slots:
            out[position] += 1
        return tuple(out)

    states: dict[tuple[int, tuple], int] = {}
    for letter in range(1, k + 1):
        states[(letter, add_count(zero, letter))] = 1

    for _ in range(n - 1):
        new_states: dict[tuple[int, tuple], int] = {}
        for (last, values), count in states.items():
            last_block = blocks[last - 1]
            for nxt in range(1, k + 1):
                if last > nxt:
                    pair_index = 0
                elif last == nxt:
                    pair_index = 2
                else:
                    pair_index = 1
                slots = pair_slot.get((last_block, pair_index))
                if slots:
                    bumped = list(values)
                    for position in slots:
                        bumped[position] += 1
                    new_values = add_count(tuple(bumped), nxt)
                else:
                    new_values = add_count(values, nxt)
                state = (nxt, new_values)
                new_states[state] = new_states.get(state, 0) + count
        states = new_states

    out: dict[tuple[int, ...], int] = {}
    for (_, values), count in states.items():
        out[values] = out.get(values, 0) + count
    return out


@dataclass(frozen=True)
class ConstraintSpec:
    """Exact-value requirements on selected (block, statistic) coordinates."""

    exact: tuple[tuple[int, str, int], ...] = ()

    @classmethod
    def of(cls, *clauses: tuple[int, str, int]) -> "ConstraintSpec":
        return cls(tuple(clauses))

    def validate(self, partition: BlockPartition) -> None:
        for block, stat, value in self.exact:
            if not 1 <= block <= partition.t:
                raise InputError(
                    f"constraint names block {block}, partition has 1..{partition.t}"
                )
            _stat_index(stat)
            if value < 0:
                raise InputError(f"constraint value must be nonnegative, got {value}")

    def matches(self, vector: StatVector) -> bool:
        return all(
            vector.blocks[block - 1][_stat_index(stat)] == value
            for block, stat, value in self.exact
        )


def count_matching(
    k: int,
    n: int,
    partition: BlockPartition,
    constraints: ConstraintSpec,
    engine: str = "transfer",
    budget: int | None = None,
) -> int:
    """Number of words of [k]^n whose statistics satisfy every constraint."""
    constraints.validate(partition)
    if engine == "oracle":
        dist = brute_distribution(k, n, partition, budget=budget)
        return sum(
            count for vector, count in dist.entries.items() if constraints.matches(vector)
        )
    if engine == "transfer":
        if not constraints.exact:
            return k**n
        coords = [(block, stat) for block, stat, _ in constraints.exact]
        target = tuple(value for _, _, value in constraints.exact)
        return statistic_distribution(k, n, partition, coords).get(target, 0)
    raise InputError(f"unknown engine {engine!r}, expected oracle or transfer")


def rearrangement_distribution(
    rho: Sequence[int],
    top_letters: Iterable[int],
    bottom_letters: Iterable[int],
    budget: int | None = None,
) -> dict[int, int]:
    """Distribution of constrained descents over one rearrangement class.

    ``rho[j-1]`` is the multiplicity of letter j; a descent position counts
    when its first letter lies in ``top_letters`` and its second in
    ``bottom_letters``.  The all-zero class contributes the empty word,
    giving {0: 1}.
    """
    rho = tuple(rho)
    if any(r < 0 for r in rho):
        raise InputError(f"multiplicities must be nonnegative, got {rho}")
    n = sum(rho)
    limit = resolve_budget(budget)
    if factorial(n) > limit:
        raise BudgetExceededError(factorial(n), limit)
    tops = frozenset(top_letters)
    bottoms = frozenset(bottom_letters)
    base = tuple(
        letter for letter, reps in enumerate(rho, start=1) for _ in range(reps)
    )
    out: dict[int, int] = {}
    for word in set(itertools.permutations(base)):
        hits = sum(
            1
            for i in range(n - 1)
            if word[i] > word[i + 1] and word[i] in tops and word[i + 1] in bottoms
        )
        out[hits] = out.get(hits, 0) + 1
    return out
