"""Ground-truth oracles: exhaustive simulation over whole state spaces.

These checks never use the algebraic machinery they are meant to judge.
Equivalence of two registers is decided by enumerating every initial
state of both and comparing output prefixes; cycle structure is decided
by walking the full successor graph.  Output prefixes of length 2^n + n
are used as the stand-in for "same infinite output": at that length two
states of an n-bit register lie on identically labelled orbits.  That
convention is an implementation choice, so reports produced with a
shorter, caller-forced prefix can only conclude non-equivalence, never
equivalence.

Everything is a pure function of immutable registers; scans over initial
states can be partitioned freely and merged by min/union/sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .register import EXHAUSTIVE_LIMIT, ExhaustiveLimitError, Nlfsr, State, int_to_state, state_to_int


def default_prefix_len(n: int) -> int:
    return (1 << n) + n


def _check_limit(n: int, limit: int | None) -> None:
    lim = EXHAUSTIVE_LIMIT if limit is None else limit
    if n > lim:
        raise ExhaustiveLimitError(
            f"register has {n} bits, exhaustive scans are capped at {lim}"
        )


def output_prefixes(m: Nlfsr, length: int, limit: int | None = None) -> list[int]:
    """The first ``length`` output bits from every initial state.

    Entry x is the prefix started from packed state x, packed LSB-first
    (bit t of the entry is the output at step t).  Computed for the whole
    space at once by successor-table doubling.
    """
    _check_limit(m.n, limit)
    if length < 1:
        raise ValueError("prefix length must be positive")
    size = 1 << m.n
    jump = [m.step_packed(x) for x in range(size)]
    pref = [x & 1 for x in range(size)]
    done = 1
    while done < length:
        if done * 2 <= length:
            pref = [pref[x] | pref[jump[x]] << done for x in range(size)]
            jump = [jump[jump[x]] for x in range(size)]
            done *= 2
        else:
            take = length - done
            mask = (1 << take) - 1
            pref = [pref[x] | (pref[jump[x]] & mask) << done for x in range(size)]
            done = length
    return pref


def brute_force_match(
    a: Nlfsr,
    b: Nlfsr,
    state: Sequence[int],
    prefix_len: int | None = None,
    limit: int | None = None,
) -> State | None:
    """Scan all states of b for one whose output prefix matches a's from ``state``.

    States are scanned in ascending packed order and the first (smallest)
    match is returned, or None when no state of b reproduces the prefix.
    """
    if a.n != b.n:
        raise ValueError(f"registers have different sizes {a.n} and {b.n}")
    if len(state) != a.n:
        raise ValueError(f"state has {len(state)} bits, register has {a.n}")
    _check_limit(a.n, limit)
    length = default_prefix_len(a.n) if prefix_len is None else prefix_len
    x = state_to_int(state)
    target = 0
    for t in range(length):
        target |= (x & 1) << t
        x = a.step_packed(x)
    for y, p in enumerate(output_prefixes(b, length, limit)):
        if p == target:
            return int_to_state(y, b.n)
    return None


Verdict = Literal["equivalent", "not-equivalent", "inconclusive"]


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the exhaustive output-set comparison of two registers.

    matching maps every packed state of the first register to the
    smallest packed state of the second with the same output prefix; it
    is present exactly when every state matched in both directions.
    witness is a state of one register whose output prefix no state of
    the other reproduces, present exactly for the not-equivalent verdict
    (witness_side tells which register it belongs to).  A verdict of
    equivalent is only ever issued at prefix length 2^n + n or more;
    shorter caller-forced prefixes downgrade a full match to
    inconclusive.
    """

    verdict: Verdict
    prefix_len: int
    matching: dict[int, int] | None = None
    witness: State | None = None
    witness_side: Literal["first", "second"] | None = None


def output_set_equivalent(
    a: Nlfsr,
    b: Nlfsr,
    prefix_len: int | None = None,
    limit: int | None = None,
) -> EquivalenceReport:
    """Decide whether two registers generate the same set of output sequences.

    Every initial state of each register must have a counterpart in the
    other producing the identical output prefix; one unmatched state on
    either side settles non-equivalence with that state as witness.
    """
    if a.n != b.n:
        raise ValueError(f"registers have different sizes {a.n} and {b.n}")
    _check_limit(a.n, limit)
    length = default_prefix_len(a.n) if prefix_len is None else prefix_len
    pref_a = output_prefixes(a, length, limit)
    pref_b = output_prefixes(b, length, limit)
    first_b: dict[int, int] = {}
    for y in range((1 << b.n) - 1, -1, -1):
        first_b[pref_b[y]] = y
    matching = {}
    for x, p in enumerate(pref_a):
        y = first_b.get(p)
        if y is None:
            return EquivalenceReport(
                "not-equivalent", length, witness=int_to_state(x, a.n), witness_side="first"
            )
        matching[x] = y
    seen_a = set(pref_a)
    for y, p in enumerate(pref_b):
        if p not in seen_a:
            return EquivalenceReport(
                "not-equivalent", length, witness=int_to_state(y, b.n), witness_side="second"
            )
    if length < default_prefix_len(a.n):
        return EquivalenceReport("inconclusive", length)
    return EquivalenceReport("equivalent", length, matching=matching)


@dataclass(frozen=True)
class PeriodCensus:
    """Cycle structure of a register's step function over all 2^n states.

    cycles maps each occurring cycle length to the number of states lying
    on cycles of that length; tail_states counts states not on any cycle
    (possible only when the update is not a bijection).
    """

    n: int
    cycles: dict[int, int]
    tail_states: int

    @property
    def period(self) -> int:
        return max(self.cycles)

    @property
    def total(self) -> int:
        return sum(self.cycles.values()) + self.tail_states

    def __str__(self) -> str:
        parts = [f"{length}: {count}" for length, count in sorted(self.cycles.items(), reverse=True)]
        if self.tail_states:
            parts.append(f"tails: {self.tail_states}")
        return ", ".join(parts)


def period_census(m: Nlfsr, limit: int | None = None) -> PeriodCensus:
    """Partition all states into cycles and tails by walking the successor graph."""
    _check_limit(m.n, limit)
    size = 1 << m.n
    succ = [m.step_packed(x) for x in range(size)]
    status = bytearray(size)  # 0 unseen, 1 on current walk, 2 on a cycle, 3 tail
    cycles: dict[int, int] = {}
    tail_states = 0
    for start in range(size):
        if status[start]:
            continue
        path = []
        position: dict[int, int] = {}
        x = start
        while status[x] == 0:
            status[x] = 1
            position[x] = len(path)
            path.append(x)
            x = succ[x]
        if status[x] == 1:
            cut = position[x]
            length = len(path) - cut
            cycles[length] = cycles.get(length, 0) + length
        else:
            cut = len(path)
        for v in path[:cut]:
            status[v] = 3
        tail_states += cut
        for v in path[cut:]:
            status[v] = 2
    return PeriodCensus(m.n, cycles, tail_states)


def step_is_bijection(m: Nlfsr, limit: int | None = None) -> bool:
    """Whether the update permutes the state space (no two states collide)."""
    _check_limit(m.n, limit)
    size = 1 << m.n
    return len({m.step_packed(x) for x in range(size)}) == size
