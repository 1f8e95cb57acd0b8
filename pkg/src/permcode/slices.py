"""Slices of a permutation and the code read off their labels.

Scanning a permutation p of 1..n left to right, keep track of the values
not yet seen, together with 0, as a list of maximal integer intervals in
decreasing order.  Each interval carries an integer label; the starting
state is the single interval [0, n] labeled 0.  Step i locates the
interval containing p_i and rewrites the list according to where p_i sits
in it:

* strictly inside (SPLIT): the interval breaks in two; every old label
  survives and the new bottom part of the list gets label i;
* at the top (SHRINK_TOP): the interval loses its maximum; its label dies;
* at the bottom (SHRINK_BOTTOM): the interval loses its minimum; the label
  of the last interval dies;
* the whole interval (REMOVE): the interval disappears; both its label and
  the last label die.

Surviving labels are reassigned to the new interval list in order, then
label i is appended, so after step i the labels increase along the list
and the last one is i.  The state after step i is the i-th *slice*.

The *slice code* of p is the sequence whose i-th entry is the label of the
interval containing p_i just before step i acts.  It is subexcedant, and
it is a bijection onto the subexcedant sequences (inverted in
permcode.inverse) that transports five set-valued statistics at once; see
permcode.core.perm_stats and seq_stats.

Each case is reproducible from p alone, and also from the code alone;
slice_cases and code_cases compute the same classification by those two
routes.  The complement picture of a slice is the i-th *profile*: the
maximal intervals covering the values seen so far, also kept in
decreasing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple
from collections.abc import Sequence

from .core import Word, check_permutation, check_subexcedant

__all__ = [
    "SPLIT",
    "SHRINK_TOP",
    "SHRINK_BOTTOM",
    "REMOVE",
    "LabeledInterval",
    "Slice",
    "Profile",
    "slice_cases",
    "code_cases",
    "slices",
    "profiles",
    "slice_encode",
]

# The four rewrite cases, in the order value-inside, value-at-top,
# value-at-bottom, value-is-everything.  The numeric values matter: both
# classifications below compute them arithmetically.
SPLIT, SHRINK_TOP, SHRINK_BOTTOM, REMOVE = 0, 1, 2, 3


class LabeledInterval(NamedTuple):
    lo: int
    hi: int
    label: int


@dataclass(frozen=True)
class Slice:
    """Interval state after `step` values have been consumed."""

    step: int
    intervals: tuple[LabeledInterval, ...]

    def labels(self) -> tuple[int, ...]:
        return tuple(iv.label for iv in self.intervals)


@dataclass(frozen=True)
class Profile:
    """Maximal intervals covering the first `step` values, decreasing."""

    step: int
    intervals: tuple[tuple[int, int], ...]


def slice_cases(perm: Sequence[int]) -> tuple[int, ...]:
    """Classify each position of a permutation by its rewrite case.

    Position i is tested against two neighbours of its value:

    * successor seen later: p_i = n fails, else p_i + 1 must sit right of i;
    * predecessor seen later: p_i = 1 passes outright (think of a final 0
      appended to p), else p_i - 1 must sit right of i.

    The case is [successor not later] + 2 * [predecessor not later], which
    lands in {SPLIT, SHRINK_TOP, SHRINK_BOTTOM, REMOVE}.

    >>> slice_cases((6, 2, 5, 8, 7, 3, 1, 4))
    (0, 0, 1, 1, 3, 2, 1, 3)
    >>> slice_cases((1,))
    (1,)
    """
    word = tuple(perm)
    check_permutation(word)
    n = len(word)
    place = {v: i for i, v in enumerate(word)}
    out = []
    for i, v in enumerate(word):
        succ_later = v < n and place[v + 1] > i
        pred_later = v == 1 or place[v - 1] > i
        out.append((not succ_later) + 2 * (not pred_later))
    return tuple(out)


def code_cases(seq: Sequence[int]) -> tuple[int, ...]:
    """The same classification read off the slice code alone.

    Position i of a subexcedant sequence s is tested against:

    * s_i occurring again in the strict suffix s_{i+1}..s_n;
    * the symbol i - 1 occurring anywhere in s.

    The case is [no later occurrence] + 2 * [symbol i - 1 absent].

    >>> code_cases((0, 1, 1, 0, 2, 3, 6, 3))
    (0, 0, 1, 1, 3, 2, 1, 3)
    >>> code_cases((0,))
    (1,)
    """
    word = tuple(seq)
    check_subexcedant(word)
    n = len(word)
    present = set(word)
    out = [0] * n
    later: set[int] = set()
    for i in range(n - 1, -1, -1):
        out[i] = (word[i] not in later) + 2 * (i not in present)
        later.add(word[i])
    return tuple(out)


def _locate(intervals: Sequence[LabeledInterval], value: int) -> int:
    """Index of the interval containing value; they are decreasing."""
    for idx, (lo, hi, _) in enumerate(intervals):
        if lo <= value <= hi:
            return idx
    raise AssertionError(f"value {value} lies in no interval: {intervals}")


def _shift_labels(labels: Sequence[int], case: int, v: int, step: int) -> list[int]:
    """Surviving labels after a step-`step` rewrite at list position v."""
    kept = list(labels)
    if case == SPLIT:
        pass
    elif case == SHRINK_TOP:
        del kept[v]
    elif case == SHRINK_BOTTOM:
        del kept[-1]
    else:
        del kept[v]
        del kept[-1]
    kept.append(step)
    return kept


def _advance(
    intervals: Sequence[LabeledInterval], v: int, value: int, step: int
) -> tuple[list[LabeledInterval], int]:
    """Apply the step-`step` rewrite at interval v; return (state, case)."""
    lo, hi, _ = intervals[v]
    spans = [(iv.lo, iv.hi) for iv in intervals]
    if lo < value < hi:
        case = SPLIT
        spans[v : v + 1] = [(value + 1, hi), (lo, value - 1)]
    elif lo < value == hi:
        case = SHRINK_TOP
        spans[v] = (lo, value - 1)
    elif lo == value < hi:
        case = SHRINK_BOTTOM
        spans[v] = (value + 1, hi)
    else:
        case = REMOVE
        del spans[v]
    labels = _shift_labels([iv.label for iv in intervals], case, v, step)
    state = [
        LabeledInterval(a, b, lab) for (a, b), lab in zip(spans, labels)
    ]
    return state, case


def slice_encode(perm: Sequence[int]) -> Word:
    """The slice code of a permutation.

    >>> slice_encode((6, 2, 5, 8, 7, 3, 1, 4))
    (0, 1, 1, 0, 2, 3, 6, 3)
    >>> slice_encode((1, 2, 3, 4))
    (0, 0, 0, 0)
    >>> slice_encode((4, 3, 2, 1))
    (0, 1, 2, 3)
    """
    word = tuple(perm)
    check_permutation(word)
    n = len(word)
    state = [LabeledInterval(0, n, 0)]
    out = []
    for step, value in enumerate(word, start=1):
        v = _locate(state, value)
        out.append(state[v].label)
        if step < n:
            state, _ = _advance(state, v, value, step)
    return tuple(out)


def slices(perm: Sequence[int], check: bool = False) -> list[Slice]:
    """All slices of a permutation, from step 0 through step n - 1.

    With check=True every slice is verified against the structural
    invariants (decreasing disjoint intervals covering exactly the unseen
    values plus 0, strictly increasing labels in 0..step with the last
    equal to step, 0 in the last interval) and against the Lehmer code:
    the entries of [p_{i+1}, n] *not* covered by the i-th slice count the
    inversions ending at position i + 1.
    """
    word = tuple(perm)
    check_permutation(word)
    n = len(word)
    state = [LabeledInterval(0, n, 0)]
    out = [Slice(0, tuple(state))]
    lehmer = _lehmer_for_check(word) if check else None
    if check:
        _check_slice(out[0], word, lehmer)
    for step, value in enumerate(word[:-1], start=1):
        state, _ = _advance(state, _locate(state, value), value, step)
        sl = Slice(step, tuple(state))
        if check:
            _check_slice(sl, word, lehmer)
        out.append(sl)
    return out


def _lehmer_for_check(word: Word) -> Word:
    from .lehmer import lehmer_encode

    return lehmer_encode(word)


def _check_slice(sl: Slice, word: Word, lehmer: Word | None) -> None:
    n = len(word)
    ivs = sl.intervals
    assert all(lo <= hi for lo, hi, _ in ivs), sl
    # decreasing and disjoint with gaps
    assert all(ivs[j].lo > ivs[j + 1].hi + 1 for j in range(len(ivs) - 1)), sl
    covered = {x for lo, hi, _ in ivs for x in range(lo, hi + 1)}
    assert covered == set(word[sl.step :]) | {0}, sl
    labels = sl.labels()
    assert labels[-1] == sl.step and ivs[-1].lo <= 0 <= ivs[-1].hi, sl
    assert all(0 <= a < b for a, b in zip(labels, labels[1:])), sl
    if lehmer is not None and sl.step < n:
        nxt = word[sl.step]
        above = sum(
            max(0, min(hi, n) - max(lo, nxt) + 1) for lo, hi, _ in ivs
        )
        assert (n - nxt + 1) - above == lehmer[sl.step], sl


def profiles(perm: Sequence[int]) -> list[Profile]:
    """Profiles of a permutation for steps 1 through n - 1.

    The i-th profile covers {p_1, ..., p_i}; its intervals interleave the
    gaps between the i-th slice's intervals.

    >>> [p.intervals for p in profiles((3, 1, 2))]
    [((3, 3),), ((3, 3), (1, 1))]
    """
    word = tuple(perm)
    check_permutation(word)
    n = len(word)
    seen = [False] * (n + 2)
    out = []
    for step in range(1, n):
        seen[word[step - 1]] = True
        runs = []
        v = n
        while v >= 1:
            if seen[v]:
                top = v
                while seen[v]:
                    v -= 1
                runs.append((v + 1, top))
            else:
                v -= 1
        out.append(Profile(step, tuple(runs)))
    return out
