"""Decoding a subexcedant sequence back to its permutation.

The encoder in permcode.slices needs the permutation to know the interval
endpoints, but the *shape* of a slice survives in its code: which labels
exist, in what order, and how many values the profile gaps between them
cover.  That shape is enough to recover the Lehmer code of the decoded
permutation, entry by entry.

Concretely, a SegmentChain mirrors a slice and its interleaved profile as
one alternating top-to-bottom list of segments:

    [profile?] slice profile slice profile ... slice

where the leading profile segment exists exactly while the maximum value n
has been consumed already, and the final slice segment is the one holding
0.  Slice segments carry their labels; profile segments carry how many
values they cover.  Interval endpoints are not representable here: a SPLIT
divides an interval at a value the decoder has not determined yet, so only
labels and coverage counts are maintained (their sums grow by one per
step, hitting i after step i).

Step i of the decode locates the slice segment labeled s_i.  Every value
inside a profile segment above it is larger than p_i and sits to its left,
so the number of such values is exactly the Lehmer entry L(p)_i.  The
chain is then rewritten by the case classification of the code
(permcode.slices.code_cases) and relabeled exactly like the encoder
relabels intervals.  After n steps the collected Lehmer entries decode to
the permutation.
"""

from __future__ import annotations

from collections.abc import Sequence

from .core import Word, check_subexcedant
from .lehmer import lehmer_decode
from .slices import REMOVE, SHRINK_BOTTOM, SHRINK_TOP, SPLIT, _shift_labels, code_cases

__all__ = ["SegmentChain", "slice_decode", "roundtrip_check"]

_SLICE, _PROFILE = 0, 1


class SegmentChain:
    """Alternating slice/profile segments, top (largest values) first.

    Internally one list of [kind, payload] pairs: a slice segment stores
    its label, a profile segment the number of values it covers.
    """

    def __init__(self) -> None:
        self._segs: list[list[int]] = [[_SLICE, 0]]  # one slice, label 0

    @property
    def top_is_profile(self) -> bool:
        return self._segs[0][0] == _PROFILE

    def slice_labels(self) -> tuple[int, ...]:
        return tuple(s[1] for s in self._segs if s[0] == _SLICE)

    def profile_cards(self) -> tuple[int, ...]:
        return tuple(s[1] for s in self._segs if s[0] == _PROFILE)

    def locate(self, label: int) -> int:
        """Chain position of the slice segment with the given label."""
        for pos, seg in enumerate(self._segs):
            if seg[0] == _SLICE and seg[1] == label:
                return pos
        raise AssertionError(f"no slice segment labeled {label}")

    def covered_above(self, pos: int) -> int:
        """Values covered by profile segments above chain position pos."""
        return sum(
            seg[1] for seg in self._segs[:pos] if seg[0] == _PROFILE
        )

    def apply(self, case: int, entry: int, pos: int, step: int) -> None:
        """Rewrite for step `step`, consuming code entry `entry` at pos."""
        segs = self._segs
        old_labels = [s[1] for s in segs if s[0] == _SLICE]
        v = sum(1 for s in segs[:pos] if s[0] == _SLICE)
        if case in (SHRINK_TOP, REMOVE):
            # the consumed value tops its interval; it is n exactly when
            # the located segment is the chain's top, which happens
            # exactly on label 0
            assert (pos == 0) == (entry == 0), (segs, entry)
        if case == SPLIT:
            segs[pos : pos + 1] = [[_SLICE, 0], [_PROFILE, 1], [_SLICE, 0]]
        elif case == SHRINK_TOP:
            if pos == 0:
                segs.insert(0, [_PROFILE, 1])
            else:
                assert segs[pos - 1][0] == _PROFILE, segs
                segs[pos - 1][1] += 1
        elif case == SHRINK_BOTTOM:
            # the freed minimum adjoins the profile below, which exists:
            # the located interval held a value above 0, so it is not the
            # chain's last segment
            assert segs[pos + 1][0] == _PROFILE, segs
            segs[pos + 1][1] += 1
        else:
            assert segs[pos + 1][0] == _PROFILE, segs
            below = segs[pos + 1]
            if pos == 0:
                below[1] += 1
                del segs[0]
            else:
                segs[pos - 1][1] += 1 + below[1]
                del segs[pos : pos + 2]
        labels = _shift_labels(old_labels, case, v, step)
        slots = [s for s in segs if s[0] == _SLICE]
        assert len(slots) == len(labels), (segs, labels)
        for seg, lab in zip(slots, labels):
            seg[1] = lab

    def check(self, step: int) -> None:
        """Structural invariants after `step` rewrites."""
        segs = self._segs
        kinds = [s[0] for s in segs]
        assert all(
            a != b for a, b in zip(kinds, kinds[1:])
        ), "segments must alternate"
        assert segs[-1][0] == _SLICE, "chain must end in a slice segment"
        labels = self.slice_labels()
        assert all(a < b for a, b in zip(labels, labels[1:])), labels
        assert labels[-1] == step, (labels, step)
        assert sum(self.profile_cards()) == step, segs


def slice_decode(seq: Sequence[int], check: bool = False) -> Word:
    """Inverse of permcode.slices.slice_encode.

    With check=True the chain invariants are verified after every step and
    the finished chain history is compared against the slices and profiles
    of the decoded permutation.

    >>> slice_decode((0, 1, 1, 0, 2, 3, 6, 3))
    (6, 2, 5, 8, 7, 3, 1, 4)
    >>> slice_decode((0, 0, 0, 0))
    (1, 2, 3, 4)
    >>> slice_decode((0, 1, 2, 3))
    (4, 3, 2, 1)
    """
    word = tuple(seq)
    check_subexcedant(word)
    n = len(word)
    cases = code_cases(word)
    chain = SegmentChain()
    code = []
    history = []
    # suffix_top[i]: no 0 in word[i:], i.e. the value n is consumed already
    # and the chain must start with a profile segment
    suffix_top = [False] * n
    zero_free = True
    for i in range(n - 1, -1, -1):
        zero_free = zero_free and word[i] != 0
        suffix_top[i] = zero_free
    for i in range(n):
        step = i + 1
        pos = chain.locate(word[i])
        assert suffix_top[i] == chain.top_is_profile, (word, i)
        code.append(chain.covered_above(pos))
        chain.apply(cases[i], word[i], pos, step)
        if check:
            chain.check(step)
            if step < n:
                history.append(
                    (chain.slice_labels(), chain.profile_cards())
                )
    perm = lehmer_decode(tuple(code))
    if check:
        _check_history(perm, tuple(code), history)
    return perm


def _check_history(
    perm: Word, code: Word, history: list[tuple[tuple[int, ...], tuple[int, ...]]]
) -> None:
    from .lehmer import lehmer_encode
    from .slices import profiles, slices

    assert lehmer_encode(perm) == code
    slice_trace = slices(perm)
    profile_trace = profiles(perm)
    for (labels, cards), sl, pr in zip(history, slice_trace[1:], profile_trace):
        assert labels == sl.labels(), (perm, sl.step)
        assert cards == tuple(hi - lo + 1 for lo, hi in pr.intervals), (
            perm,
            pr.step,
        )


def roundtrip_check(perm: Sequence[int]) -> bool:
    """Does decode(encode(perm)) reproduce perm exactly?"""
    from .slices import slice_encode

    word = tuple(perm)
    return slice_decode(slice_encode(word)) == word
