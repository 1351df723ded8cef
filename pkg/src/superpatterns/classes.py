"""Permutation classes used by verification and search.

Four classes: layered, the 231-avoiders, the 321-avoiders, and all
permutations.  Enumeration is lexicographic in one-line notation.  The
filter route (all permutations, kept when they avoid the forbidden pattern)
is the reference; the direct generators are an optimization for larger n
and are differential-tested against the filter.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
from collections.abc import Iterator

from . import kernels, layered
from .errors import CapExceededError
from .perms import Permutation

AV_ENUMERATION_CAP = 12
_DIRECT_THRESHOLD = 8  # auto method switches to the direct generators here

_PATTERN_231 = (2, 3, 1)
_PATTERN_321 = (3, 2, 1)


class ClassTag(str, enum.Enum):
    LAYERED = "layered"
    AV231 = "av231"
    AV321 = "av321"
    ALL = "all"

    def __str__(self) -> str:
        return self.value


def coerce_tag(tag: ClassTag | str) -> ClassTag:
    return tag if isinstance(tag, ClassTag) else ClassTag(tag)


def in_class(perm: Permutation, tag: ClassTag | str) -> bool:
    tag = coerce_tag(tag)
    if tag is ClassTag.LAYERED:
        return layered.layer_profile(perm) is not None
    if tag is ClassTag.AV231:
        return not kernels.contains(_PATTERN_231, perm.values)
    if tag is ClassTag.AV321:
        return not kernels.contains(_PATTERN_321, perm.values)
    return True


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def class_count(tag: ClassTag | str, n: int) -> int:
    """Number of length-n members, from the closed-form counts."""
    tag = coerce_tag(tag)
    if tag is ClassTag.LAYERED:
        return layered.composition_count(n)
    if tag is ClassTag.ALL:
        return math.factorial(n)
    return catalan(n)


@functools.lru_cache(maxsize=None)
def _av231_span(span: int) -> tuple[tuple[int, ...], ...]:
    """All 231-avoiding permutations of 1..span (unsorted).

    A 231-avoider splits at its maximum: everything left of the maximum is
    below everything right of it, and both sides avoid 231 recursively.
    """
    if span == 0:
        return ((),)
    out = []
    for left_size in range(span):
        right_size = span - 1 - left_size
        for left in _av231_span(left_size):
            for right in _av231_span(right_size):
                out.append(left + (span,) + tuple(v + left_size for v in right))
    return tuple(out)


def _av321_tuples(n: int) -> list[tuple[int, ...]]:
    """All 321-avoiding permutations of 1..n, lexicographically.

    Backtracking over positions with O(1) feasibility state: track the
    maximum placed so far and the largest value that already sits below an
    earlier, larger entry (the floor).  Placing anything under the floor
    completes a decreasing triple, and any unused value under the floor can
    never be placed, so both prune exactly.
    """
    out: list[tuple[int, ...]] = []
    used = [False] * (n + 1)
    prefix: list[int] = []

    def extend(max_so_far: int, floor: int, min_unused: int) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        if min_unused < floor:
            return
        for v in range(min_unused, n + 1):
            if used[v] or v < floor:
                continue
            used[v] = True
            prefix.append(v)
            new_min = min_unused
            if v == min_unused:
                new_min += 1
                while new_min <= n and used[new_min]:
                    new_min += 1
            if v < max_so_far:
                extend(max_so_far, max(floor, v), new_min)
            else:
                extend(v, floor, new_min)
            prefix.pop()
            used[v] = False

    extend(0, 0, 1)
    return out


def _filter_tuples(forbidden: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    for cand in itertools.permutations(range(1, n + 1)):
        if not kernels.contains(forbidden, cand):
            yield cand


def class_tuples(
    tag: ClassTag | str, n: int, *, method: str = "auto"
) -> Iterator[tuple[int, ...]]:
    """Members of the class at length n as raw one-line tuples, lex order."""
    tag = coerce_tag(tag)
    if tag is ClassTag.LAYERED:
        for profile in layered.enumerate_layered(n):
            yield layered.realize(profile).values
        return
    if n > AV_ENUMERATION_CAP:
        raise CapExceededError(
            f"enumeration of {tag.value} length {n} exceeds cap {AV_ENUMERATION_CAP}"
        )
    if tag is ClassTag.ALL:
        yield from itertools.permutations(range(1, n + 1))
        return
    if method == "auto":
        method = "direct" if n >= _DIRECT_THRESHOLD else "filter"
    if method == "filter":
        forbidden = _PATTERN_231 if tag is ClassTag.AV231 else _PATTERN_321
        yield from _filter_tuples(forbidden, n)
    elif method == "direct":
        if tag is ClassTag.AV231:
            yield from sorted(_av231_span(n))
        else:
            yield from _av321_tuples(n)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")


def enumerate_class(
    tag: ClassTag | str, n: int, *, method: str = "auto"
) -> Iterator[Permutation]:
    """All length-n members of the class, in lexicographic one-line order."""
    for values in class_tuples(tag, n, method=method):
        yield Permutation(values)
