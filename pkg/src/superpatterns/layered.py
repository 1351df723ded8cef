"""Layered permutations: profiles, detection, enumeration, greedy containment.

A layered permutation is a sum of decreasing blocks (layers); it is uniquely
described by its layer-size profile, an ordered composition of its length.
Layered permutations of length n therefore correspond to the 2^(n-1)
compositions of n, which this module enumerates lazily in lexicographic
order (matching one-line lexicographic order of the realizations).
"""

from __future__ import annotations

import dataclasses
import re
from collections.abc import Iterator

from . import kernels
from .errors import CapExceededError
from .perms import Permutation, decreasing, direct_sum

ENUMERATION_CAP = 20


@dataclasses.dataclass(frozen=True)
class LayerProfile:
    """Ordered layer sizes; the empty profile describes the empty permutation."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        for s in self.sizes:
            if not isinstance(s, int) or isinstance(s, bool) or s < 1:
                raise ValueError(f"layer sizes must be positive integers, got {s!r}")

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def __str__(self) -> str:
        return "[" + ",".join(str(s) for s in self.sizes) + "]"


def parse_profile(text: str) -> LayerProfile:
    """Parse the bracketed profile form, e.g. "[3,1,2,1]"."""
    body = text.strip()
    match = re.fullmatch(r"\[\s*([0-9,\s]*)\]", body)
    if match is None:
        raise ValueError(f"not a layer profile: {text!r}")
    inner = match.group(1).strip()
    if not inner:
        return LayerProfile(())
    return LayerProfile(tuple(int(tok) for tok in inner.split(",")))


def realize(profile: LayerProfile) -> Permutation:
    """The layered permutation with the given layer sizes.

    >>> str(realize(LayerProfile((3, 1, 2, 1))))
    '3 2 1 4 6 5 7'
    """
    return direct_sum(decreasing(s) for s in profile.sizes)


def layer_profile(perm: Permutation) -> LayerProfile | None:
    """Layer sizes of perm, or None when perm is not layered.

    Scans left to right: when the next unused value is i, the entry at
    position i is the current layer's top t, and positions i..t must hold
    exactly t, t-1, ..., i.
    """
    vals = perm.values
    n = len(vals)
    sizes = []
    i = 1
    while i <= n:
        t = vals[i - 1]
        for offset in range(t - i + 1):
            if vals[i - 1 + offset] != t - offset:
                return None
        sizes.append(t - i + 1)
        i = t + 1
    return LayerProfile(tuple(sizes))


def composition_count(n: int) -> int:
    """Number of compositions of n (= layered permutations of length n)."""
    return 1 if n == 0 else 1 << (n - 1)


def composition_at_rank(n: int, rank: int) -> LayerProfile:
    """The rank-th composition of n in lexicographic order."""
    if not 0 <= rank < composition_count(n):
        raise ValueError(f"rank {rank} out of range for n={n}")
    return LayerProfile(kernels.composition_at_rank(n, rank))


def enumerate_layered(
    n: int,
    *,
    cap: int = ENUMERATION_CAP,
    start_rank: int = 0,
    stop_rank: int | None = None,
) -> Iterator[LayerProfile]:
    """All layer profiles of total n, lazily, in lexicographic order.

    Restartable: rank sub-ranges let independent consumers split the space.
    """
    if n > cap:
        raise CapExceededError(f"enumeration of layered length {n} exceeds cap {cap}")
    stop = composition_count(n) if stop_rank is None else stop_rank
    for rank in range(start_rank, stop):
        yield LayerProfile(kernels.composition_at_rank(n, rank))


def greedy_layer_indices(
    pattern: LayerProfile, host: LayerProfile
) -> tuple[int, ...] | None:
    """Host layer indices (0-based, strictly increasing) chosen by the greedy
    rule: each pattern layer takes the first remaining host layer big enough.
    None when the pattern does not fit."""
    return kernels.greedy_layer_indices(pattern.sizes, host.sizes)


def layered_contains(pattern: LayerProfile, host: LayerProfile) -> bool:
    """Containment between layered permutations, decided greedily on profiles.

    Agrees with perms.contains on the realizations: a decreasing pattern
    block must sit inside a single host layer, and consecutive pattern
    layers need strictly later host layers, so matching layer sizes
    greedily is exact.

    >>> layered_contains(LayerProfile((2, 1)), LayerProfile((3, 1, 2, 1)))
    True
    >>> layered_contains(LayerProfile((3, 3)), LayerProfile((3, 1, 2, 1)))
    False
    """
    return kernels.greedy_layer_indices(pattern.sizes, host.sizes) is not None
