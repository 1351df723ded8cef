import itertools
import math
import random

from oracles import brute_compositions, brute_lex_min_embedding
from superpatterns import _kernels_py


class TestEmbedding:
    def test_matches_oracle_exhaustive(self, backend):
        for m in range(7):
            for host in itertools.permutations(range(1, m + 1)):
                for k in range(min(m, 4) + 1):
                    for pat in itertools.permutations(range(1, k + 1)):
                        got = backend.lex_min_embedding(pat, host)
                        assert got == brute_lex_min_embedding(pat, host)

    def test_matches_oracle_random(self, backend):
        rng = random.Random(20260810)
        for _ in range(300):
            m = rng.randint(1, 10)
            k = rng.randint(0, min(m, 5))
            host = tuple(rng.sample(range(1, m + 1), m))
            pat = tuple(rng.sample(range(1, k + 1), k))
            assert backend.lex_min_embedding(pat, host) == brute_lex_min_embedding(
                pat, host
            )
            assert backend.contains(pat, host) == (
                brute_lex_min_embedding(pat, host) is not None
            )

    def test_long_host(self, backend):
        rng = random.Random(7)
        host = tuple(rng.sample(range(1, 201), 200))
        pat = (2, 4, 1, 3)
        assert backend.lex_min_embedding(pat, host) == brute_lex_min_embedding(
            pat, host
        )


class TestRanks:
    def test_composition_at_rank(self, backend):
        for n in range(10):
            ranked = [
                backend.composition_at_rank(n, r) for r in range(max(1, 2 ** (n - 1)))
            ]
            assert ranked == brute_compositions(n)

    def test_permutation_at_rank(self, backend):
        for m in range(7):
            expected = sorted(itertools.permutations(range(1, m + 1)))
            got = [backend.permutation_at_rank(m, r) for r in range(math.factorial(m))]
            assert got == expected


class TestGreedy:
    def test_parity_with_python(self, backend):
        for pn in range(5):
            for hn in range(7):
                for pat in brute_compositions(pn):
                    for host in brute_compositions(hn):
                        assert backend.greedy_layer_indices(
                            pat, host
                        ) == _kernels_py.greedy_layer_indices(pat, host)


class TestScans:
    def test_scan_layered_parity(self, backend):
        patterns = tuple(brute_compositions(3))
        for m in range(3, 9):
            total = 2 ** (m - 1)
            assert backend.scan_layered(m, patterns, 0, total) == (
                _kernels_py.scan_layered(m, patterns, 0, total)
            )
            # sub-ranges behave like slices of the full scan
            mid = total // 2
            lo_half = backend.scan_layered(m, patterns, 0, mid)
            hi_half = backend.scan_layered(m, patterns, mid, total)
            full = backend.scan_layered(m, patterns, 0, total)
            if full[0] == -1:
                assert lo_half[0] == -1 and hi_half[0] == -1
            elif full[0] < mid:
                assert lo_half[0] == full[0]
            else:
                assert lo_half[0] == -1 and hi_half[0] == full[0]

    def test_scan_all_perms_parity(self, backend):
        patterns = ((1, 2), (2, 1))
        for m in range(2, 6):
            total = math.factorial(m)
            assert backend.scan_all_perms(m, patterns, 0, total) == (
                _kernels_py.scan_all_perms(m, patterns, 0, total)
            )

    def test_scan_perm_list_parity(self, backend):
        rng = random.Random(99)
        candidates = [
            tuple(rng.sample(range(1, 8), 7)) for _ in range(64)
        ]
        patterns = ((2, 1, 3), (3, 1, 2))
        assert backend.scan_perm_list(candidates, patterns, 0, 64) == (
            _kernels_py.scan_perm_list(candidates, patterns, 0, 64)
        )

    def test_scan_counts_on_exhaustion(self, backend):
        # a pattern that never fits: every length-m composition lacks a part m+1
        patterns = ((5,),)
        rank, scanned = backend.scan_layered(4, patterns, 0, 8)
        assert (rank, scanned) == (-1, 8)

    def test_empty_length_zero(self, backend):
        assert backend.scan_layered(0, ((),), 0, 1) == (0, 1)
        assert backend.scan_layered(0, ((1,),), 0, 1) == (-1, 1)
        assert backend.scan_all_perms(0, (), 0, 1) == (0, 1)
