# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word-matching kernel for the rewrite engine.

The inner loop of normal-form computation is scanning monomials for
rule left-hand sides; this module does that scan over C arrays.  The
pure-Python twin lives in _kernel_py.py.
"""

IMPLEMENTATION = "cython"


def find_first_match(word, buckets):
    """Leftmost occurrence of any rule lhs inside `word`.

    Same contract as _kernel_py.find_first_match: buckets maps first
    letter -> list of (lhs, rule_index), longest lhs first.
    """
    cdef int n = len(word)
    cdef int pos, m, k, rest
    cdef int wbuf[64]
    if n > 64:
        # extremely long words fall back to the generic scan
        return _find_generic(word, buckets)
    for pos in range(n):
        wbuf[pos] = word[pos]
    for pos in range(n):
        bucket = buckets.get(word[pos])
        if not bucket:
            continue
        rest = n - pos
        for lhs_idx in bucket:
            lhs = lhs_idx[0]
            m = len(lhs)
            if m > rest:
                continue
            k = 0
            while k < m and wbuf[pos + k] == <int> lhs[k]:
                k += 1
            if k == m:
                return pos, lhs_idx[1], m
    return None


def _find_generic(word, buckets):
    cdef int n = len(word)
    cdef int pos, m
    for pos in range(n):
        bucket = buckets.get(word[pos])
        if not bucket:
            continue
        for lhs_idx in bucket:
            lhs = lhs_idx[0]
            m = len(lhs)
            if m <= n - pos and word[pos : pos + m] == lhs:
                return pos, lhs_idx[1], m
    return None


def has_subword(word, buckets):
    return find_first_match(word, buckets) is not None
