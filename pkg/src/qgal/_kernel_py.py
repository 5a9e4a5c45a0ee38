"""Pure-Python word-matching kernel.

Same interface as the compiled extension in _kernel.pyx; used as the
fallback when the extension is unavailable (or QGAL_PURE_PYTHON is set).
"""

IMPLEMENTATION = "python"


def find_first_match(word, buckets):
    """Leftmost occurrence of any rule lhs inside `word`.

    `buckets` maps a first letter to a list of (lhs, rule_index) pairs,
    with each bucket sorted longest lhs first so ties at one position
    pick the longest (and thus most specific) rule.

    Returns (position, rule_index, lhs_length) or None.
    """
    n = len(word)
    for pos in range(n):
        bucket = buckets.get(word[pos])
        if not bucket:
            continue
        rest = n - pos
        for lhs, idx in bucket:
            m = len(lhs)
            if m <= rest and word[pos : pos + m] == lhs:
                return pos, idx, m
    return None


def has_subword(word, buckets):
    """True when `word` contains some rule lhs (cheap normality test)."""
    return find_first_match(word, buckets) is not None
