# core/matching.py
"""Linear-time substring search (Knuth–Morris–Pratt) over arbitrary hashable sequences."""

from typing import List, Sequence


def compute_lps(pattern: Sequence) -> List[int]:
    """
    Longest proper prefix of pattern[:i+1] that is also a suffix of it.

    O(m) time and memory.
    """
    m = len(pattern)
    lps = [0] * m
    length = 0
    i = 1
    while i < m:
        if pattern[i] == pattern[length]:
            length += 1
            lps[i] = length
            i += 1
        elif length != 0:
            length = lps[length - 1]
        else:
            lps[i] = 0
            i += 1
    return lps


def find(text: Sequence, pattern: Sequence) -> int:
    """Index of the first occurrence of pattern in text, or -1. O(n + m) comparisons."""
    n = len(text)
    m = len(pattern)
    if m == 0:
        return 0
    if m > n:
        return -1

    lps = compute_lps(pattern)
    i = j = 0
    while i < n:
        if text[i] == pattern[j]:
            i += 1
            j += 1
            if j == m:
                return i - j
        elif j != 0:
            j = lps[j - 1]
        else:
            i += 1
    return -1


def rotation_offset(u: Sequence, v: Sequence) -> int:
    """
    Smallest k with v == u[k:] + u[:k], or -1 if v is not a rotation of u.

    Searches v inside u·u, so the cost stays linear in |u|.
    """
    if len(u) != len(v):
        return -1
    if not u:
        return 0
    doubled = tuple(u) + tuple(u)
    k = find(doubled, tuple(v))
    return k if 0 <= k < len(u) else -1
