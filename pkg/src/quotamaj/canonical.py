"""Reduction of defining sequences to their unique proper form.

Two rewriting steps, each of which provably leaves the induced rule
untouched, drive the reduction:

* drop any entry that lies weakly between two earlier entries (one earlier
  entry below it or equal, one above it or equal): a profile deciding at
  that entry would already have decided earlier;
* of two consecutive entries that escape the earlier range on the same
  side, drop the earlier one: every profile it decides is decided one
  step later by its more extreme neighbour, with the same outcome.

Run to a fixed point after truncating at the first terminal element, the
two steps terminate in a proper sequence.  In debug runs every single
removal is cross-checked against the brute-force truth table.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence

from .core import QuotaSeq, SearchBudgetExceeded
from .engine import is_proper, is_valid_r_tuple, length, to_table


def truncate(raw: Sequence[int], n: int) -> QuotaSeq:
    """Prefix of a raw sequence up to and including its first element in {0, n+1}."""
    if not raw:
        raise ValueError("quota sequence must be nonempty")
    for q in raw:
        if not 0 <= q <= n + 1:
            raise ValueError(f"quota {q} outside [0, {n + 1}] for society size {n}")
    for i, q in enumerate(raw):
        if q in (0, n + 1):
            return QuotaSeq(n, tuple(raw[: i + 1]))
    raise ValueError(
        "quota sequence needs an element in {0, n+1}; "
        "otherwise some profiles are never decided"
    )


def _require_truncated(seq: QuotaSeq) -> None:
    if any(q in (0, seq.n + 1) for q in seq.quotas[:-1]):
        raise ValueError("sequence must be truncated at its first element of {0, n+1}")


def delete_dominated(seq: QuotaSeq) -> QuotaSeq:
    """Remove every entry weakly sandwiched by earlier entries.

    An interior entry k_g with min(earlier) <= k_g <= max(earlier) can never
    be the deciding index, so removing it preserves the rule.  Removal is
    leftmost-first and repeats until no entry qualifies; the terminal and
    the leading entry are never removed.
    """
    _require_truncated(seq)
    q = list(seq.quotas)
    changed = True
    while changed:
        changed = False
        lo = hi = q[0]
        for g in range(1, len(q) - 1):
            v = q[g]
            if lo <= v <= hi:
                del q[g]
                changed = True
                break
            lo = min(lo, v)
            hi = max(hi, v)
    out = QuotaSeq(seq.n, tuple(q))
    assert to_table(out) == to_table(seq), "dominated-entry removal changed the rule"
    return out


def _drop_first_same_side(seq: QuotaSeq) -> QuotaSeq | None:
    """One same-side collapse, or None when the sides already alternate.

    Assumes every entry escapes the range of all earlier entries (the
    fixed point of delete_dominated).  At the first pair of consecutive
    entries on the same side, the later one is the more extreme and the
    earlier one is redundant.
    """
    q = seq.quotas
    lo = hi = q[0]
    prev_side = 0
    for g in range(1, len(q)):
        v = q[g]
        if v > hi:
            side, hi = 1, v
        elif v < lo:
            side, lo = -1, v
        else:
            raise AssertionError("entry inside earlier range survived delete_dominated")
        if side == prev_side:
            return QuotaSeq(seq.n, q[: g - 1] + q[g:])
        prev_side = side
    return None


def canonicalize(raw: Sequence[int], n: int) -> QuotaSeq:
    """The unique proper sequence defining the same rule as the raw input.

    Truncates at the first terminal, then alternates dominated-entry
    removal with same-side collapses until the zig-zag shape is reached.
    A leading 0 or n+1 denotes a constant rule and canonicalizes to the
    singleton sequence.
    """
    seq = truncate(raw, n)
    if seq.quotas[0] in (0, n + 1):
        return QuotaSeq(n, (seq.quotas[0],))
    while True:
        seq = delete_dominated(seq)
        collapsed = _drop_first_same_side(seq)
        if collapsed is None:
            break
        assert to_table(collapsed) == to_table(seq), "same-side collapse changed the rule"
        seq = collapsed
    assert is_proper(seq), "canonicalization did not reach a proper sequence"
    return seq


def _shorter_candidates(n: int, max_length: int):
    interior = range(1, n + 1)
    for ell in range(max_length):
        for body in itertools.permutations(interior, ell):
            yield QuotaSeq(n, body + (n + 1,))
            yield QuotaSeq(n, body + (0,))


def _candidate_count(n: int, max_length: int) -> int:
    total = 0
    perms = 1
    for ell in range(max_length):
        total += 2 * perms
        perms *= n - ell
    return total


def is_minimal(seq: QuotaSeq, max_candidates: int = 200_000) -> bool:
    """Whether no strictly shorter sequence of distinct quotas defines the same rule.

    Checked by exhaustive generation of every shorter candidate, so it is an
    independent certificate that properness really is minimality.  Raises
    SearchBudgetExceeded rather than guessing when the candidate space is
    larger than max_candidates.
    """
    if not is_valid_r_tuple(seq):
        raise ValueError(f"({seq}) is not a sequence of distinct quotas ending at 0 or n+1")
    target_length = length(seq)
    count = _candidate_count(seq.n, target_length)
    if count > max_candidates:
        raise SearchBudgetExceeded(
            f"minimality search needs {count} candidates, budget is {max_candidates}"
        )
    table = to_table(seq)
    return not any(
        to_table(cand) == table for cand in _shorter_candidates(seq.n, target_length)
    )
