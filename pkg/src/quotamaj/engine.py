"""Evaluation of quota-sequence voting rules.

A sequence of quotas (k_0, ..., k_r) decides a profile at the first index
where either at least k_i voters support a, or at least n+1-k_i voters
support b.  The two conditions are mutually exclusive (they would need
n+1 voters between them), so the deciding index yields a single outcome.
A quota equal to 0 or n+1 makes one condition vacuously true, which is
why every sequence must contain such a terminal element.
"""

from __future__ import annotations

from .core import Alternative, CountProfile, CountTable, QuotaSeq, all_count_profiles


def _decide(quotas: tuple[int, ...], n: int, na: int, nb: int) -> tuple[int, Alternative]:
    for lam, k in enumerate(quotas):
        if na >= k:
            return lam, Alternative.A
        if nb >= n + 1 - k:
            return lam, Alternative.B
    raise AssertionError("unreachable: sequence contains an element of {0, n+1}")


def _require_same_n(seq: QuotaSeq, profile: CountProfile) -> None:
    if seq.n != profile.n:
        raise ValueError(
            f"society size mismatch: sequence has n={seq.n}, profile has n={profile.n}"
        )


def profile_index(seq: QuotaSeq, profile: CountProfile) -> int:
    """Index of the first quota that decides the profile."""
    _require_same_n(seq, profile)
    return _decide(seq.quotas, seq.n, profile.na, profile.nb)[0]


def evaluate(seq: QuotaSeq, profile: CountProfile) -> Alternative:
    """Outcome of the quota-sequence rule on the given profile."""
    _require_same_n(seq, profile)
    return _decide(seq.quotas, seq.n, profile.na, profile.nb)[1]


def evaluate_strict_quota(quota: int, profile: CountProfile) -> Alternative:
    """Single-quota rule on a strict profile: a iff at least `quota` support a."""
    if not 0 <= quota <= profile.n + 1:
        raise ValueError(f"quota {quota} outside [0, {profile.n + 1}]")
    if not profile.is_strict:
        raise ValueError(
            f"profile ({profile.na}, {profile.nb}) has indifferent voters; "
            "the single-quota rule is defined on strict profiles only"
        )
    return Alternative.A if profile.na >= quota else Alternative.B


def length(seq: QuotaSeq) -> int:
    """Position of the first element in {0, n+1}."""
    for i, q in enumerate(seq.quotas):
        if q in (0, seq.n + 1):
            return i
    raise AssertionError("unreachable: sequence contains an element of {0, n+1}")


def is_valid_r_tuple(seq: QuotaSeq) -> bool:
    """Distinct entries, interior ones in [1, n], exactly one terminal, at the end."""
    q = seq.quotas
    if len(set(q)) != len(q):
        return False
    if q[-1] not in (0, seq.n + 1):
        return False
    return all(1 <= v <= seq.n for v in q[:-1])


def is_proper(seq: QuotaSeq) -> bool:
    """Whether the sequence zig-zags strictly outward with alternating sides.

    A proper sequence has distinct entries, keeps its single element of
    {0, n+1} at the end, and every later entry escapes the range of all
    earlier ones, alternating strictly between the above side and the
    below side.  Such sequences are exactly the minimal-length defining
    sequences, and for onto rules the proper form is unique.

    Any sequence is accepted; shapes that break a condition report False.
    """
    q = seq.quotas
    if not is_valid_r_tuple(seq):
        return False
    lo = hi = q[0]
    prev_side = 0
    for v in q[1:]:
        if v > hi:
            side, hi = 1, v
        elif v < lo:
            side, lo = -1, v
        else:
            return False
        if side == prev_side:
            return False
        prev_side = side
    return True


def dual(seq: QuotaSeq) -> QuotaSeq:
    """Swap the roles of the two alternatives: each quota k becomes n+1-k.

    Evaluating the dual sequence on the mirrored profile (nb, na) always
    yields the opposite outcome, and properness is preserved.
    """
    return QuotaSeq(seq.n, tuple(seq.n + 1 - q for q in seq.quotas))


def to_table(seq: QuotaSeq) -> CountTable:
    """Tabulate the rule over every count profile."""
    n = seq.n
    quotas = seq.quotas
    return CountTable(
        n, tuple(_decide(quotas, n, p.na, p.nb)[1] for p in all_count_profiles(n))
    )
