"""Indifference-quota rules and conversion to and from proper sequences.

This alternative parametrization of the same rule family keys on how many
voters are indifferent.  A rule carries an indifference quota r and one
threshold per level below r:

* with r or more voters indifferent the default alternative wins outright;
* with exactly r - i indifferent (1 <= i <= r), a default-a rule picks a
  when at least x_i voters support a, and a default-b rule picks b when at
  least y'_i voters support b, where y'_i = (n - r + 1) - y_i + i rewrites
  the stored threshold y_i onto the b side.

The stored vectors are anchored at their first coordinate (x_1 = 1,
y_1 = n - r + 1) and grow by at most one per level.  Converting a rule to
its table and re-extracting the proper sequence is exact in both
directions; the threshold vector read off a table is the row-wise minimal
one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import Alternative, CountProfile, CountTable, QuotaSeq
from .engine import is_proper, to_table
from .extraction import represent


@dataclass(frozen=True, slots=True)
class LPRule:
    """Indifference-quota rule: default, quota r, and a threshold per level.

    thresholds holds the x vector for default a and the y vector for
    default b.
    """

    n: int
    default: Alternative
    r: int
    thresholds: tuple[int, ...]

    def __post_init__(self) -> None:
        n, r = self.n, self.r
        if n < 1:
            raise ValueError(f"society size must be at least 1, got {n}")
        if not 1 <= r <= n:
            raise ValueError(f"indifference quota {r} outside [1, {n}]")
        t = self.thresholds
        if len(t) != r:
            raise ValueError(f"need {r} thresholds, got {len(t)}")
        base = 1 if self.default is Alternative.A else n - r + 1
        if t[0] != base:
            raise ValueError(f"first threshold must be {base}, got {t[0]}")
        for i, v in enumerate(t, start=1):
            if not base <= v <= base + i - 1:
                raise ValueError(
                    f"threshold {v} at level {i} outside [{base}, {base + i - 1}]"
                )
        if any(not cur <= nxt <= cur + 1 for cur, nxt in zip(t, t[1:])):
            raise ValueError("thresholds may grow by at most one per level")

    @property
    def b_thresholds(self) -> tuple[int, ...]:
        """For default b, the y' rewrite of the thresholds onto the b side."""
        if self.default is not Alternative.B:
            raise ValueError("b-side thresholds exist only for default-b rules")
        base = self.n - self.r + 1
        return tuple(base - y + i for i, y in enumerate(self.thresholds, start=1))


def lp_eval(rule: LPRule, profile: CountProfile) -> Alternative:
    """Outcome of an indifference-quota rule on a count profile."""
    if rule.n != profile.n:
        raise ValueError(
            f"society size mismatch: rule has n={rule.n}, profile has n={profile.n}"
        )
    idle = profile.indifferent
    if idle >= rule.r:
        return rule.default
    i = rule.r - idle  # 1 <= i <= r
    if rule.default is Alternative.A:
        return Alternative.A if profile.na >= rule.thresholds[i - 1] else Alternative.B
    return Alternative.B if profile.nb >= rule.b_thresholds[i - 1] else Alternative.A


def lp_to_table(rule: LPRule) -> CountTable:
    """Tabulate an indifference-quota rule over every count profile."""
    return CountTable.from_function(rule.n, lambda p: lp_eval(rule, p))


def proper_to_lp(seq: QuotaSeq) -> LPRule:
    """Read an indifference-quota rule off the table of an onto proper sequence.

    The quota r is pinned by the deepest indifference level that still
    forces the default everywhere, and each threshold is the least support
    that wins its level.  Constant rules are rejected: with no deviating
    profile there is no level to anchor r.
    """
    if not is_proper(seq):
        raise ValueError(f"({seq}) is not proper")
    n = seq.n
    if not 1 <= seq.quotas[0] <= n:
        raise ValueError("constant rules have no indifference-quota form")
    table = to_table(seq)
    default = table.outcome(0, 0)
    deviating_votes = [
        p.na + p.nb for p, outcome in table.items() if outcome is not default
    ]
    r = n - min(deviating_votes) + 1
    thresholds = []
    for i in range(1, r + 1):
        votes = n - r + i
        if default is Alternative.B:
            y_prime = next(
                nb
                for nb in range(votes + 1)
                if table.outcome(votes - nb, nb) is Alternative.B
            )
            thresholds.append((n - r + 1) - y_prime + i)
        else:
            thresholds.append(
                next(
                    na
                    for na in range(votes + 1)
                    if table.outcome(na, votes - na) is Alternative.A
                )
            )
    return LPRule(n=n, default=default, r=r, thresholds=tuple(thresholds))


def lp_to_proper(rule: LPRule) -> QuotaSeq:
    """The unique proper sequence whose table equals the rule's table."""
    return represent(lp_to_table(rule))


def all_rules(n: int, default: Alternative) -> Iterator[LPRule]:
    """Every valid indifference-quota rule for one default, in (r, vector) order."""
    for r in range(1, n + 1):
        base = 1 if default is Alternative.A else n - r + 1

        def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            i = len(prefix)
            if i == r:
                yield prefix
                return
            if i == 0:
                choices = [base]
            else:
                choices = [
                    v for v in (prefix[-1], prefix[-1] + 1) if v <= base + i
                ]
            for v in choices:
                yield from extend(prefix + (v,))

        for vector in extend(()):
            yield LPRule(n=n, default=default, r=r, thresholds=vector)


def rules_matching_table(table: CountTable) -> list[LPRule]:
    """Every valid indifference-quota rule whose table equals the given one.

    Exhaustive over both defaults; the certificate behind any uniqueness or
    non-uniqueness claim about this parametrization.
    """
    return [
        rule
        for default in (Alternative.B, Alternative.A)
        for rule in all_rules(table.n, default)
        if lp_to_table(rule).outcomes == table.outcomes
    ]
