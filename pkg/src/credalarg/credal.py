"""Agent opinions as credal sets, and the interval aggregation rules.

Every argument carries one probability value per agent; the list of those
values is its credal set. Two aggregation modes exist for a collection of
credal sets: treat the underlying events as independent (per-agent product)
or as dependent (per-agent minimum). Both collapse to lower/upper bounds by
taking the min/max across agents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from .errors import CredalSetError, ValidationError

if TYPE_CHECKING:
    from .af import ArgumentationFramework


@dataclass(frozen=True)
class CredalSet:
    """Opinions about one event, indexed by agent (position i = agent i+1)."""

    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise CredalSetError("credal set must hold at least one opinion")
        for v in vals:
            if not 0.0 <= v <= 1.0:
                raise CredalSetError(f"opinion {v!r} outside [0, 1]")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ProbabilityInterval:
    """A lower/upper probability pair, always within the unit interval."""

    lower: float
    upper: float

    def __post_init__(self):
        if not 0.0 <= self.lower <= self.upper <= 1.0:
            raise ValidationError(
                f"not a probability interval: ({self.lower}, {self.upper})")

    def midpoint(self) -> float:
        return (self.lower + self.upper) / 2.0


@dataclass(frozen=True)
class CredalProfile:
    """Total mapping from argument names to equal-length credal sets."""

    agent_count: int
    assignment: Mapping[str, CredalSet] = field(default_factory=dict)

    def __post_init__(self):
        if self.agent_count < 1:
            raise CredalSetError("agent count must be >= 1")
        norm = {name: k for name, k in sorted(self.assignment.items())}
        for name, k in norm.items():
            if len(k) != self.agent_count:
                raise CredalSetError(
                    f"credal set for {name!r} has {len(k)} opinions, "
                    f"expected {self.agent_count}")
        object.__setattr__(self, "assignment", norm)

    @classmethod
    def of(cls, table: Mapping[str, Sequence[float]]) -> "CredalProfile":
        """Build from raw value lists, inferring the agent count."""
        sets = {name: CredalSet(tuple(vals)) for name, vals in table.items()}
        if not sets:
            return cls(1, {})
        m = len(next(iter(sets.values())))
        return cls(m, sets)

    @classmethod
    def maximal(cls, arguments: Iterable[str],
                agent_count: int = 1) -> "CredalProfile":
        """All-ones profile: every agent fully believes every argument."""
        ones = CredalSet((1.0,) * agent_count)
        return cls(agent_count, {name: ones for name in arguments})

    def credal_set(self, name: str) -> CredalSet:
        try:
            return self.assignment[name]
        except KeyError:
            raise ValidationError(
                f"profile has no opinions for argument {name!r}") from None

    @property
    def arguments(self) -> tuple[str, ...]:
        return tuple(self.assignment)


def single_bounds(k: CredalSet) -> ProbabilityInterval:
    """Lower/upper probability of one event: min/max of its credal set."""
    return ProbabilityInterval(min(k.values), max(k.values))


def _check_same_cardinality(ks: Sequence[CredalSet]) -> int:
    if not ks:
        raise CredalSetError("need at least one credal set")
    m = len(ks[0])
    for k in ks:
        if len(k) != m:
            raise CredalSetError(
                f"mismatched credal set cardinalities: {len(k)} vs {m}")
    return m


def independent_bounds(ks: Sequence[CredalSet]) -> ProbabilityInterval:
    """Bounds for independent events: per-agent product, then min/max.

    The caller controls factor order; products run left to right over ``ks``
    so a canonically sorted input is bit-reproducible.
    """
    m = _check_same_cardinality(ks)
    products = [1.0] * m
    for k in ks:
        for j in range(m):
            products[j] *= k.values[j]
    return ProbabilityInterval(min(products), max(products))


def dependent_credal_set(ks: Sequence[CredalSet]) -> CredalSet:
    """Joint credal set for dependent events: per-agent minimum."""
    m = _check_same_cardinality(ks)
    return CredalSet(tuple(min(k.values[j] for k in ks) for j in range(m)))


def dependent_bounds(ks: Sequence[CredalSet]) -> ProbabilityInterval:
    """Bounds for dependent events: min/max of the joint credal set."""
    return single_bounds(dependent_credal_set(ks))


@dataclass(frozen=True, order=True)
class RationalityViolation:
    """One agent believing both ends of an attack above 0.5."""

    agent: int  # 1-based
    attacker: str
    target: str
    attacker_value: float
    target_value: float


def rationality_report(profile: CredalProfile,
                       af: "ArgumentationFramework") -> list[RationalityViolation]:
    """Scan every agent against every attack.

    An opinion is rational when believing an attacker above 0.5 forces the
    attacked argument to at most 0.5. Violations are diagnostics, never a
    rejection: perfectly sensible multi-agent tables break the rule.
    """
    violations = []
    for attacker, target in af.attacks:
        ka = profile.credal_set(attacker)
        kt = profile.credal_set(target)
        for j in range(profile.agent_count):
            if ka.values[j] > 0.5 and kt.values[j] > 0.5:
                violations.append(RationalityViolation(
                    j + 1, attacker, target, ka.values[j], kt.values[j]))
    return sorted(violations)


def is_maximal(profile: CredalProfile) -> bool:
    """True iff every opinion of every agent equals 1."""
    return all(v == 1.0 for k in profile.assignment.values()
               for v in k.values)


def is_uniform(profile: CredalProfile) -> bool:
    """True iff every opinion lies in [0, 1].

    Validated profiles are always uniform; the guard exists for callers
    feeding raw, not-yet-validated tables.
    """
    return all(0.0 <= v <= 1.0 for k in profile.assignment.values()
               for v in k.values)
