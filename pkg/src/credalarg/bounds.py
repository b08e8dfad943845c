"""Lower/upper probability bounds of extensions.

Three cases drive :func:`extension_bounds`: the empty extension means
ignorance (0, 1); a singleton takes the min/max of its own credal set;
anything larger goes through :func:`ul_bounds`, which cuts the extension
into causal parts before aggregating:

* every group anchor (a member caused by something, ancestor of no other
  member) collects itself plus its in-extension causal ancestors into one
  dependent group, reduced to a credal set by the per-agent minimum;
* members without causal edges stay isolated;
* causes whose direct effects all lie outside the extension are free.

A single group with nothing else applies the dependent rule directly;
otherwise groups, isolated members and free causes multiply as independent
factors. Each member must be consumed by exactly one part — anything else
raises :class:`~credalarg.errors.CoverageError` instead of silently
producing a meaningless product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .af import Extension
from .causality import CausalityGraph
from .credal import (CredalProfile, CredalSet, ProbabilityInterval,
                     dependent_bounds, dependent_credal_set,
                     independent_bounds, single_bounds)
from .errors import CoverageError, ValidationError

EMPTY_CASE = "empty"
SINGLETON_CASE = "singleton"
ALGORITHM_CASE = "algorithm"


@dataclass(frozen=True)
class CausalGroup:
    """One dependent part: an anchor plus its in-extension ancestors."""

    top: str
    members: tuple[str, ...]


@dataclass(frozen=True)
class BoundsResult:
    extension: Extension
    interval: ProbabilityInterval
    case: str
    groups: tuple[CausalGroup, ...] = ()


def _as_extension(members: Extension | Iterable[str]) -> Extension:
    if isinstance(members, Extension):
        return members
    return Extension(tuple(members))


def _check_domains(ext: Extension, profile: CredalProfile,
                   graph: CausalityGraph) -> None:
    for name in ext.members:
        profile.credal_set(name)  # raises on a domain mismatch
        if name not in graph.arguments:
            raise ValidationError(
                f"causality graph has no argument {name!r}")


def ul_bounds(members: Extension | Iterable[str], profile: CredalProfile,
              graph: CausalityGraph) -> BoundsResult:
    """Bounds of a multi-member extension via causal grouping.

    Factors multiply in sorted member order, so results are
    bit-reproducible for a given input.
    """
    ext = _as_extension(members)
    if len(ext.members) <= 1:
        raise ValidationError("ul_bounds needs more than one member")
    _check_domains(ext, profile, graph)
    member_set = ext.member_set

    groups = []
    for anchor in sorted(graph.group_anchors(member_set)):
        inside = (graph.ancestors_of(anchor) & member_set) | {anchor}
        groups.append(CausalGroup(anchor, tuple(sorted(inside))))

    seen: dict[str, str] = {}
    for group in groups:
        for name in group.members:
            if name in seen:
                raise CoverageError(
                    f"causal groups anchored at {seen[name]!r} and "
                    f"{group.top!r} overlap on {name!r}")
            seen[name] = group.top

    isolated = member_set & graph.partition().isolated
    free = graph.free_causes(member_set)

    consumed: dict[str, int] = {name: 0 for name in ext.members}
    for group in groups:
        for name in group.members:
            consumed[name] += 1
    for name in isolated | free:
        consumed[name] += 1
    for name, count in consumed.items():
        if count == 0:
            raise CoverageError(
                f"member {name!r} not reachable by any causal group, "
                f"isolated or free part")
        if count > 1:
            raise CoverageError(
                f"member {name!r} consumed {count} times by the causal "
                f"grouping")

    group_sets = {
        g.members: dependent_credal_set([profile.credal_set(n)
                                         for n in g.members])
        for g in groups}
    if len(groups) == 1 and not isolated and not free:
        interval = dependent_bounds(
            [profile.credal_set(n) for n in groups[0].members])
    else:
        factors: list[tuple[tuple[str, ...], CredalSet]] = list(
            group_sets.items())
        factors.extend(((n,), profile.credal_set(n))
                       for n in isolated | free)
        factors.sort(key=lambda item: item[0])
        interval = independent_bounds([k for _, k in factors])
    return BoundsResult(ext, interval, ALGORITHM_CASE, tuple(groups))


def extension_bounds(members: Extension | Iterable[str],
                     profile: CredalProfile,
                     graph: CausalityGraph) -> BoundsResult:
    """Dispatch on extension size: empty, singleton, or the full algorithm."""
    ext = _as_extension(members)
    _check_domains(ext, profile, graph)
    if not ext.members:
        return BoundsResult(ext, ProbabilityInterval(0.0, 1.0), EMPTY_CASE)
    if len(ext.members) == 1:
        interval = single_bounds(profile.credal_set(ext.members[0]))
        return BoundsResult(ext, interval, SINGLETON_CASE)
    return ul_bounds(ext, profile, graph)


def agent_valuation_oracle(members: Extension | Iterable[str],
                           profile: CredalProfile,
                           graph: CausalityGraph) -> ProbabilityInterval:
    """Differential-testing oracle for the grouping algorithm.

    Re-derives the same semantics from raw causal edges: each agent values
    the extension as a product over parts (group parts contribute their
    member minimum), and the bounds are the min/max across agents. Shares
    no traversal or aggregation code with :func:`ul_bounds`, and raises the
    same :class:`~credalarg.errors.CoverageError` on partition defects.
    """
    ext = _as_extension(members)
    if not ext.members:
        raise ValidationError("oracle needs a non-empty extension")
    _check_domains(ext, profile, graph)
    names = ext.members
    inside = set(names)
    edges = sorted(graph.edges)
    effects = {b for _, b in edges}
    causes = {a for a, _ in edges}

    def ancestors(node: str) -> set[str]:
        found: set[str] = set()
        stack = [node]
        while stack:
            current = stack.pop()
            for cause, effect in edges:
                if effect == current and cause not in found:
                    found.add(cause)
                    stack.append(cause)
        return found

    up = {name: ancestors(name) for name in names}
    anchors = [n for n in names if n in effects
               and not any(n in up[other] for other in names if other != n)]
    parts: list[tuple[str, ...]] = [
        tuple(sorted({n} | (up[n] & inside))) for n in anchors]
    for n in names:
        if n not in effects and n not in causes:
            parts.append((n,))
    for n in names:
        if (n in causes and n not in anchors
                and not any((n, e) in graph.edges for e in inside)):
            parts.append((n,))

    flattened = sorted(x for part in parts for x in part)
    if flattened != list(names):
        raise CoverageError(
            "oracle partition mismatch: consumed %s, expected %s"
            % (",".join(flattened), ",".join(names)))

    values = []
    for j in range(profile.agent_count):
        total = 1.0
        for part in sorted(parts):
            total *= min(profile.credal_set(n).values[j] for n in part)
        values.append(total)
    return ProbabilityInterval(min(values), max(values))


def rank_extensions(results: Sequence[BoundsResult]) -> list[BoundsResult]:
    """Heuristic ordering of bounds results, best first.

    Not a principled interval order: it sorts by interval midpoint
    (descending) with a lexicographic member tiebreak, which agrees with
    pairwise dominance whenever both bounds of one interval weakly exceed
    the other's.
    """
    return sorted(results,
                  key=lambda r: (-r.interval.midpoint(), r.extension.members))
