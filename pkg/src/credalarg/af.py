"""Abstract argumentation frameworks and extension enumeration.

An :class:`ArgumentationFramework` is a finite set of named arguments plus
a binary attack relation. Six acceptance semantics are supported:
conflict-free, admissible, complete, preferred, grounded and stable.
Enumeration walks the conflict-free subsets with bitmask pruning, which is
exact and fast enough for desk-scale frameworks; a hard argument-count cap
(default 25) guards against accidental exponential blow-ups.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import CapExceededError, UnknownArgumentError, ValidationError

SEMANTICS = ("conflict-free", "admissible", "complete", "preferred",
             "grounded", "stable")

DEFAULT_MAX_ARGS = 25

NAME_PATTERN = re.compile(r"[A-Za-z0-9_]+\Z")


def _check_name(name: str) -> str:
    if not isinstance(name, str) or not NAME_PATTERN.match(name):
        raise ValidationError(f"invalid argument name: {name!r}")
    return name


@dataclass(frozen=True, order=True)
class Extension:
    """A set of arguments accepted together under one semantics.

    ``members`` is kept as a sorted tuple so extensions order and compare
    deterministically. Conflict-freeness is enforced by the surfaces that
    build extensions (enumeration, the grounded fixpoint, and
    :meth:`ArgumentationFramework.extension`); build through those unless
    you already hold a checked set.
    """

    members: tuple[str, ...]
    semantics: str = "conflict-free"

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        if self.semantics not in SEMANTICS:
            raise ValidationError(f"unknown semantics: {self.semantics!r}")

    @property
    def member_set(self) -> frozenset[str]:
        return frozenset(self.members)

    def __str__(self) -> str:
        return "{%s}" % ",".join(self.members)


def _canonical_key(ext: Extension) -> tuple[int, tuple[str, ...]]:
    return (len(ext.members), ext.members)


@dataclass(frozen=True)
class ArgumentationFramework:
    """Arguments plus an attack relation, immutable after construction.

    Self-attacks and mutual attacks are allowed. All queries are pure and
    safe to run concurrently.
    """

    arguments: tuple[str, ...] = ()
    attacks: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        args = tuple(sorted({_check_name(a) for a in self.arguments}))
        object.__setattr__(self, "arguments", args)
        index = {name: i for i, name in enumerate(args)}
        attacks = frozenset((a, b) for a, b in self.attacks)
        for a, b in attacks:
            for end in (a, b):
                if end not in index:
                    raise UnknownArgumentError(
                        f"attack ({a},{b}) mentions unknown argument {end!r}")
        object.__setattr__(self, "attacks", attacks)
        object.__setattr__(self, "_index", index)
        # in/out attack bitmasks per argument index
        n = len(args)
        in_masks = [0] * n
        out_masks = [0] * n
        for a, b in attacks:
            out_masks[index[a]] |= 1 << index[b]
            in_masks[index[b]] |= 1 << index[a]
        object.__setattr__(self, "_in", in_masks)
        object.__setattr__(self, "_out", out_masks)

    # -- mask helpers -----------------------------------------------------

    def _mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            i = self._index.get(name)
            if i is None:
                raise UnknownArgumentError(f"unknown argument {name!r}")
            mask |= 1 << i
        return mask

    def _names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(a for i, a in enumerate(self.arguments) if mask >> i & 1)

    def _attacked_by_mask(self, mask: int) -> int:
        hit = 0
        for i, out in enumerate(self._out):
            if mask >> i & 1:
                hit |= out
        return hit

    # -- predicates -------------------------------------------------------

    def attackers_of(self, name: str) -> frozenset[str]:
        if name not in self._index:
            raise UnknownArgumentError(f"unknown argument {name!r}")
        return frozenset(self._names_of(self._in[self._index[name]]))

    def is_conflict_free(self, members: Iterable[str]) -> bool:
        """True iff no attack has both endpoints inside ``members``."""
        mask = self._mask_of(members)
        for i in range(len(self.arguments)):
            if mask >> i & 1 and self._out[i] & mask:
                return False
        return True

    def defends(self, members: Iterable[str], name: str) -> bool:
        """True iff every attacker of ``name`` is attacked from ``members``."""
        mask = self._mask_of(members)
        if name not in self._index:
            raise UnknownArgumentError(f"unknown argument {name!r}")
        attackers = self._in[self._index[name]]
        return attackers & ~self._attacked_by_mask(mask) == 0

    def defended_arguments(self, members: Iterable[str]) -> frozenset[str]:
        """All arguments defended by ``members`` (the defense operator)."""
        counter = self._attacked_by_mask(self._mask_of(members))
        out = 0
        for i in range(len(self.arguments)):
            if self._in[i] & ~counter == 0:
                out |= 1 << i
        return frozenset(self._names_of(out))

    def extension(self, members: Iterable[str],
                  semantics: str = "conflict-free") -> Extension:
        """Build a checked extension; rejects conflicting member sets."""
        names = self._names_of(self._mask_of(members))
        if not self.is_conflict_free(names):
            raise ValidationError(
                "set {%s} is not conflict-free" % ",".join(names))
        return Extension(names, semantics)

    # -- semantics --------------------------------------------------------

    def grounded_extension(self) -> Extension:
        """Least fixpoint of the defense operator, starting from the empty set.

        Unique and conflict-free; computed directly, so it stays cheap on
        frameworks far beyond the enumeration cap.
        """
        n = len(self.arguments)
        current = 0
        while True:
            counter = self._attacked_by_mask(current)
            nxt = 0
            for i in range(n):
                if self._in[i] & ~counter == 0:
                    nxt |= 1 << i
            if nxt == current:
                return Extension(self._names_of(current), "grounded")
            current = nxt

    def _conflict_free_masks(self) -> Iterator[int]:
        # Include/exclude DFS over the sorted arguments. conflict[i] holds
        # everything i attacks or is attacked by (including i itself for a
        # self-attack), so one AND rejects a branch and all its supersets.
        n = len(self.arguments)
        conflict = [self._in[i] | self._out[i] for i in range(n)]

        def rec(i: int, chosen: int) -> Iterator[int]:
            if i == n:
                yield chosen
                return
            yield from rec(i + 1, chosen)
            bit = 1 << i
            if conflict[i] & (chosen | bit) == 0:
                yield from rec(i + 1, chosen | bit)

        return rec(0, 0)

    def enumerate_extensions(self, semantics: str,
                             max_args: int = DEFAULT_MAX_ARGS) -> list[Extension]:
        """All extensions under ``semantics``, canonically ordered.

        Order is by cardinality, then by the lexicographic member list, and
        is stable across runs and platforms. ``grounded`` always yields a
        single extension and bypasses both the subset walk and the
        ``max_args`` cap; ``stable`` may yield none.
        """
        if semantics not in SEMANTICS:
            raise ValidationError(f"unknown semantics: {semantics!r}")
        if semantics == "grounded":
            return [self.grounded_extension()]
        if max_args < 1:
            raise ValidationError("max_args must be >= 1")
        n = len(self.arguments)
        if n > max_args:
            raise CapExceededError(
                f"framework has {n} arguments, enumeration capped at {max_args}")

        full = (1 << n) - 1
        found: list[int] = []
        for mask in self._conflict_free_masks():
            if semantics == "conflict-free":
                found.append(mask)
                continue
            counter = self._attacked_by_mask(mask)
            if semantics == "stable":
                if counter | mask == full:
                    found.append(mask)
                continue
            defended = 0
            for i in range(n):
                if self._in[i] & ~counter == 0:
                    defended |= 1 << i
            if semantics == "admissible":
                if mask & ~defended == 0:
                    found.append(mask)
            else:  # complete and preferred both start from completeness
                if mask == defended:
                    found.append(mask)
        if semantics == "preferred":
            found = [m for m in found
                     if not any(m != o and m & o == m for o in found)]
        exts = [Extension(self._names_of(m), semantics) for m in found]
        return sorted(exts, key=_canonical_key)


def is_conflict_free(members: Iterable[str], af: ArgumentationFramework) -> bool:
    return af.is_conflict_free(members)


def defends(members: Iterable[str], name: str,
            af: ArgumentationFramework) -> bool:
    return af.defends(members, name)


def grounded_extension(af: ArgumentationFramework) -> Extension:
    return af.grounded_extension()


def enumerate_extensions(af: ArgumentationFramework, semantics: str,
                         max_args: int = DEFAULT_MAX_ARGS) -> list[Extension]:
    return af.enumerate_extensions(semantics, max_args)
