"""Reduction to normal form, overlap ambiguities and confluence checks.

A ``RewriteSystem`` holds length-two reduction rules over an alphabet. Words
are normalized by appending letters one at a time to an irreducible prefix:
only the last letter of the prefix and the new letter can form a forbidden
factor, so every reduction rewrites the leftmost forbidden factor. Normal
forms of ``prefix + letter`` are kept in a bounded least-recently-used cache
on the system.
"""

from __future__ import annotations

import logging
from collections import OrderedDict
from collections.abc import Callable, Generator, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Any

from .errors import NonTermination
from .free_algebra import Alphabet, NCPoly, Word, word_order_key
from .scalars import ONE, QScalar

logger = logging.getLogger(__name__)

DEFAULT_FUEL = 1_000_000
CACHE_LIMIT = 4096
RULE_KINDS = ("first", "second", "third")

_Frame = Generator[tuple[Word, int], Any, dict[Word, QScalar]]


@dataclass(frozen=True)
class RewriteRule:
    """A reduction rule ``lhs -> rhs`` with a forbidden word of length two.

    Attributes:
        lhs: The forbidden word
        rhs: Its replacement, over the same alphabet
        kind: "first", "second" or "third"
    """

    lhs: Word
    rhs: NCPoly
    kind: str = "first"

    def __post_init__(self) -> None:
        if len(self.lhs) != 2:
            raise ValueError(
                f"Rule left-hand sides must have length 2, got {len(self.lhs)}"
            )
        if self.kind not in RULE_KINDS:
            raise ValueError(f"Unknown rule kind '{self.kind}'")

    def describe(self) -> str:
        return f"{self.rhs.alphabet.display(self.lhs)} -> {self.rhs}"


@dataclass(frozen=True)
class AmbiguityResolution:
    """Both reductions of one overlap ambiguity."""

    word: Word
    left: NCPoly
    right: NCPoly

    @property
    def resolved(self) -> bool:
        return self.left == self.right

    @property
    def residual(self) -> NCPoly:
        return self.left - self.right

    def to_json(self) -> dict[str, Any]:
        return {
            "word": self.left.alphabet.display(self.word),
            "resolved": self.resolved,
            "resolution": str(self.left),
            "residual": None if self.resolved else str(self.residual),
        }


@dataclass
class ConfluenceReport:
    """Resolutions of every overlap ambiguity of a system."""

    entries: list[AmbiguityResolution] = field(default_factory=list)

    @property
    def resolved(self) -> bool:
        return all(entry.resolved for entry in self.entries)

    @property
    def unresolved(self) -> list[AmbiguityResolution]:
        return [entry for entry in self.entries if not entry.resolved]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[AmbiguityResolution]:
        return iter(self.entries)


class _Reduction:
    """Fuel, cycle and frame bookkeeping for one normalize call.

    Each pending ``prefix + letter`` reduction is a generator frame on an
    explicit stack. A frame yields the sub-reductions it needs and receives
    their normal forms, so the depth of the Python stack stays constant
    however long the word is.
    """

    def __init__(self, system: RewriteSystem, fuel: int) -> None:
        self.system = system
        self.fuel = fuel
        self.spent = 0
        self.active: set[tuple[Word, int]] = set()

    def append(self, prefix: Word, letter: int) -> Mapping[Word, QScalar]:
        """Normal form of ``prefix + letter`` for an irreducible ``prefix``."""
        value = self._known(prefix, letter)
        if value is not None:
            return value
        frames = [self._open((prefix, letter))]
        received: Mapping[Word, QScalar] | None = None
        while frames:
            key, steps = frames[-1]
            try:
                request = steps.send(received)
            except StopIteration as stop:
                frames.pop()
                self.active.discard(key)
                received = stop.value
                self.system._remember(key, stop.value)
                continue
            received = self._known(*request)
            if received is None:
                frames.append(self._open(request))
        assert received is not None
        return received

    def extend(
        self, current: Mapping[Word, QScalar], word: Word
    ) -> dict[Word, QScalar]:
        """Append ``word`` letter by letter to a combination of normal words."""
        state = dict(current)
        for letter in word:
            following: dict[Word, QScalar] = {}
            for prefix, coeff in state.items():
                _accumulate(following, self.append(prefix, letter), coeff)
            state = following
        return state

    def _known(self, prefix: Word, letter: int) -> Mapping[Word, QScalar] | None:
        if not prefix or (prefix[-1], letter) not in self.system._rules:
            return {prefix + (letter,): ONE}
        return self.system._recall((prefix, letter))

    def _open(self, key: tuple[Word, int]) -> tuple[tuple[Word, int], _Frame]:
        if key in self.active:
            raise NonTermination(self.fuel, self.spent, self._display(key), cycle=True)
        self.spent += 1
        if self.spent > self.fuel:
            raise NonTermination(self.fuel, self.spent - 1, self._display(key))
        self.active.add(key)
        return key, self._rewrite(key)

    def _rewrite(self, key: tuple[Word, int]) -> _Frame:
        prefix, letter = key
        rule = self.system._rules[(prefix[-1], letter)]
        base = prefix[:-1]
        result: dict[Word, QScalar] = {}
        for word, coeff in rule.rhs.items():
            state: dict[Word, QScalar] = {base: ONE}
            for next_letter in word:
                following: dict[Word, QScalar] = {}
                for head, weight in state.items():
                    reduced = yield head, next_letter
                    _accumulate(following, reduced, weight)
                state = following
            _accumulate(result, state, coeff)
        return result

    def _display(self, key: tuple[Word, int]) -> str:
        prefix, letter = key
        return self.system.alphabet.display(prefix + (letter,))


def _accumulate(
    target: dict[Word, QScalar], source: Mapping[Word, QScalar], scale: QScalar
) -> None:
    for word, coeff in source.items():
        value = target.get(word)
        value = coeff * scale if value is None else value + coeff * scale
        if value:
            target[word] = value
        else:
            target.pop(word, None)


class RewriteSystem:
    """An ordered set of length-two reduction rules over one alphabet.

    Args:
        alphabet: The alphabet, in basis order
        rules: Rules with pairwise distinct left-hand sides
        name: Label used in logs and reports
        cache_limit: Most ``prefix + letter`` normal forms kept between calls;
            0 disables the cache

    Raises:
        ValueError: If two rules share a left-hand side

    Examples:
        >>> ab = Alphabet.from_names("AB")
        >>> a, b = (NCPoly.letter(ab, n) for n in "AB")
        >>> system = RewriteSystem(ab, [RewriteRule((1, 0), a * b)])
        >>> str(system.normalize(b * b * a))
        'A*B*B'
    """

    def __init__(
        self,
        alphabet: Alphabet,
        rules: Iterable[RewriteRule],
        name: str = "custom",
        cache_limit: int = CACHE_LIMIT,
    ) -> None:
        if cache_limit < 0:
            raise ValueError("cache_limit must be non-negative")
        self.alphabet = alphabet
        self.name = name
        self.cache_limit = cache_limit
        self._rules: dict[Word, RewriteRule] = {}
        for rule in rules:
            if rule.lhs in self._rules:
                raise ValueError(
                    f"Duplicate rule for {alphabet.display(rule.lhs)} in {name}"
                )
            if rule.rhs.alphabet != alphabet:
                rhs = rule.rhs.with_alphabet(alphabet)
                rule = RewriteRule(rule.lhs, rhs, rule.kind)
            self._rules[rule.lhs] = rule
        self._cache: OrderedDict[tuple[Word, int], Mapping[Word, QScalar]] = (
            OrderedDict()
        )

    @property
    def rules(self) -> tuple[RewriteRule, ...]:
        return tuple(self._rules.values())

    def rule(self, lhs: Word) -> RewriteRule | None:
        return self._rules.get(tuple(lhs))

    def __len__(self) -> int:
        return len(self._rules)

    def __repr__(self) -> str:
        return f"RewriteSystem(name={self.name!r}, rules={len(self._rules)})"

    def is_irreducible(self, word: Word) -> bool:
        """True iff no adjacent pair of letters is a rule left-hand side."""
        return all(
            (word[i], word[i + 1]) not in self._rules for i in range(len(word) - 1)
        )

    def normalize(self, p: NCPoly, fuel: int = DEFAULT_FUEL) -> NCPoly:
        """Reduce ``p`` to its normal form.

        Args:
            p: Element over this system's alphabet
            fuel: Maximum number of uncached rule applications

        Returns:
            The linear combination of irreducible words equal to ``p``

        Raises:
            NonTermination: If fuel runs out or a rewrite cycle is found
        """
        p = p.with_alphabet(self.alphabet) if p.alphabet != self.alphabet else p
        reduction = _Reduction(self, fuel)
        result: dict[Word, QScalar] = {}
        for word, coeff in p.sorted_items():
            split = self._irreducible_prefix(word)
            _accumulate(
                result, reduction.extend({word[:split]: ONE}, word[split:]), coeff
            )
        if reduction.spent:
            logger.debug(
                "%s: %d rule applications, cache size %d",
                self.name,
                reduction.spent,
                len(self._cache),
            )
        return NCPoly._from_clean(self.alphabet, result)

    def multiply(self, p: NCPoly, r: NCPoly, fuel: int = DEFAULT_FUEL) -> NCPoly:
        """Normal form of the product ``p * r``."""
        return self.normalize(p.multiply(r), fuel)

    def _irreducible_prefix(self, word: Word) -> int:
        for i in range(len(word) - 1):
            if (word[i], word[i + 1]) in self._rules:
                return i + 1
        return len(word)

    def overlaps(self) -> list[Word]:
        """Words ``abc`` such that ``ab`` and ``bc`` are both rule left-hand sides."""
        by_first: dict[int, list[int]] = {}
        for a, b in self._rules:
            by_first.setdefault(a, []).append(b)
        words = [
            (a, b, c) for a, b in self._rules for c in by_first.get(b, [])
        ]
        return sorted(words, key=word_order_key)

    def resolve(self, word: Word, fuel: int = DEFAULT_FUEL) -> AmbiguityResolution:
        """Reduce an overlap both ways and normalize both results.

        Raises:
            ValueError: If ``word`` is not an overlap of this system
            NonTermination: As in ``normalize``
        """
        a, b, c = word
        left_rule = self._rules.get((a, b))
        right_rule = self._rules.get((b, c))
        if left_rule is None or right_rule is None:
            raise ValueError(
                f"{self.alphabet.display(tuple(word))} is not an overlap ambiguity"
            )
        first = NCPoly.monomial(self.alphabet, (a,))
        last = NCPoly.monomial(self.alphabet, (c,))
        left = self.normalize(left_rule.rhs.multiply(last), fuel)
        right = self.normalize(first.multiply(right_rule.rhs), fuel)
        return AmbiguityResolution(tuple(word), left, right)

    def check_confluence(self, fuel: int = DEFAULT_FUEL) -> ConfluenceReport:
        """Resolve every overlap ambiguity."""
        report = ConfluenceReport([self.resolve(w, fuel) for w in self.overlaps()])
        logger.info(
            "%s: %d overlaps, %d unresolved",
            self.name,
            len(report),
            len(report.unresolved),
        )
        return report

    def irreducible_words(self, length: int) -> list[Word]:
        """All irreducible words of exactly ``length`` letters, in graded order."""
        if length < 0:
            raise ValueError("length must be non-negative")
        words: list[Word] = [()]
        letters = range(len(self.alphabet))
        for _ in range(length):
            words = [
                w + (g,)
                for w in words
                for g in letters
                if not w or (w[-1], g) not in self._rules
            ]
        return sorted(words)

    def map_rules(
        self, transform: Callable[[NCPoly], NCPoly], name: str | None = None
    ) -> RewriteSystem:
        """A system with every rule right-hand side passed through ``transform``."""
        return RewriteSystem(
            self.alphabet,
            [RewriteRule(r.lhs, transform(r.rhs), r.kind) for r in self.rules],
            name or self.name,
            self.cache_limit,
        )

    @property
    def cached_reductions(self) -> int:
        return len(self._cache)

    def clear_cache(self) -> None:
        self._cache.clear()

    def _recall(self, key: tuple[Word, int]) -> Mapping[Word, QScalar] | None:
        found = self._cache.get(key)
        if found is not None:
            self._cache.move_to_end(key)
        return found

    def _remember(
        self, key: tuple[Word, int], value: Mapping[Word, QScalar]
    ) -> None:
        if not self.cache_limit:
            return
        self._cache[key] = value
        self._cache.move_to_end(key)
        while len(self._cache) > self.cache_limit:
            self._cache.popitem(last=False)
