"""Line-oriented text format for rewrite systems.

::

    # delta-q
    alphabet: A C B Omega alpha beta gamma
    B*A -> q^2*A*B + (q^3 - q^-1)*C + (-q^2 + 1)*gamma ; kind=first
    ...

Lines starting with ``#`` are comments; the first comment names the system.
Rule lines follow the ``rewrite_rule`` start symbol of the expression grammar
in :mod:`awdaha.parser`; ``; kind=...`` is optional and defaults to first.
"""

from __future__ import annotations

from .errors import AwdahaError, ExpressionSyntaxError, SpecFormatError
from .free_algebra import Alphabet
from .parser import parse_rule
from .rewriting import RewriteRule, RewriteSystem


def export_spec(system: RewriteSystem) -> str:
    """Render a rewrite system in the algebra-spec text format."""
    lines = [f"# {system.name}", "alphabet: " + " ".join(system.alphabet.names)]
    for rule in system.rules:
        lhs = system.alphabet.display(rule.lhs)
        lines.append(f"{lhs} -> {rule.rhs} ; kind={rule.kind}")
    return "\n".join(lines) + "\n"


def load_spec(text: str, name: str | None = None) -> RewriteSystem:
    """Read a rewrite system from the algebra-spec text format.

    Args:
        text: File contents
        name: System name; defaults to the first comment line

    Returns:
        The rewrite system

    Raises:
        SpecFormatError: On a malformed line, a missing header or a bad rule
    """
    alphabet: Alphabet | None = None
    rules: list[RewriteRule] = []
    title: str | None = None
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if title is None:
                title = stripped.lstrip("#").strip() or None
            continue
        if alphabet is None:
            key, sep, value = stripped.partition(":")
            if not sep or key.strip() != "alphabet":
                raise SpecFormatError(number, line, "expected 'alphabet:' header")
            names = value.split()
            if not names:
                raise SpecFormatError(number, line, "empty alphabet")
            try:
                alphabet = Alphabet.from_names(names)
            except ValueError as exc:
                raise SpecFormatError(number, line, str(exc)) from None
            continue
        rules.append(_parse_rule(number, line, alphabet))
    if alphabet is None:
        raise SpecFormatError(0, "", "missing 'alphabet:' header")
    try:
        return RewriteSystem(alphabet, rules, name or title or "custom")
    except ValueError as exc:
        raise SpecFormatError(0, "", str(exc)) from None


def _parse_rule(number: int, line: str, alphabet: Alphabet) -> RewriteRule:
    try:
        lhs, rhs, kind = parse_rule(line, alphabet)
        return RewriteRule(lhs, rhs, kind)
    except ExpressionSyntaxError as exc:
        raise SpecFormatError(number, line, exc.reason) from None
    except (AwdahaError, ValueError) as exc:
        raise SpecFormatError(number, line, str(exc)) from None
