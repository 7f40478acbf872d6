"""Reading and writing monomial ideals as text.

Two syntaxes are accepted:

* shorthand, e.g. ``ab2,bc3,cd4,da5``: single-character variables, each
  optionally followed by a decimal exponent, juxtaposed to multiply;
* explicit, e.g. ``x1^2*x2, x3``: any variable names, ``*`` between factors
  and ``^`` for exponents.

Either may be wrapped as ``ideal"..."`` and may carry a ``(...)^k`` suffix.
Whitespace is ignored.  The term ``1`` stands for the unit monomial and the
whole expression ``0`` for the zero ideal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .errors import ParseError
from .monomial import MonomialIdeal, RingSpec, minimalize, power

_WRAPPED = re.compile(r'^ideal\s*(?:"(.*)"|\((.*)\))$', re.S)
_POWER_SUFFIX = re.compile(r"^\((.*)\)\^([0-9]+)$", re.S)
_NON_MONOMIAL = set("+-/=")
_DIGITS = frozenset("0123456789")


@dataclass(frozen=True)
class IdealExpression:
    raw: str
    ring: RingSpec
    parsed: MonomialIdeal
    power: Optional[int] = None

    @property
    def ideal(self) -> MonomialIdeal:
        """The parsed ideal with the ``^k`` suffix applied."""
        return power(self.parsed, self.power) if self.power else self.parsed


def _exponent(digits: str) -> int:
    if len(digits) > 18:
        raise ParseError(f"exponent {digits[:20]}... is too large")
    return int(digits)


def _shorthand_term(term: str, index: dict, d: int):
    v = [0] * d
    pos = 0
    while pos < len(term):
        ch = term[pos]
        if ch not in index:
            if ch in _DIGITS:
                raise ParseError(f"exponent without a variable in term {term!r}")
            raise ParseError(f"unknown variable {ch!r} in term {term!r}")
        pos += 1
        start = pos
        while pos < len(term) and term[pos] in _DIGITS:
            pos += 1
        digits = term[start:pos]
        e = _exponent(digits) if digits else 1
        if e == 0:
            raise ParseError(f"zero exponent in term {term!r}: use explicit mode for trivial factors")
        v[index[ch]] += e
    return v


def _explicit_term(term: str, index: dict, d: int):
    v = [0] * d
    for factor in term.split("*"):
        if not factor:
            raise ParseError(f"empty factor in term {term!r}")
        name, caret, digits = factor.partition("^")
        if caret:
            if not digits or any(ch not in _DIGITS for ch in digits):
                raise ParseError(f"malformed exponent {digits!r} in factor {factor!r}")
            e = _exponent(digits)
        else:
            e = 1
        if name == "1":
            continue
        if name not in index:
            if name and all(ch in index or ch in _DIGITS for ch in name):
                raise ParseError(f"factor {factor!r} mixes shorthand and explicit syntax")
            raise ParseError(f"unknown variable {name!r} in term {term!r}")
        v[index[name]] += e
    return v


def parse_expression(src: Union[str, bytes], ring: RingSpec) -> IdealExpression:
    if isinstance(src, bytes):
        try:
            src = src.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    raw = src
    body = "".join(src.split())
    m = _WRAPPED.match(body)
    if m:
        body = m.group(1) if m.group(1) is not None else m.group(2)
    k = None
    m = _POWER_SUFFIX.match(body)
    if m:
        body, k = m.group(1), _exponent(m.group(2))
        if k < 1:
            raise ParseError("the ^k suffix needs a positive integer")
    elif body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    bad = _NON_MONOMIAL.intersection(body)
    if bad:
        raise ParseError(
            f"non-monomial input ({''.join(sorted(bad))!r} found): only monomial ideals in a "
            "polynomial ring are supported"
        )
    if not body:
        raise ParseError("empty ideal expression")
    if body == "0":
        return IdealExpression(raw, ring, MonomialIdeal.zero(ring), k)

    index = {name: i for i, name in enumerate(ring.var_names)}
    explicit = "*" in body or "^" in body
    if not explicit and any(len(name) != 1 for name in ring.var_names):
        explicit = True
    points = []
    for term in body.split(","):
        if not term:
            raise ParseError(f"empty term in {raw!r}")
        if term == "1":
            points.append([0] * ring.d)
        elif explicit:
            points.append(_explicit_term(term, index, ring.d))
        else:
            points.append(_shorthand_term(term, index, ring.d))
    return IdealExpression(raw, ring, minimalize(points, ring), k)


def parse_ideal(src: Union[str, bytes], ring: RingSpec) -> MonomialIdeal:
    """Parse ``src`` into a minimally generated monomial ideal (``^k`` applied)."""
    return parse_expression(src, ring).ideal


def render_monomial(v, ring: RingSpec) -> str:
    short = all(len(n) == 1 for n in ring.var_names)
    parts = []
    for name, e in zip(ring.var_names, v):
        if e == 0:
            continue
        if short:
            parts.append(name if e == 1 else f"{name}{e}")
        else:
            parts.append(name if e == 1 else f"{name}^{e}")
    if not parts:
        return "1"
    return "".join(parts) if short else "*".join(parts)


def render_ideal(A: MonomialIdeal) -> str:
    if A.is_zero:
        return "0"
    return ",".join(render_monomial(g, A.ring) for g in A.gens)
