"""Scalar arithmetic: exact rationals, polynomial quotient rings, binary64.

Every geometric routine in this package is generic over its scalars.  The
exact backend uses ``fractions.Fraction`` and multivariate polynomials with
canonical normal forms; the approximate backend uses plain floats together
with a tolerance-based zero test.

A :class:`PolyRing` orders monomials graded-lexicographically (earlier
variables are more significant).  A quotient ring carries rewrite rules
``leading monomial -> replacement`` derived from its relations; elements are
kept in normal form at all times, so two elements are equal exactly when
their term dictionaries coincide.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Union

from .errors import DivisionByNonInvertedSymbol, NonTerminatingReduction

Rational = Fraction

Scalar = Union[int, Fraction, float, "Poly"]

DEFAULT_TOLERANCE = 1e-9

_STEP_LIMIT = 500_000


def is_zero(x: Scalar, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Zero test: exact for rationals and ring elements, |x| <= tol for floats."""
    if isinstance(x, float):
        return abs(x) <= tol
    if isinstance(x, (int, Fraction)):
        return x == 0
    if isinstance(x, Poly):
        return not x.terms
    raise TypeError(f"not a scalar: {type(x).__name__}")


def scalars_equal(a: Scalar, b: Scalar, tol: float = DEFAULT_TOLERANCE) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return abs(a - b) <= tol * max(1.0, abs(a), abs(b))
    return is_zero(a - b)


class PolyRing:
    """Multivariate polynomials over Q, optionally modulo rewrite rules.

    ``variables`` fixes the monomial order; names in ``inverted`` may carry
    negative exponents (localization).  Rule sets are validated for
    termination and confluence (pairwise overlap test) on construction.
    """

    def __init__(self, variables, inverted=(), _rules=None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.inverted = frozenset(inverted)
        unknown = self.inverted - set(self.variables)
        if unknown:
            raise ValueError(f"inverted symbols not in ring: {sorted(unknown)}")
        self._n = len(self.variables)
        self._index = {name: i for i, name in enumerate(self.variables)}
        self._noninverted_idx = tuple(
            i for i, name in enumerate(self.variables) if name not in self.inverted
        )
        self.rules = tuple(_rules or ())
        # per rule: the exponent constraints a monomial must meet to be reducible
        self._rule_support = tuple(
            tuple((i, e) for i, e in enumerate(lhs) if e) for lhs, _ in self.rules
        )

    # -- construction -------------------------------------------------------

    def var(self, name: str) -> "Poly":
        i = self._index[name]
        mono = tuple(1 if j == i else 0 for j in range(self._n))
        return self.poly({mono: Fraction(1)})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.var(name) for name in self.variables)

    def const(self, value) -> "Poly":
        value = Fraction(value)
        if value == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self._n: value})

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.const(1)

    def poly(self, terms: dict) -> "Poly":
        """Build an element from raw ``{exponent tuple: coefficient}`` terms."""
        clean = {}
        for mono, coeff in terms.items():
            mono = tuple(mono)
            if len(mono) != self._n:
                raise ValueError("exponent tuple has wrong length")
            for i in self._noninverted_idx:
                if mono[i] < 0:
                    raise DivisionByNonInvertedSymbol(
                        f"negative power of {self.variables[i]!r}"
                    )
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = clean.get(mono, Fraction(0)) + coeff
        return Poly(self, self.reduce(clean))

    # -- monomial order ------------------------------------------------------

    @staticmethod
    def order_key(mono):
        """Graded lex key: total degree first, then the exponent vector."""
        return (sum(mono), mono)

    # -- reduction -----------------------------------------------------------

    def _find_rule(self, mono):
        for k, support in enumerate(self._rule_support):
            if all(mono[i] >= e for i, e in support):
                return k
        return None

    def reduce(self, terms: dict) -> dict:
        """Rewrite to the unique normal form (no-op in a free ring)."""
        work = {m: c for m, c in terms.items() if c}
        if not self.rules:
            return work
        steps = 0
        while True:
            batch = [(m, k) for m in work if (k := self._find_rule(m)) is not None]
            if not batch:
                return work
            steps += len(batch)
            if steps > _STEP_LIMIT:
                raise NonTerminatingReduction(
                    f"exceeded {_STEP_LIMIT} rewrite steps in ring {self!r}"
                )
            for mono, k in batch:
                coeff = work.pop(mono, None)
                if not coeff:
                    continue
                lhs, rhs = self.rules[k]
                shift = tuple(map(operator.sub, mono, lhs))
                for rm, rc in rhs.items():
                    nm = tuple(map(operator.add, shift, rm))
                    nc = work.get(nm, Fraction(0)) + coeff * rc
                    if nc:
                        work[nm] = nc
                    else:
                        work.pop(nm, None)

    def reduce_stepwise(self, terms: dict, rng) -> dict:
        """Normal form via randomly ordered single steps (confluence testing)."""
        work = {m: c for m, c in terms.items() if c}
        if not self.rules:
            return work
        steps = 0
        while True:
            candidates = []
            for m in work:
                for k in range(len(self.rules)):
                    if all(m[i] >= e for i, e in self._rule_support[k]):
                        candidates.append((m, k))
            if not candidates:
                return work
            steps += 1
            if steps > _STEP_LIMIT:
                raise NonTerminatingReduction("stepwise reduction did not terminate")
            mono, k = candidates[rng.randrange(len(candidates))]
            coeff = work.pop(mono)
            lhs, rhs = self.rules[k]
            shift = tuple(map(operator.sub, mono, lhs))
            for rm, rc in rhs.items():
                nm = tuple(map(operator.add, shift, rm))
                nc = work.get(nm, Fraction(0)) + coeff * rc
                if nc:
                    work[nm] = nc
                else:
                    work.pop(nm, None)

    # -- quotient construction ------------------------------------------------

    def quotient(self, relations) -> "PolyRing":
        """Ring modulo the given relation polynomials.

        Each relation is turned into the rule ``leading monomial -> rest``;
        the leading monomial must avoid inverted symbols (scale the relation
        by an inverted monomial first if necessary).  Rule right-hand sides
        are inter-reduced, and the finished system is checked for termination
        and pairwise-overlap confluence.
        """
        if self.rules:
            raise ValueError("quotient of a quotient is not supported; start from the free ring")
        rules = []
        for rel in relations:
            if not isinstance(rel, Poly) or rel.ring.variables != self.variables:
                raise ValueError("relation must be a polynomial over this ring")
            if not rel.terms:
                raise ValueError("zero relation")
            lead = max(rel.terms, key=self.order_key)
            if any(lead[i] for i in range(self._n) if self.variables[i] in self.inverted):
                raise ValueError("leading monomial may not involve inverted symbols")
            lc = rel.terms[lead]
            rhs = {m: -c / lc for m, c in rel.terms.items() if m != lead}
            for m in rhs:
                if self.order_key(m) >= self.order_key(lead):
                    raise ValueError("relation does not orient: rule would not decrease")
            rules.append((lead, rhs))

        ring = PolyRing(self.variables, self.inverted, _rules=tuple(rules))
        # inter-reduce right-hand sides until stable
        for _ in range(len(rules) + 2):
            new_rules = tuple((lhs, ring.reduce(dict(rhs))) for lhs, rhs in ring.rules)
            if new_rules == ring.rules:
                break
            ring = PolyRing(self.variables, self.inverted, _rules=new_rules)
        ring._check_confluence()
        return ring

    def _check_confluence(self):
        """Pairwise overlap test: both rule applications join on the lcm."""
        for a in range(len(self.rules)):
            for b in range(a + 1, len(self.rules)):
                la, _ = self.rules[a]
                lb, _ = self.rules[b]
                if not any(la[i] and lb[i] for i in range(self._n)):
                    continue  # coprime leading monomials cannot clash
                lcm = tuple(map(max, la, lb))
                nf_a = self.reduce(self._apply_rule_once(lcm, a))
                nf_b = self.reduce(self._apply_rule_once(lcm, b))
                if nf_a != nf_b:
                    raise ValueError(
                        f"rule set is not confluent: overlap of rules {a} and {b}"
                    )

    def _apply_rule_once(self, mono, k):
        lhs, rhs = self.rules[k]
        shift = tuple(map(operator.sub, mono, lhs))
        return {tuple(map(operator.add, shift, rm)): rc for rm, rc in rhs.items()}

    # -- misc -----------------------------------------------------------------

    def coerce(self, x) -> "Poly":
        if isinstance(x, Poly):
            if x.ring is not self:
                raise ValueError("cannot mix elements of different rings")
            return x
        if isinstance(x, (int, Fraction)):
            return self.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def __repr__(self):
        tag = "quotient " if self.rules else ""
        return f"<{tag}ring Q[{', '.join(self.variables)}]>"


def normalize(p: "Poly", ring: PolyRing) -> "Poly":
    """Normal form of ``p`` in ``ring`` (idempotent on its own elements)."""
    if p.ring is ring:
        return Poly(ring, ring.reduce(p.terms))
    if p.ring.variables != ring.variables or p.ring.rules:
        raise ValueError("polynomial does not belong to a parent of this ring")
    return Poly(ring, ring.reduce(p.terms))


class Poly:
    """Element of a :class:`PolyRing`, stored in normal form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (int, Fraction, Poly)):
            return NotImplemented
        other = self.ring.coerce(other)
        result = dict(self.terms)
        for m, c in other.terms.items():
            nc = result.get(m, Fraction(0)) + c
            if nc:
                result[m] = nc
            else:
                result.pop(m, None)
        # a sum of normal forms is already normal: no new monomials appear
        return Poly(self.ring, result)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (int, Fraction, Poly)):
            return NotImplemented
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, Poly)):
            return NotImplemented
        other = self.ring.coerce(other)
        raw: dict = {}
        add = operator.add
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(map(add, m1, m2))
                nc = raw.get(key, Fraction(0)) + c1 * c2
                if nc:
                    raw[key] = nc
                else:
                    raw.pop(key, None)
        return Poly(self.ring, self.ring.reduce(raw))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = self.ring.one
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            inv = Fraction(1, 1) / Fraction(other)
            return Poly(self.ring, {m: c * inv for m, c in self.terms.items()})
        other = self.ring.coerce(other)
        return self * other._inverse()

    def _inverse(self) -> "Poly":
        """Inverse of a monomial supported on inverted symbols only."""
        if len(self.terms) != 1:
            raise DivisionByNonInvertedSymbol("divisor is not a monomial")
        (mono, coeff), = self.terms.items()
        for i, e in enumerate(mono):
            if e and self.ring.variables[i] not in self.ring.inverted:
                raise DivisionByNonInvertedSymbol(
                    f"{self.ring.variables[i]!r} is not an inverted symbol"
                )
        inv_mono = tuple(-e for e in mono)
        return Poly(self.ring, {inv_mono: Fraction(1) / coeff})

    def __rtruediv__(self, other):
        return self.ring.coerce(other) * self._inverse()

    # -- comparisons and conversions ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.coerce(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    __hash__ = None

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def evaluate(self, assignment: dict):
        """Evaluate at ``{variable name: value}`` (floats or Fractions)."""
        values = [assignment[name] for name in self.ring.variables]
        total = None
        for mono, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, mono):
                if e:
                    term = term * v ** e
            total = term if total is None else total + term
        return 0 if total is None else total

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        chunks = []
        for mono in sorted(self.terms, key=self.ring.order_key, reverse=True):
            coeff = self.terms[mono]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, mono)
                if e
            ]
            if not factors:
                chunks.append(str(coeff))
            elif coeff == 1:
                chunks.append("*".join(factors))
            elif coeff == -1:
                chunks.append("-" + "*".join(factors))
            else:
                chunks.append(f"{coeff}*" + "*".join(factors))
        out = chunks[0]
        for chunk in chunks[1:]:
            out += (" - " + chunk[1:]) if chunk.startswith("-") else (" + " + chunk)
        return out

    def __repr__(self):
        return f"Poly({self})"
