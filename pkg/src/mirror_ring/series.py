"""Sparse truncated power series over Z in n cyclically indexed variables.

A TruncSeries holds finitely many monomials c * t_0^e0 ... t_{n-1}^e(n-1)
with integer coefficients, truncated at a fixed total degree D: every
operation silently discards monomials of total degree > D.  Coefficients
are exact big integers; there is no floating point anywhere in this
module.  All operations return new objects; instances are never mutated
after construction.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator


class SeriesError(ValueError):
    """Structural misuse of a series: bad exponents, mixed (n, D), non-unit."""


def _check_expvec(e, n):
    if len(e) != n:
        raise SeriesError(f"exponent vector {e!r} has length {len(e)}, expected {n}")
    for x in e:
        if not isinstance(x, int) or x < 0:
            raise SeriesError(f"exponent vector {e!r} must hold nonnegative ints")


class TruncSeries:
    __slots__ = ("n", "D", "terms")

    def __init__(self, n: int, D: int, terms: dict | None = None):
        if n < 1:
            raise SeriesError(f"need at least one variable, got n={n}")
        if D < 0:
            raise SeriesError(f"truncation order must be >= 0, got D={D}")
        self.n = n
        self.D = D
        clean: dict[tuple, int] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                _check_expvec(e, n)
                if not isinstance(c, int):
                    raise SeriesError(f"coefficient {c!r} is not an int")
                if c != 0 and sum(e) <= D:
                    clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c != 0}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, n: int, D: int) -> "TruncSeries":
        return cls(n, D)

    @classmethod
    def one(cls, n: int, D: int) -> "TruncSeries":
        return cls(n, D, {(0,) * n: 1})

    @classmethod
    def _raw(cls, n: int, D: int, terms: dict) -> "TruncSeries":
        # internal fast path: terms already normalized
        obj = object.__new__(cls)
        obj.n = n
        obj.D = D
        obj.terms = terms
        return obj

    # -- predicates and accessors ---------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.n, 0)

    def coefficient(self, e) -> int:
        return self.terms.get(tuple(e), 0)

    def support(self) -> list[tuple]:
        return sorted(self.terms)

    def iter_terms(self) -> Iterator[tuple[tuple, int]]:
        for e in sorted(self.terms):
            yield e, self.terms[e]

    def _compat(self, other: "TruncSeries"):
        if not isinstance(other, TruncSeries):
            raise SeriesError(f"expected TruncSeries, got {type(other).__name__}")
        if self.n != other.n or self.D != other.D:
            raise SeriesError(
                f"mixed series: (n={self.n}, D={self.D}) vs (n={other.n}, D={other.D})"
            )

    # -- ring operations -------------------------------------------------

    def add(self, other: "TruncSeries") -> "TruncSeries":
        self._compat(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e, 0) + c
            if acc:
                out[e] = acc
            else:
                out.pop(e, None)
        return TruncSeries._raw(self.n, self.D, out)

    def neg(self) -> "TruncSeries":
        return TruncSeries._raw(self.n, self.D, {e: -c for e, c in self.terms.items()})

    def sub(self, other: "TruncSeries") -> "TruncSeries":
        return self.add(other.neg())

    def scale(self, c: int) -> "TruncSeries":
        if not isinstance(c, int):
            raise SeriesError(f"scalar must be int, got {c!r}")
        if c == 0:
            return TruncSeries.zero(self.n, self.D)
        return TruncSeries._raw(self.n, self.D, {e: c * v for e, v in self.terms.items()})

    def mul(self, other: "TruncSeries") -> "TruncSeries":
        self._compat(other)
        if not self.terms or not other.terms:
            return TruncSeries.zero(self.n, self.D)
        D = self.D
        out: dict[tuple, int] = {}
        # iterate the smaller operand outside for fewer tuple adds
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for ea, ca in a.items():
            da = sum(ea)
            for eb, cb in b.items():
                if da + sum(eb) > D:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                acc = out.get(e, 0) + ca * cb
                if acc:
                    out[e] = acc
                else:
                    del out[e]
        return TruncSeries._raw(self.n, self.D, out)

    def pow(self, k: int) -> "TruncSeries":
        if k < 0:
            return self.invert_unit().pow(-k)
        out = TruncSeries.one(self.n, self.D)
        base = self
        while k:
            if k & 1:
                out = out.mul(base)
            k >>= 1
            if k:
                base = base.mul(base)
        return out

    def invert_unit(self) -> "TruncSeries":
        """Multiplicative inverse; requires constant term +1 or -1."""
        c0 = self.constant_term()
        if c0 not in (1, -1):
            raise SeriesError(f"series with constant term {c0} is not invertible over Z")
        # a = c0*(1 + r)  =>  a^-1 = c0 * sum_k (-r)^k, r has no constant term
        r = self.scale(c0).sub(TruncSeries.one(self.n, self.D))
        acc = TruncSeries.one(self.n, self.D)
        p = TruncSeries.one(self.n, self.D)
        for _ in range(self.D):
            p = p.mul(r).neg()
            if p.is_zero():
                break
            acc = acc.add(p)
        return acc.scale(c0)

    def rotate(self, shift: int) -> "TruncSeries":
        """Cyclic substitution of variables: new exponent of t_j is the old
        exponent of t_{(j+shift) mod n}."""
        s = shift % self.n
        if s == 0:
            return self
        n = self.n
        out = {
            tuple(e[(j + s) % n] for j in range(n)): c for e, c in self.terms.items()
        }
        return TruncSeries._raw(n, self.D, out)

    def truncate(self, D: int) -> "TruncSeries":
        """Re-truncate to a lower (or equal) total degree."""
        if D > self.D:
            raise SeriesError(f"cannot extend truncation {self.D} to {D}")
        return TruncSeries(self.n, D, {e: c for e, c in self.terms.items() if sum(e) <= D})

    # -- operator sugar ---------------------------------------------------

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = neg

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.n == other.n
            and self.D == other.D
            and self.terms == other.terms
        )

    __hash__ = None  # mutable-dict payload; structural equality only

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.iter_terms():
            factors = []
            if abs(c) != 1 or not any(e):
                factors.append(str(abs(c)))
            for j, k in enumerate(e):
                if k == 1:
                    factors.append(f"t{j}")
                elif k > 1:
                    factors.append(f"t{j}^{k}")
            mono = "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + mono)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"TruncSeries(n={self.n}, D={self.D}, {self})"

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "D": self.D,
            "terms": [
                {"e": list(e), "c": str(c)} for e, c in self.iter_terms()
            ],
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TruncSeries":
        try:
            n, D = obj["n"], obj["D"]
            terms = {tuple(t["e"]): int(t["c"]) for t in obj["terms"]}
        except (KeyError, TypeError) as exc:
            raise SeriesError(f"malformed series object: {exc}") from exc
        return cls(n, D, terms)

    @classmethod
    def from_json(cls, text: str) -> "TruncSeries":
        return cls.from_json_obj(json.loads(text))


def monomial(coeff: int, e: Iterable[int], D: int) -> TruncSeries:
    """Single-term series coeff * t^e, with n inferred from len(e)."""
    e = tuple(e)
    return TruncSeries(len(e), D, {e: coeff})
