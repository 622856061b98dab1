"""Sparse multivariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .exactnum import as_rational, format_rational

Exponent = tuple[int, ...]


class SparsePoly:
    """Polynomial in ``nvars`` variables ``z0..z_{nvars-1}``.

    ``terms`` maps exponent vectors to nonzero Fractions. Equality is equality
    of the term dictionaries, so two polynomials compare equal exactly when
    they are the same polynomial.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                c = as_rational(c)
                if c:
                    self.terms[tuple(e)] = c

    # construction

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, coeff=1) -> "SparsePoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): coeff})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "SparsePoly":
        """``sum_i coeffs[i] * z_i``."""
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "SparsePoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # arithmetic

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return SparsePoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SparsePoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: "SparsePoly") -> "SparsePoly":
        """Quotient of an exact division; raises ArithmeticError if inexact."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = max(other.terms)
        lead_c = other.terms[lead_e]
        rem = dict(self.terms)
        quot: dict[Exponent, Fraction] = {}
        while rem:
            e = max(rem)
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if min(diff) < 0:
                raise ArithmeticError("polynomial division is not exact")
            c = rem[e] / lead_c
            quot[diff] = c
            for oe, oc in other.terms.items():
                t = tuple(a + b for a, b in zip(oe, diff))
                s = rem.get(t, 0) - c * oc
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return SparsePoly._raw(self.nvars, quot)

    # comparison and inspection

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if d is not None:
            return degs <= {d}
        return len(degs) <= 1

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= as_rational(x) ** k
            total += t
        return total

    def substitute(self, images: Sequence["SparsePoly"]) -> "SparsePoly":
        """Replace ``z_i`` by ``images[i]`` (all in the same ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        m = images[0].nvars if images else self.nvars
        powers: list[dict[int, SparsePoly]] = [{0: SparsePoly.constant(m, 1)} for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * images[i]
            return cache[k]

        out = SparsePoly.zero(m)
        for e, c in self.terms.items():
            t = SparsePoly.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            out = out + t
        return out

    def restrict(self, zero_vars: Sequence[int]) -> "SparsePoly":
        """Set the listed variables to zero (variable count unchanged)."""
        zs = set(zero_vars)
        return SparsePoly._raw(self.nvars, {e: c for e, c in self.terms.items()
                                            if not any(e[i] for i in zs)})

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        # graded reverse order: highest total degree first, then lex descending
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"z{i}" if k == 1 else f"z{i}^{k}" for i, k in enumerate(e) if k)
            a = abs(c)
            if not mono:
                body = format_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_rational(a)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {self})"

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coeff": format_rational(c)} for e, c in self.sorted_terms()]
