"""Exact Laurent and arrow polynomials.

Coefficients are Python integers, so arithmetic is exact at any size.
Canonical strings (stable keys in all output files) list monomials in
ascending exponent order, each as ``coeff*A^e`` with optional ``K<i>``
and ``L<i>`` factors, joined by `` + ``; the zero polynomial is ``"0"``
and pure constants drop the variable part.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["LaurentPoly", "ArrowPoly", "BRACKET_LOOP"]


def _fmt_exponent(e) -> str:
    return str(e)


def _monomial_str(coeff: int, parts: list[str]) -> str:
    if not parts:
        return str(coeff)
    return f"{coeff}*" + "*".join(parts)


class LaurentPoly:
    """Laurent polynomial in one variable with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c} if c else {})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff} if coeff else {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shifted(self, delta: int, scale: int = 1) -> "LaurentPoly":
        """Multiply by ``scale * A**delta``."""
        return LaurentPoly({e + delta: c * scale for e, c in self.coeffs.items()})

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers only via explicit monomials")
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def evaluate(self, value: complex) -> complex:
        return sum(c * value**e for e, c in self.coeffs.items())

    def substituted_to_t(self) -> dict[Fraction, int]:
        """Exponent map after substituting ``t = A^-4`` (quarter-integers)."""
        return {Fraction(-e, 4): c for e, c in self.coeffs.items()}

    def to_string(self, var: str = "A") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            factors = [] if e == 0 else [f"{var}^{_fmt_exponent(e)}"]
            parts.append(_monomial_str(self.coeffs[e], factors))
        return " + ".join(parts)

    def jones_string(self) -> str:
        """Canonical string in ``t`` (quarter-integer exponents)."""
        tmap = self.substituted_to_t()
        if not tmap:
            return "0"
        parts = []
        for e in sorted(tmap):
            factors = [] if e == 0 else [f"t^{_fmt_exponent(e)}"]
            parts.append(_monomial_str(tmap[e], factors))
        return " + ".join(parts)

    def mirrored(self) -> "LaurentPoly":
        """Image under ``A -> A^-1`` (Jones of the mirror diagram)."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_string()})"


#: The scalar value of one crossing-free state loop, ``-A^2 - A^-2``.
BRACKET_LOOP = LaurentPoly({2: -1, -2: -1})


class ArrowPoly:
    """Polynomial in ``A`` and the arrow variables ``K_i`` (closed state
    loops with ``2i`` surviving cusps) and ``L_i`` (the long segment).

    Keys are ``(a_exp, k_vars, lambda_index)`` with ``k_vars`` a sorted
    tuple of the K indices counted with multiplicity; ``lambda_index`` 0
    means no ``L`` factor.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, tuple[int, ...], int], int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({(0, (), 0): other} if other else {})
        if isinstance(other, ArrowPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "ArrowPoly") -> "ArrowPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return ArrowPoly(out)

    def has_lambda(self, index: int | None = None) -> bool:
        if index is None:
            return any(m[2] for m in self.terms)
        return any(m[2] == index for m in self.terms)

    def is_classical(self) -> bool:
        """True when no K or L variable survives in any monomial."""
        return all(not m[1] and not m[2] for m in self.terms)

    def a_part(self) -> LaurentPoly:
        """The coefficient of the variable-free monomials, as a Laurent
        polynomial in ``A`` (the whole polynomial for classical states)."""
        return LaurentPoly({m[0]: c for m, c in self.terms.items() if not m[1] and not m[2]})

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda m: (m[0], m[1], m[2]))
        parts = []
        for a_exp, k_vars, lam in keys:
            factors = [] if a_exp == 0 else [f"A^{a_exp}"]
            factors += [f"K{i}" for i in k_vars]
            if lam:
                factors.append(f"L{lam}")
            parts.append(_monomial_str(self.terms[(a_exp, k_vars, lam)], factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ArrowPoly({self.to_string()})"
