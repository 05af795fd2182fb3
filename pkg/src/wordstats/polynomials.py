"""Sparse multivariate polynomials with exact integer coefficients.

Terms live in a dict mapping exponent tuples to nonzero ints; every
polynomial in a computation shares one ordered tuple of variable names, so
exponent tuples have fixed arity and compare positionally.  The canonical
printed form orders terms by total degree, then lexicographically, which
the CLI relies on for deterministic output.
"""

from __future__ import annotations

from .words import InputError


class Polynomial:
    __slots__ = ("names", "terms")

    def __init__(self, names: tuple[str, ...], terms: dict[tuple[int, ...], int] | None = None):
        self.names = tuple(names)
        arity = len(self.names)
        cleaned: dict[tuple[int, ...], int] = {}
        for exponents, coefficient in (terms or {}).items():
            if len(exponents) != arity:
                raise InputError(
                    f"exponent tuple {exponents} has arity {len(exponents)}, expected {arity}"
                )
            if coefficient:
                cleaned[tuple(exponents)] = coefficient
        self.terms = cleaned

    @classmethod
    def constant(cls, names: tuple[str, ...], value: int) -> "Polynomial":
        if value == 0:
            return cls(names)
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def variable(cls, names: tuple[str, ...], name: str) -> "Polynomial":
        try:
            index = names.index(name)
        except ValueError:
            raise InputError(f"variable {name!r} not among {names}")
        exponents = tuple(1 if i == index else 0 for i in range(len(names)))
        return cls(names, {exponents: 1})

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.names != self.names:
                raise InputError(
                    f"mixed variable sets: {self.names} vs {other.names}"
                )
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.names, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            merged[exponents] = merged.get(exponents, 0) + coefficient
        return Polynomial(self.names, merged)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(
            self.names, {exp: -coefficient for exp, coefficient in self.terms.items()}
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial(self.names)
            return Polynomial(
                self.names,
                {exp: coefficient * other for exp, coefficient in self.terms.items()},
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        product: dict[tuple[int, ...], int] = {}
        for exp_a, coeff_a in self.terms.items():
            for exp_b, coeff_b in other.terms.items():
                key = tuple(a + b for a, b in zip(exp_a, exp_b))
                product[key] = product.get(key, 0) + coeff_a * coeff_b
        return Polynomial(self.names, product)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * len(self.names): other}
        if isinstance(other, Polynomial):
            return self.names == other.names and self.terms == other.terms
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.names), 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in canonical order: graded, then lexicographic."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exponents, coefficient in self.sorted_terms():
            factors = [
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(self.names, exponents)
                if power
            ]
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"
