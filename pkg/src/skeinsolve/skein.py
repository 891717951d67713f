"""The positive solid-torus skein in its partition basis and the torus-curve
operator actions on it.

A SkeinVector is a finite map from partitions to rational-function
coefficients, truncated at a fixed degree; the generators act by

    unknot:  scalar multiplication by (aL - aL^{-1}) / (q^{1/2} - q^{-1/2})
    P10:     diagonal, eigenvalue unknot + aL (q^{1/2} - q^{-1/2}) c_mu(q)
    P01:     mu -> sum over ways of adding one box
    P11:     mu -> aL * sum over added boxes, weighted by q^{content}

P11's per-box form is the closed expression for
(q^{1/2} - q^{-1/2})^{-1} [P10, P01]; the raw commutator is kept available
through OperatorExpression composition as an independent cross-check.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Mapping, Union

from .partitions import (
    Partition,
    addable_cells,
    content_polynomial,
    partition_sort_key,
)
from .ring import (
    AL,
    LaurentPolynomial,
    RationalFunction,
    S,
    SignedMonomial,
    monomial,
)


class Generator(Enum):
    IDENTITY = "I"
    UNKNOT = "O"
    P10 = "P10"
    P01 = "P01"
    P11 = "P11"


Z_BRACKET = S - S ** -1

#: Standard framed-unknot scalar; any nonzero value may be passed instead to
#: confirm that solver output does not depend on it.
UNKNOT_VALUE = RationalFunction(AL - AL ** -1, Z_BRACKET)

ScalarLike = Union[RationalFunction, LaurentPolynomial, SignedMonomial, int]


class SkeinVector:
    """Finite graded vector: partition -> rational-function coefficient.

    Zero coefficients are never stored, every stored partition has size at
    most max_degree, and all operations are pure.
    """

    __slots__ = ("_coeffs", "_max_degree")

    def __init__(self, coeffs: Mapping[Partition, ScalarLike] | None, max_degree: int):
        if max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        clean: dict[Partition, RationalFunction] = {}
        if coeffs:
            for p, val in coeffs.items():
                if p.size > max_degree:
                    raise ValueError(
                        f"partition {p.parts} exceeds max_degree {max_degree}")
                rf = val if isinstance(val, RationalFunction) else RationalFunction(val)
                if not rf.is_zero:
                    clean[p] = rf
        self._coeffs = clean
        self._max_degree = max_degree

    @classmethod
    def zero(cls, max_degree: int) -> "SkeinVector":
        return cls(None, max_degree)

    @classmethod
    def basis(cls, p: Partition, max_degree: int | None = None) -> "SkeinVector":
        """The basis vector of the given partition."""
        if max_degree is None:
            max_degree = p.size
        return cls({p: RationalFunction(1)}, max_degree)

    @property
    def max_degree(self) -> int:
        return self._max_degree

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, p: Partition) -> RationalFunction:
        return self._coeffs.get(p, RationalFunction(0))

    def partitions(self) -> list[Partition]:
        return sorted(self._coeffs, key=partition_sort_key)

    def items(self) -> list[tuple[Partition, RationalFunction]]:
        """Coefficients sorted by (degree, reverse-lexicographic partition)."""
        return [(p, self._coeffs[p]) for p in self.partitions()]

    def degree_component(self, n: int) -> "SkeinVector":
        return SkeinVector(
            {p: v for p, v in self._coeffs.items() if p.size == n}, self._max_degree)

    def truncate(self, max_degree: int) -> "SkeinVector":
        return SkeinVector(
            {p: v for p, v in self._coeffs.items() if p.size <= max_degree}, max_degree)

    def __add__(self, other: "SkeinVector") -> "SkeinVector":
        if not isinstance(other, SkeinVector):
            return NotImplemented
        if self._max_degree != other._max_degree:
            raise ValueError("cannot add skein vectors with different truncations")
        out = dict(self._coeffs)
        for p, v in other._coeffs.items():
            new = out.get(p, RationalFunction(0)) + v
            if new.is_zero:
                out.pop(p, None)
            else:
                out[p] = new
        return SkeinVector(out, self._max_degree)

    def __neg__(self) -> "SkeinVector":
        return SkeinVector({p: -v for p, v in self._coeffs.items()}, self._max_degree)

    def __sub__(self, other: "SkeinVector") -> "SkeinVector":
        if not isinstance(other, SkeinVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c: ScalarLike) -> "SkeinVector":
        rf = c if isinstance(c, RationalFunction) else RationalFunction(c)
        if rf.is_zero:
            return SkeinVector.zero(self._max_degree)
        return SkeinVector({p: v * rf for p, v in self._coeffs.items()}, self._max_degree)

    def __mul__(self, c: ScalarLike) -> "SkeinVector":
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinVector):
            return NotImplemented
        if self._max_degree != other._max_degree:
            return False
        if set(self._coeffs) != set(other._coeffs):
            return False
        return all(v == other._coeffs[p] for p, v in self._coeffs.items())

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return "; ".join(f"[{p}] {v}" for p, v in self.items())

    def __repr__(self) -> str:
        return f"SkeinVector({str(self)!r}, max_degree={self._max_degree})"


def p10_eigenvalue(p: Partition,
                   unknot_value: RationalFunction | None = None) -> RationalFunction:
    """Eigenvalue of P10 on the basis vector of p."""
    u = UNKNOT_VALUE if unknot_value is None else unknot_value
    return u + RationalFunction(AL * Z_BRACKET * content_polynomial(p))


def apply_identity(v: SkeinVector,
                   unknot_value: RationalFunction | None = None) -> SkeinVector:
    return v


def apply_unknot(v: SkeinVector,
                 unknot_value: RationalFunction | None = None) -> SkeinVector:
    u = UNKNOT_VALUE if unknot_value is None else unknot_value
    return v.scale(u)


def apply_p10(v: SkeinVector,
              unknot_value: RationalFunction | None = None) -> SkeinVector:
    return SkeinVector(
        {p: coeff * p10_eigenvalue(p, unknot_value) for p, coeff in v.items()},
        v.max_degree,
    )


def _apply_raising(v: SkeinVector, box_weight) -> SkeinVector:
    out: dict[Partition, RationalFunction] = {}
    for p, coeff in v.items():
        if p.size + 1 > v.max_degree:
            continue  # truncated
        for mu, cell in addable_cells(p):
            term = coeff * box_weight(cell)
            prev = out.get(mu)
            new = term if prev is None else prev + term
            if new.is_zero:
                out.pop(mu, None)
            else:
                out[mu] = new
    return SkeinVector(out, v.max_degree)


def apply_p01(v: SkeinVector,
              unknot_value: RationalFunction | None = None) -> SkeinVector:
    return _apply_raising(v, lambda cell: RationalFunction(1))


def apply_p11(v: SkeinVector,
              unknot_value: RationalFunction | None = None) -> SkeinVector:
    return _apply_raising(
        v, lambda cell: RationalFunction(monomial(1, s=2 * cell.content, aL=1)))


_APPLY = {
    Generator.IDENTITY: apply_identity,
    Generator.UNKNOT: apply_unknot,
    Generator.P10: apply_p10,
    Generator.P01: apply_p01,
    Generator.P11: apply_p11,
}


def apply_generator(gen: Generator, v: SkeinVector,
                    unknot_value: RationalFunction | None = None) -> SkeinVector:
    return _APPLY[gen](v, unknot_value)


class OperatorExpression:
    """Formal combination of generator words with Laurent-polynomial
    coefficients, closed under sum, scalar multiple and composition.

    A word (g1, g2, ..., gk) acts as g1 after g2 after ... after gk.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[object, object]] = ()):
        collected: dict[tuple[Generator, ...], LaurentPolynomial] = {}
        for coeff, word in terms:
            coeff = LaurentPolynomial._coerce(coeff)
            if coeff is NotImplemented:
                raise TypeError("operator coefficients must be Laurent polynomials")
            if isinstance(word, Generator):
                word = (word,)
            else:
                word = tuple(word)
            if not word:
                word = (Generator.IDENTITY,)
            acc = collected.get(word)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero:
                collected.pop(word, None)
            else:
                collected[word] = acc
        self._terms = tuple(
            sorted(
                ((c, w) for w, c in collected.items()),
                key=lambda t: (len(t[1]), tuple(g.value for g in t[1])),
            )
        )

    @classmethod
    def generator(cls, gen: Generator, coeff: object = 1) -> "OperatorExpression":
        return cls([(coeff, (gen,))])

    @property
    def terms(self) -> tuple[tuple[LaurentPolynomial, tuple[Generator, ...]], ...]:
        return self._terms

    def __add__(self, other: "OperatorExpression") -> "OperatorExpression":
        if not isinstance(other, OperatorExpression):
            return NotImplemented
        return OperatorExpression(
            [(c, w) for c, w in self._terms] + [(c, w) for c, w in other._terms])

    def __neg__(self) -> "OperatorExpression":
        return OperatorExpression([(-c, w) for c, w in self._terms])

    def __sub__(self, other: "OperatorExpression") -> "OperatorExpression":
        if not isinstance(other, OperatorExpression):
            return NotImplemented
        return self + (-other)

    def scale(self, c: object) -> "OperatorExpression":
        return OperatorExpression([(LaurentPolynomial._coerce(c) * coeff, w)
                                   for coeff, w in self._terms])

    def __mul__(self, c: object) -> "OperatorExpression":
        return self.scale(c)

    __rmul__ = __mul__

    def compose(self, other: "OperatorExpression") -> "OperatorExpression":
        """self after other: (A.compose(B)).apply(v) == A.apply(B.apply(v))."""
        return OperatorExpression(
            [(c1 * c2, w1 + w2) for c1, w1 in self._terms for c2, w2 in other._terms])

    def __matmul__(self, other: "OperatorExpression") -> "OperatorExpression":
        return self.compose(other)

    @staticmethod
    def commutator(a: "OperatorExpression", b: "OperatorExpression") -> "OperatorExpression":
        return a.compose(b) - b.compose(a)

    def apply(self, v: SkeinVector,
              unknot_value: RationalFunction | None = None) -> SkeinVector:
        """Linear extension of the generator actions, with the same truncation
        degree as the input (raised terms beyond it are dropped)."""
        total = SkeinVector.zero(v.max_degree)
        for coeff, word in self._terms:
            cur = v
            for gen in reversed(word):
                cur = apply_generator(gen, cur, unknot_value)
            total = total + cur.scale(coeff)
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorExpression):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for coeff, word in self._terms:
            gens = "∘".join(g.value for g in word)
            if coeff.is_one:
                text = gens
                sign = "+"
            elif coeff == -1:
                text = gens
                sign = "-"
            else:
                body = str(coeff)
                sign = "+"
                if body.startswith("-") and len(coeff) == 1:
                    sign = "-"
                    body = body[1:]
                text = (f"({body}) " if " " in body or "+" in body else f"{body} ") + gens
            if not pieces:
                pieces.append(text if sign == "+" else "-" + text)
            else:
                pieces.append(f"{sign} {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"OperatorExpression({str(self)!r})"


IDENTITY_OP = OperatorExpression.generator(Generator.IDENTITY)
UNKNOT_OP = OperatorExpression.generator(Generator.UNKNOT)
P10_OP = OperatorExpression.generator(Generator.P10)
P01_OP = OperatorExpression.generator(Generator.P01)
P11_OP = OperatorExpression.generator(Generator.P11)
