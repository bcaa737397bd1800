"""
Exact sparse polynomials over Z in x_1..x_n and a deformation variable b,
with Demazure-type divided-difference operators.

Terms are stored as a dict mapping ``(x_exponents, b_exponent)`` to a
nonzero integer coefficient.  The deformation exponent gets its own slot
so the variable-swap action never touches it.  All divided differences
are computed monomial-wise by telescoping, so no polynomial division is
ever performed.
"""

from __future__ import annotations

import re

from .permutations import (
    Perm,
    compose,
    length,
    longest_element,
    reduced_word,
    sorting_permutation,
)

TermKey = tuple[tuple[int, ...], int]


class BetaPolynomial:
    """Element of Z[b][x_1, ..., x_n]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[TermKey, int] | None = None):
        self.n = n
        clean: dict[TermKey, int] = {}
        for (xs, be), c in (terms or {}).items():
            if c == 0:
                continue
            xs = tuple(xs)
            if len(xs) != n or any(e < 0 for e in xs) or be < 0:
                raise ValueError(f"bad exponent key {(xs, be)!r} for n={n}")
            clean[(xs, be)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "BetaPolynomial":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "BetaPolynomial":
        return cls.monomial(n, (0,) * n)

    @classmethod
    def monomial(cls, n: int, xs, beta: int = 0, coeff: int = 1) -> "BetaPolynomial":
        xs = tuple(xs) + (0,) * (n - len(xs))
        return cls(n, {(xs, beta): coeff})

    # -- ring structure ----------------------------------------------

    def _check(self, other: "BetaPolynomial") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} != {other.n}")

    def __add__(self, other: "BetaPolynomial") -> "BetaPolynomial":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return BetaPolynomial(self.n, terms)

    def __neg__(self) -> "BetaPolynomial":
        return BetaPolynomial(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BetaPolynomial") -> "BetaPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "BetaPolynomial":
        if isinstance(other, int):
            return BetaPolynomial(self.n, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        terms: dict[TermKey, int] = {}
        for (xs1, b1), c1 in self.terms.items():
            for (xs2, b2), c2 in other.terms.items():
                key = (tuple(a + b for a, b in zip(xs1, xs2)), b1 + b2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return BetaPolynomial(self.n, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BetaPolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"BetaPolynomial({self.n}, {self.to_text()!r})"

    # -- views ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[TermKey, int]]:
        """Terms in the canonical order: by (b-exponent, x-exponents)."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def coefficient(self, xs, beta: int = 0) -> int:
        return self.terms.get((tuple(xs), beta), 0)

    def beta_zero(self) -> "BetaPolynomial":
        return BetaPolynomial(
            self.n, {k: c for k, c in self.terms.items() if k[1] == 0}
        )

    def extend(self, m: int) -> "BetaPolynomial":
        """Embed into Z[b][x_1..x_m] for m >= n."""
        if m < self.n:
            raise ValueError("cannot shrink the variable set")
        pad = (0,) * (m - self.n)
        return BetaPolynomial(
            m, {(xs + pad, be): c for (xs, be), c in self.terms.items()}
        )

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.n))

    # -- operators -------------------------------------------------------

    def swap(self, i: int) -> "BetaPolynomial":
        """Exchange x_i and x_{i+1} in every term."""
        self._check_index(i)
        terms: dict[TermKey, int] = {}
        for (xs, be), c in self.terms.items():
            ys = list(xs)
            ys[i - 1], ys[i] = ys[i], ys[i - 1]
            key = (tuple(ys), be)
            terms[key] = terms.get(key, 0) + c
        return BetaPolynomial(self.n, terms)

    def _check_index(self, i: int) -> None:
        if not 1 <= i < self.n:
            raise ValueError(f"operator index {i} out of range for n={self.n}")

    def divided_difference(self, i: int) -> "BetaPolynomial":
        """(f - s_i f) / (x_i - x_{i+1}), monomial-wise.

        For exponents (a, b) at positions (i, i+1) the quotient telescopes
        into the exponent pairs p+q = a+b-1 with min(a,b) <= p, q < max(a,b),
        with sign +1 if a > b and -1 if a < b (zero if a = b).
        """
        self._check_index(i)
        terms: dict[TermKey, int] = {}
        for (xs, be), c in self.terms.items():
            a, b = xs[i - 1], xs[i]
            if a == b:
                continue
            sign = 1 if a > b else -1
            lo, hi = min(a, b), max(a, b)
            for p in range(lo, hi):
                ys = list(xs)
                ys[i - 1], ys[i] = p, a + b - 1 - p
                key = (tuple(ys), be)
                terms[key] = terms.get(key, 0) + sign * c
        return BetaPolynomial(self.n, terms)

    def demazure(self, i: int) -> "BetaPolynomial":
        """pi_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})."""
        xi = BetaPolynomial.monomial(self.n, tuple(int(j == i) for j in range(1, self.n + 1)))
        return (xi * self).divided_difference(i)

    def demazure_lascoux(self, i: int) -> "BetaPolynomial":
        """varpi_i f = pi_i((1 + b x_{i+1}) f)."""
        xnext = BetaPolynomial.monomial(
            self.n, tuple(int(j == i + 1) for j in range(1, self.n + 1)), beta=1
        )
        return (self + xnext * self).demazure(i)

    def demazure_lascoux_atom(self, i: int) -> "BetaPolynomial":
        """varpi_i f - f."""
        return self.demazure_lascoux(i) - self

    def isobaric_beta(self, i: int) -> "BetaPolynomial":
        """The deformed divided difference partial_i((1 + b x_{i+1}) f).

        Satisfies the braid relations and squares to -b times itself; the
        chain from the staircase monomial reproduces classical Schubert
        polynomials at b = 0 and is stable under adding variables.
        """
        xnext = BetaPolynomial.monomial(
            self.n, tuple(int(j == i + 1) for j in range(1, self.n + 1)), beta=1
        )
        return (self + xnext * self).divided_difference(i)

    # -- text form ------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xs, be), c in self.sorted_terms():
            factors = []
            if be == 1:
                factors.append("b")
            elif be > 1:
                factors.append(f"b^{be}")
            for j, e in enumerate(xs, start=1):
                if e == 1:
                    factors.append(f"x{j}")
                elif e > 1:
                    factors.append(f"x{j}^{e}")
            body = "*".join(factors)
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


_FACTOR_RE = re.compile(r"^(?:b(?:\^(\d+))?|x(\d+)(?:\^(\d+))?|(-?\d+))$")


def parse_polynomial(text: str, n: int) -> BetaPolynomial:
    """Inverse of :meth:`BetaPolynomial.to_text`."""
    text = text.strip()
    if text == "0":
        return BetaPolynomial.zero(n)
    poly = BetaPolynomial.zero(n)
    normalized = text.replace(" - ", " + -").split(" + ")
    for chunk in normalized:
        chunk = chunk.strip()
        coeff, beta = 1, 0
        xs = [0] * n
        if chunk.startswith("-") and not chunk[1:2].isdigit():
            coeff = -1
            chunk = chunk[1:]
        for factor in chunk.split("*"):
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"bad polynomial factor {factor!r}")
            if factor.startswith("b"):
                beta += int(m.group(1) or 1)
            elif factor.startswith("x"):
                j = int(m.group(2))
                if not 1 <= j <= n:
                    raise ValueError(f"variable x{j} out of range for n={n}")
                xs[j - 1] += int(m.group(3) or 1)
            else:
                coeff *= int(m.group(4))
        poly += BetaPolynomial.monomial(n, xs, beta=beta, coeff=coeff)
    return poly


# -- named polynomial families ----------------------------------------------


def apply_word(p: BetaPolynomial, word, op: str) -> BetaPolynomial:
    """Apply a chain of operators, first letter first.

    ``op`` is one of ``pi`` (Demazure), ``varpi`` (Demazure-Lascoux),
    ``varpi_atom``, or ``isobaric`` (deformed divided difference).
    """
    method = {
        "pi": BetaPolynomial.demazure,
        "varpi": BetaPolynomial.demazure_lascoux,
        "varpi_atom": BetaPolynomial.demazure_lascoux_atom,
        "isobaric": BetaPolynomial.isobaric_beta,
    }[op]
    for i in word:
        p = method(p, i)
    return p


def _sorted_parts(a, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a = tuple(a)
    if len(a) > n:
        raise ValueError(f"composition {a!r} longer than n={n}")
    a = a + (0,) * (n - len(a))
    lam, w = sorting_permutation(a)
    return lam, reduced_word(w)

def lascoux(a, n: int) -> BetaPolynomial:
    """Lascoux polynomial: the Demazure-Lascoux chain sorted onto x^λ."""
    lam, word = _sorted_parts(a, n)
    return apply_word(BetaPolynomial.monomial(n, lam), reversed(word), "varpi")


def lascoux_atom(a, n: int) -> BetaPolynomial:
    """Lascoux atom: the chain of (varpi_i - 1) over the same word."""
    lam, word = _sorted_parts(a, n)
    return apply_word(BetaPolynomial.monomial(n, lam), reversed(word), "varpi_atom")


def key_polynomial(a, n: int) -> BetaPolynomial:
    """Key polynomial (Demazure character): the pi chain onto x^λ."""
    lam, word = _sorted_parts(a, n)
    return apply_word(BetaPolynomial.monomial(n, lam), reversed(word), "pi")


def staircase_monomial(n: int) -> BetaPolynomial:
    return BetaPolynomial.monomial(n, tuple(range(n - 1, -1, -1)))


def grothendieck(w: Perm, n: int) -> BetaPolynomial:
    """Grothendieck polynomial of w in n variables.

    Computed by walking a reduced word of w0·w down from the staircase
    monomial with the deformed divided differences.
    """
    if len(w) != n:
        raise ValueError("permutation rank must equal the variable count")
    chain = compose(longest_element(n), w)
    word = reduced_word(chain)
    assert length(chain) == len(word)
    return apply_word(staircase_monomial(n), word, "isobaric")
