"""Homology of the blown-up planes and contact-order sequences.

A class d = a*D - sum(mu_i * E_i) is stored as its degree a = d.D and the
coefficients mu_i = d.E_i. The intersection form is diag(1, -1, ..., -1).
"""
from collections import Counter
from math import prod
from typing import Iterable, Optional, Tuple

from pydantic import BaseModel, field_validator, model_validator

from conic_floors.config import config
from conic_floors.exceptions import DomainError, ParseError
from conic_floors.schema import SurfaceKind


class SurfaceModel(BaseModel, frozen=True):
    kind: SurfaceKind
    n: int

    @model_validator(mode="after")
    def _check_n(self) -> "SurfaceModel":
        if self.kind == SurfaceKind.TILDE_X81:
            if self.n != 9:
                raise ValueError("tX81 carries exactly nine exceptional classes")
        elif not 0 <= self.n <= 8:
            raise ValueError(f"n must lie in 0..8, got {self.n}")
        return self

    @classmethod
    def tilde(cls, n: int) -> "SurfaceModel":
        return cls(kind=SurfaceKind.TILDE_XN, n=n)

    @classmethod
    def absolute(cls, n: int) -> "SurfaceModel":
        return cls(kind=SurfaceKind.XN, n=n)

    @classmethod
    def tilde81(cls) -> "SurfaceModel":
        return cls(kind=SurfaceKind.TILDE_X81, n=9)

    @property
    def conic_points(self) -> int:
        """Number of blown-up points lying on the conic E"""
        if self.kind == SurfaceKind.TILDE_XN:
            return self.n
        if self.kind == SurfaceKind.TILDE_X81:
            return 8
        raise DomainError("X_n carries no distinguished conic")

    def __str__(self) -> str:
        if self.kind == SurfaceKind.TILDE_X81:
            return "tX81"
        return f"{self.kind.value}{self.n}"


class SurfaceClass(BaseModel, frozen=True):
    degree: int
    mu: Tuple[int, ...]
    model: SurfaceModel

    @model_validator(mode="after")
    def _check_length(self) -> "SurfaceClass":
        if len(self.mu) != self.model.n:
            raise ValueError(
                f"class on {self.model} needs {self.model.n} coefficients, got {len(self.mu)}"
            )
        return self

    @classmethod
    def parse(cls, text: str, model: SurfaceModel) -> "SurfaceClass":
        """Parse ``a:mu1,...,mun``; for n = 0 the forms ``a`` and ``a:`` are accepted"""
        raw = text.strip()
        head, sep, tail = raw.partition(":")
        try:
            degree = int(head)
            mu = tuple(int(x) for x in tail.split(",")) if tail.strip() else ()
        except ValueError as e:
            raise ParseError(f"malformed class literal {text!r}") from e
        if not sep and model.n:
            raise ParseError(f"class literal {text!r} lacks the ':' separator")
        if len(mu) != model.n:
            raise ParseError(
                f"class literal {text!r} has {len(mu)} coefficients, {model} needs {model.n}"
            )
        return cls(degree=degree, mu=mu, model=model)

    @classmethod
    def line(cls, model: SurfaceModel, multiple: int = 1) -> "SurfaceClass":
        return cls(degree=multiple, mu=(0,) * model.n, model=model)

    @classmethod
    def exceptional(cls, model: SurfaceModel, i: int, multiple: int = 1) -> "SurfaceClass":
        """The class multiple * E_i, i counted from 1"""
        mu = [0] * model.n
        mu[i - 1] = -multiple
        return cls(degree=0, mu=tuple(mu), model=model)

    def __str__(self) -> str:
        return f"{self.degree}:" + ",".join(str(m) for m in self.mu)

    def _same_model(self, other: "SurfaceClass") -> None:
        if self.model != other.model:
            raise DomainError(f"classes live on {self.model} and {other.model}")

    def __add__(self, other: "SurfaceClass") -> "SurfaceClass":
        self._same_model(other)
        mu = tuple(a + b for a, b in zip(self.mu, other.mu))
        return SurfaceClass(degree=self.degree + other.degree, mu=mu, model=self.model)

    def __sub__(self, other: "SurfaceClass") -> "SurfaceClass":
        return self + (-1) * other

    def __mul__(self, k: int) -> "SurfaceClass":
        return SurfaceClass(
            degree=k * self.degree, mu=tuple(k * m for m in self.mu), model=self.model
        )

    __rmul__ = __mul__

    def __neg__(self) -> "SurfaceClass":
        return (-1) * self

    def dot(self, other: "SurfaceClass") -> int:
        self._same_model(other)
        return self.degree * other.degree - sum(a * b for a, b in zip(self.mu, other.mu))

    def e(self, i: int) -> int:
        """d.E_i, i counted from 1"""
        return self.mu[i - 1]

    def with_model(self, model: SurfaceModel) -> "SurfaceClass":
        """Reinterpret the coefficients on a model with the same number of points"""
        if model.n != self.model.n:
            raise DomainError(f"cannot move {self} from {self.model} to {model}")
        return SurfaceClass(degree=self.degree, mu=self.mu, model=model)

    def swap_coefficients(self, i: int, j: int) -> "SurfaceClass":
        mu = list(self.mu)
        mu[i - 1], mu[j - 1] = mu[j - 1], mu[i - 1]
        return SurfaceClass(degree=self.degree, mu=tuple(mu), model=self.model)

    def exceptional_multiple(self) -> Optional[Tuple[int, int]]:
        """(i, l) when the class equals l*E_i with l >= 1, otherwise None"""
        if self.degree != 0:
            return None
        support = [(i, -m) for i, m in enumerate(self.mu, start=1) if m]
        if len(support) == 1 and support[0][1] > 0:
            return support[0]
        return None

    @property
    def is_zero(self) -> bool:
        return self.degree == 0 and not any(self.mu)


def pair_E(d: SurfaceClass) -> int:
    """d.E for the conic class E = 2D - sum of the conic points"""
    k = d.model.conic_points
    return 2 * d.degree - sum(d.mu[:k])


def pair_c1(d: SurfaceClass) -> int:
    return 3 * d.degree - sum(d.mu)


def conic_class(model: SurfaceModel) -> SurfaceClass:
    k = model.conic_points
    mu = (1,) * k + (0,) * (model.n - k)
    return SurfaceClass(degree=2, mu=mu, model=model)


def arithmetic_genus(d: SurfaceClass) -> int:
    return (d.dot(d) - pair_c1(d)) // 2 + 1


def is_effective_candidate(d: SurfaceClass) -> bool:
    """Cheap necessary conditions for d to carry an irreducible curve meeting E properly"""
    if d.exceptional_multiple() is not None:
        return d.exceptional_multiple()[1] == 1
    if d.degree < 1 or any(m < 0 for m in d.mu):
        return False
    if any(m > d.degree for m in d.mu):
        return False
    return pair_E(d) >= 0


class MultiSeq(BaseModel, frozen=True):
    """A finitely supported sequence a = sum a_i u_i; ``counts[i-1]`` is a_i"""

    counts: Tuple[int, ...] = ()

    @field_validator("counts")
    @classmethod
    def _normalize(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(c < 0 for c in v):
            raise ValueError("sequence entries must be non-negative")
        v = tuple(v)
        while v and v[-1] == 0:
            v = v[:-1]
        if len(v) > config.engine.max_seq_index:
            raise ValueError(f"tangency order {len(v)} exceeds max_seq_index")
        return v

    @classmethod
    def zero(cls) -> "MultiSeq":
        return cls()

    @classmethod
    def unit(cls, j: int, count: int = 1) -> "MultiSeq":
        return cls(counts=(0,) * (j - 1) + (count,))

    @classmethod
    def from_weights(cls, weights: Iterable[int]) -> "MultiSeq":
        tally = Counter(weights)
        top = max(tally, default=0)
        return cls(counts=tuple(tally.get(j, 0) for j in range(1, top + 1)))

    @classmethod
    def parse(cls, text: str) -> "MultiSeq":
        """Parse ``1^2,2^1``; an empty literal or ``0`` is the zero sequence"""
        raw = text.strip()
        if raw in ("", "0"):
            return cls()
        tally: Counter = Counter()
        try:
            for item in raw.split(","):
                weight, _, count = item.strip().partition("^")
                w = int(weight)
                c = int(count) if count else 1
                if w < 1 or c < 0:
                    raise ValueError
                tally[w] += c
        except ValueError as e:
            raise ParseError(f"malformed sequence literal {text!r}") from e
        top = max(tally, default=0)
        try:
            return cls(counts=tuple(tally.get(j, 0) for j in range(1, top + 1)))
        except ValueError as e:
            raise ParseError(str(e)) from e

    def __str__(self) -> str:
        parts = [f"{j}^{c}" for j, c in enumerate(self.counts, start=1) if c]
        return ",".join(parts) if parts else "0"

    def __getitem__(self, j: int) -> int:
        return self.counts[j - 1] if 1 <= j <= len(self.counts) else 0

    def __add__(self, other: "MultiSeq") -> "MultiSeq":
        top = max(len(self.counts), len(other.counts))
        return MultiSeq(counts=tuple(self[j] + other[j] for j in range(1, top + 1)))

    def __sub__(self, other: "MultiSeq") -> "MultiSeq":
        top = max(len(self.counts), len(other.counts))
        return MultiSeq(counts=tuple(self[j] - other[j] for j in range(1, top + 1)))

    def scaled(self, k: int) -> "MultiSeq":
        return MultiSeq(counts=tuple(k * c for c in self.counts))

    def weights(self) -> Tuple[int, ...]:
        """The underlying multiset of weights, increasing"""
        return tuple(j for j, c in enumerate(self.counts, start=1) for _ in range(c))

    def is_sub(self, other: "MultiSeq") -> bool:
        return all(self[j] <= other[j] for j in range(1, len(self.counts) + 1))

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def weighted(self) -> int:
        return sum(j * c for j, c in enumerate(self.counts, start=1))

    @property
    def product(self) -> int:
        return prod(j**c for j, c in enumerate(self.counts, start=1))

    @property
    def is_zero(self) -> bool:
        return not self.counts


def seq_functionals(a: MultiSeq) -> Tuple[int, int, int]:
    """(|a|, Ia, I^a)"""
    return a.size, a.weighted, a.product
