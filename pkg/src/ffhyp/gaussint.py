"""Exact Gaussian integers, enough arithmetic for q-series coefficients."""

from __future__ import annotations

from typing import NamedTuple


class GaussianInt(NamedTuple):
    re: int
    im: int = 0

    @classmethod
    def nearest(cls, z: complex) -> "GaussianInt":
        z = complex(z)
        return cls(int(round(z.real)), int(round(z.imag)))

    @classmethod
    def coerce(cls, v) -> "GaussianInt":
        if isinstance(v, GaussianInt):
            return v
        if isinstance(v, complex):
            if v.real != int(v.real) or v.imag != int(v.imag):
                raise ValueError(f"{v} is not a Gaussian integer")
            return cls(int(v.real), int(v.imag))
        return cls(int(v), 0)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = GaussianInt(1, 0)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = GaussianInt.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re, self.im)

    def __int__(self):
        if self.im:
            raise ValueError(f"{self} is not a rational integer")
        return self.re

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"
