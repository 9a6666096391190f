"""The 8-element quaternion group {±1, ±i, ±j, ±k}.

Presentation: i² = j² = k² = ijk = −1, hence ij = k, jk = i, ki = j and the
reversed products pick up a sign. The group is non-abelian, so everywhere a
product of configuration weights appears it is taken in a fixed vertex
order.
"""

from __future__ import annotations

from dataclasses import dataclass

_AXES = "1ijk"

# (axis, axis) -> (sign, axis)
_AXIS_MUL = {
    ("1", "1"): (1, "1"),
    ("1", "i"): (1, "i"),
    ("1", "j"): (1, "j"),
    ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"),
    ("j", "1"): (1, "j"),
    ("k", "1"): (1, "k"),
    ("i", "i"): (-1, "1"),
    ("j", "j"): (-1, "1"),
    ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"),
    ("j", "i"): (-1, "k"),
    ("j", "k"): (1, "i"),
    ("k", "j"): (-1, "i"),
    ("k", "i"): (1, "j"),
    ("i", "k"): (-1, "j"),
}


@dataclass(frozen=True)
class Quaternion:
    sign: int
    axis: str

    def __post_init__(self):
        if self.sign not in (1, -1) or self.axis not in _AXES:
            raise ValueError(f"no such quaternion: sign={self.sign} axis={self.axis!r}")

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        s, axis = _AXIS_MUL[(self.axis, other.axis)]
        return Quaternion(self.sign * other.sign * s, axis)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.sign, self.axis)

    def inverse(self) -> "Quaternion":
        # ±1 are self-inverse; the imaginary units invert by negation.
        if self.axis == "1":
            return self
        return -self

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.axis

    @classmethod
    def parse(cls, text: str) -> "Quaternion":
        t = text.strip()
        sign = 1
        if t and t[0] in "+-":
            sign = 1 if t[0] == "+" else -1
            t = t[1:]
        if t not in _AXES:
            raise ValueError(f"cannot parse quaternion {text!r}")
        return cls(sign, t)


ONE = Quaternion(1, "1")
MINUS_ONE = Quaternion(-1, "1")
I = Quaternion(1, "i")
J = Quaternion(1, "j")
K = Quaternion(1, "k")


def elements() -> tuple[Quaternion, ...]:
    return tuple(Quaternion(s, a) for a in _AXES for s in (1, -1))


def q_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def q_product(factors) -> Quaternion:
    """Left-to-right product; the empty product is +1."""
    acc = ONE
    for f in factors:
        acc = acc * f
    return acc
