"""Exact colourings of rational vector spaces, monochromatic-sumset search and certificates.

Rationals are exchanged as :class:`fractions.Fraction`; certificates as parsed JSON dicts.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import _core
from ._core import SumcolourError

__all__ = [
    "SumcolourError",
    "build_cylinder",
    "colour",
    "decompose",
    "flog",
    "greedy",
    "search",
    "verify",
]

Interval = tuple[Fraction | int | str, Fraction | int | str]


def _q(x: Fraction | int | str) -> str:
    return str(Fraction(x))


def _intervals(Z: Iterable[Interval]) -> list[tuple[str, str]]:
    return [(_q(lo), _q(hi)) for lo, hi in Z]


def flog(k: int, u: int, q: Fraction | int | str) -> int:
    """Largest n with k^n <= q^u, for q > 0."""
    return _core.flog(k, u, _q(q))


def decompose(x: Fraction | int | str) -> tuple[list[tuple[int, int, int]], Fraction]:
    """Prime-power parts (p, n, a) of the fractional part of x and their sum."""
    parts, value = _core.decompose(_q(x))
    return [(p, n, int(a)) for p, n, a in parts], Fraction(value)


def colour(colouring: str, x: Sequence[Fraction | int | str] | Fraction | int | str) -> int:
    if isinstance(x, (list, tuple)):
        text = "(" + ", ".join(_q(c) for c in x) + ")"
    else:
        text = _q(x)
    return _core.colour(colouring, text)


def search(colouring: str, mode: str, k: int, height: int, dim: int, max_size: int,
           budget: int = 1_000_000, threads: int = 1) -> dict:
    """Run the bounded search; returns status, best_size, nodes and the certificate."""
    status, best, nodes, cert = _core.search(colouring, mode, k, height, dim, max_size, budget, threads)
    return {"status": status, "best_size": best, "nodes": nodes, "certificate": json.loads(cert)}


def verify(cert: dict | str, threads: int = 1) -> tuple[bool, str]:
    text = cert if isinstance(cert, str) else json.dumps(cert)
    return _core.verify(text, threads)


def build_cylinder(Z: Iterable[Interval], k: int, T: int, threads: int = 1) -> dict:
    return json.loads(_core.build_cylinder(_intervals(Z), k, T, threads))


def greedy(Z: Iterable[Interval], k: int, T: int) -> list[Fraction]:
    return [Fraction(v) for v in _core.greedy(_intervals(Z), k, T)]
