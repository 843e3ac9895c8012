"""The basic weaves: plain, twill and satin.

Indices below are 0-based.  Twill uses the usual offset scheme (each warp
shifts the over/under pattern by one weft) and satin is the n×n
permutation diagram j = step·i mod n.
"""
from __future__ import annotations

from math import gcd

from .core import CrossingMatrix, WeaveError
from .formats import WeaveDocument


def plain(m: int, n: int) -> WeaveDocument:
    """Checkerboard c(i, j) = (i + j) mod 2; closes up on the torus only for even m, n."""
    if m < 1 or n < 1 or m % 2 or n % 2:
        raise WeaveError(f"plain weave needs positive even dimensions, got {m}x{n}")
    raw = [[(i + j) % 2 for j in range(n)] for i in range(m)]
    return WeaveDocument(CrossingMatrix.from_lists(raw), "plain", {"generator": "plain", "m": m, "n": n})


def twill(m: int, n: int, over: int, under: int) -> WeaveDocument:
    period = over + under
    if over < 1 or under < 1:
        raise WeaveError("twill needs over, under >= 1")
    if n % period or m % period:
        raise WeaveError(f"twill {over}/{under} needs m and n divisible by {period}, got {m}x{n}")
    raw = [[int((j - i) % period < over) for j in range(n)] for i in range(m)]
    meta = {"generator": "twill", "m": m, "n": n, "over": over, "under": under}
    return WeaveDocument(CrossingMatrix.from_lists(raw), f"twill {over}/{under}", meta)


def satin(n: int, step: int) -> WeaveDocument:
    if n < 5:
        raise WeaveError("satin needs n >= 5")
    if gcd(step, n) != 1:
        raise WeaveError(f"satin step {step} is not coprime to {n}")
    if step % n in (1, n - 1):
        raise WeaveError(f"satin step {step} is ±1 mod {n}, which gives a twill")
    raw = [[int(j == step * i % n) for j in range(n)] for i in range(n)]
    return WeaveDocument(CrossingMatrix.from_lists(raw), f"satin {n}/{step}",
                         {"generator": "satin", "n": n, "step": step})


GENERATORS = {"plain": plain, "twill": twill, "satin": satin}
