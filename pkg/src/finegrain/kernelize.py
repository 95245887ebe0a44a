"""Linear-time kernel for LCS over a constant alphabet.

Rule: if some factor of a string uses only letters from ``S`` and is longer
than ``(k+1)^|S|``, delete all but its first ``(k+1)^|S|`` letters. One
left-to-right sweep applies the rule exhaustively: for every non-empty
subset ``S`` a counter holds the length of the current kept run drawn from
``S``; a letter is dropped as soon as admitting it would push some counter
past its cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .instances import LcsInstance

__all__ = ["MAX_SIGMA", "KernelReport", "subset_caps", "sweep", "is_rule_free", "lcs_kernel", "kernel_report"]

#: 2^sigma counters are kept, so the alphabet must stay tiny
MAX_SIGMA = 6


def _check_sigma(sigma: int) -> None:
    if sigma > MAX_SIGMA:
        raise ValueError(f"kernel supports sigma <= {MAX_SIGMA}, got {sigma}")


def subset_caps(sigma: int, k: int) -> list[int]:
    """``caps[mask] = (k+1)^popcount(mask)``; index 0 is unused."""
    return [(k + 1) ** bin(mask).count("1") for mask in range(1 << sigma)]


def sweep(x: Sequence[int], sigma: int, k: int) -> tuple[int, ...]:
    _check_sigma(sigma)
    caps = subset_caps(sigma, k)
    masks = range(1, 1 << sigma)
    count = [0] * (1 << sigma)
    out = []
    for c in x:
        bit = 1 << c
        if any(m & bit and count[m] + 1 > caps[m] for m in masks):
            continue
        for m in masks:
            count[m] = count[m] + 1 if m & bit else 0
        out.append(c)
    return tuple(out)


def is_rule_free(x: Sequence[int], sigma: int, k: int) -> bool:
    """No factor drawn from a subset ``S`` is longer than ``(k+1)^|S|``."""
    _check_sigma(sigma)
    caps = subset_caps(sigma, k)
    count = [0] * (1 << sigma)
    for c in x:
        bit = 1 << c
        for m in range(1, 1 << sigma):
            count[m] = count[m] + 1 if m & bit else 0
            if count[m] > caps[m]:
                return False
    return True


def lcs_kernel(inst: LcsInstance) -> LcsInstance:
    _check_sigma(inst.sigma)
    return LcsInstance(
        sweep(inst.x1, inst.sigma, inst.k), sweep(inst.x2, inst.sigma, inst.k), inst.k, inst.sigma
    )


@dataclass(frozen=True)
class KernelReport:
    n_in: int
    n_out: int
    len_x1: int
    len_x2: int
    max_cap: int

    def lines(self) -> list[str]:
        return [f"{k}={v}" for k, v in self.__dict__.items()]


def kernel_report(before: LcsInstance, after: LcsInstance) -> KernelReport:
    return KernelReport(
        n_in=len(before.x1) + len(before.x2),
        n_out=len(after.x1) + len(after.x2),
        len_x1=len(after.x1),
        len_x2=len(after.x2),
        max_cap=(before.k + 1) ** before.sigma,
    )
