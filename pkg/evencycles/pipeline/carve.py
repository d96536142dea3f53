from ..core.certificates import Cycle, CycleFamily
from ..errors import ContractViolation, InsufficientS


def alternating_cycle(side_a, side_b):
    """a0 b0 a1 b1 ...: a cycle of length 2j inside a biclique with j vertices per side."""
    if len(side_a) != len(side_b) or len(side_a) < 2:
        raise ContractViolation("alternating cycle needs two equal sides of size >= 2")
    return Cycle(vertices=tuple(v for pair in zip(side_a, side_b) for v in pair))


def carve_from_kss(cert, k):
    """
    k disjoint cycles of lengths 4, 6, ..., 2k+2 from a K_{s,s}; the cycle of
    length 2j+2 takes j+1 vertices from each side.

    Raises:
        InsufficientS: cert.s < (k^2+3k)/2
    """
    need = (k * k + 3 * k) // 2
    if cert.s < need or len(cert.side_a) < need or len(cert.side_b) < need:
        raise InsufficientS(f"K_{{{cert.s},{cert.s}}} is too small for k={k} (needs s >= {need})")
    side_a = sorted(cert.side_a)[:need]
    side_b = sorted(cert.side_b)[:need]
    cycles = []
    offset = 0
    for j in range(1, k + 1):
        cycles.append(alternating_cycle(side_a[offset:offset + j + 1], side_b[offset:offset + j + 1]))
        offset += j + 1
    if offset != need:
        raise ContractViolation(f"carving consumed {offset} vertices per side, expected {need}")
    return CycleFamily.from_cycles(cycles, disjoint=True)
