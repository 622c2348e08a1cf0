"""Hardware occupancy: how many blocks and warps of a kernel are resident on an SM."""
from .device import WARP_SIZE


def active_blocks(hw, R, Z, T):
    """Resident blocks per SM for ``R`` registers per thread, ``Z`` shared
    words per block and ``T`` threads per block.

    The smallest of the four hardware limits, 0 when the kernel fails
    to launch.
    """
    if T < 1 or T > hw.T_max:
        return 0
    warps_per_block = -(-T // WARP_SIZE)
    limits = [hw.B_max, hw.W_max // warps_per_block]
    if R:
        limits.append(hw.R_max // (R * T))
    if Z:
        limits.append(hw.Z_max // Z)
    blocks = min(limits)
    return blocks if blocks >= 1 else 0


def active_warps(hw, B_active, T):
    return min((B_active * T) // WARP_SIZE, hw.W_max)


def occupancy(hw, R, Z, T):
    """Ratio of resident warps to the warps an SM can hold."""
    return active_warps(hw, active_blocks(hw, R, Z, T), T) / hw.W_max
