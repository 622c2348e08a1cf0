"""RatProg turns sampled metrics of a GPU kernel into a rational program.

A rational program is branching three-address code whose arithmetic is
exact rational arithmetic. RatProg builds one per kernel in four steps:

    * sample the low level metrics of the kernel over data sizes and
      thread block shapes (:mod:`ratprog.datakit`)
    * fit a rational function of ``(D..., bx, by)`` to every metric
      (:mod:`ratprog.polyfit`)
    * splice the fitted functions into the occupancy and MWP-CWP models
      of :mod:`ratprog.perfmodel`, producing a :mod:`ratprog.ir` program
    * evaluate the program over the configuration space when the data
      size is known and keep the shape with the fewest estimated cycles
      (:mod:`ratprog.pipeline`)

Everything is reachable from the ``ratprog`` command line.
"""
from .release import version

__version__ = version
