"""RatProg project related information"""
version = "0.3.0"
description = "Rational programs for choosing GPU thread-block configurations"
long_description = """
RatProg builds *rational programs*: branching three-address code whose only
arithmetic is exact rational arithmetic. From sampled low-level metrics of a
parallel kernel it fits rational functions of the data size and the thread
block shape, splices them into the occupancy and MWP-CWP execution models,
and produces a program that, given a data size, picks the thread block
configuration with the lowest estimated clock-cycle count.

It provides:

 * an IR with validator, interpreter, control-flow graphs and a text format
 * degree-bounded multivariate rational function fitting through the SVD
 * the CUDA occupancy and MWP-CWP models, both direct and as emitted IR
 * sample collection helpers, a synthetic instrumentor and CSV I/O
 * exhaustive configuration search, C source emission and reports
"""
author = "The RatProg developers"
copyright = """Copyright 2024-2026 The RatProg developers"""
license = "MIT"
