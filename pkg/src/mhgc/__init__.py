"""Exact-arithmetic engine for finite-dimensional multiplier Hopf group
coalgebras: axiom verification, derived structure (counit, antipode,
integrals, modular data), the direct-sum correspondence, duality, and
module actions, all over exact rationals."""

__version__ = "0.1.0"
