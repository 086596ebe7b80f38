"""Exact symbolic engine for U(osp(1|2))^{#n}, its R-matrix and the
Bannai-Ito relations among intermediate Casimir elements."""

__version__ = "0.1.0"
