"""Brute-force finite group laboratory: SL(2, q), SL(3, q) and friends."""
