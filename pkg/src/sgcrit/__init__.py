"""Signed-graph homomorphisms to the negative 4-cycle, criticality and census."""
