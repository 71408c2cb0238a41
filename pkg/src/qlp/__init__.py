"""qlp - teleportation embeddings, channel d-norms and entanglement-restricted capacities."""

__version__ = "0.1.0"
