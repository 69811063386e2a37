"""Graph avoidance games: families, automorphism searches, a game engine with
scripted strategies, exhaustive solvers, and complexity reductions."""

__version__ = "0.1.0"
