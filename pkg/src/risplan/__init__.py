"""Indoor RIS deployment planning toolkit.

Plans where to install reconfigurable intelligent surfaces (RISs) in a
3D scene so that the worst test point's SNR is maximized. Ships a
deterministic image-method ray tracer, an RIS beam-broadening gain
model, a deep Q-learning search agent, and exhaustive/greedy/random
reference solvers, all behind a small CLI.
"""

__version__ = "0.1.0"
