"""Optional plotting helper shared by the demo scripts."""

import os

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "figures")


def figure(name, draw):
    """Call ``draw(plt)`` and save ``figures/<name>.png`` if matplotlib is importable."""
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        return None
    os.makedirs(OUT, exist_ok=True)
    fig = draw(plt)
    path = os.path.join(OUT, f"{name}.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    print("saved", path)
    return path
