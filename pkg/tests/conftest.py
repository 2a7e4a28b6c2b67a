import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bicat.core import JOIN2, TRIVIAL, Z3, bz2, chaotic, deloop_monoid, one, p2, two_group_z2  # noqa: E402
from bicat.fixtures import FUNCTORS  # noqa: E402


def accepted_bicategories():
    """Every fixture bicategory that must pass the validator, by name."""
    out = {f"chaotic({n})": chaotic(n) for n in (1, 2, 3, 4)}
    out.update(
        {
            "B(trivial)": deloop_monoid(TRIVIAL),
            "BZ2": bz2(),
            "B(join2)": deloop_monoid(JOIN2),
            "BZ3": deloop_monoid(Z3),
            "P2": p2(),
            "One": one(),
            "two_group_w0": two_group_z2(False),
            "two_group_w1": two_group_z2(True),
        }
    )
    return out


@pytest.fixture(scope="session")
def accepted():
    return accepted_bicategories()


@pytest.fixture(scope="session")
def functors():
    return {name: make() for name, make in FUNCTORS.items()}
