from __future__ import annotations

import pytest

from linarr.exactfield import finite_field
from linarr.families import FamilySpec, generate_with_incidence

PG_ORDERS = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2)}


def corpus_specs() -> list[tuple[str, FamilySpec]]:
    specs = []
    specs += [(f"pencil-{d}", FamilySpec("pencil", (d,))) for d in (3, 4, 5, 6)]
    specs += [(f"near-pencil-{d}", FamilySpec("near-pencil", (d,))) for d in (4, 5, 6, 7)]
    specs += [(f"general-{d}", FamilySpec("general", (d,))) for d in range(4, 9)]
    specs.append(("quadrilateral", FamilySpec("quadrilateral", ())))
    specs += [(f"polygon-{n}", FamilySpec("polygon", (n,))) for n in range(3, 9)]
    specs += [(f"ceva-{n}", FamilySpec("ceva", (n,))) for n in range(4, 8)]
    specs.append(("dual-hesse", FamilySpec("dual-hesse", ())))
    specs.append(("hesse", FamilySpec("hesse", ())))
    specs += [(f"pg-{q}", FamilySpec("pg", pk)) for q, pk in PG_ORDERS.items()]
    specs += [(f"right-triangle-{n}", FamilySpec("right-triangle", (n,))) for n in range(3, 9)]
    specs.append(("ceva-3-gf7", FamilySpec("ceva", (3,), finite_field(7))))
    specs.append(("pencil-plus-10-3", FamilySpec("pencil-plus", (10, 3))))
    return specs


@pytest.fixture(scope="session")
def corpus():
    """label -> (spec, arrangement, incidence structure)."""
    out = {}
    for label, spec in corpus_specs():
        arr, inc = generate_with_incidence(spec)
        out[label] = (spec, arr, inc)
    return out
