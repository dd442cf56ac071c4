from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from qfock.algebra import LaurentPoly
from qfock.combinatorics import partitions

DATA = Path(__file__).parent / "data"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def golden_n2_l2() -> dict:
    return json.loads((DATA / "golden_n2_l2.json").read_text())


@pytest.fixture(scope="session")
def golden_n3_l2() -> dict:
    return json.loads((DATA / "golden_n3_l2.json").read_text())


def polys(max_terms: int = 4, span: int = 5, coeff: int = 5) -> st.SearchStrategy[LaurentPoly]:
    return st.dictionaries(
        st.integers(-span, span), st.integers(-coeff, coeff), max_size=max_terms
    ).map(LaurentPoly)


def small_partitions(max_size: int) -> st.SearchStrategy[tuple[int, ...]]:
    pool = [lam for k in range(max_size + 1) for lam in partitions(k)]
    return st.sampled_from(pool)


def poly_from_json(data) -> LaurentPoly:
    return LaurentPoly.from_json(data)
