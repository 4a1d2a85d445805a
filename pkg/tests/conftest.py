import json

import pytest

from scottlab import groups as gr
from scottlab import verifiers as vf
from scottlab.gf import FieldCtx


@pytest.fixture(scope="session")
def corpus_groups():
    """name -> FiniteGroup for every non-slow builtin corpus entry."""
    out = {}
    for spec in vf.builtin_corpus():
        if spec.get("slow"):
            continue
        G = gr.load_group(spec)
        out[G.name] = G
    return out


@pytest.fixture(scope="session")
def gf2():
    return FieldCtx(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return FieldCtx(3, 1)


@pytest.fixture(scope="session")
def s3():
    return gr.FiniteGroup.from_permutations(3, [(1, 0, 2), (1, 2, 0)], name="S3")


@pytest.fixture(scope="session")
def s4():
    return gr.FiniteGroup.from_permutations(4, [(1, 2, 3, 0), (1, 0, 2, 3)], name="S4")
