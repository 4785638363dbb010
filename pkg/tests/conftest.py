from pathlib import Path

import pytest

from pcwnc import parse_profile

DATA = Path(__file__).parent / "data"


def load(name, allow_new=False):
    return parse_profile((DATA / name).read_text(), allow_new=allow_new)


@pytest.fixture
def example1():
    """19 votes over x*, x1..x6; x* needs three new candidates under 2-approval."""
    return load("example1.profile")


@pytest.fixture
def borda_example():
    """3 x b>a>c>d, 1 x d>a>c>b."""
    return load("borda_example.profile")


@pytest.fixture
def plurality_example():
    """Top counts a=6, b=4, c=3."""
    return parse_profile("candidates: a,b,c\n6: a>b>c\n4: b>c>a\n3: c>a>b\n")
