import pytest

from soficaut import bundled, cover_from_sft, SftSpec, orbit_id

GOLDEN_FORBIDDEN = ("11",)
EVEN_EDGES = (("A", "0", "A"), ("A", "1", "B"), ("B", "1", "A"))


@pytest.fixture(scope="session")
def golden():
    return bundled("golden_mean")


@pytest.fixture(scope="session")
def even():
    return bundled("even")


@pytest.fixture(scope="session")
def full2():
    return cover_from_sft(SftSpec(("0", "1"), ()))


@pytest.fixture(scope="session")
def m01(golden):
    return orbit_id("01", golden)


# cylinders in the fiber of (01) over the golden mean: every point there
# starts with 100, so these four are pairwise disjoint and proper
FAMILY = ("10000", "10001", "100100", "100101")
