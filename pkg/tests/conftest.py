import pytest

from mub3q import gf8, phasespace, reference


def tk(token: str) -> int:
    return gf8.from_token(token)


def seed_from_tokens(row1, row2) -> phasespace.SeedSet:
    return phasespace.SeedSet(
        row1=tuple((tk(a), tk(b)) for a, b in row1),
        row2=tuple((tk(a), tk(b)) for a, b in row2),
    )


@pytest.fixture(scope="session")
def example_tables():
    """The six reference tables keyed by example name and solution tokens."""
    out = {}
    for example in reference.EXAMPLES:
        for tokens, table in zip(example.expected_free, reference.example_tables(example)):
            out[(example.name, tokens)] = table
    return out


@pytest.fixture(scope="session")
def three_axes_m3_table(example_tables):
    return example_tables[("three-axes", ("m3",))]
