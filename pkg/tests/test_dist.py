import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ehlin import (
    bernoulli_extremal,
    clipped_mean,
    discrete,
    load_distribution,
    mcr,
    parse_distribution,
    reward,
    reward_deriv,
)


def test_discrete_sorts_and_merges():
    d = discrete([(2.0, 0.25), (0.0, 0.5), (2.0 + 1e-14, 0.25)])
    assert d.values == (0.0, 2.0)
    assert d.probs == (0.5, 0.5)
    assert d.mean == 1.0


def test_discrete_renormalizes_small_drift():
    d = discrete([(0.0, 0.5 + 2e-10), (1.0, 0.5)])
    assert abs(math.fsum(d.probs) - 1.0) < 1e-15


@pytest.mark.parametrize(
    "pairs",
    [
        [],
        [(-1.0, 1.0)],
        [(math.inf, 1.0)],
        [(0.0, 1.2)],
        [(0.0, -0.1)],
        [(0.0, 0.4), (1.0, 0.4)],
    ],
)
def test_discrete_rejects_bad_input(pairs):
    with pytest.raises(ValueError):
        discrete(pairs)


def test_reward_values():
    assert reward(0.0) == 0.0
    assert abs(reward(math.e ** 2 - 1.0) - 1.0) < 1e-15
    assert abs(reward_deriv(0.0) - 0.5) < 1e-15
    assert abs(reward_deriv(1.0) - 0.25) < 1e-15


def test_clipped_mean_and_mcr():
    d = discrete([(0.0, 0.5), (4.0, 0.5)])
    assert clipped_mean(d, 2.0) == 1.0
    assert clipped_mean(d, 10.0) == d.mean == 2.0
    assert abs(mcr(d, 2.0) - 0.5) < 1e-15


def test_bernoulli_extremal_shape():
    d = bernoulli_extremal(5.0, 0.2)
    assert d.values == (0.0, 5.0)
    assert d.probs == (0.8, 0.2)
    assert abs(mcr(d, 5.0) - 0.2) < 1e-15


def test_parse_round_trip():
    d = discrete([(0.0, 0.75), (2.0, 0.25)])
    text = "".join(f"{v!r},{q!r}\n" for v, q in d.atoms)
    again = parse_distribution(text)
    assert again.atoms == d.atoms


def test_load_distribution(tmp_path):
    path = tmp_path / "dist.txt"
    path.write_text("# two atoms\n0.0,0.75\n2.0,0.25\n")
    d = load_distribution(path)
    assert d.values == (0.0, 2.0)
    with pytest.raises(ValueError):
        parse_distribution("0.0,0.75\n2.0,nope")


@given(
    st.lists(
        st.tuples(
            st.floats(0.0, 100.0, allow_nan=False),
            st.floats(0.01, 1.0, allow_nan=False),
        ),
        min_size=1,
        max_size=6,
    ),
    st.floats(0.01, 150.0, allow_nan=False),
)
def test_clipped_mean_properties(raw, c):
    total = sum(w for _, w in raw)
    d = discrete([(v, w / total) for v, w in raw])
    cm = clipped_mean(d, c)
    assert cm <= d.mean + 1e-12
    assert cm <= c + 1e-12
    assert cm <= clipped_mean(d, c * 2.0) + 1e-12
