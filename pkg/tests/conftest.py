import os

from hypothesis import HealthCheck, settings, strategies as st

from orbidim.lie import Family, LieType
from orbidim.orbifold import Geometry, OrbifoldSignature, classify_geometry, euler_char, is_bad

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

orders = st.integers(min_value=2, max_value=12)


@st.composite
def lie_types(draw, max_param=20):
    fam = draw(st.sampled_from(list(Family)))
    if fam.exceptional:
        return LieType(fam)
    lo = {Family.PSL: 2, Family.PO_EVEN: 3}.get(fam, 1)
    return LieType(fam, draw(st.integers(lo, max_param)))


@st.composite
def closed_orientable(draw):
    genus = draw(st.integers(0, 3))
    cones = draw(st.lists(orders, max_size=5))
    return OrbifoldSignature(underlying_genus=genus, cones=tuple(cones))


@st.composite
def mirror_discs(draw):
    """Discs with mirror boundary: cones inside, corners on the mirror, and
    optionally b mirror intervals cutting the boundary circle."""
    cones = draw(st.lists(orders, max_size=3))
    corners = draw(st.lists(orders, max_size=5))
    b = draw(st.integers(0, 2))
    return OrbifoldSignature(underlying_boundary_circles=1, cones=tuple(cones), corners=tuple(corners),
                             mirror_intervals=b, full_mirror_circles=0 if b else 1)


@st.composite
def bounded_orientable(draw):
    genus = draw(st.integers(0, 2))
    c = draw(st.integers(1, 3))
    cones = draw(st.lists(orders, max_size=4))
    return OrbifoldSignature(underlying_genus=genus, underlying_boundary_circles=c,
                             boundary_circles=c, cones=tuple(cones))


@st.composite
def general_signatures(draw):
    """Any surface, any mix of boundary types."""
    orientable = draw(st.booleans())
    genus = draw(st.integers(0 if orientable else 1, 2))
    c = draw(st.integers(0, 2))
    full = draw(st.integers(0, 2))
    mixed = draw(st.integers(0, 2))
    b = mixed + draw(st.integers(0, 2)) if mixed else 0
    has_mirror = full + mixed > 0
    return OrbifoldSignature(
        underlying_orientable=orientable, underlying_genus=genus,
        underlying_boundary_circles=c + full + mixed,
        cones=tuple(draw(st.lists(orders, max_size=3))),
        corners=tuple(draw(st.lists(orders, max_size=3))) if has_mirror else (),
        boundary_circles=c, mirror_intervals=b, full_mirror_circles=full,
    )


def hyperbolic(o):
    if o.closed:
        return classify_geometry(o) is Geometry.HYPERBOLIC
    return not is_bad(o) and euler_char(o) < 0


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, format_line
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(RESULTS):
        ok, detail = RESULTS[i]
        line = format_line(i, ok, detail)
        terminalreporter.write_line(line if len(line) < 400 else line[:400] + " ...)")
