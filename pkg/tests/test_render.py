"""SVG rendering of real configurations."""

import re

import pytest

from linespectra.constructions import boroczky, fermat, grid, near_pencil
from linespectra.fields import quadratic_field
from linespectra.projective import Configuration, ProjectivePoint, spectrum
from linespectra.render import RenderError, render_svg


def counts(svg):
    return len(re.findall(r"<circle", svg)), len(re.findall(r"<line", svg))


def test_boroczky6_draws_every_point_and_line():
    svg = render_svg(boroczky(6))
    s = spectrum(boroczky(6))
    assert counts(svg) == (12, s.total_lines) == (12, 22)


def test_near_pencil_draws_all_lines():
    svg = render_svg(near_pencil(5))
    assert counts(svg) == (5, 5)


def test_grid_renders():
    svg = render_svg(grid(3, 3))
    assert counts(svg) == (9, 20)
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>\n")


def test_segments_stay_inside_the_canvas():
    svg = render_svg(grid(4, 4), size=500)
    assert 'width="500"' in svg
    coords = [float(v) for v in re.findall(r'[xy][12]="(-?[\d.]+)"', svg)]
    assert coords
    assert all(-0.5 <= c <= 500.5 for c in coords)


def test_point_markers_carry_radius():
    svg = render_svg(near_pencil(4))
    assert re.search(r'<circle [^>]*r="', svg)


def test_quadratic_field_configuration_renders():
    F = quadratic_field(2)
    config = Configuration(
        F,
        (
            ProjectivePoint((F.zero(), F.zero(), F.one()), F),
            ProjectivePoint((F.one(), F.sqrt_gen(), F.one()), F),
            ProjectivePoint((F.sqrt_gen(), F.one(), F.one()), F),
            ProjectivePoint((F.one(), F.one(), F.one()), F),
        ),
    )
    svg = render_svg(config)
    assert counts(svg)[0] == 4


def test_non_real_configuration_is_refused():
    with pytest.raises(RenderError):
        render_svg(fermat(3))


def test_margin_and_size_are_tunable():
    small = render_svg(grid(2, 2), size=200, margin=0.25)
    assert 'viewBox="0 0 200 200"' in small
