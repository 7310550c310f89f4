import xml.etree.ElementTree as ET
from fractions import Fraction as Q

import pytest

from toric_bdiv.errors import UnsupportedRepresentation
from toric_bdiv.geometry import Region
from toric_bdiv.monomial import MonomialIdeal
from toric_bdiv.plotting import fan_svg, plot_svg, vertices_csv

SVG = "{http://www.w3.org/2000/svg}"


def test_staircase_and_region_svg_is_wellformed():
    a = MonomialIdeal(2, ((3, 0), (1, 1), (0, 2)))
    svg = plot_svg(ideal=a, region=Region(((3, 0), (1, 1), (0, 2))))
    root = ET.fromstring(svg.split("\n", 1)[1])
    assert root.get("viewBox") == "-1 -1 7 7"
    assert len(root.findall(f"{SVG}polygon")) == 2
    assert len(root.findall(f"{SVG}circle")) == 6
    assert svg == plot_svg(ideal=a, region=Region(((3, 0), (1, 1), (0, 2))))


def test_y_axis_points_up():
    svg = plot_svg(ideal=MonomialIdeal(2, ((0, 3), (1, 0))))
    root = ET.fromstring(svg.split("\n", 1)[1])
    ys = {c.get("cx"): c.get("cy") for c in root.findall(f"{SVG}circle")}
    assert ys == {"0": "2", "1": "5"}


def test_fan_labels():
    svg = fan_svg([(1, 0), (1, 1), (0, 1)], ["0", "-6/5", "0"])
    assert "(1,1): -6/5" in svg


def test_three_dimensional_rejected():
    with pytest.raises(UnsupportedRepresentation):
        plot_svg(ideal=MonomialIdeal.maximal(3))


def test_csv():
    assert vertices_csv([(Q(1, 2), 0), (0, 3)]) == "u1,u2\n1/2,0\n0,3\n"
