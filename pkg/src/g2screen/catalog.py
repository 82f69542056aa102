"""Bundled example curves with their verified screening and classification data.

Each entry records a genus-2 model together with the prime p of the mod-p
screen, the real quadratic discriminant it passes against, and the expected
image label in GSp4(F_p).  These drive the regression suite and `selftest`.
Entries with image=None are auxiliary (twist companions and a known
false positive of the small-prime screen).
"""
from __future__ import annotations

from dataclasses import dataclass

from .curve import GenusTwoCurve


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    f: tuple[int, ...]
    h: tuple[int, ...]
    p: int
    field_disc: int | None
    image: str | None
    disc: int
    note: str = ""

    def curve(self) -> GenusTwoCurve:
        return GenusTwoCurve(self.f, self.h, self.label)


ENTRIES: tuple[CatalogEntry, ...] = (
    # --- mod-3 screen, field discriminant 5 ---
    CatalogEntry("p3_d5_a", (-18, -13, 31, 2, -10, 0, 1), (), 3, 5, "G480",
                 -10976000),
    CatalogEntry("p3_d5_b", (0, -20, 22, 36, -10, -20, -5), (), 3, 5, "G768'",
                 -224788480000),
    CatalogEntry("p3_d5_c", (6, -40, 74, -22, -23, -4), (1,), 3, 5, "G2304",
                 2007040000000),
    CatalogEntry("p3_d5_d", (-17, -9, 46, 10, -46, 0, 16), (), 3, 5, "G480",
                 2458624000000000),
    # --- mod-3 screen, field discriminant 8 ---
    CatalogEntry("p3_d8_a", (-26, -7, 26, 0, -8, 2), (), 3, 8, "G2304",
                 8192000),
    CatalogEntry("p3_d8_b", (-100, -60, -44, -4, -1, 1), (), 3, 8, "G2304",
                 7516192768000),
    CatalogEntry("p3_d8_c", (-29, -35, 26, 70, -17, 1), (), 3, 8, "G2304",
                 120259084288000),
    CatalogEntry("p3_d8_d", (20, 20, 6, 41, -10, -29, 13), (0, 0, 1), 3, 8, "G2304",
                 54448833445234278400),
    CatalogEntry("p3_d8_e", (-25, -5, -34, -2, -11, 1), (), 3, 8, "G768",
                 89915392000),
    CatalogEntry("p3_d8_f", (0, -49, 42, 54, -48, -41, -2), (), 3, 8, "G2304",
                 212313842367279923200),
    CatalogEntry("p3_d8_g", (-1, -13, -52, -16, 34, 2), (), 3, 8, "G768'",
                 -385512243200000),
    CatalogEntry("p3_d8_h", (-28, -21, 49, 20, -4, -24, 8), (), 3, 8, "G2304",
                 -5289227976704000000),
    # --- mod-3 screen, field discriminant 40 ---
    CatalogEntry("p3_d40_a", (1, 2, 1, 39, -8, 64), (1, 1), 3, 40, "G480",
                 246727835648000000),
    CatalogEntry("p3_d40_b", (-4, 12, 28, 20, 23, 15), (), 3, 40, "G2304",
                 -48318382080000),
    CatalogEntry("p3_d40_c", (-36, 28, 20, 28, 7, 3), (), 3, 40, "G2304",
                 386547056640000),
    # --- mod-5 screen, field discriminant 8 ---
    CatalogEntry("p5_d8_a", (-12, -54, -3, 61, -7, -22, 7), (0, 1), 5, 8, "G115200",
                 -96786192384),
    CatalogEntry("p5_d8_b", (-8, -48, -24, 8, -30, -24, 8), (), 5, 8, "G115200",
                 103418410043122384896),
    # --- auxiliary entries ---
    CatalogEntry("p3_d8_a_twist", (3, 2, 6, 4, 6, 4), (), 3, 8, None,
                 131072000000,
                 note="quadratic twist of p3_d8_a (same a_q up to the sign chi_-1(q))"),
    CatalogEntry("p5_d8_b_twist", (-1, -6, -3, 1, -4, -3, 1), (0, 0, 1), 5, 8, None,
                 96315899904,
                 note="quadratic twist of p5_d8_b"),
    CatalogEntry("d28_false_positive", (5, 10, 5, 6, -2, 1), (), 3, 85, None,
                 19652000000,
                 note="passes the q<=100 screen against D=28 by accidental trace"
                      " vanishing at q in {23,73,89,97}; a_151 rules D=28 out;"
                      " the genuine field has discriminant 85"),
)

BY_LABEL: dict[str, CatalogEntry] = {e.label: e for e in ENTRIES}


def table_entries(p: int | None = None) -> list[CatalogEntry]:
    """The verified entries (image known), optionally restricted to one p."""
    return [e for e in ENTRIES if e.image is not None and (p is None or e.p == p)]
