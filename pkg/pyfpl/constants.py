"""This module contains constants relevant to the enumerations and reports.

The limits here keep brute-force runs at desk scale (seconds to minutes).
"""
from fractions import Fraction


max_fpl_size: int = 7
"""Largest grid size of an unconstrained FPL enumeration.

Notes
-----
There are 218348 FPLs of size 7, which takes a few minutes to enumerate.
"""

max_ht_size: int = 7
"""Largest grid size of a half-turn-symmetric FPL enumeration.

"""

max_region_vertices: int = 128
"""Largest number of vertices of a region handed to the matching counter.

Notes
-----
The regions of R_ell(n; x, y) reach 66 vertices at n = 3. The side-4 hexagon
has 96 vertices and 232848 tilings, too many to enumerate one by one.
"""

max_vs_size: int = 7
"""Largest grid size of a vertically symmetric FPL enumeration.

"""

half: Fraction = Fraction(1, 2)
"""The weight of a grayed lozenge.

"""

weight_grid: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction(1, 2), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(1)),
    (Fraction(1), Fraction(1, 2)),
    (Fraction(1), Fraction(1)),
)
"""The (x, y) weight pairs of the determinant tables.

Notes
-----
This is {1/2, 1}², which contains (1/2, 1/2).
"""

ell_grid: tuple[int, ...] = (0, 1, 2)
"""The values of the row offset ℓ tabulated by the determinant tables.

"""

asm_numbers: tuple[int, ...] = (1, 1, 2, 7, 42, 429, 7436, 218348, 10850216)
"""The number of alternating sign matrices of size N, for N = 0 to 8.

Notes
-----
These equal the number of FPLs of size N.
"""

ht_asm_numbers: tuple[int, ...] = (1, 1, 2, 3, 10, 25, 140, 588, 5544)
"""The number of half-turn-symmetric alternating sign matrices of size N,
for N = 0 to 8.

"""

vs_asm_numbers: dict[int, int] = {1: 1, 3: 1, 5: 3, 7: 26, 9: 646}
"""The number of vertically symmetric alternating sign matrices of odd size.

"""

cspp_numbers: tuple[int, ...] = (1, 2, 5, 20, 132, 1452)
"""The number of cyclically symmetric plane partitions in an n-box, for n = 0
to 5.

"""
