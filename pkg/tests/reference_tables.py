"""Published reference generator tables used as fixed test vectors.

Each table is kept as literal text and parsed by the code under test; the
tests then verify the claimed structure independently.
"""

# Seven products of three transpositions on 22 points, built from an
# Eulerian circuit of K_7; a minimal one-class generating set of S_22.
BASIC_22_TABLE = """
(1 2)(5 6)(12 13)
(2 3)(9 10)(19 20)
(6 7)(16 17)(20 21)
(3 4)(13 14)(17 18)
(10 11)(14 15)(21 22)
(7 8)(11 12)(18 19)
(4 5)(8 9)(15 16)
""".strip().splitlines()

# The same construction shape over the arithmetic circuit of K_7 (laps of
# step 1, 2, 3), still type (2,2,2) on 22 points.
PRIME7_22_TABLE = """
(1 2)(11 12)(19 20)
(2 3)(8 9)(17 18)
(3 4)(12 13)(15 16)
(4 5)(9 10)(20 21)
(5 6)(13 14)(18 19)
(6 7)(10 11)(16 17)
(7 8)(14 15)(21 22)
""".strip().splitlines()

# The column-widened variant of the previous table: type (2,4,5) on 57
# points, fresh points appended column by column.
GENERAL_245_TABLE = """
(1 2)(11 23 24 12)(19 37 38 39 20)
(2 3)(8 25 26 9)(17 40 41 42 18)
(3 4)(12 27 28 13)(15 43 44 45 16)
(4 5)(9 29 30 10)(20 46 47 48 21)
(5 6)(13 31 32 14)(18 49 50 51 19)
(6 7)(10 33 34 11)(16 52 53 54 17)
(7 8)(14 35 36 15)(21 55 56 57 22)
""".strip().splitlines()
