from singspec.catalog import named

A1_N3_D = [3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50, 100, 1000]
A1_N4_D = [3, 4, 5, 6, 7, 10, 20, 30, 40, 50, 100]
E6_N3_D = [4, 5, 6, 7, 10, 20, 30, 40, 50, 100, 1000]

# (n, d, germ) for every cell of the reference tables
TABLE_GRID = (
    [(3, d, named("A", [1], 3)) for d in A1_N3_D]
    + [(4, d, named("A", [1], 4)) for d in A1_N4_D]
    + [(3, d, named("E6t", variables=3)) for d in E6_N3_D]
)


def cell_id(cell):
    n, d, g = cell
    return f"{g.label}-n{n}-d{d}"
