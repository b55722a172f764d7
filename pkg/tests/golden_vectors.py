"""Known-good reference matrices for the [n=8, k=4, d=6] code over F_11.

Evaluation points are xs = (1..8); lambda_i = x_i^3.  PSI/G/G_SYS belong to
the plain Vandermonde construction, the *_SPARSE variants to the sparsified
one.  These are frozen expected values: tests compare against them entry by
entry and must not regenerate them.
"""

PSI = [
    [1, 1, 1, 1, 1, 1],
    [2, 4, 8, 5, 10, 9],
    [3, 9, 5, 4, 1, 3],
    [4, 5, 9, 3, 1, 4],
    [5, 3, 4, 9, 1, 5],
    [6, 3, 7, 9, 10, 5],
    [7, 5, 2, 3, 10, 4],
    [8, 9, 6, 4, 10, 3],
]

G = [
    [1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0],
    [0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1],
    [2, 4, 8, 0, 0, 0, 5, 10, 9, 0, 0, 0],
    [0, 2, 0, 4, 8, 0, 0, 5, 0, 10, 9, 0],
    [0, 0, 2, 0, 4, 8, 0, 0, 5, 0, 10, 9],
    [3, 9, 5, 0, 0, 0, 4, 1, 3, 0, 0, 0],
    [0, 3, 0, 9, 5, 0, 0, 4, 0, 1, 3, 0],
    [0, 0, 3, 0, 9, 5, 0, 0, 4, 0, 1, 3],
    [4, 5, 9, 0, 0, 0, 3, 1, 4, 0, 0, 0],
    [0, 4, 0, 5, 9, 0, 0, 3, 0, 1, 4, 0],
    [0, 0, 4, 0, 5, 9, 0, 0, 3, 0, 1, 4],
    [5, 3, 4, 0, 0, 0, 9, 1, 5, 0, 0, 0],
    [0, 5, 0, 3, 4, 0, 0, 9, 0, 1, 5, 0],
    [0, 0, 5, 0, 3, 4, 0, 0, 9, 0, 1, 5],
    [6, 3, 7, 0, 0, 0, 9, 10, 5, 0, 0, 0],
    [0, 6, 0, 3, 7, 0, 0, 9, 0, 10, 5, 0],
    [0, 0, 6, 0, 3, 7, 0, 0, 9, 0, 10, 5],
    [7, 5, 2, 0, 0, 0, 3, 10, 4, 0, 0, 0],
    [0, 7, 0, 5, 2, 0, 0, 3, 0, 10, 4, 0],
    [0, 0, 7, 0, 5, 2, 0, 0, 3, 0, 10, 4],
    [8, 9, 6, 0, 0, 0, 4, 10, 3, 0, 0, 0],
    [0, 8, 0, 9, 6, 0, 0, 4, 0, 10, 3, 0],
    [0, 0, 8, 0, 9, 6, 0, 0, 4, 0, 10, 3],
]

G_SYS = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [4, 2, 1, 2, 7, 8, 0, 0, 3, 2, 5, 7],
    [8, 0, 0, 7, 1, 9, 10, 0, 3, 9, 2, 5],
    [1, 6, 10, 7, 8, 10, 0, 10, 4, 10, 3, 9],
    [5, 7, 4, 2, 3, 0, 1, 3, 5, 4, 4, 9],
    [9, 2, 10, 9, 0, 3, 9, 4, 8, 3, 4, 4],
    [9, 2, 9, 3, 0, 0, 10, 2, 7, 8, 7, 2],
    [10, 7, 7, 4, 6, 8, 5, 10, 5, 10, 0, 4],
    [5, 7, 4, 4, 0, 8, 7, 4, 4, 8, 10, 0],
    [9, 9, 0, 6, 8, 9, 4, 2, 7, 0, 8, 3],
    [7, 5, 0, 5, 4, 6, 2, 7, 2, 10, 3, 7],
    [5, 8, 5, 7, 6, 0, 1, 9, 9, 0, 10, 3],
    [8, 0, 8, 4, 6, 10, 5, 3, 8, 6, 3, 6],
]

PSI_SPARSE = [
    [1, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 8, 0],
    [0, 0, 1, 0, 0, 5],
    [4, 5, 4, 3, 1, 3],
    [4, 2, 10, 5, 8, 7],
    [3, 10, 9, 10, 4, 8],
    [4, 4, 2, 8, 8, 4],
    [10, 3, 1, 5, 7, 6],
]

G_SPARSE = [
    [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 8, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 8, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 8, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 5, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 5, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 5],
    [4, 5, 4, 0, 0, 0, 3, 1, 3, 0, 0, 0],
    [0, 4, 0, 5, 4, 0, 0, 3, 0, 1, 3, 0],
    [0, 0, 4, 0, 5, 4, 0, 0, 3, 0, 1, 3],
    [4, 2, 10, 0, 0, 0, 5, 8, 7, 0, 0, 0],
    [0, 4, 0, 2, 10, 0, 0, 5, 0, 8, 7, 0],
    [0, 0, 4, 0, 2, 10, 0, 0, 5, 0, 8, 7],
    [3, 10, 9, 0, 0, 0, 10, 4, 8, 0, 0, 0],
    [0, 3, 0, 10, 9, 0, 0, 10, 0, 4, 8, 0],
    [0, 0, 3, 0, 10, 9, 0, 0, 10, 0, 4, 8],
    [4, 4, 2, 0, 0, 0, 8, 8, 4, 0, 0, 0],
    [0, 4, 0, 4, 2, 0, 0, 8, 0, 8, 4, 0],
    [0, 0, 4, 0, 4, 2, 0, 0, 8, 0, 8, 4],
    [10, 3, 1, 0, 0, 0, 5, 7, 6, 0, 0, 0],
    [0, 10, 0, 3, 1, 0, 0, 5, 0, 7, 6, 0],
    [0, 0, 10, 0, 3, 1, 0, 0, 5, 0, 7, 6],
]

G_SPARSE_SYS = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [8, 2, 4, 5, 0, 0, 10, 0, 0, 10, 0, 0],
    [0, 2, 0, 4, 10, 3, 0, 9, 0, 0, 5, 0],
    [0, 0, 4, 0, 0, 9, 8, 3, 7, 0, 0, 9],
    [9, 9, 6, 3, 0, 0, 9, 0, 0, 4, 0, 0],
    [0, 4, 0, 7, 9, 2, 0, 4, 0, 0, 9, 0],
    [0, 0, 3, 0, 0, 1, 1, 2, 10, 0, 0, 8],
    [9, 10, 2, 3, 0, 0, 5, 0, 0, 7, 0, 0],
    [0, 1, 0, 9, 6, 6, 0, 2, 0, 0, 4, 0],
    [0, 0, 7, 0, 0, 4, 4, 6, 9, 0, 0, 1],
    [1, 6, 6, 5, 0, 0, 8, 0, 0, 5, 0, 0],
    [0, 5, 0, 1, 9, 6, 0, 2, 0, 0, 1, 0],
    [0, 0, 6, 0, 0, 7, 1, 6, 9, 0, 0, 9],
]

