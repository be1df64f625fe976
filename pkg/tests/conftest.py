"""Shared test helpers: independent linear-constraint oracle for couplings."""

import numpy as np

from dsrep.blocks import BlockLabel, hla_cartesian


def coupling_null_space_dim(p: BlockLabel, q: BlockLabel, tol: float = 1e-8) -> int:
    """Dimension of the space of (Vt, Vx, Vy, Vz) rectangles between blocks
    P and Q allowed by the rotation/boost commutation relations alone.

    Independent of the production coupling tables: sets up the homogeneous
    linear system for the four off-diagonal rectangles directly from
    [Ji, Vj] = i eps Vk, [Ji, Vt] = 0, [Ki, Vj] = -i Vt delta_ij,
    [Ki, Vt] = -i Vi, and counts its null space by SVD.
    """
    jp = hla_cartesian(p)
    jq = hla_cartesian(q)
    m, n = p.dim, q.dim
    size = m * n
    eye_m = np.eye(m)
    eye_n = np.eye(n)

    def left_mult(x):
        return np.kron(x, eye_n)

    def right_mult(x):
        return np.kron(eye_m, x.T)

    # unknown order: vec(Vt), vec(Vx), vec(Vy), vec(Vz), row-major vecs
    names = ["t", "x", "y", "z"]
    pos = {name: i for i, name in enumerate(names)}
    eps = {}
    for i, a in enumerate("xyz"):
        for j, b in enumerate("xyz"):
            for k, c in enumerate("xyz"):
                sign = (i - j) * (j - k) * (k - i) / 2
                if sign:
                    eps[(a, b, c)] = sign

    j_of = {"x": 0, "y": 1, "z": 2}
    rows = []

    def adjoint(axis, generator_offset):
        """Matrix of V -> [X_axis, V] on one rectangle, X in {J, K}."""
        xp = jp[generator_offset + j_of[axis]]
        xq = jq[generator_offset + j_of[axis]]
        return left_mult(xp) - right_mult(xq)

    zero = np.zeros((size, size), dtype=complex)

    def relation(blocks):
        row = [zero, zero, zero, zero]
        for name, coeff_matrix in blocks.items():
            row[pos[name]] = row[pos[name]] + coeff_matrix
        rows.append(np.hstack(row))

    for i in "xyz":
        # [Ji, Vj] = i eps_ijk Vk
        for j in "xyz":
            blocks = {j: adjoint(i, 0)}
            for k in "xyz":
                if (i, j, k) in eps:
                    blocks[k] = blocks.get(k, zero) - 1j * eps[(i, j, k)] * np.eye(size)
            relation(blocks)
        # [Ji, Vt] = 0
        relation({"t": adjoint(i, 0)})
        # [Ki, Vj] = -i Vt delta_ij
        for j in "xyz":
            blocks = {j: adjoint(i, 3)}
            if i == j:
                blocks["t"] = blocks.get("t", zero) + 1j * np.eye(size)
            relation(blocks)
        # [Ki, Vt] = -i Vi
        relation({"t": adjoint(i, 3), i: 1j * np.eye(size)})

    system = np.vstack(rows)
    singular = np.linalg.svd(system, compute_uv=False)
    scale = singular[0] if singular.size and singular[0] > 0 else 1.0
    rank = int(np.sum(singular > tol * scale))
    return 4 * size - rank
