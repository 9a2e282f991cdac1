"""Pure-Python reference kernels.

Same contracts as the Cython module ``_fastkern``; selected by ``_backend``
when the compiled extension is missing (or forced via MONOCOMP_PURE=1).
These are the slow-but-obvious versions: the compiled kernels must agree
with them exactly, and the parity tests assert that they do.
"""

from __future__ import annotations

from .errors import BudgetExceeded

BACKEND_NAME = "python"


def mc_min_max(n, edges, r, budget):
    """Minimum over canonical r-colorings of the largest mono component.

    Colorings are enumerated with colors in first-use order (the first edge
    always gets color 0), which enumerates each color-class partition once
    instead of r! times.  No other pruning: the budget is a count of complete
    colorings visited, and exceeding it raises BudgetExceeded.

    Returns (value, visited).
    """
    m = len(edges)
    if n <= 0:
        return 0, 0
    if budget < 1:
        raise BudgetExceeded("mc_exact budget must allow at least one coloring", 0, None)
    if m == 0:
        return 1, 1

    # one undoable union-find per color (union by size, no path compression)
    parent = [list(range(n)) for _ in range(r)]
    size = [[1] * n for _ in range(r)]

    def find(pc, v):
        while pc[v] != v:
            v = pc[v]
        return v

    best = n + 1
    visited = 0

    # iterative DFS over edges; frame = (edge idx, color, used, prev_max, undo list)
    def rec(i, used, cur_max):
        nonlocal best, visited
        if i == m:
            visited += 1
            if visited > budget:
                raise BudgetExceeded(
                    f"mc_exact visited more than {budget} colorings",
                    visited,
                    best if best <= n else None,
                )
            if cur_max < best:
                best = cur_max
            return
        vs = edges[i]
        hi = used if used < r else r - 1
        for c in range(hi + 1):
            pc = parent[c]
            sc = size[c]
            undo = []
            new_max = cur_max
            rt = find(pc, vs[0])
            for v in vs[1:]:
                rv = find(pc, v)
                if rv != rt:
                    if sc[rt] < sc[rv]:
                        rt, rv = rv, rt
                    pc[rv] = rt
                    sc[rt] += sc[rv]
                    undo.append((rv, rt))
                    if sc[rt] > new_max:
                        new_max = sc[rt]
            rec(i + 1, used + (1 if c == used else 0), new_max)
            for rv, rt2 in reversed(undo):
                sc[rt2] -= sc[rv]
                pc[rv] = rv
        return

    rec(0, 0, 1)
    return best, visited


def _alloc_ub(a, b, c):
    # best achievable min(a + t, b + (c - t)) when c shared items are split
    if a > b:
        a, b = b, a
    if c <= b - a:
        return a + c
    return (a + b + c) // 2


def best_cross_pair(n, adj, node_budget=0):
    """Largest a with disjoint A, B (|A| = |B| = a) and no adjacency between
    A and B, over the conflict graph given as per-vertex bitmasks.

    Branch and bound over vertex assignments {A, B, skip}; the first placed
    vertex goes to A (swap symmetry).  Returns (a, a_mask, b_mask).
    node_budget 0 means unlimited; otherwise BudgetExceeded past that many
    search nodes.
    """
    if n <= 0:
        return 0, 0, 0
    full = (1 << n) - 1
    best = 0
    bx = by = 0
    nodes = 0

    def rec(X, Y, nx, ny, candX, candY):
        nonlocal best, bx, by, nodes
        nodes += 1
        if node_budget and nodes > node_budget:
            raise BudgetExceeded("cross-pair search exceeded node budget", nodes, best)
        cur = nx if nx < ny else ny
        if cur > best:
            best, bx, by = cur, X, Y
        both = candX & candY
        ub = _alloc_ub(
            nx + (candX & ~both).bit_count(),
            ny + (candY & ~both).bit_count(),
            both.bit_count(),
        )
        if ub <= best:
            return
        cand = candX | candY
        # branch on the candidate with most conflicts among candidates
        v = -1
        vdeg = -1
        w = cand
        while w:
            u = (w & -w).bit_length() - 1
            w &= w - 1
            d = (adj[u] & cand).bit_count()
            if d > vdeg:
                vdeg = d
                v = u
        bit = 1 << v
        in_x = bool(candX & bit)
        in_y = bool(candY & bit) and (X | Y) != 0  # first placement goes to A
        # balance: grow the smaller side first
        branches = []
        if in_x and in_y:
            if nx <= ny:
                branches = ["x", "y"]
            else:
                branches = ["y", "x"]
        elif in_x:
            branches = ["x"]
        elif in_y:
            branches = ["y"]
        for b in branches:
            if b == "x":
                rec(X | bit, Y, nx + 1, ny, candX & ~bit, candY & ~bit & ~adj[v])
            else:
                rec(X, Y | bit, nx, ny + 1, candX & ~bit & ~adj[v], candY & ~bit)
        rec(X, Y, nx, ny, candX & ~bit, candY & ~bit)

    rec(0, 0, 0, 0, full, full)
    return best, bx, by
