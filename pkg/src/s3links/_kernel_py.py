"""Pure-Python coloring search, used when the compiled kernel is absent.

Colors are element indices 1..5 (0 is the identity and marks "unset").
"""

from .group import CONJ_INV_TABLE, CONJ_TABLE


def _incidence(num_arcs, over, under_in, under_out):
    inc = [[] for _ in range(num_arcs)]
    for i in range(len(over)):
        for a in {over[i], under_in[i], under_out[i]}:
            inc[a].append(i)
    return inc


class _Search:
    def __init__(self, num_arcs, over, under_in, under_out, sign):
        self.n = num_arcs
        self.over = over
        self.uin = under_in
        self.uout = under_out
        self.fwd = [CONJ_TABLE if s > 0 else CONJ_INV_TABLE for s in sign]
        self.bwd = [CONJ_INV_TABLE if s > 0 else CONJ_TABLE for s in sign]
        self.inc = _incidence(num_arcs, over, under_in, under_out)
        self.col = [0] * num_arcs
        self.trail = []

    def assign(self, a, v):
        """Set arc ``a`` to ``v`` and propagate; False on conflict."""
        col = self.col
        col[a] = v
        self.trail.append(a)
        queue = [a]
        while queue:
            b = queue.pop()
            for i in self.inc[b]:
                x = col[self.over[i]]
                if not x:
                    continue
                y = col[self.uin[i]]
                z = col[self.uout[i]]
                if y:
                    want = self.fwd[i][x][y]
                    if not z:
                        c = self.uout[i]
                        col[c] = want
                        self.trail.append(c)
                        queue.append(c)
                    elif z != want:
                        return False
                elif z:
                    c = self.uin[i]
                    col[c] = self.bwd[i][x][z]
                    self.trail.append(c)
                    queue.append(c)
        return True

    def undo(self, mark):
        col, trail = self.col, self.trail
        while len(trail) > mark:
            col[trail.pop()] = 0

    def run(self, out, start):
        col = self.col
        a = start
        while a < self.n and col[a]:
            a += 1
        if a == self.n:
            out.append(tuple(col))
            return
        for v in range(1, 6):
            mark = len(self.trail)
            if self.assign(a, v):
                self.run(out, a + 1)
            self.undo(mark)


def enumerate_colorings(num_arcs, over, under_in, under_out, sign, fixed=None):
    """All valid colorings extending ``fixed`` in lexicographic order."""
    s = _Search(num_arcs, over, under_in, under_out, sign)
    out = []
    if fixed is not None:
        for a, v in enumerate(fixed):
            if v and not s.col[a]:
                if not s.assign(a, v):
                    return out
            elif v and s.col[a] != v:
                return out
    s.run(out, 0)
    return out


def propagate(num_arcs, over, under_in, under_out, sign, fixed):
    """Close ``fixed`` under forced deductions.

    Returns the (possibly partial) color list, or ``None`` on conflict.
    """
    s = _Search(num_arcs, over, under_in, under_out, sign)
    for a, v in enumerate(fixed):
        if not v:
            continue
        if s.col[a]:
            if s.col[a] != v:
                return None
        elif not s.assign(a, v):
            return None
    return list(s.col)
