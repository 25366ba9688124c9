"""
State enumeration for the naive engine. The worker functions take a
single argument dict so they can be handed to multiprocessing.Pool.
"""
from collections import Counter


class UnionFind:
    """
    Union-find over arc indices 0..n-1 with path halving
    """

    def __init__(self, n):
        self.parents = list(range(n))

    def root(self, v):
        parents = self.parents
        while parents[v] != v:
            parents[v] = parents[parents[v]]
            v = parents[v]
        return v

    def join(self, v1, v2):
        r1 = self.root(v1)
        r2 = self.root(v2)
        if r1 != r2:
            self.parents[r1] = r2
            return True
        return False

    def count_roots(self):
        return sum(1 for v, p in enumerate(self.parents) if v == p)


def count_loops(n_arcs, joins):
    """
    Number of closed curves left after joining arc index pairs
    """
    uf = UnionFind(n_arcs)
    merged = 0
    for x, y in joins:
        if uf.join(x, y):
            merged += 1
    return n_arcs - merged


def count_states(args):
    """
    Tally the states in [start, stop) of the naive expansion
    ----
    Input (args dict):
    n_arcs    : number of arcs touching a crossing
    smoothings: per crossing, (vertical pairs, horizontal pairs) of arc indices
    signs     : per crossing, +1 / -1 for classical and 0 for pseudo
    fixed     : arc index pairs joined in every state (pinned crossings)
    start, stop: bit patterns to visit, bit k set means crossing k is horizontal

    Output:
    Counter keyed by (A exponent, vertical pseudo count,
                      horizontal pseudo count, loops)
    """
    n_arcs = args["n_arcs"]
    smoothings = args["smoothings"]
    signs = args["signs"]
    fixed = args.get("fixed", ())
    tally = Counter()
    for state in range(args["start"], args["stop"]):
        uf = UnionFind(n_arcs)
        merged = 0
        for x, y in fixed:
            if uf.join(x, y):
                merged += 1
        a_exp = 0
        n_vert = 0
        n_hori = 0
        for k, (vertical, horizontal) in enumerate(smoothings):
            if (state >> k) & 1:
                pairs = horizontal
                if signs[k]:
                    a_exp -= signs[k]
                else:
                    n_hori += 1
            else:
                pairs = vertical
                if signs[k]:
                    a_exp += signs[k]
                else:
                    n_vert += 1
            for x, y in pairs:
                if uf.join(x, y):
                    merged += 1
        tally[(a_exp, n_vert, n_hori, n_arcs - merged)] += 1
    return tally
