# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled DFS kernel; exact twin of rep132._kernel_py (see its docstring).

Traversal order, pruning decisions and statistics must stay byte-identical
with the pure-Python reference — equivalence is enforced by tests.
"""

MAX_N = 15

# letter arrays are sized 16 (letters 0..15); prefix depth <= 15 * copies


cdef struct _State:
    int n
    int min_copies
    int max_copies
    bint forbid_132
    bint find_all
    bint prune_pattern
    bint prune_edges
    bint prune_exhausted
    unsigned long long budget
    unsigned long long nodes
    unsigned long long tested
    bint exceeded
    unsigned int full
    unsigned int adj[16]
    unsigned int nonedge[16]
    int counts[16]
    unsigned int seen_since[16]
    unsigned int nonalt[16]
    int prefix[64]
    int depth


cdef int _rec(_State* st, list witnesses, unsigned int forbidden, int cur_min,
              bint has132, unsigned int exhausted, int deficient):
    cdef int c, y, x, i, ch_min, ch_def
    cdef bint creates132, ch_has132, stop, ok, na_saved
    cdef unsigned int bitc, bad, t, low, ch_forb, ch_exh
    cdef unsigned int old_ss[16]
    cdef unsigned int old_na[16]

    for c in range(1, st.n + 1):
        if st.counts[c] == st.max_copies:
            continue
        bitc = (<unsigned int>1) << c
        creates132 = (forbidden & bitc) != 0
        if st.prune_pattern and st.forbid_132 and creates132:
            continue
        if st.counts[c]:
            bad = st.full & ~bitc & ~st.seen_since[c]
        else:
            bad = 0
        if st.prune_edges and (bad & st.adj[c]):
            continue
        if (st.prune_exhausted and st.counts[c] + 1 == st.max_copies
                and (exhausted & st.nonedge[c] & ~(st.nonalt[c] | bad))):
            continue
        if st.budget and st.nodes >= st.budget:
            st.exceeded = True
            return 1
        st.nodes += 1

        st.counts[c] += 1
        st.prefix[st.depth] = c
        st.depth += 1
        for y in range(st.n + 1):
            old_ss[y] = st.seen_since[y]
        st.seen_since[c] = 0
        for y in range(1, st.n + 1):
            if y != c:
                st.seen_since[y] |= bitc
        na_saved = False
        if bad:
            na_saved = True
            for y in range(st.n + 1):
                old_na[y] = st.nonalt[y]
            st.nonalt[c] |= bad
            t = bad
            while t:
                low = t & (~t + 1)
                t ^= low
                y = 0
                while low > 1:
                    low >>= 1
                    y += 1
                st.nonalt[y] |= bitc

        ch_has132 = has132 or creates132
        ch_forb = forbidden
        if 0 < cur_min < c:
            ch_forb |= (((<unsigned int>1) << c) - 1) & ~(((<unsigned int>1) << (cur_min + 1)) - 1)
        ch_min = c if (cur_min == 0 or c < cur_min) else cur_min
        ch_exh = exhausted
        if st.counts[c] == st.max_copies:
            ch_exh |= bitc
        ch_def = deficient - 1 if st.counts[c] == st.min_copies else deficient

        stop = False
        if ch_def == 0:
            st.tested += 1
            ok = not (st.forbid_132 and ch_has132)
            if ok:
                for x in range(1, st.n + 1):
                    if st.nonalt[x] != st.nonedge[x]:
                        ok = False
                        break
            if ok:
                witnesses.append(tuple([st.prefix[i] for i in range(st.depth)]))
                if not st.find_all:
                    stop = True
        if not stop:
            stop = _rec(st, witnesses, ch_forb, ch_min, ch_has132, ch_exh, ch_def) != 0

        st.counts[c] -= 1
        st.depth -= 1
        for y in range(st.n + 1):
            st.seen_since[y] = old_ss[y]
        if na_saved:
            for y in range(st.n + 1):
                st.nonalt[y] = old_na[y]
        if stop:
            return 1
    return 0


def run_search(n, adj, min_copies, max_copies, forbid_132, find_all,
               node_budget=None, prune_pattern=True, prune_edges=True,
               prune_exhausted=True):
    """Returns (witnesses, nodes, words_tested, budget_exceeded).

    Same contract as rep132._kernel_py.run_search.
    """
    if not (1 <= n <= MAX_N):
        raise ValueError(f"n must be in 1..{MAX_N}")
    if not (1 <= min_copies <= max_copies):
        raise ValueError("need 1 <= min_copies <= max_copies")

    cdef _State st
    cdef int c
    st.n = n
    st.min_copies = min_copies
    st.max_copies = max_copies
    st.forbid_132 = bool(forbid_132)
    st.find_all = bool(find_all)
    st.prune_pattern = bool(prune_pattern)
    st.prune_edges = bool(prune_edges)
    st.prune_exhausted = bool(prune_exhausted)
    st.budget = node_budget if node_budget is not None else 0
    st.nodes = 0
    st.tested = 0
    st.exceeded = False
    st.full = ((<unsigned int>1) << (n + 1)) - 2
    st.depth = 0
    for c in range(16):
        st.adj[c] = 0
        st.nonedge[c] = 0
        st.counts[c] = 0
        st.seen_since[c] = 0
        st.nonalt[c] = 0
    for c in range(1, n + 1):
        st.adj[c] = adj[c]
        st.nonedge[c] = st.full & ~st.adj[c] & ~((<unsigned int>1) << c)

    witnesses = []
    _rec(&st, witnesses, 0, 0, False, 0, n)
    return witnesses, st.nodes, st.tested, bool(st.exceeded)
