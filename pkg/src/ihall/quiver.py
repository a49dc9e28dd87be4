"""Dynkin iquivers: validation, Euler forms, root systems, reflections.

Vertices carry stable string names but all computations run over the
canonical integer indexing (sorted vertex names, sorted arrow list), so
hashes, cache keys and file formats are deterministic.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import AdjacentOrbit, Cyclic, NotASink, NotDynkin, NotInvolution

# dimension vectors are plain int tuples indexed by vertex position


def dv_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def dv_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def dv_scale(k, a):
    return tuple(k * x for x in a)


def dv_zero(n):
    return (0,) * n


def dv_leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def dv_is_nonneg(a):
    return all(x >= 0 for x in a)


def unit_vector(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


@dataclass(frozen=True)
class IQuiver:
    """A Dynkin quiver with an admissible involution.

    ``vertices``: sorted tuple of vertex names.
    ``arrows``: tuple of (source_index, target_index) pairs, sorted.
    ``involution``: tuple permutation of vertex indices.
    """

    vertices: tuple
    arrows: tuple
    involution: tuple

    @property
    def n(self):
        return len(self.vertices)

    def rho(self, i):
        return self.involution[i]

    def rho_dv(self, d):
        out = [0] * self.n
        for i, x in enumerate(d):
            out[self.involution[i]] = x
        return tuple(out)

    def is_split(self):
        return all(self.involution[i] == i for i in range(self.n))

    def arrows_into(self, i):
        return [a for a in self.arrows if a[1] == i]

    def arrows_out_of(self, i):
        return [a for a in self.arrows if a[0] == i]

    def sinks(self):
        outs = {a[0] for a in self.arrows}
        return [i for i in range(self.n) if i not in outs]

    def sources(self):
        ins = {a[1] for a in self.arrows}
        return [i for i in range(self.n) if i not in ins]

    def cartan(self, i, j):
        if i == j:
            return 2
        return -sum(1 for a, b in self.arrows if {a, b} == {i, j})

    def canonical_hash(self):
        blob = json.dumps(
            {"v": list(self.vertices), "a": [list(a) for a in self.arrows],
             "inv": list(self.involution)},
            separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def opposite_of(self, reversed_arrows):
        """Quiver with the given arrow subset reversed."""
        rev = set(reversed_arrows)
        new = tuple(sorted((t, s) if (s, t) in rev else (s, t)
                           for s, t in self.arrows))
        return IQuiver(self.vertices, new, self.involution)

    def __repr__(self):
        arr = ",".join(f"{self.vertices[s]}->{self.vertices[t]}" for s, t in self.arrows)
        fix = [f"({self.vertices[i]} {self.vertices[j]})"
               for i, j in enumerate(self.involution) if i < j]
        inv = "".join(fix) if fix else "id"
        return f"IQuiver[{' '.join(self.vertices)}; {arr}; rho={inv}]"


def validate_iquiver(vertices, arrows, involution=None):
    """Build a validated IQuiver from raw data.

    ``vertices``: iterable of names; ``arrows``: (source, target) name pairs;
    ``involution``: list of 2-cycles of names (omitted names are fixed).
    """
    names = [str(v) for v in vertices]
    if len(set(names)) != len(names):
        raise NotDynkin("duplicate vertex names")
    names.sort()
    index = {v: i for i, v in enumerate(names)}
    try:
        arr = tuple(sorted((index[str(s)], index[str(t)]) for s, t in arrows))
    except KeyError as e:
        raise NotDynkin(f"arrow endpoint {e} is not a vertex")
    n = len(names)

    inv = list(range(n))
    for cyc in involution or []:
        if len(cyc) != 2:
            raise NotInvolution(f"involution cycles must have length 2, got {cyc}")
        a, b = (str(x) for x in cyc)
        if a not in index or b not in index:
            raise NotInvolution(f"cycle ({a} {b}) mentions unknown vertices")
        inv[index[a]] = index[b]
        inv[index[b]] = index[a]
    if sorted(inv) != list(range(n)):
        raise NotInvolution("cycles overlap")
    for i in range(n):
        if inv[inv[i]] != i:
            raise NotInvolution("map is not an involution")

    q = IQuiver(tuple(names), arr, tuple(inv))
    _check_dynkin(q)
    _check_acyclic(q)
    _check_automorphism(q)
    _check_orbits(q)
    return q


def _check_dynkin(q):
    n = q.n
    deg = [0] * n
    adj = [set() for _ in range(n)]
    for s, t in q.arrows:
        if s == t:
            raise NotDynkin("loops are not allowed")
        if t in adj[s]:
            raise NotDynkin("multiple edges are not allowed")
        adj[s].add(t)
        adj[t].add(s)
        deg[s] += 1
        deg[t] += 1
    # each connected component must be a tree of type A, D or E
    seen = [False] * n
    for r in range(n):
        if seen[r]:
            continue
        comp = []
        stack = [r]
        seen[r] = True
        edges = 0
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                edges += 1
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        edges //= 2
        if edges != len(comp) - 1:
            raise NotDynkin("component contains an unoriented cycle")
        branch = [x for x in comp if deg[x] >= 3]
        if any(deg[x] > 3 for x in comp):
            raise NotDynkin("vertex of degree > 3")
        if len(branch) > 1:
            raise NotDynkin("more than one branch vertex in a component")
        if branch:
            arms = sorted(_arm_lengths(adj, branch[0]))
            # D_n has arms (1,1,k); E_6/7/8 have (1,2,2), (1,2,3), (1,2,4)
            ok = arms[:2] == [1, 1] or arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4])
            if not ok:
                raise NotDynkin(f"branch arm lengths {arms} are not ADE")


def _arm_lengths(adj, b):
    arms = []
    for s in adj[b]:
        ln = 1
        prev, cur = b, s
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        arms.append(ln)
    return arms


def _check_acyclic(q):
    indeg = [0] * q.n
    for _, t in q.arrows:
        indeg[t] += 1
    queue = [i for i in range(q.n) if indeg[i] == 0]
    seen = 0
    while queue:
        x = queue.pop()
        seen += 1
        for s, t in q.arrows:
            if s == x:
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
    if seen != q.n:
        raise Cyclic("quiver has an oriented cycle")


def _check_automorphism(q):
    rho = q.involution
    mapped = {(rho[s], rho[t]) for s, t in q.arrows}
    if mapped != set(q.arrows):
        raise NotInvolution("involution does not permute the arrow set")


def _check_orbits(q):
    adj = {frozenset(a) for a in q.arrows}
    for i in range(q.n):
        j = q.involution[i]
        if i != j and frozenset((i, j)) in adj:
            raise AdjacentOrbit(
                f"vertices {q.vertices[i]}, {q.vertices[j]} form an adjacent orbit")


def double_quiver(q):
    """The diagonal double: two copies of q with the swap involution.

    Copies are named ``name`` and ``name*``; any involution on q is ignored.
    """
    names = list(q.vertices) + [v + "*" for v in q.vertices]
    arrows = [(q.vertices[s], q.vertices[t]) for s, t in q.arrows]
    arrows += [(q.vertices[s] + "*", q.vertices[t] + "*") for s, t in q.arrows]
    cycles = [(v, v + "*") for v in q.vertices]
    return validate_iquiver(names, arrows, cycles)


def is_diagonal_double(q):
    """Detect a fixed-point-free involution exchanging two arrow-disjoint halves."""
    if any(q.rho(i) == i for i in range(q.n)):
        return False
    reps = [i for i in range(q.n) if i < q.rho(i)]
    half = set(reps)
    for s, t in q.arrows:
        if (s in half) != (t in half):
            return False
    return True


# --- Euler form -----------------------------------------------------------


class EulerForm:
    """The bilinear form <a_i, a_j> = delta_ij - #arrows(i -> j)."""

    def __init__(self, q):
        n = q.n
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for s, t in q.arrows:
            m[s][t] -= 1
        self.matrix = tuple(tuple(row) for row in m)
        self.q = q

    def pair(self, a, b):
        return sum(a[i] * self.matrix[i][j] * b[j]
                   for i in range(len(a)) for j in range(len(b)) if a[i] and b[j])

    def sym(self, a, b):
        return self.pair(a, b) + self.pair(b, a)


@lru_cache(maxsize=None)
def euler_form(q):
    e = EulerForm(q)
    # the symmetrized form must be rho-invariant for a valid iquiver
    n = q.n
    for i in range(n):
        for j in range(n):
            ei, ej = unit_vector(n, i), unit_vector(n, j)
            assert e.sym(q.rho_dv(ei), q.rho_dv(ej)) == e.sym(ei, ej)
    return e


def norm_N(q, alpha):
    """(alpha, alpha)_Q / 2 - sum of coordinates; always an integer."""
    e = euler_form(q)
    s = e.sym(alpha, alpha)
    assert s % 2 == 0
    return s // 2 - sum(alpha)


# --- reflections ----------------------------------------------------------


def simple_reflection(q, i, d):
    """s_i acting on a dimension vector."""
    c = sum(q.cartan(i, j) * d[j] for j in range(q.n))
    out = list(d)
    out[i] -= c
    return tuple(out)


def orbit_reflection(q, ell, d):
    """The lattice involution at the orbit of ell: s_ell or s_ell s_{rho ell}."""
    out = simple_reflection(q, ell, d)
    r = q.rho(ell)
    if r != ell:
        out = simple_reflection(q, r, out)
    return out


def reflect_quiver(q, ell):
    """Reverse all arrows into ell and rho(ell); ell must be a sink.

    Returns the reflected iquiver and the lattice map acting on dimension
    vectors.  Since rho is an automorphism, rho(ell) is automatically a sink.
    """
    if ell in {a[0] for a in q.arrows}:
        raise NotASink(f"vertex {q.vertices[ell]} is not a sink")
    targets = {ell, q.rho(ell)}
    new = tuple(sorted((t, s) if t in targets else (s, t) for s, t in q.arrows))
    rq = IQuiver(q.vertices, new, q.involution)

    def lattice_map(d, _q=q, _ell=ell):
        return orbit_reflection(_q, _ell, d)

    return rq, lattice_map


# --- root system ----------------------------------------------------------


@dataclass(frozen=True)
class RootSystem:
    roots: tuple           # ordered tuple of dimension vectors
    order: str             # "admissible" or "arbitrary"

    def __len__(self):
        return len(self.roots)

    def index(self, beta):
        return self.roots.index(beta)


@lru_cache(maxsize=None)
def enumerate_positive_roots(q):
    """All positive roots, by closing the simples under simple reflections."""
    n = q.n
    roots = {unit_vector(n, i) for i in range(n)}
    frontier = list(roots)
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(n):
                r = simple_reflection(q, i, d)
                if dv_is_nonneg(r) and any(r) and r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt
    return tuple(sorted(roots, key=lambda d: (sum(d), d)))


def positive_roots(q):
    """The positive roots in an admissible order.

    The order is a topological sort of the hom-nonvanishing relation between
    indecomposables computed at one prime, then verified: hom(M_r, M_t) = 0
    for r > t and ext(M_r, M_t) = 0 for r <= t.
    """
    from . import modfq
    return modfq.get_context(q).root_system


def i_admissible_sequence(q):
    """A complete sequence of sink-orbit reflections.

    Each entry is a sink of the quiver reflected so far; the induced roots
    b_k = s_{i_1} ... s_{i_{k-1}}(a_{i_k}) together with their rho-images
    exhaust the positive roots.  Returns the vertex sequence.
    """
    allroots = set(enumerate_positive_roots(q))
    n_orbits = len({frozenset((b, q.rho_dv(b))) for b in allroots})
    seq = []
    consumed = set()
    cur = q
    word = []  # list of reflection vertices applied so far, in order
    for _ in range(n_orbits):
        sinks = cur.sinks()
        if not sinks:
            raise Cyclic("no sink available during reflection sequence")
        ell = min(sinks)
        beta = unit_vector(q.n, ell)
        for j in reversed(word):
            beta = orbit_reflection(q, j, beta)
        # NB all reflected quivers share q's Cartan matrix, so lattice maps
        # can be computed against q itself.
        assert dv_is_nonneg(beta)
        consumed.add(beta)
        consumed.add(q.rho_dv(beta))
        seq.append(ell)
        word.append(ell)
        cur, _ = reflect_quiver(cur, ell)
    if consumed != allroots:
        raise NotDynkin("reflection sequence failed to exhaust the roots")
    return seq


def i_admissible_root_order(q):
    """Positive roots in the order induced by the complete sink sequence.

    Interleaves b_k with rho(b_k), omitting rho(b_k) when fixed.
    """
    seq = i_admissible_sequence(q)
    out = []
    word = []
    for ell in seq:
        beta = unit_vector(q.n, ell)
        for j in reversed(word):
            beta = orbit_reflection(q, j, beta)
        out.append(beta)
        rb = q.rho_dv(beta)
        if rb != beta:
            out.append(rb)
        word.append(ell)
    return out
