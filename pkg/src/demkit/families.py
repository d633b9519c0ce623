"""Generators for the named graph families and gadgets, with closed-form DEM
values where a theorem pins them down.

Family specs are written ``kind:p1,p2`` (for example ``kite:7,12``,
``conical:2,9``, ``g8_star``).  Vertex labelling is fixed per kind; see
:func:`vertex_names` for the name-to-index table of each one.

Labelling summary
-----------------
path, cycle           v1..vn -> 0..n-1
complete              v0..v(n-1) -> 0..n-1
complete_bipartite    u1..ua -> 0..a-1, v1..vb -> a..a+b-1
star                  centre c = 0, leaves 1..n-1
kite (r, n)           u0..u(n-1) -> 0..n-1; clique on u0..ur, path ur..u(n-1)
kipas n               apex v0 = 0, path v1..vn -> 1..n
wheel k               same as conical (1, k)
conical (l, k)        centre c = 0, u_i^j (position i, layer j) -> 1 + (j-1)k + (i-1)
prism (k, l)          C_k □ P_l, vertex (a, b) -> a*l + b
grid (a, b)           P_a □ P_b, vertex (x, y) -> x*b + y
g8_star               u1..u8 -> 0..7, v1..v8 -> 8..15
g6_prime              v1..v6 -> 0..5
spider k              v0 = 0, u1..u(k+1) -> 1..k+1, v1..v(k+1) -> k+2..2k+2
book n                v1..vn -> 0..n-1, spine v1v2
sequence (k, i)       c = 0, u1..uk -> 1..k, v1..vk -> k+1..2k
friendship n          sequence (n, n)
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, build_graph, cartesian_product, join_graphs


class FamilyError(ValueError):
    """Unknown family kind or parameters outside its valid range."""


# kind -> (arity, human-readable parameter ranges)
KINDS = {
    "path": (1, "n >= 1"),
    "cycle": (1, "n >= 3"),
    "complete": (1, "n >= 1"),
    "complete_bipartite": (2, "a >= 1, b >= 1"),
    "star": (1, "n >= 1"),
    "kite": (2, "1 <= r <= n - 1"),
    "kipas": (1, "n >= 3"),
    "friendship": (1, "n >= 1"),
    "wheel": (1, "k >= 3"),
    "conical": (2, "l >= 1, k >= 3"),
    "prism": (2, "k >= 3, l >= 1"),
    "grid": (2, "a >= 1, b >= 1"),
    "g8_star": (0, "no parameters"),
    "g6_prime": (0, "no parameters"),
    "spider": (1, "k >= 0"),
    "book": (1, "n >= 2"),
    "sequence": (2, "k >= 1, 0 <= i <= k"),
}


def _valid(kind, p):
    if kind in ("path", "complete", "star", "friendship"):
        return p[0] >= 1
    if kind == "cycle":
        return p[0] >= 3
    if kind in ("complete_bipartite", "grid"):
        return p[0] >= 1 and p[1] >= 1
    if kind == "kite":
        return 1 <= p[0] <= p[1] - 1
    if kind == "kipas":
        return p[0] >= 3
    if kind == "wheel":
        return p[0] >= 3
    if kind == "conical":
        return p[0] >= 1 and p[1] >= 3
    if kind == "prism":
        return p[0] >= 3 and p[1] >= 1
    if kind == "spider":
        return p[0] >= 0
    if kind == "book":
        return p[0] >= 2
    if kind == "sequence":
        return p[0] >= 1 and 0 <= p[1] <= p[0]
    return True


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family {self.kind!r}; known: {', '.join(sorted(KINDS))}")
        arity, ranges = KINDS[self.kind]
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if len(self.params) != arity:
            raise FamilyError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        if not _valid(self.kind, self.params):
            raise FamilyError(f"{self} violates {ranges}")

    def __str__(self):
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.params))}"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        kind, _, rest = text.strip().partition(":")
        try:
            params = tuple(int(x) for x in rest.split(",")) if rest.strip() else ()
        except ValueError:
            raise FamilyError(f"bad family parameters in {text!r}") from None
        return cls(kind.strip(), params)


def parse_family(text: str) -> FamilySpec:
    return FamilySpec.parse(text)


@dataclass(frozen=True)
class ClosedForm:
    value: int | None
    applicable: bool
    condition: str


# elementary builders ---------------------------------------------------------


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _conical(ell, k):
    def idx(i, j):  # position i in 1..k, layer j in 1..ell
        return 1 + (j - 1) * k + (i - 1)

    pairs = []
    for j in range(1, ell + 1):
        pairs += [(idx(i, j), idx(i % k + 1, j)) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        pairs.append((0, idx(i, 1)))
        pairs += [(idx(i, j), idx(i, j + 1)) for j in range(1, ell)]
    return build_graph(ell * k + 1, pairs)


def _sequence(k, i):
    pairs = [(0, j) for j in range(1, 2 * k + 1)]
    pairs += [(t, k + t) for t in range(1, i + 1)]
    return build_graph(2 * k + 1, pairs)


def _g8_star():
    u = lambda i: i - 1  # noqa: E731
    v = lambda i: i + 7  # noqa: E731
    pairs = [(u(i), v(i)) for i in range(1, 9)]
    pairs += [(u(i), u(i + 1)) for i in range(1, 8)]
    pairs += [(v(i), v(i + 1)) for i in range(1, 8)]
    pairs += [(u(1), u(8)), (u(1), u(5)), (v(1), v(8))]
    return build_graph(16, pairs)


def _g6_prime():
    named = [(1, 2), (3, 4), (5, 6), (1, 3), (1, 5), (2, 4), (2, 6), (3, 5), (4, 6)]
    return build_graph(6, [(a - 1, b - 1) for a, b in named])


def generate(spec: FamilySpec | str) -> Graph:
    """Build the canonical graph for ``spec`` (a :class:`FamilySpec` or its string form)."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    kind, p = spec.kind, spec.params
    if kind == "path":
        return path_graph(p[0])
    if kind == "cycle":
        return cycle_graph(p[0])
    if kind == "complete":
        return complete_graph(p[0])
    if kind == "complete_bipartite":
        a, b = p
        return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "star":
        return build_graph(p[0], [(0, i) for i in range(1, p[0])])
    if kind == "kite":
        r, n = p
        pairs = [(i, j) for i in range(r + 1) for j in range(i + 1, r + 1)]
        pairs += [(i, i + 1) for i in range(r, n - 1)]
        return build_graph(n, pairs)
    if kind == "kipas":
        return join_graphs(build_graph(1, []), path_graph(p[0]))
    if kind == "friendship":
        return _sequence(p[0], p[0])
    if kind == "wheel":
        return _conical(1, p[0])
    if kind == "conical":
        return _conical(*p)
    if kind == "prism":
        return cartesian_product(cycle_graph(p[0]), path_graph(p[1]))
    if kind == "grid":
        return cartesian_product(path_graph(p[0]), path_graph(p[1]))
    if kind == "g8_star":
        return _g8_star()
    if kind == "g6_prime":
        return _g6_prime()
    if kind == "spider":
        k = p[0]
        pairs = [(0, i) for i in range(1, k + 2)]
        pairs += [(i, k + 1 + i) for i in range(1, k + 2)]
        return build_graph(2 * k + 3, pairs)
    if kind == "book":
        n = p[0]
        return join_graphs(build_graph(2, [(0, 1)]), build_graph(n - 2, []))
    if kind == "sequence":
        return _sequence(*p)
    raise FamilyError(kind)  # unreachable: FamilySpec validates kind


def vertex_names(spec: FamilySpec | str) -> dict[str, int]:
    """Name table mapping the usual vertex labels of a family to indices."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    kind, p = spec.kind, spec.params
    if kind in ("path", "cycle", "book"):
        return {f"v{i}": i - 1 for i in range(1, p[0] + 1)}
    if kind == "complete":
        return {f"v{i}": i for i in range(p[0])}
    if kind == "complete_bipartite":
        a, b = p
        names = {f"u{i}": i - 1 for i in range(1, a + 1)}
        names.update({f"v{j}": a + j - 1 for j in range(1, b + 1)})
        return names
    if kind == "star":
        return {"c": 0, **{f"v{i}": i for i in range(1, p[0])}}
    if kind == "kite":
        return {f"u{i}": i for i in range(p[1])}
    if kind == "kipas":
        return {f"v{i}": i for i in range(p[0] + 1)}
    if kind in ("wheel", "conical"):
        ell, k = (1, p[0]) if kind == "wheel" else p
        names = {"c": 0}
        for j in range(1, ell + 1):
            for i in range(1, k + 1):
                names[f"u{i}^{j}"] = 1 + (j - 1) * k + (i - 1)
        return names
    if kind == "prism":
        k, ell = p
        return {f"({a},{b})": a * ell + b for a in range(k) for b in range(ell)}
    if kind == "grid":
        a, b = p
        return {f"({x},{y})": x * b + y for x in range(a) for y in range(b)}
    if kind == "g8_star":
        return {**{f"u{i}": i - 1 for i in range(1, 9)}, **{f"v{i}": i + 7 for i in range(1, 9)}}
    if kind == "g6_prime":
        return {f"v{i}": i - 1 for i in range(1, 7)}
    if kind == "spider":
        k = p[0]
        names = {"v0": 0}
        names.update({f"u{i}": i for i in range(1, k + 2)})
        names.update({f"v{i}": k + 1 + i for i in range(1, k + 2)})
        return names
    if kind in ("sequence", "friendship"):
        k = p[0]
        names = {"c": 0}
        names.update({f"u{j}": j for j in range(1, k + 1)})
        names.update({f"v{j}": k + j for j in range(1, k + 1)})
        return names
    raise FamilyError(kind)


# closed forms ----------------------------------------------------------------


def conical_threshold(k: int) -> int:
    """a_k = floor(k/4 + (1 + (-1)^(k+1)) / 8)."""
    return (k + 1) // 4 if k % 2 else k // 4


def conical_dem_formula(ell: int, k: int) -> int:
    """Layered ceiling sum for dem of the conical graph C(ell, k)."""
    a = conical_threshold(k)
    head = sum(-(-k // (4 * i - 2)) for i in range(1, min(ell, a) + 1))
    return head + 2 * max(0, ell - a)


def prism_dem_formula(k: int, ell: int) -> int:
    """dem(C_k □ P_ell): k when k >= 2*ell + 1, else 2*ell."""
    return k if k >= 2 * ell + 1 else 2 * ell


def cycle_em_count(n: int) -> int:
    """|EM(v)| for a vertex of the cycle C_n."""
    if n < 3:
        raise FamilyError(f"cycle length must be >= 3, got {n}")
    return n - 1 if n % 2 else n - 2


def conical_layer_em_count(i: int, k: int) -> int:
    """|EM(v) ∩ E(C_i)| for v on layer i of a conical graph with cycle length k."""
    if i < 1 or k < 3:
        raise FamilyError(f"need layer i >= 1 and k >= 3, got i={i}, k={k}")
    if i <= conical_threshold(k):
        return 4 * i - 2
    return k - 2 if k % 2 == 0 else k - 1


def predicted_dem(spec: FamilySpec | str) -> ClosedForm:
    """Closed-form dem when the relevant theorem's hypotheses hold, else
    ``applicable=False``."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    kind, p = spec.kind, spec.params

    def yes(value, condition):
        return ClosedForm(int(value), True, condition)

    def no(condition):
        return ClosedForm(None, False, condition)

    if kind == "path":
        if p[0] == 1:
            return yes(0, "dem(K_1) = 0")
        return yes(1, "tree with an edge: dem = 1")
    if kind in ("star", "spider"):
        n = p[0] if kind == "star" else 2 * p[0] + 3
        return yes(0 if n == 1 else 1, "tree: dem = 1")
    if kind == "cycle":
        return yes(2, "fes = 1: dem = fes + 1")
    if kind == "complete":
        return yes(p[0] - 1, "dem(K_n) = n - 1")
    if kind == "complete_bipartite":
        return yes(min(p), "dem(K_{a,b}) = min(a, b)")
    if kind == "grid":
        a, b = p
        if a >= 2 and b >= 2:
            return yes(max(a, b), "a, b >= 2: dem(P_a □ P_b) = max(a, b)")
        return yes(1 if a * b > 1 else 0, "P_a □ P_1 is a path")
    if kind == "prism":
        k, ell = p
        if ell == 1:
            return yes(2, "C_k □ P_1 is a cycle")
        if ell >= 3 or (ell == 2 and k >= 5):
            return yes(prism_dem_formula(k, ell), "k if k >= 2l+1 else 2l (l >= 3, or l = 2 with k >= 5)")
        return no("prism formula stated for l >= 3 (used for l = 2 only when k >= 5)")
    if kind == "kite":
        return yes(p[0], "dem(K(r, n)) = r")
    if kind == "kipas":
        if p[0] >= 7:
            return yes(p[0] // 2, "n >= 7: dem = floor(n/2)")
        return no("kipas formula needs n >= 7")
    if kind == "wheel":
        return no("no closed form for wheels")
    if kind == "conical":
        ell, k = p
        if k >= 9 and ell >= 2:
            return yes(conical_dem_formula(ell, k), "k >= 9 and l >= 2: layered ceiling sum")
        return no("conical formula needs k >= 9 and l >= 2")
    if kind == "g8_star":
        return yes(6, "sharpness gadget G*_8")
    if kind == "g6_prime":
        return yes(4, "sharpness gadget G'_6")
    if kind == "book":
        if p[0] == 2:
            return yes(1, "book(2) = K_2")
        return yes(2, "(n-2)K_1 ∨ K_2: dem = 2")
    if kind in ("sequence", "friendship"):
        i = p[0] if kind == "friendship" else p[1]
        if i == 0:
            return yes(1, "G^0 is a tree")
        if i == 1:
            return yes(2, "G^1 has base graph K_3")
        return yes(i, "dem(G^i) = i for i >= 2")
    raise FamilyError(kind)


def conical_prism_ratio(ell: int, k: int) -> dict:
    """Formula values for C(ell, k) and C_k □ P_ell and their ratio both ways."""
    cone = conical_dem_formula(ell, k)
    prism = prism_dem_formula(k, ell)
    return {
        "conical": cone,
        "prism": prism,
        "conical_over_prism": cone / prism,
        "prism_over_conical": prism / cone,
    }


def standard_specs(max_vertices: int = 20) -> list[FamilySpec]:
    """A deterministic catalogue of specs (every kind, small parameters)
    with at most ``max_vertices`` vertices."""
    out = []

    def add(kind, *params):
        spec = FamilySpec(kind, params)
        if generate(spec).n <= max_vertices:
            out.append(spec)

    for n in range(1, 13):
        add("path", n)
    for n in range(3, 13):
        add("cycle", n)
    for n in range(1, 9):
        add("complete", n)
    for a in range(1, 6):
        for b in range(a, 6):
            add("complete_bipartite", a, b)
    for n in range(2, 10):
        add("star", n)
    for n in range(2, 11):
        for r in range(1, min(5, n - 1) + 1):
            add("kite", r, n)
    for n in range(3, 13):
        add("kipas", n)
    for n in range(1, 6):
        add("friendship", n)
    for k in range(3, 10):
        add("wheel", k)
    for ell in range(1, 3):
        for k in range(3, 12):
            add("conical", ell, k)
    for k in range(3, 10):
        for ell in range(1, 4):
            add("prism", k, ell)
    for a in range(1, 5):
        for b in range(a, 5):
            add("grid", a, b)
    add("g8_star")
    add("g6_prime")
    for k in range(0, 5):
        add("spider", k)
    for n in range(2, 10):
        add("book", n)
    for k in range(1, 6):
        for i in range(0, k + 1):
            add("sequence", k, i)
    return out
