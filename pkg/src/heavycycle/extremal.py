"""Parameterized extremal families with labeled role maps.

Families (written out in the role maps):

* t1 — two stars K_{1,n/2-1} whose centers x,y are joined by an edge.
* t2 — two cliques K_{n/2} containing x resp. y, joined by the bridge xy only.
* g1 — outer cycle u,v_r..v_1,v,v_{-1}..v_{-r} of 2r+2 vertices; x-u, y-v;
  x and y each adjacent to all of the independent z_1..z_k; xy not an edge.
* g2 — two disjoint K_r; star center x with independent leaves z_1..z_k;
  u and v adjacent to everything (each other included).
* g3 — outer cycle as in g1; three disjoint K_k; x adjacent to u and all 3k
  clique vertices, y to v and all 3k; xy not an edge.

Index layouts are fixed so witnesses are reproducible; see _build_*.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .circumference import (
    Budget,
    DEFAULT_BUDGET,
    circumference,
    has_cycle_through_at_least,
    has_heavy_cycle_brute,
)
from .graphs import Graph, is_connected, is_two_connected
from .heavy import heavy_vertices
from .ocycle import CycleSeq, heavy_cycle_or_certificate, validate_certificate
from .patterns import is_pattern_free, pattern_by_name

FAMILIES = ("t1", "t2", "g1", "g2", "g3")

RoleMap = dict


@dataclass(frozen=True)
class ExtremalParams:
    family: str
    n: Optional[int] = None
    r: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        fam = self.family.lower()
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if fam in ("t1", "t2"):
            if self.n is None:
                raise ValueError(f"family {fam} needs n")
        elif self.r is None or self.k is None:
            raise ValueError(f"family {fam} needs r and k")

    def validate(self) -> None:
        """Enforce the family's parameter constraints."""
        fam = self.family
        if fam in ("t1", "t2"):
            if self.n % 2 or self.n < 4:
                raise ValueError(f"{fam} requires even n >= 4, got n={self.n}")
        elif fam == "g1":
            if self.r < 4 or self.k < 2 * self.r + 2:
                raise ValueError(
                    f"g1 requires r >= 4 and k >= 2r+2, got r={self.r}, k={self.k}"
                )
        elif fam == "g2":
            if self.r < 4 or self.k < 2 * self.r - 1:
                raise ValueError(
                    f"g2 requires r >= 4 and k >= 2r-1, got r={self.r}, k={self.k}"
                )
        elif fam == "g3":
            if self.r < 11 or 3 * self.k < 2 * self.r + 2 or self.k > self.r - 3:
                raise ValueError(
                    f"g3 requires r >= 11 and (2r+2)/3 <= k <= r-3, "
                    f"got r={self.r}, k={self.k}"
                )

    def label(self) -> str:
        if self.family in ("t1", "t2"):
            return f"{self.family}(n={self.n})"
        return f"{self.family}(r={self.r}, k={self.k})"


def _build_t1(n: int) -> tuple[Graph, RoleMap]:
    half = n // 2
    x, y = 0, 1
    x_leaves = tuple(range(2, half + 1))
    y_leaves = tuple(range(half + 1, n))
    edges = [(x, y)]
    edges += [(x, v) for v in x_leaves]
    edges += [(y, v) for v in y_leaves]
    roles = {"x": x, "y": y, "x_leaves": x_leaves, "y_leaves": y_leaves}
    return Graph.from_edges(n, edges), roles


def _build_t2(n: int) -> tuple[Graph, RoleMap]:
    half = n // 2
    x, y = 0, 1
    side_x = (x,) + tuple(range(2, half + 1))
    side_y = (y,) + tuple(range(half + 1, n))
    edges = [(x, y)]
    for side in (side_x, side_y):
        edges += [
            (side[i], side[j])
            for i in range(len(side))
            for j in range(i + 1, len(side))
        ]
    roles = {"x": x, "y": y, "side_x": side_x, "side_y": side_y}
    return Graph.from_edges(n, edges), roles


def _outer_cycle_roles(r: int) -> RoleMap:
    # cycle order: u, v_r, ..., v_1, v, v_{-1}, ..., v_{-r}
    return {
        "u": 0,
        "v": r + 1,
        "v_plus": tuple(r + 1 - i for i in range(1, r + 1)),  # v_1 .. v_r
        "v_minus": tuple(r + 1 + i for i in range(1, r + 1)),  # v_{-1} .. v_{-r}
        "outer_cycle": tuple(range(2 * r + 2)),
    }


def _build_g1(r: int, k: int) -> tuple[Graph, RoleMap]:
    cyc = 2 * r + 2
    x, y = cyc, cyc + 1
    z = tuple(range(cyc + 2, cyc + 2 + k))
    edges = [(i, (i + 1) % cyc) for i in range(cyc)]
    edges += [(x, 0), (y, r + 1)]
    edges += [(x, zi) for zi in z]
    edges += [(y, zi) for zi in z]
    roles = _outer_cycle_roles(r) | {"x": x, "y": y, "z": z}
    return Graph.from_edges(cyc + 2 + k, edges), roles


def _build_g2(r: int, k: int) -> tuple[Graph, RoleMap]:
    u, v, x = 0, 1, 2
    z = tuple(range(3, 3 + k))
    ca = tuple(range(3 + k, 3 + k + r))
    cb = tuple(range(3 + k + r, 3 + k + 2 * r))
    n = 2 * r + k + 3
    edges = [(x, zi) for zi in z]
    for clique in (ca, cb):
        edges += [
            (clique[i], clique[j])
            for i in range(r)
            for j in range(i + 1, r)
        ]
    for univ in (u, v):
        edges += [(univ, w) for w in range(n) if w != univ]
    roles = {"u": u, "v": v, "x": x, "z": z, "cliques": (ca, cb)}
    return Graph.from_edges(n, edges), roles


def _build_g3(r: int, k: int) -> tuple[Graph, RoleMap]:
    cyc = 2 * r + 2
    x, y = cyc, cyc + 1
    cliques = tuple(
        tuple(range(cyc + 2 + i * k, cyc + 2 + (i + 1) * k)) for i in range(3)
    )
    edges = [(i, (i + 1) % cyc) for i in range(cyc)]
    edges += [(x, 0), (y, r + 1)]
    for clique in cliques:
        edges += [
            (clique[i], clique[j])
            for i in range(k)
            for j in range(i + 1, k)
        ]
        edges += [(x, c) for c in clique]
        edges += [(y, c) for c in clique]
    roles = _outer_cycle_roles(r) | {"x": x, "y": y, "cliques": cliques}
    return Graph.from_edges(cyc + 2 + 3 * k, edges), roles


def build_unchecked(params: ExtremalParams) -> tuple[Graph, RoleMap]:
    """Construct without caption validation (boundary experiments only)."""
    fam = params.family
    if fam == "t1":
        return _build_t1(params.n)
    if fam == "t2":
        return _build_t2(params.n)
    if fam == "g1":
        return _build_g1(params.r, params.k)
    if fam == "g2":
        return _build_g2(params.r, params.k)
    return _build_g3(params.r, params.k)


def generate(params: ExtremalParams) -> tuple[Graph, RoleMap]:
    """The family member plus its role map; params must satisfy the captions."""
    params.validate()
    return build_unchecked(params)


# -- self-verification -----------------------------------------------------

@dataclass(frozen=True)
class FamilyCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class FamilyReport:
    family: str
    params: str
    checks: tuple[FamilyCheck, ...] = field(default_factory=tuple)
    exhausted: bool = True  # False when a budget tripped mid-proof

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> FamilyCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "passed": self.passed,
            "exhausted": self.exhausted,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def _free_check(g: Graph, name: str) -> FamilyCheck:
    ok = is_pattern_free(g, pattern_by_name(name))
    return FamilyCheck(f"{name}_free", ok, "no induced copy" if ok else "induced copy found")


def _heavy_set_check(g: Graph, roles: RoleMap, expected_roles: tuple[str, ...]) -> FamilyCheck:
    expect = frozenset(roles[r] for r in expected_roles)
    got = heavy_vertices(g)
    return FamilyCheck(
        "heavy_set",
        got == expect,
        f"heavy={sorted(got)} expected={sorted(expect)}",
    )


def _omits_check(
    g: Graph, roles: RoleMap, role: str, circ: int, budget: Budget
) -> tuple[FamilyCheck, bool]:
    """(check, proven): no cycle of circumference length passes through the role vertex."""
    v = roles[role]
    found, proven = has_cycle_through_at_least(g, v, circ, budget)
    if not proven:
        return (
            FamilyCheck(
                f"longest_omits_{role}",
                False,
                f"budget tripped before proving cycles through {role} stay short",
            ),
            False,
        )
    return (
        FamilyCheck(
            f"longest_omits_{role}",
            not found,
            f"no cycle of length >= {circ} through {role}={v}"
            if not found
            else f"a longest cycle passes through {role}={v}",
        ),
        True,
    )


def verify_family(params: ExtremalParams, budget: Budget = DEFAULT_BUDGET) -> FamilyReport:
    """Check the family's advertised structure on one instance.

    For g1/g2/g3 the longest-cycle claims need the exact engines; when the
    budget trips the report is flagged exhausted=False and only the proven
    facts are asserted.
    """
    params.validate()
    g, roles = build_unchecked(params)
    checks: list[FamilyCheck] = []
    exhausted = True
    fam = params.family

    if fam in ("t1", "t2"):
        checks.append(FamilyCheck("connected", is_connected(g), f"n={g.n}"))
        hv = heavy_vertices(g)
        checks.append(
            FamilyCheck(
                "two_heavy",
                hv == {roles["x"], roles["y"]},
                f"heavy={sorted(hv)}",
            )
        )
        out = heavy_cycle_or_certificate(g)
        if isinstance(out, CycleSeq):
            checks.append(
                FamilyCheck("no_heavy_cycle", False, f"heavy cycle found: {out.verts}")
            )
        else:
            ok, reasons = validate_certificate(g, out)
            detail = type(out).__name__ + ("" if ok else f": {reasons}")
            if ok and g.n <= 16:
                brute = not has_heavy_cycle_brute(g)
                ok = ok and brute
                detail += "; brute-force confirmed" if brute else "; brute force disagrees"
            checks.append(FamilyCheck("no_heavy_cycle", ok, detail))
        return FamilyReport(fam, params.label(), tuple(checks), True)

    # g1 / g2 / g3
    expect_circ = 2 * params.r + 2
    checks.append(FamilyCheck("two_connected", is_two_connected(g), f"n={g.n}"))
    if fam == "g1":
        checks.append(_free_check(g, "k3"))
        checks.append(_heavy_set_check(g, roles, ("x", "y")))
        omit_roles = ("x", "y")
    elif fam == "g2":
        checks.append(_free_check(g, "p4"))
        checks.append(_free_check(g, "c4"))
        hv = heavy_vertices(g)
        checks.append(
            FamilyCheck("x_heavy", roles["x"] in hv, f"heavy={sorted(hv)}")
        )
        omit_roles = ("x",)
    else:
        checks.append(_free_check(g, "k1_5"))
        checks.append(_heavy_set_check(g, roles, ("x", "y")))
        omit_roles = ("x", "y")

    res = circumference(g, budget)
    if res.exhausted:
        checks.append(
            FamilyCheck(
                "circumference",
                res.length == expect_circ,
                f"{res.length} (proved exact), expected {expect_circ}",
            )
        )
    else:
        exhausted = False
        checks.append(
            FamilyCheck(
                "circumference_lower_bound",
                res.length >= expect_circ,
                f"found {res.length}, proven bounds {res.length} <= c <= {res.upper_bound}",
            )
        )
    if res.exhausted and res.length == expect_circ:
        for role in omit_roles:
            chk, proven = _omits_check(g, roles, role, expect_circ, budget)
            checks.append(chk)
            exhausted = exhausted and proven
        omitted_ok = all(
            c.passed for c in checks if c.name.startswith("longest_omits_")
        )
        heavy_on_board = heavy_vertices(g) & {roles[r] for r in omit_roles}
        checks.append(
            FamilyCheck(
                "longest_cycles_not_heavy",
                omitted_ok and bool(heavy_on_board),
                "every longest cycle misses a heavy vertex"
                if omitted_ok and heavy_on_board
                else "not established",
            )
        )
    return FamilyReport(fam, params.label(), tuple(checks), exhausted)
