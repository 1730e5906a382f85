"""Cross-check battery: engine output against every oracle and identity.

Oracles are looked up on the :mod:`tuttepoly.oracles` module at call time,
so a test can monkeypatch one to watch the battery fail.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Callable

from . import oracles
from . import sandpile as sp
from . import specializations as spz
from .engine import TutteEngine, tg_invariant_eval, tutte, tutte_eval
from .errors import BudgetExceededError
from .matrix_tree import spanning_tree_count
from .multigraph import MultiGraph, count_components, rank
from .oracles import Budgets, DEFAULT_BUDGETS
from .polynomial import BiPoly, UniPoly


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _eq(a, b) -> tuple[bool, str]:
    return a == b, "" if a == b else f"{a} != {b}"


class _Battery:
    def __init__(self, g: MultiGraph, budgets: Budgets, seed: int, orders: int):
        self.g = g
        self.budgets = budgets
        self.seed = seed
        self.orders = orders
        self.t = tutte(g)
        self.connected = count_components(g.vertex_count, g.edges) <= 1
        self.results: list[CheckResult] = []

    def run(self, name: str, fn: Callable[[], tuple[bool, str] | bool]) -> None:
        try:
            out = fn()
        except BudgetExceededError as exc:
            self.results.append(CheckResult(name, True, f"skipped: {exc}"))
            return
        except Exception as exc:  # a crash inside a check is a failure, not an abort
            self.results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
            return
        ok, detail = out if isinstance(out, tuple) else (bool(out), "")
        self.results.append(CheckResult(name, ok, detail))

    def evals(self, x, y) -> int:
        return self.t.eval(x, y)

    # -- definitions of T ---------------------------------------------------

    def definitions(self):
        g, b = self.g, self.budgets
        self.run("rank-nullity expansion", lambda: _eq(self.t, oracles.tutte_rank_nullity(g, b)))
        if self.connected:
            rng = random.Random(self.seed)

            def activities():
                for _ in range(self.orders):
                    order = list(range(g.edge_count))
                    rng.shuffle(order)
                    got = oracles.tutte_activities(g, order, b)
                    if got != self.t:
                        return False, f"order {order}: {got}"
                return True, ""

            self.run(f"activities under {self.orders} edge orders", activities)
        self.run("random pivot order", lambda: _eq(TutteEngine(pivot_rng=random.Random(self.seed))(g), self.t))
        self.run("strong memo key", lambda: _eq(tutte(g, key_mode="strong"), self.t))
        self.run(
            "block factorization",
            lambda: _eq(spz.product([p for _, p in spz.block_factorization(g)]), self.t),
        )
        for pt in ((Fraction(1, 2), Fraction(-3, 2)), (3, -1), (Fraction(-2, 3), 0)):
            self.run(f"point evaluation at {pt[0]},{pt[1]}", lambda pt=pt: _eq(tutte_eval(g, *pt), self.t.eval(*pt)))

    # -- evaluations ------------------------------------------------------------

    def interpretations(self):
        g, b = self.g, self.budgets
        self.run("T(1,1) spanning trees", lambda: _eq(self.evals(1, 1), oracles.count_spanning_trees(g, b)) if self.connected else (True, "n/a"))
        self.run("T(2,1) spanning forests", lambda: _eq(self.evals(2, 1), oracles.count_spanning_forests(g, b)))
        self.run("T(1,2) spanning connected", lambda: _eq(self.evals(1, 2), oracles.count_spanning_connected(g, b)))
        self.run("T(2,2) subsets", lambda: _eq(self.evals(2, 2), oracles.count_subsets(g, b)))
        self.run("T(2,0) acyclic orientations", lambda: _eq(self.evals(2, 0), oracles.count_acyclic_orientations(g, b)))
        self.run("T(0,2) totally cyclic orientations", lambda: _eq(self.evals(0, 2), oracles.count_totally_cyclic(g, b)))
        self.run("T(2,1) score vectors", lambda: _eq(self.evals(2, 1), oracles.count_score_vectors(g, b)))
        if self.connected:

            def unique_source():
                want = self.evals(1, 0)
                for v in range(g.vertex_count):
                    got = oracles.count_acyclic_unique_source(g, v, b)
                    if got != want:
                        return False, f"source {v}: {got} != {want}"
                return True, ""

            self.run("T(1,0) unique-source acyclic orientations", unique_source)

            def cofactors():
                want = self.evals(1, 1)
                for v in range(g.vertex_count):
                    got = spanning_tree_count(g, v)
                    if got != want:
                        return False, f"cofactor {v}: {got} != {want}"
                return True, ""

            self.run("matrix-tree, every cofactor", cofactors)
        self.run(
            "bicycle T(-1,-1)",
            lambda: _eq(self.evals(-1, -1), (-1) ** g.edge_count * (-2) ** oracles.bicycle_dimension(g)),
        )
        if g.vertex_count and all(d == 4 for d in g.degrees()):
            def ice():
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", oracles.LoopConventionWarning)
                    return _eq(abs(self.evals(0, -2)), oracles.count_ice_configurations(g, b))
            self.run("ice configurations |T(0,-2)|", ice)

    # -- specializations ------------------------------------------------------

    def specializations(self):
        g, b, t = self.g, self.budgets, self.t
        chi = spz.chromatic_polynomial(g, t)
        self.run("chromatic: Tutte vs Whitney", lambda: _eq(chi, spz.chromatic_whitney(g, b)))
        self.run(
            "chromatic: proper colourings 0..4",
            lambda: _eq([chi(k) for k in range(5)], [spz.count_proper_colorings(g, k, b) for k in range(5)]),
        )
        flow = spz.flow_polynomial(g, t)
        self.run(
            "flow: nowhere-zero Z_k flows 1..4",
            lambda: _eq([flow(k) for k in range(1, 5)], [oracles.count_nowhere_zero_flows(g, k, budgets=b) for k in range(1, 5)]),
        )
        bad = spz.bad_coloring_via_tutte(g, t)
        self.run("bad colouring: Tutte vs subset sum", lambda: _eq(bad, spz.bad_coloring_polynomial(g, b)))

        def bad_counts():
            for lam in (1, 2, 3):
                line = bad.substitute_line("x", lam)
                want = [line.coefficient(j) for j in range(g.edge_count + 1)]
                got = spz.count_bad_colorings(g, lam, b)
                if got != want:
                    return False, f"lambda={lam}: {got} != {want}"
            return True, ""

        self.run("bad colouring: counts at lambda 1..3", bad_counts)
        self.run("bad colouring at t=0 is chromatic", lambda: _eq(bad.substitute_line("y", 0), chi))
        if self.connected:
            self.run("reliability: Tutte vs subsets", lambda: _eq(spz.reliability_polynomial(g, t), spz.reliability_bruteforce(g, b)))

            def faces():
                f_enum, f_star_enum = spz.face_enumerators(g, t)
                f, f_star = spz.face_vectors_direct(g, b)
                ok = f_enum == spz.enumerator_from_vector(f) and f_star_enum == spz.enumerator_from_vector(f_star)
                return ok, "" if ok else f"{f_enum} / {f_star_enum} vs {f} / {f_star}"

            self.run("face vectors", faces)

            def shelling():
                h, h_star = spz.shelling_polynomials(g, t)
                hv, hv_star = spz.h_vectors(g, t)
                shifted = h.compose(UniPoly.var() + 1) == spz.face_enumerators(g, t)[0]
                return shifted and min(hv + hv_star) >= 0
            self.run("shelling: h(x+1) = f(x), h >= 0", shelling)

    # -- identities ---------------------------------------------------------------

    def identities(self):
        g, b, t = self.g, self.budgets, self.t
        m = g.edge_count
        self.run("Brylawski relations", lambda: spz.brylawski_coefficient_check(t, min(m, 6)))
        self.run("convolution identity", lambda: spz.convolution_identity_check(g, t, b))
        self.run("chromatic vertex-split identity", lambda: spz.tutte_chromatic_identity_check(g, b))
        beta = spz.beta_invariant(g, b)
        if m >= 2:
            self.run("beta = t10 = t01", lambda: _eq((beta, beta), spz.beta_from_tutte(g, t)))
        chi = spz.chromatic_polynomial(g, t)
        if m >= 1:
            # differentiating (-1)^r λ^κ T(1 - λ, 0) at λ = 1 gives (-1)^(r+1) t_10
            self.run("chromatic derivative at 1", lambda: _eq(chi.derivative()(1), (-1) ** (rank(g) + 1) * beta))
        if m <= 10:

            def glv():
                rng = random.Random(self.seed + 1)
                order = list(range(m))
                rng.shuffle(order)
                table = oracles.orientation_activities(g, order, b)
                return _eq(oracles.tutte_from_orientation_activities(table), t)

            self.run("orientation activities", glv)

        def derivatives():
            order = list(range(m))
            random.Random(self.seed + 2).shuffle(order)
            table = oracles.derivative_table(g, order, b)
            for p in range(3):
                for q in range(3):
                    want = t.partial_derivative(p, q)
                    got = table.get((p, q), BiPoly.zero()).scale(factorial(p) * factorial(q))
                    if got != want:
                        return False, f"(p,q)=({p},{q}): {got} != {want}"
            return True, ""

        self.run("derivatives via generalized activities", derivatives)

        def recipe():
            r, nul = rank(g), m - rank(g)
            profile = oracles.rank_nullity_profile(g, b)
            for a_, b_, x0, y0 in ((2, 3, 5, 7), (Fraction(1, 2), -1, 3, Fraction(2, 3)), (0, 1, 2, 1), (1, 0, 1, 2)):
                a_, b_, x0, y0 = (Fraction(v) for v in (a_, b_, x0, y0))
                # sum_A a^(n(E)-n(A)) b^r(A) (x0-b)^(r(E)-r(A)) (y0-a)^n(A)
                want = Fraction(0)
                for (cr, null), cnt in profile.items():
                    want += cnt * a_ ** (nul - null) * b_ ** (r - cr) * (x0 - b_) ** cr * (y0 - a_) ** null
                got = tg_invariant_eval(g, a_, b_, x0, y0, t)
                if got != want:
                    return False, f"a={a_} b={b_} x0={x0} y0={y0}: {got} != {want}"
            return True, ""

        self.run("recipe theorem vs subset sum", recipe)

    # -- sandpile -----------------------------------------------------------------

    def sandpile(self):
        g, b = self.g, self.budgets
        if not self.connected or g.vertex_count < 1:
            return
        if prod(g.degree(v) for v in range(g.vertex_count)) > b.max_configs:
            self.results.append(CheckResult("sandpile", True, "skipped: stable space too large"))
            return
        want = self.t.substitute_line("x", 1)
        bound = g.edge_count - g.vertex_count + 1

        def every_sink():
            for q in range(g.vertex_count):
                rec = sp.recurrent_configurations(g, q, b)
                got = sp.critical_config_polynomial(g, q, b)
                if got != want:
                    return False, f"sink {q}: {got} != {want}"
                if not all(0 <= sp.level(c) <= bound for c in rec):
                    return False, f"sink {q}: level out of [0, {bound}]"
            return True, ""

        self.run("sandpile P_q = T(1,y), every sink, level bounds", every_sink)

        def abelian():
            rng = random.Random(self.seed + 3)
            q = 0
            if g.vertex_count == 1:
                return True, "n/a"
            for _ in range(5):
                heights = [rng.randrange(0, 3 * max(1, g.degree(v))) for v in range(g.vertex_count) if v != q]
                c = sp.SandpileConfig(g, q, tuple(heights))
                ref = sp.stabilize(c)
                for _ in range(10):
                    if sp.stabilize(c, random.Random(rng.random())) != ref:
                        return False, f"start {heights}"
            return True, ""

        self.run("sandpile abelian property", abelian)


def verify_graph(
    g: MultiGraph, budgets: Budgets | None = None, seed: int = 0, orders: int = 10, sandpile: bool = True
) -> list[CheckResult]:
    """Run every applicable check on ``g`` and return one result per check."""
    bat = _Battery(g, budgets or DEFAULT_BUDGETS, seed, orders)
    bat.definitions()
    bat.interpretations()
    bat.specializations()
    bat.identities()
    if sandpile:
        bat.sandpile()
    return bat.results


def verify_dual_pairs() -> list[CheckResult]:
    from .catalog import dual_pairs

    out = []
    for name, g, h, bij in dual_pairs():
        rep = spz.duality_report(g, h, bij)
        bad = [k for k, ok in rep.items() if not ok]
        out.append(CheckResult(f"duality {name}", not bad, ", ".join(bad)))
    return out
