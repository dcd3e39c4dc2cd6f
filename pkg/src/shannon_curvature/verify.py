"""Verification suites over seeded corpora.

Each suite evaluates independent cases ``0..count-1``; a case is a plain
dict of JSON-friendly values with an ``ok`` flag.  Cases can be spread over
worker processes and always come back sorted by case index.
"""

from dataclasses import dataclass, field
from functools import partial

from .corpus import G_LIMITS, H_LIMITS, corpus_graph, corpus_pair, make_rng, random_endomorphism
from .curvature import (
    cylinder_decomposition_check,
    gauss_bonnet_report,
    sphere_index_product,
    sphere_join_homotopy_check,
    verify_curvature_product,
)
from .graph import strong_product
from .homology import (
    euler_poincare_check,
    fixed_simplex_index_sum,
    homological_lefschetz_number,
    lefschetz_number,
    verify_kunneth,
    verify_lefschetz_product,
)
from .morse import ph_report, random_coloring, random_tensor_colorings, verify_index_product
from .parallel import pmap
from .simplicial import generating_function, generating_function_recursive
from .wu import wu_product_survey, wu_report


def _shape(g):
    return "%d/%d" % (len(g), g.num_edges)


def _pair_case(i, g, h):
    return {"case": i, "G": _shape(g), "H": _shape(h)}


def case_theorem1(seed, limits, i):
    g, h = corpus_pair(seed, i, *limits)
    gh = strong_product(g, h)
    rep = verify_curvature_product(g, h, gh)
    out = _pair_case(i, g, h)
    out.update(vertices=len(rep.rows), mismatches=len(rep.mismatches), ok=rep.ok)
    return out


def case_index_product(seed, limits, i):
    g, h = corpus_pair(seed, i, *limits)
    gh = strong_product(g, h)
    f, k, _ = random_tensor_colorings(g, h, seed, 3, i, gh=gh)
    rep = verify_index_product(g, h, f, k, gh)
    out = _pair_case(i, g, h)
    out.update(vertices=len(rep.rows), mismatches=len(rep.mismatches), chi=rep.chi, ok=rep.ok)
    return out


def case_gauss_bonnet(seed, limits, i):
    g, h = corpus_pair(seed, i, *limits)
    reps = [gauss_bonnet_report(x) for x in (g, h, strong_product(g, h))]
    out = _pair_case(i, g, h)
    out.update(chi=[r.chi for r in reps], curvature_sum=[str(r.sum) for r in reps],
               ok=all(r.equal for r in reps))
    return out


def case_poincare_hopf(seed, limits, i):
    g, h = corpus_pair(seed, i, *limits)
    graphs = (g, h, strong_product(g, h))
    reps = [ph_report(x, random_coloring(x, seed, 4, i, j)) for j, x in enumerate(graphs)]
    out = _pair_case(i, g, h)
    out.update(chi=[r.chi for r in reps], index_sum=[r.sum for r in reps],
               ok=all(r.equal for r in reps))
    return out


def case_kunneth(seed, limits, i):
    g, h = corpus_pair(seed, i, *limits)
    gh = strong_product(g, h)
    rep = verify_kunneth(g, h, gh)
    ep = [euler_poincare_check(x) for x in (g, h, gh)]
    out = _pair_case(i, g, h)
    out.update(p_GH=list(rep.product), p_G_times_p_H=list(rep.factor_product),
               euler_poincare=all(r.ok for r in ep), ok=rep.ok and all(r.ok for r in ep))
    return out


def case_cylinder(seed, limits, i):
    g, h = corpus_pair(seed, i, *limits)
    gh = strong_product(g, h)
    reps = [cylinder_decomposition_check(g, h, x, y, gh) for x in g.vertices for y in h.vertices]
    out = _pair_case(i, g, h)
    out.update(vertices=len(reps), failures=sum(not r.ok for r in reps),
               ok=all(r.ok for r in reps))
    return out


def case_sphere_join(seed, limits, i):
    g, h = corpus_pair(seed, i, *limits)
    gh = strong_product(g, h)
    bad = 0
    bad_index = 0
    for x in g.vertices:
        for y in h.vertices:
            if not sphere_join_homotopy_check(g, h, x, y, gh).ok:
                bad += 1
            left, right = sphere_index_product(g, h, x, y, gh)
            bad_index += left != right
    out = _pair_case(i, g, h)
    out.update(vertices=len(gh), failures=bad, index_failures=bad_index,
               ok=bad == 0 and bad_index == 0)
    return out


def case_lefschetz(seed, limits, i):
    rng = make_rng(seed, 5, i)
    g, h = corpus_pair(seed, i, *limits)
    t, s = random_endomorphism(g, rng), random_endomorphism(h, rng)
    single = []
    for graph, e in ((g, t), (h, s)):
        chain = lefschetz_number(graph, e)
        fixed = fixed_simplex_index_sum(graph, e)
        homol = homological_lefschetz_number(graph, e)
        single.append((chain, fixed, homol))
    prod = verify_lefschetz_product(t, s)
    out = _pair_case(i, g, h)
    out.update(
        L_G=single[0][0], L_H=single[1][0], L_GH=prod.lefschetz[0], fixed_GH=prod.fixed_sum[0],
        ok=all(a == b == c for a, b, c in single) and prod.ok,
    )
    return out


def case_wu_product(seed, limits, i):
    g, h = corpus_pair(seed, i, *limits)
    gh = strong_product(g, h)
    survey = wu_product_survey(g, h, gh)
    conserved = all(wu_report(x).sum_equals_wu for x in (g, h, gh))
    out = _pair_case(i, g, h)
    out.update(vertices=survey.vertices, differences=len(survey.differences),
               wu=list(survey.wu), wu_multiplicative=survey.wu_multiplicative,
               witness=[str(x) for x in survey.differences[0]] if survey.differences else None,
               ok=conserved)
    return out


def case_recursion(seed, limits, i):
    g = corpus_graph(seed, i, limits[0])
    a, b = generating_function_recursive(g), generating_function(g, "enumerate")
    return {"case": i, "G": _shape(g), "f": list(a), "ok": a == b}


# name -> (case function, default (G limits, H limits), default case count)
SUITES = {
    "theorem1": (case_theorem1, (G_LIMITS, H_LIMITS), 100),
    "index-product": (case_index_product, (G_LIMITS, H_LIMITS), 100),
    "gauss-bonnet": (case_gauss_bonnet, (G_LIMITS, H_LIMITS), 100),
    "poincare-hopf": (case_poincare_hopf, (G_LIMITS, H_LIMITS), 100),
    "kunneth": (case_kunneth, ((6, 15), (6, 15)), 100),
    "lefschetz": (case_lefschetz, ((4, 6), (4, 6)), 30),
    "cylinder": (case_cylinder, (G_LIMITS, H_LIMITS), 100),
    "sphere-join": (case_sphere_join, (G_LIMITS, H_LIMITS), 100),
    "wu-product": (case_wu_product, ((4, 5), (3, 3)), 30),
    "recursion": (case_recursion, (G_LIMITS, G_LIMITS), 50),
}


@dataclass
class SuiteResult:
    name: str
    seed: int
    cases: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c["ok"] for c in self.cases)

    @property
    def failures(self):
        return [c["case"] for c in self.cases if not c["ok"]]


def run_suite(name, count=None, seed=0, max_vertices=None, max_edges=None, workers=1):
    """Run a named suite; ``max_vertices``/``max_edges`` override both factors' limits."""
    if name not in SUITES:
        raise KeyError("unknown suite %r" % (name,))
    fn, (gl, hl), default = SUITES[name]
    if max_vertices is not None or max_edges is not None:
        gl = (max_vertices or gl[0], gl[1] if max_edges is None else max_edges)
        hl = (max_vertices or hl[0], hl[1] if max_edges is None else max_edges)
    count = default if count is None else count
    cases = pmap(partial(fn, seed, (gl, hl)), range(count), workers)
    return SuiteResult(name, seed, sorted(cases, key=lambda c: c["case"]))
