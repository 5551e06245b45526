"""Frozen regression corpus: loads the shipped JSON corpus and checks each
entry against a fresh computation.  Used by `transgress fixtures` and CI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import lattices, spectral, transgression
from .exactlin import det, identity, transpose
from .groupspec import parse_group_spec


@dataclass(frozen=True)
class FixtureResult:
    name: str
    ok: bool
    detail: str


def load_corpus(path=None) -> list[dict]:
    if path is None:
        text = (
            resources.files("transgress").joinpath("data/fixtures.json").read_text()
        )
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    corpus = json.loads(text)
    if not corpus:
        raise ValueError("no fixtures in corpus")
    return corpus


def _exterior_poincare(degrees: tuple[int, ...], up_to: int) -> list[int]:
    """Graded dims of the exterior algebra on generators of odd degrees 2d-1."""
    poly = [1] + [0] * up_to
    for d in degrees:
        gen = 2 * d - 1
        new = poly[:]
        for k in range(up_to - gen + 1):
            new[k + gen] += poly[k]
        poly = new
    return poly


def _check_tau_matrix(fx) -> tuple[bool, str]:
    g = parse_group_spec(fx["spec"])
    tau = transgression.transgression_matrix(g).matrix
    if fx["expect"] == "identity":
        want = identity(g.rank)
    else:  # cartan_transpose
        want = transpose(g.root_system.cartan)
    ok = tau == want
    return ok, "" if ok else f"tau matrix differs from {fx['expect']}"


def _check_modp_table(fx) -> tuple[bool, str]:
    g = parse_group_spec(fx["spec"])
    analysis = transgression.modp_analysis(g, fx["p"])
    problems = []
    if analysis.kernel.dim != fx["kernel_dim"]:
        problems.append(f"kernel dim {analysis.kernel.dim} != {fx['kernel_dim']}")
    if analysis.cokernel.dim != fx["cokernel_dim"]:
        problems.append(
            f"cokernel dim {analysis.cokernel.dim} != {fx['cokernel_dim']}"
        )
    if not analysis.kernel_contains(tuple(fx["kernel_member"])):
        problems.append(f"stated kernel member {fx['kernel_member']} not in kernel")
    if not analysis.cokernel_class_is_nonzero(tuple(fx["cokernel_class"])):
        problems.append(
            f"stated cokernel class {fx['cokernel_class']} vanishes in cokernel"
        )
    return not problems, "; ".join(problems)


def _check_det_law(fx) -> tuple[bool, str]:
    g0 = parse_group_spec(fx["spec"])
    rs = g0.root_system
    center = lattices.center_group(rs)
    for sub in lattices.enumerate_pi1_choices(center):
        g = lattices.group_spec(rs, sub.generators)
        tau = transgression.transgression_matrix(g).matrix
        if abs(det(tau)) != sub.order:
            return False, f"{sub.label}: |det| {abs(det(tau))} != order {sub.order}"
        for p in (2, 3, 5, 7):
            iso = transgression.modp_analysis(g, p).is_isomorphism
            if iso != (sub.order % p != 0):
                return False, f"{sub.label}: mod-{p} isomorphism flag wrong"
    return True, ""


def _check_kac(fx) -> tuple[bool, str]:
    g = parse_group_spec(fx["spec"])
    primes = transgression.singular_primes(g)
    if fx.get("primes") is not None and primes != fx["primes"]:
        return False, f"singular primes {primes} != {fx['primes']}"
    if fx.get("nonempty") and not primes:
        return False, "expected a singular prime, found none"
    return True, ""


def _check_e3_rational(fx) -> tuple[bool, str]:
    g = parse_group_spec(fx["spec"])
    page = spectral.build_e2(g, coefficients=None)
    got = spectral.e3_ranks(page)
    degrees = spectral.weyl_degrees(page.weyl)
    dim_g = g.root_system.lie_type.dim_group
    want = _exterior_poincare(degrees, dim_g)
    have = list(got.as_tuple(dim_g))
    ok = have == want
    return ok, "" if ok else f"E3 ranks {have} != exterior algebra {want}"


def _check_e3_modp(fx) -> tuple[bool, str]:
    g = parse_group_spec(fx["spec"])
    up_to = fx["up_to"]
    page = spectral.build_e2(g, coefficients=fx["p"], max_total_degree=up_to)
    have = list(spectral.e3_ranks(page).as_tuple(up_to))
    ok = have == fx["ranks"]
    return ok, "" if ok else f"mod-{fx['p']} E3 ranks {have} != {fx['ranks']}"


_CHECKERS = {
    "tau_matrix": _check_tau_matrix,
    "modp_table": _check_modp_table,
    "det_law": _check_det_law,
    "kac": _check_kac,
    "e3_rational": _check_e3_rational,
    "e3_modp": _check_e3_modp,
}


def run_fixtures(corpus=None, path=None) -> list[FixtureResult]:
    if corpus is None:
        corpus = load_corpus(path)
    results = []
    for fx in corpus:
        checker = _CHECKERS.get(fx["kind"])
        if checker is None:
            results.append(
                FixtureResult(fx.get("name", "?"), False, f"unknown kind {fx['kind']}")
            )
            continue
        try:
            ok, detail = checker(fx)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(FixtureResult(fx["name"], ok, detail))
    return results
