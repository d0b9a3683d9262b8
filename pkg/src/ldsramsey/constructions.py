"""Extremal colorings witnessing the lower bounds, and their certification.

Both families make the red graph a disjoint union of cliques and the blue
graph complete bipartite, so certification can be argued two ways: by the
exhaustive detector, and analytically from component sizes and bipartition
fit.  certify() runs both on builder outputs and insists they agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Color, IncompleteColoringError, TwoColoring, bits_of
from .detect import _color_structure, find_mono_lds
from .lds import LdsParams, Witness, tree_class_sizes

TWO_CLIQUES = "two-cliques"
CLIQUE_PLUS = "clique-plus"

METHOD_DETECTOR = "detector"
METHOD_DETECTOR_ANALYTIC = "detector+analytic"


class CertificationConsistencyError(RuntimeError):
    """Analytic precheck and detector disagreed; one of them is broken."""


@dataclass(frozen=True)
class CertReport:
    """Outcome of certifying one coloring against one parameter set."""

    params: LdsParams
    construction: str | None
    r: int
    verdict: str  # "certified" | "refuted"
    witness: Witness | None
    method: str

    def to_json_dict(self) -> dict:
        return {
            "construction": self.construction,
            "params": self.params.to_json_dict(),
            "r": self.r,
            "verdict": self.verdict,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "method": self.method,
        }


def _split_coloring(r: int, first_size: int) -> TwoColoring:
    # red inside each block, blue across
    coloring = TwoColoring(r)
    for i in range(r):
        for j in range(i + 1, r):
            same = (i < first_size) == (j < first_size)
            coloring.set_edge(i, j, Color.RED if same else Color.BLUE)
    return coloring


def construct_two_cliques(params: LdsParams) -> TwoColoring:
    """Red = two equal cliques on n+m+p-1 vertices each, blue across.

    Lives on 2(n+m+p)-2 vertices, one short of the first lower-bound
    branch.  Requires an odd link c = 2p+1 with p >= 1 and n+m+p >= 2.
    """
    p = params.p
    if p < 1:
        raise ValueError(f"link must have c >= 3, got c={params.c}")
    half = params.n + params.m + p - 1
    if half < 1:
        raise ValueError(f"degenerate construction: n+m+p must be at least 2, got {half + 1}")
    return _split_coloring(2 * half, half)


def construct_clique_plus(params: LdsParams) -> TwoColoring:
    """Red = K_p plus K_{n+m+2p}, blue across; n+m+3p vertices total.

    Requires an odd link with p >= 1 and at least one star leaf; with
    n = m = 0 the target is a bare odd path and embeds in the blue side,
    so that corner is rejected.
    """
    p = params.p
    if p < 1:
        raise ValueError(f"link must have c >= 3, got c={params.c}")
    if params.n + params.m == 0:
        raise ValueError("n and m may not both be zero for this construction")
    return _split_coloring(params.n + params.m + 3 * p, p)


def analytic_no_mono_verdict(coloring: TwoColoring, params: LdsParams) -> bool | None:
    """Certificate from coarse structure alone, when one is available.

    True: no monochromatic copy can exist (every component of each color is
    too small, or is bipartite with sides that cannot hold the tree's two
    classes).  False: a copy is guaranteed (a big enough clique component,
    or a complete bipartite component whose sides fit).  None: the coarse
    view does not decide.
    """
    if not coloring.is_complete:
        raise IncompleteColoringError("certification requires a complete coloring")
    k = params.vertex_count
    class_a, class_b = tree_class_sizes(params)
    for color in (Color.RED, Color.BLUE):
        adj = coloring.adjacency(color)
        _, _, comps = _color_structure(coloring, color)
        for comp in comps:
            if comp.size < k:
                continue
            inside_edges = sum((adj[v] & comp.mask).bit_count() for v in bits_of(comp.mask)) // 2
            if comp.bipartite:
                x, y = comp.side_sizes
                fits = (class_a <= x and class_b <= y) or (class_a <= y and class_b <= x)
                if not fits:
                    continue
                if inside_edges == x * y:
                    return False  # complete bipartite and the classes fit
                return None
            if inside_edges == comp.size * (comp.size - 1) // 2:
                return False  # a clique at least as large as the target
            return None
    return True


def certify(
    coloring: TwoColoring, params: LdsParams, construction: str | None = None
) -> CertReport:
    """Certified iff the detector finds no monochromatic copy.

    For builder outputs, pass the family name: the analytic precheck then
    runs as well and any disagreement with the detector raises, since that
    can only mean an implementation bug.
    """
    if construction not in (None, TWO_CLIQUES, CLIQUE_PLUS):
        raise ValueError(f"unknown construction {construction!r}")
    witness = find_mono_lds(coloring, params)
    method = METHOD_DETECTOR
    if construction is not None:
        analytic = analytic_no_mono_verdict(coloring, params)
        if analytic is not None:
            if analytic != (witness is None):
                raise CertificationConsistencyError(
                    f"analytic precheck says no-copy={analytic} but detector "
                    f"{'found a witness' if witness else 'found none'}"
                )
            method = METHOD_DETECTOR_ANALYTIC
    return CertReport(
        params=params,
        construction=construction,
        r=coloring.r,
        verdict="certified" if witness is None else "refuted",
        witness=witness,
        method=method,
    )
