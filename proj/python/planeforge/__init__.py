"""Projective plane expansion certificates, 2-collapsibility, and
convex-representation audits."""

from planeforge._core import (
    Field,
    Plane,
    SimplicialComplex,
    audit_representation_json,
    build_plane,
    dual,
    expansion_audit_exhaustive,
    expansion_audit_sampled,
    full_simplex,
    gram,
    gram_certificate,
    kq_collapse_steps,
    kq_complex,
    missed_lines,
    nerve_f_vector,
    search_greedy,
    simplex_collapse_steps,
    tanner_lower_bound,
    verify_axioms,
    verify_sequence,
)

__all__ = [
    "Field",
    "Plane",
    "SimplicialComplex",
    "audit_representation_json",
    "build_plane",
    "dual",
    "expansion_audit_exhaustive",
    "expansion_audit_sampled",
    "full_simplex",
    "gram",
    "gram_certificate",
    "kq_collapse_steps",
    "kq_complex",
    "missed_lines",
    "nerve_f_vector",
    "search_greedy",
    "simplex_collapse_steps",
    "tanner_lower_bound",
    "verify_axioms",
    "verify_sequence",
]
