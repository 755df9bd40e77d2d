"""Exact non-commutative binomial expansions (Python bindings)."""

import json

from ._core import (
    NCPoly,
    ParamPoly,
    Poly1,
    RelationSystem,
    RewriteError,
    __version__,
    ab_gen,
    brute_expand,
    closed_form_hsq,
    closed_form_weyl,
    corollary1_expand,
    essential_d,
    exp_identity_defect,
    gamma,
    hermite_he,
    lambda_expansion,
    lemma3_defect,
    lemma4_defect,
    m_n,
    nc_a_plus_db_pow_one,
    nc_derivation,
    nc_pow,
    run_suite,
    theorem1_expand,
    theorem2_expand,
    weyl_coeff,
    x2d_check,
)
from ._core import expand as _expand


def expand(n, method="theorem1", system=None):
    """Expansion report as a dict with keys n, method, relation, oracle_match, result."""
    return json.loads(_expand(n, method, system))


__all__ = [name for name in dir() if not name.startswith("_")]
