"""Exact stability analysis for Tschirnhausen bundles of branched curve covers.

Given a finite cover of smooth curves, the pushforward of the structure
sheaf splits off a trivial summand; the dual of the complement is the
Tschirnhausen bundle.  This package decides and certifies its (semi)stability
with exact arithmetic throughout:

* unramified covers, by a character-sum / pair-orbit criterion on the
  monodromy group (:mod:`tschirn.etale`, :mod:`tschirn.perms`,
  :mod:`tschirn.families`);
* rational targets, by the balanced splitting-type calculus
  (:mod:`tschirn.splitting`);
* elliptic targets, by gluing ledgers for nodal degenerations of cyclic
  covers (:mod:`tschirn.elliptic`);
* higher-genus targets, by machine-checkable degeneration certificates
  (:mod:`tschirn.certificates`).
"""

from __future__ import annotations

__version__ = "0.1.0"

from ._kernels import backend_name
from .certificates import (
    Certificate,
    CertificateRejection,
    EllipticLeaf,
    EtaleLeaf,
    GlueNode,
    P1Leaf,
    build_certificate,
    check_certificate,
    deserialize,
    serialize,
)
from .covers import (
    CoverNumerics,
    Slope,
    branch_count,
    cover_numerics,
    destabilizer_scan,
    factorization_instability,
)
from .elliptic import (
    BundleSummand,
    FormalBundle,
    GluedCoverReport,
    GluingDatum,
    cyclic_tsch,
    elliptic_semistability_verdict,
    glued_cover_ledger,
    is_semistable,
    is_stable,
)
from .etale import (
    DiagonalDatum,
    character_sum,
    cyclic_diagonal_subreps,
    etale_stability,
    standard_rep_irreducible,
)
from .families import (
    FiniteField,
    agl1,
    alternating_group,
    cyclic_group,
    finite_field,
    pgl2,
    psl2,
    symmetric_group,
)
from .perms import (
    PermGroup,
    Permutation,
    enumerate_elements,
    fixed_point_count,
    group_order,
    is_transitive,
    orbit_count_ordered_pairs,
    orbit_count_points,
    perm_from_cycles,
    perm_from_image_text,
)
from .splitting import (
    SplittingType,
    balanced_type,
    general_p1_splitting,
    generic_negative_modification,
    glue_deform,
    is_balanced,
    is_perfectly_balanced,
)
from .verdicts import StabilityTag, StabilityVerdict
