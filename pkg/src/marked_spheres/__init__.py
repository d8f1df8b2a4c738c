"""Symmetries, branch loci and real loci of moduli spaces of marked spheres."""

from .action import (
    CertificationError,
    CrossCheckError,
    DegenerateConfigurationError,
    OmegaPoint,
    Symmetry,
    apply_symmetry,
    apply_theta,
    certify,
    stabilizer,
)
from .branchlocus import Stratum, branch_component_count, enumerate_strata, stratum_graph
from .fixedloci import FixedLocusReport, fixed_locus_report, witness
from .moebius import Mobius, cross_ratio_normalizer
from .oracle import delta_system_solve, dihedral_witness, klein_witness
from .perm import FixedClass, Permutation, canonical_rep, classify_fixed_point_class
from .reallocus import (
    intersection_graph,
    intersects,
    real_component_count,
    real_witness,
    symmetry_class_count,
)
from .scalars import INF, GaussianRational

__version__ = "0.1.0"
