"""Tango invariants of curves in characteristic p and certified failures of
Kawamata-Viehweg vanishing on ruled surfaces over them."""
from .curves import CurveModel, Family, Place, local_parametrization, make_curve, smoothness_check
from .divisors import CurveDivisor, divisor_of_differential, divisor_of_function, p_floor, round_down
from .errors import (DivisibilityFailure, FrobeniusKernel, InputNotInScope, NoConvergence, NotLogTerminal,
                     NotTango, ParamViolation, PrecisionExhausted, PreconditionViolation, SmoothnessFailure,
                     SupportLeak, TangoKVError, UnsupportedConfiguration)
from .fields import GF, FiniteField
from .functions import RationalFunction
from .lattice import SurfaceClass, SurfaceLattice, ample_test, canonical_class, intersect
from .oracle import SemigroupData, h0_one_point, h1_curve, kodaira_grid_check, split_h1_surface
from .pathology import (KVCertificate, PairData, blowup_transport, construct_3_1, cor_3_4_check, klt_check,
                        kv_classifier, lemma_4_3_bound, preset_dagger, thm_3_5_plan)
from .tango import TangoReport, classify, lemma_2_5_test, n_of, tango_search

__version__ = "0.1.0"
