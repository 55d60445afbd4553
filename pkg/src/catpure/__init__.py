"""Finite-scale workbench for purity, weak (co)limits and
quotient-equivalence classes of morphisms in concrete finite categories."""

__version__ = "0.1.0"

from .errors import (CatpureError, CapExceededError, FormatError,
                     MissingLimitError, PreconditionError, UsageError,
                     default_bound)
from .modules import ModObject, ModMorphism
from .modcat import (ModuleCategory, fin_mod, fin_vect, capped_category,
                     category_from_descriptor, morphism_from_literal,
                     morphism_to_literal, object_to_literal)
from .finitecat import FiniteCategory, walking_arrow
from .core import (is_mono, is_epi, find_retraction, find_section,
                   has_retraction, has_section)
from .colimits import (LimitWitness, VwckResult, VwspResult,
                       product, coproduct, pushout, pullback,
                       equalizer, coequalizer,
                       vwck_construct_via_product, vwck_search,
                       vwsp_construct_via_coproduct, vwsp_search,
                       results_isomorphic)
from .purity import (TestSuite, SquareInto, PurityReport,
                     FactorizationWitness, StabilityReport,
                     is_pure_mono, is_pure_epi,
                     is_strongly_pure_mono, is_strongly_pure_epi,
                     factor_square_through_split_mono,
                     factor_square_through_split_epi,
                     check_regular_mono, check_regular_epi,
                     stability_suite_pushout_pure_monos,
                     stability_suite_pullback_pure_epis)
from .chains import (ChainSystem, ChainMorphism, ChainColimit,
                     chain_colimit, colimit_of_chain_morphism,
                     verify_colimit_purity, constant_chain,
                     chain_from_json, chain_morphism_from_json)
from .qe import (MorphismClass, QeReport, RetractReport,
                 CharacterizationReport, class_from_descriptor,
                 split_mono_class, split_epi_class, regular_epi_class,
                 coker_div_class, ker_div_class, identity_class,
                 all_class, all_mono_class, all_epi_class,
                 validate_qe_mono, validate_qe_epi, validate_strong_qe_epi,
                 check_retract_closed, check_strong_characterization,
                 extract_m_sequence, extract_p_sequence,
                 limclass_membership)
from .checks import CHECKS, CheckResult, run_check, run_suite
