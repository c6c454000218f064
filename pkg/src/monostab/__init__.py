"""Monomial ideals: associated primes, v-numbers and their stabilization under powers."""

from .constructions import (
    ground_truth,
    make_H,
    make_J,
    make_paper_ideal,
    make_paper_parts,
    make_triangle,
    predict_ass_disjoint_sum,
    predict_ass_J_power,
    predict_ass_paper,
    predict_H_power_generators,
    predict_v_composites,
    v_H_power,
    v_paper_ideal,
)
from .core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VariableContext,
    alpha,
    colon_monomial,
    contains,
    format_ideal,
    ideal_sum,
    intersection,
    minimalize,
    parse_ideal,
    power,
    product,
)
from .decomposition import (
    IrreducibleComponent,
    associated_primes,
    find_witness,
    irreducible_decomposition,
    localize,
    minimal_primes,
)
from .errors import (
    ArityError,
    CapacityError,
    ImproperIdealError,
    MonoStabError,
    NotAssociatedError,
    ParameterError,
    ParseError,
    PreconditionError,
)
from .stability import (
    build_profile,
    check_index_inequalities,
    detect_astab,
    detect_vstab,
    detect_vstab_p,
)
from .vnumber import VReport, v_global, v_p, vm_two_variable, witness

__version__ = "0.1.0"
