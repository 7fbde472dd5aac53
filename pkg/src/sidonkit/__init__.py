"""Large Sidon sets in F_2^t from highly linear APN functions.

Submodules: ``gf2core`` (field and bit-vector arithmetic), ``vbf`` (Walsh
spectra, differential uniformity), ``sidon`` (Sidon predicates and hyperplane
slicing), ``families`` (named constructions and size formulas), ``codes``
(distance-5 codes) and ``cli``.
"""

from .codes import (
    LinearCodeSpec,
    exact_min_distance,
    export_parity_check,
    import_parity_check,
    sidon_to_code,
    verify_distance_ge5,
)
from .errors import CapacityError, FormatError
from .families import (
    apn_slice_sidon,
    classical_size,
    dobbertin_function,
    gold_function,
    graph,
    inverse_function,
    inverse_linearity_formula,
    mult_subgroup_sidon,
    sidon_upper_bound,
)
from .gf2core import FieldContext, default_modulus, gf2_inv, gf2_mul, gf2_pow
from .sidon import (
    PointSet,
    best_hyperplane_slice,
    is_maximal_sidon,
    is_sidon,
    is_sum_free,
    read_point_set,
    set_linearity,
    set_walsh,
    write_point_set,
)
from .vbf import (
    VectorialBooleanFunction,
    differential_uniformity,
    is_apn,
    linearity,
    read_truth_table,
    walsh_spectrum,
    write_truth_table,
)

__version__ = "0.1.0"


def sidon_15_192() -> PointSet:
    """The bundled maximal 192-point Sidon set in F_2^15."""
    from importlib import resources

    with resources.files(__name__).joinpath("data/sidon_15_192.txt").open() as fh:
        return read_point_set(fh)
