"""Exact spectrum multiplicities for cones over projective hypersurfaces
whose reduced variety has isolated singularities.

The package is organized as:

* `conespec.spectrum` -- the exact spectrum-vector value type,
* `conespec.local` -- local germ invariants (quasihomogeneous spectra,
  Milnor numbers, lattice and window counts),
* `conespec.engine` -- the global table and reduced-cone formulas,
* `conespec.formats` -- input dialects, template expressions, table output,
* `conespec.oracle` -- independent brute-force and reference implementations
  for differential testing,
* `conespec.cli` -- the ``conespec`` command.
"""

from .engine import (ConeSpectrumTable, CurveConfig, GlobalComponent,
                     Incidence, ReducedConeConfig, curve_table,
                     euler_complement, euler_generic_union,
                     incidence_consistent, local_data_table,
                     ordinary_middle_row, reduced_cone_spectrum,
                     smooth_cone_coeffs, thickened_spectrum)
from .local import (LocalBranch, SingularPoint, WeightSystem, lattice_count,
                    validate_branches, weighted_milnor, weighted_spectrum,
                    window_count)
from .spectrum import SpectrumVector

__version__ = "0.1.0"

__all__ = [
    "ConeSpectrumTable", "CurveConfig", "GlobalComponent", "Incidence",
    "LocalBranch", "ReducedConeConfig", "SingularPoint", "SpectrumVector",
    "WeightSystem", "curve_table", "euler_complement", "euler_generic_union",
    "incidence_consistent", "lattice_count", "local_data_table",
    "ordinary_middle_row", "reduced_cone_spectrum", "smooth_cone_coeffs",
    "thickened_spectrum", "validate_branches", "weighted_milnor",
    "weighted_spectrum", "window_count",
]
