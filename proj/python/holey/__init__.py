"""Hole-maximizing polyominoes: constructions, bounds, and enumeration.

The heavy lifting lives in the compiled extension ``holey._core``. For
in-tree testing (extension built by CMake but not installed), set
``HOLEY_EXT_DIR`` to the directory containing the built module.
"""

import os


def _load_core():
    try:
        from holey import _core  # installed layout

        return _core
    except ImportError:
        ext_dir = os.environ.get("HOLEY_EXT_DIR")
        if not ext_dir:
            raise
        import importlib.util
        import glob

        candidates = glob.glob(os.path.join(ext_dir, "_core*.so")) + glob.glob(
            os.path.join(ext_dir, "_core*.pyd")
        )
        if not candidates:
            raise ImportError(f"no _core extension found in {ext_dir}")
        spec = importlib.util.spec_from_file_location("holey._core", candidates[0])
        module = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(module)
        return module


_core = _load_core()

Polyomino = _core.Polyomino
MetricsReport = _core.MetricsReport
Symmetry = _core.Symmetry
Family = _core.Family
ConstructionReport = _core.ConstructionReport
Theorem1Values = _core.Theorem1Values
Theorem2Check = _core.Theorem2Check
CensusRow = _core.CensusRow
EnumerationTable = _core.EnumerationTable
SearchResult = _core.SearchResult
HoleyError = _core.HoleyError

metrics = _core.metrics
holes = _core.holes
transform = _core.transform
rotate_about_tile_center = _core.rotate_about_tile_center
serialize = _core.serialize
parse = _core.parse
render_ascii = _core.render_ascii
render_svg = _core.render_svg
random_polyomino = _core.random_polyomino

build_s = _core.build_s
build_a = _core.build_a
build_r = _core.build_r
build_r_ext = _core.build_r_ext
build_r_prime = _core.build_r_prime
extension_capacity = _core.extension_capacity
mk = _core.mk
tk = _core.tk

p_min = _core.p_min
b_min = _core.b_min
p_max_upper = _core.p_max_upper
ub_from_lb = _core.ub_from_lb
ub_fixed_point = _core.ub_fixed_point
nk = _core.nk
hk = _core.hk
g_of_hk = _core.g_of_hk
exact_formula = _core.exact_formula
exact_formula_exact = _core.exact_formula_exact
theorem1_values = _core.theorem1_values
theorem2_check = _core.theorem2_check

census = _core.census
enumerate_fixed = _core.enumerate_fixed
g_table = _core.g_table
search_g = _core.search_g

__all__ = [
    "Polyomino",
    "MetricsReport",
    "Symmetry",
    "Family",
    "ConstructionReport",
    "Theorem1Values",
    "Theorem2Check",
    "CensusRow",
    "EnumerationTable",
    "SearchResult",
    "HoleyError",
    "metrics",
    "holes",
    "transform",
    "rotate_about_tile_center",
    "serialize",
    "parse",
    "render_ascii",
    "render_svg",
    "random_polyomino",
    "build_s",
    "build_a",
    "build_r",
    "build_r_ext",
    "build_r_prime",
    "extension_capacity",
    "mk",
    "tk",
    "p_min",
    "b_min",
    "p_max_upper",
    "ub_from_lb",
    "ub_fixed_point",
    "nk",
    "hk",
    "g_of_hk",
    "exact_formula",
    "exact_formula_exact",
    "theorem1_values",
    "theorem2_check",
    "census",
    "enumerate_fixed",
    "g_table",
    "search_g",
]
