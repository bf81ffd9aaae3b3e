"""Exact computations with anti-dendriform algebras.

Objects are plain dicts in the JSON file format used by the ``adw`` command
line tool; scalars are exact rationals written as strings such as ``"-3/4"``.
"""

import json
from fractions import Fraction

from . import _adw
from ._adw import InputError, PreconditionError

__all__ = [
    "InputError",
    "PreconditionError",
    "check_anti_dendriform",
    "associated_associative",
    "dual_coproducts",
    "check_representation",
    "regular_representation",
    "dual_representation",
    "semidirect_product",
    "check_extending_structure",
    "unified_product",
    "extract_extending_datum",
    "check_crossed_system",
    "crossed_product",
    "cocycle_from_section",
    "check_cocycles_cohomologous",
    "find_cohomologous_zeta",
    "check_gh2_tuple",
    "gh2_tuples_cohomologous",
    "find_inducing_phi",
    "wells_vanishes",
    "check_matched_pair",
    "bicrossed_product",
    "factorize",
    "check_d_bialgebra",
    "adybe_residual",
    "o_operator_to_ybe",
    "run_cli",
    "matrix",
    "scalar",
]


def _enc(obj):
    return json.dumps(obj)


def _dec(text):
    return json.loads(text)


def scalar(text):
    """Exact value of a scalar string as a Fraction."""
    return Fraction(text)


def matrix(rows):
    """Matrix in the file format from nested numbers, Fractions or strings."""
    return [[str(Fraction(v)) for v in row] for row in rows]


def check_anti_dendriform(algebra, exhaustive=False):
    return _dec(_adw.check_anti_dendriform(_enc(algebra), exhaustive))


def associated_associative(algebra):
    return _dec(_adw.associated_associative(_enc(algebra)))


def dual_coproducts(algebra):
    return _dec(_adw.dual_coproducts(_enc(algebra)))


def check_representation(rep, exhaustive=False):
    return _dec(_adw.check_representation(_enc(rep), exhaustive))


def regular_representation(algebra):
    return _dec(_adw.regular_representation(_enc(algebra)))


def dual_representation(rep):
    return _dec(_adw.dual_representation(_enc(rep)))


def semidirect_product(rep):
    return _dec(_adw.semidirect_product(_enc(rep)))


def check_extending_structure(datum, exhaustive=False):
    return _dec(_adw.check_extending_structure(_enc(datum), exhaustive))


def unified_product(datum):
    return _dec(_adw.unified_product(_enc(datum)))


def extract_extending_datum(algebra, inclusion, projector):
    n = len(projector)
    return _dec(_adw.extract_extending_datum(_enc(algebra), _enc(inclusion), _enc(projector), n))


def check_crossed_system(datum, exhaustive=False):
    return _dec(_adw.check_crossed_system(_enc(datum), exhaustive))


def crossed_product(datum):
    return _dec(_adw.crossed_product(_enc(datum)))


def cocycle_from_section(algebra, projection, section):
    return _dec(_adw.cocycle_from_section(_enc(algebra), _enc(projection), _enc(section), len(projection)))


def check_cocycles_cohomologous(c1, c2, zeta):
    return _dec(_adw.check_cocycles_cohomologous(_enc(c1), _enc(c2), _enc(zeta)))


def find_cohomologous_zeta(c1, c2):
    return _dec(_adw.find_cohomologous_zeta(_enc(c1), _enc(c2)))


def check_gh2_tuple(t, derived=False):
    return _dec(_adw.check_gh2_tuple(_enc(t), derived))


def gh2_tuples_cohomologous(t1, t2):
    return _dec(_adw.gh2_tuples_cohomologous(_enc(t1), _enc(t2)))


def find_inducing_phi(cocycle, alpha, beta):
    return _dec(_adw.find_inducing_phi(_enc(cocycle), _enc(alpha), _enc(beta)))


def wells_vanishes(cocycle, alpha, beta):
    return _dec(_adw.wells_vanishes(_enc(cocycle), _enc(alpha), _enc(beta)))


def check_matched_pair(datum, exhaustive=False):
    return _dec(_adw.check_matched_pair(_enc(datum), exhaustive))


def bicrossed_product(datum):
    return _dec(_adw.bicrossed_product(_enc(datum)))


def factorize(algebra, basis_a, basis_b):
    """Matched pair read off the algebra, or None when the spans do not factor it."""
    res = _dec(_adw.factorize(_enc(algebra), list(basis_a), list(basis_b)))
    return None if "diagnostic" in res else res


def check_d_bialgebra(algebra, coproducts, exhaustive=False):
    return _dec(_adw.check_d_bialgebra(_enc(algebra), _enc(coproducts), exhaustive))


def adybe_residual(algebra, rmatrix):
    return _dec(_adw.adybe_residual(_enc(algebra), _enc(rmatrix)))


def o_operator_to_ybe(T, rep):
    return _dec(_adw.o_operator_to_ybe(_enc(T), _enc(rep)))


def run_cli(args):
    """Runs the command line tool in process; returns (exit_code, stdout, stderr)."""
    return _adw.run_cli([str(a) for a in args])
