"""Regular row-column factorial designs.

An array of type I_k(m, n; q) arranges every vector of [q]^k the same number
of times in an m x n grid, so that in each row (column) and each coordinate
every symbol of [q] appears n/q (m/q) times.

>>> from rcfd import exists, generate
>>> bool(exists(2, 6, 6, 6))
False
>>> D, plan = generate(3, 12, 18, 6)
>>> D.is_regular
True
"""
from .combinators import (SymbolBijection, blowup, glue_cols, glue_rows, kronecker,
                          kronecker_many, trivial_design)
from .core import (Design, DesignParams, VerificationReport, component, components, oplus,
                   transpose, truncate, verify_design, verify_orthogonal)
from .errors import DesignError, KernelUnavailable, NonExistent, NoSuchPair
from .fixtures import get_fixture
from .formats import SeedCache, read_design, write_design
from .gf import build_field, factor_prime_power, ff_inv, find_irreducible
from .polyfield import evaluate_design, lemma31_matrix, theorem32
from .solver import ExistenceVerdict, KernelProvider, Plan, execute, exists, generate, mols_pair
from .sudoku import split_factors, sudoku_latin, sudoku_rectangle, theorem36

__version__ = "0.1.0"
