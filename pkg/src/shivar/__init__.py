"""Combinatorics of the Shi variety of the affine Weyl group of type A~_n."""

from .algebra import (
    AffineElement, Permutation, circular_permutations, compose, inversion_set,
    long_cycle, positive_roots, transposition, word_to_permutation,
)
from .bijection import bijection_table, from_component, to_component
from .components import canonical_point, component_of, enumerate_admitted, is_admitted
from .diamond import diamond_closed_form, diamond_iterated, diamond_matrix, stabilizer
from .phi import AffineIntegerMap, apply, f_element, f_reflection, f_word
from .shi import RootVector, admitted_part, fundamental_barycenter, k_vector
from .wedge import WedgeElement, odot_closed_form, odot_generator, odot_word, theta

__version__ = "0.1.0"
