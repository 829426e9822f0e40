"""Finite semigroups that are categorical at zero (K-semigroups)."""

from .core import (BoundExceeded, FiniteSemigroup, HomomorphismMap, Partition, SemigroupError, Violation,
                   check_homomorphism, enumerate_congruences, find_isomorphism, find_violations, is_congruence,
                   is_ideal, is_injective, quotient, set_product, validate)
from .k_analysis import (AnnihilatorTriple, CategoricityWitness, NotKSemigroup, annihilators,
                         categoricity_witness, check_lemma1, complement_subsemigroup, is_categorical_at_zero,
                         nilpotency_degree)
from .constructors import (MorExtensionSpec, NilpotentSpec, ReesSemigroup, SmallCategory, mor_extension,
                           nilpotent_from_spec, random_category, rees_semigroup, semigroup_of_category)
from .structure import (DecompositionReport, PQNData, category_interpretation_check, compute_pqn, decompose,
                        greatest_zero_restricted_congruence, rees_embedding, sandwich_matrix)
from .enumeration import CorpusVerdict, EnumerationTask, enumerate_semigroups, verify_corpus

__version__ = "0.1.0"
