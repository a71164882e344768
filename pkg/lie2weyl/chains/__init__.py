"""
Chain calculus for the lie2weyl engine.

Symbolic chains live in the b- and M-bases of one order N; concrete chains
are the matching tensors built from structure constants.
"""
from lie2weyl.chains.calculus import (
    ChainExpr,
    ChainKind,
    central_relation_check,
    chain_reduce,
    even_order_check,
    general_symmetry,
    jsi_check,
    k_sum,
    k_sum_closed,
    m_to_b,
    order_condition_chain,
    special_symmetry,
    special_symmetry_rank,
    symmetry_expansion_check,
    symmetry_relations_check,
    z_dimension,
)
from lie2weyl.chains.concrete import ConcreteCheck, TensorBuilder, concrete_tensor_check

__all__ = [
    "ChainExpr",
    "ChainKind",
    "central_relation_check",
    "chain_reduce",
    "even_order_check",
    "general_symmetry",
    "jsi_check",
    "k_sum",
    "k_sum_closed",
    "m_to_b",
    "order_condition_chain",
    "special_symmetry",
    "special_symmetry_rank",
    "symmetry_expansion_check",
    "symmetry_relations_check",
    "z_dimension",
    "ConcreteCheck",
    "TensorBuilder",
    "concrete_tensor_check",
]
