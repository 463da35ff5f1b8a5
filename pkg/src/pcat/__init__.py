"""Categories of set partitions, free product words and exact tensor maps."""

from pcat.partition import (
    CompositionResult,
    InputError,
    Partition,
    all_partitions,
    canonicalize,
    compose,
    delta,
    from_word,
    involute,
    make_partition,
    parse_word,
    rotate,
    tensor,
    to_word,
    word_to_text,
)
from pcat.catalog import (
    crossing,
    copair,
    double_singleton,
    four_block,
    h,
    half_lib,
    identity,
    identity_strands,
    k,
    k_via_recursion,
    named_partition,
    nested_pairs,
    pair,
    pair_positioner,
    singleton,
)
from pcat.category import (
    CategoryTruncation,
    closure,
    connect_blocks,
    is_single_leg,
    member,
    parity_reduce,
    single_leg_version,
    sl_subset,
)
from pcat.words import (
    NO,
    UNKNOWN,
    YES,
    Oracle,
    canonical_rename,
    category_of_subgroup_member,
    f_generators,
    group_witness,
    identify_letters,
    inverse,
    multiply,
    reduce_word,
    subgroup_member,
    word_of_partition,
)
from pcat.tensors import (
    ExactMatrix,
    MatrixModel,
    ResourceLimitError,
    crossed_model,
    hyperoct_relations_check,
    intertwines,
    parse_model,
    signed_permutation_model,
    t_map,
    two_element_group,
    word_projection_check,
)

__all__ = [
    "CategoryTruncation",
    "CompositionResult",
    "ExactMatrix",
    "InputError",
    "MatrixModel",
    "NO",
    "Oracle",
    "Partition",
    "ResourceLimitError",
    "UNKNOWN",
    "YES",
    "all_partitions",
    "canonical_rename",
    "canonicalize",
    "category_of_subgroup_member",
    "closure",
    "compose",
    "connect_blocks",
    "copair",
    "crossed_model",
    "crossing",
    "delta",
    "double_singleton",
    "f_generators",
    "four_block",
    "from_word",
    "group_witness",
    "h",
    "half_lib",
    "hyperoct_relations_check",
    "identify_letters",
    "identity",
    "identity_strands",
    "intertwines",
    "inverse",
    "involute",
    "is_single_leg",
    "k",
    "k_via_recursion",
    "make_partition",
    "member",
    "multiply",
    "named_partition",
    "nested_pairs",
    "pair",
    "pair_positioner",
    "parity_reduce",
    "parse_model",
    "parse_word",
    "reduce_word",
    "rotate",
    "signed_permutation_model",
    "singleton",
    "sl_subset",
    "subgroup_member",
    "t_map",
    "tensor",
    "to_word",
    "two_element_group",
    "word_of_partition",
    "word_projection_check",
    "word_to_text",
]
