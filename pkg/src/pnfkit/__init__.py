"""pnfkit: prefix normal forms of binary words, constant-time binary
jumbled pattern matching, and an exhaustive enumeration lab."""

from .bitword import (
    BinaryWord,
    OnesProfile,
    RankDirectory,
    max_ones_profile,
    max_zeros_profile,
    min_ones_profile,
    parse_word,
)
from .combinatorics import (
    Census,
    ClassStatistics,
    EnumReport,
    RationalSeries,
    Separation,
    bound_check,
    census,
    class_statistics,
    count_ecrit,
    count_pnw,
    count_pnw_density,
    enum_report,
    enumerate_pn,
    expand_gf,
    ext_bijection_check,
    ext_count,
    ratio_series,
    separating_suffix,
    upper_bound_threshold,
)
from .errors import (
    ContractError,
    IndexFormatError,
    PnfkitError,
    ScaleError,
    WordParseError,
)
from .jumbled import JumbledIndex, build_index, dump_index, load_index, query_bruteforce
from .lyndon import (
    count_prenecklaces,
    is_lyndon,
    is_prenecklace,
    lyndon_extension_check,
)
from .normality import (
    GapDecomposition,
    all_deciders,
    can_append_one,
    check_factor_pos_char,
    check_gap_inequalities,
    check_pos_superadditive_char,
    check_subadditive_char,
    is_prefix_normal,
)
from .pnf import (
    ParikhVector,
    PnfPair,
    parikh_set,
    parikh_set_bruteforce,
    parikh_set_equal,
    pnf0,
    pnf1,
    pnf_pair,
    prefix_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryWord",
    "Census",
    "ClassStatistics",
    "ContractError",
    "EnumReport",
    "GapDecomposition",
    "IndexFormatError",
    "JumbledIndex",
    "OnesProfile",
    "ParikhVector",
    "PnfPair",
    "PnfkitError",
    "RankDirectory",
    "RationalSeries",
    "ScaleError",
    "Separation",
    "WordParseError",
    "all_deciders",
    "bound_check",
    "build_index",
    "can_append_one",
    "census",
    "check_factor_pos_char",
    "check_gap_inequalities",
    "check_pos_superadditive_char",
    "check_subadditive_char",
    "class_statistics",
    "count_ecrit",
    "count_pnw",
    "count_pnw_density",
    "count_prenecklaces",
    "dump_index",
    "enum_report",
    "enumerate_pn",
    "expand_gf",
    "ext_bijection_check",
    "ext_count",
    "is_lyndon",
    "is_prefix_normal",
    "is_prenecklace",
    "load_index",
    "lyndon_extension_check",
    "max_ones_profile",
    "max_zeros_profile",
    "min_ones_profile",
    "parikh_set",
    "parikh_set_bruteforce",
    "parikh_set_equal",
    "parse_word",
    "pnf0",
    "pnf1",
    "pnf_pair",
    "prefix_equivalent",
    "query_bruteforce",
    "ratio_series",
    "separating_suffix",
    "upper_bound_threshold",
]
