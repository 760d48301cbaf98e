"""Exact arithmetic for a decidable fragment of the hyperreal line.

Germs of exponential-polynomial quotients in one infinite hypernatural H
model quantities such as ``1 - 10**-H``; around them sit repeating and
extended decimal notation, closed-form sequences with their ultralimits and
hyperfinite sums, and microscope views of infinitesimal neighbourhoods.
"""
from .decimals import (
    ExtendedDecimal,
    RepeatingDecimal,
    Segment,
    digit_at,
    extended_value,
    parse_extended,
    parse_repeating,
    render_extended,
    render_lightstone,
    repeating_to_rational,
)
from .errors import (
    CapExceeded,
    DivisionByZero,
    HypergermError,
    InfiniteArgument,
    NonPositiveBase,
    NotationError,
    OutOfRange,
    UnsupportedForm,
)
from .germ import (
    H,
    Classification,
    ExpPoly,
    Hypernat,
    Hyperreal,
    Ordering,
    classify,
    compare,
    floor_limited,
    from_rational,
    halo_equiv,
    hypernat_H,
    parse_germ,
    pow_base,
    pow_int,
    sign,
    st,
)
from .microscope import MicroscopeView, Placement, Position, place, render_ascii, render_svg
from .sequences import Divergence, eval_at, hyperfinite_sum, parse_sequence, real_limit, ultralimit

__version__ = "0.1.0"
