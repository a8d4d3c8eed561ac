"""Sofic shifts, their automorphisms, and the action on left-periodic points."""

from .errors import (
    EmptyShift, MarkerViolation, NeedWitness, NoConnector, NotAllowable,
    NotCertified, NotLeftPeriodic, NotProper, NotTransitive, SearchExhausted,
    SoficError, TooShort,
)
from .shift import (
    FischerCover, LabeledGraph, SftSpec, brute_force_language, compile_sft,
    connector, cover_from_sft, enumerate_words, extend_to_synchronizing,
    fischer_cover, follower_states, is_allowable, is_mixing, is_synchronizing,
    is_transitive, least_word, shift_period,
)
from .points import (
    EvPeriodicPoint, OrbitId, PointType, QkPoint, classify_type, cocycle_alpha,
    cylinder_extensions, dot_action, enumerate_per_k, in_cylinder_m, in_shift,
    is_proper_cylinder, is_synchronizing_point, normalize_qk, orbit_id,
    project_pi, sample_cylinder,
)
from .rules import (
    BlockCode, apply_code_point, apply_code_word, code_from_function,
    code_from_json, compose, identity_code, shift_power_code,
)
from .autos import (
    Automorphism, MarkerSystem, Violation, certify_automorphism,
    compose_automorphisms, is_endomorphism, is_involution, marker_to_code,
    max_overlap, shift_automorphism, validate_marker_system,
)
from .constructions import (
    Prop31Certificate, RyanSystem, identify_power_of_shift, minimality_witness,
    nonoverlap_sync_marker, orbit_permutation_auto, pingpong, pingpong_check,
    prop31, ryan_system,
)
from .io import bundled, load_shift, shift_from_dict

__version__ = "0.1.0"
