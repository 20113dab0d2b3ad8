"""Isomorph-free generation of 2-connected graphs via canonical ear
augmentation, with searches for uniquely saturated graphs and edge-deck
reconstruction checks built on top."""

from .graph import CAP, Ear, Graph, degree_sequence, ear_augment, ear_delete, enumerate_ears, is_two_connected
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .canon import (
    AutomorphismGens,
    CanonicalForm,
    PairOrbits,
    analyse,
    automorphism_generators,
    canonical_bytes,
    canonical_form,
    vertex_pair_orbits,
)

__all__ = [
    "CAP",
    "Ear",
    "Graph",
    "degree_sequence",
    "ear_augment",
    "ear_delete",
    "enumerate_ears",
    "is_two_connected",
    "graph6_decode",
    "graph6_encode",
    "AutomorphismGens",
    "CanonicalForm",
    "PairOrbits",
    "analyse",
    "automorphism_generators",
    "canonical_bytes",
    "canonical_form",
    "vertex_pair_orbits",
]
