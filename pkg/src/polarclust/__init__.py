"""Clustering for polar-coordinate data on an unrolled cylindrical plane.

Points given as (radius, angle) pairs are mapped to the lateral surface
of a cylinder with tunable base radius and flattened into a rectangle
where the horizontal axis is arc length and the vertical axis is the
radius.  Tiling the rectangle with extra copies of the base period makes
wrap-around neighborhoods contiguous, so standard planar clusterers
(K-means, DBSCAN, agglomerative linkage) can be applied and their results
mapped back onto the original points.
"""

from .analysis import (
    CopheneticMatrix,
    SyntheticSpec,
    UndefinedCorrelationError,
    adjusted_rand_index,
    cophenetic_correlation,
    cophenetic_matrix,
    generate_synthetic,
)
from .bioseq import (
    DINUCLEOTIDES,
    DinucleotideProfile,
    FastaError,
    NucleotideSequence,
    dna_to_polar,
    parse_fasta,
    sequence_dendrogram,
)
from .clustering import (
    DbscanConfig,
    Dendrogram,
    KMeansConfig,
    Labeling,
    Merge,
    cut_dendrogram,
    dbscan,
    hierarchical,
    kmeans,
)
from .geometry import (
    CartesianPoint,
    PlanePoint,
    PolarPoint,
    ReconstructionParams,
    ReplicatedPoint,
    normalize_angle,
    polar_to_cartesian,
    reconstruct,
    replicate,
)
from .metrics import (
    DistanceMatrix,
    circular_distance,
    euclidean_distance,
    manhattan_distance,
    pairwise_circular,
)
from .search import (
    CircularDbscanResult,
    CircularKMeansResult,
    NoValidCombinationError,
    circular_dbscan,
    circular_hierarchical,
    circular_kmeans,
    circular_pairwise_min,
)

__version__ = "0.1.0"

__all__ = [
    "CartesianPoint",
    "CircularDbscanResult",
    "CircularKMeansResult",
    "CopheneticMatrix",
    "DbscanConfig",
    "Dendrogram",
    "DinucleotideProfile",
    "DINUCLEOTIDES",
    "DistanceMatrix",
    "FastaError",
    "KMeansConfig",
    "Labeling",
    "Merge",
    "NoValidCombinationError",
    "NucleotideSequence",
    "PlanePoint",
    "PolarPoint",
    "ReconstructionParams",
    "ReplicatedPoint",
    "SyntheticSpec",
    "UndefinedCorrelationError",
    "adjusted_rand_index",
    "circular_dbscan",
    "circular_distance",
    "circular_hierarchical",
    "circular_kmeans",
    "circular_pairwise_min",
    "cophenetic_correlation",
    "cophenetic_matrix",
    "cut_dendrogram",
    "dbscan",
    "dna_to_polar",
    "euclidean_distance",
    "generate_synthetic",
    "hierarchical",
    "kmeans",
    "manhattan_distance",
    "normalize_angle",
    "pairwise_circular",
    "parse_fasta",
    "polar_to_cartesian",
    "reconstruct",
    "replicate",
    "sequence_dendrogram",
]
