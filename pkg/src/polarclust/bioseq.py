"""DNA sequence ingestion and the dinucleotide polar representation.

A sequence is summarized by its 16 overlapping dinucleotide frequencies.
Each ordered pair gets a fixed angle (k * 2*pi/16 in lexicographic order
AA, AC, ..., TT) and a radius equal to its frequency, giving 16 polar
points per sequence that feed the circular hierarchical clusterer.  The
fixed angles make trees from different sequences share a leaf set, so
they can be compared by cophenetic correlation.

The angle/radius assignment is this package's own documented convention;
published dual-nucleotide maps vary in their details.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .clustering import Dendrogram
from .geometry import PolarPoint, ReconstructionParams
from .search import circular_hierarchical

VALID_BASES = frozenset("ACGT")

# The 16 ordered base pairs in lexicographic order; index = leaf id.
DINUCLEOTIDES: tuple[str, ...] = tuple(
    a + b for a, b in itertools.product("ACGT", repeat=2)
)

DINUCLEOTIDE_ANGLES: dict[str, float] = {
    pair: k * 2.0 * math.pi / 16.0 for k, pair in enumerate(DINUCLEOTIDES)
}

# One extra period is enough: the pairwise minimum already sees both arc
# directions across adjacent periods.
DEFAULT_DNA_PARAMS = ReconstructionParams(base_radius=1.0, repetitions=1)


class FastaError(ValueError):
    """Malformed FASTA input; carries the offending line number."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class NucleotideSequence:
    id: str
    bases: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "bases", self.bases.upper())
        if len(self.bases) < 2:
            raise ValueError(f"sequence {self.id!r} needs at least 2 bases")
        bad = set(self.bases) - VALID_BASES
        if bad:
            raise ValueError(f"sequence {self.id!r} contains invalid bases {sorted(bad)}")


@dataclass(frozen=True)
class DinucleotideProfile:
    """Counts and polar placement of the 16 ordered base pairs."""

    sequence_id: str
    counts: tuple[int, ...]  # aligned with DINUCLEOTIDES
    n_windows: int

    @property
    def radii(self) -> tuple[float, ...]:
        return tuple(c / self.n_windows for c in self.counts)

    def polar_points(self) -> list[PolarPoint]:
        """One point per pair, in the fixed lexicographic leaf order."""
        return [
            PolarPoint(count / self.n_windows, DINUCLEOTIDE_ANGLES[pair])
            for pair, count in zip(DINUCLEOTIDES, self.counts)
        ]

    def as_table(self) -> str:
        """CSV rendering: pair, count, r, theta."""
        lines = ["pair,count,r,theta"]
        for pair, count in zip(DINUCLEOTIDES, self.counts):
            r = count / self.n_windows
            lines.append(f"{pair},{count},{r:.12g},{DINUCLEOTIDE_ANGLES[pair]:.12g}")
        return "\n".join(lines) + "\n"


def parse_fasta(text: str | bytes) -> list[NucleotideSequence]:
    """Parse FASTA text into validated sequences.

    Headers start with '>', ';' lines are comments, and sequence lines may
    be wrapped.  Problems are reported with their 1-based line number.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    records: list[NucleotideSequence] = []
    current_id: str | None = None
    current_parts: list[str] = []
    header_line = 0

    def flush() -> None:
        if current_id is None:
            return
        bases = "".join(current_parts)
        if not bases:
            raise FastaError(f"record {current_id!r} has no sequence data", header_line)
        try:
            records.append(NucleotideSequence(current_id, bases))
        except ValueError as exc:
            raise FastaError(str(exc), header_line) from exc

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(";"):
            continue
        if line.startswith(">"):
            flush()
            current_id = line[1:].split()[0] if line[1:].strip() else ""
            if not current_id:
                raise FastaError("header line has no identifier", lineno)
            current_parts = []
            header_line = lineno
        else:
            if current_id is None:
                raise FastaError("sequence data before any '>' header", lineno)
            chunk = line.upper()
            bad = set(chunk) - VALID_BASES
            if bad:
                raise FastaError(
                    f"invalid characters {sorted(bad)} in record {current_id!r}", lineno
                )
            current_parts.append(chunk)
    flush()
    if not records:
        raise FastaError("no records found", max(1, header_line))
    return records


def dna_to_polar(seq: NucleotideSequence) -> DinucleotideProfile:
    """Count overlapping dinucleotide windows and place them on the circle."""
    counts = [0] * len(DINUCLEOTIDES)
    index = {pair: i for i, pair in enumerate(DINUCLEOTIDES)}
    for i in range(len(seq.bases) - 1):
        counts[index[seq.bases[i : i + 2]]] += 1
    return DinucleotideProfile(seq.id, tuple(counts), len(seq.bases) - 1)


def sequence_dendrogram(
    seq: NucleotideSequence,
    params: ReconstructionParams = DEFAULT_DNA_PARAMS,
    linkage: str = "single",
) -> Dendrogram:
    """Circular hierarchical clustering of a sequence's 16 profile points.

    Leaf i is always DINUCLEOTIDES[i], so trees from different sequences
    are directly comparable.
    """
    profile = dna_to_polar(seq)
    return circular_hierarchical(profile.polar_points(), params, linkage)
