"""plyscope: fast ply-number computation and exploration for straight-line
graph drawings."""

from .model import EPS, Drawing, Graph, PlyDisk, StructuralError, density, derive_disks
from .oracle import DepthProbe, EmptyPlyVerdict, empty_ply, grid_probe, oracle_ply
from .sweep import PlyReport, WitnessRegion, circle_pair_intersections, compute_ply

__all__ = [
    "EPS",
    "Graph",
    "Drawing",
    "PlyDisk",
    "StructuralError",
    "density",
    "derive_disks",
    "DepthProbe",
    "EmptyPlyVerdict",
    "oracle_ply",
    "empty_ply",
    "grid_probe",
    "PlyReport",
    "WitnessRegion",
    "compute_ply",
    "circle_pair_intersections",
]
