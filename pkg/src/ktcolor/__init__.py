"""Kierstead-Trotter online interval coloring with exact rational endpoints."""

from .arith import Rational, compare, make, parse, render
from .clique import CliqueWitness, omega, omega_containing
from .colorers import FirstFit, KiersteadTrotter, offline_optimal, run
from .generators import gen_random_general, gen_random_unit, gen_theorem2
from .model import (Assignment, ColoringResult, Instance, Interval, intersects, is_unit,
                    load, load_result, save, save_result)
from .verify import VerificationReport, check, check_level2_matching, chromatic_brute

__all__ = [
    "Rational", "compare", "make", "parse", "render",
    "CliqueWitness", "omega", "omega_containing",
    "FirstFit", "KiersteadTrotter", "offline_optimal", "run",
    "gen_random_general", "gen_random_unit", "gen_theorem2",
    "Assignment", "ColoringResult", "Instance", "Interval", "intersects", "is_unit",
    "load", "load_result", "save", "save_result",
    "VerificationReport", "check", "check_level2_matching", "chromatic_brute",
]
