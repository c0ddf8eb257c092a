"""
Nonthin Refuter Module
Certificates that a sequence has no nonthin convergent subsequence of the kind an argument rules out

    densityBound         equidistributed sequences under the density ideal
    blockRecurrence      injective block-constant sequences under a block ideal
    cubeBlockRecurrence  staircase cube sequences under a block ideal
    cubeDensityDiag      periodic coordinate sequences under the density ideal

A True verdict means the refutation argument went through.
"""

import logging
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence as Seq

import numpy as np
import pandas as pd

from density import DensityCalculator
from ideals import DecBIdeal, DensityIdeal, Ideal
from natset import Verdict
from sequences import CoordinateSets, Equidistributed, Sequence, StaircaseBlocks
from spaces import Ball, Cylinder, format_point

from .config import (CUBE_DENSITY_HORIZON, CUBE_PATTERN_DEPTH, REFUTER_EPSILONS, REFUTER_HORIZON,
                     REFUTER_XI_GRID)
from .errors import ModeMismatch

logger = logging.getLogger(__name__)


class RefuteMode(Enum):
    """Refutation arguments"""
    DENSITY_BOUND = "densityBound"
    BLOCK_RECURRENCE = "blockRecurrence"
    CUBE_BLOCK_RECURRENCE = "cubeBlockRecurrence"
    CUBE_DENSITY_DIAG = "cubeDensityDiag"


def parse_mode(text: str) -> RefuteMode:
    try:
        return RefuteMode(text)
    except ValueError:
        known = ', '.join(m.value for m in RefuteMode)
        raise ModeMismatch(f"Unknown refutation mode '{text}' (known: {known})")


class NonthinRefuter:
    """Runs the refutation arguments"""

    def __init__(self, horizon: int = REFUTER_HORIZON, xi_grid: Seq[Fraction] = REFUTER_XI_GRID,
                 epsilons: Seq[Fraction] = REFUTER_EPSILONS, cube_depth: int = CUBE_PATTERN_DEPTH,
                 cube_horizon: int = CUBE_DENSITY_HORIZON):
        """
        Initialize nonthin refuter

        Args:
            horizon: Prefix length N of the density sweep
            xi_grid: Candidate limits of the density sweep
            epsilons: Ball radii of the density sweep
            cube_depth: Coordinates examined by the cube arguments
            cube_horizon: Prefix length of measured cube densities
        """
        self.horizon = horizon
        self.xi_grid = tuple(xi_grid)
        self.epsilons = tuple(epsilons)
        self.cube_depth = cube_depth
        self.cube_horizon = cube_horizon
        self.calculator = DensityCalculator()

    def refute(self, seq: Sequence, ideal: Ideal, mode) -> Verdict:
        """
        Run a refutation argument

        Args:
            seq: Sequence
            ideal: Ideal the argument is about
            mode: RefuteMode or its name

        Returns:
            Verdict: True when the argument certifies that no nonthin subsequence converges

        Raises:
            ModeMismatch: when the sequence or ideal lacks the structure the argument needs
        """
        mode = mode if isinstance(mode, RefuteMode) else parse_mode(mode)
        handlers = {
            RefuteMode.DENSITY_BOUND: self.density_bound,
            RefuteMode.BLOCK_RECURRENCE: self.block_recurrence,
            RefuteMode.CUBE_BLOCK_RECURRENCE: self.cube_block_recurrence,
            RefuteMode.CUBE_DENSITY_DIAG: self.cube_density_diag,
        }
        verdict = handlers[mode](seq, ideal)
        logger.info(f"Refutation {mode.value} for {seq} under {ideal}: {verdict}")
        return verdict

    # ------------------------------------------------------------------
    # densityBound

    def _require_density(self, ideal: Ideal, mode: RefuteMode):
        if not isinstance(ideal.base(), DensityIdeal):
            raise ModeMismatch(f"{mode.value} argues about the density ideal, got {ideal}")

    def density_sweep(self, seq: Sequence) -> pd.DataFrame:
        """
        Hit counts of eps-balls around the candidate limits

        Returns:
            DataFrame with columns xi, eps, N, hits, ratio, expected, deviation, tolerance,
            max_excess (display floats), within_tolerance (exact |ratio - expected| <= 2/sqrt(N))
            and bound_ok (|K_n| stays under the provable block bound for every n <= N, in integers)
        """
        structure = seq.structure
        if not isinstance(structure, Equidistributed):
            raise ModeMismatch(f"densityBound needs an equidistributed sequence, got {seq}")
        N = self.horizon
        n = np.arange(N + 1, dtype=np.int64)
        m, r = structure.block_positions(N)
        rows = []
        for xi in self.xi_grid:
            for eps in self.epsilons:
                ball = Ball(xi, eps)
                hits = structure.hit_mask(ball, N)
                counts = np.cumsum(hits, dtype=np.int64)
                expected = min(xi + eps, Fraction(1)) - max(xi - eps, Fraction(0))
                ratio = Fraction(int(counts[-1]), N)
                deviation = abs(ratio - expected)
                # q*|K_n| <= 2p*(n - r) + q*(m - 1 + r) for eps = p/q
                p, q = eps.numerator, eps.denominator
                bound_ok = np.all(q * counts[1:] <= 2 * p * (n[1:] - r[1:]) + q * (m[1:] - 1 + r[1:]))
                excess = q * counts[1:] - 2 * p * n[1:]
                rows.append({
                    'xi': format_point(xi), 'eps': str(eps), 'N': N,
                    'hits': int(counts[-1]), 'ratio': float(ratio), 'expected': float(expected),
                    'deviation': float(deviation), 'tolerance': 2 / float(np.sqrt(N)),
                    'max_excess': float(Fraction(int(excess.max()), q)),
                    'within_tolerance': deviation ** 2 * N <= 4,
                    'bound_ok': bool(bound_ok),
                })
        return pd.DataFrame(rows)

    def density_bound(self, seq: Sequence, ideal: Ideal) -> Verdict:
        self._require_density(ideal, RefuteMode.DENSITY_BOUND)
        table = self.density_sweep(seq)
        failing = table[~table['within_tolerance'] | ~table['bound_ok']]
        rule = 'refute/density-bound'
        if len(failing):
            row = failing.iloc[0]
            return Verdict.false(rule, f"xi={row['xi']}, eps={row['eps']}: ratio {row['ratio']:.4f} vs "
                                       f"expected {row['expected']:.4f} (tolerance {row['tolerance']:.4f}), "
                                       f"block bound {'holds' if row['bound_ok'] else 'fails'}")
        worst = table['deviation'].max()
        return Verdict.true(rule, f"for {len(table)} (xi, eps) pairs at N={self.horizon}: hits of every eps-ball "
                                  f"stay within {worst:.4f} of its length and |K_n| <= 2*eps*n + O(sqrt n) "
                                  f"(max excess {table['max_excess'].max():.1f}); a subsequence converging to "
                                  f"xi lies eventually in each ball, so its density is at most 2*eps for "
                                  f"every eps, hence 0: every density-convergent subsequence is thin")

    # ------------------------------------------------------------------
    # block arguments

    def _require_block_ideal(self, seq: Sequence, ideal: Ideal, mode: RefuteMode):
        base = ideal.base()
        if not isinstance(base, DecBIdeal):
            raise ModeMismatch(f"{mode.value} argues about a decB ideal, got {ideal}")
        if seq.block_rule is None or seq.decomposition != base.decomposition:
            raise ModeMismatch(f"{mode.value} needs a sequence constant on the blocks of "
                               f"{base.decomposition.name}, got {seq}")
        if seq.domain.is_sampled:
            raise ModeMismatch(f"{mode.value} needs a closed-form domain, got {seq.domain}")
        return base.decomposition

    def _infinite_blocks(self, seq: Sequence, decomposition):
        return seq.domain.block_profile(decomposition).infinite

    def block_recurrence(self, seq: Sequence, ideal: Ideal) -> Verdict:
        decomposition = self._require_block_ideal(seq, ideal, RefuteMode.BLOCK_RECURRENCE)
        rule = seq.block_rule
        if not rule.injective:
            raise ModeMismatch(f"blockRecurrence needs distinct values on distinct blocks, got {rule}")
        infinite = self._infinite_blocks(seq, decomposition)
        name = 'refute/block-recurrence'
        if infinite.is_finite:
            return Verdict.false(name, f"the domain is infinite only in blocks {infinite.describe()}, "
                                       f"so the domain itself is thin")
        j1, j2 = infinite.lowest(2)
        return Verdict.true(name, f"a set outside {ideal} is infinite in infinitely many blocks, each carrying its "
                                  f"own value, so its subsequence repeats at least two distinct values forever; "
                                  f"witness blocks {j1} (value {format_point(rule.value(j1))}) and "
                                  f"{j2} (value {format_point(rule.value(j2))}): only thin subsequences "
                                  f"converge classically")

    def cube_block_recurrence(self, seq: Sequence, ideal: Ideal) -> Verdict:
        decomposition = self._require_block_ideal(seq, ideal, RefuteMode.CUBE_BLOCK_RECURRENCE)
        if not isinstance(seq.block_rule, StaircaseBlocks):
            raise ModeMismatch(f"cubeBlockRecurrence needs the staircase cube sequence, got {seq}")
        infinite = self._infinite_blocks(seq, decomposition)
        name = 'refute/cube-block-recurrence'
        if infinite.is_finite:
            return Verdict.false(name, f"the domain is infinite only in blocks {infinite.describe()}")
        pairs = []
        for i in infinite.lowest(self.cube_depth):
            zeros = seq.hit_set(Cylinder(((i, 0),))).is_finite_set()
            ones = seq.hit_set(Cylinder(((i, 1),))).is_finite_set()
            if not (zeros.is_false and ones.is_false):
                return Verdict.false(name, f"coordinate {i} is not both infinitely 0 and 1 on the domain")
            pairs.append(str(i))
        return Verdict.true(name, f"a set outside {ideal} is infinite in two blocks j < j'; coordinate j is 0 on "
                                  f"block j and 1 on block j', so it never settles and the subsequence cannot "
                                  f"converge to any point; checked on the domain for coordinates "
                                  f"{', '.join(pairs)}")

    # ------------------------------------------------------------------
    # cubeDensityDiag

    def cube_density_table(self, seq: Sequence, depth: Optional[int] = None) -> pd.DataFrame:
        """
        Densest nested cylinder chain of a periodic coordinate sequence

        Returns:
            DataFrame with columns m, bit, period, chain_density, chain_float, max_cylinder,
            measured (display floats), nested (d(A_m) <= d(A_{m-1})), within_reciprocal
            (d(A_m) <= 1/m), within_power (d(A_m) <= 2^-(m-1), diagnostic only) and agrees
            (measured within 2^-8 of exact at the cube horizon)
        """
        structure = seq.structure
        if not isinstance(structure, CoordinateSets):
            raise ModeMismatch(f"cubeDensityDiag needs a periodic coordinate sequence, got {seq}")
        depth = depth or self.cube_depth
        rows = []
        bits = []
        previous = Fraction(1)
        for m in range(1, depth + 1):
            period = lcm(*(structure.period(c) for c in range(1, m + 1)))
            n = np.arange(1, period + 1, dtype=np.int64)
            codes = np.zeros(period, dtype=np.int64)
            for c in range(1, m + 1):
                codes |= structure.bit_array(n, c) << (c - 1)
            counts = np.bincount(codes, minlength=2 ** m)
            prefix_code = sum(b << (c - 1) for c, b in enumerate(bits, start=1))
            one = counts[prefix_code | (1 << (m - 1))]
            zero = counts[prefix_code]
            bit = 1 if one >= zero else 0
            bits.append(bit)
            chain = Fraction(int(max(one, zero)), period)
            cylinder = Cylinder(tuple(enumerate(bits, start=1)))
            hits = seq.hit_set(cylinder, self.cube_horizon)
            measured = self.calculator.prefix_density(hits, self.cube_horizon)
            rows.append({
                'm': m, 'bit': bit, 'period': period,
                'chain_density': str(chain), 'chain_float': float(chain),
                'max_cylinder': float(Fraction(int(counts.max()), period)),
                'measured': float(measured),
                'nested': chain <= previous,
                'within_reciprocal': chain <= Fraction(1, m),
                'within_power': chain <= Fraction(1, 2 ** (m - 1)),
                'agrees': abs(measured - chain) <= Fraction(1, 2 ** 8),
            })
            previous = chain
        return pd.DataFrame(rows)

    def cube_density_diag(self, seq: Sequence, ideal: Ideal) -> Verdict:
        self._require_density(ideal, RefuteMode.CUBE_DENSITY_DIAG)
        table = self.cube_density_table(seq)
        name = 'refute/cube-density-diag'
        for column, problem in (('nested', "rises above the previous level"),
                                ('within_reciprocal', "exceeds 1/m"),
                                ('agrees', "disagrees with the measured prefix density")):
            bad = table[~table[column]]
            if len(bad):
                row = bad.iloc[0]
                return Verdict.false(name, f"chain density {row['chain_density']} at m={row['m']} {problem} "
                                           f"(measured {row['measured']:.5f})")
        last = table.iloc[-1]
        depth = int(last['m'])
        power = ', '.join(str(m) for m in table.loc[~table['within_power'], 'm']) or 'none'
        return Verdict.true(name, f"the densest nested cylinder chain A_m is nonincreasing with d(A_m) <= 1/m for "
                                  f"m <= {depth} (d(A_{depth}) = {last['chain_density']}, largest depth-{depth} "
                                  f"cylinder {last['max_cylinder']:.5f}; levels above 2^-(m-1): {power}); a "
                                  f"convergent subsequence lies eventually in every A_m, so its density is at "
                                  f"most d(A_m) for every m, hence 0")
