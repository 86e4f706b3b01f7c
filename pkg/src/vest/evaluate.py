"""Sequence checking and M-sequence evaluation.

Three evaluation modes share one state-walking core:

* ``check_sequence`` follows a single index sequence and tests whether the
  selector annihilates the final vector.
* ``m_k_bruteforce`` enumerates all m**k sequences of length k (shared
  prefixes via an explicit stack) and counts the annihilated ones.
* ``m_k_dedup`` walks levels of state distributions, merging sequences that
  reach the same vector, so the cost scales with distinct states rather
  than with m**k.

Instances whose start vector is 0/1 and whose transformations are all
functional keep every reachable vector 0/1. Those run on a packed engine
that stores each vector as an int bitmask and applies a transformation by
OR-ing precomputed scatter masks, one per set bit. Everything else runs on
a generic engine over tuples of exact scalars. Both engines produce
identical counts; the packed one is just faster.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, Sequence, Tuple

from .core import (
    ResourceBound,
    Scalar,
    Semiring,
    Vector,
    VestError,
    VestInstance,
    apply,
    instance_fingerprint,
    is_zero_vector,
)

DEFAULT_BRUTE_CAP = 10**8


class IndexOutOfRange(VestError):
    pass


class GenericEngine:
    """State walker over exact scalar tuples; works for every instance."""

    def __init__(self, instance: VestInstance):
        self.instance = instance

    def initial(self) -> Vector:
        return self.instance.v

    def step(self, t: int, state: Vector) -> Vector:
        inst = self.instance
        form = inst.functional_forms[t]
        matrix = form if form is not None else inst.transformations[t]
        return apply(matrix, state, inst.semiring)

    def annihilates(self, state: Vector) -> bool:
        inst = self.instance
        return is_zero_vector(apply(inst.selector, state, inst.semiring))

    def decode(self, state: Vector) -> Vector:
        return state

    def annihilates_vector(self, vec: Sequence[Scalar]) -> bool:
        return self.annihilates(tuple(vec))


class PackedEngine:
    """Bitmask state walker for 0/1 vectors under functional transformations.

    A state is an int whose bit i is vector entry i. For transformation t,
    ``masks[t][j]`` collects 1 << i over all rows i that copy column j, so a
    step is an OR of at most popcount(state) masks. The selector test runs
    directly on the packed state:

    * selector with entries in {0, 1} over rationals: row sums are zero only
      when no selected bit is set, so one combined mask suffices;
    * selector with entries in {0, 1} over GF(2): each row needs even parity
      of the selected bits;
    * anything else: decode and fall back to generic arithmetic.
    """

    def __init__(self, instance: VestInstance):
        if not instance.packed_ready:
            raise ValueError("instance does not qualify for the packed path")
        self.instance = instance
        self.d = instance.d
        self.masks = []
        for form in instance.functional_forms:
            scatter = [0] * instance.d
            for i, j in enumerate(form.actions):
                if j is not None:
                    scatter[j] |= 1 << i
            self.masks.append(scatter)

        sel = instance.selector
        self._mode = "generic"
        if all(e == 0 or e == 1 for row in sel.rows for e in row):
            row_masks = []
            for row in sel.rows:
                mask = 0
                for j, e in enumerate(row):
                    if e == 1:
                        mask |= 1 << j
                row_masks.append(mask)
            if instance.semiring is Semiring.GF2:
                self._mode = "parity"
                self._row_masks = row_masks
            else:
                self._mode = "union"
                union = 0
                for mask in row_masks:
                    union |= mask
                self._union_mask = union
        self._generic = GenericEngine(instance)

    def initial(self) -> int:
        return self.encode(self.instance.v)

    def encode(self, vec: Sequence[Scalar]) -> int:
        state = 0
        for i, e in enumerate(vec):
            if e == 1:
                state |= 1 << i
            elif e != 0:
                raise ValueError(f"entry {i} is not 0/1: {e!r}")
        return state

    def decode(self, state: int) -> Vector:
        one, zero = self.instance.semiring.one, self.instance.semiring.zero
        return tuple(one if state >> i & 1 else zero for i in range(self.d))

    def step(self, t: int, state: int) -> int:
        scatter = self.masks[t]
        out = 0
        while state:
            low = state & -state
            out |= scatter[low.bit_length() - 1]
            state ^= low
        return out

    def annihilates(self, state: int) -> bool:
        if self._mode == "union":
            return self._union_mask & state == 0
        if self._mode == "parity":
            for mask in self._row_masks:
                if (mask & state).bit_count() & 1:
                    return False
            return True
        return self._generic.annihilates(self.decode(state))

    def annihilates_vector(self, vec: Sequence[Scalar]) -> bool:
        return self.annihilates(self.encode(vec))


def engine_for(instance: VestInstance):
    """Pick the fastest engine that is exact for this instance."""
    if instance.packed_ready:
        return PackedEngine(instance)
    return GenericEngine(instance)


def _validate_sequence(instance: VestInstance, sequence: Sequence[int]) -> Tuple[int, ...]:
    seq = tuple(sequence)
    for pos, t in enumerate(seq):
        if not isinstance(t, int) or isinstance(t, bool):
            raise IndexOutOfRange(f"position {pos}: index {t!r} is not an integer")
        if not 0 <= t < instance.m:
            raise IndexOutOfRange(
                f"position {pos}: index {t} outside [0, {instance.m})")
    return seq


def check_sequence(instance: VestInstance, sequence: Sequence[int]) -> bool:
    """Apply the indexed transformations in order; True when the selector
    maps the final vector to zero. The empty sequence tests the start
    vector itself."""
    seq = _validate_sequence(instance, sequence)
    engine = engine_for(instance)
    state = engine.initial()
    for t in seq:
        state = engine.step(t, state)
    return engine.annihilates(state)


def m_k_bruteforce(instance: VestInstance, k: int, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """Count annihilated length-k sequences by enumerating all m**k of them.

    Prefixes are shared through a depth-first walk, so the state at depth j
    is computed once per distinct prefix rather than once per sequence.
    """
    if k < 0:
        raise ValueError(f"sequence length must be >= 0, got {k}")
    total = instance.m ** k
    if total > cap:
        raise ResourceBound(
            f"brute force over {instance.m}**{k} = {total} sequences exceeds "
            f"the cap of {cap}; the dedup method may still be feasible")
    engine = engine_for(instance)
    m = instance.m
    count = 0
    # stack entries: (state, depth); children pushed eagerly
    stack = [(engine.initial(), 0)]
    while stack:
        state, depth = stack.pop()
        if depth == k:
            if engine.annihilates(state):
                count += 1
            continue
        for t in range(m):
            stack.append((engine.step(t, state), depth + 1))
    return count


@dataclass(frozen=True)
class StateDistribution:
    """Multiset of states reached after ``level`` steps: state -> number of
    index sequences reaching it. States are engine-internal (packed ints or
    scalar tuples); pair with the engine's decode when vectors are needed."""

    level: int
    entries: Dict

    def total(self) -> int:
        return sum(self.entries.values())


def dedup_levels(instance: VestInstance, k_max: int) -> Iterator[StateDistribution]:
    """Yield state distributions for levels 0..k_max.

    Level 0 is the start vector with multiplicity 1; level j+1 applies every
    transformation to every distinct level-j state, summing multiplicities
    of collisions. Deterministic: iteration order never affects the result.
    """
    if k_max < 0:
        raise ValueError(f"maximum length must be >= 0, got {k_max}")
    engine = engine_for(instance)
    m = instance.m
    dist = {engine.initial(): 1}
    yield StateDistribution(0, dist)
    for level in range(1, k_max + 1):
        nxt: Dict = {}
        for state, mult in dist.items():
            for t in range(m):
                succ = engine.step(t, state)
                nxt[succ] = nxt.get(succ, 0) + mult
        dist = nxt
        yield StateDistribution(level, dist)


def annihilated_mass(instance: VestInstance, dist: StateDistribution) -> int:
    """Total multiplicity of states in *dist* that the selector kills."""
    engine = engine_for(instance)
    return sum(mult for state, mult in dist.entries.items() if engine.annihilates(state))


def m_k_dedup(instance: VestInstance, k: int) -> int:
    """Count annihilated length-k sequences through state deduplication."""
    last = None
    for dist in dedup_levels(instance, k):
        last = dist
    return annihilated_mass(instance, last)


@dataclass(frozen=True)
class MSequenceResult:
    """Counts M_0..M_k_max for one instance, tagged with how they were made."""

    instance_fingerprint: str
    method: str
    values: Tuple[int, ...]

    @property
    def k_max(self) -> int:
        return len(self.values) - 1


def m_sequence(
    instance: VestInstance,
    k_max: int,
    method: str = "dedup",
    cap: int = DEFAULT_BRUTE_CAP,
) -> MSequenceResult:
    """Compute M_0..M_k_max with the chosen method ("dedup" or "brute")."""
    if k_max < 0:
        raise ValueError(f"maximum length must be >= 0, got {k_max}")
    if method == "dedup":
        values = tuple(
            annihilated_mass(instance, dist) for dist in dedup_levels(instance, k_max))
    elif method == "brute":
        values = tuple(m_k_bruteforce(instance, k, cap) for k in range(k_max + 1))
    else:
        raise ValueError(f"unknown method {method!r}")
    return MSequenceResult(instance_fingerprint(instance), method, values)
