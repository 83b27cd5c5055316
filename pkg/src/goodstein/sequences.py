"""Sequence generators: fixed-base countdown, weak and strong Goodstein.

All three families share one driver: emit the seed record, then apply the
kind's step until the value hits zero or a cap fires. Weak and strong
steps bump the base by one before subtracting; the strong step rewrites
the value in hereditary notation first, which is why it explodes and needs
a magnitude cap on top of the step cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Generator, Optional

from .errors import DomainError, InvalidBase, MagnitudeCapExceeded
from .hereditary import HereditaryTree, Leaf, build_hereditary
from .numerals import Digits, from_digits, render, to_digits

DEFAULT_MAX_STEPS = 10**6
DEFAULT_MAX_BITS = 10**6


class RunKind(Enum):
    DECREASING = "decreasing"
    WEAK = "weak"
    STRONG = "strong"


class RunStatus(Enum):
    TERMINATED_AT_ZERO = "TerminatedAtZero"
    STEP_CAP_REACHED = "StepCapReached"
    MAGNITUDE_CAP_REACHED = "MagnitudeCapReached"


@dataclass(frozen=True)
class StepRecord:
    """One element of a generated sequence.

    ``digits`` is always ``to_digits(value, base)`` and ``rendered`` the
    matching base-annotated numeral.
    """

    index: int
    base: int
    value: int
    digits: Digits
    rendered: str


@dataclass(frozen=True)
class RunConfig:
    start_value: int
    start_base: int = 2
    max_steps: int = DEFAULT_MAX_STEPS
    max_bits: int = DEFAULT_MAX_BITS

    def __post_init__(self):
        if self.start_base < 2:
            raise InvalidBase(self.start_base)
        if self.start_value < 0:
            raise DomainError(f"start_value must be a natural number, got {self.start_value}")
        if self.max_steps < 1:
            raise DomainError(f"max_steps must be >= 1, got {self.max_steps}")
        if self.max_bits < 1:
            raise DomainError(f"max_bits must be >= 1, got {self.max_bits}")


@dataclass(frozen=True)
class RunOutcome:
    status: RunStatus
    steps_emitted: int
    final: StepRecord


def weak_step(value: int, base: int) -> int:
    """Reread the base-``base`` digits of ``value`` in ``base + 1``, minus one."""
    if value == 0:
        raise DomainError("weak step undefined at zero: the sequence has terminated")
    return from_digits(to_digits(value, base), base + 1) - 1


def strong_step(value: int, base: int, max_bits: int = DEFAULT_MAX_BITS) -> int:
    """Reread ``value``'s hereditary base-``base`` form in ``base + 1``, minus one.

    Raises MagnitudeCapExceeded rather than materializing any intermediate
    wider than ``max_bits`` bits; the bumped value is otherwise exact.
    """
    if value == 0:
        raise DomainError("strong step undefined at zero: the sequence has terminated")
    tree = build_hereditary(value, base)
    return _eval_capped(tree, base + 1, max_bits) - 1


def decreasing_step(value: int) -> int:
    if value == 0:
        raise DomainError("decreasing step undefined at zero: the sequence has terminated")
    return value - 1


def _eval_capped(tree: Optional[HereditaryTree], base: int, max_bits: int) -> int:
    """Evaluate a hereditary tree, refusing to grow past ``max_bits`` bits.

    The exponent is checked before ``base**exponent`` is computed:
    ``base**e`` needs at least ``e + 1`` bits, so an exponent at or above
    the cap proves overflow without touching the power.
    """
    total = 0
    node = tree
    while node is not None:
        if isinstance(node, Leaf):
            total += node.coefficient
            break
        exponent = _eval_capped(node.exponent, base, max_bits)
        if exponent >= max_bits:
            raise MagnitudeCapExceeded(exponent + 1)
        total += node.coefficient * base**exponent
        if total.bit_length() > max_bits:
            raise MagnitudeCapExceeded(total.bit_length())
        node = node.next
    return total


def _record(index: int, base: int, value: int) -> StepRecord:
    digits = to_digits(value, base)
    return StepRecord(index, base, value, digits, render(digits, base).text)


def run(kind: RunKind, cfg: RunConfig) -> Generator[StepRecord, None, RunOutcome]:
    """Yield step records until the value reaches zero or a cap fires.

    Records stream one at a time, starting with the seed numeral at index
    0; nothing is precomputed beyond the record being yielded. The
    RunOutcome is the generator's return value (``StopIteration.value``);
    use ``run_collected`` when the whole trace fits in memory anyway.

    Weak and strong runs use ``base = start_base + index``; decreasing
    runs keep ``start_base`` fixed. ``steps_emitted`` counts emitted
    records, seed included.
    """
    record = _record(0, cfg.start_base, cfg.start_value)
    yield record
    emitted = 1
    while True:
        if record.value == 0:
            return RunOutcome(RunStatus.TERMINATED_AT_ZERO, emitted, record)
        if emitted >= cfg.max_steps:
            return RunOutcome(RunStatus.STEP_CAP_REACHED, emitted, record)
        if kind is RunKind.DECREASING:
            value, base = decreasing_step(record.value), record.base
        elif kind is RunKind.WEAK:
            value, base = weak_step(record.value, record.base), record.base + 1
        else:
            try:
                value = strong_step(record.value, record.base, cfg.max_bits)
            except MagnitudeCapExceeded:
                return RunOutcome(RunStatus.MAGNITUDE_CAP_REACHED, emitted, record)
            base = record.base + 1
        record = _record(record.index + 1, base, value)
        yield record
        emitted += 1


def run_collected(kind: RunKind, cfg: RunConfig) -> tuple[list[StepRecord], RunOutcome]:
    """Exhaust ``run`` into a list and return it with the outcome."""
    records: list[StepRecord] = []
    stream = run(kind, cfg)
    while True:
        try:
            records.append(next(stream))
        except StopIteration as stop:
            return records, stop.value
