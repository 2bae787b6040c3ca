"""Workspace accounting.

The algorithms in this package are written against a cost model that
separates four currencies:

* charged words: live working memory a streaming port would have to hold.
  Allocations and releases must balance; the peak is the audited figure.
* primitive words: scratch used by arithmetic helpers (prime search,
  tour stepping) that the model treats as free-standing subroutines.
* input accesses: word-sized probes of the read-only input encoding.
* pass estimate: count of full sequential input scans initiated, a lower
  bound on what a one-directional streaming port would need.

A meter is threaded through the metered code paths explicitly.  Code that
does not care passes ``None`` and the no-op meter is used, so the hot paths
stay free of conditionals.
"""

from dataclasses import dataclass

from .errors import LedgerError


@dataclass(frozen=True)
class MeterSnapshot:
    charged_peak: int
    primitive_words: int
    input_accesses: int
    pass_estimate: int


class WorkspaceMeter:
    """Auditable tally of working-space usage.

    ``charged_current`` rises with :meth:`alloc` and falls with
    :meth:`release`; ``charged_peak`` tracks the high-water mark.
    Releasing more than is currently held raises :class:`LedgerError`
    immediately, so unbalanced code fails at the fault, not at the audit.
    """

    __slots__ = (
        "charged_current",
        "charged_peak",
        "primitive_words",
        "input_accesses",
        "pass_estimate",
    )

    def __init__(self):
        self.charged_current = 0
        self.charged_peak = 0
        self.primitive_words = 0
        self.input_accesses = 0
        self.pass_estimate = 0

    def alloc(self, words):
        if words < 0:
            raise LedgerError(f"negative allocation: {words}")
        cur = self.charged_current + words
        self.charged_current = cur
        if cur > self.charged_peak:
            self.charged_peak = cur

    def release(self, words):
        if words < 0:
            raise LedgerError(f"negative release: {words}")
        cur = self.charged_current - words
        if cur < 0:
            raise LedgerError(
                f"released {words} charged words but only "
                f"{self.charged_current} are held"
            )
        self.charged_current = cur

    def charge_primitive(self, words=1):
        self.primitive_words += words

    def access(self, count=1):
        self.input_accesses += count

    def tick_pass(self, count=1):
        self.pass_estimate += count

    def snapshot(self):
        return MeterSnapshot(
            charged_peak=self.charged_peak,
            primitive_words=self.primitive_words,
            input_accesses=self.input_accesses,
            pass_estimate=self.pass_estimate,
        )


class _NullMeter(WorkspaceMeter):
    """Accepts every charge and records nothing."""

    def alloc(self, words):
        pass

    def release(self, words):
        pass

    def charge_primitive(self, words=1):
        pass

    def access(self, count=1):
        pass

    def tick_pass(self, count=1):
        pass


NULL_METER = _NullMeter()


def coerce_meter(meter):
    """Accept a meter or None; never hand back None."""
    return NULL_METER if meter is None else meter


def with_meter(body):
    """Run ``body(meter)`` under a fresh meter and audit the balance.

    Returns ``(result, snapshot)``.  If the body returns with a different
    charge level than it entered with, the imbalance is a bug in the body
    and a :class:`LedgerError` is raised.
    """
    meter = WorkspaceMeter()
    entry = meter.charged_current
    result = body(meter)
    if meter.charged_current != entry:
        raise LedgerError(
            f"body exited holding {meter.charged_current} charged words "
            f"(entered with {entry})"
        )
    return result, meter.snapshot()
