"""Deterministic stand-in for the SMS network.

The channel enforces a per-message size limit and can lose, duplicate and
reorder messages.  All randomness comes from SplitMix64 so that a given seed
produces the same delivery trace on every platform and Python version.
"""

from dataclasses import dataclass

from .errors import OversizeMessage
from .segmentation import DEFAULT_CAPACITY

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014), as used to seed xoshiro.

    state += 0x9E3779B97F4A7C15
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)
    """

    def __init__(self, seed):
        self.state = seed & _MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self):
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


@dataclass(frozen=True)
class ChannelProfile:
    capacity_points: int = DEFAULT_CAPACITY
    reorder_window: int = 0
    duplicate_prob: float = 0.0
    loss_prob: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.capacity_points < 4:
            raise ValueError(f"capacity_points must be >= 4, got {self.capacity_points}")
        if self.reorder_window < 0:
            raise ValueError(f"reorder_window must be >= 0, got {self.reorder_window}")
        for name in ("duplicate_prob", "loss_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {p}")
        if not -(1 << 63) <= self.seed <= _MASK64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")

    @property
    def is_identity(self):
        return self.reorder_window == 0 and self.duplicate_prob == 0 and self.loss_prob == 0


def delivery_order(n, profile):
    """Send positions in the order the channel delivers them.

    Per message, in send order, one draw decides loss and one decides
    duplication (a duplicate follows its original).  The surviving copies are
    then reordered: copy ``k`` gets sort key ``k + window * u`` with ``u``
    uniform in [0, 1), which moves each copy at most ``window`` places.
    """
    rng = SplitMix64(profile.seed)
    copies = []
    for i in range(n):
        lost = rng.random() < profile.loss_prob
        dup = rng.random() < profile.duplicate_prob
        if lost:
            continue
        copies.append(i)
        if dup:
            copies.append(i)
    w = profile.reorder_window
    if w == 0:
        return copies
    keys = [k + w * rng.random() for k in range(len(copies))]
    order = sorted(range(len(copies)), key=lambda k: (keys[k], k))
    return [copies[k] for k in order]


def transmit(messages, profile=ChannelProfile()):
    """Push ``messages`` through the simulated channel.

    Raises `OversizeMessage` if any message is longer than the profile's
    capacity; that always means the sender segmented wrongly.
    """
    messages = list(messages)
    for i, m in enumerate(messages):
        if len(m) > profile.capacity_points:
            raise OversizeMessage(i, len(m), profile.capacity_points)
    return [messages[i] for i in delivery_order(len(messages), profile)]
