"""Per-node sending-cluster protocol.

Every node broadcasts under its own random sending key. A receiver that
cannot authenticate a frame derives the pairwise secret with the sender,
sends its own key wrapped under that secret (KEY_REQUEST) and the sender
answers with its key (KEY_REPLY): two messages per neighbour.
"""

import hashlib
from collections import OrderedDict
from dataclasses import dataclass

from . import secmsg
from .keydist import SeededStream, pairwise_secret, secret_key_bytes
from .secmsg import (
    BROADCAST,
    DATA,
    KEY_BYTES,
    KEY_REPLY,
    KEY_REQUEST,
    BadMac,
    CounterExhausted,
    CounterState,
    Replay,
)

TABLE_CAPACITY = 20
PENDING_FRAMES_PER_PEER = 8
_RETIRED_CAPACITY = 256
_PAIRWISE_CACHE = 64


@dataclass
class NeighborEntry:
    id: int
    key: bytes
    last_seen_s: int = 0
    inserted_at: int = 0


@dataclass(frozen=True)
class Deliver:
    sender: int
    payload: bytes
    fresh: bool
    frame: secmsg.Frame = None


@dataclass(frozen=True)
class Send:
    frame: secmsg.Frame
    reason: str


@dataclass(frozen=True)
class KeyInstalled:
    peer: int


@dataclass(frozen=True)
class Drop:
    reason: str
    sender: int = 0


class NeighborTable:
    """Neighbour sending keys with insertion-order eviction.

    Installing a different key for a known neighbour counts as a fresh
    insertion. Reinstalling the same key keeps the entry and its counter.
    Counters of replaced or evicted keys are remembered so that a later
    reinstall of the same key cannot reopen the replay window.
    """

    def __init__(self, capacity=TABLE_CAPACITY):
        self.capacity = capacity
        self._entries = OrderedDict()
        self._seq = 0
        self._retired = OrderedDict()
        self.evicted = []

    def __len__(self):
        return len(self._entries)

    def __contains__(self, node_id):
        return node_id in self._entries

    def get(self, node_id):
        return self._entries.get(node_id)

    def ids(self):
        return list(self._entries)

    def entries(self):
        return list(self._entries.values())

    def _retire(self, entry):
        self._retired[(entry.id, entry.key)] = entry.last_seen_s
        self._retired.move_to_end((entry.id, entry.key))
        while len(self._retired) > _RETIRED_CAPACITY:
            self._retired.popitem(last=False)

    def install(self, node_id, key):
        """Insert or replace a neighbour key. Returns True if the table changed."""
        key = bytes(key)
        entry = self._entries.get(node_id)
        if entry is not None:
            if entry.key == key:
                return False
            self._retire(entry)
            del self._entries[node_id]
        elif len(self._entries) >= self.capacity:
            _, oldest = self._entries.popitem(last=False)
            self._retire(oldest)
            self.evicted.append(oldest.id)
        self._seq += 1
        last = self._retired.pop((node_id, key), 0)
        self._entries[node_id] = NeighborEntry(node_id, key, last, self._seq)
        return True

    def update_counter(self, node_id, s):
        entry = self._entries[node_id]
        if s > entry.last_seen_s:
            entry.last_seen_s = s


def payload_digest(payload):
    return hashlib.sha256(payload).digest()[:8]


class NodeState:
    """One sensor node's protocol state. Not shared between owners."""

    def __init__(self, share, seed):
        self.id = share.id
        self.share = share
        self._rng = SeededStream(b"sensorsec/node" + bytes(seed))
        self.sending_key = self._rng.read(KEY_BYTES)
        self.counter = CounterState()
        self.table = NeighborTable()
        self.dvsis = set()
        self.now = 0
        self.rollovers = 0
        self.exchange_counter = 0
        self.pending_requests = {}
        self.pending_frames = {}
        self.observer = None
        self._pairwise = OrderedDict()

    # -- key material -------------------------------------------------

    def pairwise_key(self, peer):
        key = self._pairwise.get(peer)
        if key is None:
            key = secret_key_bytes(pairwise_secret(self.share, peer))
            self._pairwise[peer] = key
            while len(self._pairwise) > _PAIRWISE_CACHE:
                self._pairwise.popitem(last=False)
        return key

    def rollover(self):
        """Fresh sending key and counter; neighbours re-key on BadMac."""
        self.sending_key = self._rng.read(KEY_BYTES)
        self.counter = CounterState()
        self.rollovers += 1

    def _exchange_s(self, peer):
        # The lower id takes even counters and the higher id odd ones, so the
        # two directions under one pairwise secret never share a counter.
        self.exchange_counter += 1
        s = 2 * self.exchange_counter + (0 if self.id < peer else 1)
        if s > secmsg.MAX_COUNTER:
            raise CounterExhausted("key-exchange counter exhausted")
        return s

    def _seal(self, key, msg_type, payload, dest=BROADCAST, s=None):
        if s is None:
            frame = secmsg.seal(key, self.id, msg_type, self.counter, payload, dest)
        else:
            frame = secmsg.seal_with_counter(key, self.id, msg_type, s, payload, dest)
        if self.observer is not None:
            self.observer(self, key, frame, payload)
        return frame

    # -- outbound ------------------------------------------------------

    def send_data(self, payload):
        if not payload:
            raise ValueError("DATA payload must be non-empty")
        payload = bytes(payload)
        self.dvsis.add(payload_digest(payload))
        try:
            return self._seal(self.sending_key, DATA, payload)
        except CounterExhausted:
            self.rollover()
            return self._seal(self.sending_key, DATA, payload)

    def _key_request(self, peer):
        self.pending_requests[peer] = self.now
        frame = self._seal(self.pairwise_key(peer), KEY_REQUEST, self.sending_key, dest=peer,
                           s=self._exchange_s(peer))
        return Send(frame, "key-request")

    # -- inbound -------------------------------------------------------

    def on_frame(self, frame):
        """Process one received frame and return the resulting actions."""
        if isinstance(frame, (bytes, bytearray)):
            try:
                frame = secmsg.Frame.from_bytes(frame)
            except secmsg.MalformedFrame:
                return [Drop("Malformed")]
        if frame.sender == self.id:
            return [Drop("OwnId", frame.sender)]
        if frame.msg_type in (KEY_REQUEST, KEY_REPLY):
            return self.handle_key_exchange(frame)
        if frame.msg_type != DATA:
            return [Drop("UnknownType", frame.sender)]
        return self._on_data(frame)

    def _on_data(self, frame, retry=False):
        sender = frame.sender
        entry = self.table.get(sender)
        if entry is not None:
            try:
                payload = secmsg.open(entry.key, frame, entry.last_seen_s)
            except Replay:
                return [Drop("ReplayDetected", sender)]
            except BadMac:
                if retry:
                    return [Drop("BadMac", sender)]
                return [Drop("BadMac", sender)] + self._request_for(frame)
            self.table.update_counter(sender, frame.s)
            return self._deliver(frame, payload)
        if retry:
            return [Drop("NoKey", sender)]
        return self._request_for(frame)

    def _request_for(self, frame):
        sender = frame.sender
        buf = self.pending_frames.setdefault(sender, [])
        buf.append(frame)
        del buf[:-PENDING_FRAMES_PER_PEER]
        if self.pending_requests.get(sender) == self.now:
            return [Drop("AwaitingKey", sender)]
        try:
            return [self._key_request(sender)]
        except (ValueError, CounterExhausted):
            return [Drop("InvalidSender", sender)]

    def _deliver(self, frame, payload):
        digest = payload_digest(payload)
        fresh = digest not in self.dvsis
        actions = [Deliver(frame.sender, payload, fresh, frame)]
        if fresh:
            self.dvsis.add(digest)
            actions.append(Send(self.send_data(payload), "rebroadcast"))
        return actions

    def handle_key_exchange(self, frame):
        """KEY_REQUEST: install the peer's key and answer with ours.
        KEY_REPLY: install the peer's key if we asked for it."""
        peer = frame.sender
        if frame.dest != self.id:
            return [Drop("NotForUs", peer)]
        try:
            key = self.pairwise_key(peer)
        except ValueError:
            return [Drop("InvalidSender", peer)]
        try:
            secmsg.verify(key, frame)
        except BadMac:
            return [Drop("BadMac", peer)]
        if len(frame.ciphertext) != KEY_BYTES:
            return [Drop("Malformed", peer)]
        peer_key = secmsg.ctr_crypt(key, frame.s, frame.ciphertext)
        if frame.msg_type == KEY_REPLY:
            if peer not in self.pending_requests:
                return [Drop("Unsolicited", peer)]
            del self.pending_requests[peer]
            self.table.install(peer, peer_key)
            return [KeyInstalled(peer)] + self._retry_pending(peer)
        self.table.install(peer, peer_key)
        self.pending_requests.pop(peer, None)
        reply = self._seal(key, KEY_REPLY, self.sending_key, dest=peer, s=self._exchange_s(peer))
        return [KeyInstalled(peer), Send(reply, "key-reply")] + self._retry_pending(peer)

    def _retry_pending(self, peer):
        actions = []
        for old in self.pending_frames.pop(peer, []):
            actions.extend(self._on_data(old, retry=True))
        return actions


def node_init(share, seed):
    return NodeState(share, seed)
