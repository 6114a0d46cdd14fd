"""Deterministic discrete-time simulator for mobile sensor nodes.

Nodes move on a plane, broadcast one hop, and run the sending-cluster
protocol. An omniscient adversary records every frame and can replay,
inject, compromise nodes, and try to read traffic. Everything is driven by
the configured seed, so a (config, seed) pair yields a byte-identical report.

Within a step, frames are delivered synchronously: every frame sent during
step k, including protocol reactions to it, is received during step k.
"""

import hashlib
import math
import random
import re
import struct
from collections import deque
from dataclasses import dataclass, field, fields, replace

from . import secmsg
from .cluster import Deliver, Drop, KeyInstalled, Send, TABLE_CAPACITY, node_init
from .field80 import MAX_ID
from .keydist import (
    NodeShare,
    ca_generate,
    candidate_master,
    derive_share,
    pairwise_secret,
    reconstruct_master,
    secret_key_bytes,
)
from .secmsg import DATA, KEY_REPLY, KEY_REQUEST, BadMac, Frame

REPORT_FORMAT = "sensorsec-report 1"
ADVERSARY_KINDS = ("eavesdrop", "replay", "inject", "compromise")
MAX_TRANSMISSIONS_PER_STEP = 200_000
LIVENESS_MAX_NODES = TABLE_CAPACITY + 1


class ConfigInvalid(ValueError):
    pass


@dataclass(frozen=True)
class AdversaryAction:
    kind: str
    at_step: int
    arg: int = 0

    def __str__(self):
        if self.kind == "inject":
            return "inject@%d" % self.at_step
        if self.kind == "eavesdrop":
            return "eavesdrop@%d" % self.at_step
        return "%s(%d)@%d" % (self.kind, self.arg, self.at_step)


@dataclass
class SimConfig:
    node_count: int = 2
    world_size: tuple = (100.0, 100.0)
    radio_range: float = 50.0
    loss_prob: float = 0.0
    steps: int = 1
    mobility: str = "static"
    max_speed: float = 0.0
    placement: str = "random"
    degree_t: int = 20
    seed: int = 0
    traffic: tuple = ()
    send_prob: float = 0.0
    payload_size: int = 16
    adversary: tuple = ()

    def validate(self):
        if not isinstance(self.node_count, int) or not 1 <= self.node_count < MAX_ID:
            raise ConfigInvalid("node_count must be in [1, 65535]")
        if len(self.world_size) != 2 or min(self.world_size) <= 0:
            raise ConfigInvalid("world_size must be two positive lengths")
        if not self.radio_range > 0:
            raise ConfigInvalid("radio_range must be positive")
        if not 0.0 <= self.loss_prob <= 1.0:
            raise ConfigInvalid("loss_prob must be in [0, 1]")
        if not 0.0 <= self.send_prob <= 1.0:
            raise ConfigInvalid("send_prob must be in [0, 1]")
        if self.steps < 0:
            raise ConfigInvalid("steps must be non-negative")
        if self.mobility not in ("static", "random_waypoint"):
            raise ConfigInvalid("mobility must be static or random_waypoint")
        if self.mobility == "random_waypoint" and not self.max_speed > 0:
            raise ConfigInvalid("random_waypoint needs a positive max_speed")
        if self.placement not in ("random", "line"):
            raise ConfigInvalid("placement must be random or line")
        if not 1 <= self.degree_t <= 1000:
            raise ConfigInvalid("degree_t must be in [1, 1000]")
        if not 0 <= self.seed < 1 << 64:
            raise ConfigInvalid("seed must be a 64-bit unsigned integer")
        if not 10 <= self.payload_size <= 512:
            raise ConfigInvalid("payload_size must be in [10, 512]")
        for node, step in self.traffic:
            if node != -1 and not 0 <= node < self.node_count:
                raise ConfigInvalid("traffic node index %d out of range" % node)
            if not 0 <= step < self.steps:
                raise ConfigInvalid("traffic step %d outside [0, steps)" % step)
        for act in self.adversary:
            if act.kind not in ADVERSARY_KINDS:
                raise ConfigInvalid("unknown adversary action %r" % act.kind)
            if not 0 <= act.at_step < self.steps:
                raise ConfigInvalid("adversary step %d outside [0, steps)" % act.at_step)
            if act.kind == "compromise" and not 0 <= act.arg < self.node_count:
                raise ConfigInvalid("compromise node index %d out of range" % act.arg)
            if act.kind == "replay" and act.arg < 0:
                raise ConfigInvalid("replay frame index must be non-negative")
        return self

    def to_text(self):
        """Canonical key = value form; parse_config(to_text()) round-trips."""
        mob = self.mobility
        if mob == "random_waypoint":
            mob = "random_waypoint:%s" % _fmt(self.max_speed)
        lines = [
            "node_count = %d" % self.node_count,
            "world_size = %sx%s" % (_fmt(self.world_size[0]), _fmt(self.world_size[1])),
            "radio_range = %s" % _fmt(self.radio_range),
            "loss_prob = %s" % _fmt(self.loss_prob),
            "steps = %d" % self.steps,
            "mobility = %s" % mob,
            "placement = %s" % self.placement,
            "degree_t = %d" % self.degree_t,
            "seed = %d" % self.seed,
            "traffic = %s" % ", ".join("%s@%d" % ("*" if n == -1 else n, s) for n, s in self.traffic),
            "send_prob = %s" % _fmt(self.send_prob),
            "payload_size = %d" % self.payload_size,
            "adversary = %s" % "; ".join(str(a) for a in self.adversary),
        ]
        return "\n".join(lines) + "\n"


def _fmt(x):
    return repr(float(x))


_ACTION_RE = re.compile(r"^(eavesdrop|replay|inject|compromise)(?:\((\d+)\))?@(\d+)$")


def _parse_actions(value):
    actions = []
    for part in value.split(";"):
        part = part.strip().replace(" ", "")
        if not part:
            continue
        m = _ACTION_RE.match(part)
        if not m:
            raise ConfigInvalid("cannot parse adversary action %r" % part)
        kind, arg, step = m.group(1), m.group(2), int(m.group(3))
        if kind in ("replay", "compromise") and arg is None:
            raise ConfigInvalid("%s needs an argument, e.g. %s(0)@1" % (kind, kind))
        actions.append(AdversaryAction(kind, step, int(arg) if arg else 0))
    return tuple(actions)


def _parse_traffic(value):
    out = []
    for part in value.split(","):
        part = part.strip()
        if not part:
            continue
        node, sep, step = part.partition("@")
        if not sep:
            raise ConfigInvalid("traffic entries look like node@step, got %r" % part)
        try:
            out.append((-1 if node.strip() == "*" else int(node), int(step)))
        except ValueError:
            raise ConfigInvalid("bad traffic entry %r" % part) from None
    return tuple(out)


def parse_config(text):
    """Parse key = value scenario text (``#`` starts a comment)."""
    cfg = SimConfig()
    known = {f.name for f in fields(SimConfig)} | {"world_size", "mobility"}
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in known:
            raise ConfigInvalid("line %d: unknown or malformed entry %r" % (lineno, raw.strip()))
        if key in seen:
            raise ConfigInvalid("line %d: duplicate key %r" % (lineno, key))
        seen.add(key)
        try:
            if key in ("node_count", "steps", "degree_t", "payload_size"):
                setattr(cfg, key, int(value))
            elif key == "seed":
                cfg.seed = int(value, 0)
            elif key in ("radio_range", "loss_prob", "send_prob"):
                setattr(cfg, key, float(value))
            elif key == "world_size":
                w, _, h = value.lower().partition("x")
                cfg.world_size = (float(w), float(h))
            elif key == "mobility":
                name, _, speed = value.partition(":")
                cfg.mobility = name.strip()
                cfg.max_speed = float(speed) if speed else 0.0
            elif key == "placement":
                cfg.placement = value
            elif key == "traffic":
                cfg.traffic = _parse_traffic(value)
            elif key == "adversary":
                cfg.adversary = _parse_actions(value)
            else:
                raise ConfigInvalid("line %d: %r cannot be set from a file" % (lineno, key))
        except ValueError as exc:
            if isinstance(exc, ConfigInvalid):
                raise
            raise ConfigInvalid("line %d: bad value for %s: %s" % (lineno, key, exc)) from None
    return cfg.validate()


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


COUNTER_FIELDS = (
    "frames_sent",
    "data_frames_sent",
    "key_request_frames",
    "key_reply_frames",
    "frames_received",
    "frames_lost",
    "frames_delivered",
    "payloads_originated",
    "key_exchanges",
    "replays_rejected",
    "forgeries_rejected",
    "replays_first_delivery",
    "compromised_frames_accepted",
    "rollovers",
    "evictions",
    "bytes_overhead_total",
)

ADVERSARY_FIELDS = (
    "frames_captured",
    "compromised_nodes",
    "payloads_recovered",
    "master_reconstructed",
    "secret_predicted",
    "forged_frames_accepted",
)


@dataclass
class ScenarioReport:
    config: SimConfig
    node_ids: list
    counters: dict
    adversary: dict
    metrics: dict
    events: list
    violations: list

    @property
    def safe(self):
        return not self.violations

    def to_text(self):
        out = [REPORT_FORMAT, "[config]", self.config.to_text().rstrip("\n"), "[nodes]"]
        out.append("ids = " + ", ".join(str(i) for i in self.node_ids))
        out.append("[counters]")
        out.extend("%s = %s" % (k, _render(self.counters[k])) for k in COUNTER_FIELDS)
        out.append("[adversary]")
        out.extend("%s = %s" % (k, _render(self.adversary[k])) for k in ADVERSARY_FIELDS)
        out.append("[metrics]")
        out.extend("%s = %s" % (k, _render(v)) for k, v in self.metrics.items())
        out.append("[violations]")
        out.append("count = %d" % len(self.violations))
        out.extend(self.violations)
        out.append("[events]")
        out.extend(self.events)
        return "\n".join(out) + "\n"


def _render(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "%.6f" % v
    return str(v)


def parse_report(text):
    """Read the scalar sections of a report back into dicts (events skipped)."""
    sections = {}
    current = None
    for line in text.splitlines()[1:]:
        if line.startswith("[") and line.endswith("]"):
            current = sections.setdefault(line[1:-1], {})
            continue
        if current is None or line.count(" = ") != 1 or line[:1].isdigit():
            continue
        k, v = line.split(" = ")
        current[k] = v
    return sections


@dataclass
class _Tx:
    frame: Frame
    pos: tuple
    src: int
    origin: str


@dataclass
class _Stolen:
    share: NodeShare
    keys: dict = field(default_factory=dict)


def adversary_eavesdrop(captured, sender_keys=None, shares=()):
    """Try to read captured frames; return the set of recovered payloads.

    ``sender_keys`` maps sender id to the set of its sending keys known to
    the adversary; ``shares`` are stolen node shares. Key-exchange frames to
    or from a stolen share are opened with the derived pairwise secret,
    which reveals further sending keys. A guess only counts when its tag
    verifies, and without keys the only guess left is the ciphertext itself.
    """
    known = {k: set(v) for k, v in (sender_keys or {}).items()}
    by_id = {s.id: s for s in shares}
    recovered = set()
    frames = [f if isinstance(f, Frame) else Frame.from_bytes(f) for f in captured]
    for _ in range(2):
        for frame in frames:
            if frame.msg_type in (KEY_REQUEST, KEY_REPLY):
                for holder, peer in ((frame.dest, frame.sender), (frame.sender, frame.dest)):
                    share = by_id.get(holder)
                    if share is None or peer == holder or not 0 < peer < MAX_ID:
                        continue
                    key = secret_key_bytes(pairwise_secret(share, peer))
                    try:
                        secmsg.verify(key, frame)
                    except BadMac:
                        continue
                    known.setdefault(frame.sender, set()).add(
                        secmsg.ctr_crypt(key, frame.s, frame.ciphertext))
                continue
            opened = False
            for key in sorted(known.get(frame.sender, ())):
                try:
                    recovered.add(secmsg.open(key, frame, 0))
                    opened = True
                    break
                except secmsg.SecMsgError:
                    continue
            if not opened:
                recovered.add(frame.ciphertext)
    return recovered


class Simulation:
    def __init__(self, config):
        config.validate()
        self.config = config
        self.rng = random.Random(config.seed)
        self._seed_bytes = hashlib.sha256(b"sensorsec/sim" + config.seed.to_bytes(8, "little")).digest()
        self.master = ca_generate(config.degree_t, self._seed_bytes)
        ids = self.rng.sample(range(1, MAX_ID), config.node_count)
        self.nodes = []
        for node_id in ids:
            share = derive_share(self.master, node_id)
            node = node_init(share, self._seed_bytes + node_id.to_bytes(2, "little"))
            node.observer = self._on_seal
            self.nodes.append(node)
        self.index_of = {n.id: i for i, n in enumerate(self.nodes)}
        self.pos = self._place()
        self.waypoints = [None] * config.node_count
        self.counters = dict.fromkeys(COUNTER_FIELDS, 0)
        self.adv = dict.fromkeys(ADVERSARY_FIELDS, 0)
        self.adv["master_reconstructed"] = False
        self.adv["secret_predicted"] = False
        self.events = []
        self.violations = []
        self.step = 0
        self._keystream = set()
        self._truth = set()
        self._origin_of = {}
        self.captured = []
        self._eavesdrop_from = None
        self._stolen = {}
        self._inject_count = 0
        self._seq = [0] * config.node_count
        self._first_delivery_seen = False
        self._exchange_before_first = [0, 0]
        self._received_payloads = [set() for _ in self.nodes]
        self._originated = []

    # -- setup ----------------------------------------------------------

    def _place(self):
        w, h = self.config.world_size
        if self.config.placement == "line":
            gap = 0.9 * self.config.radio_range
            return [[i * gap, h / 2.0] for i in range(self.config.node_count)]
        return [[self.rng.uniform(0, w), self.rng.uniform(0, h)] for _ in self.nodes]

    def _move(self):
        if self.config.mobility != "random_waypoint":
            return
        w, h = self.config.world_size
        vmax = self.config.max_speed
        for i, p in enumerate(self.pos):
            wp = self.waypoints[i]
            if wp is None:
                # speeds start at a tenth of the maximum to avoid stalled nodes
                wp = self.waypoints[i] = (self.rng.uniform(0, w), self.rng.uniform(0, h),
                                          self.rng.uniform(0.1 * vmax, vmax))
            tx, ty, v = wp
            dx, dy = tx - p[0], ty - p[1]
            d = math.hypot(dx, dy)
            if d <= v:
                p[0], p[1] = tx, ty
                self.waypoints[i] = None
            else:
                p[0] += dx / d * v
                p[1] += dy / d * v

    # -- bookkeeping ------------------------------------------------------

    def _log(self, text):
        self.events.append("%d %s" % (self.step, text))

    def _violation(self, text):
        self.violations.append("%d %s" % (self.step, text))

    def _on_seal(self, node, key, frame, payload):
        use = (bytes(key), frame.s)
        if use in self._keystream:
            self._violation("keystream-reuse node=%d s=%d" % (node.id, frame.s))
        self._keystream.add(use)

    def _payload(self, idx):
        node = self.nodes[idx]
        self._seq[idx] += 1
        head = struct.pack(">HII", node.id, self._seq[idx], self.step)
        pad = hashlib.sha256(self._seed_bytes + head).digest()
        while len(head) + len(pad) < self.config.payload_size:
            pad += hashlib.sha256(pad).digest()
        return head + pad[:self.config.payload_size - len(head)]

    # -- radio ------------------------------------------------------------

    def _in_range(self, pos, exclude):
        r = self.config.radio_range
        return [j for j, q in enumerate(self.pos)
                if j != exclude and math.hypot(q[0] - pos[0], q[1] - pos[1]) <= r]

    def _count_sent(self, frame):
        c = self.counters
        c["frames_sent"] += 1
        c["bytes_overhead_total"] += secmsg.OVERHEAD
        if frame.msg_type == DATA:
            c["data_frames_sent"] += 1
        elif frame.msg_type == KEY_REQUEST:
            c["key_request_frames"] += 1
            if not self._first_delivery_seen:
                self._exchange_before_first[0] += 1
        elif frame.msg_type == KEY_REPLY:
            c["key_reply_frames"] += 1
            if not self._first_delivery_seen:
                self._exchange_before_first[1] += 1

    def _drain(self, queue):
        sent = 0
        while queue:
            tx = queue.popleft()
            sent += 1
            if sent > MAX_TRANSMISSIONS_PER_STEP:
                self._violation("flood did not terminate within %d transmissions" % MAX_TRANSMISSIONS_PER_STEP)
                queue.clear()
                return
            frame = tx.frame
            wire = frame.to_bytes()
            if tx.origin == "node":
                self._count_sent(frame)
                self.captured.append((self.step, wire))
            self._log("tx %s from=%d type=%d dest=%d s=%d len=%d" % (
                tx.origin, frame.sender, frame.msg_type, frame.dest, frame.s, len(wire)))
            for j in self._in_range(tx.pos, tx.src):
                if self.config.loss_prob > 0 and self.rng.random() < self.config.loss_prob:
                    self.counters["frames_lost"] += 1
                    continue
                self.counters["frames_received"] += 1
                for act in self.nodes[j].on_frame(frame):
                    self._apply(j, tx, act, queue)

    def _apply(self, j, tx, act, queue):
        node = self.nodes[j]
        c = self.counters
        if isinstance(act, Send):
            queue.append(_Tx(act.frame, tuple(self.pos[j]), j, "node"))
        elif isinstance(act, Deliver):
            c["frames_delivered"] += 1
            self._received_payloads[j].add(act.payload)
            if not self._first_delivery_seen:
                self._first_delivery_seen = True
                self._log("first-delivery node=%d key_requests=%d key_replies=%d" % (
                    node.id, *self._exchange_before_first))
            origin = self._origin_of.get(id(act.frame), (None, "node"))[1]
            self._classify_delivery(node, origin, act)
            self._log("deliver node=%d from=%d fresh=%d" % (node.id, act.sender, act.fresh))
        elif isinstance(act, KeyInstalled):
            if tx.frame.msg_type == KEY_REPLY:
                c["key_exchanges"] += 1
            self._log("install node=%d peer=%d" % (node.id, act.peer))
        elif isinstance(act, Drop):
            if act.reason == "ReplayDetected":
                c["replays_rejected"] += 1
            elif act.reason == "BadMac":
                c["forgeries_rejected"] += 1
            self._log("drop node=%d from=%d reason=%s" % (node.id, act.sender, act.reason))

    def _classify_delivery(self, node, origin, act):
        if origin == "node":
            return
        if origin == "replay":
            self.counters["replays_first_delivery"] += 1
            self._log("replay-first-delivery node=%d from=%d" % (node.id, act.sender))
        elif origin == "impersonate":
            self.counters["compromised_frames_accepted"] += 1
        else:
            self.adv["forged_frames_accepted"] += 1
            self._violation("forged frame accepted node=%d claimed=%d" % (node.id, act.sender))

    def _adversary_tx(self, frame, origin, near):
        self._origin_of[id(frame)] = (frame, origin)
        return _Tx(frame, tuple(self.pos[near]), -1, origin)

    # -- adversary --------------------------------------------------------

    def _fire(self, act, queue):
        if act.kind == "eavesdrop":
            if self._eavesdrop_from is None or act.at_step < self._eavesdrop_from:
                self._eavesdrop_from = act.at_step
            self._log("adversary eavesdrop from=%d" % act.at_step)
        elif act.kind == "replay":
            self._replay(act.arg, queue)
        elif act.kind == "inject":
            self._inject(queue)
        elif act.kind == "compromise":
            self._compromise(act.arg, queue)

    def _replay(self, index, queue):
        if index >= len(self.captured):
            self._log("adversary replay index=%d skipped (only %d captured)" % (index, len(self.captured)))
            return
        frame = Frame.from_bytes(self.captured[index][1])
        near = self.index_of.get(frame.sender, 0)
        self._log("adversary replay index=%d from=%d type=%d s=%d" % (index, frame.sender, frame.msg_type, frame.s))
        queue.append(self._adversary_tx(frame, "replay", near))

    def _inject(self, queue):
        self._inject_count += 1
        victim_idx = self.rng.randrange(len(self.nodes))
        victim = self.nodes[victim_idx]
        if self._inject_count % 2 == 1:
            ct = self.rng.randbytes(self.config.payload_size)
            frame = Frame(victim.id, DATA, self.rng.randrange(1, 1 << 16), ct, self.rng.randbytes(4))
            self._log("adversary inject data claimed=%d" % victim.id)
        else:
            # key request from an identity the CA never issued, using a fake share
            fake_id = self.rng.randrange(1, MAX_ID)
            while fake_id in self.index_of:
                fake_id = self.rng.randrange(1, MAX_ID)
            fake_share = NodeShare(fake_id, tuple(self.rng.randrange(1 << 79)
                                                  for _ in range(self.config.degree_t + 1)))
            key = secret_key_bytes(pairwise_secret(fake_share, victim.id))
            frame = secmsg.seal_with_counter(key, fake_id, KEY_REQUEST, 2, self.rng.randbytes(10), victim.id)
            self._log("adversary inject key-request fake=%d dest=%d" % (fake_id, victim.id))
        queue.append(self._adversary_tx(frame, "inject", victim_idx))

    def _compromise(self, idx, queue):
        node = self.nodes[idx]
        stolen = self._stolen.setdefault(node.id, _Stolen(node.share))
        stolen.keys.setdefault(node.id, set()).add(node.sending_key)
        for entry in node.table.entries():
            stolen.keys.setdefault(entry.id, set()).add(entry.key)
        self.adv["compromised_nodes"] = len(self._stolen)
        self._log("adversary compromise node=%d total=%d" % (node.id, len(self._stolen)))
        self._threshold_attack()
        # act as the captured node: accepted, since it is a legitimate member
        payload = self._payload(idx)
        self._truth.add(payload)
        legit = node.send_data(payload)
        queue.append(self._adversary_tx(legit, "impersonate", idx))
        # and try to speak for someone else with the stolen key
        others = [i for i, n in enumerate(self.nodes) if n.id not in self._stolen]
        if others:
            claimed = self.nodes[others[0]]
            forged = secmsg.seal_with_counter(node.sending_key, claimed.id, DATA,
                                              secmsg.MAX_COUNTER, self._payload(idx))
            queue.append(self._adversary_tx(forged, "forge", idx))

    def _threshold_attack(self):
        t = self.config.degree_t
        shares = [s.share for s in self._stolen.values()]
        targets = [n for n in self.nodes if n.id not in self._stolen][:2]
        if len(shares) >= t + 1:
            guess = reconstruct_master(shares, t)
        else:
            guess = candidate_master(shares, t, random.Random(self.rng.getrandbits(64)))
        exact = guess.coeffs == self.master.coeffs
        predicted = False
        if len(targets) == 2:
            a, b = targets
            predicted = guess.evaluate(a.id, b.id) == pairwise_secret(a.share, b.id)
        self.adv["master_reconstructed"] = exact
        self.adv["secret_predicted"] = predicted
        self._log("adversary threshold shares=%d t=%d reconstructed=%d predicted=%d" % (
            len(shares), t, exact, predicted))

    # -- main loop --------------------------------------------------------

    def run(self):
        cfg = self.config
        scheduled = {}
        for node, step in cfg.traffic:
            targets = range(cfg.node_count) if node == -1 else (node,)
            scheduled.setdefault(step, []).extend(targets)
        actions = {}
        for act in cfg.adversary:
            actions.setdefault(act.at_step, []).append(act)
        for step in range(cfg.steps):
            self.step = step
            for n in self.nodes:
                n.now = step
            self._move()
            senders = list(scheduled.get(step, ()))
            if cfg.send_prob > 0:
                senders.extend(i for i in range(cfg.node_count) if self.rng.random() < cfg.send_prob)
            queue = deque()
            for i in senders:
                payload = self._payload(i)
                self._truth.add(payload)
                self._originated.append((i, payload))
                self.counters["payloads_originated"] += 1
                self._received_payloads[i].add(payload)
                queue.append(_Tx(self.nodes[i].send_data(payload), tuple(self.pos[i]), i, "node"))
            self._drain(queue)
            for act in actions.get(step, ()):
                queue = deque()
                self._fire(act, queue)
                self._drain(queue)
        return self._finish()

    def _finish(self):
        c = self.counters
        c["rollovers"] = sum(n.rollovers for n in self.nodes)
        c["evictions"] = sum(len(n.table.evicted) for n in self.nodes)
        start = self._eavesdrop_from or 0
        window = [w for s, w in self.captured if s >= start]
        keys, shares = {}, []
        for stolen in self._stolen.values():
            shares.append(stolen.share)
            for sender, ks in stolen.keys.items():
                keys.setdefault(sender, set()).update(ks)
        recovered = adversary_eavesdrop(window, keys, shares)
        self.adv["payloads_recovered"] = len(recovered & self._truth)
        self.adv["frames_captured"] = len(self.captured)
        self._check_invariants()
        metrics = {
            "exchange_frames_before_first_delivery": sum(self._exchange_before_first),
            "rekey_per_step": (c["key_request_frames"] / self.config.steps) if self.config.steps else 0.0,
            "payload_coverage": self._coverage(),
        }
        return ScenarioReport(
            config=self.config,
            node_ids=[n.id for n in self.nodes],
            counters=dict(c),
            adversary=dict(self.adv),
            metrics=metrics,
            events=list(self.events),
            violations=list(self.violations),
        )

    def _coverage(self):
        if not self._originated:
            return 1.0
        reached = sum(sum(1 for got in self._received_payloads if p in got) for _, p in self._originated)
        return reached / (len(self._originated) * len(self.nodes))

    def _connected(self):
        seen, todo = {0}, [0]
        while todo:
            i = todo.pop()
            for j in self._in_range(self.pos[i], i):
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        return len(seen) == len(self.nodes)

    def _check_invariants(self):
        c = self.counters
        if c["frames_delivered"] > c["frames_sent"] * len(self.nodes):
            self._violation("delivered exceeds sent x node_count")
        if c["bytes_overhead_total"] != secmsg.OVERHEAD * c["frames_sent"]:
            self._violation("overhead accounting mismatch")
        if any(len(n.table) > TABLE_CAPACITY for n in self.nodes):
            self._violation("neighbour table over capacity")
        if not self._stolen and self.adv["payloads_recovered"]:
            self._violation("key-less adversary recovered %d payloads" % self.adv["payloads_recovered"])
        cfg = self.config
        if (cfg.mobility == "static" and cfg.loss_prob == 0 and len(self.nodes) <= LIVENESS_MAX_NODES
                and self._connected() and self._coverage() < 1.0):
            self._violation("flood did not reach every node (coverage %.6f)" % self._coverage())


def sim_run(config, seed=None):
    """Run one scenario. ``seed`` overrides the configured seed."""
    if seed is not None:
        config = replace(config, seed=seed)
    return Simulation(config).run()
