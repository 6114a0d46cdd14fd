"""Simulator scenarios, adversary outcomes, and report format."""

import dataclasses
import glob
import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sensorsec import netsim
from sensorsec.cluster import node_init
from sensorsec.keydist import ca_generate, derive_share
from sensorsec.netsim import AdversaryAction, ConfigInvalid, SimConfig, parse_config, sim_run

from .conftest import SCENARIO_DIR, scenario_path

ALL_SCENARIOS = sorted(glob.glob(os.path.join(SCENARIO_DIR, "*.conf")))


def run(name, **override):
    cfg = netsim.load_config(scenario_path(name))
    return sim_run(dataclasses.replace(cfg, **override))


def clique(n, **kw):
    cfg = SimConfig(node_count=n, world_size=(50.0, 50.0), radio_range=200.0, steps=3,
                    degree_t=3, seed=5, traffic=((0, 0),))
    return dataclasses.replace(cfg, **kw)


def test_two_node_exchange():
    r = run("two_node.conf")
    c = r.counters
    assert c["key_request_frames"] == 1
    assert c["key_reply_frames"] == 1
    assert c["key_exchanges"] == 1
    assert c["frames_delivered"] >= 1
    assert c["replays_rejected"] == 0
    assert r.metrics["exchange_frames_before_first_delivery"] == 2
    first = [e for e in r.events if "first-delivery" in e]
    assert first and first[0].endswith("key_requests=1 key_replies=1")
    assert r.safe


def test_total_loss():
    r = run("total_loss.conf")
    assert r.counters["frames_delivered"] == 0
    assert r.counters["frames_received"] == 0
    assert r.counters["frames_lost"] > 0


def test_same_seed_same_report():
    a = run("mobile20.conf").to_text()
    b = run("mobile20.conf").to_text()
    assert a == b
    assert run("mobile20.conf", seed=99).to_text() != a


def test_seed_argument_overrides():
    cfg = netsim.load_config(scenario_path("two_node.conf"))
    assert sim_run(cfg, seed=77).to_text() == sim_run(dataclasses.replace(cfg, seed=77)).to_text()


@pytest.mark.parametrize("path", ALL_SCENARIOS, ids=os.path.basename)
def test_shipped_scenarios_are_safe(path):
    r = sim_run(netsim.load_config(path))
    assert r.violations == []
    assert r.adversary["forged_frames_accepted"] == 0
    assert r.counters["bytes_overhead_total"] == 6 * r.counters["frames_sent"]


def test_static_flood_reaches_everyone():
    r = run("static_line.conf")
    assert r.metrics["payload_coverage"] == 1.0
    assert r.counters["key_exchanges"] == 9


def test_liveness_violation_is_reported():
    # a half-sized chain is still connected; forcing drops breaks delivery
    cfg = netsim.load_config(scenario_path("static_line.conf"))
    sim = netsim.Simulation(cfg)
    for n in sim.nodes[5:]:
        n.on_frame = lambda frame: []
    r = sim.run()
    assert any("flood did not reach" in v for v in r.violations)
    assert not r.safe


def test_replay_counts_every_receiver():
    base = sim_run(clique(4))
    replayed = sim_run(clique(4, adversary=(AdversaryAction("replay", 1, 0),)))
    # three nodes accepted frame 0, all three reject the replay
    assert base.counters["replays_rejected"] == 0
    assert replayed.counters["replays_rejected"] == 3
    assert replayed.counters["frames_delivered"] == base.counters["frames_delivered"]
    assert replayed.safe


def test_replayed_key_request():
    base = sim_run(clique(2))
    # frame 1 is the KEY_REQUEST
    r = sim_run(clique(2, adversary=(AdversaryAction("eavesdrop", 0), AdversaryAction("replay", 1, 1))))
    assert "type=2" in [e for e in r.events if "adversary replay" in e][0]
    assert r.counters["key_reply_frames"] == base.counters["key_reply_frames"] + 1
    assert r.counters["frames_delivered"] == base.counters["frames_delivered"]
    assert r.adversary["payloads_recovered"] == 0
    assert r.safe


def test_replay_first_delivery_is_flagged():
    r = run("replay_first_delivery.conf")
    assert r.counters["replays_first_delivery"] == 1
    assert r.counters["replays_rejected"] == 1
    assert any("replay-first-delivery" in e for e in r.events)
    assert r.adversary["forged_frames_accepted"] == 0
    assert r.safe


def test_replay_index_past_capture_is_skipped():
    r = sim_run(clique(2, adversary=(AdversaryAction("replay", 0, 500),)))
    assert any("skipped" in e for e in r.events)


def test_injection_rejected():
    r = run("replay_inject.conf")
    assert r.counters["forgeries_rejected"] >= 3
    assert r.adversary["forged_frames_accepted"] == 0
    assert r.adversary["payloads_recovered"] == 0


def test_eavesdrop_without_keys():
    r = run("mobile20.conf", adversary=(AdversaryAction("eavesdrop", 0),))
    assert r.adversary["frames_captured"] == r.counters["frames_sent"] > 0
    assert r.adversary["payloads_recovered"] == 0


@pytest.mark.parametrize("t", [2, 5, 20])
def test_threshold_in_simulation(t):
    steps = t + 3
    below = tuple(AdversaryAction("compromise", 1 + i, i) for i in range(t))
    above = below + (AdversaryAction("compromise", t + 1, t),)
    cfg = SimConfig(node_count=t + 4, world_size=(60.0, 60.0), radio_range=200.0, steps=steps,
                    degree_t=t, seed=31, traffic=((t + 3, 0),))
    r = sim_run(dataclasses.replace(cfg, adversary=below))
    assert r.adversary["compromised_nodes"] == t
    assert r.adversary["master_reconstructed"] is False
    assert r.adversary["secret_predicted"] is False
    r = sim_run(dataclasses.replace(cfg, adversary=above))
    assert r.adversary["compromised_nodes"] == t + 1
    assert r.adversary["master_reconstructed"] is True
    assert r.adversary["secret_predicted"] is True
    assert r.safe


def test_single_compromise_can_only_speak_as_itself():
    r = run("compromise_t.conf", adversary=(AdversaryAction("compromise", 1, 0),))
    assert r.counters["compromised_frames_accepted"] >= 1
    assert r.adversary["forged_frames_accepted"] == 0
    assert r.counters["forgeries_rejected"] >= 1
    assert r.safe


def test_compromise_scenarios():
    below, above = run("compromise_t.conf"), run("compromise_t1.conf")
    assert below.adversary["master_reconstructed"] is False
    assert above.adversary["master_reconstructed"] is True
    assert below.safe and above.safe


# -- eavesdropping oracle ----------------------------------------------------


def _nodes(ids):
    m = ca_generate(3, b"\x07" * 32)
    return [node_init(derive_share(m, i), i.to_bytes(2, "big") * 16) for i in ids]


def test_eavesdrop_compromised_node_reads_its_neighbours():
    a, b, c = _nodes([100, 200, 300])
    a.table.install(b.id, b.sending_key)
    frames = [b.send_data(b"from b"), c.send_data(b"from c"), a.send_data(b"from a")]
    truth = {b"from b", b"from c", b"from a"}
    stolen = {a.id: {a.sending_key}}
    for e in a.table.entries():
        stolen.setdefault(e.id, set()).add(e.key)
    got = netsim.adversary_eavesdrop(frames, stolen, [a.share]) & truth
    assert got == {b"from b", b"from a"}


def test_eavesdrop_learns_keys_from_exchanges_with_captured_node():
    a, b, c = _nodes([100, 200, 300])
    frames = []
    data = c.send_data(b"from c")
    frames.append(data)
    (req,) = [x.frame for x in a.on_frame(data) if hasattr(x, "frame") and x.frame.dest == c.id]
    frames.append(req)
    frames.append(next(x.frame for x in c.on_frame(req) if hasattr(x, "frame")))
    # b and c talk; a is not involved
    data_b = b.send_data(b"from b")
    frames.append(data_b)
    (req_cb,) = [x.frame for x in c.on_frame(data_b) if hasattr(x, "frame") and x.frame.dest == b.id]
    frames.append(req_cb)
    got = netsim.adversary_eavesdrop(frames, {}, [a.share])
    assert b"from c" in got
    assert b"from b" not in got


def test_eavesdrop_with_every_key():
    nodes = _nodes([11, 22, 33, 44])
    frames, truth = [], set()
    for i, n in enumerate(nodes):
        p = b"payload %d" % i
        truth.add(p)
        frames.append(n.send_data(p))
    keys = {n.id: {n.sending_key} for n in nodes}
    assert netsim.adversary_eavesdrop(frames, keys) & truth == truth
    assert netsim.adversary_eavesdrop(frames) & truth == set()
    wire = [f.to_bytes() for f in frames]
    assert netsim.adversary_eavesdrop(wire, keys) & truth == truth


# -- configuration and report ------------------------------------------------


def test_parse_config_full():
    cfg = parse_config("""
        node_count = 4   # comment
        world_size = 10x20
        radio_range = 5.5
        loss_prob = 0.25
        steps = 9
        mobility = random_waypoint:2
        placement = line
        degree_t = 7
        seed = 0x10
        traffic = 0@1, *@2
        send_prob = 0.5
        payload_size = 64
        adversary = eavesdrop@0; replay(3)@4; inject@5; compromise(2)@8
    """)
    assert cfg.world_size == (10.0, 20.0)
    assert cfg.mobility == "random_waypoint" and cfg.max_speed == 2.0
    assert cfg.seed == 16
    assert cfg.traffic == ((0, 1), (-1, 2))
    assert cfg.adversary == (
        AdversaryAction("eavesdrop", 0), AdversaryAction("replay", 4, 3),
        AdversaryAction("inject", 5), AdversaryAction("compromise", 8, 2))
    assert parse_config(cfg.to_text()) == cfg


@pytest.mark.parametrize("text", [
    "loss_prob = 2.0",
    "loss_prob = -0.1",
    "node_count = 0",
    "colour = blue",
    "steps = 3\nsteps = 4",
    "no equals sign",
    "mobility = teleport",
    "mobility = random_waypoint",
    "degree_t = 0",
    "payload_size = 4",
    "traffic = 5@0",
    "steps = 2\ntraffic = 0@2",
    "adversary = replay@1",
    "adversary = nuke@1",
    "node_count = 2\nsteps = 3\nadversary = compromise(5)@1",
    "radio_range = abc",
    "world_size = 10",
])
def test_parse_config_rejects(text):
    with pytest.raises(ConfigInvalid):
        parse_config(text)


@settings(max_examples=50, deadline=None)
@given(
    st.integers(1, 50), st.floats(0, 1), st.integers(1, 30), st.integers(0, (1 << 64) - 1),
    st.sampled_from(["static", "random_waypoint"]), st.floats(0.5, 20),
)
def test_config_text_roundtrip(n, loss, steps, seed, mobility, speed):
    cfg = SimConfig(node_count=n, loss_prob=loss, steps=steps, seed=seed, mobility=mobility,
                    max_speed=speed if mobility != "static" else 0.0,
                    traffic=((0, steps - 1), (-1, 0)),
                    adversary=(AdversaryAction("inject", 0),))
    assert parse_config(cfg.to_text()) == cfg


def test_report_format_and_parse():
    r = run("two_node.conf")
    text = r.to_text()
    assert text.startswith("sensorsec-report 1\n[config]\n")
    sections = netsim.parse_report(text)
    assert sections["counters"]["key_exchanges"] == "1"
    assert sections["adversary"]["forged_frames_accepted"] == "0"
    assert sections["violations"]["count"] == "0"
    assert set(sections["counters"]) == set(netsim.COUNTER_FIELDS)
    assert sections["nodes"]["ids"] == ", ".join(str(i) for i in r.node_ids)


def test_mobility_moves_nodes():
    cfg = netsim.load_config(scenario_path("mobile20.conf"))
    sim = netsim.Simulation(cfg)
    before = [tuple(p) for p in sim.pos]
    sim._move()
    after = [tuple(p) for p in sim.pos]
    assert before != after
    w, h = cfg.world_size
    for _ in range(200):
        sim._move()
    assert all(0 <= x <= w and 0 <= y <= h for x, y in sim.pos)
