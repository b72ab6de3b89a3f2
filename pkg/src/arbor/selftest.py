"""Seeded self-test harness: every acceptance suite behind one entry point.

Each suite draws per-case generators from random.Random seeded with
"<seed>:<suite>:<case>", so a report is a pure function of the
configuration and identical seeds give byte-identical reports.  All checks
are exact; there are no tolerances anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from arbor import bruteforce, canon, gen, tits
from arbor.autom import (
    TreeAutomorphism,
    conj_oracle,
    conjugacy_class_ids,
    cycle_type,
    enumerate_aut,
)
from arbor.orbit_tree import conj_decide, lift_witness, orbit_tree, verify_conjugator
from arbor.reductions import (
    GroupWordWindow,
    IntegerWindow,
    NotACoding,
    ball_words,
    height_invariant,
    invert_to_rooted,
    phi_rooted,
    phi_unrooted,
    tz_build,
    tz_decode,
    tz_phi,
    widget_decode,
    widget_encode,
)
from arbor.reductions.widgets import INVERSE, encode_words, reduce_word, translate
from arbor.reductions.zline import tz_site_map
from arbor.trees import OMEGA, RootedTree, build_uniform_rooted, induced_subtree

DEFAULT_SEED = 2026
DEFAULT_SIZE_BOUND = 8
DEFAULT_SAMPLES = 200


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    size_bound: int = DEFAULT_SIZE_BOUND
    sample_count: int = DEFAULT_SAMPLES

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if not 1 <= self.size_bound <= 10:
            raise ValueError("size_bound must be in 1..10 (oracle suites)")
        if self.sample_count < 1:
            raise ValueError("sample_count must be >= 1")


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, detail: str):
        self.cases += 1
        if not ok:
            self.failures.append(f"case {self.cases}: {detail}")


def _rng(cfg: RunConfig, suite: str, case: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{suite}:{case}")


def _count(cfg: RunConfig, spec_count: int) -> int:
    return min(spec_count, cfg.sample_count)


# --- suite 1: canonical-form completeness -----------------------------------


def suite_canon_complete(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("canon-complete")
    bound = min(8, cfg.size_bound)
    rooted = gen.all_rooted_trees(bound)
    codes = [canon.code_rooted(t) for t in rooted]
    for i, t1 in enumerate(rooted):
        for j, t2 in enumerate(rooted):
            same_code = codes[i] == codes[j]
            res.check(
                same_code == bruteforce.rooted_iso(t1, t2),
                f"rooted pair ({i},{j}): code={same_code}",
            )
    free = gen.all_free_trees(bound)
    ucodes = [canon.code_unrooted(t) for t in free]
    for i, t1 in enumerate(free):
        for j, t2 in enumerate(free):
            same_code = ucodes[i] == ucodes[j]
            res.check(
                same_code == bruteforce.unrooted_iso(t1, t2),
                f"unrooted pair ({i},{j}): code={same_code}",
            )
    return res


# --- suites 2 and 3: conjugacy deciders vs the oracle ------------------------


def _conjugacy_suite(res: SuiteResult, cfg: RunConfig, trees, spot_rng_tag: str):
    for tidx, t in enumerate(trees):
        G = enumerate_aut(t)
        perms = [g.perm for g in G]
        classes = conjugacy_class_ids(perms)
        if isinstance(t, RootedTree):
            codes = [orbit_tree(g).code() for g in G]
        else:
            codes = [_unrooted_code(g) for g in G]
        m = len(G)
        for i in range(m):
            ci, di = classes[i], codes[i]
            for j in range(m):
                decide = di == codes[j]
                oracle = ci == classes[j]
                if decide != oracle:
                    res.cases += 1
                    res.failures.append(
                        f"tree {tidx} pair ({i},{j}): decide={decide} oracle={oracle}"
                    )
                    continue
                res.cases += 1
                if decide:
                    witness = lift_witness(G[i], G[j])
                    if not verify_conjugator(G[i], G[j], witness):
                        res.failures.append(f"tree {tidx} pair ({i},{j}): witness failed")
        # spot-check the public single-pair operations
        rng = _rng(cfg, spot_rng_tag, tidx)
        for _ in range(min(10, m * m)):
            i, j = rng.randrange(m), rng.randrange(m)
            dec = conj_decide(G[i], G[j])
            alpha = conj_oracle(G[i], G[j])
            res.check(
                dec == (classes[i] == classes[j]) and (alpha is not None) == dec,
                f"tree {tidx} spot pair ({i},{j})",
            )


def _unrooted_code(g: TreeAutomorphism) -> bytes:
    from arbor.orbit_tree import _to_rooted_form

    rform, _ = _to_rooted_form(g)
    return orbit_tree(rform).code()


def suite_rooted_conjugacy(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("rooted-conjugacy")
    _conjugacy_suite(res, cfg, gen.all_rooted_trees(min(7, cfg.size_bound)), "rooted-conjugacy")
    return res


def suite_unrooted_conjugacy(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("unrooted-conjugacy")
    _conjugacy_suite(res, cfg, gen.all_free_trees(min(7, cfg.size_bound)), "unrooted-conjugacy")
    return res


# --- suite 4: rooted fixed-point embedding shadow ----------------------------


def suite_rooted_embedding(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("rooted-embedding")
    for case in range(_count(cfg, 200)):
        rng = _rng(cfg, "rooted-embedding", case)
        t1 = gen.random_rooted_tree(rng, 6)
        t2 = gen.reshuffled_copy(t1, rng) if case % 2 == 0 else gen.random_rooted_tree(rng, 6)
        depth = max(t1.height, t2.height) + 2
        width = max(2 * t1.branching() + 2, 2 * t2.branching() + 2, 4)
        width += width % 2
        e1 = phi_rooted(t1, depth, width)
        e2 = phi_rooted(t2, depth, width)
        iso = canon.code_rooted(t1) == canon.code_rooted(t2)
        decide = conj_decide(e1.phi, e2.phi)
        fixed_ok = e1.phi.fixed_vertices() == frozenset(e1.embedding) and e2.phi.fixed_vertices() == frozenset(e2.embedding)
        res.check(
            iso == decide and fixed_ok,
            f"iso={iso} decide={decide} fixed_ok={fixed_ok}",
        )
    return res


# --- suite 5: edge-inversion transfer ----------------------------------------


def suite_type_a_transfer(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("type-a-transfer")
    for case in range(_count(cfg, 100)):
        rng = _rng(cfg, "type-a-transfer", case)
        t, _ = gen.random_doubled_tree(rng, 3)
        G = enumerate_aut(t)
        type_a = [
            g
            for g in G
            if any(g.perm[u] == v and g.perm[v] == u for u, v in t.edges)
        ]
        phi = rng.choice(type_a)
        psi = rng.choice(type_a)
        oracle = conj_oracle(phi, psi) is not None
        decide = conj_decide(invert_to_rooted(phi), invert_to_rooted(psi))
        res.check(oracle == decide, f"oracle={oracle} decide={decide}")
    return res


# --- suite 6: widget coding ---------------------------------------------------


def suite_widget_coding(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("widget-coding")
    radius = 2
    words = ball_words(radius)
    interior = ball_words(radius - 1)
    for case in range(_count(cfg, 50)):
        rng = _rng(cfg, "widget-coding", case)
        members = frozenset(w for w in words if rng.random() < 0.5)
        coding = widget_encode(GroupWordWindow(radius, members))
        rim = coding.rim_vertices()
        bad_degree = [
            v
            for v in range(coding.tree.n)
            if v not in rim and coding.tree.degree(v) not in (1, 3)
        ]
        try:
            decoded = widget_decode(coding.tree)
            roundtrip_ok = (
                decoded.members & set(interior) == members & set(interior)
                and decoded.members == members
            )
        except NotACoding:
            roundtrip_ok = False
        equiv_ok = True
        for g in "abAB":
            left = encode_words(
                translate(g, members) & set(interior), interior
            )
            shifted = frozenset(reduce_word(INVERSE[g] + w) for w in interior)
            right = encode_words(members & shifted, shifted)
            if canon.code_unrooted(left.tree) != canon.code_unrooted(right.tree):
                equiv_ok = False
        res.check(
            not bad_degree and roundtrip_ok and equiv_ok,
            f"bad_degree={bad_degree[:3]} roundtrip={roundtrip_ok} equivariance={equiv_ok}",
        )
    return res


# --- suite 7: unrooted fixed-point embedding shadow ---------------------------


def suite_unrooted_embedding(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("unrooted-embedding")
    prev = None
    for case in range(_count(cfg, 50)):
        rng = _rng(cfg, "unrooted-embedding", case)
        t = gen.random_degree13_tree(rng, 8)
        ep = phi_unrooted(t, 3, radius=3)
        fixed = tits.fixed_subtree(ep.phi)
        sub, _ = induced_subtree(ep.ambient, fixed)
        tcode = canon.code_unrooted(t)
        fcode = canon.code_unrooted(sub)
        ok = fcode == tcode and fixed == frozenset(ep.embedding)
        if prev is not None and prev[0] != tcode:
            ok = ok and prev[1] != fcode
        prev = (tcode, fcode)
        res.check(ok, f"fixed-set code mismatch on case {case}")
    for case in range(_count(cfg, 20)):
        rng = _rng(cfg, "unrooted-embedding-omega", case)
        t = gen.random_unrooted_tree(rng, 8)
        ep = phi_unrooted(t, OMEGA, radius=2, width=2)
        fixed = tits.fixed_subtree(ep.phi)
        sub, _ = induced_subtree(ep.ambient, fixed)
        res.check(
            fixed == frozenset(ep.embedding)
            and canon.code_unrooted(sub) == canon.code_unrooted(t),
            f"omega fixed-set mismatch on case {case}",
        )
    return res


# --- suite 8: ball classification ---------------------------------------------


def suite_ball_classification(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("ball-classification")
    per_type = _count(cfg, 100)
    for case in range(per_type):
        rng = _rng(cfg, "ball-inversion", case)
        p = tits.synth_inversion(3, rng.randint(2, 4), rng)
        v1 = tits.classify(p)
        q = tits.conjugate_presentation(p, tits.random_ball_aut(p.ambient, rng))
        v2 = tits.classify(q)
        res.check(
            isinstance(v1, tits.Inversion) and isinstance(v2, tits.Inversion),
            f"inversion case {case}: {v1} / {v2}",
        )
    for case in range(per_type):
        rng = _rng(cfg, "ball-translation", case)
        k = case % 3 + 1
        p = tits.synth_translation(3, k, 2 * k + 2, rng)
        v1 = tits.classify(p)
        q = tits.conjugate_presentation(p, tits.random_ball_aut(p.ambient, rng))
        v2 = tits.classify(q)
        ok = (
            isinstance(v1, tits.Translation)
            and v1.amplitude == k
            and isinstance(v2, tits.Translation)
            and v2.amplitude == k
        )
        res.check(ok, f"translation case {case} (k={k}): {v1} / {v2}")
    for case in range(per_type):
        rng = _rng(cfg, "ball-elliptic", case)
        p = tits.synth_elliptic(3, rng.randint(2, 4), rng)
        v1 = tits.classify(p)
        q = tits.conjugate_presentation(p, tits.random_ball_aut(p.ambient, rng))
        v2 = tits.classify(q)
        res.check(
            isinstance(v1, tits.Elliptic) and isinstance(v2, tits.Elliptic),
            f"elliptic case {case}: {v1} / {v2}",
        )
    return res


# --- suite 9: bounded-height invariants ----------------------------------------


def suite_bounded_height(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("bounded-height")
    # permutations of w points = automorphisms of the height-1 truncation
    for w in (2, 3, 4):
        star, _ = build_uniform_rooted(1, w)
        G = enumerate_aut(star)
        classes = conjugacy_class_ids([g.perm for g in G])
        types = [cycle_type(g) for g in G]
        for i in range(len(G)):
            for j in range(len(G)):
                res.check(
                    (types[i] == types[j]) == (classes[i] == classes[j]),
                    f"w={w} pair ({i},{j})",
                )
    star6, _ = build_uniform_rooted(1, 6)
    G6 = enumerate_aut(star6)
    for case in range(_count(cfg, 200)):
        rng = _rng(cfg, "bounded-height-w6", case)
        phi, psi = rng.choice(G6), rng.choice(G6)
        same_type = cycle_type(phi) == cycle_type(psi)
        oracle = conj_oracle(phi, psi) is not None
        res.check(same_type == oracle, f"w=6 case {case}")
    # exhaustive on the (height 2, width 3) truncation
    t23, _ = build_uniform_rooted(2, 3)
    G = enumerate_aut(t23, bound=t23.n)
    classes = conjugacy_class_ids([g.perm for g in G])
    invs = [height_invariant(g) for g in G]
    for i in range(len(G)):
        inv_i, cls_i = invs[i], classes[i]
        for j in range(len(G)):
            if (inv_i == invs[j]) != (cls_i == classes[j]):
                res.cases += 1
                res.failures.append(f"(2,3) pair ({i},{j})")
            else:
                res.cases += 1
    return res


# --- suite 10: integer-line windows --------------------------------------------


def suite_z_line(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("z-line")
    lo, hi = -4, 4
    zw = tz_build(lo, hi)
    zw_next = tz_build(lo + 1, hi + 1)
    smap = tz_site_map(zw, zw_next, 1)
    for case in range(_count(cfg, 100)):
        rng = _rng(cfg, "z-line", case)
        members = frozenset(x for x in range(lo, hi + 1) if rng.random() < 0.5)
        phi = tz_phi(zw, IntegerWindow(lo, hi, members))
        decoded = tz_decode(zw, phi)
        ok = decoded.members == members
        # shift law: the site shift conjugates phi_A to phi_{A+1} on overlap
        psi = tz_phi(zw_next, frozenset(x + 1 for x in members))
        for v, sv in smap.items():
            img = phi.perm[v]
            if img in smap and smap[img] != psi.perm[sv]:
                ok = False
        res.check(ok, f"A={sorted(members)}")
    return res


SUITES = {
    "canon-complete": suite_canon_complete,
    "rooted-conjugacy": suite_rooted_conjugacy,
    "unrooted-conjugacy": suite_unrooted_conjugacy,
    "rooted-embedding": suite_rooted_embedding,
    "type-a-transfer": suite_type_a_transfer,
    "widget-coding": suite_widget_coding,
    "unrooted-embedding": suite_unrooted_embedding,
    "ball-classification": suite_ball_classification,
    "bounded-height": suite_bounded_height,
    "z-line": suite_z_line,
}


@dataclass
class Report:
    config: RunConfig
    results: list[SuiteResult]

    @property
    def total_failures(self) -> int:
        return sum(len(r.failures) for r in self.results)

    @property
    def passed(self) -> bool:
        return self.total_failures == 0

    def text(self) -> str:
        cfg = self.config
        lines = [
            f"selftest seed={cfg.seed} size-bound={cfg.size_bound} samples={cfg.sample_count}"
        ]
        for r in self.results:
            lines.append(f"suite {r.name}: cases={r.cases} failures={len(r.failures)}")
            for f in r.failures[:20]:
                lines.append(
                    f"  FAIL {f} [reproduce: arbor selftest --seed {cfg.seed}"
                    f" --size-bound {cfg.size_bound} --samples {cfg.sample_count}"
                    f" --suite {r.name}]"
                )
            if len(r.failures) > 20:
                lines.append(f"  ... and {len(r.failures) - 20} more failures")
        verdict = "PASS" if self.passed else "FAIL"
        total = sum(r.cases for r in self.results)
        lines.append(
            f"result: {verdict} suites={len(self.results)} cases={total}"
            f" failures={self.total_failures}"
        )
        return "\n".join(lines) + "\n"


def run_selftest(cfg: RunConfig | None = None, suites: list[str] | None = None) -> Report:
    cfg = cfg or RunConfig()
    names = list(SUITES) if not suites else suites
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r} (have: {', '.join(SUITES)})")
    return Report(cfg, [SUITES[name](cfg) for name in names])
