"""Cross-check harness: every identity is recomputed at least two
independent ways over a parameter grid, and disagreements are collected
(with the first offending parameter tuple) instead of aborting the run.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import comb

from . import bell, closedform, codec, compgen
from .closedform import AtLeastM, OneModM, OnesAndM

__all__ = [
    "CheckResult",
    "CheckReport",
    "check_counts",
    "check_phi",
    "check_bijections",
    "golden_tables",
]


@dataclass
class CheckResult:
    name: str
    grid: str
    cells: int
    failures: int = 0
    counterexample: tuple | None = None

    @property
    def passed(self):
        return self.failures == 0

    def record(self, params):
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = tuple(params)


@dataclass
class CheckReport:
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def merge(self, other):
        self.checks.extend(other.checks)
        self.elapsed += other.elapsed
        return self

    def to_text(self):
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.name} ({c.grid}; {c.cells} cells)"
            if not c.passed:
                line += f" -- {c.failures} failures, first at {c.counterexample}"
            lines.append(line)
        lines.append(
            f"{'OK' if self.ok else 'FAILED'}: "
            f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks "
            f"in {self.elapsed:.2f}s"
        )
        return "\n".join(lines)

    def to_json(self):
        return json.dumps(
            {
                "ok": self.ok,
                "elapsed": self.elapsed,
                "checks": [
                    {
                        "name": c.name,
                        "grid": c.grid,
                        "cells": c.cells,
                        "passed": c.passed,
                        "failures": c.failures,
                        "counterexample": list(c.counterexample)
                        if c.counterexample
                        else None,
                    }
                    for c in self.checks
                ],
            },
            indent=2,
        )


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    return wrapper


@_timed
def check_counts(nu_max, d_max):
    """Counting identities over 1 <= nu <= nu_max, 1 <= d <= d_max.

    Checks the four-way equality between the polytopic count and the
    three restricted-family counts, the Bell-vs-binomial identity per
    part count, and closed-form counts against enumeration sizes.
    """
    grid = f"nu<={nu_max}, d<={d_max}"
    fourway = CheckResult("four-way count identity", grid, 0)
    prop_bell = CheckResult("Bell recurrence vs closed form (per k)", grid, 0)
    enum_eq = CheckResult("closed forms vs enumeration size", grid, 0)
    for d in range(1, d_max + 1):
        m = d + 1
        w = bell.WeightSeq.polytopic(d, nu_max)
        for nu in range(1, nu_max + 1):
            p = closedform.count_pd(nu, d)
            fourway.cells += 1
            if not (
                p
                == closedform.count_family(OnesAndM(m), m * nu - 1)
                == closedform.count_family(OneModM(m), m * nu)
                == closedform.count_family(AtLeastM(m), m * nu + d)
            ):
                fourway.record((nu, d))
            for k in range(1, nu + 1):
                prop_bell.cells += 1
                if bell.weighted_count_k(w, nu, k) != closedform.count_pd_k(nu, d, k):
                    prop_bell.record((nu, d, k))
            enum_eq.cells += 1
            counts = (
                p == sum(1 for _ in compgen.enum_colored(nu, d))
                and closedform.count_family(OnesAndM(m), m * nu - 1)
                == sum(1 for _ in compgen.enum_family(OnesAndM(m), m * nu - 1))
                and closedform.count_family(OneModM(m), m * nu)
                == sum(1 for _ in compgen.enum_family(OneModM(m), m * nu))
                and closedform.count_family(AtLeastM(m), m * nu + d)
                == sum(1 for _ in compgen.enum_family(AtLeastM(m), m * nu + d))
            )
            if not counts:
                enum_eq.record((nu, d))
    return CheckReport([fourway, prop_bell, enum_eq])


@_timed
def check_phi(n_max, d_max):
    """Rank/unrank bijectivity and order compatibility for word lengths <= n_max."""
    grid = f"n<={n_max}, d<={min(n_max, d_max)}"
    bijective = CheckResult("rank/unrank round trip and distinctness", grid, 0)
    ordered = CheckResult("rank order matches binary value order", grid, 0)
    for n in range(1, n_max + 1):
        for d in range(1, min(n, d_max) + 1):
            seen = set()
            prev_value = -1
            ok_round, ok_order = True, True
            for m in range(1, comb(n, d) + 1):
                word = codec.unrank_word(m, n, d)
                if (
                    len(word) != n
                    or word.count("1") != d
                    or word in seen
                    or codec.rank_word(word, d) != m
                ):
                    ok_round = False
                    break
                seen.add(word)
                value = int(word, 2)
                if value <= prev_value:
                    ok_order = False
                prev_value = value
            bijective.cells += 1
            if not ok_round:
                bijective.record((n, d))
            ordered.cells += 1
            if not ok_order:
                ordered.record((n, d))
    return CheckReport([bijective, ordered])


@_timed
def check_bijections(nu_max, d_max, phi_n_max=None):
    """Bijection suite over 1 <= nu <= nu_max, 1 <= d <= d_max.

    Verifies the rank/unrank layer (word lengths up to ``phi_n_max``,
    default nu_max + d_max), the binary-word codec round trip with exact
    image characterization per part count, and image-set equality of the
    three family maps against direct enumeration.
    """
    phi = check_phi(phi_n_max or nu_max + d_max, d_max)
    grid = f"nu<={nu_max}, d<={d_max}"
    codec_check = CheckResult("binary codec round trip and image", grid, 0)
    images = CheckResult("family map images equal enumerations", grid, 0)
    for d in range(1, d_max + 1):
        m = d + 1
        for nu in range(1, nu_max + 1):
            for k in range(1, nu + 1):
                codec_check.cells += 1
                words = set()
                ok = True
                for alpha in compgen.enum_colored(nu, d, k):
                    beta = codec.to_binary(alpha)
                    if (
                        len(beta) != nu + d * k - 1
                        or beta.count("1") != m * k - 1
                        or codec.from_binary(beta, d) != alpha
                    ):
                        ok = False
                        break
                    words.add(beta)
                if ok and len(words) != closedform.count_pd_k(nu, d, k):
                    ok = False
                if not ok:
                    codec_check.record((nu, d, k))
            images.cells += 1
            img_ones, img_mod, img_ge = set(), set(), set()
            ok = True
            for alpha in compgen.enum_colored(nu, d):
                a = codec.map_ones_m(alpha)
                b = codec.map_mod_m(alpha)
                c = codec.map_ge_m(alpha)
                if (
                    codec.map_ones_m_inv(a, d) != alpha
                    or codec.map_mod_m_inv(b, d) != alpha
                    or codec.map_ge_m_inv(c, d) != alpha
                ):
                    ok = False
                    break
                img_ones.add(a)
                img_mod.add(b)
                img_ge.add(c)
            if ok:
                ok = (
                    img_ones == set(compgen.enum_family(OnesAndM(m), m * nu - 1))
                    and img_mod == set(compgen.enum_family(OneModM(m), m * nu))
                    and img_ge == set(compgen.enum_family(AtLeastM(m), m * nu + d))
                )
            if not ok:
                images.record((nu, d))
    return phi.merge(CheckReport([codec_check, images]))


# Golden correspondence for nu = 3, d = 2, transcribed row by row:
# (colored composition, binary word, image with parts in {1,3},
#  image with parts = 1 mod 3, image with parts >= 3).
# The sixth row's {1,3}-image is (1,1,3,3): the word 1100 forces it, and
# (3,3,1,1) would duplicate the first row under a bijection.
GOLDEN_NU3_D2 = (
    ("3^1", "0011", (3, 3, 1, 1), (7, 1, 1), (3, 3, 5)),
    ("3^2", "0101", (3, 1, 3, 1), (4, 4, 1), (3, 4, 4)),
    ("3^3", "0110", (3, 1, 1, 3), (4, 1, 4), (3, 5, 3)),
    ("3^4", "1001", (1, 3, 3, 1), (1, 7, 1), (4, 3, 4)),
    ("3^5", "1010", (1, 3, 1, 3), (1, 4, 4), (4, 4, 3)),
    ("3^6", "1100", (1, 1, 3, 3), (1, 1, 7), (5, 3, 3)),
    ("2^1,1^1", "011111", (3, 1, 1, 1, 1, 1), (4, 1, 1, 1, 1, 1), (3, 8)),
    ("2^2,1^1", "101111", (1, 3, 1, 1, 1, 1), (1, 4, 1, 1, 1, 1), (4, 7)),
    ("2^3,1^1", "110111", (1, 1, 3, 1, 1, 1), (1, 1, 4, 1, 1, 1), (5, 6)),
    ("1^1,2^1", "111011", (1, 1, 1, 3, 1, 1), (1, 1, 1, 4, 1, 1), (6, 5)),
    ("1^1,2^2", "111101", (1, 1, 1, 1, 3, 1), (1, 1, 1, 1, 4, 1), (7, 4)),
    ("1^1,2^3", "111110", (1, 1, 1, 1, 1, 3), (1, 1, 1, 1, 1, 4), (8, 3)),
    ("1^1,1^1,1^1", "11111111", (1,) * 8, (1,) * 9, (11,)),
)


@_timed
def golden_tables():
    """Regenerate the 13-row nu=3, d=2 correspondence and diff it against
    the embedded golden data, binary-word column included."""
    result = CheckResult("golden 13-row correspondence (nu=3, d=2)", "nu=3, d=2", 0)
    generated = [
        (
            str(alpha),
            codec.to_binary(alpha),
            codec.map_ones_m(alpha),
            codec.map_mod_m(alpha),
            codec.map_ge_m(alpha),
        )
        for alpha in compgen.enum_colored(3, 2)
    ]
    result.cells = max(len(generated), len(GOLDEN_NU3_D2))
    for i in range(result.cells):
        got = generated[i] if i < len(generated) else None
        want = GOLDEN_NU3_D2[i] if i < len(GOLDEN_NU3_D2) else None
        if got != want:
            result.record((i + 1, want, got))
    return CheckReport([result])
