"""Registry of named checks, suite runner, Monster report and counterexample scans.

Every verdict is decided with integer arithmetic: inequalities that involve
square roots are squared (after checking signs) before comparing.  Floats
only appear in the ``display`` field of a result.
"""
from __future__ import annotations

import hashlib
import json
import logging
import math
import re
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import __version__
from .chartab import ClassData, diagonal_fusion
from .dixon import character_table
from .errors import CapExceeded, KronmultError, MissingInput
from .families import embedding_from_spec, family_group, is_pair_spec
from .groups import (DEFAULT_CAP, center_order, class_fusion, involution_count,
                     is_simple, nilpotency_class)
from .mult import (A_from_centralizers, LR_rhs, epsilon, induced_from_restrictions,
                   induced_matrix, induced_max,
                   induced_sum_squares, kron_max, kron_refined_max, kron_sum_squares,
                   kron_symmetry_all, kron_tensor)

log = logging.getLogger(__name__)

SCHEMA = "kronmult.check/1"
HOLDS, FAILS, INAPPLICABLE = "holds", "fails", "inapplicable"


@dataclass
class CheckResult:
    check_name: str
    target: str
    lhs: object
    rhs: object
    verdict: str
    reference: str
    witness: object = None
    reason: str = ""
    category: str = "theorem"
    value: object = None
    display: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict == FAILS and self.witness is None:
            raise ValueError(f"{self.check_name}: a failing result needs a witness")
        if self.verdict == INAPPLICABLE and not self.reason:
            raise ValueError(f"{self.check_name}: an inapplicable result needs a reason")

    @property
    def is_failure(self) -> bool:
        return self.verdict == FAILS and self.category != "observation"

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "check": self.check_name,
            "target": self.target,
            "category": self.category,
            "verdict": self.verdict,
            "lhs": _jsonable(self.lhs),
            "value": _jsonable(self.value),
            "rhs": _jsonable(self.rhs),
            "witness": _jsonable(self.witness),
            "reason": self.reason,
            "reference": self.reference,
            "display": {k: _jsonable(v) for k, v in self.display.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))


def _jsonable(x):
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, (int, np.integer)):
        x = int(x)
        return x if abs(x) < 2 ** 53 else str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return float(f"{x:.6g}")
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


@dataclass
class SuiteReport:
    results: list[CheckResult]
    elapsed: float = 0.0
    started: str = ""
    inputs: dict = field(default_factory=dict)

    @property
    def counts(self) -> dict:
        out = {HOLDS: 0, FAILS: 0, INAPPLICABLE: 0, "observation_fails": 0}
        for r in self.results:
            if r.verdict == FAILS and r.category == "observation":
                out["observation_fails"] += 1
            else:
                out[r.verdict] += 1
        return out

    @property
    def ok(self) -> bool:
        return not any(r.is_failure for r in self.results)

    def body_lines(self) -> list[str]:
        return [r.to_json() for r in self.results]

    def digest(self) -> str:
        h = hashlib.sha256()
        for line in self.body_lines():
            h.update(line.encode() + b"\n")
        return h.hexdigest()

    def header(self) -> dict:
        return {
            "schema": "kronmult.report/1",
            "tool_version": __version__,
            "results": len(self.results),
            "counts": self.counts,
            "inputs": self.inputs,
            "digest": self.digest(),
            "timing": {"started": self.started, "elapsed_s": round(self.elapsed, 3)},
        }

    def to_jsonl(self) -> str:
        lines = [json.dumps(self.header(), sort_keys=True, separators=(",", ":"))]
        return "\n".join(lines + self.body_lines()) + "\n"

    def to_csv(self) -> str:
        import csv
        import io
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["target", "check", "category", "verdict", "lhs", "value", "rhs", "reason"])
        for r in self.results:
            w.writerow([r.target, r.check_name, r.category, r.verdict, _cell(r.lhs),
                        _cell(r.value), _cell(r.rhs), r.reason])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            mid = "" if r.value is None else f" {_cell(r.value)} "
            rel = f"{_cell(r.lhs)} |{mid}| {_cell(r.rhs)}"
            extra = f"  ({r.reason})" if r.reason else ""
            tag = r.verdict if r.category != "observation" else f"observation {r.verdict}"
            lines.append(f"{r.target:<18} {r.check_name:<16} {tag:<22} {rel}{extra}")
        c = self.counts
        lines.append(f"-- {len(self.results)} results: {c[HOLDS]} holds, {c[FAILS]} fails, "
                     f"{c[INAPPLICABLE]} inapplicable, {c['observation_fails']} observation violations")
        return "\n".join(lines) + "\n"


def _cell(x):
    if isinstance(x, (list, tuple)):
        return ";".join(_cell(v) for v in x)
    return "" if x is None else str(x)


# ---------------------------------------------------------------------------
# targets


class Target:
    """Lazily computed data for one group or subgroup pair descriptor."""

    def __init__(self, spec: str, cap: int = DEFAULT_CAP, seed: int = 0):
        self.spec = spec.strip().lower()
        self.cap = cap
        self.seed = seed
        self.is_pair = is_pair_spec(self.spec)
        self._cache: dict = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def embedding(self):
        if not self.is_pair:
            raise MissingInput(f"{self.spec} is not a subgroup pair")
        return self._get("emb", lambda: embedding_from_spec(self.spec, self.cap))

    @property
    def group(self):
        if self.is_pair:
            return self.embedding.parent
        return self._get("group", lambda: family_group(self.spec, self.cap))

    @property
    def sub(self):
        return self.embedding.sub

    @property
    def table(self):
        return self._get("table", lambda: character_table(self.group, self.seed))

    @property
    def sub_table(self):
        return self._get("sub_table", lambda: character_table(self.sub, self.seed))

    @property
    def fusion(self):
        return self._get("fusion", lambda: class_fusion(self.embedding))

    @property
    def induced(self):
        return self._get("induced", lambda: induced_matrix(self.table, self.sub_table, self.fusion))

    @property
    def kron(self):
        return kron_tensor(self.table)


def _sqrt_text(x) -> str:
    return f"sqrt({x})"


def _result(name, target, lhs, rhs, ok, ref, witness=None, value=None, display=None,
            category="theorem", reason=""):
    verdict = HOLDS if ok else FAILS
    if not ok and witness is None:
        witness = {"lhs": lhs, "value": value, "rhs": rhs}
    return CheckResult(name, target, lhs, rhs, verdict, ref, witness=witness, value=value,
                       display=display or {}, category=category, reason=reason)


def _inapplicable(name, target, ref, reason, category="theorem"):
    return CheckResult(name, target, None, None, INAPPLICABLE, ref, reason=reason, category=category)


# ---------------------------------------------------------------------------
# checks on a single group


def check_thm1_1(t: Target, name, ref):
    T = t.table
    n, k, b = T.order, T.k, T.b
    K, arg = kron_max(T)
    ok = b ** 4 <= K * K * k * n and K <= b
    return _result(name, t.spec, f"{b * b}/{_sqrt_text(k * n)}", b, ok, ref, value=K,
                   witness=None if ok else {"argmax": arg},
                   display={"lower": b * b / math.sqrt(k * n), "K": K, "upper": b, "argmax": arg})


def check_thm1_2(t: Target, name, ref):
    T = t.table
    g = t.kron
    k, b = T.k, T.b
    deg = T.degrees
    witnesses = []
    for f in range(k):
        for s in range(k):
            m = min(deg[f], deg[s])
            order = sorted(range(k), key=lambda r: (-int(g[r, f, s]) * deg[r], r))
            found = None
            for r in order:
                # rho(1) >= b/(a sqrt k) and g >= b/(a^2 k), a = b/m
                if deg[r] ** 2 * k >= m * m and int(g[r, f, s]) * b * k >= m * m:
                    found = r
                    break
            if found is None:
                return _result(name, t.spec, "exists rho", "none", False, ref,
                               witness={"phi": f, "psi": s, "a": str(Fraction(b, m))})
            witnesses.append((f, s, found))
    return _result(name, t.spec, f"{k * k} pairs", "witnessed", True, ref, witness=witnesses)


def check_prop7_1(t: Target, name, ref):
    g = t.kron
    d = np.array(t.table.degrees)
    bound = np.minimum(np.minimum(d[:, None, None], d[None, :, None]), d[None, None, :])
    bad = np.argwhere(g > bound)
    ok = bad.size == 0
    return _result(name, t.spec, "g(rho,phi,psi)", "min degree", ok, ref,
                   witness=None if ok else tuple(int(x) for x in bad[0]),
                   value=int(g.max()) if g.size else 0)


def check_prop7_4(t: Target, name, ref):
    T = t.table
    K, arg = kron_max(T)
    ok = T.order <= K * K * T.k ** 3 and K <= T.b
    return _result(name, t.spec, f"{_sqrt_text(T.order)}/{T.k}^(3/2)", T.b, ok, ref, value=K,
                   display={"lower": math.sqrt(T.order) / T.k ** 1.5, "K": K, "upper": T.b})


def check_prop7_6(t: Target, name, ref):
    T = t.table
    deg = T.degrees
    k, n = T.k, T.order
    worst = None
    for r in range(k):
        for f in range(k):
            val, psi = kron_refined_max(T, r, f)
            lo_ok = (deg[r] * deg[f]) ** 2 <= val * val * k * n
            hi_ok = val <= min(deg[r], deg[f])
            if not (lo_ok and hi_ok):
                return _result(name, t.spec, f"{deg[r] * deg[f]}/{_sqrt_text(k * n)}",
                               min(deg[r], deg[f]), False, ref, value=val,
                               witness={"rho": r, "phi": f, "psi": psi})
            slack = Fraction(val * val * k * n, (deg[r] * deg[f]) ** 2)
            if worst is None or slack < worst[0]:
                worst = (slack, r, f, psi, val)
    _, r, f, psi, val = worst
    return _result(name, t.spec, f"{deg[r] * deg[f]}/{_sqrt_text(k * n)}", min(deg[r], deg[f]),
                   True, ref, value=val, witness={"tightest": {"rho": r, "phi": f, "psi": psi}})


def check_lemma7_2(t: Target, name, ref):
    T = t.table
    lhs = kron_sum_squares(T, check=False)
    rhs = A_from_centralizers(T.centralizers)
    return _result(name, t.spec, lhs, rhs, lhs == rhs, ref, category="identity")


def check_kron_upper(t: Target, name, ref):
    g = t.kron
    d = np.array(t.table.degrees, dtype=object)
    rho, phi, psi = d[:, None, None], d[None, :, None], d[None, None, :]
    lhs = g.astype(object) * np.maximum(phi, psi)
    rhs = rho * np.minimum(phi, psi)
    bad = np.argwhere(lhs > rhs)
    ok = bad.size == 0
    return _result(name, t.spec, "g*max(phi(1),psi(1))", "rho(1)*min(phi(1),psi(1))", ok, ref,
                   witness=None if ok else tuple(int(x) for x in bad[0]))


def check_kron_sym(t: Target, name, ref):
    bad = kron_symmetry_all(t.table)
    return _result(name, t.spec, "T(a,b,c)", "symmetric", bad is None, ref, witness=bad,
                   category="identity")


def check_burnside(t: Target, name, ref):
    T = t.table
    lhs = sum(d * d for d in T.degrees)
    return _result(name, t.spec, lhs, T.order, lhs == T.order, ref, category="identity")


def check_dim_bounds(t: Target, name, ref):
    T = t.table
    n, k, b = T.order, T.k, T.b
    ok = n <= b * b * k and b * b <= n
    return _result(name, t.spec, _sqrt_text(Fraction(n, k)), _sqrt_text(n), ok, ref, value=b,
                   display={"lower": math.sqrt(n / k), "b": b, "upper": math.sqrt(n)})


def check_hls_gap(t: Target, name, ref):
    T = t.table
    n, b = T.order, T.b
    if b * b >= n:
        return _inapplicable(name, t.spec, ref, "b(G) = sqrt|G|")
    # b <= sqrt(n) - n^(1/4)/2  <=>  (4n + 4b^2)^2 >= (8b + 1)^2 n
    ok = (4 * n + 4 * b * b) ** 2 >= (8 * b + 1) ** 2 * n
    return _result(name, t.spec, b, f"{_sqrt_text(n)} - {n}^(1/4)/2", ok, ref,
                   display={"b": b, "bound": math.sqrt(n) - n ** 0.25 / 2})


def check_ks_cuberoot(t: Target, name, ref):
    G, T = t.group, t.table
    if G.is_abelian():
        return _inapplicable(name, t.spec, ref, "group is abelian")
    if not is_simple(G):
        return _inapplicable(name, t.spec, ref, "group is not simple")
    ok = T.b ** 3 >= T.order
    return _result(name, t.spec, f"{T.order}^(1/3)", T.b, ok, ref,
                   display={"cube_root": T.order ** (1 / 3), "b": T.b})


def check_sherman(t: Target, name, ref):
    G = t.group
    r = nilpotency_class(G)
    if r is None:
        return _inapplicable(name, t.spec, ref, "group is not nilpotent")
    if r == 0:
        return _inapplicable(name, t.spec, ref, "trivial group (class 0)")
    k = G.k
    # k >= r |G|^(1/r) - r + 1  <=>  (k + r - 1)^r >= r^r |G|
    ok = (k + r - 1) ** r >= r ** r * G.order
    return _result(name, t.spec, f"{r}*{G.order}^(1/{r}) - {r - 1}", k, ok, ref,
                   display={"lower": r * G.order ** (1 / r) - r + 1, "k": k, "class": r})


def check_permgroup_k(t: Target, name, ref):
    G = t.group
    n, k = G.degree, G.k
    ok = k <= 2 ** (n - 1)
    rhs = f"2^{n - 1}"
    if n >= 4:
        ok = ok and k ** 3 <= 5 ** (n - 1)
        rhs += f", 5^({n - 1}/3)"
    return _result(name, t.spec, k, rhs, ok, ref, display={"degree": n, "k": k})


def check_gr_center(t: Target, name, ref):
    G = t.group
    if center_order(G) != 1:
        return _inapplicable(name, t.spec, ref, "center is nontrivial")
    ok = G.k ** 2 <= G.order
    return _result(name, t.spec, G.k, _sqrt_text(G.order), ok, ref,
                   witness=None if ok else {"k": G.k, "order": G.order},
                   display={"k": G.k, "sqrt_order": math.sqrt(G.order)})


def check_fg_classcount(t: Target, name, ref):
    G = t.group
    fam = G.family
    if fam.get("type") == "sl2":
        q, r = fam["q"], fam["rank"]
        ok = q ** r <= G.k and 5 * G.k <= 136 * q ** r
        return _result(name, t.spec, q ** r, f"27.2*{q ** r}", ok, ref, value=G.k)
    if fam.get("type") == "gl":
        q, n = fam["q"], fam["n"]
        ok = q ** n - q ** (n - 1) <= G.k <= q ** n
        return _result(name, t.spec, q ** n - q ** (n - 1), q ** n, ok, ref, value=G.k)
    return _inapplicable(name, t.spec, ref, "needs an sl2 or gl family annotation")


def check_sl2_formulas(t: Target, name, ref):
    G = t.group
    if G.family.get("type") != "sl2":
        return _inapplicable(name, t.spec, ref, "not an sl2 family group")
    p = G.family["q"]
    if p < 5:
        return _inapplicable(name, t.spec, ref, "formulas stated for p >= 5")
    got = (G.order, t.table.k, t.table.b)
    want = (p ** 3 - p, p + 4, p + 1)
    return _result(name, t.spec, list(got), list(want), got == want, ref, category="identity")


def check_unitriangular_b(t: Target, name, ref):
    G = t.group
    if G.family.get("type") != "u":
        return _inapplicable(name, t.spec, ref, "not a unitriangular family group")
    n, q = G.family["n"], G.family["q"]
    want = q ** ((n - 1) ** 2 // 4)
    return _result(name, t.spec, t.table.b, want, t.table.b == want, ref, category="identity")


def check_glnq_order(t: Target, name, ref):
    G = t.group
    if G.family.get("type") != "gl":
        return _inapplicable(name, t.spec, ref, "not a gl family group")
    n, q = G.family["n"], G.family["q"]
    # (1 - 1/q - 1/q^2) q^(n^2) <= |G| <= q^(n^2)
    ok = (q * q - q - 1) * q ** (n * n) <= G.order * q * q and G.order <= q ** (n * n)
    return _result(name, t.spec, str(Fraction(q * q - q - 1, q * q) * q ** (n * n)), q ** (n * n),
                   ok, ref, value=G.order)


def _product_route(t: Target, factor: bool):
    """(C, (rho x sigma, pi)) for H x H over diagonal H or H x 1.

    Only the restrictions of the product characters are formed: on the class
    (a, a) for the diagonal, or (a, 1) for the first factor.
    """
    tH = t.table
    k = tH.k
    fus = diagonal_fusion(tH, None, factor=factor)
    rows, degrees = [], []
    for r in range(k):
        for s in range(k):
            rho, sigma = tH.values[r], tH.values[s]
            rows.append([rho[a] * (sigma[0] if factor else sigma[a]) for a in range(k)])
            degrees.append(tH.degrees[r] * tH.degrees[s])
    m = induced_from_restrictions(rows, degrees, tH.order ** 2, tH, fus)
    C, (rs, p) = induced_max(m)
    return C, {"rho": rs // k, "sigma": rs % k, "pi": p}


def check_remark1_5_diag(t: Target, name, ref):
    if t.is_pair:
        return _inapplicable(name, t.spec, ref, "expects a single group H")
    C, arg = _product_route(t, factor=False)
    K, _ = kron_max(t.table)
    return _result(name, t.spec, C, K, C == K, ref, witness=None if C == K else {"argmax": arg},
                   category="identity")


def check_remark1_5_factor(t: Target, name, ref):
    if t.is_pair:
        return _inapplicable(name, t.spec, ref, "expects a single group H")
    C, arg = _product_route(t, factor=True)
    b = t.table.b
    return _result(name, t.spec, C, b, C == b, ref, witness=None if C == b else {"argmax": arg},
                   category="identity")


def check_mckay_sn(t: Target, name, ref):
    G = t.group
    if not re.fullmatch(r"s:\d+", t.spec):
        return _inapplicable(name, t.spec, ref, "only asserted for symmetric groups")
    lhs = sum(t.table.degrees)
    rhs = involution_count(G)
    return _result(name, t.spec, lhs, rhs, lhs == rhs, ref, category="identity")


# ---------------------------------------------------------------------------
# checks on a subgroup pair


def check_thm1_3(t: Target, name, ref):
    m = t.induced
    C, arg = induced_max(m)
    idx, kG, kH = m.index, t.table.k, t.sub_table.k
    ok = idx <= C * C * kH * kG and C * C <= idx
    return _result(name, t.spec, f"{_sqrt_text(idx)}/{_sqrt_text(kH * kG)}", _sqrt_text(idx), ok,
                   ref, value=C, witness=None if ok else {"argmax": arg},
                   display={"lower": math.sqrt(idx / (kH * kG)), "C": C, "upper": math.sqrt(idx)})


def check_thm1_4(t: Target, name, ref):
    m = t.induced
    tG, tH = t.table, t.sub_table
    nG, nH, kH = tG.order, tH.order, tH.k
    c = m.entries
    witnesses = []
    for r, dr in enumerate(tG.degrees):
        # a = sqrt|G|/rho(1); need pi(1) >= sqrt|H|/(a k(H)) and c >= sqrt[G:H]/(a k(H))
        order = sorted(range(tH.k), key=lambda p: (-int(c[r, p]) * tH.degrees[p], p))
        found = None
        for p in order:
            dp, cv = tH.degrees[p], int(c[r, p])
            if dp * dp * nG * kH * kH >= nH * dr * dr and cv * cv * nH * kH * kH >= dr * dr:
                found = p
                break
        if found is None:
            return _result(name, t.spec, "exists pi", "none", False, ref, witness={"rho": r})
        witnesses.append((r, found))
    return _result(name, t.spec, f"{tG.k} characters", "witnessed", True, ref, witness=witnesses)


def check_lemma8_2(t: Target, name, ref):
    lhs = induced_sum_squares(t.induced, check=False)
    rhs = LR_rhs(t.fusion)
    return _result(name, t.spec, lhs, rhs, lhs == rhs, ref, category="identity")


def check_lemma8_4(t: Target, name, ref):
    m = t.induced
    c = m.entries.astype(object)
    sq = c * c
    rows, cols = sq.sum(axis=1), sq.sum(axis=0)
    idx = m.index
    ok = all(x <= idx for x in rows) and all(x <= idx for x in cols)
    witness = None
    if not ok:
        witness = {"rows": [int(i) for i, x in enumerate(rows) if x > idx],
                   "columns": [int(i) for i, x in enumerate(cols) if x > idx]}
    return _result(name, t.spec, int(max(max(rows), max(cols))), idx, ok, ref, witness=witness)


def check_cor8_3(t: Target, name, ref):
    total = induced_sum_squares(t.induced, check=False)
    idx = t.induced.index
    return _result(name, t.spec, idx, total, total >= idx, ref)


def check_cor8_5(t: Target, name, ref):
    total = induced_sum_squares(t.induced, check=False)
    idx = t.induced.index
    upper = idx * min(t.table.k, t.sub_table.k)
    return _result(name, t.spec, idx, upper, idx <= total <= upper, ref, value=total)


def check_gallagher(t: Target, name, ref):
    G, H = t.group, t.sub
    idx = G.order // H.order
    ok = H.k <= G.k * idx and G.k <= H.k * idx
    return _result(name, t.spec, str(Fraction(H.k, idx)), H.k * idx, ok, ref, value=G.k)


def check_spec9_5(t: Target, name, ref):
    C, arg = induced_max(t.induced)
    bG, bH = t.table.b, t.sub_table.b
    ok = C * C * bH <= bG
    return _result(name, t.spec, C, _sqrt_text(Fraction(bG, bH)), ok, ref,
                   witness=None if ok else {"C": C, "argmax": arg, "b(G)": bG, "b(H)": bH},
                   display={"C": C, "sqrt_ratio": math.sqrt(bG / bH)}, category="observation")


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable
    scope: str  # "group" or "pair"
    reference: str


REGISTRY: dict[str, Check] = {}


def _register(name, fn, scope, reference):
    REGISTRY[name] = Check(name, fn, scope, reference)


_register("thm1_1", check_thm1_1, "group", "K(G) sandwich: b^2/sqrt(k|G|) <= K(G) <= b(G)")
_register("thm1_2", check_thm1_2, "group", "large Kronecker multiplicity on large characters")
_register("prop7_1", check_prop7_1, "group", "g(rho,phi,psi) <= min of the three degrees")
_register("prop7_4", check_prop7_4, "group", "sqrt|G|/k^(3/2) <= K(G) <= b(G)")
_register("prop7_6", check_prop7_6, "group", "refined Kronecker sandwich for every pair")
_register("lemma7_2", check_lemma7_2, "group", "sum of g^2 equals sum of centralizer orders")
_register("kron_upper", check_kron_upper, "group",
          "g <= rho(1) min(phi(1)/psi(1), psi(1)/phi(1))")
_register("kron_sym", check_kron_sym, "group", "symmetries of <conj(rho) phi psi, 1>")
_register("burnside", check_burnside, "group", "sum of squared degrees equals |G|")
_register("dim_bounds", check_dim_bounds, "group", "sqrt(|G|/k) <= b(G) <= sqrt|G|")
_register("hls_gap", check_hls_gap, "group", "b < sqrt|G| implies b <= sqrt|G| - |G|^(1/4)/2")
_register("ks_cuberoot", check_ks_cuberoot, "group", "simple groups have b(G) >= |G|^(1/3)")
_register("sherman", check_sherman, "group", "nilpotent class r: k >= r|G|^(1/r) - r + 1")
_register("permgroup_k", check_permgroup_k, "group", "degree n: k <= 2^(n-1), k <= 5^((n-1)/3)")
_register("gr_center", check_gr_center, "group", "trivial center implies k(G) <= sqrt|G|")
_register("fg_classcount", check_fg_classcount, "group", "q^r <= k(G) <= 27.2 q^r for Lie type")
_register("sl2_formulas", check_sl2_formulas, "group", "SL2(p): |G| = p^3-p, k = p+4, b = p+1")
_register("unitriangular_b", check_unitriangular_b, "group",
          "U_n(q): b = q^floor((n-1)^2/4)")
_register("glnq_order", check_glnq_order, "group", "(1-1/q-1/q^2) q^(n^2) <= |GL_n(q)| <= q^(n^2)")
_register("remark1_5_diag", check_remark1_5_diag, "group", "C(H x H, diagonal H) = K(H)")
_register("remark1_5_factor", check_remark1_5_factor, "group", "C(H x H, H x 1) = b(H)")
_register("mckay_sn", check_mckay_sn, "group", "sum of degrees of S_n = number of involutions")
_register("thm1_3", check_thm1_3, "pair", "sqrt[G:H]/sqrt(k(H)k(G)) <= C(G,H) <= sqrt[G:H]")
_register("thm1_4", check_thm1_4, "pair", "large induced multiplicity on large characters")
_register("lemma8_2", check_lemma8_2, "pair", "sum of c^2 equals sum z_G/z_H over H-classes")
_register("lemma8_4", check_lemma8_4, "pair", "row and column sums of c^2 are at most [G:H]")
_register("cor8_3", check_cor8_3, "pair", "sum of c^2 >= [G:H]")
_register("cor8_5", check_cor8_5, "pair", "[G:H] <= sum of c^2 <= [G:H] min(k(G), k(H))")
_register("gallagher", check_gallagher, "pair", "k(H)/[G:H] <= k(G) <= k(H)[G:H]")
_register("spec9_5", check_spec9_5, "pair", "open question: C(G,H) <= sqrt(b(G)/b(H))")


def check(name: str, target, cap: int = DEFAULT_CAP, seed: int = 0) -> CheckResult:
    """Run one registered check on a descriptor (or a prepared Target)."""
    if name not in REGISTRY:
        raise MissingInput(f"unknown check {name!r}")
    entry = REGISTRY[name]
    t = target if isinstance(target, Target) else Target(target, cap=cap, seed=seed)
    category = "observation" if name == "spec9_5" else "theorem"
    if entry.scope == "pair" and not t.is_pair:
        return _inapplicable(name, t.spec, entry.reference, "needs a subgroup pair", category)
    if entry.scope == "group" and t.is_pair:
        return _inapplicable(name, t.spec, entry.reference, "needs a single group", category)
    try:
        return entry.fn(t, name, entry.reference)
    except CapExceeded as exc:
        return _inapplicable(name, t.spec, entry.reference, f"element cap: {exc}", category)


# ---------------------------------------------------------------------------
# batteries and suites

CORE_GROUPS = (
    [f"s:{n}" for n in range(3, 7)] + [f"a:{n}" for n in range(4, 7)]
    + [f"c:{n}" for n in range(1, 13)] + [f"d:{n}" for n in range(3, 13)]
    + ["q8"] + [f"sl2:{p}" for p in (3, 5, 7, 11, 13)]
    + ["gl:2:3", "u:3:3", "u:4:3", "prod(s:3,s:3)", "prod(s:4,s:4)"]
)
CORE_PAIRS = (
    [f"s:{n}>s:{n - 1}" for n in range(3, 7)] + [f"s:{n}>a:{n}" for n in range(3, 7)]
    + ["s:4>d:4", "diag(s:3)", "diag(s:4)", "factor(s:3)", "factor(s:4)"]
)
BATTERIES = {"core": CORE_GROUPS + CORE_PAIRS}


def expand_targets(items) -> list[str]:
    """Expand battery names and ranges such as ``s:3..6`` into descriptors."""
    out = []
    for item in items:
        item = item.strip().lower()
        if not item:
            continue
        if item in BATTERIES:
            out.extend(BATTERIES[item])
            continue
        m = re.fullmatch(r"([a-z0-9]+(?::\d+)*):(\d+)\.\.(\d+)", item)
        if m:
            out.extend(f"{m.group(1)}:{n}" for n in range(int(m.group(2)), int(m.group(3)) + 1))
        else:
            out.append(item)
    return out


def _run_target(spec: str, checks: list[str], cap: int, seed: int) -> tuple[str, str | None, list]:
    t = Target(spec, cap=cap, seed=seed)
    try:
        digest = _target_digest(t)
    except KronmultError as exc:
        out = []
        for name in checks:
            ref = REGISTRY[name].reference if name in REGISTRY else ""
            out.append(_inapplicable(name, spec, ref, f"input error: {exc}"))
        return spec, None, out
    return spec, digest, [check(name, t) for name in checks]


def run_suite(targets, checks, cap: int = DEFAULT_CAP, seed: int = 0, threads: int = 1,
              progress=None) -> SuiteReport:
    """Every check on every target; errors per target become inapplicable results.

    With ``threads > 1`` targets are spread over worker processes; results are
    reassembled in (target, check) input order either way.
    """
    started = time.strftime("%Y-%m-%dT%H:%M:%S")
    t0 = time.perf_counter()
    checks = list(checks)
    for name in checks:
        if name not in REGISTRY:
            raise MissingInput(f"unknown check {name!r}")
    targets = expand_targets(targets) if checks else []
    done = {}
    if threads > 1 and len(targets) > 1:
        from concurrent.futures import ProcessPoolExecutor, as_completed
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futs = [pool.submit(_run_target, spec, checks, cap, seed) for spec in targets]
            for fut in as_completed(futs):
                spec, digest, res = fut.result()
                done[spec] = (digest, res)
                if progress:
                    progress(spec)
    else:
        for spec in targets:
            if progress:
                progress(spec)
            spec_, digest, res = _run_target(spec, checks, cap, seed)
            done[spec] = (digest, res)
    results, inputs = [], {}
    for spec in targets:
        digest, res = done[spec]
        if digest is not None:
            inputs[spec] = digest
        results.extend(res)
    return SuiteReport(results, elapsed=time.perf_counter() - t0, started=started, inputs=inputs)


def _target_digest(t: Target) -> str:
    from .tableio import format_table
    h = hashlib.sha256(format_table(t.table).encode())
    if t.is_pair:
        h.update(format_table(t.sub_table).encode())
        h.update(repr(t.fusion.fusion).encode())
    return h.hexdigest()[:16]


# ---------------------------------------------------------------------------
# Monster


MONSTER_ORDER = 808017424794512875886459904961710757005754368000000000
MONSTER_A = 808017424794512875894769468067441075690144312450960558
#: rounded values as displayed alongside the exact ones (3 significant digits)
MONSTER_DISPLAYED = {
    "epsilon": 11.02,
    "sqrt(|M|/k)": 6.45e25,
    "sqrt(|M|)": 8.99e26,
    "b": 2.59e26,
    "b^2/sqrt(k|M|)": 5.35e24,
    "remainder": 1.00e19,
    "K": 2.15e25,
    "average": 3.38e22,
}


def same_3sig(x: float, y: float) -> bool:
    return f"{x:.2e}" == f"{y:.2e}"


def _isqrt_float(n) -> float:
    """sqrt of a big integer or Fraction, accurate beyond double range issues."""
    q = Fraction(n)
    scale = 10 ** 40
    return math.isqrt(q.numerator * scale * scale // q.denominator) / scale


def monster_quantities(cd: ClassData) -> dict:
    n, k = cd.order, cd.k
    A = A_from_centralizers(cd.centralizers)
    top = sorted(cd.centralizers[1:], reverse=True)[:3]
    out = {"order": n, "k": k, "A": A, "remainder": A - n - sum(top), "top_centralizers": top,
           "sqrt(|M|/k)": _isqrt_float(Fraction(n, k)), "sqrt(|M|)": _isqrt_float(n)}
    if cd.degrees is not None:
        b = max(cd.degrees)
        out["b"] = b
        out["epsilon"] = epsilon(cd.degrees, n)
        out["b^2/sqrt(k|M|)"] = b * b / _isqrt_float(k * n)
    return out


def monster_report(cd: ClassData, with_table: bool = True) -> SuiteReport:
    """Compare class-level quantities of an ingested Monster file with the published ones."""
    t0 = time.perf_counter()
    cd.validate()
    if cd.k != 194:
        raise MissingInput(f"expected 194 classes, got {cd.k}")
    q = monster_quantities(cd)
    tgt = cd.name
    ref = "Monster group quantities"
    res = [
        _result("monster_order", tgt, str(q["order"]), str(MONSTER_ORDER), q["order"] == MONSTER_ORDER,
                ref, category="identity"),
        _result("monster_A", tgt, str(q["A"]), str(MONSTER_A), q["A"] == MONSTER_A, ref,
                category="identity"),
        _result("lemma7_2_lower", tgt, str(q["order"]), str(q["A"]), q["A"] >= q["order"], ref),
    ]

    def approx(name, value):
        want = MONSTER_DISPLAYED[name]
        res.append(_result(f"monster_{name}", tgt, f"{float(value):.2e}", f"{want:.2e}",
                           same_3sig(float(value), want), ref, display={"value": float(value)}))

    approx("sqrt(|M|/k)", q["sqrt(|M|/k)"])
    approx("sqrt(|M|)", q["sqrt(|M|)"])
    approx("remainder", q["remainder"])
    if "b" in q:
        approx("b", q["b"])
        approx("b^2/sqrt(k|M|)", q["b^2/sqrt(k|M|)"])
        approx("epsilon", q["epsilon"])
        b, n, k = q["b"], cd.order, cd.k
        res.append(_result("dim_bounds", tgt, "sqrt(|M|/k)", "sqrt(|M|)",
                           n <= b * b * k and b * b <= n, ref, value=b))
    else:
        for name in ("b", "b^2/sqrt(k|M|)", "epsilon"):
            res.append(_inapplicable(f"monster_{name}", tgt, ref, "class data has no degrees"))
    if with_table and cd.values is not None:
        T = cd.to_table()
        K, arg = kron_max(T)
        avg = Fraction(int(kron_tensor(T).astype(object).sum()), T.k ** 3)
        approx("K", K)
        approx("average", avg)
    else:
        for name in ("K", "average"):
            res.append(_inapplicable(f"monster_{name}", tgt, ref, "needs the full character table"))
    return SuiteReport(res, elapsed=time.perf_counter() - t0,
                       started=time.strftime("%Y-%m-%dT%H:%M:%S"), inputs={tgt: "classdata"})


# ---------------------------------------------------------------------------
# counterexample scans


def sweep_pairs(sweep: str, cap: int = DEFAULT_CAP) -> list[str]:
    """Pair descriptors for a sweep such as ``s:3..6``, ``battery`` or explicit pairs."""
    out = []
    for item in [s for s in re.split(r"[;\s]+", sweep.strip().lower()) if s]:
        if item in ("battery", "core"):
            out.extend(CORE_PAIRS)
            continue
        m = re.fullmatch(r"s:(\d+)(?:\.\.(\d+))?", item)
        if m:
            lo = int(m.group(1))
            hi = int(m.group(2) or lo)
            for n in range(lo, hi + 1):
                out.extend(_symmetric_pairs(n, cap))
            continue
        if is_pair_spec(item):
            out.append(item)
            continue
        for n_spec in expand_targets([item]):
            out.extend([f"diag({n_spec})", f"factor({n_spec})"])
    seen, uniq = set(), []
    for p in out:
        if p not in seen:
            seen.add(p)
            uniq.append(p)
    return uniq


def _symmetric_pairs(n: int, cap: int) -> list[str]:
    pairs = []
    for j in range(1, n // 2 + 1):
        pairs.append(f"s:{n}>prod(s:{n - j},s:{j})" if j < n else f"s:{n}>s:{n}")
    pairs.append(f"s:{n}>a:{n}")
    if n >= 2:
        pairs.append(f"s:{n}>c:{n}")
    if n >= 3:
        pairs.append(f"s:{n}>d:{n}")
    if math.factorial(n) ** 2 <= cap:
        pairs.extend([f"diag(s:{n})", f"factor(s:{n})"])
    return pairs


def counterexample_scan(check_name: str, sweep: str, cap: int = DEFAULT_CAP, seed: int = 0,
                        threads: int = 1, progress=None) -> SuiteReport:
    if check_name not in REGISTRY:
        raise MissingInput(f"unknown check {check_name!r}")
    scope = REGISTRY[check_name].scope
    if scope == "pair":
        targets = sweep_pairs(sweep, cap)
    else:
        targets = [t for t in expand_targets(re.split(r"[;\s]+", sweep.strip())) if t]
    return run_suite(targets, [check_name], cap=cap, seed=seed, threads=threads, progress=progress)
