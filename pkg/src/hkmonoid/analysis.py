"""Enumeration of reduced words, the finite exceptional set, and the
verification suite that runs every structural check by name.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from hkmonoid import fixtures
from hkmonoid.maps import chi, embed, f_word, sigma, tau
from hkmonoid.oracle import CongruenceClosure, presentation_of
from hkmonoid.graphs import cycle_graph
from hkmonoid.rewrite import (
    _suffix_redex,
    is_reduced,
    iter_reduced,
    multiply,
    normalize,
    normalize_with_strategy,
    power_of_q,
    trace_normalize,
)
from hkmonoid.structure import (
    MatrixElement,
    boundary_sets,
    classify,
    compose,
    ideal_member,
    left_boundary,
    m_mult,
    right_boundary,
    sandwich_entry,
    sandwich_matrix,
)
from hkmonoid.words import Word, all_words, check_rank, format_word, has_factor, is_periodic_factor, xq_word

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class GrowthReport:
    n: int
    counts: List[int]
    cumulative: List[int]
    period: Optional[int]

    @property
    def stabilized(self) -> bool:
        return self.period is not None

    def to_json(self) -> dict:
        return {"n": self.n, "counts": self.counts, "cumulative": self.cumulative,
                "stabilized": self.stabilized, "period": self.period}


def _tail_period(counts: Sequence[int], max_period: int = 2) -> Optional[int]:
    """Smallest ``p`` such that the last ``2p + 1`` counts repeat with period ``p``."""
    for p in range(1, max_period + 1):
        window = 2 * p + 1
        if len(counts) >= window and all(counts[-k] == counts[-k - p] for k in range(1, window - p + 1)):
            return p
    return None


def enumerate_reduced(n: int, L: int, dump: Optional[Callable[[Word], None]] = None) -> GrowthReport:
    """Count reduced words of each length ``0..L``; ``dump`` receives every word."""
    check_rank(n)
    counts = [0] * (L + 1)
    for w in iter_reduced(n, L):
        counts[len(w)] += 1
        if dump is not None:
            dump(w)
    cumulative = []
    total = 0
    for c in counts:
        total += c
        cumulative.append(total)
    return GrowthReport(n, counts, cumulative, _tail_period(counts))


def exceptional_bound(n: int) -> Fraction:
    """``C_2 + 2 C_1`` with ``C_1 = n(n-1)/2`` and ``C_2 = (n/2 + 1) n``."""
    c1 = Fraction(n * (n - 1), 2)
    c2 = (Fraction(n, 2) + 1) * n
    return c2 + 2 * c1


def exceptional_set(n: int, cap: Optional[int] = None) -> List[Word]:
    """Reduced words with no factor ``x_n q_i``, in deg-lex order.

    The set is factor-closed, so it is grown letter by letter and only the
    new suffix has to be checked.  Raises ``AssertionError`` if a member is
    longer than the length bound.
    """
    check_rank(n)
    bound = floor(exceptional_bound(n))
    if cap is None:
        cap = bound
    if cap < bound:
        raise ValueError(f"cap {cap} is below the length bound {bound}")
    bases = [xq_word(n, i) for i in range(n - 1)]
    out: List[Word] = []
    layer: List[Word] = [()]
    length = 0
    while layer:
        if length > cap:
            raise AssertionError(f"exceptional word longer than {cap}: {format_word(layer[0])!r}")
        out.extend(layer)
        nxt = []
        for w in layer:
            buf = list(w)
            for g in range(1, n + 1):
                buf.append(g)
                c = tuple(buf)
                if _suffix_redex(n, buf) is None and not any(c[-len(b):] == b for b in bases):
                    nxt.append(c)
                buf.pop()
        layer = nxt
        length += 1
    if max(map(len, out)) > exceptional_bound(n):
        raise AssertionError("exceptional set exceeds the length bound")
    return out


# --- verification suite -----------------------------------------------------


@dataclass
class CheckResult:
    status: str
    detail: str = ""
    counterexample: Optional[List[str]] = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"status": self.status, "detail": self.detail,
                "counterexample": self.counterexample, "milliseconds": round(self.seconds * 1000)}


@dataclass
class SuiteReport:
    n: int
    checks: Dict[str, CheckResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks.values())

    def to_json(self) -> dict:
        return {"n": self.n, "ok": self.ok,
                "checks": {k: self.checks[k].to_json() for k in sorted(self.checks)}}


class _Failure(Exception):
    def __init__(self, detail: str, *words: Sequence[int]):
        super().__init__(detail)
        self.detail = detail
        self.words = [format_word(w) for w in words]


def default_limits(n: int) -> Dict[str, int]:
    """Word-length caps per check, sized so a full run takes seconds to minutes."""
    table = {
        3: dict(confluence=8, oracle=5, roundtrip=10, words=8, pairs=6, embedding=0, rees=4, closure=9),
        4: dict(confluence=7, oracle=3, roundtrip=9, words=8, pairs=6, embedding=7, rees=4, closure=9),
        5: dict(confluence=6, oracle=2, roundtrip=8, words=7, pairs=5, embedding=6, rees=3, closure=9),
    }
    return dict(table.get(n, dict(confluence=5, oracle=1, roundtrip=7, words=6, pairs=4, embedding=5,
                                  rees=2, closure=7)))


def _check_confluence(n, lim, rng):
    for w in all_words(n, lim["confluence"]):
        target = normalize(n, w)
        traced, _ = trace_normalize(n, w)
        if traced != target:
            raise _Failure("leftmost strategy disagrees", w)
        for seed in range(5):
            if normalize_with_strategy(n, w, seed) != target:
                raise _Failure(f"random strategy (seed {seed}) disagrees", w)
    return f"all words up to length {lim['confluence']}"


def _check_oracle(n, lim, rng):
    L = lim["oracle"]
    closure = CongruenceClosure(presentation_of(cycle_graph(n)), L + 3, keep_len=L)
    words = list(all_words(n, L))
    nf = {w: normalize(n, w) for w in words}
    for a, u in enumerate(words):
        for v in words[a:]:
            if (nf[u] == nf[v]) != closure.connected(u, v, 3):
                raise _Failure("normal forms and relation closure disagree", u, v)
    return f"{len(words)} words, all pairs, slack 3"


def _check_roundtrip(n, lim, rng):
    count = 0
    for w in iter_reduced(n, lim["roundtrip"]):
        cls = classify(n, w)
        if cls is None:
            continue
        count += 1
        if compose(n, cls.i, cls.a, cls.k, cls.b) != w:
            raise _Failure("compose(classify(w)) != w", w)
    for i in range(n - 1):
        sets = boundary_sets(n, i)
        for a in sets.A:
            for b in sets.B:
                for k in (1, 2):
                    e = MatrixElement(i, a, k, b)
                    if classify(n, compose(n, i, a, k, b)) != e:
                        raise _Failure("classify(compose(...)) changed the triple", e.word(n))
    return f"{count} matrix-type words up to length {lim['roundtrip']}"


def _check_unique_index(n, lim, rng):
    bases = [xq_word(n, i) for i in range(n - 1)]
    for w in iter_reduced(n, lim["roundtrip"]):
        hits = [i for i, b in enumerate(bases) if has_factor(w, b)]
        if len(hits) > 1:
            raise _Failure(f"factors for several indices {hits}", w)
    return f"reduced words up to length {lim['roundtrip']}"


def _check_periodic(n, lim, rng):
    up = (n,) + tuple(range(1, n))
    down = tuple(range(n, 0, -1))
    for w in iter_reduced(n, lim["roundtrip"]):
        for period in (up, down):
            if has_factor(w, period) and not is_periodic_factor(w, period):
                raise _Failure(f"not a factor of ({format_word(period)})^inf", w)
    return f"reduced words up to length {lim['roundtrip']}"


def _check_dichotomy(n, lim, rng):
    cells = 0
    for i in range(n - 1):
        base = xq_word(n, i)
        sets = boundary_sets(n, i)
        for b in sets.B:
            for a in sets.A:
                cells += 1
                w = normalize(n, base + b + a + base)
                alpha = power_of_q(n, i, w)
                if alpha is not None:
                    if alpha < 2:
                        raise _Failure("power below the square", b, a)
                    continue
                cls = classify(n, w)
                if cls is not None and cls.i <= i:
                    raise _Failure(f"lands in M_{cls.i} without being a power", b, a)
    return f"{cells} cells"


def _check_symmetry(n, lim, rng):
    for i in range(n - 1):
        sets = boundary_sets(n, i)
        if {normalize(n, chi(n, i, a)) for a in sets.A} != right_boundary(n, i):
            raise _Failure(f"chi_{i}(A_{i}) != B_{i}")
        if {normalize(n, chi(n, i, b)) for b in sets.B} != left_boundary(n, i):
            raise _Failure(f"chi_{i}(B_{i}) != A_{i}")
        m = sandwich_matrix(n, i)
        for r in range(len(m.rows)):
            for c in range(r):
                if m[r, c] != m[c, r]:
                    raise _Failure(f"P_{i} not symmetric at ({r},{c})", m.rows[r], m.cols[c])
    return f"all {n - 1} matrices"


def _check_involutions(n, lim, rng):
    for w in all_words(n, lim["pairs"]):
        nw = normalize(n, w)
        if normalize(n, tau(n, tau(n, w))) != nw or sigma(n, w, n) != w:
            raise _Failure("tau or sigma^n is not an involution/identity", w)
        for i in range(n - 1):
            if normalize(n, chi(n, i, chi(n, i, w))) != nw:
                raise _Failure(f"chi_{i} is not an involution", w)
    return f"all words up to length {lim['pairs']}"


def _check_det(n, lim, rng):
    degrees = []
    for i in range(n - 1):
        d = sandwich_matrix(n, i).det()
        if d.is_zero():
            raise _Failure(f"det P_{i} = 0")
        degrees.append(d.degree)
    return f"degrees {degrees}"


def _check_sandwich_fixtures(n, lim, rng):
    if n not in fixtures.SANDWICH:
        raise _Skip(f"no fixtures for n={n}")
    for i, fx in fixtures.SANDWICH[n].items():
        m = sandwich_matrix(n, i).reordered(fx.rows, fx.cols)
        for r, row in enumerate(fx.entries):
            for c, e in enumerate(row):
                if m[r, c] != e:
                    raise _Failure(f"P_{i} cell ({r},{c}) is {m[r, c]}, expected {e}", fx.rows[r], fx.cols[c])
        if m.det() != fx.det:
            raise _Failure(f"det P_{i} = {m.det()}, expected {fx.det}")
    return f"{len(fixtures.SANDWICH[n])} matrices"


def _check_boundary_fixtures(n, lim, rng):
    if n not in fixtures.BOUNDARY:
        raise _Skip(f"no fixtures for n={n}")
    for i, (A, B) in fixtures.BOUNDARY[n].items():
        if left_boundary(n, i) != set(A):
            raise _Failure(f"A_{i} mismatch")
        if right_boundary(n, i) != set(B):
            raise _Failure(f"B_{i} mismatch")
    return f"{len(fixtures.BOUNDARY[n])} index values"


def _check_support(n, lim, rng):
    for i in range(n - 1):
        base = xq_word(n, i)
        for k in range(1, 13):
            size = len(f_word(n, base * k).support())
            if size != n - i - 1:
                raise _Failure(f"support {size} != {n - i - 1}", base * k)
    for w in all_words(n, lim["words"]):
        if f_word(n, w) != f_word(n, normalize(n, w)):
            raise _Failure("f differs on w and its normal form", w)
    return f"k <= 12; words up to length {lim['words']}"


def _same_partition(words: Iterable[Word], keys: Sequence[Callable[[Word], Word]]):
    """A pair of words on which two of the key functions induce different partitions.

    Each word is compared with the first word sharing one of its keys; if the
    partitions differ, some word disagrees with such a representative.
    """
    firsts: List[Dict[Word, Tuple[Word, tuple]]] = [dict() for _ in keys]
    for w in words:
        ks = tuple(k(w) for k in keys)
        for slot, key in zip(firsts, ks):
            other, other_ks = slot.setdefault(key, (w, ks))
            if other_ks != ks:
                return other, w
    return None


def _check_morphisms(n, lim, rng):
    keys = [lambda w: normalize(n, w),
            lambda w: normalize(n, sigma(n, w, 1)),
            lambda w: normalize(n, tau(n, w))]
    bad = _same_partition(all_words(n, lim["pairs"]), keys)
    if bad:
        raise _Failure("sigma or tau does not respect equality", *bad)
    return f"all words up to length {lim['pairs']}"


def _check_embedding(n, lim, rng):
    if n < 4 or not lim["embedding"]:
        raise _Skip("needs a cycle of length n - 1 >= 3")
    for w in iter_reduced(n - 1, lim["embedding"]):
        if not is_reduced(n, embed(n, w)):
            raise _Failure("image of a reduced word is not reduced", w)
    keys = [lambda w: normalize(n - 1, w), lambda w: normalize(n, embed(n, w))]
    bad = _same_partition(all_words(n - 1, lim["embedding"]), keys)
    if bad:
        raise _Failure("embedding does not preserve and reflect equality", *bad)
    return f"words over {n - 1} letters up to length {lim['embedding']}"


def _check_ideal_chain(n, lim, rng):
    count = 0
    for w in iter_reduced(n, lim["words"]):
        answers = [ideal_member(n, w, i) for i in range(n - 1)]
        count += 1
        for i in range(1, n - 1):
            if answers[i] == "yes" and answers[i - 1] != "yes":
                raise _Failure(f"in I_{i} but not in I_{i - 1}", w)
            if answers[i - 1] == "no" and answers[i] == "yes":
                raise _Failure(f"outside I_{i - 1} but inside I_{i}", w)
        if answers[n - 2] != "no":
            raise _Failure(f"I_{n - 2} must be empty", w)
    return f"{count} reduced words up to length {lim['words']}"


def _check_top_closure(n, lim, rng):
    top = xq_word(n, n - 2)
    for w in iter_reduced(n, lim["closure"]):
        if not has_factor(w, top):
            continue
        for g in range(1, n + 1):
            for x in (multiply(n, w, (g,)), multiply(n, (g,), w)):
                if not has_factor(x, top):
                    raise _Failure(f"multiplying by {g} leaves the top ideal", w)
    return f"reduced words up to length {lim['closure']}"


def _check_exceptional(n, lim, rng):
    exc = exceptional_set(n)
    members = set(exc)
    for w in iter_reduced(n, lim["roundtrip"]):
        if (classify(n, w) is None) != (w in members):
            raise _Failure("classify and the exceptional set disagree", w)
    return f"{len(exc)} words, longest {max(map(len, exc))}, bound {float(exceptional_bound(n))}"


def random_element(n: int, i: int, rng: random.Random, max_k: int) -> MatrixElement:
    sets = boundary_sets(n, i)
    return MatrixElement(i, rng.choice(sets.A), rng.randint(1, max_k), rng.choice(sets.B))


def check_rees_pair(n: int, i: int, e1: MatrixElement, e2: MatrixElement) -> Optional[str]:
    """``None`` if ``m_mult`` matches the product computed by normalising, else a reason."""
    prod = multiply(n, e1.word(n), e2.word(n))
    got = m_mult(n, i, e1, e2)
    cls = classify(n, prod)
    if got is None:
        if cls is not None and cls.i <= i:
            return f"theta predicted but product lies in M_{cls.i}"
        return None
    if cls != got:
        return f"expected {got}, product classifies as {cls}"
    return None


def _check_rees(n, lim, rng):
    trials = 2000
    for i in range(n - 1):
        for _ in range(trials):
            e1 = random_element(n, i, rng, lim["rees"])
            e2 = random_element(n, i, rng, lim["rees"])
            reason = check_rees_pair(n, i, e1, e2)
            if reason:
                raise _Failure(reason, e1.word(n), e2.word(n))
    return f"{trials} random pairs per index"


class _Skip(Exception):
    pass


CHECKS: Dict[str, Callable] = {
    "confluence": _check_confluence,
    "oracle_agreement": _check_oracle,
    "decomposition_roundtrip": _check_roundtrip,
    "unique_matrix_index": _check_unique_index,
    "periodic_factor": _check_periodic,
    "bracket_dichotomy": _check_dichotomy,
    "sandwich_symmetry": _check_symmetry,
    "involution_exchange": _check_involutions,
    "determinant_nonzero": _check_det,
    "sandwich_fixtures": _check_sandwich_fixtures,
    "boundary_fixtures": _check_boundary_fixtures,
    "support_law": _check_support,
    "morphism_respect": _check_morphisms,
    "embedding": _check_embedding,
    "ideal_chain": _check_ideal_chain,
    "top_ideal_closure": _check_top_closure,
    "exceptional_set": _check_exceptional,
    "rees_multiplication": _check_rees,
}


def run_suite(n: int, limits: Optional[Dict[str, int]] = None, checks: Optional[Sequence[str]] = None,
              seed: int = 0) -> SuiteReport:
    """Run the named checks (all by default); failures carry the first counterexample found."""
    check_rank(n)
    lim = default_limits(n)
    lim.update(limits or {})
    names = sorted(CHECKS) if checks is None else list(checks)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}")
    report = SuiteReport(n)
    for name in sorted(names):
        rng = random.Random(seed)
        start = time.perf_counter()
        try:
            detail = CHECKS[name](n, lim, rng)
            result = CheckResult(PASS, detail)
        except _Skip as skip:
            result = CheckResult(SKIP, str(skip))
        except _Failure as fail:
            result = CheckResult(FAIL, fail.detail, fail.words)
        except AssertionError as exc:
            result = CheckResult(FAIL, f"internal assertion: {exc}")
        result.seconds = time.perf_counter() - start
        report.checks[name] = result
    return report
