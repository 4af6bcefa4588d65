"""Cross-module property checks behind ``hofg verify``.

Each check returns a :class:`PropertyResult`; a failing one carries the
first counterexample in ``detail``. Module functions are looked up at call
time so a patched implementation is what gets checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fibzeck, recurrence, tree, words

DEFAULT_HORIZON = 100_000
DEFAULT_HEIGHT = 15


@dataclass(frozen=True)
class PropertyResult:
    name: str
    params: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} [{self.params}]"
        return f"{text}: {self.detail}" if self.detail else text


def check_codec(horizon: int = DEFAULT_HORIZON) -> PropertyResult:
    params = f"n<={horizon}"
    seen = set()
    for n in range(horizon + 1):
        z = fibzeck.zeck_encode(n)
        if any(a < b + 2 for a, b in zip(z, z[1:])) or (z and z[-1] < 2):
            return PropertyResult("zeckendorf-codec", params, False, f"n={n} encodes to {z}")
        if fibzeck.zeck_decode(z) != n:
            return PropertyResult("zeckendorf-codec", params, False, f"n={n} round-trips wrong")
        seen.add(tuple(z))
    if len(seen) != horizon + 1:
        return PropertyResult("zeckendorf-codec", params, False, "encoding is not injective")
    return PropertyResult("zeckendorf-codec", params, True)


def check_methods(horizon: int = DEFAULT_HORIZON, tree_horizon: int | None = None) -> PropertyResult:
    tree_horizon = horizon if tree_horizon is None else min(tree_horizon, horizon)
    params = f"n<={horizon}, tree n<={tree_horizon}"
    table = recurrence.eval_g(horizon)
    for n in range(1, horizon + 1):
        g = table[n]
        z, f = fibzeck.g_zeck(n), fibzeck.g_floor(n)
        if z != g or f != g:
            return PropertyResult(
                "method-agreement", params, False, f"n={n}: recursion {g}, zeck {z}, floor {f}"
            )
        if n <= tree_horizon and tree.parent_label(n + 1) != g:
            return PropertyResult(
                "method-agreement", params, False,
                f"n={n}: recursion {g}, tree {tree.parent_label(n + 1)}",
            )
    return PropertyResult("method-agreement", params, True)


def check_slow(horizon: int = DEFAULT_HORIZON) -> PropertyResult:
    params = f"n<={horizon}"
    table = recurrence.eval_g(horizon)
    ok, jump = recurrence.is_slow(table)
    if not ok:
        return PropertyResult("slow-growth", params, False, f"first jump at n={jump}")
    freq = recurrence.frequency(table)
    for m in range(1, freq.complete_upto + 1):
        if freq[m] not in (1, 2):
            return PropertyResult("slow-growth", params, False, f"f({m}) = {freq[m]}")
    return PropertyResult("slow-growth", params, True, f"f complete to {freq.complete_upto}")


def check_theorem2(horizon: int = DEFAULT_HORIZON, height: int = DEFAULT_HEIGHT) -> PropertyResult:
    params = f"n<={horizon}, explicit h<={height}"
    table = recurrence.eval_g(horizon)
    for n in range(1, horizon + 1):
        p = tree.parent_label(n + 1)
        if p != table[n]:
            return PropertyResult(
                "theorem2-parent", params, False, f"parent of {n + 1} is {p}, G({n}) = {table[n]}"
            )
    explicit = tree.build_explicit(height)
    for v in range(2, explicit.size + 1):
        p = tree.parent_label(v)
        if explicit.parent[v] != p:
            return PropertyResult(
                "theorem2-parent", params, False,
                f"vertex {v}: explicit parent {explicit.parent[v]}, implicit {p}",
            )
    # vertices on the top level have no children in a finite build
    for v in range(1, explicit.size - len(explicit.levels[-1]) + 1):
        c = tree.children_count(v)
        if len(explicit.children[v]) != c:
            return PropertyResult(
                "theorem2-parent", params, False,
                f"vertex {v}: explicit {len(explicit.children[v])} children, implicit {c}",
            )
    return PropertyResult("theorem2-parent", params, True)


def check_lemma1(height: int = DEFAULT_HEIGHT, formula_height: int = 85) -> PropertyResult:
    params = f"explicit h<={height}, formula h<={formula_height}"
    explicit = tree.build_explicit(height)
    total = 0
    for h, level in enumerate(explicit.levels):
        total += len(level)
        if len(level) != tree.level_size(h) or total != tree.cumulative_size(h):
            return PropertyResult(
                "lemma1-levels", params, False,
                f"h={h}: {len(level)} vertices ({total} cumulative)",
            )
    total = 0
    for h in range(formula_height + 1):
        total = fibzeck.checked(total + tree.level_size(h), "cumulative size")
        if total != tree.cumulative_size(h):
            return PropertyResult(
                "lemma1-levels", params, False,
                f"h={h}: summed {total}, formula {tree.cumulative_size(h)}",
            )
    return PropertyResult("lemma1-levels", params, True)


def check_corollary1(top: int = 90) -> PropertyResult:
    params = f"2<=n<={top}"
    for n in range(2, top + 1):
        # g(m) is the parent of vertex m + 1
        p = tree.parent_label(fibzeck.fib(n) + 1)
        if p != fibzeck.fib(n - 1):
            return PropertyResult(
                "corollary1-fibonacci", params, False, f"g(F_{n}) = {p}, F_{n - 1} = {fibzeck.fib(n - 1)}"
            )
    return PropertyResult("corollary1-fibonacci", params, True)


def check_corollary2(length: int = DEFAULT_HORIZON) -> PropertyResult:
    params = f"prefix {length}"
    freq = recurrence.frequency(recurrence.table_for_frequencies(length))
    target = words.frequency_word(length, freq)
    for label, spec in (("w1 w2 prod w_n^2", words.COROLLARY), ("prod w_n", words.PLAIN_FROM_3)):
        report = words.verify_factorization(spec, target)
        if not report.ok:
            return PropertyResult("corollary2-factorization", params, False, f"{label}: {report.summary()}")
    return PropertyResult("corollary2-factorization", params, True)


def check_level_words(height: int = DEFAULT_HEIGHT) -> PropertyResult:
    params = f"h<={height}"
    # the top level of an explicit build has no children yet, so go one higher
    explicit = tree.build_explicit(height + 1)
    for h in range(height + 1):
        level = sorted(explicit.levels[h])
        observed = "".join(str(len(explicit.children[v])) for v in level)
        if observed != words.build_level_word(h):
            return PropertyResult("level-words", params, False, f"h={h}: tree gives {observed}")
        if h >= 1 and words.build_level_word(h) != words.build_w(h + 1) + words.build_w(h + 2):
            return PropertyResult("level-words", params, False, f"W_{h} != w_{h + 1} w_{h + 2}")
    return PropertyResult("level-words", params, True)


PROPERTIES = (
    "codec", "methods", "slow", "theorem2", "lemma1", "cor1", "cor2", "levels",
)


def run_suite(selected=None, horizon: int = DEFAULT_HORIZON, height: int = DEFAULT_HEIGHT):
    selected = selected or PROPERTIES
    checks = {
        "codec": lambda: check_codec(horizon),
        "methods": lambda: check_methods(horizon),
        "slow": lambda: check_slow(horizon),
        "theorem2": lambda: check_theorem2(horizon, height),
        "lemma1": lambda: check_lemma1(height),
        "cor1": lambda: check_corollary1(),
        "cor2": lambda: check_corollary2(horizon),
        "levels": lambda: check_level_words(height),
    }
    return [checks[name]() for name in PROPERTIES if name in selected]
