"""Exit criteria. Each test records one PASS/FAIL line, shown after the run."""

import io
import time

from conftest import ACCEPTANCE_LINES, TABLE_F, TABLE_G, naive_fib
from hofstadter_g import cli, fibzeck, recurrence, tree, words


def record(number, name, ok, detail=""):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {name}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_criterion_01_table1():
    code, out, _ = _run("seq", "-n", "20", "--format", "bfile")
    got = [int(line.split()[1]) for line in out.splitlines()]
    cfg = cli.RunConfig("seq", horizon=20)
    best = float("inf")
    for _ in range(50):
        sink = io.StringIO()
        start = time.perf_counter()
        cli.run(cfg, out=sink)
        best = min(best, time.perf_counter() - start)
    ok = code == 0 and got == TABLE_G and best < 1e-3
    record(1, "Table 1 reproduction", ok, f"best in-process run {best * 1e6:.0f} us")


def test_criterion_02_table2():
    freq = recurrence.frequency(recurrence.table_for_frequencies(20))
    word = words.frequency_word(20, freq)
    record(2, "Table 2 reproduction", word == "".join(map(str, TABLE_F)), word)


def test_criterion_03_four_way_equivalence():
    start = time.perf_counter()
    table = recurrence.eval_g(10**6)
    v = table.values
    zeck_ok = all(fibzeck.g_zeck(n) == v[n] for n in range(1, 10**6 + 1))
    floor_ok = all(fibzeck.g_floor(n) == v[n] for n in range(1, 10**6 + 1))
    tree_ok = all(tree.parent_label(n + 1) == v[n] for n in range(1, 10**5 + 1))
    elapsed = time.perf_counter() - start
    ok = zeck_ok and floor_ok and tree_ok and elapsed < 10
    record(3, "four-way method equivalence", ok,
           f"zeck {zeck_ok}, floor {floor_ok}, tree {tree_ok}, {elapsed:.2f} s")


def test_criterion_04_theorem2(big_table):
    implicit_ok = all(tree.parent_label(n + 1) == big_table[n] for n in range(1, 10**5 + 1))
    explicit = tree.build_explicit(18)
    explicit_ok = all(explicit.parent[v] == tree.parent_label(v) for v in range(2, explicit.size + 1))
    record(4, "Theorem 2 parent property", implicit_ok and explicit_ok,
           f"n<=1e5, explicit {explicit.size} vertices through h=18")


def test_criterion_05_lemma1():
    explicit = tree.build_explicit(18)
    total = 0
    explicit_ok = True
    for h, level in enumerate(explicit.levels):
        total += len(level)
        explicit_ok &= len(level) == naive_fib(h + 2) and total == naive_fib(h + 4) - 2
    total = 0
    formula_ok = True
    for h in range(86):
        total = fibzeck.checked(total + tree.level_size(h))
        formula_ok &= tree.level_size(h) == naive_fib(h + 2)
        formula_ok &= total == tree.cumulative_size(h) == naive_fib(h + 4) - 2
    record(5, "Lemma 1 level sizes", explicit_ok and formula_ok, "explicit h<=18, formula h<=85")


def test_criterion_06_corollary1():
    # g(F_n) is the parent of vertex F_n + 1; no sequence table involved
    bad = [n for n in range(2, 91) if tree.parent_label(fibzeck.fib(n) + 1) != fibzeck.fib(n - 1)]
    record(6, "Corollary 1 g(F_n) = F_{n-1}", not bad, f"2<=n<=90, failures {bad}")


def test_criterion_07_corollary2():
    start = time.perf_counter()
    freq = recurrence.frequency(recurrence.table_for_frequencies(10**5))
    target = words.frequency_word(10**5, freq)
    squares = words.verify_factorization(words.COROLLARY, target)
    plain = words.verify_factorization(words.PLAIN_FROM_3, target)
    elapsed = time.perf_counter() - start
    ok = squares.ok and plain.ok and elapsed < 5
    record(7, "Corollary 2 factorization", ok,
           f"squares {squares.summary()}, plain {plain.summary()}, {elapsed:.2f} s")


def test_criterion_08_slow_growth(big_table):
    slow, jump = recurrence.is_slow(big_table)
    counts = set(recurrence.frequency(big_table).complete())
    record(8, "slow growth and {1,2} alphabet", slow and counts == {1, 2},
           f"n<=1e6, first jump {jump}, counts {sorted(counts)}")


def test_criterion_09_zeckendorf_codec():
    ok = True
    for n in range(10**5 + 1):
        z = fibzeck.zeck_encode(n)
        ok &= fibzeck.zeck_decode(z) == n and all(a >= b + 2 for a, b in zip(z, z[1:]))
    record(9, "Zeckendorf codec round trip and gaps", ok, "n<=1e5")


def test_criterion_10_kfold():
    _, seq_out, _ = _run("seq", "-n", "10000")
    _, k1_out, _ = _run("kfold", "-k", "1", "-n", "10000")
    same_terms = recurrence.eval_kfold(recurrence.KFoldSpec(1, 10**4)).terms() == recurrence.eval_g(10**4).terms()
    notes = []
    completed = True
    for k in (2, 3):
        code, out, err = _run("kfold", "-k", str(k), "-n", "10000")
        completed &= code == 0 and len(out.splitlines()) == 10**4 + 1
        notes.append(" / ".join(err.splitlines()))
    ok = k1_out == seq_out and same_terms and completed
    record(10, "k-fold regression", ok, "; ".join(notes))


def test_criterion_11_figure1():
    expected = {
        2: 1, 3: 1, 4: 2, 5: 3, 6: 3, 7: 4, 8: 4, 9: 5, 10: 6, 11: 6,
        12: 7, 13: 8, 14: 8, 15: 9, 16: 9, 17: 10, 18: 11, 19: 11,
    }
    t = tree.build_explicit(4)
    got = {v: t.parent[v] for v in range(2, t.size + 1)}
    record(11, "Figure 1 pin", t.size == 19 and got == expected, f"{t.size} vertices")
