"""Regenerate docs/cli.md with live sample outputs.

    python tools/make_cli_docs.py      (run from the repository root)
"""
import shlex
import subprocess
import sys


def run(cmd):
    p = subprocess.run([sys.executable, "-m", "realforms", *shlex.split(cmd)],
                       capture_output=True, text=True)
    return p.stdout + p.stderr, p.returncode


def block(cmd):
    # a non-zero exit status is appended as "[exit N]"
    out, rc = run(cmd)
    tail = f"\n[exit {rc}]" if rc else ""
    return f"```console\n$ realforms {cmd}\n{out.rstrip()}{tail}\n```\n"


jblock = block


parts = []
P = parts.append
P("""# realforms(1)

## Name

`realforms` - exact computations on Picard lattices, Weyl groups, entropy
and Galois cohomology of Z/2.

## Synopsis

```
realforms lattice --r R [--kperp] [--roots] [--exceptional] [--order] [--cap N]
realforms entropy --r R [--word coxeter|"i j k ..."] [--eps P/Q] [--assert-positive]
realforms h1 SPEC [--normal I,J,...] [--use-normal] [--assert-exact]
realforms h1z MATRIX [--oracle] [--box N]
realforms freeproduct --signs S1,S2,...
```

Every subcommand accepts `--format text` (the default) or `--format json`.
`python -m realforms` is equivalent to `realforms`.

## Exit status

| code | meaning |
|------|---------|
| 0 | success |
| 1 | usage or parse error (bad flag, unreadable file, index out of range, `eps <= 0`, fewer than two signs) |
| 2 | validation error: the input was read but rejected ("computation rejected", with a witness) |
| 3 | an `--assert-*` flag failed, or `h1z --oracle` disagreed with the Smith form |

## Output

In JSON mode one object is printed:

```
{"report": {"tool", "version", "command", "result", "truncated"},
 "timing": {"seconds"}}
```

Everything under `report` is deterministic for fixed input; wall-clock time
only appears under `timing`.  Keys are sorted.  Rationals are strings
`"p/q"`.  Floats only appear under `result.display`, which repeats an exact
value for reading.  `truncated` is true when an enumeration stopped at
`--cap`.  `command` echoes the options, but not input file paths, so a
report computed from a file and one computed from its re-emitted `input`
are byte-identical.

Text mode prints one `path: value` line per leaf of `result` with values in
JSON syntax; lists longer than twelve entries are printed one item per line.

## Input files

Group specification (`h1`):

```
{"n": 6, "identity": 0, "mul": [[...], ...], "action": [...], "normal": [...]}
```

`mul[i][j]` is the index of the product of elements `i` and `j`, `action`
is the involution as a permutation of `0..n-1`, and the optional `normal`
lists a normal, action-stable subgroup (used by `--use-normal`).  Tables are
checked exhaustively on load (orders up to 512; the exact sequence is limited
to order 128).  `SPEC` is a path, or the name of a shipped corpus entry such
as `s3_triv_n3_1`.

Matrix file (`h1z`): `{"matrix": [[...], ...]}` or a bare list of rows; the
matrix must be an integer involution.

## Environment

`REALFORMS_FIXTURES`
: directory searched for corpus names instead of the shipped corpus.

## Commands

### lattice

Gram matrix, canonical class, `K.K` and simple roots of the plane blown up
at `R` points.  `--kperp` adds rank, determinant, parity and signature of
the complement of `K` (needs `R >= 3`).  `--roots` and `--exceptional`
enumerate classes with square -2 and `K`-degree 0, resp. square -1 and
`K`-degree -1; for `R >= 9` the list is cut at `--cap` (default 1000) and
marked truncated.  `--order` gives the Weyl group order (`3 <= R <= 8`).

""")
P(block("lattice --r 0"))
P(block("lattice --r 3 --roots --order"))
P(block("lattice --r 10 --kperp"))
P(block("lattice --r 9 --order"))
P("""
### entropy

Characteristic polynomial and a certified spectral-radius interval of the
product of simple reflections given by `--word` (indices separated by spaces
or commas, or `coxeter` for `0 1 ... R-1`).  The interval has width at most
`--eps` (default `1/1000000`); when the root is not an integer it is a cell
`(k eps, (k+1) eps]` of the eps-grid.  `positive_entropy` is decided by exact
sign tests.  `--assert-positive` exits 3 when the entropy is zero.

""")
P(block("entropy --r 10 --word coxeter --eps 1/100000"))
P(block("entropy --r 5 --word 0,1,2,3"))
P(block("entropy --r 9 --assert-positive"))
P("""
### h1

Cocycles, classes and class sizes of `H^1(Z/2, B)`.  With `--normal` (or
`--use-normal`) also the six-term sequence `A^G, B^G, C^G, H1(A), H1(B),
H1(C)` for `C = B/A`, the maps between consecutive terms (as positions in
the target), one exactness verdict per node and the fibre decomposition of
`H1(B) -> H1(C)`.  `--assert-exact` exits 3 unless every node is exact.

""")
P(block("h1 z3_u2_n3_1"))
P(block("h1 docs/samples/s3_trivial.json --use-normal"))
P(block("h1 s3_triv_n3_1 --normal 0,1"))
P("""
### h1z

Invariant factors and order of `H^1(Z/2, Z^k)` for an integer involution,
and the rank of the fixed lattice.  `--oracle` recounts by brute force in the
box `[-N, N]^k` (`k <= 6`).

""")
P(block("h1z docs/samples/diag.json --oracle"))
P("""
### freeproduct

`H^1` of Z/2 acting on a free product of copies of Z, each factor acted on
by `n -> s n`, as the pushout of the factors' pointed sets.  Pushout
elements are tuples with at most one non-base coordinate.

""")
P(block("freeproduct --signs -1,+1"))
P("""
The same command in JSON mode (the `timing` value varies from run to run;
everything else is reproduced exactly):

""")
P(jblock("freeproduct --signs -1,-1 --format json"))
P(block("freeproduct --signs -1"))
open("docs/cli.md", "w").write("".join(parts))
