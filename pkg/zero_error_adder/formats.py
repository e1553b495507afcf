"""
Text formats for codebooks, systems and reports.

Codebook files hold one word per line as '0'/'1' characters. Blank lines
and lines starting with '#' are skipped; all words share one length and
may not repeat. Subset families use the same format (indicator vectors).

Pair files put the two codebooks of a pair in one file separated by a
line '---'. System files list codebooks separated by '---' and read them
two at a time as (C1, C2) pairs; a line '===' starts the next system.

Reports are 'key: value' lines followed by codebook blocks.
"""

import csv
from typing import IO, List, Sequence, Tuple

from .bounds import CurveRow
from .codebook import SystemVerdict, format_quadruple
from .errors import CodebookParseError, MalformedSystemError
from .pipeline import ConstructionReport, SearchResult
from .schema import Codebook, SubsetFamily, ZeroErrorSystem, word_from_str
from .validator import LemmaCheckReport, ShatteringTrendReport

PAIR_SEPARATOR = "---"
SYSTEM_SEPARATOR = "==="
CURVE_HEADER = ["r1", "shannon", "new_bound", "alpha_star", "eta_star"]


# ============================================================
# PARSING
# ============================================================

def _split_blocks(text: str, separator: str, first_line: int = 1) -> List[Tuple[int, List[str]]]:
    """Split lines on a separator line; each block keeps its starting line number"""
    blocks: List[Tuple[int, List[str]]] = [(first_line, [])]
    for offset, line in enumerate(text.splitlines()):
        number = first_line + offset
        if line.strip() == separator:
            blocks.append((number + 1, []))
        else:
            blocks[-1][1].append(line)
    return blocks


def _parse_lines(lines: Sequence[str], first_line: int) -> Codebook:
    words = []
    seen = {}
    n = None
    for offset, raw in enumerate(lines):
        number = first_line + offset
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word = word_from_str(line)
        except ValueError as e:
            raise CodebookParseError(str(e), number)
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise CodebookParseError(f"word '{line}' has length {len(line)}, expected {n}", number)
        if word in seen:
            raise CodebookParseError(f"duplicate word '{line}' (first on line {seen[word]})", number)
        seen[word] = number
        words.append(word)
    if not words:
        raise CodebookParseError(f"no codewords in block starting at line {first_line}")
    return Codebook(n=n, words=tuple(words))


def parse_codebook(text: str) -> Codebook:
    return _parse_lines(text.splitlines(), 1)


def parse_family(text: str) -> SubsetFamily:
    c = parse_codebook(text)
    return SubsetFamily(n=c.n, sets=c.words)


def parse_pair(text: str) -> Tuple[Codebook, Codebook]:
    """A single file holding C1 and C2 separated by '---'"""
    blocks = _split_blocks(text, PAIR_SEPARATOR)
    if len(blocks) != 2:
        raise CodebookParseError(f"expected two codebooks separated by '{PAIR_SEPARATOR}', found {len(blocks)}")
    return _parse_lines(blocks[0][1], blocks[0][0]), _parse_lines(blocks[1][1], blocks[1][0])


def parse_systems(text: str) -> List[ZeroErrorSystem]:
    systems = []
    for start, lines in _split_blocks(text, SYSTEM_SEPARATOR):
        books = [
            _parse_lines(block, first)
            for first, block in _split_blocks("\n".join(lines), PAIR_SEPARATOR, start)
        ]
        if len(books) % 2:
            raise MalformedSystemError(
                f"system starting at line {start} has {len(books)} codebooks; pairs need an even number"
            )
        try:
            systems.append(ZeroErrorSystem(pairs=tuple(zip(books[0::2], books[1::2]))))
        except ValueError as e:
            raise MalformedSystemError(f"system starting at line {start}: {e}")
    return systems


# ============================================================
# WRITING
# ============================================================

def format_codebook(c: Codebook) -> str:
    return "".join(w + "\n" for w in c.to_strings())


def format_family(f: SubsetFamily) -> str:
    return format_codebook(Codebook(n=f.n, words=f.sets)) if f.sets else ""


def format_system(v: ZeroErrorSystem) -> str:
    blocks = []
    for c1, c2 in v.pairs:
        blocks.append(format_codebook(c1))
        blocks.append(format_codebook(c2))
    return (PAIR_SEPARATOR + "\n").join(blocks)


def format_system_verdict(verdict: SystemVerdict, n: int) -> str:
    """ZERO-ERROR-SYSTEM or COLLISION with 1-based pair numbers"""
    if verdict.is_zero_error_system:
        return "ZERO-ERROR-SYSTEM"
    if verdict.first == verdict.second:
        return (
            f"COLLISION in pair {verdict.first + 1}: "
            f"{format_quadruple(verdict.pair_witness, n)} sum {verdict.sum_vector}"
        )
    return f"COLLISION between pairs {verdict.first + 1} and {verdict.second + 1}: sum {verdict.sum_vector}"


def format_construction_report(report: ConstructionReport) -> str:
    v = report.system
    lines = [
        f"S: {report.s.label()}",
        f"S-bar: {report.s.complement().label()}",
        f"k: {report.k}",
        f"k-prime: {report.k_prime_log}",
        f"G: {' '.join(report.g_set)}",
        f"m0: {v.m0}",
        f"m1: {v.m1}",
        f"m2: {v.m2}",
        f"alpha: {report.alpha:.6f}",
        f"mass: {report.mass}",
        f"mass-bound: {report.mass_bound:.6f} ({'holds' if report.mass_bound_holds else 'FAILS'})",
        f"log-slack: {'holds' if report.log_slack_holds else 'FAILS'}",
    ]
    rates = report.rates()
    if rates is None:
        lines.append("rates: undefined (S-bar is empty)")
    else:
        lines.append("rates: r0={:.6f} r1={:.6f} r2={:.6f}".format(*rates))
    lines.append(f"verdict: {format_system_verdict(report.verdict, v.n)}")
    lines.append("system:")
    return "\n".join(lines) + "\n" + format_system(v)


def format_search_result(result: SearchResult) -> str:
    lines = [
        f"n: {result.n}",
        f"best_product: {result.best_product}",
        f"complete: {'yes' if result.complete else 'no'}",
        f"examined: {result.examined}",
        f"witnesses: {len(result.witnesses)}",
    ]
    text = "\n".join(lines) + "\n"
    for i, (c1, c2) in enumerate(result.witnesses, start=1):
        text += f"# witness {i}\n" + format_codebook(c1) + PAIR_SEPARATOR + "\n" + format_codebook(c2)
    return text


def format_lemma_report(report: LemmaCheckReport) -> str:
    lines = [
        f"trials: {report.trials}",
        f"seed: {report.seed}",
        "r0: " + ",".join(f"{r:g}" for r in report.r0_grid),
        f"checks: {report.checks}",
        f"exact evaluations: {report.exact_evaluations}",
        f"max slack: {-report.worst_gap:.9f}",
        f"violations: {report.violations}",
    ]
    lines.extend(issue.message for issue in report.issues)
    return "\n".join(lines) + "\n"


def format_shattering_report(report: ShatteringTrendReport) -> str:
    lines = [
        f"rate: {report.rate:g}",
        f"epsilon: {report.epsilon:g}",
        f"seed: {report.seed}",
        "n  size  vc  floor  target",
    ]
    for row in report.rows:
        lines.append(f"{row.n}  {row.size}  {row.vc_dimension}  {row.lemma_floor}  {row.target:.3f}")
    lines.append(f"violations: {len(report.issues)}")
    lines.extend(issue.message for issue in report.issues)
    return "\n".join(lines) + "\n"


def write_curve_csv(rows: Sequence[CurveRow], handle: IO[str]):
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(CURVE_HEADER)
    for row in rows:
        writer.writerow([
            f"{row.r1:.6f}",
            f"{row.shannon:.9f}",
            f"{row.new_bound:.9f}",
            f"{row.alpha_star:.9f}",
            f"{row.eta_star:.9f}",
        ])
