"""
Formatters for configurations, traces, reports and transition graphs
"""

import json
from typing import Any, Dict, Iterable, Iterator, List, Optional

from helper_utilities.constants import LabConstants


class DataFormatter:
    """Deterministic JSON output"""

    @staticmethod
    def to_json(data: Dict[str, Any], schema_version: int = LabConstants.SCHEMA_VERSION) -> str:
        payload = dict(data)
        payload["schemaVersion"] = schema_version
        return json.dumps(payload, indent=2, sort_keys=True, default=str)


class ConfigurationFormatter:
    """Pair notation (wl,wr) for integer-encoded double-cycle configurations"""

    @staticmethod
    def words(value: int, n: int, m: int) -> Dict[str, str]:
        hub = str(value & 1)
        left = hub + "".join(str((value >> i) & 1) for i in range(1, n))
        right = hub + "".join(str((value >> (n - 1 + k)) & 1) for k in range(1, m))
        return {"left": left, "right": right}

    @staticmethod
    def to_pair(value: int, n: int, m: int) -> str:
        words = ConfigurationFormatter.words(value, n, m)
        return f"({words['left']},{words['right']})"

    @staticmethod
    def automaton_name(index: int, n: int) -> str:
        if index == 0:
            return "c"
        if index < n:
            return f"l{index}"
        return f"r{index - n + 1}"


class TraceFormatter:
    """Line-oriented text and JSON renderings of a run"""

    @staticmethod
    def to_text(trace, n: int, m: int) -> str:
        lines = [f"start {ConfigurationFormatter.to_pair(trace.start.value, n, m)}"]
        for step, record in enumerate(trace.updates, start=1):
            name = ConfigurationFormatter.automaton_name(record.automaton, n)
            marker = "" if record.effective else " (no change)"
            lines.append(f"({step}, {name}, {record.old}→{record.new}){marker}")
        lines.append(f"final {ConfigurationFormatter.to_pair(trace.final.value, n, m)}")
        lines.append(f"attempted {trace.attempted_count}, effective {trace.effective_count}")
        if not trace.certified:
            lines.append("uncertified: start is outside the sequence's proven precondition")
        for variant in trace.variants:
            lines.append(f"variant: {variant}")
        for note in trace.annotations:
            lines.append(f"note: {note}")
        return "\n".join(lines)

    @staticmethod
    def to_dict(trace, n: int, m: int) -> Dict[str, Any]:
        data = trace.to_dict()
        data["start"] = ConfigurationFormatter.to_pair(trace.start.value, n, m)
        data["final"] = ConfigurationFormatter.to_pair(trace.final.value, n, m)
        return data


class ReportFormatter:
    """Dynamics summaries and verification tables"""

    @staticmethod
    def dynamics_dict(kind: str, n: int, m: int, attractors, transient_count: int,
                      network_time: int,
                      sample_size: int = LabConstants.ATTRACTOR_SAMPLE_MEMBERS) -> Dict[str, Any]:
        return {
            "kind": kind,
            "n": n,
            "m": m,
            "attractors": [
                {
                    "size": attractor.size,
                    "kind": attractor.kind.value,
                    "sampleMembers": [
                        ConfigurationFormatter.to_pair(member, n, m)
                        for member in attractor.members[:sample_size]
                    ],
                }
                for attractor in attractors
            ],
            "transientCount": transient_count,
            "networkConvergenceTime": network_time,
        }

    @staticmethod
    def dynamics_text(summary: Dict[str, Any]) -> str:
        attractors = summary["attractors"]
        noun = "attractor" if len(attractors) == 1 else "attractors"
        lines = [
            f"{summary['kind']} double-cycle n={summary['n']} m={summary['m']}: {len(attractors)} {noun}"
        ]
        for attractor in attractors:
            if attractor["size"] == 1:
                lines.append(f"  size 1: {attractor['sampleMembers'][0]}")
            else:
                sample = ", ".join(attractor["sampleMembers"])
                lines.append(f"  size {attractor['size']}, oscillation: {sample}, ...")
        lines.append(f"transient configurations: {summary['transientCount']}")
        lines.append(f"network convergence time: {summary['networkConvergenceTime']}")
        return "\n".join(lines)

    @staticmethod
    def verification_table(report) -> str:
        header = ["suite", "check", "n", "m", "kind", "result", "measured", "expected"]
        rows = [header]
        for case in report.cases:
            rows.append([
                case.suite,
                case.check,
                str(case.n),
                str(case.m),
                case.kind,
                "PASS" if case.passed else "FAIL",
                ReportFormatter._compact(case.measured),
                ReportFormatter._compact(case.expected),
            ])
        widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
        lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
        lines.insert(1, "  ".join("-" * width for width in widths))
        for case in report.cases:
            for note in case.notes:
                lines.append(f"note [{case.check} n={case.n} m={case.m}]: {note}")
        summary = report.summary()
        lines.append(f"{summary['passed']} passed, {summary['failed']} failed")
        return "\n".join(lines)

    @staticmethod
    def _compact(values: Dict[str, Any]) -> str:
        return ", ".join(f"{key}={values[key]}" for key in sorted(values))


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


class GraphFormatter:
    """Graphviz rendering of a transition graph"""

    @staticmethod
    def to_dot(graph, n: int, m: int, recurrent: Optional[Iterable[int]] = None) -> Iterator[str]:
        """
        Produce the dot text as an iterable of lines.

        One node per configuration labelled in pair notation, one edge per
        effective transition labelled with the updated automaton. Recurrent
        configurations are drawn filled.
        """
        recurrent_set = set(recurrent or ())
        yield "digraph transitions {\n"
        yield "  node [shape=box fontname=monospace];\n"
        for x in range(graph.state_count):
            label = _gvquote(ConfigurationFormatter.to_pair(x, n, m))
            if x in recurrent_set:
                yield (f'  {x} [label={label} style=filled '
                       f'fillcolor={LabConstants.DOT_ATTRACTOR_COLOR} fontcolor=white];\n')
            else:
                yield f"  {x} [label={label}];\n"
        for x, y, automaton in graph.edges():
            name = _gvquote(ConfigurationFormatter.automaton_name(automaton, n))
            yield f"  {x} -> {y} [label={name}];\n"
        yield "}\n"

    @staticmethod
    def render(graph, n: int, m: int, recurrent: Optional[Iterable[int]] = None) -> str:
        return "".join(GraphFormatter.to_dot(graph, n, m, recurrent))


class SignFormatter:
    @staticmethod
    def to_word(signs: Iterable[int]) -> str:
        return "".join("+" if s > 0 else "-" for s in signs)

    @staticmethod
    def flips_table(flips: List[bool], permutation: List[int], n: int) -> str:
        lines = ["automaton  flip  becomes"]
        for index, (flip, target) in enumerate(zip(flips, permutation)):
            lines.append(
                f"{ConfigurationFormatter.automaton_name(index, n):<9}  {int(flip):<4}  {target}"
            )
        return "\n".join(lines)
