"""Command-line entry point: ``mullat <subcommand> ...``.

Exit codes: 0 success, 1 input error, 2 verification failure or class shortfall.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .decomposition import all_minimal_decompositions, find_minimal_decomposition, uniqueness_set
from .errors import MullatError, SaturationIsTop
from .mult import AxiomClass, MultiplicativeLattice, classify_lattice, mult_from_json, mult_to_json, product_mult
from .reports import PropertyReport, VerdictBundle
from .s_theory import MClosedSet, classify_element, meeting_member, saturation, top_set, validate_mclosed
from .theorems import LIMITATION, summarize, sweep_zn, verify_instance

log = logging.getLogger("mullat")


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    lattice_path: str | None = None
    zn: int | None = None
    s_spec: str | None = None
    element: str | None = None
    fmt: str = "json"
    verbosity: int = 0
    enumerate_all: bool = False
    max_components: int | None = None
    require: str | None = None
    sweep: tuple[int, int] | None = None
    max_s: int = 6
    verify: bool = False
    tables: bool = False
    classify: str = "all"
    sources: tuple[str, ...] = ()

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        cfg = cls(ns.command)
        cfg.lattice_path = getattr(ns, "lattice", None)
        cfg.zn = getattr(ns, "zn", None)
        cfg.s_spec = getattr(ns, "s", None)
        cfg.element = getattr(ns, "element", None)
        cfg.fmt = getattr(ns, "format", "json")
        cfg.verbosity = getattr(ns, "verbose", 0)
        cfg.enumerate_all = getattr(ns, "all", False)
        cfg.max_components = getattr(ns, "max_components", None)
        cfg.require = getattr(ns, "require", None)
        cfg.max_s = getattr(ns, "max_s", 6)
        cfg.verify = getattr(ns, "verify", False)
        cfg.tables = getattr(ns, "tables", False)
        cfg.classify = getattr(ns, "classify", "all")
        cfg.sources = tuple(getattr(ns, "sources", ()) or ())
        sweep = getattr(ns, "sweep_zn", None)
        if sweep:
            cfg.sweep = parse_range(sweep)
        n_sources = (cfg.lattice_path is not None) + (cfg.zn is not None) + (cfg.sweep is not None)
        if cfg.subcommand not in ("product",) and n_sources != 1:
            raise InputError("give exactly one lattice source: --lattice FILE, --zn N (or --sweep-zn A..B for verify)")
        return cfg


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise InputError(f"bad range {text!r}, expected A..B") from None
    if lo < 2 or hi < lo:
        raise InputError(f"bad range {text!r}")
    return lo, hi


# loading -------------------------------------------------------------------


@dataclass
class Source:
    M: MultiplicativeLattice
    zn: int | None = None


def load_source(cfg: RunConfig) -> Source:
    from .ring_bridge import ideal_lattice_zn

    if cfg.zn is not None:
        return Source(ideal_lattice_zn(cfg.zn).M, cfg.zn)
    return Source(load_lattice_file(cfg.lattice_path))


def load_lattice_file(path: str) -> MultiplicativeLattice:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    return mult_from_json(data)


def load_spec_source(spec: str) -> MultiplicativeLattice:
    from .ring_bridge import ideal_lattice_zn

    if spec.startswith("zn:"):
        return ideal_lattice_zn(int(spec[3:])).M
    return load_lattice_file(spec)


def resolve_element(src: Source, text: str) -> int:
    M = src.M
    text = text.strip()
    if src.zn is not None:
        from .ring_bridge import ideal_lattice_zn

        body = text[1:-1] if text.startswith("(") and text.endswith(")") else text
        try:
            return ideal_lattice_zn(src.zn).index(int(body))
        except ValueError:
            raise InputError(f"{text!r} does not name an ideal of Z_{src.zn}") from None
    if text in M.labels:
        return M.labels.index(text)
    if f"({text})" in M.labels:
        return M.labels.index(f"({text})")
    if text == "top":
        return M.top
    if text == "bottom":
        return M.bottom
    raise InputError(f"no element labelled {text!r}")


def resolve_s(src: Source, spec: str | None) -> tuple[MClosedSet, list[int] | None]:
    """S on the lattice, plus the ring-side residues when the source is Z_n."""
    if spec is None and src.zn is not None:
        spec = "1"
    if spec is None or (src.zn is None and spec.strip() in ("", "top")):
        return top_set(src.M), None
    parts = [p for p in spec.split(",") if p.strip()]
    if src.zn is not None:
        from .ring_bridge import lift_mult_set

        try:
            residues = sorted({int(p) % src.zn for p in parts})
        except ValueError:
            raise InputError(f"--s for Z_n takes residues, got {spec!r}") from None
        return lift_mult_set(src.zn, residues), residues
    return validate_mclosed(src.M, [resolve_element(src, p) for p in parts]), None


# output --------------------------------------------------------------------


def emit(cfg: RunConfig, payload: dict, table: str | None = None) -> None:
    if cfg.fmt == "table" and table is not None:
        print(table)
    else:
        print(json.dumps(payload, indent=2))


def _report_lines(reports: list[PropertyReport], labels) -> str:
    lines = []
    for r in reports:
        d = r.to_dict(labels)
        extra = d.get("counterexample") or d.get("skipped") or ""
        lines.append(f"{r.name:<32} {r.status:<5} {extra}")
    return "\n".join(lines)


def _render_rows(rows: list[dict]) -> str:
    cols = list(rows[0]) if rows else []
    cells = [[("-" if r.get(c) is None else str(r.get(c))) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    head = "  ".join(c.ljust(w) for c, w in zip(cols, widths))
    body = ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join([head, *body])


# commands ------------------------------------------------------------------


def cmd_check_axioms(cfg: RunConfig) -> int:
    src = load_source(cfg)
    cls, reports = classify_lattice(src.M)
    payload = {
        "size": src.M.size,
        "axiom_class": cls.name,
        "clauses": [r.to_dict(src.M.labels) for r in reports.values()],
    }
    code = 0
    if cfg.require:
        need = AxiomClass.parse(cfg.require)
        payload["required"] = need.name
        payload["requirement_met"] = cls >= need
        code = 0 if cls >= need else 2
    emit(cfg, payload, f"axiom_class: {cls.name}\n" + _report_lines(list(reports.values()), src.M.labels))
    return code


def cmd_analyze(cfg: RunConfig) -> int:
    src = load_source(cfg)
    S, residues = resolve_s(src, cfg.s_spec)
    M = src.M
    if cfg.classify == "all":
        xs = list(M.elements)
    else:
        xs = [resolve_element(src, t) for t in cfg.classify.split(",")]
    rows = [classify_element(M, S, x) for x in xs]
    payload = {
        "axiom_class": M.axiom_class.name,
        "S": S.labels(),
        "elements": rows,
    }
    if residues is not None:
        payload["S_ring"] = residues
    if M.axiom_class < AxiomClass.C_LATTICE:
        payload["gating"] = "V-lattice only: S-prime and S-irreducible reported, radical-dependent notions withheld"
    emit(cfg, payload, _render_rows(rows))
    return 0


def cmd_decompose(cfg: RunConfig) -> int:
    src = load_source(cfg)
    if cfg.element is None:
        raise InputError("decompose needs --element")
    S, _ = resolve_s(src, cfg.s_spec)
    M = src.M
    lab = M.labels
    a = resolve_element(src, cfg.element)
    sat = saturation(M, S, a)
    payload: dict = {
        "target": lab[a],
        "S": S.labels(),
        "saturation": lab[sat],
        "eligible": {"saturation_below_top": sat != M.top, "s_avoids_target": meeting_member(S, a) is None},
    }
    if sat == M.top:
        raise SaturationIsTop(f"{lab[a]} has S-saturation equal to the top element", witness=(a,))
    d = find_minimal_decomposition(M, S, a)
    payload["decomposition"] = None if d is None else d.to_dict(lab)
    P = uniqueness_set(M, S, a)
    payload["P"] = [lab[p] for p in sorted(P)]
    decs = all_minimal_decompositions(M, S, a, cfg.max_components)
    if cfg.enumerate_all:
        payload["decompositions"] = [x.to_dict(lab) for x in decs]
    agree = bool(decs) and all(set(x.saturated_radicals) == P for x in decs)
    payload["uniqueness"] = {"minimal_decompositions": len(decs), "agrees_with_P": agree}
    table = None
    if d is not None:
        table = (
            f"target: {lab[a]}\ncomponents: {', '.join(lab[q] for q in d.components)}\n"
            f"radicals: {', '.join(lab[p] for p in d.radicals)}\n"
            f"saturated radicals: {', '.join(lab[p] for p in d.saturated_radicals)}\n"
            f"minimal: {d.minimal}\nP: {', '.join(payload['P'])}\nuniqueness agrees: {agree}"
        )
    emit(cfg, payload, table)
    return 0 if agree or not decs else 2


def _bundle_payload(bundle: VerdictBundle, labels) -> dict:
    return bundle.to_dict(labels)


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.sweep is not None:
        lo, hi = cfg.sweep
        items = sweep_zn(lo, hi, cfg.max_s)
        failed = [it for it in items if not it.passed]
        payload = {
            "sweep": [lo, hi],
            "max_s": cfg.max_s,
            "instances": len(items),
            "distinct_lattice_instances": len({(it.n, it.s_lattice) for it in items}),
            "passed": len(items) - len(failed),
            "checks": summarize(items),
            "failed": [
                {"n": it.n, "S": list(it.s_ring), "failures": list(it.failures)} for it in failed
            ],
            "notes": [LIMITATION],
        }
        if cfg.verbosity:
            payload["items"] = [
                {"n": it.n, "S": list(it.s_ring), "S_L": list(it.s_lattice), "passed": it.passed} for it in items
            ]
        emit(cfg, payload, f"instances: {len(items)}\npassed: {len(items) - len(failed)}\nfailed: {len(failed)}")
        return 0 if not failed else 2
    src = load_source(cfg)
    S, residues = resolve_s(src, cfg.s_spec)
    bundle = verify_instance(src.M, S)
    if residues is not None:
        from .ring_bridge import verify_correspondence

        bundle.reports.insert(0, verify_correspondence(src.zn, residues))
    payload = {"axiom_class": src.M.axiom_class.name, "S": S.labels(), **_bundle_payload(bundle, src.M.labels)}
    emit(cfg, payload, _report_lines(bundle.reports, src.M.labels))
    return 0 if bundle.passed else 2


def cmd_zn(cfg: RunConfig) -> int:
    from .mult import radical
    from .ring_bridge import (
        ideal_lattice_zn,
        lattice_classification,
        ring_radical,
        ring_s_irreducible_ideals,
        ring_s_primary_ideals,
        ring_s_prime_ideals,
        verify_correspondence,
    )

    n = cfg.zn
    Z = ideal_lattice_zn(n)
    src = Source(Z.M, n)
    S, residues = resolve_s(src, cfg.s_spec or "1")
    M = Z.M

    def names(ideals):
        return sorted((I.label for I in ideals), key=M.labels.index)

    l_prime, l_primary, l_irred = lattice_classification(n, S.members)
    payload = {
        "n": n,
        "lattice": mult_to_json(M, cfg.tables),
        "axiom_class": M.axiom_class.name,
        "S_ring": residues,
        "S_L": S.labels(),
        "ring": {
            "s_prime": names(ring_s_prime_ideals(n, residues)),
            "s_primary": names(ring_s_primary_ideals(n, residues)),
            "s_irreducible": names(ring_s_irreducible_ideals(n, residues)),
            "radical": {
                M.labels[x]: _residues_label(n, ring_radical(n, Z.ideal(x).residues)) for x in M.elements
            },
        },
        "lattice_side": {
            "s_prime": names(l_prime),
            "s_primary": names(l_primary),
            "s_irreducible": names(l_irred),
            "radical": {M.labels[x]: M.labels[radical(M, x)] for x in M.elements},
        },
    }
    code = 0
    if cfg.verify:
        r = verify_correspondence(n, residues)
        payload["correspondence"] = r.to_dict(M.labels)
        code = 0 if r.passed else 2
    emit(cfg, payload)
    return code


def _residues_label(n: int, residues: frozenset[int]) -> str:
    from .ring_bridge import zn_label

    nonzero = [r for r in residues if r]
    return zn_label(n, min(nonzero) if nonzero else n)


def cmd_product(cfg: RunConfig) -> int:
    if len(cfg.sources) != 2:
        raise InputError("product takes exactly two sources (zn:N or a JSON file)")
    P = product_mult(load_spec_source(cfg.sources[0]), load_spec_source(cfg.sources[1]))
    payload = {"axiom_class": P.axiom_class.name, **mult_to_json(P, cfg.tables)}
    emit(cfg, payload)
    return 0


COMMANDS = {
    "check-axioms": cmd_check_axioms,
    "analyze": cmd_analyze,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "zn": cmd_zn,
    "product": cmd_product,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mullat", description="Finite multiplicative lattices and S-primary decomposition.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, source=True, s=True):
        if source:
            sp.add_argument("--lattice", metavar="FILE", help="lattice JSON (plain or with 'mult')")
            sp.add_argument("--zn", type=int, metavar="N", help="use the ideal lattice of Z_N")
        if s:
            sp.add_argument("--s", metavar="LIST", help="S: residues for --zn, element labels for --lattice")
        sp.add_argument("--format", choices=("json", "table"), default="json")
        sp.add_argument("-v", "--verbose", action="count", default=0)

    sp = sub.add_parser("check-axioms", help="classify the multiplication")
    common(sp, s=False)
    sp.add_argument("--require", metavar="CLASS", help="v-lattice | multiplicative | c-lattice | r-lattice")

    sp = sub.add_parser("analyze", help="classify every element relative to S")
    common(sp)
    sp.add_argument("--classify", default="all", help="'all' or a comma list of element labels")

    sp = sub.add_parser("decompose", help="minimal S-primary decomposition of one element")
    common(sp)
    sp.add_argument("--element", required=True, metavar="LABEL")
    sp.add_argument("--all", action="store_true", help="enumerate all minimal decompositions")
    sp.add_argument("--max-components", type=int, default=None)

    sp = sub.add_parser("verify", help="run the theorem suite")
    common(sp)
    sp.add_argument("--sweep-zn", metavar="A..B")
    sp.add_argument("--max-s", type=int, default=6)

    sp = sub.add_parser("zn", help="Id(Z_n), S_L, and both-sided classification tables")
    sp.add_argument("--n", "--zn", dest="zn", type=int, required=True)
    sp.add_argument("--s", metavar="RESIDUES")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--tables", action="store_true", help="include meet/join tables")
    sp.add_argument("--format", choices=("json",), default="json")
    sp.add_argument("-v", "--verbose", action="count", default=0)

    sp = sub.add_parser("product", help="product of two multiplicative lattices")
    sp.add_argument("sources", nargs=2, metavar="SRC", help="zn:N or a lattice JSON file")
    sp.add_argument("--tables", action="store_true")
    sp.add_argument("--format", choices=("json",), default="json")
    sp.add_argument("-v", "--verbose", action="count", default=0)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * getattr(ns, "verbose", 0), format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig.from_args(ns)
        return COMMANDS[cfg.subcommand](cfg)
    except (InputError, MullatError, ValueError, KeyError, OSError) as exc:
        kind = type(exc).__name__
        print(json.dumps({"error": kind, "message": str(exc)}), file=sys.stdout)
        print(f"mullat: {kind}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
