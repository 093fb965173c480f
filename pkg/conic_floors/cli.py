"""Command-line front end: one invariant query per invocation."""
import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, ValidationError

from conic_floors.absolute import (
    ProviderTable,
    X81Provider,
    gw_plane,
    gw_x6_terms,
    gw_x7_terms,
    gw_x8_terms,
    w_plane_terms,
    w_x6_terms,
    w_x7_terms,
    w_x8_terms,
)
from conic_floors.cache import InvariantCache
from conic_floors.config import config
from conic_floors.diagrams.base import FloorDiagram
from conic_floors.diagrams.dot import to_dot
from conic_floors.exceptions import (
    ConicFloorsError,
    DomainError,
    MissingProviderKeysError,
    ParseError,
)
from conic_floors.homology import MultiSeq, SurfaceClass, SurfaceModel
from conic_floors.logger import logger
from conic_floors.relative.complex import InvariantQuery, diagram_breakdown, gw_relative
from conic_floors.relative.real import RealType, fw, real_breakdown
from conic_floors.schema import (
    Command,
    FwVariant,
    OutputFormat,
    QueryResult,
    Term,
    X6Structure,
    X7Structure,
    X8Structure,
    engine_stats,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_MISSING_KEYS = 4

# fields that determine the value; output options are left out of the canonical form
QUERY_FIELDS = {
    "command",
    "n",
    "kappa",
    "epsilon",
    "structure",
    "d",
    "genus",
    "s",
    "alpha",
    "beta",
    "alpha_re",
    "beta_re",
    "alpha_im",
    "beta_im",
    "variant",
    "provider",
}

ABSOLUTE_N = {
    Command.GW_X6: 6,
    Command.W_X6: 6,
    Command.GW_X7: 7,
    Command.W_X7: 7,
    Command.GW_X8: 8,
    Command.W_X8: 8,
}

STRUCTURE_ENUMS = {
    Command.W_X6: X6Structure,
    Command.W_X7: X7Structure,
    Command.W_X8: X8Structure,
}


class QuerySpec(BaseModel, frozen=True):
    command: Command
    n: Optional[int] = Field(None, ge=0, le=8)
    kappa: int = Field(0, ge=0)
    epsilon: int = 0
    structure: Optional[str] = None
    d: str = Field(..., description="Class literal a:mu1,...,mun")
    genus: int = Field(0, ge=0)
    s: int = Field(0, ge=0)
    alpha: str = ""
    beta: str = ""
    alpha_re: str = ""
    beta_re: str = ""
    alpha_im: str = ""
    beta_im: str = ""
    variant: FwVariant = FwVariant.PLAIN
    provider: Optional[str] = None
    format: OutputFormat = OutputFormat.TEXT
    terms: bool = False
    stats: bool = False
    verify: bool = False
    cache: Optional[str] = None

    def canonical(self) -> str:
        return self.model_dump_json(include=QUERY_FIELDS)

    @classmethod
    def from_canonical(cls, text: str) -> "QuerySpec":
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise ParseError(f"malformed query {text!r}") from e

    def surface(self) -> SurfaceModel:
        if self.command in ABSOLUTE_N:
            return SurfaceModel.absolute(ABSOLUTE_N[self.command])
        n = self.n if self.n is not None else self._coefficient_count()
        if self.command in (Command.GW_PLANE, Command.W_PLANE):
            return SurfaceModel.absolute(n)
        return SurfaceModel.tilde(n)

    def _coefficient_count(self) -> int:
        _, sep, tail = self.d.partition(":")
        return len(tail.split(",")) if sep and tail.strip() else 0

    def surface_class(self) -> SurfaceClass:
        return SurfaceClass.parse(self.d, self.surface())

    def parsed_structure(self):
        enum = STRUCTURE_ENUMS.get(self.command)
        if enum is None:
            return None, self.kappa
        name, _, value = (self.structure or "kappa").partition("=")
        try:
            structure = enum(name.strip())
            kappa = int(value) if value.strip() else self.kappa
        except ValueError as e:
            raise ParseError(f"unknown structure {self.structure!r} for {self.command.value}") from e
        return structure, kappa

    def real_type(self) -> RealType:
        return RealType(
            alpha_re=MultiSeq.parse(self.alpha_re),
            beta_re=MultiSeq.parse(self.beta_re),
            alpha_im=MultiSeq.parse(self.alpha_im),
            beta_im=MultiSeq.parse(self.beta_im),
            s=self.s,
            kappa=self.kappa,
        )


class Evaluation(BaseModel):
    value: int
    terms: List[Term] = []
    diagrams: List[FloorDiagram] = []


def diagram_label(diagram: FloorDiagram) -> str:
    floors = ",".join(str(f) for f in diagram.floors)
    edges = ",".join(
        f"{e.tail}>{e.head}" + (f"w{e.weight}" if e.weight > 1 else "") for e in diagram.edges
    )
    sources = ",".join(
        f"{s.floor}{s.kind.value[0] if s.kind else ''}w{s.weight}" for s in diagram.sources
    )
    return f"floors({floors}) edges({edges}) sources({sources})"


def _breakdown(rows: List[Tuple[FloorDiagram, int]], value: int) -> Evaluation:
    return Evaluation(
        value=value,
        terms=[Term(label=diagram_label(diagram), value=v) for diagram, v in rows],
        diagrams=[diagram for diagram, _ in rows],
    )


def _summed(terms: List[Term]) -> Evaluation:
    return Evaluation(value=sum(t.value for t in terms), terms=terms)


def _provider(spec: QuerySpec) -> X81Provider:
    if spec.provider:
        return X81Provider(ProviderTable.load(Path(spec.provider)))
    return X81Provider()


def _wants_diagrams(spec: QuerySpec) -> bool:
    return spec.terms or spec.format == OutputFormat.DOT or spec.command == Command.DIAGRAMS


def _gw_rel(spec: QuerySpec) -> Evaluation:
    q = InvariantQuery(
        d=spec.surface_class(),
        genus=spec.genus,
        alpha=MultiSeq.parse(spec.alpha),
        beta=MultiSeq.parse(spec.beta),
    )
    value = gw_relative(q)
    if not _wants_diagrams(spec):
        return Evaluation(value=value)
    return _breakdown(diagram_breakdown(q), value)


def _fw(spec: QuerySpec) -> Evaluation:
    if spec.genus:
        raise DomainError("real counts are only defined in genus 0")
    d, rt = spec.surface_class(), spec.real_type()
    value = fw(d, rt, spec.variant, spec.epsilon)
    if not _wants_diagrams(spec):
        return Evaluation(value=value)
    return _breakdown(real_breakdown(d, rt, spec.variant, spec.epsilon), value)


def _gw_plane(spec: QuerySpec) -> Evaluation:
    d = spec.surface_class()
    value = gw_plane(d, spec.genus)
    return Evaluation(value=value, terms=[Term(label=str(d), value=value)])


def _w_plane(spec: QuerySpec) -> Evaluation:
    return _summed(w_plane_terms(spec.surface_class(), spec.s, spec.kappa))


def _gw_absolute(terms_of: Callable[..., List[Term]]) -> Callable[[QuerySpec], Evaluation]:
    def evaluate(spec: QuerySpec) -> Evaluation:
        return _summed(terms_of(spec.surface_class(), spec.genus))

    return evaluate


def _w_absolute(terms_of: Callable[..., List[Term]]) -> Callable[[QuerySpec], Evaluation]:
    def evaluate(spec: QuerySpec) -> Evaluation:
        structure, kappa = spec.parsed_structure()
        return _summed(terms_of(structure, spec.surface_class(), spec.s, kappa, spec.epsilon))

    return evaluate


def _gw_x8(spec: QuerySpec) -> Evaluation:
    return _summed(gw_x8_terms(spec.surface_class(), spec.genus, _provider(spec)))


def _w_x8(spec: QuerySpec) -> Evaluation:
    structure, kappa = spec.parsed_structure()
    return _summed(
        w_x8_terms(structure, spec.surface_class(), kappa, spec.epsilon, spec.s, _provider(spec))
    )


COMMANDS: Dict[Command, Callable[[QuerySpec], Evaluation]] = {
    Command.GW_REL: _gw_rel,
    Command.FW: _fw,
    Command.DIAGRAMS: _gw_rel,
    Command.GW_PLANE: _gw_plane,
    Command.W_PLANE: _w_plane,
    Command.GW_X6: _gw_absolute(gw_x6_terms),
    Command.W_X6: _w_absolute(w_x6_terms),
    Command.GW_X7: _gw_absolute(gw_x7_terms),
    Command.W_X7: _w_absolute(w_x7_terms),
    Command.GW_X8: _gw_x8,
    Command.W_X8: _w_x8,
}


def _write_text(result: QueryResult, evaluation: Evaluation) -> str:
    lines = [str(result.value)]
    for term in result.terms or []:
        lines.append(f"{term.value}\t{term.label}")
    if result.stats is not None:
        stats = result.stats
        lines.append(
            f"diagrams={stats.diagrams} markings={stats.markings} cache_hits={stats.cache_hits}"
        )
    return "\n".join(lines) + "\n"


def _write_json(result: QueryResult, evaluation: Evaluation) -> str:
    return result.model_dump_json(indent=2, exclude_none=True) + "\n"


def _write_csv(result: QueryResult, evaluation: Evaluation) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(["label", "value"])
    for term in result.terms or []:
        writer.writerow([term.label, term.value])
    writer.writerow(["total", result.value])
    return buffer.getvalue()


def _write_dot(result: QueryResult, evaluation: Evaluation) -> str:
    if not evaluation.diagrams:
        raise ParseError("dot output needs a command that produces floor diagrams")
    return "".join(to_dot(diagram, name=f"D{i}") for i, diagram in enumerate(evaluation.diagrams))


WRITERS: Dict[OutputFormat, Callable[[QueryResult, Evaluation], str]] = {
    OutputFormat.TEXT: _write_text,
    OutputFormat.JSON: _write_json,
    OutputFormat.CSV: _write_csv,
    OutputFormat.DOT: _write_dot,
}


def _cache_path(spec: QuerySpec) -> Optional[Path]:
    if spec.cache:
        return Path(spec.cache)
    return config.cache_path if config.cache.enabled else None


def evaluate(spec: QuerySpec) -> Tuple[QueryResult, Evaluation]:
    engine_stats.reset()
    evaluation = COMMANDS[spec.command](spec)
    result = QueryResult(
        query=spec.canonical(),
        value=evaluation.value,
        terms=evaluation.terms if spec.terms else None,
        stats=engine_stats.snapshot() if spec.stats else None,
    )
    logger.info(f"{spec.command.value} = {evaluation.value} ({engine_stats.model_dump()})")
    return result, evaluation


def run(spec: QuerySpec) -> Tuple[int, str]:
    """Evaluate ``spec``; returns the exit status and the text for stdout or stderr"""
    path = _cache_path(spec)
    InvariantCache.verify = spec.verify
    try:
        if path is not None:
            InvariantCache.load(path)
        result, evaluation = evaluate(spec)
        output = WRITERS[spec.format](result, evaluation)
        if path is not None:
            InvariantCache.save(path)
    except MissingProviderKeysError as e:
        return EXIT_MISSING_KEYS, f"error: missing-provider-keys: {'; '.join(e.keys)}\n"
    except ParseError as e:
        return EXIT_PARSE, f"error: parse: {e}\n"
    except DomainError as e:
        return EXIT_DOMAIN, f"error: domain: {e}\n"
    except ValidationError as e:
        return EXIT_PARSE, f"error: parse: {e.errors()[0]['msg']}\n"
    except ConicFloorsError as e:
        return EXIT_FAILURE, f"error: {type(e).__name__}: {e}\n"
    return EXIT_OK, output


def _variant(text: str) -> FwVariant:
    variants = {v.value.replace("-", ""): v for v in FwVariant}
    key = text.replace("-", "").lower()
    if key not in variants:
        raise argparse.ArgumentTypeError(f"unknown variant {text!r}")
    return variants[key]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conic-floors",
        description="Gromov-Witten and Welschinger invariants of del Pezzo surfaces from floor diagrams",
    )
    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("--n", type=int, default=None, help="Number of blown-up points")
    parser.add_argument("--kappa", type=int, default=0, help="Pairs of exchanged exceptional classes")
    parser.add_argument("--epsilon", type=int, default=0, choices=(0, 1))
    parser.add_argument("--structure", default=None, help="Real structure, e.g. kappa=2")
    parser.add_argument("--class", dest="d", required=True, help="Class literal a:mu1,...,mun")
    parser.add_argument("--genus", type=int, default=0)
    parser.add_argument("--s", type=int, default=0, help="Pairs of conjugate point conditions")
    for name in ("alpha", "beta", "alpha-re", "beta-re", "alpha-im", "beta-im"):
        parser.add_argument(f"--{name}", default="", help="Sequence literal such as 1^2,2^1")
    parser.add_argument("--variant", type=_variant, default=FwVariant.PLAIN)
    parser.add_argument("--provider", default=None, help="Provider table for tX81")
    parser.add_argument("--cache", default=None, help="Persistent cache file")
    parser.add_argument(
        "--format", default=OutputFormat.TEXT.value, choices=[f.value for f in OutputFormat]
    )
    parser.add_argument("--terms", action="store_true", help="Print the per-term breakdown")
    parser.add_argument("--stats", action="store_true", help="Print work counters")
    parser.add_argument("--verify", action="store_true", help="Recompute cached values")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = QuerySpec(
            command=Command(args.command),
            n=args.n,
            kappa=args.kappa,
            epsilon=args.epsilon,
            structure=args.structure,
            d=args.d,
            genus=args.genus,
            s=args.s,
            alpha=args.alpha,
            beta=args.beta,
            alpha_re=args.alpha_re,
            beta_re=args.beta_re,
            alpha_im=args.alpha_im,
            beta_im=args.beta_im,
            variant=args.variant,
            provider=args.provider,
            format=OutputFormat(args.format),
            terms=args.terms,
            stats=args.stats,
            verify=args.verify,
            cache=args.cache,
        )
    except ValidationError as e:
        sys.stderr.write(f"error: parse: {e.errors()[0]['msg']}\n")
        return EXIT_PARSE
    status, text = run(spec)
    (sys.stdout if status == EXIT_OK else sys.stderr).write(text)
    return status
