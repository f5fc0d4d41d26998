"""Command-line front end: validate, author, compare, analyze, render, serve.

Exit-code triage, kept strict for CI pipelines:
  0  success
  1  validation failure (the input parsed but violates the rules)
  2  usage or io error (bad flags, missing files, unknown formats)
"""
from __future__ import annotations

import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import NoReturn

import click

from . import __version__
from .analytics import stats_to_doc, technique_frequency
from .attack_model import (
    Confidence,
    ModelStatus,
    TechniqueTag,
    new_model,
    parse_model,
    serialize_model,
    tag_technique,
    untag_technique,
    validate_model,
)
from .comparison import (
    DEFAULT_PALETTE,
    build_layers,
    comparison_to_doc,
    overlap,
    similarity,
)
from .errors import (
    ParseError,
    UnknownIdError,
    ValidationFailedError,
    VersionMismatchError,
)
from .render import (
    is_layers_doc,
    is_stats_doc,
    layers_to_csv,
    layers_to_svg,
    stats_to_csv,
    stats_to_svg,
)
from .repository import Repository, open_repository
from .taxonomy import (
    AdversaryClass,
    Taxonomy,
    ValidationReport,
    bundled_models_dir,
    default_taxonomy_path,
    load_taxonomy,
)

EXIT_VALIDATION = 1
EXIT_USAGE = 2

taxonomy_option = click.option(
    "--taxonomy", "taxonomy_path", envvar="BHADRA_TAXONOMY",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None, help="Taxonomy file (default: bundled canonical matrix).",
)
repo_option = click.option(
    "--repo", "repo_root", envvar="BHADRA_REPO",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    default=None, help="Model repository directory.",
)
format_option = click.option(
    "--format", "output_format", type=click.Choice(["text", "json"]),
    default="text", show_default=True, help="Output format.",
)


def _fail_validation(message: str) -> NoReturn:
    click.echo(f"FAIL: {message}", err=True)
    sys.exit(EXIT_VALIDATION)


def _fail_usage(message: str) -> NoReturn:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_USAGE)


def _echo_report(report: ValidationReport, output_format: str) -> None:
    if output_format == "json":
        click.echo(json.dumps(report.to_doc(), indent=2))
        return
    for finding in report.findings:
        click.echo(
            f"{finding.severity.value.upper():7s} {finding.code} "
            f"[{finding.subject}] {finding.message}"
        )


def _load_taxonomy_or_die(path: Path | None, strict_parse: bool = True) -> Taxonomy:
    """Load a taxonomy for commands that merely need one (not validate it)."""
    path = path or default_taxonomy_path()
    try:
        result = load_taxonomy(path)
    except ParseError as exc:
        if strict_parse:
            _fail_usage(f"cannot read taxonomy: {exc}")
        raise
    if isinstance(result, ValidationReport):
        click.echo(f"taxonomy {path} is invalid:", err=True)
        for finding in result.errors:
            click.echo(f"  {finding.code} [{finding.subject}] {finding.message}",
                       err=True)
        sys.exit(EXIT_VALIDATION)
    return result


def _open_repo(repo_root: Path | None, taxonomy: Taxonomy,
               default_bundled: bool = False) -> Repository:
    if repo_root is None:
        if not default_bundled:
            _fail_usage("a repository is required: pass --repo or set BHADRA_REPO")
        repo_root = bundled_models_dir()
    try:
        repo = open_repository(repo_root, taxonomy)
    except FileNotFoundError as exc:
        _fail_usage(str(exc))
    for finding in repo.scan_findings:
        click.echo(f"warning: {finding.subject}: {finding.message}", err=True)
    return repo


@click.group(name="bhadra")
@click.version_option(version=__version__, prog_name="bhadra")
def main() -> None:
    """Threat-matrix tooling for mobile communication systems."""


@main.command(name="taxonomy-validate")
@click.argument("path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@format_option
def taxonomy_validate(path: Path, output_format: str) -> None:
    """Check a taxonomy file against every structural invariant."""
    try:
        result = load_taxonomy(path)
    except ParseError as exc:
        if output_format == "json":
            click.echo(json.dumps({
                "status": "Invalid",
                "findings": [{"code": "PARSE_ERROR", "severity": "Error",
                              "subject": str(path), "message": str(exc)}],
            }, indent=2))
        else:
            click.echo(f"ERROR   PARSE_ERROR [{path}] {exc}")
        sys.exit(EXIT_VALIDATION)
    if isinstance(result, ValidationReport):
        _echo_report(result, output_format)
        sys.exit(EXIT_VALIDATION)
    if output_format == "json":
        click.echo(json.dumps({
            "status": "Valid",
            "version": result.version,
            "tactics": len(result.tactics),
            "techniques": len(result.techniques),
        }, indent=2))
    else:
        click.echo(
            f"OK: {len(result.tactics)} tactics, {len(result.techniques)} "
            f"techniques (taxonomy version {result.version})"
        )


@main.command(name="model-validate")
@click.argument("path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@taxonomy_option
@format_option
def model_validate(path: Path, taxonomy_path: Path | None,
                   output_format: str) -> None:
    """Validate one attack-model document against the taxonomy."""
    taxonomy = _load_taxonomy_or_die(taxonomy_path)
    try:
        model = parse_model(path)
    except ParseError as exc:
        if output_format == "json":
            click.echo(json.dumps({
                "status": "Invalid",
                "findings": [{"code": "PARSE_ERROR", "severity": "Error",
                              "subject": str(path), "message": str(exc)}],
            }, indent=2))
        else:
            click.echo(f"ERROR   PARSE_ERROR [{path}] {exc}")
        sys.exit(EXIT_VALIDATION)
    try:
        report = validate_model(model, taxonomy)
    except VersionMismatchError as exc:
        _fail_validation(str(exc))
    _echo_report(report, output_format)
    if not report.is_valid:
        sys.exit(EXIT_VALIDATION)
    if output_format == "text":
        click.echo(
            f"OK: {model.id} is {report.status} "
            f"({len(model.tags)} tags, {len(report.warnings)} warnings)"
        )


@main.command(name="model-new")
@click.argument("title")
@click.option("--adversary", "adversaries", multiple=True,
              type=click.Choice([a.value for a in AdversaryClass]),
              help="Adversary class (repeatable).")
@click.option("--id", "model_id", default=None, help="Model id (default: slug of title).")
@click.option("--summary", default="", help="One-paragraph summary.")
@click.option("--final", is_flag=True, help="Create with status Final instead of Draft.")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Write the model document to this file.")
@repo_option
@taxonomy_option
def model_new(title: str, adversaries: tuple[str, ...], model_id: str | None,
              summary: str, final: bool, output: Path | None,
              repo_root: Path | None, taxonomy_path: Path | None) -> None:
    """Create a fresh model document (Draft unless --final)."""
    taxonomy = _load_taxonomy_or_die(taxonomy_path)
    if output is None and repo_root is None:
        _fail_usage("pass -o FILE or --repo DIR to say where the model goes")
    try:
        model = new_model(
            title,
            {AdversaryClass(a) for a in adversaries},
            taxonomy,
            model_id=model_id,
            summary=summary,
        )
    except ValueError as exc:
        _fail_usage(str(exc))
    if final:
        model = replace(model, status=ModelStatus.FINAL)
    report = validate_model(model, taxonomy)
    if not report.is_valid:
        _echo_report(report, "text")
        sys.exit(EXIT_VALIDATION)
    if output is not None:
        output.write_text(serialize_model(model), encoding="utf-8")
        click.echo(f"wrote {output}")
    else:
        repo = _open_repo(repo_root, taxonomy)
        try:
            repo.put(model)
        except ValidationFailedError as exc:
            _echo_report(exc.report, "text")
            sys.exit(EXIT_VALIDATION)
        click.echo(f"stored {model.id} in {repo.root}")


@main.command(name="model-tag")
@click.argument("model_ref")
@click.argument("technique_id")
@click.option("--evidence", default="", help="Why this technique applies.")
@click.option("--confidence", type=click.Choice([c.value for c in Confidence]),
              default=Confidence.CONFIRMED.value, show_default=True)
@click.option("--remove", is_flag=True, help="Remove the tag instead of adding it.")
@repo_option
@taxonomy_option
def model_tag(model_ref: str, technique_id: str, evidence: str, confidence: str,
              remove: bool, repo_root: Path | None,
              taxonomy_path: Path | None) -> None:
    """Tag (or untag) a technique on a model document.

    MODEL_REF is a document path, or a model id when --repo is given.
    """
    taxonomy = _load_taxonomy_or_die(taxonomy_path)
    path = Path(model_ref)
    repo: Repository | None = None
    if path.is_file():
        try:
            model = parse_model(path)
        except ParseError as exc:
            _fail_validation(str(exc))
    elif repo_root is not None:
        repo = _open_repo(repo_root, taxonomy)
        try:
            model = repo.get(model_ref)
        except UnknownIdError as exc:
            _fail_usage(str(exc))
    else:
        _fail_usage(f"{model_ref!r} is not a file; pass --repo to use model ids")

    try:
        if remove:
            model = untag_technique(model, technique_id)
        else:
            tag = TechniqueTag(
                technique=technique_id,
                evidence=evidence,
                confidence=Confidence(confidence),
            )
            model = tag_technique(model, tag, taxonomy)
    except (UnknownIdError, VersionMismatchError) as exc:
        _fail_validation(str(exc))

    if repo is not None:
        try:
            repo.put(model)
        except ValidationFailedError as exc:
            _echo_report(exc.report, "text")
            sys.exit(EXIT_VALIDATION)
    else:
        path.write_text(serialize_model(model), encoding="utf-8")
    verb = "untagged" if remove else "tagged"
    click.echo(f"{verb} {technique_id} on {model.id}")


@main.command(name="compare")
@click.argument("model_refs", nargs=-1, required=True)
@click.option("--palette", default=None,
              help="Comma-separated colors; last one is the overlap color.")
@repo_option
@taxonomy_option
@format_option
def compare(model_refs: tuple[str, ...], palette: str | None,
            repo_root: Path | None, taxonomy_path: Path | None,
            output_format: str) -> None:
    """Compare two or more models (repo ids or document paths)."""
    if len(model_refs) < 2:
        _fail_usage("compare needs at least 2 models")
    taxonomy = _load_taxonomy_or_die(taxonomy_path)
    repo: Repository | None = None
    models = []
    for ref in model_refs:
        ref_path = Path(ref)
        if ref_path.is_file():
            try:
                models.append(parse_model(ref_path))
            except ParseError as exc:
                _fail_validation(str(exc))
        else:
            if repo is None:
                repo = _open_repo(repo_root, taxonomy, default_bundled=True)
            try:
                models.append(repo.get(ref))
            except UnknownIdError as exc:
                _fail_usage(str(exc))

    colors = (
        tuple(c.strip() for c in palette.split(",") if c.strip())
        if palette else DEFAULT_PALETTE
    )
    try:
        matrix = overlap(models)
        layers = build_layers(models, colors, taxonomy)
    except VersionMismatchError as exc:
        _fail_validation(str(exc))
    except ValueError as exc:
        _fail_usage(str(exc))

    doc = comparison_to_doc(matrix, layers, models[0].taxonomy_version)
    if output_format == "json":
        click.echo(json.dumps(doc, indent=2))
        return
    click.echo(f"comparing: {', '.join(matrix.models)}")
    click.echo(f"{'technique':10s} {'members':40s} color")
    for layer in layers:
        members = ",".join(sorted(layer.members))
        click.echo(f"{layer.technique:10s} {members:40s} {layer.color}")
    for i, a in enumerate(models):
        for b in models[i + 1:]:
            try:
                s = similarity(a, b)
            except ValueError:
                continue
            click.echo(f"similarity({a.id}, {b.id}) = {s:.3f}")


@main.command(name="stats")
@repo_option
@taxonomy_option
@format_option
def stats(repo_root: Path | None, taxonomy_path: Path | None,
          output_format: str) -> None:
    """Corpus statistics over a repository.

    Fails (exit 1) when the repository contains documents that do not parse
    or validate: analytics over a partially broken corpus would mislead.
    """
    taxonomy = _load_taxonomy_or_die(taxonomy_path)
    repo = _open_repo(repo_root, taxonomy, default_bundled=True)
    if repo.scan_findings:
        _fail_validation(
            f"{len(repo.scan_findings)} document(s) in {repo.root} failed "
            "to parse or validate (see warnings above)"
        )
    corpus = repo.load_all()
    if not corpus:
        _fail_usage(f"repository {repo.root} holds no valid models")
    try:
        corpus_stats = technique_frequency(corpus, taxonomy)
    except VersionMismatchError as exc:
        _fail_validation(str(exc))
    doc = stats_to_doc(corpus_stats, taxonomy)
    if output_format == "json":
        click.echo(json.dumps(doc, indent=2))
        return
    click.echo(f"corpus: {corpus_stats.corpus_size} models "
               f"(taxonomy {corpus_stats.taxonomy_version})")
    click.echo(f"{'technique':10s} {'count':5s} bucket")
    for cell in doc["grid"]:
        if cell["count"]:
            click.echo(f"{cell['technique']:10s} {cell['count']:<5d} "
                       f"{cell['bucket']}")
    click.echo(f"unused techniques: {len(doc['unused'])}")


@main.command(name="render")
@click.argument("input_path",
                type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--to", "target", type=click.Choice(["csv", "svg"]), required=True,
              help="Output document format.")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Write to this file instead of stdout.")
@taxonomy_option
def render(input_path: Path, target: str, output: Path | None,
           taxonomy_path: Path | None) -> None:
    """Render a compare/stats JSON document as CSV or SVG."""
    taxonomy = _load_taxonomy_or_die(taxonomy_path)
    try:
        doc = json.loads(input_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        _fail_validation(f"{input_path}: not valid JSON: {exc.msg}")
    if not isinstance(doc, dict):
        _fail_validation(f"{input_path}: expected a JSON object")
    if is_layers_doc(doc):
        rendered = (layers_to_csv if target == "csv" else layers_to_svg)(
            doc, taxonomy)
    elif is_stats_doc(doc):
        rendered = (stats_to_csv if target == "csv" else stats_to_svg)(
            doc, taxonomy)
    else:
        _fail_validation(
            f"{input_path}: neither a layers document nor a stats document"
        )
    if output is not None:
        output.write_text(rendered, encoding="utf-8")
        click.echo(f"wrote {output}")
    else:
        click.echo(rendered, nl=False)


@main.command(name="serve")
@click.option("--host", default="127.0.0.1", show_default=True,
              envvar="BHADRA_HOST", help="Listen address.")
@click.option("--port", default=8787, show_default=True, type=int,
              envvar="BHADRA_PORT", help="Listen port.")
@repo_option
@taxonomy_option
def serve(host: str, port: int, repo_root: Path | None,
          taxonomy_path: Path | None) -> None:
    """Run the HTTP API over a repository."""
    import uvicorn

    from .service import create_app

    if repo_root is None:
        _fail_usage("a repository is required: pass --repo or set BHADRA_REPO")
    path = taxonomy_path or default_taxonomy_path()
    try:
        app = create_app(path, repo_root)
    except ValidationFailedError as exc:
        _echo_report(exc.report, "text")
        sys.exit(EXIT_VALIDATION)
    except ParseError as exc:
        _fail_usage(str(exc))
    except FileNotFoundError as exc:
        _fail_usage(str(exc))
    click.echo(f"serving {repo_root} on http://{host}:{port}/api/v1")
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
