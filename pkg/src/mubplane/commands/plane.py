"""
Plane Commands
==============
Build, verify and transform finite projective planes stored as JSON
incidence structures.
"""
from pathlib import Path
from typing import Annotated

import typer

from mubplane.algebra.field import FieldSpec, build_field
from mubplane.algebra.numbers import classify_order
from mubplane.exceptions import NotPrimePowerError, VerificationFailure
from mubplane.geometry.axioms import AxiomFailure, verify_affine_plane, verify_projective_plane
from mubplane.geometry.incidence import IncidenceStructure, dualize
from mubplane.geometry.pg2 import build_pg2
from mubplane.geometry.singer import (
    brute_force_difference_set,
    plane_from_difference_set,
    singer_difference_set,
)
from mubplane.geometry.transforms import affinize, affinize_dual
from mubplane.utils.context import emit_result, get_config, get_console
from mubplane.utils.errors import exit_on_error
from mubplane.utils.output import load_json

app = typer.Typer(help="Finite projective and affine planes")

StructureFile = Annotated[Path, typer.Argument(help="Incidence structure JSON")]


def _load(path: Path) -> IncidenceStructure:
    return IncidenceStructure.from_dict(load_json(path))


def _field_for(ctx: typer.Context, q: int) -> FieldSpec:
    decomposition = classify_order(q)
    if decomposition is None:
        raise NotPrimePowerError(q)
    return build_field(
        decomposition.prime,
        decomposition.exponent,
        order_max=int(get_config(ctx).get("capacity.field_order_max")),
    )


@app.command()
def build(
    ctx: typer.Context,
    q: Annotated[int, typer.Argument(help="Plane order (prime power)")],
) -> None:
    """
    🔺 Construct the Desarguesian plane PG(2, q).

    Examples:
        mubplane plane build 3 --out pg2_3.json
    """
    with exit_on_error():
        plane = build_pg2(_field_for(ctx, q), order_max=int(get_config(ctx).get("capacity.plane_order_max")))
        get_console(ctx).print(f"[green]✓[/green] PG(2,{q}): {plane.point_count} points, {plane.line_count} lines")
        emit_result(ctx, plane.to_dict())


@app.command()
def verify(
    ctx: typer.Context,
    path: StructureFile,
    affine: Annotated[bool, typer.Option("--affine", help="Check the affine plane axioms instead")] = False,
) -> None:
    """
    ✅ Check the plane axioms; exits 1 with a witness if one fails.
    """
    with exit_on_error():
        structure = _load(path)
        result = verify_affine_plane(structure) if affine else verify_projective_plane(structure)
        if isinstance(result, AxiomFailure):
            emit_result(ctx, result.to_dict())
            raise VerificationFailure(f"axiom '{result.axiom}' fails: {result.witness}")
        get_console(ctx).print(f"[green]✓[/green] {'affine' if affine else 'projective'} plane of order {result.order}")
        emit_result(ctx, result.to_dict())


@app.command("dualize")
def dualize_command(ctx: typer.Context, path: StructureFile) -> None:
    """
    🔁 Swap points and lines.
    """
    with exit_on_error():
        emit_result(ctx, dualize(_load(path)).to_dict())


@app.command("affinize")
def affinize_command(
    ctx: typer.Context,
    path: StructureFile,
    line: Annotated[int, typer.Option("--line", "-l", help="Line to delete as the line at infinity")] = 0,
) -> None:
    """
    ✂️ Delete a line and its points, leaving an affine plane.
    """
    with exit_on_error():
        emit_result(ctx, affinize(_load(path), line).to_dict())


@app.command("affinize-dual")
def affinize_dual_command(
    ctx: typer.Context,
    path: StructureFile,
    point: Annotated[int, typer.Option("--point", "-p", help="Point to delete with every line through it")] = 0,
) -> None:
    """
    ✂️ Delete a point and every line through it.
    """
    with exit_on_error():
        emit_result(ctx, affinize_dual(_load(path), point).to_dict())


@app.command()
def singer(
    ctx: typer.Context,
    q: Annotated[int, typer.Argument(help="Plane order (prime power)")],
    plane: Annotated[bool, typer.Option("--plane", help="Emit the cyclic plane instead of the difference set")] = False,
    brute_force: Annotated[bool, typer.Option("--brute-force", help="Cross-check against exhaustive search (q <= 5)")] = False,
) -> None:
    """
    🔄 Singer difference set of PG(2, q) in canonical form.

    Examples:
        mubplane plane singer 3
        mubplane plane singer 2 --plane
    """
    with exit_on_error():
        ds = singer_difference_set(_field_for(ctx, q), order_max=int(get_config(ctx).get("capacity.field_order_max")))
        if brute_force:
            oracle = brute_force_difference_set(q)
            if oracle != ds:
                raise VerificationFailure(f"field route gives {ds.residues}, search gives {oracle.residues if oracle else None}")
            get_console(ctx).print("[green]✓[/green] matches the exhaustive search")
        get_console(ctx).print(f"[green]✓[/green] D = {set(ds.residues)} mod {ds.modulus}")
        emit_result(ctx, plane_from_difference_set(ds).to_dict() if plane else ds.to_dict())
