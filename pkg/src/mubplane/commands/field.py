"""
Field Commands
==============
Finite fields, prime-power classification, Gaussian binomials and the
plane existence criteria.
"""
from typing import Annotated, Optional

import typer
from rich.table import Table

from mubplane.algebra.field import build_field, field_arithmetic, primitive_element
from mubplane.algebra.numbers import (
    PlaneStatus,
    bruck_ryser,
    classify_order,
    gaussian_binomial,
    is_sum_of_two_squares,
    plane_existence_status,
)
from mubplane.algebra.subspaces import count_subspaces
from mubplane.exceptions import NotPrimePowerError, UsageError, VerificationFailure
from mubplane.utils.context import emit_result, get_config, get_console
from mubplane.utils.errors import exit_on_error

app = typer.Typer(help="Finite fields and plane existence criteria")


@app.command()
def build(
    ctx: typer.Context,
    p: Annotated[int, typer.Argument(help="Characteristic (prime)")],
    n: Annotated[int, typer.Argument(help="Extension degree")] = 1,
) -> None:
    """
    🔢 Construct GF(p^n) with the smallest irreducible modulus.

    Examples:
        mubplane field build 2 3
        mubplane field build 7
    """
    with exit_on_error():
        spec = build_field(p, n, order_max=int(get_config(ctx).get("capacity.field_order_max")))
        g = primitive_element(spec)
        payload = {**spec.to_dict(), "order": spec.order, "modulus_text": spec.describe_modulus(), "primitive_element": g.index}
        get_console(ctx).print(f"[green]✓[/green] GF({spec.order}) = Z_{p}[x] / ({spec.describe_modulus()})")
        emit_result(ctx, payload)


@app.command()
def arith(
    ctx: typer.Context,
    p: Annotated[int, typer.Argument(help="Characteristic")],
    n: Annotated[int, typer.Argument(help="Extension degree")],
    op: Annotated[str, typer.Argument(help="add | mul | neg | inv | pow")],
    a: Annotated[int, typer.Argument(help="First operand (integer encoding)")],
    b: Annotated[Optional[int], typer.Argument(help="Second operand, or the exponent for pow")] = None,
) -> None:
    """
    ➕ One operation in GF(p^n); elements are given by their integer encoding.

    Examples:
        mubplane field arith 2 3 mul 3 5
        mubplane field arith 3 2 inv 4
    """
    with exit_on_error():
        spec = build_field(p, n, order_max=int(get_config(ctx).get("capacity.field_order_max")))
        if op == "pow":
            if b is None:
                raise UsageError("pow needs an exponent")
            result = field_arithmetic(op, spec.element(a), b)
        elif b is None:
            result = field_arithmetic(op, spec.element(a))
        else:
            result = field_arithmetic(op, spec.element(a), spec.element(b))
        emit_result(ctx, {"field": spec.to_dict(), "op": op, "result": result.index, "coefficients": list(result.coefficients)})


@app.command()
def classify(
    ctx: typer.Context,
    d: Annotated[int, typer.Argument(help="Order to classify")],
) -> None:
    """
    🧮 Decompose d as p^k, if it is a prime power.
    """
    with exit_on_error():
        decomposition = classify_order(d)
        payload = {"d": d, "prime_power": decomposition is not None}
        if decomposition is not None:
            payload.update(prime=decomposition.prime, exponent=decomposition.exponent)
        emit_result(ctx, payload)


@app.command()
def gaussian(
    ctx: typer.Context,
    n: Annotated[int, typer.Argument(help="Projective dimension n")],
    k: Annotated[int, typer.Argument(help="Subspace dimension k")],
    d: Annotated[int, typer.Argument(help="Field order")],
    brute_force: Annotated[bool, typer.Option("--brute-force", help="Also enumerate the subspaces (d must be a prime power)")] = False,
) -> None:
    """
    📐 Number of k-dimensional subspaces of PG(n, d).

    Examples:
        mubplane field gaussian 2 0 3
        mubplane field gaussian 3 1 2 --brute-force
    """
    with exit_on_error():
        count = gaussian_binomial(n, k, d)
        payload = {"n": n, "k": k, "d": d, "count": count}
        if brute_force:
            decomposition = classify_order(d)
            if decomposition is None:
                raise NotPrimePowerError(d)
            spec = build_field(decomposition.prime, decomposition.exponent)
            enumerated = count_subspaces(spec, n, k)
            payload["enumerated"] = enumerated
            if enumerated != count:
                raise VerificationFailure(f"formula gives {count}, enumeration finds {enumerated}")
        emit_result(ctx, payload)


@app.command("bruck-ryser")
def bruck_ryser_command(
    ctx: typer.Context,
    d: Annotated[int, typer.Argument(help="Plane order")],
) -> None:
    """
    🚫 Apply the Bruck-Ryser criterion to order d.
    """
    with exit_on_error():
        outcome = bruck_ryser(d)
        witness = is_sum_of_two_squares(d)
        emit_result(
            ctx,
            {
                "d": d,
                "outcome": outcome.value,
                "residue_mod_4": d % 4,
                "two_squares": list(witness) if witness is not None else None,
            },
        )


@app.command()
def status(
    ctx: typer.Context,
    d_from: Annotated[int, typer.Option("--from", help="First order")] = 2,
    d_to: Annotated[int, typer.Option("--to", help="Last order")] = 33,
) -> None:
    """
    📋 Plane existence status over a range of orders.

    Examples:
        mubplane field status --from 2 --to 33
        mubplane --format csv field status --to 12
    """
    with exit_on_error():
        if not 2 <= d_from <= d_to:
            raise UsageError(f"need 2 <= from <= to, got from={d_from}, to={d_to}")
        verdicts = [plane_existence_status(d) for d in range(d_from, d_to + 1)]

        table = Table(title="Projective plane existence")
        table.add_column("d", justify="right")
        table.add_column("Status")
        table.add_column("Reason", style="dim")
        for v in verdicts:
            style = "green" if v.status is PlaneStatus.EXISTS_PRIME_POWER else "red" if v.status.ruled_out else "yellow"
            table.add_row(str(v.order), f"[{style}]{v.status.value}[/{style}]", v.detail)
        get_console(ctx).print(table)

        emit_result(
            ctx,
            [v.to_dict() for v in verdicts],
            csv_header=("d", "status", "detail"),
            csv_rows=((v.order, v.status.value, v.detail) for v in verdicts),
        )
