"""Witness re-evaluation: every failed verdict's tuples demonstrate a violation."""

import json

import pytest

from bolforge import LoopTable, parse_loop, property_report
from bolforge.cli import main

from frozen import LOOP5_FIRST, LOOP6_NON_PA

LBOL8_NONASSOC = (
    "8\n0 1 2 3 4 5 6 7\n1 0 3 2 5 4 7 6\n2 3 0 1 6 7 4 5\n3 2 1 0 7 6 5 4\n"
    "4 5 6 7 0 1 2 3\n5 4 7 6 1 0 3 2\n6 7 4 5 3 2 1 0\n7 6 5 4 2 3 0 1\n"
)


def _violates(table: LoopTable, name: str, witness: tuple) -> bool:
    mul = table.mul
    if name == "left-bol":
        x, y, z = witness
        return mul(x, mul(y, mul(x, z))) != mul(mul(x, mul(y, x)), z)
    if name in ("right-bol", "moufang"):
        # a moufang witness comes from whichever side failed
        x, y, z = witness
        right = mul(mul(mul(z, x), y), x) != mul(z, mul(mul(x, y), x))
        left = mul(x, mul(y, mul(x, z))) != mul(mul(x, mul(y, x)), z)
        return right or left
    if name == "lip":
        if len(witness) == 1:
            (x,) = witness
            return table.left_inverse(x) != table.right_inverse(x)
        x, y = witness
        xi = table.inverse(x)
        return mul(xi, mul(x, y)) != y or mul(x, mul(xi, y)) != y
    if name == "lap":
        x, y = witness
        return mul(x, mul(x, y)) != mul(mul(x, x), y)
    if name in ("power-associative", "associative"):
        a, b, c = witness
        return mul(mul(a, b), c) != mul(a, mul(b, c))
    if name == "two-sided-inverses":
        (x,) = witness
        return table.left_inverse(x) != table.right_inverse(x)
    if name == "uniquely-2-divisible":
        x, y = witness
        return x != y and mul(x, x) == mul(y, y)
    if name == "commutant-is-subloop":
        from bolforge import commutant

        op, a, b = witness
        value = {"mul": table.mul, "ldiv": table.ldiv, "rdiv": table.rdiv}[op](a, b)
        return value not in set(commutant(table))
    raise AssertionError(f"unhandled property {name}")


@pytest.mark.parametrize(
    "text", [LOOP5_FIRST, LOOP6_NON_PA, LBOL8_NONASSOC], ids=["n5", "n6", "n8"]
)
def test_every_witness_reevaluates_to_a_violation(text):
    table = parse_loop(text)
    report = property_report(table, "t")
    failed = 0
    for name, verdict in report.verdicts.items():
        if verdict.holds:
            continue
        failed += 1
        assert verdict.witnesses
        for witness in verdict.witnesses:
            assert _violates(table, name, tuple(witness)), (name, witness)
    assert failed > 0


def test_cli_props_golden_report(tmp_path, capsys):
    # first nonassociative order-8 left Bol representative, report frozen from
    # a verified run of the property layer
    path = tmp_path / "lbol8.loop"
    path.write_text(LBOL8_NONASSOC)
    assert main(["props", str(path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["properties"] == {
        "left-bol": "holds",
        "right-bol": {"fails": [[2, 4, 4], [2, 4, 5], [2, 4, 6]]},
        "moufang": {"fails": [[2, 4, 4], [2, 4, 5], [2, 4, 6]]},
        "lip": "holds",
        "lap": "holds",
        "power-associative": "holds",
        "associative": {"fails": [[2, 4, 4], [2, 4, 5], [2, 4, 6]]},
        "two-sided-inverses": "holds",
        "uniquely-2-divisible": {"fails": [[0, 1], [0, 2], [0, 3]]},
        "commutant-is-subloop": "holds",
    }


def test_golden_loop_is_the_enumerated_representative(left_bol_upto_8):
    from bolforge import is_associative

    first_nonassoc = next(
        t for t in left_bol_upto_8[8] if not is_associative(t).holds
    )
    assert first_nonassoc == parse_loop(LBOL8_NONASSOC)
