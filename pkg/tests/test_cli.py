import json

import pytest

from finform import from_cayley_table, is_isomorphic, parse_group_text, symmetric
from finform.cli import main, parse_selector
from finform.files import dump_group_table, format_cycles, parse_cycles


class TestSelectors:
    def test_families(self):
        assert parse_selector("cyclic:6").order == 6
        assert parse_selector("dihedral:4").order == 8
        assert parse_selector("sym:4").order == 24
        assert parse_selector("alt:4").order == 12
        assert parse_selector("quaternion:8").order == 8
        assert parse_selector("elab:2^3").order == 8
        assert parse_selector("trivial").order == 1

    def test_product(self):
        g = parse_selector("prod(cyclic:2,prod(cyclic:3,cyclic:5))")
        assert g.order == 30

    def test_bad_selector(self):
        with pytest.raises(ValueError):
            parse_selector("frobnicate:9")


class TestGroupFiles:
    def test_cycle_notation(self):
        assert parse_cycles("(0 1 2)(3 4)", 5) == (1, 2, 0, 4, 3)
        assert parse_cycles("()", 3) == (0, 1, 2)
        assert format_cycles((1, 2, 0, 4, 3)) == "(0 1 2)(3 4)"
        with pytest.raises(ValueError):
            parse_cycles("(0 1)(1 2)", 3)

    def test_perm_file(self):
        g = parse_group_text("# comment\nperm 3\n(0 1)\n(0 1 2)\n")
        assert g.order == 6

    def test_table_file_round_trip(self):
        s3 = symmetric(3)
        text = dump_group_table(s3)
        back = parse_group_text(text)
        assert is_isomorphic(back, s3) is not None

    def test_error_carries_line(self):
        from finform import GroupFileError

        with pytest.raises(GroupFileError) as err:
            parse_group_text("perm 3\n(0 9)\n")
        assert err.value.line == 2


class TestCommands:
    def test_group_show_trivial(self, capsys):
        assert main(["group", "show", "trivial"]) == 0
        out = capsys.readouterr().out
        assert "order: 1" in out
        assert "nilpotent: True" in out

    def test_group_show_structured_round_trip(self, capsys):
        assert main(["group", "show", "sym:3", "--cayley", "--format", "structured"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["order"] == 6
        assert data["chief_series_orders"] == [1, 3, 6]
        back = from_cayley_table(data["cayley"])
        assert is_isomorphic(back, symmetric(3)) is not None

    def test_group_show_sym4_series(self, capsys):
        assert main(["group", "show", "sym:4", "--format", "structured"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["chief_series_orders"] == [1, 4, 12, 24]

    def test_residual_command(self, capsys):
        assert main(["residual", "sym:3", "--formation", "nilpotent"]) == 0
        out = capsys.readouterr().out
        assert "residual_order: 3" in out

    def test_hypercentre_command(self, capsys):
        assert main(["hypercentre", "sym:3", "--formation", "supersoluble"]) == 0
        out = capsys.readouterr().out
        assert "hypercentre_order: 6" in out

    def test_subnormal_command_with_sylow(self, capsys):
        # generator pair for an order-8 Sylow subgroup of sym:4 in the
        # printed element indexing
        from finform import generated_subgroup

        s4 = parse_selector("sym:4")
        a, b = next(
            (a, b)
            for a in range(24)
            for b in range(24)
            if generated_subgroup(s4, [a, b]).order == 8
        )
        code = main(
            [
                "subnormal",
                "sym:4",
                "--gens",
                f"{a},{b}",
                "--formation",
                "supersoluble",
                "--kind",
                "kf",
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "POSITIVE" in out
        assert "8 --f-step--> 24" in out

    def test_subnormal_negative(self, capsys):
        assert (
            main(["subnormal", "sym:3", "--gens", "1", "--formation", "nilpotent"])
            == 0
        )
        assert "NEGATIVE" in capsys.readouterr().out

    def test_gens_out_of_range_is_config_error(self, capsys):
        assert main(["subnormal", "sym:3", "--gens", "99"]) == 3

    def test_verify_trivial_catalog(self, capsys):
        assert main(["verify", "all", "--max-order", "1"]) == 0
        out = capsys.readouterr().out
        assert "0 failure(s)" in out

    def test_verify_theorem_b(self, capsys):
        assert (
            main(
                [
                    "verify",
                    "theorem-b",
                    "--formation",
                    "nilpotent",
                    "--max-order",
                    "12",
                ]
            )
            == 0
        )
        out = capsys.readouterr().out
        assert "PASS" in out

    def test_verify_sigma_requires_partition(self, capsys):
        assert (
            main(
                [
                    "verify",
                    "theorem-b",
                    "--formation",
                    "sigma-nilpotent",
                    "--max-order",
                    "6",
                ]
            )
            == 3
        )

    def test_verify_section3_with_sigma(self, capsys):
        assert (
            main(
                [
                    "verify",
                    "section3",
                    "--sigma",
                    "[[2,3]]",
                    "--max-order",
                    "8",
                ]
            )
            == 0
        )

    def test_structured_verify_deterministic(self, capsys):
        args = [
            "verify",
            "theorem-b",
            "--formation",
            "supersoluble",
            "--max-order",
            "8",
            "--format",
            "structured",
        ]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_verify_with_input_file(self, tmp_path, capsys):
        path = tmp_path / "extra.grp"
        path.write_text("perm 3\n(0 1 2)\n")
        code = main(
            [
                "verify",
                "theorem-b",
                "--formation",
                "nilpotent",
                "--max-order",
                "6",
                "--input",
                str(path),
            ]
        )
        assert code == 0

    def test_shipped_sample_groups(self):
        from pathlib import Path

        from finform import center, load_group_file

        root = Path(__file__).resolve().parent.parent / "groups"
        frob20 = load_group_file(root / "frobenius20.grp")
        frob21 = load_group_file(root / "frobenius21.grp")
        assert frob20.order == 20 and center(frob20).order == 1
        assert frob21.order == 21 and center(frob21).order == 1
