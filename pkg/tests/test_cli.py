import json

import pytest

from smhc.graph import cycle_graph, complete_graph, petersen_graph, format_edge_list
from smhc.cli import main, EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_REFUSED


def write_graph(tmp_path, g, name="g.txt"):
    p = tmp_path / name
    p.write_text(format_edge_list(g))
    return str(p)


def test_hc_yes(tmp_path, capsys):
    f = write_graph(tmp_path, cycle_graph(6))
    assert main(["hc", f]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "HAMILTONIAN"
    assert "-" in out.splitlines()[1]  # witness edges


def test_hc_no(tmp_path, capsys):
    f = write_graph(tmp_path, petersen_graph())
    assert main(["hc", f]) == EXIT_NO
    assert capsys.readouterr().out.strip() == "NOT HAMILTONIAN"


def test_hc_with_supplied_decomposition(tmp_path, capsys):
    from smhc.generators import caterpillar_decomposition
    g = cycle_graph(5)
    f = write_graph(tmp_path, g)
    d = tmp_path / "bd.json"
    d.write_text(json.dumps(caterpillar_decomposition(list(g.vertices)).to_json()))
    assert main(["hc", f, "--decomposition", str(d)]) == EXIT_OK
    assert "HAMILTONIAN" in capsys.readouterr().out


def test_width_exact_c5(tmp_path, capsys):
    f = write_graph(tmp_path, cycle_graph(5), "c5.txt")
    assert main(["width", f, "--exact"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "sm-width 2"


def test_width_approx(tmp_path, capsys):
    f = write_graph(tmp_path, complete_graph(6))
    assert main(["width", f, "--approx"]) == EXIT_OK
    out = capsys.readouterr().out.strip()
    assert out.startswith("sm-width ")
    assert int(out.split()[1]) >= 1


def test_width_exact_refuses_large(tmp_path, capsys):
    f = write_graph(tmp_path, cycle_graph(13))
    assert main(["width", f, "--exact"]) == EXIT_REFUSED


def test_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("this is not a graph\n")
    assert main(["hc", str(p)]) == EXIT_PARSE
    assert main(["hc", str(tmp_path / "missing.txt")]) == EXIT_PARSE


def test_unknown_flag_exits_two(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["width", "x.txt", "--bogus"])
    assert exc.value.code == 2


def test_decompose_json(tmp_path, capsys):
    f = write_graph(tmp_path, cycle_graph(6))
    assert main(["decompose", f]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert {"width", "width_certificate", "decomposition"} <= set(data)
    assert all("cut" in c and "sm" in c for c in data["width_certificate"])


def test_verify_output(tmp_path, capsys):
    f = write_graph(tmp_path, cycle_graph(6))
    assert main(["verify", f]) == EXIT_OK
    out = capsys.readouterr().out
    assert "ok: solver agrees with the oracle (hamiltonian=True)" in out
    assert "trims preserve completability" in out or "ok:" in out
    assert "FAIL" not in out


def test_verify_refuses_large(tmp_path, capsys):
    f = write_graph(tmp_path, cycle_graph(16))
    assert main(["verify", f]) == EXIT_REFUSED
    assert "refused" in capsys.readouterr().out


def test_bench_csv_shape(tmp_path, capsys):
    assert main(["--seed", "3", "bench", "--n", "6,7", "--samples", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n,seed,smw_exact,smw_approx,max_family,millis"
    assert len(lines) == 1 + 2 * 2
    for row in lines[1:]:
        n, seed, exact, approx, fam, millis = row.split(",")
        assert int(n) in (6, 7) and int(seed) in (3, 4)
        assert int(exact) >= 1 and int(approx) >= int(exact)
        assert int(fam) >= 1 and int(millis) >= 0


def test_bench_grid_family(tmp_path, capsys):
    assert main(["bench", "--family", "grid", "--n", "8", "--k", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    assert lines[1].split(",")[0] == "8"


def test_seed_placement_both_sides(tmp_path, capsys):
    f = write_graph(tmp_path, cycle_graph(5))
    assert main(["--seed", "7", "hc", f]) == EXIT_OK
    capsys.readouterr()
    assert main(["hc", f, "--seed", "7"]) == EXIT_OK


def test_deterministic_output(tmp_path, capsys):
    f = write_graph(tmp_path, complete_graph(6))
    main(["decompose", f])
    first = capsys.readouterr().out
    main(["decompose", f])
    assert capsys.readouterr().out == first
    args = ["--seed", "5", "bench", "--n", "6", "--samples", "2"]
    main(args)
    b1 = capsys.readouterr().out
    main(args)
    b2 = capsys.readouterr().out
    # timing column may vary; everything else must be byte-identical
    strip = lambda s: [r.rsplit(",", 1)[0] for r in s.splitlines()]
    assert strip(b1) == strip(b2)
