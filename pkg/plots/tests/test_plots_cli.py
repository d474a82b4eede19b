from bandplots.cli import main


def test_render_fig3_end_to_end(artifacts, tmp_path, capsys):
    out = tmp_path / "fig3.png"
    code = main([
        "--figure", "fig3", "--in", str(artifacts["ladder"]),
        "--min-json", str(artifacts["min_json"]), "--out", str(out),
    ])
    assert code == 0
    assert capsys.readouterr().out.strip() == str(out)
    assert out.stat().st_size > 0


def test_render_fig4_with_overlay_flags(artifacts, tmp_path):
    out = tmp_path / "fig4.png"
    code = main([
        "--figure", "fig4", "--in", str(artifacts["raster"]),
        "--epsilon", "0.5", "--alpha0", "0.78628", "--out", str(out),
    ])
    assert code == 0
    assert out.is_file()


def test_empty_csv_exits_1_naming_the_path(tmp_path, capsys):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    code = main(["--figure", "fig2", "--in", str(empty),
                 "--out", str(tmp_path / "x.png")])
    assert code == 1
    assert "empty.csv" in capsys.readouterr().err


def test_missing_input_exits_1(tmp_path, capsys):
    code = main(["--figure", "fig2", "--in", str(tmp_path / "gone.csv"),
                 "--out", str(tmp_path / "x.png")])
    assert code == 1
    assert "gone.csv" in capsys.readouterr().err


def test_unknown_figure_exits_1(tmp_path, capsys):
    code = main(["--figure", "fig9", "--in", "x.csv", "--out", "x.png"])
    assert code == 1


def test_missing_required_flags_exit_1(capsys):
    assert main([]) == 1
    assert main(["--figure", "fig2"]) == 1
