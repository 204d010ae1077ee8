import json
import math

import numpy as np
import pytest

from qbnet import SweepTable, parse_run_config, run_sweep
from qbnet.export import (format_number, table_to_csv_text, write_csv,
                          write_table)


def small_table():
    return SweepTable("demo", ("x", "y"), [[1.0, 2.5], [2.0, 1.0 / 3.0]],
                      {"alpha": "0.1"})


class TestExport:
    def test_seventeen_digits_round_trip(self):
        for value in (1 / 3, math.pi, 1e-300, 123456.789, 0.1 + 0.2):
            assert float(format_number(value)) == value

    def test_csv_layout(self, tmp_path):
        path = tmp_path / "demo.csv"
        write_csv(small_table(), str(path), deterministic=True)
        lines = path.read_text().splitlines()
        assert lines[0] == "# table = demo"
        assert lines[1].startswith("# toolkit_version = ")
        assert lines[2] == "# alpha = 0.1"
        assert lines[3] == "x,y"
        assert lines[4].split(",")[0] == "1"
        assert len(lines) == 6

    def test_timestamp_suppressed_only_when_deterministic(self, tmp_path):
        t = small_table()
        write_csv(t, str(tmp_path / "a.csv"), deterministic=False)
        write_csv(t, str(tmp_path / "b.csv"), deterministic=True)
        assert "# created = " in (tmp_path / "a.csv").read_text()
        assert "# created = " not in (tmp_path / "b.csv").read_text()

    def test_deterministic_reruns_byte_identical(self, tmp_path):
        t = small_table()
        write_csv(t, str(tmp_path / "a.csv"), deterministic=True)
        write_csv(t, str(tmp_path / "b.csv"), deterministic=True)
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_error_sidecar(self, tmp_path):
        t = small_table()
        t.errors.append((1, 0.5, "unstable point"))
        paths = write_table(t, str(tmp_path), "csv", deterministic=True)
        assert len(paths) == 2
        sidecar = (tmp_path / "demo_errors.csv").read_text()
        assert "unstable point" in sidecar
        main = (tmp_path / "demo.csv").read_text()
        assert "nan" not in main

    def test_json_mirrors_columns(self, tmp_path):
        paths = write_table(small_table(), str(tmp_path), "json",
                            deterministic=True)
        doc = json.loads((tmp_path / "demo.json").read_text())
        assert doc["columns"] == ["x", "y"]
        assert doc["rows"][0] == [1.0, 2.5]
        assert "created" not in doc

    def test_row_width_checked(self):
        with pytest.raises(ValueError):
            SweepTable("bad", ("x", "y"), [[1.0]])

    def test_csv_text(self):
        text = table_to_csv_text(small_table())
        assert text.startswith("# table = demo\n")
        assert "x,y\n" in text


def config_doc(**over):
    doc = {
        "topology": {"family": "cascaded", "variant": "nr", "n": 2,
                     "g_b": 0.01, "gamma_c": 0.1, "gamma_b": 0.1,
                     "Gamma": 0.1, "xi": 1.0},
        "sweep": {"variable": "g_b", "values": [0.001, 0.005, 0.02]},
        "observables": ["steady_energy"],
    }
    doc.update(over)
    return doc


class TestRunSweep:
    def test_three_rows(self):
        table = run_sweep(parse_run_config(config_doc()))
        assert len(table.rows) == 3
        assert table.columns == ("g_b", "steady_energy")
        assert [row[0] for row in table.rows] == [0.001, 0.005, 0.02]

    def test_empty_range(self):
        doc = config_doc()
        doc["sweep"]["values"] = []
        table = run_sweep(parse_run_config(doc))
        assert table.rows == []
        assert table.errors == []

    def test_unstable_point_goes_to_sidecar(self):
        doc = config_doc()
        # an undamped direct chain has no attracting steady state; the
        # other points stay intact
        doc["topology"]["variant"] = "r1"
        doc["sweep"] = {"variable": "gamma", "values": [0.0, 0.1, 0.2]}
        table = run_sweep(parse_run_config(doc))
        assert len(table.rows) == 2
        assert len(table.errors) == 1
        assert table.errors[0][0] == 0
        assert not any(math.isnan(v) for row in table.rows for v in row)

    def test_gains_observable(self):
        doc = config_doc(observables=["gains"])
        table = run_sweep(parse_run_config(doc))
        assert table.columns == ("g_b", "E_nr", "E_r1", "E_r2", "G1", "G2")
        # weak-coupling gain ordering survives the sweep machinery
        assert table.rows[0][4] > table.rows[2][4]

    def test_theta_sweep(self):
        doc = config_doc()
        doc["topology"]["variant"] = "custom"
        doc["topology"]["thetas"] = [0.0, 0.0]
        doc["sweep"] = {"variable": "theta", "index": 2,
                        "values": [0.0, -math.pi / 2]}
        table = run_sweep(parse_run_config(doc))
        assert len(table.rows) == 2
        assert table.columns[0] == "theta_2"
        # the optimally phased link stores more energy
        assert table.rows[1][1] > table.rows[0][1]

    def test_n_sweep(self):
        doc = config_doc()
        doc["sweep"] = {"variable": "n", "values": [1, 2, 3]}
        table = run_sweep(parse_run_config(doc))
        assert [row[0] for row in table.rows] == [1.0, 2.0, 3.0]

    def test_deterministic_row_order_threaded(self, monkeypatch):
        doc = config_doc()
        doc["sweep"]["values"] = list(np.linspace(0.001, 0.05, 20))
        monkeypatch.setenv("QBNET_THREADS", "4")
        threaded = run_sweep(parse_run_config(doc))
        monkeypatch.setenv("QBNET_THREADS", "1")
        serial = run_sweep(parse_run_config(doc))
        assert threaded.rows == serial.rows

    def test_max_power_observable(self):
        doc = config_doc(observables=["max_power"])
        doc["sweep"]["values"] = [0.01]
        table = run_sweep(parse_run_config(doc))
        assert table.columns == ("g_b", "t_star", "p_max")
        assert table.rows[0][2] > 0
