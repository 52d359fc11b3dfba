import os

import numpy as np
import pytest

from nature_opt.core import check_search_space
from nature_opt.modelfile import (
    ModelFile,
    ModelFileError,
    example_model_path,
    load_example_model,
    parse_model_file,
    read_search_space_from_file,
    schema_for,
    search_space_from_model,
    write_model_file,
)
from nature_opt.params import Technique, param_fields

PSO_LISTING = """10 2 100 #<n_particles> <dimension> <max_iterations>
1.7 1.7 #<c1> <c2>
0.7 0.0 0.0 #<w> <w_min> <w_max>
-5.12 5.12 #<LB> <UB> x[0]
-5.12 5.12 #<LB> <UB> x[1]
"""

PSO_WITH_COMMENTS = """# particle swarm, two variables

10 2 100 #<n_particles> <dimension> <max_iterations>
   # acceleration constants
1.7   1.7
0.7 0.0 0.0 #<w> <w_min> <w_max>

#bounds follow
-5.12 5.12
# second variable
-5.12 5.12 # last line
"""


def listing_with(*lines):
    return "\n".join(lines) + "\n"


def random_model(rng, technique):
    """a well-formed ModelFile with random sizes, parameters and bounds"""
    n = int(rng.integers(1, 8))
    params = {}
    for f in param_fields(technique):
        params[f.name] = int(rng.integers(1, 100)) if f.kind is int else float(rng.uniform(0.0, 2.0))
    lows = rng.uniform(-1e3, 1e3, size=n)
    widths = rng.uniform(1e-6, 1e3, size=n)
    return ModelFile(
        technique,
        m=int(rng.integers(1, 200)),
        n=n,
        iterations=int(rng.integers(1, 5000)),
        params=params,
        bounds=tuple((float(lo), float(lo + w)) for lo, w in zip(lows, widths)),
    )


def with_noise(rng, text):
    """inserts comment and blank lines at random places and switches to CRLF"""
    lines = text.splitlines()
    for _ in range(int(rng.integers(1, 4))):
        at = int(rng.integers(0, len(lines) + 1))
        lines.insert(at, str(rng.choice(["# inserted", "", "   ", "\t# indented comment"])))
    return "\r\n".join(lines) + "\r\n"


class TestParse:
    def test_pso_listing(self):
        """tests the PSO listing field by field"""
        mf = parse_model_file(PSO_LISTING, "PSO")
        assert mf.technique == Technique.PSO
        assert (mf.m, mf.n, mf.iterations) == (10, 2, 100)
        assert mf.params == {"c1": 1.7, "c2": 1.7, "w": 0.7, "w_min": 0.0, "w_max": 0.0}
        assert mf.bounds == ((-5.12, 5.12), (-5.12, 5.12))
        assert isinstance(mf.m, int)

    def test_comments_and_blank_lines(self):
        """tests if comments and blank lines never change the result"""
        assert parse_model_file(PSO_WITH_COMMENTS, "PSO") == parse_model_file(PSO_LISTING, "PSO")

    def test_crlf(self):
        assert parse_model_file(PSO_LISTING.replace("\n", "\r\n"), "PSO") == parse_model_file(
            PSO_LISTING, "PSO"
        )

    def test_wider_bounds(self):
        text = PSO_LISTING.replace("-5.12 5.12", "-10 10")
        mf = parse_model_file(text, "PSO")
        assert mf.bounds == ((-10.0, 10.0), (-10.0, 10.0))
        assert mf.params == parse_model_file(PSO_LISTING, "PSO").params

    def test_black_hole_has_no_parameters(self):
        mf = parse_model_file(listing_with("50 2 200", "-1 1", "-2 2"), "BH")
        assert mf.params == {}
        assert mf.bounds == ((-1.0, 1.0), (-2.0, 2.0))


class TestParseErrors:
    def _line(self, text, technique="PSO"):
        with pytest.raises(ModelFileError) as e:
            parse_model_file(text, technique)
        return e.value

    def test_wrong_field_count(self):
        """tests if a short parameter record names its line"""
        error = self._line(PSO_LISTING.replace("1.7 1.7", "1.7"))
        assert error.line == 2
        assert "line 2" in str(error)

    def test_non_numeric_token(self):
        error = self._line(PSO_LISTING.replace("0.7 0.0 0.0", "0.7 abc 0.0"))
        assert error.line == 3
        assert "'abc'" in str(error)

    def test_decimal_integer_field(self):
        error = self._line(PSO_LISTING.replace("10 2 100", "10.5 2 100"))
        assert error.line == 1

    def test_non_finite(self):
        error = self._line(PSO_LISTING.replace("1.7 1.7", "1.7 nan"))
        assert error.line == 2

    def test_missing_bounds(self):
        """tests if fewer bounds records than variables are refused"""
        text = PSO_LISTING.rsplit("-5.12 5.12", 1)[0]
        self._line(text)

    def test_extra_bounds(self):
        error = self._line(PSO_LISTING + "-1 1\n")
        assert error.line == 6

    def test_reversed_bounds(self):
        error = self._line(PSO_LISTING.replace("-5.12 5.12 #<LB> <UB> x[1]", "5.12 -5.12"))
        assert error.line == 5

    def test_line_numbers_count_comments(self):
        """tests if reported lines are physical lines of the file"""
        text = PSO_WITH_COMMENTS.replace("0.7 0.0 0.0", "0.7 0.0")
        assert self._line(text).line == 6

    def test_zero_agents(self):
        assert self._line(PSO_LISTING.replace("10 2 100", "0 2 100")).line == 1

    def test_empty(self):
        self._line("# nothing here\n\n")


class TestWrite:
    def test_pso_listing_is_canonical(self):
        """tests if the PSO listing is exactly what the writer produces"""
        assert write_model_file(parse_model_file(PSO_LISTING, "PSO")) == PSO_LISTING

    def test_round_trip_pso(self):
        mf = parse_model_file(PSO_LISTING, "PSO")
        assert parse_model_file(write_model_file(mf), "PSO") == mf

    def test_round_trip_hs(self):
        mf = ModelFile(
            Technique.HS,
            m=20,
            n=2,
            iterations=2000,
            params={"HMCR": 0.95, "PAR": 0.3, "bw": 0.01},
            bounds=((-1.0, 1.0), (0.1, 0.30000000000000004)),
        )
        assert parse_model_file(write_model_file(mf), "HS") == mf

    def test_five_variables(self):
        mf = ModelFile(
            Technique.BH,
            m=5,
            n=5,
            iterations=10,
            bounds=tuple((-float(j + 1), float(j + 1)) for j in range(5)),
        )
        text = write_model_file(mf)
        assert len(text.splitlines()) == 6
        assert "#<LB> <UB> x[4]" in text
        assert parse_model_file(text, "BH") == mf

    def test_random_round_trips(self):
        """tests parse(write(mf)) == mf for 1000 random model files, also with comments, blank lines and CRLF"""
        rng = np.random.default_rng(2024)
        techniques = list(Technique)
        for i in range(1000):
            technique = techniques[i % len(techniques)]
            mf = random_model(rng, technique)
            text = write_model_file(mf)
            assert parse_model_file(text, technique) == mf
            assert parse_model_file(with_noise(rng, text), technique) == mf


class TestSchema:
    def test_pso(self):
        schema = schema_for("PSO")
        assert [line.names for line in schema] == [
            ("m", "n", "iterations"),
            ("c1", "c2"),
            ("w", "w_min", "w_max"),
            ("LB", "UB"),
        ]
        assert [line.line for line in schema] == [1, 2, 3, 4]
        assert schema[-1].repeated

    def test_ba(self):
        assert [line.names for line in schema_for("BA")] == [
            ("m", "n", "iterations"),
            ("f_min", "f_max"),
            ("A", "r", "alpha", "gamma"),
            ("LB", "UB"),
        ]

    def test_bh(self):
        schema = schema_for("BH")
        assert [line.names for line in schema] == [("m", "n", "iterations"), ("LB", "UB")]
        assert schema[1].line == 2

    def test_unknown_technique(self):
        with pytest.raises(ValueError):
            schema_for("GP")


class TestExampleModels:
    @pytest.mark.parametrize("technique", list(Technique))
    def test_packaged_file_is_canonical_and_valid(self, technique):
        """tests if every shipped model file parses, re-writes to itself and validates"""
        with open(example_model_path(technique), encoding="utf-8") as f:
            text = f.read()
        mf = parse_model_file(text, technique)
        assert write_model_file(mf) == text
        assert check_search_space(search_space_from_model(mf))

    def test_pso_example_is_the_listing(self):
        assert write_model_file(load_example_model("PSO")) == PSO_LISTING

    def test_read_search_space_from_file(self, tmp_path):
        path = os.path.join(tmp_path, "model.txt")
        with open(path, "w", encoding="utf-8") as f:
            f.write(PSO_LISTING.replace("-5.12 5.12", "-10 10"))
        s = read_search_space_from_file(path, "PSO")
        assert (s.m, s.n, s.iterations) == (10, 2, 100)
        assert s.params["c1"] == 1.7
        assert np.array_equal(s.LB, [-10.0, -10.0])
        assert np.array_equal(s.UB, [10.0, 10.0])


if __name__ == "__main__":
    pytest.main([__file__])
