import pytest

from nature_opt.params import (
    HYPERCOMPLEX_TECHNIQUES,
    Range,
    Technique,
    TechniqueParamService,
    default_params,
    param_fields,
    to_technique,
    validate_params,
)


class TestTechniquePatterns(object):
    """tests resolving technique lists the way the sweep command does"""

    def test_all(self):
        """tests if "all" returns every technique in declaration order"""
        assert TechniqueParamService().technique_names_from_patterns("all") == list(Technique)

    def test_all_hypercomplex(self):
        service = TechniqueParamService(include_hypercomplex_only=True)
        selected = service.technique_names_from_patterns("all")
        assert len(selected) == 11
        assert Technique.MBO not in selected and Technique.WCA not in selected

    def test_exact_id_is_not_a_substring(self):
        """tests if "PSO" does not pull in AIWPSO"""
        service = TechniqueParamService()
        assert service.technique_names_from_patterns(["PSO"]) == [Technique.PSO]
        assert service.technique_names_from_patterns(["hs"]) == [Technique.HS]

    def test_substring(self):
        service = TechniqueParamService()
        assert service.technique_names_from_patterns(["ps"]) == [
            Technique.PSO,
            Technique.AIWPSO,
            Technique.PSFHS,
        ]

    def test_no_duplicates(self):
        service = TechniqueParamService()
        assert service.technique_names_from_patterns(["PSO", "pso", "ps"]) == [
            Technique.PSO,
            Technique.AIWPSO,
            Technique.PSFHS,
        ]

    def test_invalid(self):
        """tests if non-string patterns are refused"""
        with pytest.raises(ValueError):
            TechniqueParamService().technique_names_from_patterns([5])


class TestTechnique:
    def test_case_insensitive(self):
        assert to_technique("aiwpso") is Technique.AIWPSO
        assert to_technique(Technique.BA) is Technique.BA

    def test_unknown(self):
        with pytest.raises(ValueError):
            to_technique("GP")

    def test_thirteen(self):
        assert len(Technique) == 13
        assert HYPERCOMPLEX_TECHNIQUES < set(Technique)


class TestValidateParams:
    @pytest.mark.parametrize("technique", list(Technique))
    def test_defaults_are_valid(self, technique):
        """tests if every technique's defaults pass validation"""
        assert validate_params(technique, default_params(technique), m=10) == []

    def test_defaults_cover_fields(self):
        for technique in Technique:
            assert set(default_params(technique)) == {f.name for f in param_fields(technique)}

    def test_missing(self):
        problems = validate_params("HS", {"HMCR": 0.9, "PAR": 0.3}, m=10)
        assert problems == ["HS: missing parameter bw"]

    def test_out_of_range(self):
        params = dict(default_params("CS"), beta=2.5)
        problems = validate_params("CS", params, m=10)
        assert len(problems) == 1
        assert "beta" in problems[0]

    def test_closed_probability_range(self):
        """tests if 0 and 1 are accepted probabilities"""
        for value in (0.0, 1.0):
            assert validate_params("FPA", {"p": value, "beta": 1.5}, m=10) == []

    def test_cross_checks(self):
        assert validate_params("MBO", {"k": 3, "x": 3, "period": 10}, m=10) == ["MBO: x must be < k"]
        assert validate_params("WCA", {"n_sr": 4, "d_max": 0.1}, m=4) == ["WCA: n_sr must be < m"]
        params = dict(default_params("AIWPSO"), w_min=0.9)
        assert validate_params("AIWPSO", params, m=10) == ["AIWPSO: w_min must be < w_max"]

    def test_integer_fields(self):
        problems = validate_params("ABC", {"limit": 2.5}, m=10)
        assert problems == ["ABC: limit must be an integer, got 2.5"]

    def test_pso_warns_about_adaptive_fields(self):
        params = dict(default_params("PSO"), w_min=0.3, w_max=0.7)
        with pytest.warns(UserWarning):
            assert validate_params("PSO", params, m=10) == []


class TestRange:
    def test_open_and_closed(self):
        positive = Range(0.0, None, low_open=True)
        assert not positive.contains(0.0)
        assert positive.contains(1e-300)
        probability = Range(0.0, 1.0)
        assert probability.contains(0.0) and probability.contains(1.0)
        assert not probability.contains(1.5)


if __name__ == "__main__":
    pytest.main([__file__])
