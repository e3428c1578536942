import json
from fractions import Fraction

import pytest

from bvbounds import (
    DomainError,
    EventSystem,
    InstanceSpec,
    JointPMF,
    exact_tail,
    random_instance,
    tail_table_from_pmf,
    validate,
)
from bvbounds.oracle import ALL_PROPERTIES


class TestInstanceSpec:
    def test_kind_checked(self):
        with pytest.raises(DomainError):
            InstanceSpec(0, 2, 2, "gaussian")

    def test_event_system_needs_atoms(self):
        with pytest.raises(DomainError):
            InstanceSpec(0, 2, 2, "event_system")


class TestRandomInstance:
    def test_deterministic(self):
        a = random_instance(InstanceSpec(0, 1, 1))
        b = random_instance(InstanceSpec(0, 1, 1))
        assert a.p == b.p

    def test_mass_is_one(self):
        for seed in range(20):
            pmf = random_instance(InstanceSpec(seed, 3, 2, "sparse_pmf"))
            assert sum(x for row in pmf.p for x in row) == 1

    def test_event_system_deterministic_and_normalized(self):
        spec = InstanceSpec(5, 3, 3, "event_system", atoms=6)
        a, b = random_instance(spec), random_instance(spec)
        assert isinstance(a, EventSystem)
        assert a.atoms == b.atoms
        assert sum(w for w, _, _ in a.atoms) == 1


class TestExactTail:
    def test_total(self, e2):
        assert exact_tail(e2, 0, 0) == 1

    def test_e2_values(self, e2):
        assert exact_tail(e2, 1, 1) == Fraction(2, 3)
        assert exact_tail(e2, 2, 1) == Fraction(1, 3)

    def test_out_of_range(self, e2):
        with pytest.raises(DomainError):
            exact_tail(e2, 3, 0)

    def test_table_matches_pointwise(self, e2):
        tt = tail_table_from_pmf(e2)
        for u in range(3):
            for v in range(3):
                assert tt.q[u][v] == exact_tail(e2, u, v)


class TestValidate:
    def test_clean_run(self):
        specs = [InstanceSpec(s, 3, 3) for s in range(20)]
        report = validate(specs)
        assert report.trials == 20
        assert report.ok
        assert report.failures == []

    def test_event_system_specs_exercise_gumbel_identity(self):
        specs = [
            InstanceSpec(s, 3, 2, "event_system", atoms=5) for s in range(10)
        ]
        report = validate(specs, ["gumbel_identity"])
        assert report.ok

    def test_empty_property_set(self):
        report = validate([InstanceSpec(0, 2, 2)], [])
        assert report.trials == 1
        assert report.ok

    def test_unknown_property(self):
        with pytest.raises(DomainError, match="unknown property"):
            validate([InstanceSpec(0, 2, 2)], ["no_such_property"])

    def test_reproducible_reports(self):
        specs = [InstanceSpec(s, 2, 4, "sparse_pmf") for s in range(8)]
        r1 = validate(specs, ["theorem1_roundtrip", "sandwich_chung"])
        r2 = validate(specs, ["theorem1_roundtrip", "sandwich_chung"])
        assert r1.trials == r2.trials
        assert [f.to_dict() for f in r1.failures] == [
            f.to_dict() for f in r2.failures
        ]

    def test_corrupted_moments_are_caught(self, e2, monkeypatch):
        # fault injection: perturb s[1][1] and confirm the round trip fails
        import bvbounds.model as model_mod
        import bvbounds.oracle as oracle_mod

        real = model_mod.moments_from_pmf

        def corrupted(pmf):
            mm = real(pmf)
            s = [list(row) for row in mm.s]
            s[1][1] -= 1
            return model_mod.MomentMatrix(mm.m, mm.n, s)

        monkeypatch.setattr(oracle_mod.model, "moments_from_pmf", corrupted)
        report = validate([InstanceSpec(0, 2, 2)], ["theorem1_roundtrip"])
        assert not report.ok
        bad = report.failures[0]
        assert bad.property_id == "theorem1_roundtrip"
        # failure record carries full reproduction data
        doc = json.loads(json.dumps(report.to_dict()))
        assert doc["failures"][0]["spec"]["seed"] == 0
        assert "lhs" in doc["failures"][0]

    def test_all_properties_listed(self):
        assert "theorem1_roundtrip" in ALL_PROPERTIES
        assert "gumbel_identity" in ALL_PROPERTIES
