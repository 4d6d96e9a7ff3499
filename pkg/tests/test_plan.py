"""实验方案构造测试用例"""

import json

import numpy as np
import pytest
from pydantic import ValidationError

from qptlab.common.enums import SchemeTag
from qptlab.common.exceptions import InvalidArgumentError, SizeLimitError
from qptlab.core import product_ket
from qptlab.measurement import LOSS_LABEL, bell_measurement
from qptlab.qpt import Config, ExperimentPlan, PlanDump, build_plan, planned_config_count, reported_config_count


@pytest.mark.unit
class TestBuildPlan:
    """配置数、辅助比特与规模上限"""

    @pytest.mark.parametrize("scheme,expected", [
        (SchemeTag.SQPT, 16),
        (SchemeTag.AAPT_SEPARABLE, 9),
        (SchemeTag.AAPT_MUB, 5),
        (SchemeTag.AAPT_POVM, 1),
        (SchemeTag.DCQD, 4),
    ])
    def test_single_qubit_config_counts(self, scheme, expected):
        plan = build_plan(scheme, 1)
        assert len(plan.configs) == expected

    @pytest.mark.parametrize("scheme,expected", [
        (SchemeTag.SQPT, 256),
        (SchemeTag.AAPT_SEPARABLE, 81),
        (SchemeTag.AAPT_MUB, 17),
        (SchemeTag.DCQD, 16),
    ])
    def test_two_qubit_config_counts(self, scheme, expected):
        assert len(build_plan(scheme, 2).configs) == expected

    def test_count_formulas(self):
        for n in range(1, 5):
            assert planned_config_count(SchemeTag.DCQD, n) == 4 ** n
            assert planned_config_count(SchemeTag.SQPT, n) == 16 ** n
            assert reported_config_count(SchemeTag.AAPT_SEPARABLE, n) == 16 ** n
        assert [planned_config_count(SchemeTag.DCQD, n) for n in (3, 4)] == [64, 256]

    def test_ancillas(self):
        assert build_plan("sqpt", 1).ancilla_count == 0
        assert build_plan("aapt-povm", 1).ancilla_count == 3
        assert build_plan("aapt-povm", 1).simulated_ancillas == 1
        assert build_plan("dcqd", 2).ancilla_count == 2

    def test_every_config_reports_loss(self):
        for scheme in SchemeTag:
            for c in build_plan(scheme, 1).configs:
                assert c.measurement.outcome_labels[-1] == LOSS_LABEL

    def test_dcqd_inputs_entangled(self):
        plan = build_plan(SchemeTag.DCQD, 2)
        assert all(c.is_entangled() for c in plan.configs)
        assert [c.label for c in build_plan(SchemeTag.DCQD, 1).configs] == [
            "dcqd:P", "dcqd:Z", "dcqd:X", "dcqd:Y"]

    def test_labels_unique(self):
        for scheme in SchemeTag:
            labels = [c.label for c in build_plan(scheme, 1).configs]
            assert len(labels) == len(set(labels))

    @pytest.mark.parametrize("scheme,n", [
        (SchemeTag.DCQD, 3),
        (SchemeTag.DCQD, 9),
        (SchemeTag.SQPT, 3),
        (SchemeTag.AAPT_POVM, 2),
    ])
    def test_size_limit(self, scheme, n):
        with pytest.raises(SizeLimitError) as exc_info:
            build_plan(scheme, n)
        assert exc_info.value.exit_code == 2

    def test_non_positive_n(self):
        with pytest.raises(InvalidArgumentError):
            build_plan(SchemeTag.DCQD, 0)

    def test_unknown_scheme(self):
        with pytest.raises(ValueError):
            build_plan("ppt", 1)

    def test_plan_rejects_wrong_count(self):
        plan = build_plan(SchemeTag.DCQD, 1)
        with pytest.raises(ValidationError):
            ExperimentPlan(
                scheme=plan.scheme, n=1, configs=plan.configs[:3],
                ancilla_count=plan.ancilla_count, simulated_ancillas=plan.simulated_ancillas,
            )

    def test_dcqd_plan_rejects_product_inputs(self):
        plan = build_plan(SchemeTag.DCQD, 1)
        product = plan.configs[0].model_copy(update={"input_state": product_ket(["0", "0"])})
        with pytest.raises(ValidationError):
            ExperimentPlan(
                scheme=plan.scheme, n=1, configs=(product, *plan.configs[1:]),
                ancilla_count=plan.ancilla_count, simulated_ancillas=plan.simulated_ancillas,
            )

    def test_config_layout_checked(self):
        with pytest.raises(ValidationError):
            Config(label="bad", input_state=product_ket(["0"]), measurement=bell_measurement(1), system_qubits=1)
        with pytest.raises(ValidationError):
            Config(label="a,b", input_state=product_ket(["0", "0"]), measurement=bell_measurement(1),
                   system_qubits=1, ancilla_qubits=1)


@pytest.mark.unit
class TestPlanDump:
    """方案转储"""

    def test_dump_is_json(self):
        dump = PlanDump.from_plan(build_plan(SchemeTag.AAPT_MUB, 1))
        doc = json.loads(dump.model_dump_json())
        assert doc["scheme"] == "aapt-mub"
        assert doc["configurations"] == 5
        assert doc["configs"][0]["label"].startswith("mub0:")
        assert doc["configs"][0]["outcomes"][-1] == LOSS_LABEL

    def test_amplitudes_reproduce_input(self):
        plan = build_plan(SchemeTag.DCQD, 1)
        record = PlanDump.from_plan(plan).configs[1]
        amps = np.array([complex(re, im) for re, im in record.input_amplitudes])
        assert np.allclose(amps, plan.configs[1].input_state.amplitudes)

    def test_separable_reports_sixteen(self):
        dump = PlanDump.from_plan(build_plan(SchemeTag.AAPT_SEPARABLE, 1))
        assert dump.configurations == 9
        assert dump.reported_configurations == 16
