import random

from mpemc.generate import gen_random
from mpemc.instance import Solution, power_profile, trivial_cover
from mpemc.verify import verify


def test_trivial_cover_passes():
    rng = random.Random(0)
    for _ in range(100):
        inst = gen_random(rng.randrange(10**6), rng.randint(1, 8), rng.random(), 10, 3)
        assert verify(inst, trivial_cover(inst)).ok


def test_empty_set_on_path(path):
    report = verify(path, power_profile(path, ()))
    degree_violations = [v for v in report.violations if "below requirement" in v]
    assert len(degree_violations) == 3
    assert not report.ok


def test_tampered_power(path):
    sol = trivial_cover(path)
    tampered = Solution(sol.chosen, (1, 2, 9), sol.total)
    report = verify(path, tampered)
    assert any("power mismatch" in v for v in report.violations)


def test_tampered_total_and_bad_reference(path):
    sol = trivial_cover(path)
    report = verify(path, Solution(sol.chosen | {9}, sol.power, sol.total + 1))
    text = " ".join(report.violations)
    assert "not in instance" in text and "total power mismatch" in text
    assert "FAILED" in report.render()
