import pytest

HEADER = "function,n,eps0,eps1,M,mode,infidelity,success_probability,wall_time_ms,float_floor"


def make_row(function, n, eps, mode, infidelity, floored=False):
    return (
        f"{function},{n},{eps!r},{eps!r},128,{mode},{infidelity!r},0.001,0.5,"
        f"{'true' if floored else 'false'}"
    )


@pytest.fixture
def qubit_csv(tmp_path):
    eps = 2.0**-7
    rows = [HEADER]
    for function, base in (("gaussian", 1e-6), ("ghz", 0.75)):
        for mode, scale in (("correct", 1.0), ("incomplete", 1e4)):
            for n in (7, 8, 9):
                floored = function == "ghz" and mode == "correct" and n == 7
                value = 1e-15 if floored else base * scale * (1 + 0.1 * n)
                rows.append(make_row(function, n, eps, mode, min(value, 1.0), floored))
    path = tmp_path / "qubits.csv"
    path.write_text("\n".join(rows) + "\n")
    return path


@pytest.fixture
def epsilon_csv(tmp_path):
    rows = [HEADER]
    for mode, scale in (("correct", 1.0), ("incomplete", 1e3)):
        for e in (3, 4, 5):
            rows.append(make_row("sinc", 12, 2.0**-e, mode, min(scale * 4.0**-e, 1.0)))
    path = tmp_path / "eps.csv"
    path.write_text("\n".join(rows) + "\n")
    return path
