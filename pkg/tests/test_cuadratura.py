from fractions import Fraction

import pytest
from pydantic import ValidationError

from Models.polinomio import Polinomio
from Models.resultados import PeticionSumaPotencias
from Models.sistema import SistemaTsikh
from Util.cuadratura import (
    EspecCuadratura,
    brechas,
    cuadratura_por_ciclo,
    cuadratura_toro,
    radios_adaptativos,
    radios_por_defecto,
    verificar_dominancia,
)
from Util.error_handler import ErrorCuadratura, ViolacionDominancia
from Util.motor_waring import suma_potencias
from Util.transformacion import transformar_sistema
from Util.verificacion import desviacion_relativa


def _transformado(sistema, t):
    return transformar_sistema(sistema.con_t(t))


def test_cauchy_en_una_variable():
    """F̃ = w − 1 + t·c: una sola raíz en 1 − tc."""
    sistema = SistemaTsikh([[1]], [[1]], [Polinomio(1, {(1,): 1})], t=Fraction(1, 10))
    ts = transformar_sistema(sistema)
    assert cuadratura_toro(ts, (0,), EspecCuadratura(radios=(0.5,), nodos=64)) == pytest.approx(0.9, abs=1e-12)
    assert cuadratura_toro(ts, (0,), EspecCuadratura(radios=(0.5,), nodos=64, t=0)) == pytest.approx(1, abs=1e-12)


def test_radios_por_defecto(ejemplo1):
    ts = transformar_sistema(ejemplo1)
    assert brechas(ts) == (1.0, 2.0)
    assert radios_por_defecto(ts) == (0.25, 0.25)


def test_ciclos_en_t_cero(ejemplo1):
    """Cada toro recupera multiplicidad·a_J^{γ+I}: 0 en (0, −1) y 4 en (1, 1)."""
    ts = _transformado(ejemplo1, 0)
    (J1, v1), (J2, v2) = cuadratura_por_ciclo(ts, (0, 0), EspecCuadratura())
    assert (J1, J2) == ((0, 1), (1, 0))
    assert v1 == pytest.approx(0, abs=1e-12)
    assert v2 == pytest.approx(4, abs=1e-12)


@pytest.mark.parametrize("t", [Fraction(1, 100), Fraction(1, 10)])
def test_ejemplo1_contra_el_motor(ejemplo1, t):
    ts = _transformado(ejemplo1, t)
    radios = radios_adaptativos(ts, ts.t)
    cuadratura = cuadratura_toro(ts, (0, 0), EspecCuadratura(radios=radios, t=complex(ts.t)))
    motor = suma_potencias(ejemplo1, PeticionSumaPotencias(gamma=(0, 0), t=t)).valor
    assert desviacion_relativa(cuadratura, motor) <= 1e-6


def test_radios_adaptativos_crecen_con_t(ejemplo1):
    assert radios_adaptativos(_transformado(ejemplo1, Fraction(1, 100)), 0.01) == (0.25, 0.25)
    assert radios_adaptativos(_transformado(ejemplo1, Fraction(1, 10)), 0.1) == pytest.approx((0.45, 0.9))


def test_estabilidad_al_duplicar_nodos(ejemplo1):
    ts = _transformado(ejemplo1, Fraction(1, 100))
    valores = [
        cuadratura_toro(ts, (1, 0), EspecCuadratura(nodos=nodos, t=0.01))
        for nodos in (128, 256)
    ]
    assert abs(valores[0] - valores[1]) <= 1e-8


def test_dominancia_violada_en_t_uno(ejemplo1):
    ts = transformar_sistema(ejemplo1)
    with pytest.raises(ViolacionDominancia):
        verificar_dominancia(ts, 1, radios_por_defecto(ts), 32)
    with pytest.raises(ViolacionDominancia):
        cuadratura_toro(ts, (0, 0), EspecCuadratura())
    with pytest.raises(ViolacionDominancia):
        radios_adaptativos(ts, 1)


def test_radios_que_no_aislan(ejemplo1):
    ts = _transformado(ejemplo1, 0)
    with pytest.raises(ErrorCuadratura) as excinfo:
        cuadratura_toro(ts, (0, 0), EspecCuadratura(radios=(0.6, 0.5)))
    assert excinfo.type is ErrorCuadratura


def test_nodos_minimos():
    with pytest.raises(ValidationError):
        EspecCuadratura(nodos=4)
