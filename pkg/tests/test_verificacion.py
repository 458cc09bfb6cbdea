from fractions import Fraction

import pytest

from Models.polinomio import Polinomio
from Models.sistema import SistemaTsikh
from Services.VerificacionService import VerificacionService
from Util.error_handler import ErrorCuadratura
from Util.motor_waring import suma_potencias
from Util.verificacion import desviacion_relativa, verificar_suma_potencias


def _motor_corrupto(sistema, peticion):
    reporte = suma_potencias(sistema, peticion)
    return reporte.model_copy(update={"valor": -reporte.valor})


def test_desviacion_relativa():
    assert desviacion_relativa(0, 1e-12) == pytest.approx(1e-12)
    assert desviacion_relativa(100, 101) == pytest.approx(1 / 101)


def test_ejemplo1_en_t_uno(ejemplo1):
    reporte = verificar_suma_potencias(ejemplo1, (0, 0))
    assert reporte.aprobado
    assert reporte.conteo_raices == 5
    assert reporte.permanente == 5
    assert set(reporte.desviaciones) == {"motor-raices"}
    assert any("cuadratura omitida" in nota for nota in reporte.notas)


def test_ejemplo1_en_t_pequeno_usa_cuadratura(ejemplo1):
    reporte = VerificacionService(ejemplo1).verificar((0, 0), Fraction(1, 100))
    assert reporte.aprobado
    assert set(reporte.desviaciones) == {"motor-raices", "motor-cuadratura"}
    assert reporte.desviaciones["motor-cuadratura"] <= 1e-6


def test_motor_corrupto_es_detectado(ejemplo1):
    reporte = VerificacionService(ejemplo1, motor=_motor_corrupto).verificar((0, 0))
    assert not reporte.aprobado
    assert reporte.desviaciones["motor-raices"] > 1


def test_serie_z_omitida_con_a_nulo(ejemplo1):
    reporte = verificar_suma_potencias(ejemplo1, (0, 0), Fraction(1, 1000), trunc_alfa=2)
    assert "serie_z" not in reporte.valores
    assert any("serie z" in nota for nota in reporte.notas)


def test_serie_z_incluida_sin_a_nulo():
    sistema = SistemaTsikh(
        [[1, 3], [-1, 1]],
        [[1, 1], [1, 1]],
        [Polinomio.monomio(2, (1, 1), Fraction(1, 3)), Polinomio.monomio(2, (1, 1), Fraction(-1, 4))],
    )
    reporte = verificar_suma_potencias(sistema, (0, 0), Fraction(1, 1000), trunc_alfa=3)
    assert reporte.aprobado
    assert set(reporte.desviaciones) == {"motor-raices", "motor-cuadratura", "motor-serie_z"}


def test_radios_fijos_invalidos(ejemplo1):
    with pytest.raises(ErrorCuadratura):
        verificar_suma_potencias(ejemplo1, (0, 0), radios=(0.6, 0.5))
