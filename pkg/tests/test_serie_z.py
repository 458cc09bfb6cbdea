import random
from fractions import Fraction

import pytest

from conftest import sistema_aleatorio
from Models.escalar import Modo
from Models.resultados import PeticionSumaPotencias
from Util.error_handler import ErrorDimension
from Util.motor_waring import serie_ciclo_local, suma_potencias
from Util.serie_z import residuo_serie_z
from Util.transformacion import raices_reticulares, transformar_sistema
from Util.verificacion import desviacion_relativa


@pytest.mark.lento
def test_serie_z_coincide_con_el_motor():
    """Con todos los a_ij ≠ 0 y t pequeño la serie z suma todas las raíces."""
    rng = random.Random(29)
    for _ in range(10):
        sistema = sistema_aleatorio(rng)
        motor = suma_potencias(sistema, PeticionSumaPotencias(gamma=(0, 0), t=Fraction(1, 1000))).valor
        serie = residuo_serie_z(sistema.en_modo(Modo.FLOTANTE), (0, 0), 1e-3, 4)
        assert serie.ciclos_omitidos == []
        assert desviacion_relativa(serie.valor, motor) <= 1e-9
        assert serie.magnitud_ultima_capa < 1e-7


def test_serie_z_omite_ciclos_con_a_nulo(ejemplo1):
    """En el Ejemplo 1 solo el ciclo J=(1,0) evita el a₁₁ = 0 y coincide con su serie local."""
    t = 1e-3
    flotante = ejemplo1.en_modo(Modo.FLOTANTE)
    serie = residuo_serie_z(flotante, (0, 0), t, 4)
    assert serie.ciclos_omitidos == [(0, 1)]

    ts = transformar_sistema(flotante)
    cruce = raices_reticulares(ts)[1]
    local = serie_ciclo_local(ts, cruce, (0, 0), t, 4)
    assert desviacion_relativa(serie.valor, local) <= 1e-9


def test_serie_z_en_t_cero_da_el_aporte_reticular(ejemplo1):
    """t = 0: el ciclo J=(1,0) aporta 4·(1·1)."""
    serie = residuo_serie_z(ejemplo1, (0, 0), 0, 2)
    assert serie.valor == 4
    assert serie.magnitud_ultima_capa == 0


def test_serie_z_orden_negativo(ejemplo1):
    with pytest.raises(ErrorDimension):
        residuo_serie_z(ejemplo1, (0, 0), 0, -1)
