import math
import random
from fractions import Fraction

import pytest

from conftest import sistemas_aleatorios
from Models.documentos import cargar_sistema
from Models.escalar import Gaussiano, Modo
from Models.polinomio import Polinomio
from Models.resultados import PeticionSumaPotencias
from Models.sistema import SistemaTsikh
from Services.SistemaService import SistemaService
from Util.error_handler import ErrorDimension, ErrorValidacion
from Util.motor_waring import (
    coeficientes_newton,
    conjunto_R,
    evaluar_en_t,
    grado_cota_t,
    orden_beta,
    polinomio_sigma_en_t,
    serie_ciclo_local,
    suma_potencias,
    suma_potencias_t0,
)
from Util.series_transcendentes import forma_cerrada_ejemplo1, sistema_ejemplo1
from Util.transformacion import raices_reticulares, transformar_sistema
from Util.verificacion import desviacion_relativa


def _sigma(sistema, gamma=(0, 0), t=1, modo=Modo.EXACTO):
    return suma_potencias(sistema, PeticionSumaPotencias(gamma=gamma, t=t, modo=modo)).valor


def _racional_no_nulo(rng):
    return Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 7))


def _sistema_n1(c):
    """f = (1 − z)² + t·c·z; del lado w: w² − (2 − tc)w + 1."""
    return SistemaTsikh([[1]], [[2]], [Polinomio(1, {(1,): c})])


def test_ejemplo1_valor_exacto(ejemplo1):
    assert _sigma(ejemplo1) == Gaussiano(Fraction(17, 4))


def test_ejemplo1_desglose(ejemplo1):
    reporte = suma_potencias(ejemplo1, PeticionSumaPotencias(gamma=(0, 0), t=1))
    entradas = reporte.desglose.entradas
    assert [e.K for e in entradas] == [(0, 0), (0, 0), (1, 0), (1, 0), (0, 1), (0, 1)]
    assert [e.J for e in entradas[:2]] == [(0, 1), (1, 0)]
    assert entradas[1].beta == (1, 1)
    assert entradas[3].beta == (1, 3)
    assert reporte.desglose.total == reporte.valor


def test_ejemplo1_forma_cerrada_en_parametros_aleatorios():
    rng = random.Random(11)
    for _ in range(20):
        a2, a3, b1, b3 = (_racional_no_nulo(rng) for _ in range(4))
        b2 = _racional_no_nulo(rng)
        while b2 == a2:
            b2 = _racional_no_nulo(rng)
        sistema = sistema_ejemplo1(a2, a3, b1, b2, b3)
        esperado = forma_cerrada_ejemplo1(Gaussiano(a2), Gaussiano(a3), Gaussiano(b1), Gaussiano(b2))
        assert _sigma(sistema) == esperado


def test_ejemplo1_en_t_cero(ejemplo1):
    assert _sigma(ejemplo1, t=0) == 4


def test_forma_cerrada_en_t_cero():
    for sistema in sistemas_aleatorios(6, semilla=5):
        ts = transformar_sistema(sistema)
        for gamma in [(0, 0), (1, 0), (0, 2)]:
            assert _sigma(sistema, gamma, t=0) == suma_potencias_t0(ts, gamma)


def test_modo_flotante(ejemplo1):
    valor = _sigma(ejemplo1, modo=Modo.FLOTANTE)
    assert isinstance(valor, complex)
    assert valor == pytest.approx(4.25, rel=1e-12)


def test_sistema_de_una_variable():
    c, t = Fraction(3, 7), Fraction(2, 5)
    sistema = _sistema_n1(c)
    s1 = 2 - t * c
    assert _sigma(sistema, (0,), t) == s1
    assert _sigma(sistema, (1,), t) == s1 ** 2 - 2


def test_gamma_negativo_rechazado():
    with pytest.raises(ValueError):
        PeticionSumaPotencias(gamma=(-1, 0))


def test_gamma_de_otra_dimension(ejemplo1):
    with pytest.raises(ErrorDimension):
        _sigma(ejemplo1, gamma=(0,))


def test_sistema_invalido(ruta_ejemplos):
    with pytest.raises(ErrorValidacion):
        _sigma(cargar_sistema(ruta_ejemplos / "ejemplo1_grado_invalido.json"))


def test_conjunto_R_y_beta():
    assert conjunto_R((0, 0)) == [(0, 0), (1, 0), (0, 1)]
    assert len(conjunto_R((1, 0))) == 6
    mhat = ((1, 2), (2, 1))
    assert orden_beta((1, 0), (1, 0), mhat) == (1, 3)
    assert orden_beta((0, 0), (0, 1), mhat) == (0, 0)
    with pytest.raises(ErrorDimension):
        orden_beta((0, 0), (0, 1), ((0, 2), (2, 1)))


def test_polinomialidad_en_t():
    gamma = (0, 0)
    for sistema in sistemas_aleatorios(10, semilla=17):
        coeficientes = polinomio_sigma_en_t(sistema, gamma)
        assert len(coeficientes) == grado_cota_t(2, gamma) + 1
        for t in [Fraction(1, 3), Fraction(-2, 5), Fraction(7, 2), Fraction(11), Gaussiano(0, 1)]:
            assert evaluar_en_t(coeficientes, Gaussiano(t) if isinstance(t, Fraction) else t) == _sigma(sistema, gamma, t)


def test_polinomio_en_t_del_ejemplo1(ejemplo1):
    coeficientes = polinomio_sigma_en_t(ejemplo1, (0, 0))
    assert coeficientes[0] == 4
    assert evaluar_en_t(coeficientes, Gaussiano(1)) == Gaussiano(Fraction(17, 4))


def test_recurrencia_de_newton():
    b = coeficientes_newton([Fraction(3, 2), Fraction(5, 4)], 2)
    assert b == [1, Fraction(-3, 2), Fraction(1, 2)]
    with pytest.raises(ErrorDimension):
        coeficientes_newton([1], 2)


def test_recurrencia_de_newton_recupera_el_polinomio():
    """f(w) = ∏(1 − w/rᵢ): sₖ = Σ rᵢ^{−k} determina los coeficientes."""
    rng = random.Random(23)
    for _ in range(5):
        raices = [_racional_no_nulo(rng) for _ in range(rng.randint(1, 6))]
        coeficientes = [Fraction(1)]
        for r in raices:
            siguiente = coeficientes + [Fraction(0)]
            for k in range(len(coeficientes)):
                siguiente[k + 1] -= coeficientes[k] / r
            coeficientes = siguiente
        sumas = [sum(r ** -k for r in raices) for k in range(1, len(raices) + 1)]
        assert coeficientes_newton(sumas, len(raices)) == coeficientes


def test_coeficientes_de_la_resultante(ejemplo1):
    b = SistemaService(ejemplo1).coeficientes_resultante(2)
    assert b[0] == 1
    assert b[1] == Gaussiano(Fraction(-17, 4))


def test_series_locales_suman_el_total(ejemplo1):
    t = 1e-3
    ts = transformar_sistema(ejemplo1.en_modo(Modo.FLOTANTE))
    por_ciclo = [serie_ciclo_local(ts, raiz, (0, 0), t, 4) for raiz in raices_reticulares(ts)]
    total = _sigma(ejemplo1, t=Fraction(1, 1000))
    assert desviacion_relativa(sum(por_ciclo), total) <= 1e-10


def test_orden_de_suma_determinista(ejemplo1):
    a = _sigma(ejemplo1, (1, 1), t=0.3, modo=Modo.FLOTANTE)
    b = _sigma(ejemplo1, (1, 1), t=0.3, modo=Modo.FLOTANTE)
    assert a == b
    assert not math.isnan(a.real)
