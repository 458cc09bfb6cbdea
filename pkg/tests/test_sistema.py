import random
from fractions import Fraction

import pytest

from conftest import sistemas_aleatorios
from Models.documentos import cargar_sistema
from Models.escalar import Gaussiano, Modo
from Models.polinomio import Polinomio
from Models.sistema import SistemaTsikh
from Util.error_handler import ErrorDimension, ErrorValidacion
from Util.transformacion import grados_efectivos, numero_de_raices, raices_reticulares, transformar_sistema
from Util.validacion import exigir_valido, validar_sistema



def _sistema(a, m, Q):
    return SistemaTsikh(a, m, [Polinomio(2, terminos) for terminos in Q])


def _hipotesis(sistema):
    return {(v.hipotesis, v.i, v.j) for v in validar_sistema(sistema).violaciones}


def test_ejemplo1_es_valido(ejemplo1):
    reporte = validar_sistema(ejemplo1)
    assert reporte.valido
    assert reporte.violaciones == []


def test_cota_de_grado(ruta_ejemplos):
    sistema = cargar_sistema(ruta_ejemplos / "ejemplo1_grado_invalido.json")
    assert _hipotesis(sistema) == {("cota_grado", 1, 0)}


def test_columnas_repetidas():
    sistema = _sistema([[1, 1], [1, 2]], [[1, 1], [1, 1]], [{(1, 1): 1}, {(1, 1): 1}])
    assert ("distincion_columnas", 0, 0) in _hipotesis(sistema)


def test_divisibilidad():
    sistema = _sistema([[1, 2], [2, 1]], [[1, 1], [1, 1]], [{(0, 1): 1}, {(1, 1): 1}])
    assert _hipotesis(sistema) == {("divisibilidad", 0, None)}


def test_perturbacion_nula_con_a_nulo():
    sistema = _sistema([[0, 1], [1, 2]], [[0, 1], [1, 1]], [{}, {(1, 1): 1}])
    assert _hipotesis(sistema) == {("perturbacion_no_nula", 0, 0)}


def test_grado_positivo():
    sistema = _sistema([[1, 2], [2, 1]], [[0, 1], [1, 1]], [{(1, 1): 1}, {(1, 1): 1}])
    hipotesis = _hipotesis(sistema)
    assert ("grado_positivo", 0, 0) in hipotesis


def test_exigir_valido_adjunta_reporte():
    sistema = _sistema([[1, 1], [1, 2]], [[1, 1], [1, 1]], [{(1, 1): 1}, {(1, 1): 1}])
    with pytest.raises(ErrorValidacion) as excinfo:
        exigir_valido(sistema)
    assert not excinfo.value.reporte.valido


def test_dimensiones_inconsistentes():
    with pytest.raises(ErrorDimension):
        SistemaTsikh([[1, 2]], [[1, 1], [1, 1]], [Polinomio(2), Polinomio(2)])


def test_q_omite_factores_con_a_nulo(ejemplo1):
    """q₁ del Ejemplo 1 es (1 − z₂)²."""
    uno_menos_z2 = Polinomio.constante(2, 1) - Polinomio.variable(2, 1)
    assert ejemplo1.q(0) == uno_menos_z2 ** 2
    assert ejemplo1.q_sin(1, 0) == Polinomio.constante(2, 1) + Polinomio.variable(2, 1)


def test_transformacion_del_ejemplo1(ejemplo1):
    ts = transformar_sistema(ejemplo1)
    assert ts.mhat == ((1, 2), (2, 1))
    w1, w2 = Polinomio.variable(2, 0), Polinomio.variable(2, 1)
    assert ts.qtilde[0] == w1 * Polinomio.lineal(2, 1, 1) ** 2
    assert ts.qtilde[1] == Polinomio.lineal(2, 0, 1) ** 2 * Polinomio.lineal(2, 1, -1)
    assert ts.Qtilde[0] == Polinomio.constante(2, 1)
    assert ts.Qtilde[1] == Polinomio.constante(2, 1)
    assert ts.q_deflactado(1, 0) == Polinomio.lineal(2, 1, -1)
    assert w2.grado(1) == 1


def test_transformacion_exponentes_de_Q():
    """c·z^e pasa a c·w^{m̂ − e}."""
    sistema = _sistema([[1, 2], [2, 1]], [[2, 2], [1, 1]], [{(1, 2): 3, (2, 1): 1}, {(1, 1): -1}])
    ts = transformar_sistema(sistema)
    assert ts.Qtilde[0] == Polinomio(2, {(1, 0): 3, (0, 1): 1})
    assert ts.Qtilde[1] == Polinomio.constante(2, -1)


def test_grados_efectivos_con_a_nulo():
    sistema = _sistema([[0, 1], [1, 2]], [[0, 2], [1, 1]], [{(2, 1): 1, (1, 2): 1}, {(1, 1): 1}])
    assert grados_efectivos(sistema) == ((2, 2), (1, 1))


def test_raices_reticulares_del_ejemplo1(ejemplo1):
    ts = transformar_sistema(ejemplo1)
    identidad, cruce = raices_reticulares(ts)
    assert identidad.J == (0, 1)
    assert identidad.punto == (0, -1)
    assert (identidad.signo, identidad.multiplicidad) == (1, 1)
    assert cruce.J == (1, 0)
    assert cruce.punto == (1, 1)
    assert (cruce.signo, cruce.multiplicidad) == (-1, 4)
    assert numero_de_raices(ts) == 5


def test_con_t_y_en_modo(ejemplo1):
    otro = ejemplo1.con_t(Fraction(1, 10))
    assert otro.t == Gaussiano(Fraction(1, 10))
    flotante = ejemplo1.en_modo(Modo.FLOTANTE)
    assert flotante.modo == Modo.FLOTANTE
    assert flotante.a[1][1] == -1 + 0j
    assert flotante.en_modo(Modo.EXACTO).Q == ejemplo1.Q


@pytest.mark.parametrize("semilla", range(4))
def test_transformacion_reciproca_en_puntos_aleatorios(semilla):
    """w^{m̂ᵢ}·fᵢ(1/w) = F̃ᵢ(w)."""
    rng = random.Random(semilla)
    for sistema in sistemas_aleatorios(3, semilla=60 + semilla):
        ts = transformar_sistema(sistema)
        F = ts.F()
        for _ in range(20):
            w = [Gaussiano(Fraction(rng.randint(-7, 7), rng.randint(1, 5)), rng.choice([-2, -1, 1, 2])) for _ in range(2)]
            inverso = [1 / x for x in w]
            for i in range(2):
                escala = w[0] ** ts.mhat[i][0] * w[1] ** ts.mhat[i][1]
                assert escala * sistema.f(i).evaluar(inverso) == F[i].evaluar(w)


def test_grado_de_Q_transformado_baja_estrictamente():
    for sistema in sistemas_aleatorios(30, semilla=71):
        ts = transformar_sistema(sistema)
        for i in range(2):
            for j in range(2):
                assert ts.Qtilde[i].grado(j) < ts.mhat[i][j]
