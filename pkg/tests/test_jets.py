import itertools
import math
import random
from fractions import Fraction

import pytest

from Models.escalar import Gaussiano
from Models.jet import (
    Jet,
    coeficiente_jet,
    invertir_jet,
    jet_desde_polinomio,
    jet_identidad,
    multiplicar_jets,
    potenciar_jet,
)
from Models.multi_indice import MultiIndice, clave_grlex, indices_acotados, indices_norma_hasta, recorrer_capas
from Models.polinomio import Polinomio
from Util.combinatoria import permanente, permutaciones, signo_permutacion
from Util.error_handler import ErrorDimension, ErrorTruncacion, JetNoInvertible


def test_serie_geometrica():
    """1/(1−w) en 0 tiene todos los coeficientes iguales a 1."""
    uno_menos_w = Polinomio(1, {(0,): 1, (1,): -1})
    inverso = invertir_jet(jet_desde_polinomio(uno_menos_w, (0,), (6,)))
    assert [coeficiente_jet(inverso, (d,)) for d in range(7)] == [1] * 7


def test_coeficiente_de_taylor_anisotropo():
    """(w₁−1)²(w₂+1) en (1, 1): el coeficiente de u₁² es 2 y el de u₁²u₂ es 1."""
    p = Polinomio.lineal(2, 0, 1) ** 2 * Polinomio.lineal(2, 1, -1)
    jet = jet_desde_polinomio(p, (1, 1), (2, 1))
    assert jet.coeficiente((2, 0)) == 2
    assert jet.coeficiente((2, 1)) == 1
    assert jet.coeficiente((1, 1)) == 0


def test_producto_trunca_al_orden_minimo():
    a = jet_desde_polinomio(Polinomio.lineal(2, 0, -1) ** 3, (0, 0), (3, 0))
    b = jet_desde_polinomio(Polinomio.lineal(2, 0, -1), (0, 0), (1, 2))
    producto = multiplicar_jets(a, b)
    assert tuple(producto.orden) == (1, 0)
    assert producto.coeficiente((0, 0)) == 1
    assert producto.coeficiente((1, 0)) == 4


def test_inverso_por_original_es_identidad():
    rng = random.Random(7)
    terminos = {
        exps: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        for exps in itertools.product(range(3), repeat=2)
    }
    terminos[(0, 0)] = 3
    p = Polinomio(2, terminos)
    centro = (Fraction(1, 2), Gaussiano(-1, 1))
    jet = jet_desde_polinomio(p, centro, (4, 3))
    if not jet.coeficiente((0, 0)):
        pytest.skip("valor nulo en el centro")
    assert multiplicar_jets(jet, invertir_jet(jet)) == jet_identidad((4, 3), centro)


def test_potencia_negativa():
    jet = jet_desde_polinomio(Polinomio(2, {(0, 0): 2, (1, 0): 1, (1, 1): -3}), (0, 0), (3, 3))
    assert potenciar_jet(jet, -2) == multiplicar_jets(invertir_jet(jet), invertir_jet(jet))
    assert potenciar_jet(jet, 0) == jet_identidad((3, 3), (0, 0))


def test_jet_no_invertible():
    jet = jet_desde_polinomio(Polinomio.lineal(1, 0, 1), (1,), (3,))
    with pytest.raises(JetNoInvertible):
        invertir_jet(jet)


def test_coeficiente_fuera_de_orden():
    jet = jet_identidad((2, 1), (0, 0))
    with pytest.raises(ErrorTruncacion):
        jet.coeficiente((0, 2))


def test_centros_distintos():
    a = jet_identidad((1,), (0,))
    b = jet_identidad((1,), (1,))
    with pytest.raises(ErrorDimension):
        multiplicar_jets(a, b)


def test_jet_descarta_coeficientes_fuera_de_orden():
    jet = Jet((1, 1), (0, 0), {(0, 0): 1, (2, 0): 5})
    assert (2, 0) not in jet.coeficientes


def test_multi_indices():
    assert indices_norma_hasta(2, 1) == [(0, 0), (1, 0), (0, 1)]
    capas = list(recorrer_capas(2, 2))
    assert capas[2] == [(2, 0), (1, 1), (0, 2)]
    assert indices_acotados((1, 1))[-1] == (1, 1)
    assert sorted([(0, 1), (1, 0), (0, 0)], key=clave_grlex) == [(0, 0), (1, 0), (0, 1)]
    assert MultiIndice((1, 2)).mas((1, 1)) == (2, 3)
    assert MultiIndice((2, 3)).factorial() == 12
    with pytest.raises(ErrorDimension):
        MultiIndice((1, -1))


def test_permanente():
    assert permanente([[1, 2], [2, 1]]) == 5
    assert permanente([[1] * 3] * 3) == 6
    assert permanente([]) == 1


def test_permanente_contra_fuerza_bruta():
    rng = random.Random(3)
    matriz = [[rng.randint(0, 3) for _ in range(4)] for _ in range(4)]
    bruta = sum(math.prod(matriz[i][j] for i, j in enumerate(p)) for p in permutaciones(4))
    assert permanente(matriz) == bruta


def test_signo_permutacion():
    assert signo_permutacion((0, 1)) == 1
    assert signo_permutacion((1, 0)) == -1
    assert signo_permutacion((1, 2, 0)) == 1
    assert permutaciones(2) == [(0, 1), (1, 0)]


def _polinomio_aleatorio(rng):
    terminos = {
        (rng.randint(0, 4), rng.randint(0, 4)): Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        for _ in range(rng.randint(2, 6))
    }
    return Polinomio(2, terminos)


@pytest.mark.parametrize("semilla", range(8))
def test_jet_del_producto_es_producto_de_jets(semilla):
    rng = random.Random(semilla)
    p, q = _polinomio_aleatorio(rng), _polinomio_aleatorio(rng)
    centro = (Fraction(rng.randint(-3, 3), 2), Gaussiano(rng.randint(-2, 2), rng.randint(-2, 2)))
    orden = (rng.randint(0, 4), rng.randint(0, 4))
    directo = jet_desde_polinomio(p * q, centro, orden)
    assert directo == multiplicar_jets(jet_desde_polinomio(p, centro, orden), jet_desde_polinomio(q, centro, orden))


@pytest.mark.parametrize("semilla", range(5))
def test_coeficiente_es_derivada_sobre_factorial(semilla):
    """coeficiente δ del jet en c = (∂^δ p)(c) / δ!."""
    rng = random.Random(50 + semilla)
    p = _polinomio_aleatorio(rng)
    centro = (Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4), 5))
    jet = jet_desde_polinomio(p, centro, (4, 4))
    for delta in itertools.product(range(5), repeat=2):
        derivada = p
        for j, veces in enumerate(delta):
            for _ in range(veces):
                derivada = derivada.derivar(j)
        factorial = math.factorial(delta[0]) * math.factorial(delta[1])
        assert jet.coeficiente(delta) * factorial == derivada.evaluar(centro)
