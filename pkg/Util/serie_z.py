"""
Serie del lado z: desarrollo en t de la integral residual alrededor de los
puntos z̃_J (coordenada jᵢ igual a 1/a_{i,jᵢ}).

Sirve solo como verificación cruzada del motor para t pequeño.
"""

import logging
from typing import Any, List, Sequence

from Models.escalar import Escalar, convertir, uno
from Models.jet import coeficiente_jet, invertir_jet, jet_desde_polinomio, multiplicar_jets, potenciar_jet
from Models.multi_indice import MultiIndice, recorrer_capas
from Models.polinomio import Polinomio
from Models.resultados import ResultadoSerieZ
from Models.sistema import SistemaTsikh
from Util.combinatoria import permutaciones, signo_permutacion
from Util.error_handler import ErrorDimension
from Util.motor_waring import sumar_en_orden
from Util.validacion import exigir_valido

logger = logging.getLogger("motor")


def _termino_z(
    sistema: SistemaTsikh,
    alfa: MultiIndice,
    J: Sequence[int],
    gamma: MultiIndice,
    jacobiano: Polinomio,
) -> Escalar:
    n, modo = sistema.n, sistema.modo
    punto = [None] * n
    beta = [0] * n
    escala = uno(modo)
    for i, j in enumerate(J):
        punto[j] = uno(modo) / sistema.a[i][j]
        beta[j] = sistema.m[i][j] * (alfa[i] + 1) - 1
        # qᵢ = (−a)^{m}·(z_j − 1/a)^{m}·qᵢ[j]
        escala = escala * (-sistema.a[i][j]) ** (-(beta[j] + 1))
    beta = MultiIndice(beta)

    kernel = invertir_jet(jet_desde_polinomio(
        Polinomio.monomio(n, gamma.mas(MultiIndice.unos(n)), 1, modo), punto, beta,
    ))
    germen = multiplicar_jets(kernel, jet_desde_polinomio(jacobiano, punto, beta))
    for i, k in enumerate(alfa):
        if k:
            germen = multiplicar_jets(germen, potenciar_jet(jet_desde_polinomio(sistema.Q[i], punto, beta), k))
    for i, j in enumerate(J):
        denominador = jet_desde_polinomio(sistema.q_sin(i, j), punto, beta)
        germen = multiplicar_jets(germen, potenciar_jet(invertir_jet(denominador), alfa[i] + 1))
    return coeficiente_jet(germen, beta) * escala


def residuo_serie_z(
    sistema: SistemaTsikh,
    gamma: Sequence[int],
    t: Any,
    max_norma_alfa: int,
) -> ResultadoSerieZ:
    """
    Suma parcial de la serie en t sobre ‖α‖ ≤ max_norma_alfa.

    Solo recorre las permutaciones J cuyos a_{i,jᵢ} son todos no nulos; las
    demás quedan en `ciclos_omitidos`.

    Args:
        sistema: Sistema del lado z (se valida)
        gamma: Multi-índice γ
        t: Parámetro (pequeño)
        max_norma_alfa: Orden de truncación

    Returns:
        ResultadoSerieZ con el valor y la magnitud de la última capa ‖α‖ = max_norma_alfa
    """
    exigir_valido(sistema)
    n, modo = sistema.n, sistema.modo
    gamma = MultiIndice(gamma)
    if gamma.n != n:
        raise ErrorDimension(f"γ de dimensión {gamma.n} para n={n}")
    if max_norma_alfa < 0:
        raise ErrorDimension(f"orden de truncación negativo: {max_norma_alfa}")

    t = convertir(t, modo)
    jacobiano = sistema.jacobiano(t)
    menos_t = -t

    ciclos: List[tuple] = []
    omitidos: List[tuple] = []
    for J in permutaciones(n):
        if all(sistema.a[i][j] for i, j in enumerate(J)):
            ciclos.append(J)
        else:
            omitidos.append(J)

    contribuciones: List[Escalar] = []
    ultima_capa = 0.0
    for capa in recorrer_capas(n, max_norma_alfa):
        valores_capa = []
        for alfa in capa:
            peso = menos_t ** alfa.norma
            for J in ciclos:
                valores_capa.append(peso * signo_permutacion(J) * _termino_z(sistema, alfa, J, gamma, jacobiano))
        contribuciones.extend(valores_capa)
        ultima_capa = abs(complex(sumar_en_orden(valores_capa, modo)))

    if omitidos:
        logger.debug("🔍 Serie z: ciclos con a nulo omitidos %s", omitidos)
    return ResultadoSerieZ(
        valor=sumar_en_orden(contribuciones, modo),
        magnitud_ultima_capa=ultima_capa,
        ciclos_omitidos=omitidos,
    )
