"""
Transformación recíproca z = 1/w y raíces reticulares del sistema sin perturbar.
"""

import logging
import math
from typing import List, Sequence

from Models.polinomio import Polinomio
from Models.sistema import RaizReticular, SistemaTransformado, SistemaTsikh
from Util.combinatoria import permanente, permutaciones, signo_permutacion
from Util.validacion import exigir_valido

logger = logging.getLogger("transformacion")


def grados_efectivos(sistema: SistemaTsikh) -> tuple:
    """m̂_ij = m_ij si a_ij ≠ 0, y deg_{z_j} Qᵢ si a_ij = 0."""
    def efectivo(i: int, j: int) -> int:
        if sistema.a[i][j]:
            return sistema.m[i][j]
        return 0 if sistema.Q[i].es_cero else int(sistema.Q[i].grado(j))

    return tuple(tuple(efectivo(i, j) for j in range(sistema.n)) for i in range(sistema.n))


def transformar_sistema(sistema: SistemaTsikh) -> SistemaTransformado:
    """
    Aplica z = 1/w y multiplica la ecuación i por w^{m̂ᵢ}.

    q̃ᵢ = ∏ⱼ (w_j − a_ij)^{m̂_ij}
    Q̃ᵢ = Σ c_e · w^{m̂ᵢ − e}   por cada término c_e·z^e de Qᵢ

    Raises:
        ErrorValidacion: si el sistema no cumple las hipótesis
    """
    exigir_valido(sistema)
    n, modo = sistema.n, sistema.modo
    mhat = grados_efectivos(sistema)

    qtilde = []
    Qtilde = []
    for i in range(n):
        q = Polinomio.constante(n, 1, modo)
        for j in range(n):
            q = q * Polinomio.lineal(n, j, sistema.a[i][j], modo) ** mhat[i][j]
        qtilde.append(q)
        Qtilde.append(Polinomio(
            n,
            {tuple(mh - e for mh, e in zip(mhat[i], exps)): c for exps, c in sistema.Q[i].terminos.items()},
            modo,
        ))

    logger.debug("🔍 Transformado: m̂=%s", mhat)
    return SistemaTransformado(sistema.a, mhat, qtilde, Qtilde, sistema.t, modo)


def punto_reticular(ts: SistemaTransformado, J: Sequence[int]) -> tuple:
    """Punto a_J: la coordenada jᵢ es a_{i,jᵢ}."""
    punto = [None] * ts.n
    for i, j in enumerate(J):
        punto[j] = ts.a[i][j]
    return tuple(punto)


def raices_reticulares(ts: SistemaTransformado) -> List[RaizReticular]:
    """Una raíz por permutación J, en orden lexicográfico, con signo y multiplicidad ∏ m̂_{i,jᵢ}."""
    raices = []
    for J in permutaciones(ts.n):
        raices.append(RaizReticular(
            J=J,
            punto=punto_reticular(ts, J),
            signo=signo_permutacion(J),
            multiplicidad=math.prod(ts.mhat[i][j] for i, j in enumerate(J)),
        ))
    return raices


def numero_de_raices(ts: SistemaTransformado) -> int:
    """Cantidad de raíces con multiplicidad: el permanente de m̂."""
    return permanente(ts.mhat)
