"""
Motor de Waring.

σ_{γ+I}(t) = Σ_{K∈ℜ} (−t)^{‖K‖} Σ_J sign(J) · [coeficiente β(K,J) en a_J de
              Δ̃·w^{γ+I}·∏ᵢQ̃ᵢ^{kᵢ} / ∏ᵢ q̃ᵢ[jᵢ]^{kᵢ+1}]

con ℜ = {K : ‖K‖ ≤ max γᵢ + 1}. Cada término se obtiene con jets; no se buscan raíces.
"""

import logging
from fractions import Fraction
from typing import Any, List, Optional, Sequence

import numpy as np

from Models.escalar import Escalar, Modo, cero, convertir, uno
from Models.jet import coeficiente_jet, invertir_jet, jet_desde_polinomio, multiplicar_jets, potenciar_jet
from Models.multi_indice import MultiIndice, indices_norma_hasta
from Models.polinomio import Polinomio
from Models.resultados import DesgloseTerminos, EntradaTermino, PeticionSumaPotencias, ReporteSumaPotencias
from Models.sistema import RaizReticular, SistemaTransformado, SistemaTsikh
from Util.error_handler import ErrorDimension
from Util.transformacion import punto_reticular, raices_reticulares, transformar_sistema

logger = logging.getLogger("motor")


def sumar_en_orden(valores: Sequence[Escalar], modo: Modo) -> Escalar:
    """Suma en el orden dado; en flotante usa la suma por pares de numpy."""
    if modo == Modo.FLOTANTE:
        if not valores:
            return 0j
        return complex(np.sum(np.array(valores, dtype=complex)))
    total = cero(modo)
    for v in valores:
        total = total + v
    return total


def conjunto_R(gamma: Sequence[int]) -> List[MultiIndice]:
    """Los K ≥ 0 con ‖K‖ ≤ max γᵢ + 1, en orden grlex."""
    gamma = MultiIndice(gamma)
    return indices_norma_hasta(gamma.n, max(gamma) + 1)


def orden_beta(K: Sequence[int], J: Sequence[int], mhat: Sequence[Sequence[int]]) -> MultiIndice:
    """β(K,J): en la variable jᵢ vale m̂_{i,jᵢ}·(kᵢ+1) − 1."""
    n = len(J)
    if len(K) != n or len(mhat) != n:
        raise ErrorDimension(f"K, J y m̂ de dimensiones distintas ({len(K)}, {n}, {len(mhat)})")
    beta = [0] * n
    for i, j in enumerate(J):
        beta[j] = mhat[i][j] * (K[i] + 1) - 1
        if beta[j] < 0:
            raise ErrorDimension(f"m̂[{i}][{j}] = 0: la ecuación {i} no tiene polo en w{j + 1}")
    return MultiIndice(beta)


def termino_local(
    ts: SistemaTransformado,
    K: Sequence[int],
    J: Sequence[int],
    gamma: Sequence[int],
    t: Any,
    jacobiano: Optional[Polinomio] = None,
) -> Escalar:
    """
    Coeficiente de Taylor de orden β(K,J) en a_J del germen
    Δ̃(w,t)·w^{γ+I}·∏ᵢQ̃ᵢ^{kᵢ} / ∏ᵢq̃ᵢ[jᵢ]^{kᵢ+1}.

    Args:
        ts: Sistema transformado
        K: Exponentes de la perturbación
        J: Permutación i ↦ jᵢ
        gamma: Multi-índice γ
        t: Parámetro numérico
        jacobiano: Δ̃ ya calculado para este t (opcional)

    Raises:
        JetNoInvertible: si algún q̃ᵢ[jᵢ] se anula en a_J
    """
    n = ts.n
    K, gamma = MultiIndice(K), MultiIndice(gamma)
    if K.n != n or len(J) != n or gamma.n != n:
        raise ErrorDimension(f"índices de dimensión distinta a n={n}")
    beta = orden_beta(K, J, ts.mhat)
    punto = punto_reticular(ts, J)
    delta = jacobiano if jacobiano is not None else ts.jacobiano(t)
    monomio = Polinomio.monomio(n, gamma.mas(MultiIndice.unos(n)), 1, ts.modo)

    germen = multiplicar_jets(jet_desde_polinomio(delta, punto, beta), jet_desde_polinomio(monomio, punto, beta))
    for i, k in enumerate(K):
        if k:
            germen = multiplicar_jets(germen, potenciar_jet(jet_desde_polinomio(ts.Qtilde[i], punto, beta), k))
    for i, j in enumerate(J):
        denominador = jet_desde_polinomio(ts.q_deflactado(i, j), punto, beta)
        germen = multiplicar_jets(germen, potenciar_jet(invertir_jet(denominador), K[i] + 1))
    return coeficiente_jet(germen, beta)


def suma_potencias(sistema: SistemaTsikh, peticion: PeticionSumaPotencias) -> ReporteSumaPotencias:
    """
    Calcula σ_{γ+I}(t) por la fórmula de Waring.

    Args:
        sistema: Sistema del lado z (se valida)
        peticion: γ, t y modo

    Returns:
        ReporteSumaPotencias con el valor y el desglose por (K, J)
    """
    sistema = sistema.en_modo(peticion.modo)
    ts = transformar_sistema(sistema)
    modo = ts.modo
    gamma = MultiIndice(peticion.gamma)
    if gamma.n != ts.n:
        raise ErrorDimension(f"γ de dimensión {gamma.n} para n={ts.n}")

    t = convertir(peticion.t, modo)
    delta = ts.jacobiano(t)
    raices = raices_reticulares(ts)
    menos_t = -t

    entradas: List[EntradaTermino] = []
    contribuciones: List[Escalar] = []
    for K in conjunto_R(gamma):
        peso = menos_t ** K.norma
        for raiz in raices:
            valor = termino_local(ts, K, raiz.J, gamma, t, jacobiano=delta)
            entradas.append(EntradaTermino(
                K=K, J=raiz.J, beta=orden_beta(K, raiz.J, ts.mhat), signo=raiz.signo, valor=valor,
            ))
            contribuciones.append(peso * raiz.signo * valor)

    total = sumar_en_orden(contribuciones, modo)
    logger.debug("✅ σ_{γ+I} con γ=%s, t=%s: %s (%d términos)", tuple(gamma), t, total, len(entradas))
    return ReporteSumaPotencias(
        gamma=gamma, t=t, valor=total, desglose=DesgloseTerminos(entradas=entradas, total=total),
    )


def suma_potencias_t0(ts: SistemaTransformado, gamma: Sequence[int]) -> Escalar:
    """Forma cerrada en t = 0: Σ_J multiplicidad(J)·a_J^{γ+I}."""
    gamma = MultiIndice(gamma)
    total = cero(ts.modo)
    for raiz in raices_reticulares(ts):
        valor = uno(ts.modo) * raiz.multiplicidad
        for x, g in zip(raiz.punto, gamma):
            valor = valor * x ** (g + 1)
        total = total + valor
    return total


def serie_ciclo_local(
    ts: SistemaTransformado,
    raiz: RaizReticular,
    gamma: Sequence[int],
    t: Any,
    max_norma: int,
) -> Escalar:
    """
    Aporte de las raíces nacidas en a_J, desarrollado en t hasta ‖K‖ ≤ max_norma.

    Sin el recorte de ℜ: cada ciclo por separado es una serie infinita en t,
    válida solo para t pequeño.
    """
    t = convertir(t, ts.modo)
    delta = ts.jacobiano(t)
    menos_t = -t
    contribuciones = [
        menos_t ** K.norma * raiz.signo * termino_local(ts, K, raiz.J, gamma, t, jacobiano=delta)
        for K in indices_norma_hasta(ts.n, max_norma)
    ]
    return sumar_en_orden(contribuciones, ts.modo)


def coeficientes_newton(s: Sequence[Any], N: int) -> List[Any]:
    """
    Coeficientes de f(w) = 1 + b₁w + … a partir de las sumas de potencias.

    b₀ = 1,  bₖ = −(Σ_{j<k} bⱼ s_{k−j}) / k

    Args:
        s: Sumas s₁, s₂, … (al menos N)
        N: Cantidad de coeficientes a construir

    Returns:
        [b₀, b₁, …, b_N]
    """
    if len(s) < N:
        raise ErrorDimension(f"se necesitan {N} sumas de potencias, hay {len(s)}")
    b: List[Any] = [1]
    for k in range(1, N + 1):
        acumulado = 0
        for j in range(k):
            acumulado = acumulado + b[j] * s[k - j - 1]
        b.append(-acumulado * Fraction(1, k))
    return b


def grado_cota_t(n: int, gamma: Sequence[int]) -> int:
    """Cota D del grado en t de σ_{γ+I}(t): (max γ + 1) + (n − 1) + n."""
    return (max(gamma) + 1) + (n - 1) + n


def polinomio_sigma_en_t(
    sistema: SistemaTsikh,
    gamma: Sequence[int],
    nodos: Optional[Sequence[Any]] = None,
) -> List[Escalar]:
    """
    Coeficientes exactos de σ_{γ+I}(t) como polinomio en t (de menor a mayor grado).

    Interpola en D+1 nodos racionales con diferencias divididas de Newton.
    """
    modo = Modo.EXACTO
    D = grado_cota_t(sistema.n, gamma)
    if nodos is None:
        nodos = range(D + 1)
    xs = [convertir(x, modo) for x in nodos]
    if len(xs) < D + 1:
        raise ErrorDimension(f"se necesitan {D + 1} nodos, hay {len(xs)}")

    ys = [suma_potencias(sistema, PeticionSumaPotencias(gamma=tuple(gamma), t=x, modo=modo)).valor for x in xs]
    diferencias = list(ys)
    for orden in range(1, len(xs)):
        for i in range(len(xs) - 1, orden - 1, -1):
            diferencias[i] = (diferencias[i] - diferencias[i - 1]) / (xs[i] - xs[i - orden])

    # forma de Newton → monomios
    coeficientes = [diferencias[-1]]
    for i in range(len(xs) - 2, -1, -1):
        desplazado = [cero(modo)] + coeficientes
        for g in range(len(coeficientes)):
            desplazado[g] = desplazado[g] - xs[i] * coeficientes[g]
        desplazado[0] = desplazado[0] + diferencias[i]
        coeficientes = desplazado
    return coeficientes


def evaluar_en_t(coeficientes: Sequence[Escalar], t: Any) -> Escalar:
    """Horner sobre coeficientes de menor a mayor grado."""
    total = 0
    for c in reversed(coeficientes):
        total = total * t + c
    return total
