"""
Cuadratura trapezoidal sobre los toros locales alrededor de cada raíz reticular.

Por ciclo J:  sign(J) · (1/(2πi)ⁿ) ∮ w^{γ+I}·Δ̃(w)/(F̃₁⋯F̃ₙ) dw
en el toro |w_j − (a_J)_j| = ε_j. El integrando es periódico en cada ángulo,
así que la regla del trapecio converge geométricamente en N.
"""

import logging
import math
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from Models.escalar import Modo
from Models.multi_indice import MultiIndice
from Models.sistema import SistemaTransformado
from Util.configuracion import NODOS_CUADRATURA, RADIO_MAXIMO
from Util.error_handler import ErrorCuadratura, ErrorDimension, ViolacionDominancia
from Util.transformacion import raices_reticulares

logger = logging.getLogger("cuadratura")

FRACCIONES_BRECHA = (0.45, 0.4, 0.3, 0.2)


class EspecCuadratura(BaseModel):
    """Radios por variable (None = por defecto), nodos por dimensión y t."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    radios: Optional[Tuple[float, ...]] = None
    nodos: int = Field(default=NODOS_CUADRATURA, ge=8)
    t: Any = None


def brechas(ts: SistemaTransformado) -> Tuple[float, ...]:
    """Mínima distancia entre valores distintos de cada columna de a (inf si hay uno solo)."""
    resultado = []
    for j in range(ts.n):
        valores = [complex(ts.a[i][j]) for i in range(ts.n)]
        distancias = [abs(x - y) for k, x in enumerate(valores) for y in valores[k + 1:]]
        resultado.append(min(distancias) if distancias else math.inf)
    return tuple(resultado)


def radios_por_defecto(ts: SistemaTransformado) -> Tuple[float, ...]:
    """Media brecha por variable, con tope RADIO_MAXIMO."""
    return tuple(min(b / 2, RADIO_MAXIMO) for b in brechas(ts))


def _comprobar_radios(ts: SistemaTransformado, radios: Sequence[float]) -> None:
    if len(radios) != ts.n:
        raise ErrorDimension(f"{len(radios)} radios para n={ts.n}")
    for j, (r, b) in enumerate(zip(radios, brechas(ts))):
        if not 0 < r <= b / 2:
            raise ErrorCuadratura(f"radio ε{j + 1}={r} no aísla las raíces reticulares (brecha {b})")


def _malla(centro: Sequence[complex], radios: Sequence[float], nodos: int):
    """Coordenadas w_j sobre el toro y el factor ∏ ε_j e^{iθ_j} de dw/(2πi)."""
    theta = 2 * np.pi * np.arange(nodos) / nodos
    angulos = np.meshgrid(*([theta] * len(centro)), indexing="ij")
    coordenadas = [c + r * np.exp(1j * a) for c, r, a in zip(centro, radios, angulos)]
    factor = np.ones_like(coordenadas[0])
    for c, w in zip(centro, coordenadas):
        factor = factor * (w - c)
    return coordenadas, factor


def _dominancia(ts: SistemaTransformado, coordenadas, t: complex) -> float:
    """min sobre nodos e i de |q̃ᵢ| − |t·Q̃ᵢ|."""
    margen = math.inf
    for q, Q in zip(ts.qtilde, ts.Qtilde):
        diferencia = np.abs(q.evaluar_numpy(coordenadas)) - np.abs(t * Q.evaluar_numpy(coordenadas))
        margen = min(margen, float(diferencia.min()))
    return margen


def verificar_dominancia(ts: SistemaTransformado, t: Any, radios: Sequence[float], nodos: int) -> None:
    """
    Exige |q̃ᵢ| > |t·Q̃ᵢ| en todos los nodos de todos los ciclos.

    Raises:
        ViolacionDominancia: con el primer ciclo que falla
    """
    flotante = ts.en_modo(Modo.FLOTANTE)
    t = complex(t)
    for raiz in raices_reticulares(flotante):
        coordenadas, _ = _malla(raiz.punto, radios, nodos)
        margen = _dominancia(flotante, coordenadas, t)
        if margen <= 0:
            raise ViolacionDominancia(
                f"|q̃| ≤ |tQ̃| en el ciclo J={raiz.J} con ε={tuple(radios)} (margen {margen:.3e})"
            )


def radios_adaptativos(ts: SistemaTransformado, t: Any, nodos: int = NODOS_CUADRATURA) -> Tuple[float, ...]:
    """
    Primeros radios que cumplen la dominancia: los de defecto y luego
    fracciones decrecientes de la brecha.

    Raises:
        ViolacionDominancia: si ninguna opción sirve
    """
    candidatos = [radios_por_defecto(ts)]
    for fraccion in FRACCIONES_BRECHA:
        candidatos.append(tuple(fraccion * (b if math.isfinite(b) else 1.0) for b in brechas(ts)))

    for radios in candidatos:
        try:
            verificar_dominancia(ts, t, radios, nodos)
        except ViolacionDominancia:
            continue
        logger.debug("🔍 Radios de cuadratura: %s", radios)
        return radios
    raise ViolacionDominancia(f"t={t} demasiado grande: ningún radio cumple |q̃| > |tQ̃|")


def cuadratura_por_ciclo(
    ts: SistemaTransformado,
    gamma: Sequence[int],
    spec: EspecCuadratura,
) -> List[Tuple[Tuple[int, ...], complex]]:
    """
    Valor de la cuadratura en cada toro local, en orden lexicográfico de J.

    Args:
        ts: Sistema transformado
        gamma: Multi-índice γ
        spec: Radios, nodos y t

    Returns:
        Lista de (J, valor)

    Raises:
        ErrorCuadratura: radios que no aíslan las raíces reticulares
        ViolacionDominancia: t demasiado grande para estos radios
    """
    flotante = ts.en_modo(Modo.FLOTANTE)
    gamma = MultiIndice(gamma)
    if gamma.n != ts.n:
        raise ErrorDimension(f"γ de dimensión {gamma.n} para n={ts.n}")
    t = complex(flotante.t if spec.t is None else spec.t)
    radios = spec.radios if spec.radios is not None else radios_por_defecto(flotante)
    _comprobar_radios(flotante, radios)
    verificar_dominancia(flotante, t, radios, spec.nodos)

    F = flotante.F(t)
    jacobiano = flotante.jacobiano(t)
    exponentes = gamma.mas(MultiIndice.unos(ts.n))

    valores = []
    for raiz in raices_reticulares(flotante):
        coordenadas, factor = _malla(raiz.punto, radios, spec.nodos)
        integrando = jacobiano.evaluar_numpy(coordenadas) * factor
        for w, e in zip(coordenadas, exponentes):
            integrando = integrando * w ** e
        for f in F:
            integrando = integrando / f.evaluar_numpy(coordenadas)
        valores.append((raiz.J, complex(raiz.signo * integrando.mean())))
    return valores


def cuadratura_toro(ts: SistemaTransformado, gamma: Sequence[int], spec: EspecCuadratura) -> complex:
    """Suma de los ciclos en orden fijo, por pares."""
    valores = [v for _, v in cuadratura_por_ciclo(ts, gamma, spec)]
    total = complex(np.sum(np.array(valores, dtype=complex)))
    logger.debug("🔍 Cuadratura con N=%d: %s", spec.nodos, total)
    return total
