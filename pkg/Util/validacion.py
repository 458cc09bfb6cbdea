"""
Validación de las hipótesis de la clase de Tsikh.
Devuelve un reporte con cada hipótesis violada y su posición (i, j).
"""

import logging
from typing import List

from Models.resultados import ReporteValidacion, Violacion
from Models.sistema import SistemaTsikh
from Util.error_handler import ErrorValidacion

logger = logging.getLogger("validacion")


def validar_sistema(sistema: SistemaTsikh) -> ReporteValidacion:
    """
    Revisa las hipótesis del sistema.

    - distincion_columnas: a_ij ≠ a_kj para i ≠ k
    - divisibilidad: cada Qᵢ divisible por z₁⋯zₙ
    - cota_grado: deg_{z_j} Qᵢ ≤ m_ij si a_ij ≠ 0
    - grado_positivo: m_ij ≥ 1 si a_ij ≠ 0
    - perturbacion_no_nula: Qᵢ ≠ 0 si alguna a_ij = 0

    Args:
        sistema: Sistema del lado z

    Returns:
        ReporteValidacion con valido=True o la lista de violaciones
    """
    n = sistema.n
    violaciones: List[Violacion] = []

    for j in range(n):
        for i in range(n):
            for k in range(i + 1, n):
                if sistema.a[i][j] == sistema.a[k][j]:
                    violaciones.append(Violacion(
                        hipotesis="distincion_columnas", i=i, j=j,
                        detalle=f"a[{i}][{j}] = a[{k}][{j}] = {sistema.a[i][j]}",
                    ))

    for i, Q in enumerate(sistema.Q):
        for exponentes in Q.terminos:
            if any(e < 1 for e in exponentes):
                violaciones.append(Violacion(
                    hipotesis="divisibilidad", i=i,
                    detalle=f"el término z^{tuple(exponentes)} de Q[{i}] no es divisible por z₁⋯zₙ",
                ))
                break

        for j in range(n):
            if sistema.a[i][j]:
                grado = Q.grado(j)
                if grado > sistema.m[i][j]:
                    violaciones.append(Violacion(
                        hipotesis="cota_grado", i=i, j=j,
                        detalle=f"deg_z{j + 1} Q[{i}] = {grado} > m[{i}][{j}] = {sistema.m[i][j]}",
                    ))
                if sistema.m[i][j] < 1:
                    violaciones.append(Violacion(
                        hipotesis="grado_positivo", i=i, j=j,
                        detalle=f"m[{i}][{j}] = 0 con a[{i}][{j}] ≠ 0",
                    ))
            elif Q.es_cero:
                violaciones.append(Violacion(
                    hipotesis="perturbacion_no_nula", i=i, j=j,
                    detalle=f"a[{i}][{j}] = 0 y Q[{i}] = 0",
                ))

    reporte = ReporteValidacion(valido=not violaciones, violaciones=violaciones)
    if violaciones:
        logger.info("⚠️ Sistema inválido: %s", ", ".join(v.hipotesis for v in violaciones))
    return reporte


def exigir_valido(sistema: SistemaTsikh) -> None:
    """Lanza ErrorValidacion si el sistema no cumple las hipótesis."""
    reporte = validar_sistema(sistema)
    if not reporte.valido:
        nombres = ", ".join(sorted({v.hipotesis for v in reporte.violaciones}))
        raise ErrorValidacion(f"hipótesis violadas: {nombres}", reporte)
