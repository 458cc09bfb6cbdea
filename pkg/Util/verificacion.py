"""
Arnés de verificación: compara el motor con los oráculos independientes.
"""

import logging
from typing import Any, Callable, Dict, List, Optional, Sequence

from Models.resultados import PeticionSumaPotencias, ReporteSumaPotencias, ReporteVerificacion
from Models.sistema import SistemaTsikh
from Util.configuracion import NODOS_CUADRATURA, TOL_CUADRATURA, TOL_RAICES, TOL_SERIE_Z
from Util.cuadratura import EspecCuadratura, cuadratura_toro, radios_adaptativos
from Util.error_handler import ViolacionDominancia
from Util.motor_waring import suma_potencias
from Util.raices import resolver_sistema, suma_potencias_directa
from Util.serie_z import residuo_serie_z
from Util.transformacion import numero_de_raices, transformar_sistema

logger = logging.getLogger("oraculo")

Motor = Callable[[SistemaTsikh, PeticionSumaPotencias], ReporteSumaPotencias]


def desviacion_relativa(a: Any, b: Any) -> float:
    """|a − b| / max(|a|, |b|, 1)."""
    a, b = complex(a), complex(b)
    return abs(a - b) / max(abs(a), abs(b), 1.0)


def verificar_suma_potencias(
    sistema: SistemaTsikh,
    gamma: Sequence[int],
    t: Any = None,
    motor: Optional[Motor] = None,
    nodos: int = NODOS_CUADRATURA,
    radios: Optional[Sequence[float]] = None,
    trunc_alfa: Optional[int] = None,
) -> ReporteVerificacion:
    """
    Corre el motor, el oráculo de raíces y, si t lo permite, la cuadratura.

    Args:
        sistema: Sistema del lado z
        gamma: Multi-índice γ
        t: Parámetro (por defecto el del sistema)
        motor: Implementación a verificar (por defecto suma_potencias)
        nodos: Nodos por dimensión de la cuadratura
        radios: Radios fijos de la cuadratura (por defecto adaptativos)
        trunc_alfa: Si se da, agrega la serie del lado z truncada en ‖α‖ ≤ trunc_alfa

    Returns:
        ReporteVerificacion con valores, desviaciones y aprobado
    """
    motor = motor or suma_potencias
    t = sistema.t if t is None else t
    gamma = tuple(gamma)
    ts = transformar_sistema(sistema.con_t(t))
    notas: List[str] = []

    valor_motor = motor(sistema, PeticionSumaPotencias(gamma=gamma, t=t, modo=sistema.modo)).valor
    valores: Dict[str, Any] = {"motor": valor_motor}
    tolerancias: Dict[str, float] = {}

    conteo = None
    if ts.n <= 2:
        raices = resolver_sistema(ts)
        conteo = raices.conteo
        valores["raices"] = suma_potencias_directa(raices, gamma)
        tolerancias["raices"] = TOL_RAICES
    else:
        notas.append(f"oráculo de raíces omitido: n={ts.n} > 2")

    try:
        elegidos = tuple(radios) if radios is not None else radios_adaptativos(ts, ts.t, nodos)
        spec = EspecCuadratura(radios=elegidos, nodos=nodos, t=complex(ts.t))
        valores["cuadratura"] = cuadratura_toro(ts, gamma, spec)
        tolerancias["cuadratura"] = TOL_CUADRATURA
    except ViolacionDominancia as e:
        logger.warning("⚠️ Cuadratura omitida: %s", e)
        notas.append(f"cuadratura omitida: {e}")

    if trunc_alfa is not None:
        serie = residuo_serie_z(sistema, gamma, t, trunc_alfa)
        if serie.ciclos_omitidos:
            notas.append(f"serie z sin comparar: ciclos con a nulo {serie.ciclos_omitidos}")
        else:
            valores["serie_z"] = serie.valor
            tolerancias["serie_z"] = TOL_SERIE_Z

    desviaciones = {
        f"motor-{nombre}": desviacion_relativa(valor_motor, valores[nombre])
        for nombre in tolerancias
    }
    aprobado = all(desviaciones[f"motor-{nombre}"] <= tol for nombre, tol in tolerancias.items())
    if not aprobado:
        logger.warning("⚠️ Verificación fallida: %s", desviaciones)

    return ReporteVerificacion(
        gamma=gamma,
        t=t,
        valores=valores,
        desviaciones=desviaciones,
        tolerancias={f"motor-{nombre}": tol for nombre, tol in tolerancias.items()},
        aprobado=aprobado,
        conteo_raices=conteo,
        permanente=numero_de_raices(ts),
        notas=notas,
    )
