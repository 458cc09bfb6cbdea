"""
Errores del motor y manejo centralizado.
Cada error conoce su código de salida; solo la consola (main.py) los captura.
"""

import logging
import traceback
from typing import Any, Dict, Optional

logger = logging.getLogger("errores")


class ErrorWaring(Exception):
    """Base de todos los errores del motor."""
    codigo_salida = 2


class ErrorDocumento(ErrorWaring):
    """Documento de sistema o familia mal formado."""
    codigo_salida = 1


class ErrorValidacion(ErrorWaring):
    """El sistema viola alguna hipótesis de la clase de Tsikh."""
    codigo_salida = 1

    def __init__(self, mensaje: str, reporte: Any = None):
        super().__init__(mensaje)
        self.reporte = reporte


class ErrorModo(ErrorWaring, TypeError):
    """Mezcla de escalares exactos y flotantes en un mismo cálculo."""


class ErrorDimension(ErrorWaring, ValueError):
    """Dimensiones, longitudes o índices incompatibles."""


class ErrorTruncacion(ErrorWaring, ValueError):
    """Se pidió un coeficiente más allá del orden de truncación de un jet."""


class JetNoInvertible(ErrorWaring, ZeroDivisionError):
    """El término constante del jet es cero: el denominador se anula en el centro."""


class ErrorSolver(ErrorWaring):
    """Fallo del oráculo de raíces (resultante degenerada, no convergencia, conteo)."""

    def __init__(self, mensaje: str, diagnosticos: Optional[Dict[str, Any]] = None):
        super().__init__(mensaje)
        self.diagnosticos = diagnosticos or {}


class ErrorCuadratura(ErrorWaring, ValueError):
    """Parámetros de cuadratura inválidos (radios que no aíslan las raíces reticulares)."""


class ViolacionDominancia(ErrorCuadratura):
    """|q̃ᵢ| ≤ |t·Q̃ᵢ| en algún nodo de un ciclo: t demasiado grande para la cuadratura."""


class ErrorHipotesis(ErrorWaring, ValueError):
    """Parámetros fuera de la hipótesis de una referencia cerrada."""


def manejar_error(error: BaseException, contexto: str = "") -> int:
    """
    Registra un error y devuelve el código de salida correspondiente.

    Args:
        error: Excepción capturada
        contexto: Dónde ocurrió (ej: "power-sum", "verify")

    Returns:
        Código de salida: 1 validación/parseo, 2 cálculo
    """
    error_type = type(error).__name__
    error_msg = str(error)
    codigo = getattr(error, "codigo_salida", 2)

    detalle = f"❌ {error_type} en {contexto or 'comando'}: {error_msg}"
    diagnosticos = getattr(error, "diagnosticos", None)
    if diagnosticos:
        detalle += f" | diagnósticos: {diagnosticos}"

    if isinstance(error, ErrorWaring):
        logger.error(detalle)
        logger.debug("📋 Traceback:\n%s", "".join(traceback.format_exception(error)))
    else:
        # Error inesperado: siempre con traceback completo
        logger.error("%s\n📋 Traceback:\n%s", detalle, "".join(traceback.format_exception(error)))

    return codigo
