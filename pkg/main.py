"""
Consola del motor de sumas de Waring.

    python main.py power-sum --system ejemplos/ejemplo1.json --gamma 0,0

--gamma es el γ del usuario: el exponente calculado es γ+I, es decir
σ_{γ+I} = Σ_raíces ∏ z_j^{−(γ_j+1)}.

Códigos de salida: 0 éxito, 1 documento/validación, 2 cálculo, 3 verificación fallida.
"""

import argparse
import logging
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from Models.documentos import (
    Reporte,
    cargar_familia,
    cargar_sistema,
    es_documento_familia,
    transformado_a_documento,
)
from Models.escalar import Modo, convertir
from Models.sistema import SistemaTsikh
from Services.SeriesService import SeriesService
from Services.SistemaService import SistemaService
from Services.VerificacionService import VerificacionService
from Util.configuracion import NIVEL_LOG, NODOS_CUADRATURA
from Util.error_handler import ErrorDocumento, manejar_error
from Util.render import desglose_reporte, lista_complejos, renderizar, valor_reporte, valores_reporte

logger = logging.getLogger("cli")

Resultado = Tuple[Reporte, int]


def configurar_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, NIVEL_LOG, logging.WARNING),
        stream=sys.stderr,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


# ---------- argumentos ----------

def _lista_enteros(texto: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in texto.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"lista de enteros inválida: {texto!r}") from e


def _lista_reales(texto: str) -> Tuple[float, ...]:
    try:
        return tuple(float(x) for x in texto.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"lista de reales inválida: {texto!r}") from e


def construir_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sumaswaring", description="Sumas de potencias de Waring para sistemas de Tsikh")
    parser.add_argument("comando", choices=sorted(COMANDOS), help="operación a ejecutar")
    parser.add_argument("--system", required=True, help="documento JSON del sistema (o de la familia en series-sum)")
    parser.add_argument("--gamma", type=_lista_enteros, help="γ separado por comas; se calcula σ_{γ+I}")
    parser.add_argument("--t", help='valor de t ("p/q" o decimal; "re,im" para complejos)')
    parser.add_argument("--mode", choices=[m.value for m in Modo], help="forzar modo exacto o flotante")
    parser.add_argument("--breakdown", action="store_true", help="incluir el desglose por (K, J)")
    parser.add_argument("--smax", type=int, default=100, help="truncación de la serie (series-sum)")
    parser.add_argument("--enumeration", choices=["rectangulo", "triangulo"], default="rectangulo")
    parser.add_argument("--terms", type=int, default=1000, help="términos de la referencia del Ejemplo 2")
    parser.add_argument("--report", choices=["json", "text"], default="json")
    parser.add_argument("--trunc-alpha", type=int, help="agrega la serie del lado z truncada en ‖α‖ (verify)")
    parser.add_argument("--quadrature-nodes", type=int, default=NODOS_CUADRATURA)
    parser.add_argument("--radii", type=_lista_reales, help="radios fijos de cuadratura, separados por comas")
    parser.add_argument("--order", type=int, default=3, help="cantidad de coeficientes de la resultante")
    parser.add_argument("--timing", action="store_true", help="incluir tiempos en el reporte")
    return parser


def _valor_t(texto: Optional[str], modo: Modo) -> Any:
    if texto is None:
        return None
    partes = texto.split(",")
    try:
        return convertir(partes if len(partes) == 2 else texto, modo)
    except (ValueError, TypeError) as e:
        raise ErrorDocumento(f"valor de t inválido: {texto!r}") from e


def _servicio(args: argparse.Namespace) -> SistemaService:
    servicio = SistemaService(cargar_sistema(args.system))
    return servicio.en_modo(Modo(args.mode) if args.mode else None)


def _gamma(args: argparse.Namespace, sistema: SistemaTsikh) -> Tuple[int, ...]:
    gamma = args.gamma if args.gamma is not None else (0,) * sistema.n
    if len(gamma) != sistema.n:
        raise ErrorDocumento(f"--gamma tiene {len(gamma)} componentes para n={sistema.n}")
    return gamma


def _peticion(
    args: argparse.Namespace, sistema: SistemaTsikh, t: Any, gamma: Optional[Sequence[int]] = None,
) -> Dict[str, Any]:
    peticion: Dict[str, Any] = {"system": args.system}
    if gamma is not None:
        peticion["gamma"] = list(gamma)
    peticion["t"] = valor_reporte(sistema.t if t is None else t).model_dump(exclude_none=True)
    peticion["mode"] = sistema.modo.value
    return peticion


# ---------- comandos ----------

def comando_validate(args: argparse.Namespace) -> Resultado:
    servicio = _servicio(args)
    reporte = servicio.validar()
    resultado = {
        "valid": reporte.valido,
        "violations": [v.model_dump(exclude_none=True) for v in reporte.violaciones],
    }
    return Reporte(command="validate", request={"system": args.system}, result=resultado), 0 if reporte.valido else 1


def comando_transform(args: argparse.Namespace) -> Resultado:
    ts = _servicio(args).transformar()
    resultado = {"transformed": transformado_a_documento(ts).model_dump(mode="json")}
    return Reporte(command="transform", request={"system": args.system}, result=resultado), 0


def comando_power_sum(args: argparse.Namespace) -> Resultado:
    servicio = _servicio(args)
    sistema = servicio.sistema
    gamma = _gamma(args, sistema)
    t = _valor_t(args.t, sistema.modo)
    reporte = servicio.suma_potencias(gamma, t)
    return Reporte(
        command="power-sum",
        request=_peticion(args, sistema, t, gamma),
        result={"value": valor_reporte(reporte.valor).model_dump(exclude_none=True)},
        breakdown=desglose_reporte(reporte.desglose) if args.breakdown else None,
    ), 0


def comando_verify(args: argparse.Namespace) -> Resultado:
    servicio = _servicio(args)
    sistema = servicio.sistema
    gamma = _gamma(args, sistema)
    t = _valor_t(args.t, sistema.modo)
    verificacion = VerificacionService(sistema).verificar(
        gamma, t, nodos=args.quadrature_nodes, radios=args.radii, trunc_alfa=args.trunc_alpha,
    )
    seccion = {
        "values": valores_reporte(verificacion.valores),
        "deviations": dict(verificacion.desviaciones),
        "tolerances": dict(verificacion.tolerancias),
        "root_count": verificacion.conteo_raices,
        "permanent": verificacion.permanente,
        "notes": list(verificacion.notas),
    }
    return Reporte(
        command="verify",
        request=_peticion(args, sistema, t, gamma),
        result={"passed": verificacion.aprobado},
        verification=seccion,
    ), 0 if verificacion.aprobado else 3


def comando_resultant(args: argparse.Namespace) -> Resultado:
    servicio = _servicio(args)
    sistema = servicio.sistema
    t = _valor_t(args.t, sistema.modo)
    coeficientes = servicio.coeficientes_resultante(args.order, t)
    return Reporte(
        command="resultant",
        request={**_peticion(args, sistema, t), "order": args.order},
        result={"coefficients": [valor_reporte(b).model_dump(exclude_none=True) for b in coeficientes]},
    ), 0


def comando_series_sum(args: argparse.Namespace) -> Resultado:
    if not es_documento_familia(args.system):
        raise ErrorDocumento(f"series-sum espera un documento de familia (clave 'family'): {args.system}")
    servicio = SeriesService(cargar_familia(args.system))
    gamma = args.gamma if args.gamma is not None else (0, 0)
    valor, cola = servicio.sumar(args.smax, gamma, args.enumeration)
    resultado: Dict[str, Any] = {
        "value": valor_reporte(valor).model_dump(exclude_none=True),
        "components": valores_reporte(cola.componentes),
        "last_shell": cola.ultima_capa,
        "tail_estimate": cola.estimacion_cola,
        "converges": cola.converge,
        "partials": lista_complejos(cola.parciales),
    }
    referencia = servicio.referencia(args.terms)
    if referencia is not None:
        resultado["reference"] = referencia.model_dump()
    return Reporte(
        command="series-sum",
        request={
            "system": args.system, "gamma": list(gamma), "smax": args.smax,
            "enumeration": args.enumeration, "terms": args.terms,
        },
        result=resultado,
    ), 0


COMANDOS: Dict[str, Dict[str, Any]] = {
    "validate": {"function": comando_validate, "description": "Reporte de hipótesis del sistema"},
    "transform": {"function": comando_transform, "description": "Sistema del lado w"},
    "power-sum": {"function": comando_power_sum, "description": "σ_{γ+I} por la fórmula de Waring"},
    "verify": {"function": comando_verify, "description": "Motor contra oráculos de raíces y cuadratura"},
    "resultant": {"function": comando_resultant, "description": "Coeficientes b₁..b_N por la recurrencia de Newton"},
    "series-sum": {"function": comando_series_sum, "description": "Suma truncada sobre una familia de factores"},
}


def run_command(argv: Optional[Sequence[str]] = None, salida: Optional[TextIO] = None) -> int:
    """
    Ejecuta un comando y escribe el reporte en la salida estándar.

    Returns:
        Código de salida
    """
    configurar_logging()
    try:
        args = construir_parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1

    inicio = time.perf_counter()
    try:
        reporte, codigo = COMANDOS[args.comando]["function"](args)
    except Exception as e:
        return manejar_error(e, args.comando)
    segundos = time.perf_counter() - inicio
    logger.info("✅ %s en %.3f s (código %d)", args.comando, segundos, codigo)

    if args.timing:
        reporte = reporte.model_copy(update={"timing": {"seconds": segundos}})
    print(renderizar(reporte, args.report), file=salida or sys.stdout)
    return codigo


if __name__ == "__main__":
    sys.exit(run_command())
