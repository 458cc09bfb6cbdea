"""
Render de reportes: JSON estable o líneas alineadas "clave: valor".
"""

import decimal
import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from Models.documentos import EntradaDesglose, Reporte, ValorReporte
from Models.escalar import Escalar, Gaussiano, texto_racional
from Models.resultados import DesgloseTerminos
from Util.configuracion import DIGITOS_DECIMALES


def _decimal_racional(valor: Fraction) -> str:
    if not valor:
        return _decimal_flotante(0.0)
    with decimal.localcontext() as ctx:
        ctx.prec = DIGITOS_DECIMALES
        cociente = decimal.Decimal(valor.numerator) / decimal.Decimal(valor.denominator)
        mantisa, exponente = f"{cociente:.{DIGITOS_DECIMALES - 1}e}".split("e")
    # mismo formato de exponente que los float: e+00
    return f"{mantisa}e{int(exponente):+03d}"


def _decimal_flotante(valor: float) -> str:
    return f"{valor:.{DIGITOS_DECIMALES - 1}e}"


def valor_reporte(valor: Escalar) -> ValorReporte:
    """Exactos sin redondeo más su decimal; flotantes solo en decimal."""
    if isinstance(valor, Gaussiano):
        return ValorReporte(
            exact=[texto_racional(valor.re), texto_racional(valor.im)],
            decimal=[_decimal_racional(valor.re), _decimal_racional(valor.im)],
        )
    valor = complex(valor)
    return ValorReporte(decimal=[_decimal_flotante(valor.real), _decimal_flotante(valor.imag)])


def desglose_reporte(desglose: DesgloseTerminos) -> List[EntradaDesglose]:
    return [
        EntradaDesglose(K=list(e.K), J=list(e.J), beta=list(e.beta), sign=e.signo, value=valor_reporte(e.valor))
        for e in desglose.entradas
    ]


def valores_reporte(valores: Dict[str, Any]) -> Dict[str, Any]:
    return {clave: valor_reporte(v).model_dump(exclude_none=True) for clave, v in valores.items()}


def render_json(reporte: Reporte) -> str:
    return json.dumps(reporte.model_dump(mode="json", exclude_none=True), indent=2, sort_keys=True, ensure_ascii=False)


def _aplanar(prefijo: str, valor: Any, filas: List[tuple]) -> None:
    if isinstance(valor, dict):
        for clave in sorted(valor):
            _aplanar(f"{prefijo}.{clave}" if prefijo else str(clave), valor[clave], filas)
    elif isinstance(valor, list) and any(isinstance(v, (dict, list)) for v in valor):
        for i, v in enumerate(valor):
            _aplanar(f"{prefijo}[{i}]", v, filas)
    else:
        filas.append((prefijo, valor))


def render_texto(reporte: Reporte) -> str:
    filas: List[tuple] = []
    _aplanar("", reporte.model_dump(mode="json", exclude_none=True), filas)
    ancho = max((len(clave) for clave, _ in filas), default=0)
    lineas = []
    for clave, valor in filas:
        if isinstance(valor, list):
            valor = ", ".join(str(v) for v in valor)
        lineas.append(f"{clave.ljust(ancho)} : {valor}")
    return "\n".join(lineas)


def renderizar(reporte: Reporte, formato: str = "json") -> str:
    return render_texto(reporte) if formato == "text" else render_json(reporte)


def lista_complejos(valores: Sequence[Any]) -> List[List[str]]:
    """Secuencia de complejos como pares decimales."""
    return [valor_reporte(v).decimal for v in valores]
