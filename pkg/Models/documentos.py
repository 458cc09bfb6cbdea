"""
Documentos de intercambio (JSON) y reportes.

Escalares en el cable:
  - modo exacto: par [re, im] de cadenas racionales "p/q" (también se aceptan enteros)
  - modo flotante: par [re, im] de decimales
  - un valor suelto se toma como parte real
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from Models.escalar import Escalar, Gaussiano, Modo, convertir, texto_racional
from Models.polinomio import Polinomio
from Models.sistema import SistemaTransformado, SistemaTsikh
from Util.error_handler import ErrorDocumento, ErrorWaring

EscalarDocumento = Union[List[Union[str, int, float]], str, int, float]


class TerminoDocumento(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coeff: EscalarDocumento
    exp: List[int]


class DocumentoSistema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=1)
    a: List[List[EscalarDocumento]]
    m: List[List[int]]
    Q: List[List[TerminoDocumento]]
    t: EscalarDocumento = "1"
    mode: Modo = Modo.EXACTO

    @model_validator(mode="after")
    def _formas(self):
        n = self.n
        if len(self.a) != n or any(len(fila) != n for fila in self.a):
            raise ValueError(f"'a' debe ser {n}×{n}")
        if len(self.m) != n or any(len(fila) != n for fila in self.m):
            raise ValueError(f"'m' debe ser {n}×{n}")
        if len(self.Q) != n:
            raise ValueError(f"'Q' debe tener {n} polinomios")
        for i, terminos in enumerate(self.Q):
            for termino in terminos:
                if len(termino.exp) != n:
                    raise ValueError(f"Q[{i}]: exponente {termino.exp} no tiene longitud {n}")
        return self


class DocumentoTransformado(BaseModel):
    n: int
    mode: Modo
    a: List[List[EscalarDocumento]]
    mhat: List[List[int]]
    qtilde: List[List[TerminoDocumento]]
    Qtilde: List[List[TerminoDocumento]]
    t: EscalarDocumento


class DocumentoFamilia(BaseModel):
    """{"family": "example2", "params": {"a2": …, "a3": …, "b1": …, "b2": …, "b3": …}}"""
    model_config = ConfigDict(extra="forbid")

    family: Literal["example2"]
    params: Dict[str, float]

    @field_validator("params")
    @classmethod
    def _parametros_completos(cls, params):
        faltantes = {"a2", "a3", "b1", "b2", "b3"} - set(params)
        if faltantes:
            raise ValueError(f"faltan parámetros: {sorted(faltantes)}")
        return params


# ---------- reportes ----------

class ValorReporte(BaseModel):
    """Valor exacto como [re, im] racionales (si aplica) y su decimal de 17 cifras."""
    exact: Optional[List[str]] = None
    decimal: List[str]


class EntradaDesglose(BaseModel):
    K: List[int]
    J: List[int]
    beta: List[int]
    sign: int
    value: ValorReporte


class Reporte(BaseModel):
    command: str
    request: Dict[str, Any]
    result: Dict[str, Any] = Field(default_factory=dict)
    breakdown: Optional[List[EntradaDesglose]] = None
    verification: Optional[Dict[str, Any]] = None
    timing: Optional[Dict[str, float]] = None


# ---------- conversión ----------

def escalar_a_documento(valor: Escalar) -> List[Union[str, float]]:
    if isinstance(valor, Gaussiano):
        return [texto_racional(valor.re), texto_racional(valor.im)]
    valor = complex(valor)
    return [valor.real, valor.imag]


def _polinomio_desde_documento(terminos: List[TerminoDocumento], n: int, modo: Modo) -> Polinomio:
    acumulado: Dict[tuple, Escalar] = {}
    for termino in terminos:
        clave = tuple(termino.exp)
        acumulado[clave] = acumulado.get(clave, convertir(0, modo)) + convertir(termino.coeff, modo)
    return Polinomio(n, acumulado, modo)


def polinomio_a_documento(p: Polinomio) -> List[TerminoDocumento]:
    return [TerminoDocumento(coeff=escalar_a_documento(c), exp=list(k)) for k, c in p.terminos.items()]


def sistema_desde_documento(documento: DocumentoSistema) -> SistemaTsikh:
    """
    Construye el sistema descrito por el documento.

    Raises:
        ErrorDocumento: escalares inválidos o mezcla de modos
    """
    modo = documento.mode
    try:
        return SistemaTsikh(
            a=[[convertir(x, modo) for x in fila] for fila in documento.a],
            m=documento.m,
            Q=[_polinomio_desde_documento(terminos, documento.n, modo) for terminos in documento.Q],
            t=convertir(documento.t, modo),
            modo=modo,
        )
    except (ErrorWaring, ValueError, TypeError) as e:
        raise ErrorDocumento(f"sistema inválido: {e}") from e


def sistema_a_documento(sistema: SistemaTsikh) -> DocumentoSistema:
    return DocumentoSistema(
        n=sistema.n,
        a=[[escalar_a_documento(x) for x in fila] for fila in sistema.a],
        m=[list(fila) for fila in sistema.m],
        Q=[polinomio_a_documento(p) for p in sistema.Q],
        t=escalar_a_documento(sistema.t),
        mode=sistema.modo,
    )


def transformado_a_documento(ts: SistemaTransformado) -> DocumentoTransformado:
    return DocumentoTransformado(
        n=ts.n,
        mode=ts.modo,
        a=[[escalar_a_documento(x) for x in fila] for fila in ts.a],
        mhat=[list(fila) for fila in ts.mhat],
        qtilde=[polinomio_a_documento(p) for p in ts.qtilde],
        Qtilde=[polinomio_a_documento(p) for p in ts.Qtilde],
        t=escalar_a_documento(ts.t),
    )


def parsear_sistema(texto: str) -> SistemaTsikh:
    """JSON → SistemaTsikh. Raises ErrorDocumento."""
    try:
        documento = DocumentoSistema.model_validate_json(texto)
    except ValidationError as e:
        raise ErrorDocumento(f"documento de sistema inválido: {e.error_count()} error(es): {e.errors()[0]['msg']}") from e
    return sistema_desde_documento(documento)


def serializar_sistema(sistema: SistemaTsikh) -> str:
    return json.dumps(sistema_a_documento(sistema).model_dump(mode="json"), indent=2, ensure_ascii=False)


def _leer(ruta: Union[str, Path]) -> str:
    try:
        return Path(ruta).read_text(encoding="utf-8")
    except OSError as e:
        raise ErrorDocumento(f"no se pudo leer {ruta}: {e}") from e


def cargar_sistema(ruta: Union[str, Path]) -> SistemaTsikh:
    return parsear_sistema(_leer(ruta))


def cargar_familia(ruta: Union[str, Path]) -> DocumentoFamilia:
    try:
        return DocumentoFamilia.model_validate_json(_leer(ruta))
    except ValidationError as e:
        raise ErrorDocumento(f"documento de familia inválido: {e.errors()[0]['msg']}") from e


def es_documento_familia(ruta: Union[str, Path]) -> bool:
    """True si el JSON tiene la clave "family"."""
    try:
        return "family" in json.loads(_leer(ruta))
    except json.JSONDecodeError as e:
        raise ErrorDocumento(f"JSON inválido en {ruta}: {e}") from e
