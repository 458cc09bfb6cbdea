"""
Resultados de los cálculos: validación, sumas de potencias, oráculos y series.
Los escalares se guardan tal cual (Gaussiano o complex); render.py los serializa.
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from Models.escalar import Modo


class _Resultado(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Violacion(_Resultado):
    hipotesis: str
    i: Optional[int] = None
    j: Optional[int] = None
    detalle: str


class ReporteValidacion(_Resultado):
    valido: bool
    violaciones: List[Violacion] = Field(default_factory=list)


class PeticionSumaPotencias(_Resultado):
    """σ_{γ+I}(t): γ es el multi-índice del usuario, el exponente real es γ+I."""
    gamma: Tuple[int, ...]
    t: Any = 1
    modo: Modo = Modo.EXACTO

    @field_validator("gamma")
    @classmethod
    def _gamma_no_negativo(cls, gamma):
        if any(g < 0 for g in gamma):
            raise ValueError(f"γ debe ser ≥ 0: {gamma}")
        return gamma


class EntradaTermino(_Resultado):
    K: Tuple[int, ...]
    J: Tuple[int, ...]
    beta: Tuple[int, ...]
    signo: int
    valor: Any


class DesgloseTerminos(_Resultado):
    entradas: List[EntradaTermino]
    total: Any


class ReporteSumaPotencias(_Resultado):
    gamma: Tuple[int, ...]
    t: Any
    valor: Any
    desglose: DesgloseTerminos


class ResultadoSerieZ(_Resultado):
    valor: Any
    magnitud_ultima_capa: float
    ciclos_omitidos: List[Tuple[int, ...]] = Field(default_factory=list)


class ReporteVerificacion(_Resultado):
    gamma: Tuple[int, ...]
    t: Any
    valores: Dict[str, Any]
    desviaciones: Dict[str, float]
    tolerancias: Dict[str, float]
    aprobado: bool
    conteo_raices: Optional[int] = None
    permanente: Optional[int] = None
    notas: List[str] = Field(default_factory=list)


class ReporteCola(_Resultado):
    ultima_capa: float
    parciales: List[Any]
    componentes: Dict[str, Any] = Field(default_factory=dict)
    estimacion_cola: float
    converge: bool
    enumeracion: str = "rectangulo"


class DescomposicionEjemplo2(_Resultado):
    primera_serie: float
    serie_k4: float
    serie_coth: float
    serie_sinh: float
    segunda_serie: float
    sigma: float
    cota_cola: float
    terminos: int


class RaizNumerica(_Resultado):
    punto: Tuple[Any, ...]
    multiplicidad: int = 1


class ConjuntoRaices(_Resultado):
    """Raíces numéricas del sistema del lado w; residuo = max |F̃ᵢ| sobre las raíces."""
    raices: List[RaizNumerica] = Field(default_factory=list)
    residuo: float = 0.0

    @property
    def conteo(self) -> int:
        return sum(r.multiplicidad for r in self.raices)
