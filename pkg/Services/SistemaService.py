import logging
from typing import Any, List, Optional, Sequence

from Models.escalar import Modo, convertir
from Models.resultados import PeticionSumaPotencias, ReporteSumaPotencias, ReporteValidacion
from Models.sistema import SistemaTransformado, SistemaTsikh
from Util.motor_waring import coeficientes_newton, suma_potencias
from Util.transformacion import transformar_sistema
from Util.validacion import validar_sistema

logger = logging.getLogger("motor")


class SistemaService:
    """Operaciones sobre un sistema cargado: validar, transformar, sumar potencias, resultante."""

    def __init__(self, sistema: SistemaTsikh):
        self.sistema = sistema

    def en_modo(self, modo: Optional[Modo]) -> "SistemaService":
        if modo is None or modo == self.sistema.modo:
            return self
        return SistemaService(self.sistema.en_modo(modo))

    def validar(self) -> ReporteValidacion:
        return validar_sistema(self.sistema)

    def transformar(self) -> SistemaTransformado:
        return transformar_sistema(self.sistema)

    def t_efectivo(self, t: Any = None) -> Any:
        return self.sistema.t if t is None else convertir(t, self.sistema.modo)

    def suma_potencias(self, gamma: Sequence[int], t: Any = None) -> ReporteSumaPotencias:
        peticion = PeticionSumaPotencias(gamma=tuple(gamma), t=self.t_efectivo(t), modo=self.sistema.modo)
        return suma_potencias(self.sistema, peticion)

    def coeficientes_resultante(self, orden: int, t: Any = None) -> List[Any]:
        """
        b₀, …, b_N de f(w) = 1 + b₁w + … a partir de sᵢ = σ₍ᵢ,…,ᵢ₎.

        Args:
            orden: N
            t: Parámetro (por defecto el del sistema)

        Returns:
            [b₀, b₁, …, b_N]
        """
        n = self.sistema.n
        sumas = [self.suma_potencias((i - 1,) * n, t).valor for i in range(1, orden + 1)]
        coeficientes = coeficientes_newton(sumas, orden)
        logger.debug("🔍 Resultante de orden %d: b₁=%s", orden, coeficientes[1] if orden else None)
        return [convertir(coeficientes[0], self.sistema.modo)] + coeficientes[1:]
