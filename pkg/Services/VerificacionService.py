from typing import Any, Optional, Sequence

from Models.resultados import ReporteVerificacion
from Models.sistema import SistemaTsikh
from Util.configuracion import NODOS_CUADRATURA
from Util.verificacion import Motor, verificar_suma_potencias


class VerificacionService:
    def __init__(self, sistema: SistemaTsikh, motor: Optional[Motor] = None):
        self.sistema = sistema
        self.motor = motor

    def verificar(
        self,
        gamma: Sequence[int],
        t: Any = None,
        nodos: int = NODOS_CUADRATURA,
        radios: Optional[Sequence[float]] = None,
        trunc_alfa: Optional[int] = None,
    ) -> ReporteVerificacion:
        return verificar_suma_potencias(
            self.sistema, gamma, t,
            motor=self.motor, nodos=nodos, radios=radios, trunc_alfa=trunc_alfa,
        )
