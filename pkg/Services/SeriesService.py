import logging
from typing import Literal, Optional, Sequence, Tuple

from Models.documentos import DocumentoFamilia
from Models.resultados import DescomposicionEjemplo2, ReporteCola
from Util.error_handler import ErrorHipotesis
from Util.series_transcendentes import FamiliaFactores, TrabajoSerie, familia_ejemplo2, referencia_ejemplo2, sigma_truncada

logger = logging.getLogger("series")


class SeriesService:
    def __init__(self, documento: DocumentoFamilia):
        self.documento = documento
        self.familia: FamiliaFactores = familia_ejemplo2(**{k: documento.params[k] for k in ("a2", "a3", "b1", "b2", "b3")})

    def sumar(
        self,
        s_max: int,
        gamma: Sequence[int] = (0, 0),
        enumeracion: Literal["rectangulo", "triangulo"] = "rectangulo",
    ) -> Tuple[complex, ReporteCola]:
        trabajo = TrabajoSerie(familia=self.familia, gamma=tuple(gamma), s_max=s_max, enumeracion=enumeracion)
        return sigma_truncada(trabajo)

    def referencia(self, terminos: int) -> Optional[DescomposicionEjemplo2]:
        """Descomposición de referencia, o None si a₂·b₂ ≥ 0."""
        p = self.documento.params
        try:
            return referencia_ejemplo2(p["a2"], p["a3"], p["b1"], p["b2"], terminos)
        except ErrorHipotesis as e:
            logger.warning("⚠️ Sin referencia: %s", e)
            return None
