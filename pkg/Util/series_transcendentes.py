"""
Sistemas dados por productos infinitos de factores de Tsikh y suma truncada de
σ_{γ+I} sobre los subsistemas (k, m, …).

Incluye la familia de tipo Ejemplo 1 con su forma cerrada vectorizada y los
valores de referencia de la descomposición del Ejemplo 2.
"""

import itertools
import logging
import math
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from Models.escalar import Modo
from Models.multi_indice import MultiIndice
from Models.polinomio import Polinomio
from Models.resultados import DescomposicionEjemplo2, PeticionSumaPotencias, ReporteCola
from Models.sistema import SistemaTsikh
from Util.error_handler import ErrorDimension, ErrorHipotesis, ErrorWaring
from Util.motor_waring import suma_potencias
from Util.validacion import exigir_valido

logger = logging.getLogger("series")

Parametro = Callable[[Any], Any]
FormaCerrada = Callable[..., Dict[str, np.ndarray]]


# ---------- Ejemplo 1 ----------

def sistema_ejemplo1(a2: Any, a3: Any, b1: Any, b2: Any, b3: Any, t: Any = 1, modo: Modo = Modo.EXACTO) -> SistemaTsikh:
    """
    f₁ = (1 − a₂z₂)² + t·a₃z₁z₂²
    f₂ = (1 − b₁z₁)²(1 − b₂z₂) + t·b₃z₁²z₂
    """
    return SistemaTsikh(
        a=[[0, a2], [b1, b2]],
        m=[[0, 2], [2, 1]],
        Q=[
            Polinomio.monomio(2, (1, 2), a3, modo),
            Polinomio.monomio(2, (2, 1), b3, modo),
        ],
        t=t,
        modo=modo,
    )


def forma_cerrada_ejemplo1(a2: Any, a3: Any, b1: Any, b2: Any) -> Any:
    """σ₍₁,₁₎ del Ejemplo 1 en t = 1: 4a₂b₁ − a₃b₂/(b₂ − a₂)². Acepta escalares o arreglos."""
    return 4 * a2 * b1 - a3 * b2 / (b2 - a2) ** 2


# ---------- familias ----------

class FamiliaFactores(BaseModel):
    """
    Familia de factores: s = (s₁,…,sₙ) ↦ subsistema cuya ecuación i es el factor f_{i,sᵢ}.

    forma_cerrada, si existe, recibe los arreglos de índices (uno por variable)
    y devuelve σ₍₁,…,₁₎ de cada subsistema en t = 1, separado en componentes.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=1)
    nombre: str
    generador: Callable[[MultiIndice], SistemaTsikh]
    forma_cerrada: Optional[FormaCerrada] = None
    modo: Modo = Modo.FLOTANTE


def familia_tipo_ejemplo1(
    A2: Parametro, A3: Parametro, B1: Parametro, B2: Parametro, B3: Parametro,
    nombre: str = "tipo_ejemplo1",
) -> FamiliaFactores:
    """
    Familia cuyos subsistemas (k, m) tienen la forma del Ejemplo 1 con
    parámetros A₂(k), A₃(k) en la primera ecuación y B₁(m), B₂(m), B₃(m) en la
    segunda. Los parámetros deben aceptar arreglos de numpy.
    """
    def generador(s: MultiIndice) -> SistemaTsikh:
        k, m = s
        return sistema_ejemplo1(
            complex(A2(k)), complex(A3(k)), complex(B1(m)), complex(B2(m)), complex(B3(m)),
            modo=Modo.FLOTANTE,
        )

    def forma_cerrada(k: np.ndarray, m: np.ndarray) -> Dict[str, np.ndarray]:
        a2, a3, b1, b2 = A2(k), A3(k), B1(m), B2(m)
        return {
            "primera": 4 * a2 * b1,
            "segunda": -a3 * b2 / (b2 - a2) ** 2,
        }

    return FamiliaFactores(n=2, nombre=nombre, generador=generador, forma_cerrada=forma_cerrada)


def familia_ejemplo2(a2: float, a3: float, b1: float, b2: float, b3: float) -> FamiliaFactores:
    """
    f₁ = ∏ₖ [(1 − a₂z₂/(k²π²))² + a₃z₁z₂²/(k²π²)]
    f₂ = ∏ₘ [(1 − b₁z₁/(m²π²))²(1 − b₂z₂/(m²π²)) + b₃z₁²z₂/(m²π²)]
    """
    pi2 = math.pi ** 2
    return familia_tipo_ejemplo1(
        A2=lambda k: a2 / (k ** 2 * pi2),
        A3=lambda k: a3 / (k ** 2 * pi2),
        B1=lambda m: b1 / (m ** 2 * pi2),
        B2=lambda m: b2 / (m ** 2 * pi2),
        B3=lambda m: b3 / (m ** 2 * pi2),
        nombre="example2",
    )


def sistema_factor(familia: FamiliaFactores, s: Sequence[int]) -> SistemaTsikh:
    """
    Subsistema (f_{1,s₁},…,f_{n,sₙ}), validado.

    Raises:
        ErrorDimension: s fuera de rango
        ErrorWaring: fallo del generador
        ErrorValidacion: el subsistema no es de la clase
    """
    if len(s) != familia.n or any(int(x) < 1 for x in s):
        raise ErrorDimension(f"índice de factor inválido {tuple(s)}: cada sⱼ debe ser ≥ 1 (n={familia.n})")
    try:
        sistema = familia.generador(MultiIndice(int(x) for x in s))
    except ErrorWaring:
        raise
    except Exception as e:
        raise ErrorWaring(f"fallo del generador de '{familia.nombre}' en s={tuple(s)}: {e}") from e
    exigir_valido(sistema)
    return sistema


# ---------- suma truncada ----------

class TrabajoSerie(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    familia: FamiliaFactores
    gamma: Tuple[int, ...]
    s_max: int = Field(ge=1)
    enumeracion: Literal["rectangulo", "triangulo"] = "rectangulo"


def _capa(indices: np.ndarray, enumeracion: str) -> np.ndarray:
    """Capa de cada índice: max(s) en rectángulos, ‖s‖ − n + 1 en triángulos."""
    if enumeracion == "rectangulo":
        return indices.max(axis=0)
    return indices.sum(axis=0) - indices.shape[0] + 1


def _sumas_por_capa(valores: np.ndarray, capas: np.ndarray, s_max: int) -> np.ndarray:
    real = np.bincount(capas, weights=valores.real, minlength=s_max + 1)
    imag = np.bincount(capas, weights=valores.imag, minlength=s_max + 1)
    return (real + 1j * imag)[1: s_max + 1]


def _capas_forma_cerrada(trabajo: TrabajoSerie) -> Dict[str, np.ndarray]:
    familia, s_max = trabajo.familia, trabajo.s_max
    indices = np.indices((s_max,) * familia.n).reshape(familia.n, -1) + 1
    capas = _capa(indices, trabajo.enumeracion)
    dentro = capas <= s_max
    indices, capas = indices[:, dentro], capas[dentro]
    componentes = familia.forma_cerrada(*indices.astype(float))
    return {
        nombre: _sumas_por_capa(np.asarray(valores, dtype=complex), capas, s_max)
        for nombre, valores in componentes.items()
    }


def _capas_motor(trabajo: TrabajoSerie) -> Dict[str, np.ndarray]:
    familia, s_max = trabajo.familia, trabajo.s_max
    capas = np.zeros(s_max, dtype=complex)
    for s in itertools.product(range(1, s_max + 1), repeat=familia.n):
        capa = int(_capa(np.array(s)[:, None], trabajo.enumeracion)[0])
        if capa > s_max:
            continue
        peticion = PeticionSumaPotencias(gamma=trabajo.gamma, t=1, modo=familia.modo)
        capas[capa - 1] += complex(suma_potencias(sistema_factor(familia, s), peticion).valor)
    return {"total": capas}


def sigma_truncada(trabajo: TrabajoSerie) -> Tuple[complex, ReporteCola]:
    """
    Σ σ_{γ+I} de los subsistemas s con capa ≤ s_max, acumulada capa por capa.

    Usa la forma cerrada de la familia cuando existe y γ = 0; si no, el motor
    en cada subsistema.

    Returns:
        (valor, ReporteCola) con las sumas parciales por capa, la magnitud de la
        última capa y una estimación heurística de la cola
    """
    familia = trabajo.familia
    if len(trabajo.gamma) != familia.n:
        raise ErrorDimension(f"γ de dimensión {len(trabajo.gamma)} para n={familia.n}")

    if familia.forma_cerrada is not None and not any(trabajo.gamma):
        por_componente = _capas_forma_cerrada(trabajo)
    else:
        por_componente = _capas_motor(trabajo)

    capas = np.sum(np.array(list(por_componente.values())), axis=0)
    parciales = np.cumsum(capas)
    S = trabajo.s_max
    ultima = float(abs(capas[-1]))
    converge = S < 2 or ultima < float(abs(capas[S // 2 - 1]))
    if not converge:
        logger.warning("⚠️ Serie '%s': las capas no decrecen (|capa %d| = %.3e)", familia.nombre, S, ultima)

    reporte = ReporteCola(
        ultima_capa=ultima,
        parciales=[complex(p) for p in parciales],
        componentes={nombre: complex(np.sum(v)) for nombre, v in por_componente.items()},
        estimacion_cola=ultima * S,
        converge=converge,
        enumeracion=trabajo.enumeracion,
    )
    logger.info("✅ Serie '%s' hasta S=%d: %s", familia.nombre, S, complex(parciales[-1]))
    return complex(parciales[-1]), reporte


# ---------- referencia del Ejemplo 2 ----------

def terminos_coth_sinh(a2: float, a3: float, b2: float, k: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Sumandos (en k) de las series coth y sinh⁻², con el signo con que entran en
    la segunda serie: Σₘ 1/(m² + c²)² = −1/(2c⁴) + π·coth(πc)/(4c³) + π²/(4c²·sinh²(πc)),
    c = k·√(−b₂/a₂).
    """
    c = k * math.sqrt(-b2 / a2)
    prefactor = a3 * b2 / (math.pi ** 2 * a2 ** 2)
    coth = prefactor * math.pi / (4 * c ** 3) / np.tanh(math.pi * c)
    e = np.exp(-2 * math.pi * c)
    sinh = prefactor * math.pi ** 2 / (4 * c ** 2) * 4 * e / (1 - e) ** 2
    return -coth, -sinh


def referencia_ejemplo2(a2: float, a3: float, b1: float, b2: float, terminos: int) -> DescomposicionEjemplo2:
    """
    Descomposición de σ₍₁,₁₎ del Ejemplo 2:

        σ = a₂b₁/9 − Σ_{k,m} a₃b₂/(π²(a₂m² − b₂k²)²)
        Σ_{k,m} a₃b₂/(π²(a₂m² − b₂k²)²) = −serie_k4 − serie_coth − serie_sinh

    con serie_k4 = Σₖ a₃/(2π²b₂k⁴) = a₃π²/(180b₂) y las series coth/sinh⁻²
    sumadas directamente hasta `terminos`.

    Raises:
        ErrorHipotesis: si a₂·b₂ ≥ 0
    """
    if not a2 * b2 < 0:
        raise ErrorHipotesis(f"se requiere a₂·b₂ < 0 (a₂={a2}, b₂={b2})")
    if terminos < 1:
        raise ErrorDimension(f"terminos debe ser ≥ 1: {terminos}")

    k = np.arange(1, terminos + 1, dtype=float)
    coth, sinh = terminos_coth_sinh(a2, a3, b2, k)
    serie_coth = float(np.sum(coth))
    serie_sinh = float(np.sum(sinh))
    serie_k4 = a3 * math.pi ** 2 / (180 * b2)
    segunda = -serie_k4 - serie_coth - serie_sinh
    primera = a2 * b1 / 9

    # cola coth: |sumando| ≤ C/k³ con C del primer término → ∫ cola ≤ C/(2N²)
    razon = math.sqrt(-b2 / a2)
    C = abs(coth[0])
    cola_coth = C / (2 * terminos ** 2)
    r = math.exp(-2 * math.pi * razon)
    cola_sinh = abs(sinh[-1]) * r / (1 - r)

    logger.debug("🔍 Referencia Ejemplo 2: coth=%.6e sinh=%.6e k4=%.6e", serie_coth, serie_sinh, serie_k4)
    return DescomposicionEjemplo2(
        primera_serie=primera,
        serie_k4=serie_k4,
        serie_coth=serie_coth,
        serie_sinh=serie_sinh,
        segunda_serie=segunda,
        sigma=primera - segunda,
        cota_cola=cola_coth + cola_sinh,
        terminos=terminos,
    )


def suma_directa_segunda_serie(a2: float, a3: float, b2: float, M: int) -> float:
    """Σ_{k,m ≤ M} a₃b₂/(π²(a₂m² − b₂k²)²) por fuerza bruta (referencia de pruebas)."""
    k = np.arange(1, M + 1, dtype=float)[:, None]
    m = np.arange(1, M + 1, dtype=float)[None, :]
    return float(np.sum(a3 * b2 / (math.pi ** 2 * (a2 * m ** 2 - b2 * k ** 2) ** 2)))
