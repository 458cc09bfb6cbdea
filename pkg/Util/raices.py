"""
Oráculo de raíces: resuelve numéricamente el sistema del lado w y suma
potencias directamente sobre las raíces.

Eliminación exacta con resultantes de sympy, raíces univariadas por Aberth
(numpy) sobre la descomposición libre de cuadrados, emparejamiento de
coordenadas por residuo y agrupamiento con networkx.
"""

import logging
from typing import Any, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
import sympy

from Models.escalar import Modo, a_exacto
from Models.multi_indice import MultiIndice
from Models.polinomio import Polinomio
from Models.resultados import ConjuntoRaices, RaizNumerica
from Models.sistema import SistemaTransformado
from Util.configuracion import MAX_ITER_ABERTH, RESIDUO_RAICES, RESIDUO_UNIVARIADO, TOL_CERO, TOL_CLUSTER, TOL_EMPAREJAMIENTO
from Util.error_handler import ErrorSolver
from Util.transformacion import numero_de_raices

logger = logging.getLogger("oraculo")


# ---------- raíces univariadas ----------

def _residuo_univariado(coeficientes: np.ndarray, z: np.ndarray) -> np.ndarray:
    """|p(z)| / p̄(|z|) con p̄ el polinomio de coeficientes |c_k|."""
    escala = np.polyval(np.abs(coeficientes), np.abs(z))
    return np.abs(np.polyval(coeficientes, z)) / np.where(escala > 0, escala, 1)


def _aberth(
    coeficientes: np.ndarray,
    max_iter: int = MAX_ITER_ABERTH,
    tol: float = 1e-13,
    tol_estancado: float = 1e-8,
) -> np.ndarray:
    """
    Iteración de Aberth–Ehrlich sobre un polinomio mónico (mayor grado primero).

    Termina cuando los pasos caen bajo tol, o cuando ya son menores que
    tol_estancado, dejan de achicarse y el residuo relativo está bajo
    RESIDUO_UNIVARIADO. Sin convergencia en max_iter devuelve la última
    iteración; el residuo final lo juzga raices_univariadas.
    """
    grado = len(coeficientes) - 1
    derivada = np.polyder(coeficientes)

    radio = max(abs(coeficientes[k]) ** (1.0 / k) for k in range(1, grado + 1)) or 1.0
    centro = -coeficientes[1] / grado
    angulos = 2 * np.pi * np.arange(grado) / grado + 0.4
    z = centro + radio * np.exp(1j * angulos)

    mejor_paso = np.inf
    for iteracion in range(max_iter):
        pz = np.polyval(coeficientes, z)
        dpz = np.polyval(derivada, z)
        cociente = np.divide(pz, dpz, out=np.zeros_like(pz), where=dpz != 0)
        diferencias = z[:, None] - z[None, :]
        np.fill_diagonal(diferencias, 1)
        repulsion = (1 / diferencias).sum(axis=1) - 1
        paso = cociente / (1 - cociente * repulsion)
        z = z - paso

        paso_relativo = float(np.max(np.abs(paso) / (1 + np.abs(z))))
        if paso_relativo <= tol:
            logger.debug("🔍 Aberth: grado %d, %d iteraciones", grado, iteracion + 1)
            return z
        estancado = tol_estancado >= paso_relativo > 0.5 * mejor_paso
        if estancado and _residuo_univariado(coeficientes, z).max() <= RESIDUO_UNIVARIADO:
            logger.debug("🔍 Aberth: grado %d estancado en paso %.2e tras %d iteraciones", grado, paso_relativo, iteracion + 1)
            return z
        mejor_paso = min(mejor_paso, paso_relativo)

    logger.warning(
        "⚠️ Aberth sin converger en %d iteraciones (grado %d, paso %.2e); decide el residuo tras pulir",
        max_iter, grado, float(np.max(np.abs(paso))),
    )
    return z


def _pulir_univariada(coeficientes: np.ndarray, z: np.ndarray, pasos: int = 3) -> np.ndarray:
    """Newton por raíz; un paso se acepta solo si no empeora |p(z)|."""
    derivada = np.polyder(coeficientes)
    for _ in range(pasos):
        pz = np.polyval(coeficientes, z)
        dpz = np.polyval(derivada, z)
        candidato = z - np.divide(pz, dpz, out=np.zeros_like(z), where=dpz != 0)
        z = np.where(np.abs(np.polyval(coeficientes, candidato)) <= np.abs(pz), candidato, z)
    return z


def raices_univariadas(p: Union[Polinomio, Sequence[Any]]) -> List[complex]:
    """
    Todas las raíces complejas de un polinomio en una variable (con repetición).

    Args:
        p: Polinomio con n = 1, o coeficientes de mayor a menor grado

    Returns:
        Raíces ordenadas por (parte real, parte imaginaria)

    Raises:
        ErrorSolver: grado < 1 o residuo relativo |p(z)|/p̄(|z|) sobre RESIDUO_UNIVARIADO
    """
    crudos = p.coeficientes_univariados() if isinstance(p, Polinomio) else list(p)
    coeficientes = np.array([complex(c) for c in crudos], dtype=complex)
    coeficientes = np.trim_zeros(coeficientes, "f")
    if len(coeficientes) < 2:
        raise ErrorSolver("polinomio de grado < 1: no hay raíces que buscar", {"coeficientes": crudos})

    ceros = len(coeficientes) - len(np.trim_zeros(coeficientes, "b"))
    recortados = coeficientes[: len(coeficientes) - ceros]
    raices = [0j] * ceros
    if len(recortados) > 1:
        monico = recortados / recortados[0]
        raices.extend(_pulir_univariada(monico, _aberth(monico)).tolist())

    residuo = float(_residuo_univariado(coeficientes, np.array(raices)).max())
    if residuo > RESIDUO_UNIVARIADO:
        raise ErrorSolver(
            f"residuo relativo {residuo:.2e} sobre la cota {RESIDUO_UNIVARIADO:.0e}",
            {"grado": len(coeficientes) - 1, "residuo": residuo},
        )
    logger.debug("🔍 Raíces univariadas: grado %d, residuo relativo %.2e", len(coeficientes) - 1, residuo)
    return sorted((complex(r) for r in raices), key=lambda r: (r.real, r.imag))


# ---------- puente exacto con sympy ----------

def _coeficiente_sympy(c: Any) -> sympy.Expr:
    g = a_exacto(c)
    return (
        sympy.Rational(g.re.numerator, g.re.denominator)
        + sympy.I * sympy.Rational(g.im.numerator, g.im.denominator)
    )


def a_sympy(p: Polinomio, variables: Sequence[sympy.Symbol]) -> sympy.Expr:
    """Polinomio exacto de sympy; los flotantes se toman por su valor binario."""
    return sympy.Add(*[
        _coeficiente_sympy(c) * sympy.Mul(*[v ** e for v, e in zip(variables, k)])
        for k, c in p.terminos.items()
    ])


def _raices_con_multiplicidad(polinomio: sympy.Poly) -> List[Tuple[complex, int]]:
    """Raíces de cada factor libre de cuadrados, con su multiplicidad exacta."""
    _, factores = polinomio.sqf_list()
    resultado = []
    for factor, multiplicidad in factores:
        if factor.degree() < 1:
            continue
        for r in raices_univariadas([complex(c) for c in factor.all_coeffs()]):
            resultado.append((r, multiplicidad))
    return resultado


# ---------- sistema ----------

def _residuo_relativo(F: Sequence[Polinomio], modulos: Sequence[Polinomio], punto: Sequence[complex]) -> float:
    absolutos = [abs(x) for x in punto]
    peor = 0.0
    for f, m in zip(F, modulos):
        escala = abs(complex(m.evaluar_numpy(absolutos)))
        valor = abs(complex(f.evaluar_numpy(punto)))
        peor = max(peor, valor / escala if escala > 0 else valor)
    return peor


def _pulir_newton(F: Sequence[Polinomio], punto: np.ndarray, pasos: int = 4) -> np.ndarray:
    """Newton sobre el sistema F = 0 desde un punto ya cercano a una raíz simple."""
    n = len(F)
    derivadas = [[f.derivar(j) for j in range(n)] for f in F]
    for _ in range(pasos):
        valores = np.array([complex(f.evaluar_numpy(punto)) for f in F])
        jac = np.array([[complex(d.evaluar_numpy(punto)) for d in fila] for fila in derivadas])
        try:
            paso = np.linalg.solve(jac, valores)
        except np.linalg.LinAlgError:
            break
        punto = punto - paso
        if np.max(np.abs(paso)) <= 1e-16 * (1 + np.max(np.abs(punto))):
            break
    return punto


def _agrupar(candidatos: List[Tuple[np.ndarray, int]], tolerancia: float) -> List[RaizNumerica]:
    """Une raíces a distancia ≤ tolerancia (componentes conexas), sumando multiplicidades."""
    grafo = nx.Graph()
    grafo.add_nodes_from(range(len(candidatos)))
    for i in range(len(candidatos)):
        for j in range(i + 1, len(candidatos)):
            pi, pj = candidatos[i][0], candidatos[j][0]
            if np.max(np.abs(pi - pj)) <= tolerancia * max(1.0, float(np.max(np.abs(pi)))):
                grafo.add_edge(i, j)

    raices = []
    for componente in nx.connected_components(grafo):
        miembros = sorted(componente)
        pesos = np.array([candidatos[k][1] for k in miembros], dtype=float)
        puntos = np.array([candidatos[k][0] for k in miembros])
        centro = (pesos[:, None] * puntos).sum(axis=0) / pesos.sum()
        raices.append(RaizNumerica(
            punto=tuple(complex(x) for x in centro),
            multiplicidad=int(sum(candidatos[k][1] for k in miembros)),
        ))
    return sorted(raices, key=lambda r: tuple((round(x.real, 12), round(x.imag, 12)) for x in r.punto))


def _cerrar_conjunto(
    ts: SistemaTransformado,
    F: Sequence[Polinomio],
    candidatos: List[Tuple[np.ndarray, int]],
    diagnosticos: dict,
) -> ConjuntoRaices:
    raices = _agrupar(candidatos, TOL_CLUSTER)
    esperado = numero_de_raices(ts)
    conteo = sum(r.multiplicidad for r in raices)
    residuo = max(
        (abs(complex(f.evaluar_numpy(r.punto))) for r in raices for f in F),
        default=0.0,
    )
    if conteo != esperado:
        raise ErrorSolver(
            f"conteo de raíces {conteo} distinto del permanente {esperado}",
            {**diagnosticos, "conteo": conteo, "permanente": esperado, "residuo": residuo},
        )
    if residuo > RESIDUO_RAICES:
        logger.warning("⚠️ Residuo de las raíces %.2e sobre %.0e", residuo, RESIDUO_RAICES)
    logger.debug("✅ %d raíces (con multiplicidad), residuo %.2e", conteo, residuo)
    return ConjuntoRaices(raices=raices, residuo=residuo)


def resolver_sistema_2d(ts: SistemaTransformado, t: Any = None) -> ConjuntoRaices:
    """
    Raíces de F̃ = q̃ + tQ̃ para n = 2.

    Resultantes exactas en w₂ y en w₁, raíces de sus factores libres de
    cuadrados, emparejamiento (x, y) por residuo relativo, pulido de Newton de
    las raíces simples y agrupamiento.

    Raises:
        ErrorSolver: resultante idénticamente nula, emparejamiento ambiguo o
            conteo distinto del permanente de m̂
    """
    if ts.n != 2:
        raise ErrorSolver(f"resolver_sistema_2d requiere n = 2 (n={ts.n})")
    F_exacto = ts.en_modo(Modo.EXACTO).F(None if t is None else a_exacto(t))
    w1, w2 = sympy.symbols("w1 w2")
    f1, f2 = (a_sympy(f, (w1, w2)) for f in F_exacto)

    R1 = sympy.Poly(sympy.resultant(f1, f2, w2), w1)
    R2 = sympy.Poly(sympy.resultant(f1, f2, w1), w2)
    if R1.is_zero or R2.is_zero:
        raise ErrorSolver("resultante idénticamente nula: raíces no aisladas", {"t": str(t)})

    xs = _raices_con_multiplicidad(R1)
    ys = _raices_con_multiplicidad(R2)
    F = [f.a_flotante() for f in F_exacto]
    modulos = [Polinomio(2, {k: abs(complex(c)) for k, c in f.terminos.items()}, Modo.FLOTANTE) for f in F]

    parejas = {
        (ix, iy)
        for ix, (x, _) in enumerate(xs)
        for iy, (y, _) in enumerate(ys)
        if _residuo_relativo(F, modulos, (x, y)) <= TOL_EMPAREJAMIENTO
    }
    socios_x = {ix: [iy for jx, iy in parejas if jx == ix] for ix in range(len(xs))}
    socios_y = {iy: [ix for ix, jy in parejas if jy == iy] for iy in range(len(ys))}

    candidatos: List[Tuple[np.ndarray, int]] = []
    for ix, (x, kx) in enumerate(xs):
        socios = socios_x[ix]
        if len(socios) == 1:
            multiplicidad = kx
            pares = [(socios[0], multiplicidad)]
        elif all(len(socios_y[iy]) == 1 for iy in socios):
            pares = [(iy, ys[iy][1]) for iy in socios]
        else:
            raise ErrorSolver(
                "emparejamiento ambiguo de coordenadas",
                {"x": x, "socios": [ys[iy][0] for iy in socios]},
            )
        for iy, multiplicidad in pares:
            punto = np.array([x, ys[iy][0]], dtype=complex)
            if multiplicidad == 1:
                punto = _pulir_newton(F, punto)
            candidatos.append((punto, multiplicidad))

    return _cerrar_conjunto(
        ts, F, candidatos,
        {"grado_R1": R1.degree(), "grado_R2": R2.degree(), "parejas": len(parejas)},
    )


def resolver_sistema(ts: SistemaTransformado, t: Any = None) -> ConjuntoRaices:
    """Despacha por dimensión: n = 1 directo, n = 2 por resultantes."""
    if ts.n == 2:
        return resolver_sistema_2d(ts, t)
    if ts.n != 1:
        raise ErrorSolver(f"el oráculo de raíces solo cubre n ≤ 2 (n={ts.n})")

    F_exacto = ts.en_modo(Modo.EXACTO).F(None if t is None else a_exacto(t))
    w = sympy.Symbol("w1")
    polinomio = sympy.Poly(a_sympy(F_exacto[0], (w,)), w)
    if polinomio.is_zero:
        raise ErrorSolver("polinomio idénticamente nulo")
    candidatos = [(np.array([r], dtype=complex), k) for r, k in _raices_con_multiplicidad(polinomio)]
    F = [f.a_flotante() for f in F_exacto]
    return _cerrar_conjunto(ts, F, candidatos, {"grado": polinomio.degree()})


def suma_potencias_directa(
    conjunto: ConjuntoRaices,
    gamma: Sequence[int],
    tol_cero: Optional[float] = None,
) -> complex:
    """
    Σ multiplicidad·∏ w^{γ+I} sobre las raíces sin coordenadas casi nulas.

    Como w = 1/z, es σ_{γ+I}; las raíces con |w_j| ≤ tol_cero corresponden a
    raíces z en el infinito y se excluyen.
    """
    tol_cero = TOL_CERO if tol_cero is None else tol_cero
    exponentes = np.array(MultiIndice(gamma).mas(MultiIndice.unos(len(gamma))))
    terminos = [
        r.multiplicidad * np.prod(np.array(r.punto, dtype=complex) ** exponentes)
        for r in conjunto.raices
        if all(abs(x) > tol_cero for x in r.punto)
    ]
    if not terminos:
        return 0j
    return complex(np.sum(np.array(terminos, dtype=complex)))
