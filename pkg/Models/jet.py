"""
Jets: desarrollos de Taylor truncados en un punto, con orden anisótropo.

El coeficiente en δ de un jet de p en c es (1/δ!)·∂^δ p(c); así se extraen las
derivadas (1/β!)·∂^β[...] de las fórmulas de Waring.
"""

from __future__ import annotations

from typing import Any, Dict, Iterable, Mapping, Optional, Sequence

from Models.escalar import Escalar, Modo, cero, convertir, uno
from Models.multi_indice import MultiIndice, clave_grlex, indices_acotados
from Models.polinomio import Polinomio
from Util.error_handler import ErrorDimension, ErrorTruncacion, JetNoInvertible


class Jet:
    """Jet truncado: coeficientes para índices δ ≤ orden."""

    __slots__ = ("n", "orden", "centro", "modo", "_coeficientes")

    def __init__(
        self,
        orden: Iterable[int],
        centro: Sequence[Any],
        coeficientes: Optional[Mapping[Iterable[int], Any]] = None,
        modo: Modo = Modo.EXACTO,
    ):
        self.orden = MultiIndice(orden)
        self.n = self.orden.n
        if len(centro) != self.n:
            raise ErrorDimension(f"centro de longitud {len(centro)} para n={self.n}")
        self.modo = Modo(modo)
        self.centro = tuple(convertir(c, self.modo) for c in centro)
        limpios: Dict[MultiIndice, Escalar] = {}
        for indice, valor in (coeficientes or {}).items():
            clave = MultiIndice(indice)
            if not clave.acotado_por(self.orden):
                continue
            c = convertir(valor, self.modo)
            if c:
                limpios[clave] = c
        self._coeficientes = {k: limpios[k] for k in sorted(limpios, key=clave_grlex)}

    @property
    def coeficientes(self) -> Dict[MultiIndice, Escalar]:
        return dict(self._coeficientes)

    def coeficiente(self, delta: Iterable[int]) -> Escalar:
        delta = MultiIndice(delta)
        if delta.n != self.n or not delta.acotado_por(self.orden):
            raise ErrorTruncacion(f"δ={tuple(delta)} excede el orden {tuple(self.orden)}")
        return self._coeficientes.get(delta, cero(self.modo))

    def __mul__(self, otro: "Jet") -> "Jet":
        return multiplicar_jets(self, otro)

    def __pow__(self, exponente: int) -> "Jet":
        return potenciar_jet(self, exponente)

    def __eq__(self, otro):
        if not isinstance(otro, Jet):
            return NotImplemented
        return (
            self.orden == otro.orden
            and self.centro == otro.centro
            and self._coeficientes == otro._coeficientes
        )

    __hash__ = None

    def __repr__(self):
        return f"Jet(orden={tuple(self.orden)}, {dict((tuple(k), v) for k, v in self._coeficientes.items())})"


def jet_identidad(orden: Iterable[int], centro: Sequence[Any], modo: Modo = Modo.EXACTO) -> Jet:
    orden = MultiIndice(orden)
    return Jet(orden, centro, {MultiIndice.ceros(orden.n): uno(modo)}, modo)


def jet_desde_polinomio(p: Polinomio, centro: Sequence[Any], orden: Iterable[int]) -> Jet:
    """Recentra p en el centro y trunca al orden dado."""
    orden = MultiIndice(orden)
    if orden.n != p.n or len(centro) != p.n:
        raise ErrorDimension(f"jet de dimensión {orden.n} para polinomio de n={p.n}")
    desplazado = p.desplazar(centro, hasta=orden)
    return Jet(orden, centro, desplazado.terminos, p.modo)


def _compatibles(a: Jet, b: Jet) -> None:
    if a.n != b.n:
        raise ErrorDimension(f"jets de dimensión {a.n} y {b.n}")
    if a.centro != b.centro:
        raise ErrorDimension(f"centros distintos: {a.centro} y {b.centro}")


def multiplicar_jets(a: Jet, b: Jet) -> Jet:
    """Producto de Cauchy truncado al mínimo de los órdenes."""
    _compatibles(a, b)
    orden = a.orden.minimo(b.orden)
    producto: Dict[tuple, Escalar] = {}
    for ka, ca in a._coeficientes.items():
        if not ka.acotado_por(orden):
            continue
        for kb, cb in b._coeficientes.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            if all(e <= o for e, o in zip(k, orden)):
                producto[k] = producto.get(k, cero(a.modo)) + ca * cb
    return Jet(orden, a.centro, producto, a.modo)


def invertir_jet(a: Jet) -> Jet:
    """
    Inverso de una unidad por recursión triangular en orden grlex.

    b₀ = 1/a₀,  b_δ = −(1/a₀)·Σ_{0<ε≤δ} a_ε·b_{δ−ε}

    Raises:
        JetNoInvertible: si el término constante es cero
    """
    a0 = a._coeficientes.get(MultiIndice.ceros(a.n))
    if not a0:
        raise JetNoInvertible(f"jet no invertible en {a.centro}: término constante nulo")
    inverso_a0 = uno(a.modo) / a0
    no_constantes = [(k, c) for k, c in a._coeficientes.items() if k.norma > 0]
    b: Dict[MultiIndice, Escalar] = {MultiIndice.ceros(a.n): inverso_a0}
    for delta in indices_acotados(a.orden)[1:]:
        acumulado = cero(a.modo)
        for eps, c in no_constantes:
            if eps.acotado_por(delta):
                resto = b.get(delta.menos(eps))
                if resto is not None:
                    acumulado = acumulado + c * resto
        if acumulado:
            b[delta] = -acumulado * inverso_a0
    return Jet(a.orden, a.centro, b, a.modo)


def potenciar_jet(a: Jet, exponente: int) -> Jet:
    """a^k por multiplicaciones sucesivas; exponentes negativos invierten primero."""
    if exponente < 0:
        return potenciar_jet(invertir_jet(a), -exponente)
    resultado = jet_identidad(a.orden, a.centro, a.modo)
    base = a
    while exponente:
        if exponente & 1:
            resultado = multiplicar_jets(resultado, base)
        exponente >>= 1
        if exponente:
            base = multiplicar_jets(base, base)
    return resultado


def coeficiente_jet(a: Jet, delta: Iterable[int]) -> Escalar:
    return a.coeficiente(delta)
