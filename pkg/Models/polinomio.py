"""
Polinomios dispersos multivariados.

Términos indexados por MultiIndice en orden lexicográfico graduado, sin ceros
almacenados. Los coeficientes son escalares de un único modo (exacto o flotante).
"""

from __future__ import annotations

import logging
import math
from types import MappingProxyType
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence

import numpy as np

from Models.escalar import Escalar, Gaussiano, Modo, a_exacto, cero, convertir, modo_de, uno
from Models.multi_indice import MultiIndice, clave_grlex
from Util.combinatoria import permutaciones, signo_permutacion
from Util.error_handler import ErrorDimension, ErrorModo

logger = logging.getLogger("polinomio")


def _coeficiente(valor: Any, modo: Modo) -> Escalar:
    modo_valor = modo_de(valor)
    if modo_valor is not None and modo_valor != modo:
        raise ErrorModo(f"coeficiente {valor!r} no es de modo {modo.value}")
    return convertir(valor, modo)


class Polinomio:
    """Polinomio disperso en n variables con coeficientes exactos o flotantes."""

    __slots__ = ("n", "modo", "_terminos")

    def __init__(
        self,
        n: int,
        terminos: Optional[Mapping[Iterable[int], Any]] = None,
        modo: Modo = Modo.EXACTO,
    ):
        if n < 1:
            raise ErrorDimension(f"dimensión inválida: {n}")
        self.n = n
        self.modo = Modo(modo)
        limpios: Dict[MultiIndice, Escalar] = {}
        for exponentes, valor in (terminos or {}).items():
            clave = MultiIndice(exponentes)
            if clave.n != n:
                raise ErrorDimension(f"término {tuple(clave)} no tiene dimensión {n}")
            c = _coeficiente(valor, self.modo)
            if c:
                limpios[clave] = limpios.get(clave, cero(self.modo)) + c
        self._terminos = {k: limpios[k] for k in sorted(limpios, key=clave_grlex) if limpios[k]}

    # --- constructores ---

    @classmethod
    def cero(cls, n: int, modo: Modo = Modo.EXACTO) -> "Polinomio":
        return cls(n, {}, modo)

    @classmethod
    def constante(cls, n: int, valor: Any, modo: Modo = Modo.EXACTO) -> "Polinomio":
        return cls(n, {(0,) * n: valor}, modo)

    @classmethod
    def monomio(cls, n: int, exponentes: Iterable[int], valor: Any = 1, modo: Modo = Modo.EXACTO) -> "Polinomio":
        return cls(n, {tuple(exponentes): valor}, modo)

    @classmethod
    def variable(cls, n: int, j: int, modo: Modo = Modo.EXACTO) -> "Polinomio":
        exps = [0] * n
        exps[j] = 1
        return cls(n, {tuple(exps): 1}, modo)

    @classmethod
    def lineal(cls, n: int, j: int, centro: Any, modo: Modo = Modo.EXACTO) -> "Polinomio":
        """El factor (w_j − centro)."""
        return cls.variable(n, j, modo) - cls.constante(n, centro, modo)

    # --- consultas ---

    @property
    def terminos(self) -> Mapping[MultiIndice, Escalar]:
        return MappingProxyType(self._terminos)

    @property
    def es_cero(self) -> bool:
        return not self._terminos

    def grado(self, j: int) -> float:
        """deg_{z_j}; −inf para el polinomio cero."""
        if not 0 <= j < self.n:
            raise ErrorDimension(f"variable {j} fuera de rango (n={self.n})")
        if not self._terminos:
            return -math.inf
        return max(e[j] for e in self._terminos)

    def coeficiente(self, exponentes: Iterable[int]) -> Escalar:
        return self._terminos.get(MultiIndice(exponentes), cero(self.modo))

    # --- aritmética ---

    def _compatible(self, otro: "Polinomio") -> None:
        if self.n != otro.n:
            raise ErrorDimension(f"dimensiones distintas: {self.n} y {otro.n}")
        if self.modo != otro.modo:
            raise ErrorModo(f"modos distintos: {self.modo.value} y {otro.modo.value}")

    def __add__(self, otro):
        if not isinstance(otro, Polinomio):
            return self + Polinomio.constante(self.n, otro, self.modo)
        self._compatible(otro)
        suma = dict(self._terminos)
        for k, c in otro._terminos.items():
            suma[k] = suma.get(k, cero(self.modo)) + c
        return Polinomio(self.n, suma, self.modo)

    __radd__ = __add__

    def __neg__(self):
        return Polinomio(self.n, {k: -c for k, c in self._terminos.items()}, self.modo)

    def __sub__(self, otro):
        if not isinstance(otro, Polinomio):
            otro = Polinomio.constante(self.n, otro, self.modo)
        return self + (-otro)

    def __rsub__(self, otro):
        return (-self) + otro

    def __mul__(self, otro):
        if not isinstance(otro, Polinomio):
            return self.por_escalar(otro)
        self._compatible(otro)
        producto: Dict[tuple, Escalar] = {}
        for ka, ca in self._terminos.items():
            for kb, cb in otro._terminos.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                producto[k] = producto.get(k, cero(self.modo)) + ca * cb
        return Polinomio(self.n, producto, self.modo)

    def __rmul__(self, otro):
        return self.por_escalar(otro)

    def por_escalar(self, valor: Any) -> "Polinomio":
        c = _coeficiente(valor, self.modo)
        return Polinomio(self.n, {k: c * v for k, v in self._terminos.items()}, self.modo)

    def __pow__(self, exponente: int) -> "Polinomio":
        if not isinstance(exponente, int) or exponente < 0:
            raise ValueError(f"exponente inválido: {exponente!r}")
        resultado = Polinomio.constante(self.n, 1, self.modo)
        base = self
        while exponente:
            if exponente & 1:
                resultado = resultado * base
            exponente >>= 1
            if exponente:
                base = base * base
        return resultado

    def __eq__(self, otro):
        if not isinstance(otro, Polinomio):
            return NotImplemented
        return self.n == otro.n and self.modo == otro.modo and self._terminos == otro._terminos

    __hash__ = None

    # --- cálculo ---

    def derivar(self, j: int) -> "Polinomio":
        """Derivada parcial formal respecto de la variable j."""
        if not 0 <= j < self.n:
            raise ErrorDimension(f"variable {j} fuera de rango (n={self.n})")
        derivada: Dict[tuple, Escalar] = {}
        for k, c in self._terminos.items():
            if k[j] == 0:
                continue
            nuevo = list(k)
            nuevo[j] -= 1
            derivada[tuple(nuevo)] = c * k[j]
        return Polinomio(self.n, derivada, self.modo)

    def _punto(self, punto: Sequence[Any]) -> list:
        if len(punto) != self.n:
            raise ErrorDimension(f"punto de longitud {len(punto)} para n={self.n}")
        return [_coeficiente(x, self.modo) for x in punto]

    def evaluar(self, punto: Sequence[Any]) -> Escalar:
        """Evaluación exacta en modo exacto, con tabla de potencias por variable."""
        coords = self._punto(punto)
        if not self._terminos:
            return cero(self.modo)
        potencias = []
        for j, x in enumerate(coords):
            maximo = max(e[j] for e in self._terminos)
            tabla = [uno(self.modo)]
            for _ in range(maximo):
                tabla.append(tabla[-1] * x)
            potencias.append(tabla)
        total = cero(self.modo)
        for k, c in self._terminos.items():
            termino = c
            for j, e in enumerate(k):
                if e:
                    termino = termino * potencias[j][e]
            total = total + termino
        return total

    def desplazar(self, centro: Sequence[Any], hasta: Optional[Sequence[int]] = None) -> "Polinomio":
        """
        Recentra: devuelve p̂ con p̂(u) = p(centro + u).

        Args:
            centro: Punto de recentrado
            hasta: Si se da, descarta los términos de u con algún exponente mayor (truncación)
        """
        c = self._punto(centro)
        desplazado: Dict[tuple, Escalar] = {}
        for k, coef in self._terminos.items():
            # (c_j + u_j)^{e_j} = Σ_r C(e_j, r) c_j^{e_j − r} u_j^r
            factores = []
            for j, e in enumerate(k):
                tope = e if hasta is None else min(e, hasta[j])
                factores.append([(r, math.comb(e, r) * c[j] ** (e - r)) for r in range(tope + 1)])
            parciales = [((), coef)]
            for lista in factores:
                parciales = [(exps + (r,), valor * peso) for exps, valor in parciales for r, peso in lista]
            for exps, valor in parciales:
                desplazado[exps] = desplazado.get(exps, cero(self.modo)) + valor
        return Polinomio(self.n, desplazado, self.modo)

    # --- conversión ---

    def a_flotante(self) -> "Polinomio":
        if self.modo == Modo.FLOTANTE:
            return self
        return Polinomio(self.n, {k: complex(c) for k, c in self._terminos.items()}, Modo.FLOTANTE)

    def a_exacto(self) -> "Polinomio":
        if self.modo == Modo.EXACTO:
            return self
        return Polinomio(self.n, {k: a_exacto(c) for k, c in self._terminos.items()}, Modo.EXACTO)

    def en_modo(self, modo: Modo) -> "Polinomio":
        return self.a_exacto() if modo == Modo.EXACTO else self.a_flotante()

    def evaluar_numpy(self, coordenadas: Sequence[np.ndarray]) -> np.ndarray:
        """Evaluación vectorizada en flotante sobre arreglos broadcastables (uno por variable)."""
        if len(coordenadas) != self.n:
            raise ErrorDimension(f"{len(coordenadas)} coordenadas para n={self.n}")
        coords = [np.asarray(x, dtype=complex) for x in coordenadas]
        forma = np.broadcast(*coords).shape
        if not self._terminos:
            return np.zeros(forma, dtype=complex)
        potencias = []
        for j, x in enumerate(coords):
            maximo = max(e[j] for e in self._terminos)
            tabla = [np.ones_like(x)]
            for _ in range(maximo):
                tabla.append(tabla[-1] * x)
            potencias.append(tabla)
        total = np.zeros(forma, dtype=complex)
        for k, c in self._terminos.items():
            termino = complex(c)
            for j, e in enumerate(k):
                if e:
                    termino = termino * potencias[j][e]
            total = total + termino
        return total

    def coeficientes_univariados(self) -> list:
        """Coeficientes de mayor a menor grado (solo n = 1)."""
        if self.n != 1:
            raise ErrorDimension("coeficientes_univariados requiere n = 1")
        if self.es_cero:
            return []
        grado = int(self.grado(0))
        return [self.coeficiente((g,)) for g in range(grado, -1, -1)]

    def __repr__(self):
        if not self._terminos:
            return f"Polinomio(n={self.n}, 0)"
        partes = [f"{c}·{tuple(k)}" for k, c in self._terminos.items()]
        return f"Polinomio(n={self.n}, {' + '.join(partes)})"


def operar_polinomios(a: Polinomio, b: Polinomio, op: str) -> Polinomio:
    """poly_arith: op ∈ {"add", "sub", "mul"}."""
    operaciones = {
        "add": lambda x, y: x + y,
        "sub": lambda x, y: x - y,
        "mul": lambda x, y: x * y,
    }
    if op not in operaciones:
        raise ValueError(f"operación desconocida: {op!r}")
    a._compatible(b)
    return operaciones[op](a, b)


def derivada_parcial(p: Polinomio, var: int) -> Polinomio:
    return p.derivar(var)


def evaluar_polinomio(p: Polinomio, punto: Sequence[Any]) -> Escalar:
    return p.evaluar(punto)


def desplazar_polinomio(p: Polinomio, centro: Sequence[Any]) -> Polinomio:
    return p.desplazar(centro)


def determinante_jacobiano(polinomios: Sequence[Polinomio]) -> Polinomio:
    """
    Determinante de la matriz jacobiana ∂fᵢ/∂w_j, expandido (fórmula de Leibniz).

    Args:
        polinomios: n polinomios en n variables, mismo modo

    Returns:
        det(∂fᵢ/∂w_j) como polinomio
    """
    n = len(polinomios)
    if n == 0 or any(p.n != n for p in polinomios):
        raise ErrorDimension(f"se esperan {n} polinomios en {n} variables")
    modo = polinomios[0].modo
    if any(p.modo != modo for p in polinomios):
        raise ErrorModo("jacobiano con modos mezclados")

    derivadas = [[p.derivar(j) for j in range(n)] for p in polinomios]
    total = Polinomio.cero(n, modo)
    for perm in permutaciones(n):
        producto = Polinomio.constante(n, signo_permutacion(perm), modo)
        for i, j in enumerate(perm):
            if producto.es_cero:
                break
            producto = producto * derivadas[i][j]
        total = total + producto
    return total
