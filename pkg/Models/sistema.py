"""
Sistemas de la clase de Tsikh en los lados z y w.

Lado z:  fᵢ = qᵢ + t·Qᵢ,  qᵢ = ∏ⱼ (1 − a_ij z_j)^{m_ij},  Qᵢ divisible por z₁⋯zₙ.
Lado w (z = 1/w):  F̃ᵢ = q̃ᵢ + t·Q̃ᵢ,  q̃ᵢ = ∏ⱼ (w_j − a_ij)^{m̂_ij}.
"""

from __future__ import annotations

from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

from Models.escalar import Escalar, Modo, a_exacto, convertir
from Models.polinomio import Polinomio, determinante_jacobiano
from Util.error_handler import ErrorDimension, ErrorModo


def _matriz_escalares(a: Sequence[Sequence[Any]], n: int, modo: Modo) -> Tuple[Tuple[Escalar, ...], ...]:
    if len(a) != n or any(len(fila) != n for fila in a):
        raise ErrorDimension(f"la matriz a debe ser {n}×{n}")
    return tuple(tuple(convertir(x, modo) for x in fila) for fila in a)


def _matriz_enteros(m: Sequence[Sequence[int]], n: int, nombre: str) -> Tuple[Tuple[int, ...], ...]:
    if len(m) != n or any(len(fila) != n for fila in m):
        raise ErrorDimension(f"la matriz {nombre} debe ser {n}×{n}")
    filas = []
    for fila in m:
        for x in fila:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ErrorDimension(f"entrada de {nombre} inválida: {x!r}")
        filas.append(tuple(fila))
    return tuple(filas)


class SistemaTsikh:
    """Sistema del lado z: matrices a, m, perturbaciones Q y parámetro t."""

    def __init__(
        self,
        a: Sequence[Sequence[Any]],
        m: Sequence[Sequence[int]],
        Q: Sequence[Polinomio],
        t: Any = 1,
        modo: Modo = Modo.EXACTO,
    ):
        self.modo = Modo(modo)
        self.n = len(Q)
        if self.n < 1:
            raise ErrorDimension("el sistema necesita al menos una ecuación")
        self.a = _matriz_escalares(a, self.n, self.modo)
        self.m = _matriz_enteros(m, self.n, "m")
        for p in Q:
            if p.n != self.n:
                raise ErrorDimension(f"Qᵢ en {p.n} variables para n={self.n}")
            if p.modo != self.modo:
                raise ErrorModo(f"Qᵢ en modo {p.modo.value} para un sistema {self.modo.value}")
        self.Q = tuple(Q)
        self.t = convertir(t, self.modo)

    def q(self, i: int) -> Polinomio:
        """qᵢ(z) = ∏ⱼ (1 − a_ij z_j)^{m_ij}, omitiendo los a_ij = 0."""
        return self.q_sin(i, None)

    def q_sin(self, i: int, j_excluida: Optional[int]) -> Polinomio:
        """qᵢ sin el factor de la variable j_excluida."""
        producto = Polinomio.constante(self.n, 1, self.modo)
        for j in range(self.n):
            if j == j_excluida or not self.a[i][j]:
                continue
            factor = Polinomio.constante(self.n, 1, self.modo) - Polinomio.variable(self.n, j, self.modo).por_escalar(self.a[i][j])
            producto = producto * factor ** self.m[i][j]
        return producto

    def f(self, i: int, t: Any = None) -> Polinomio:
        t = self.t if t is None else convertir(t, self.modo)
        return self.q(i) + self.Q[i].por_escalar(t)

    def jacobiano(self, t: Any = None) -> Polinomio:
        return determinante_jacobiano([self.f(i, t) for i in range(self.n)])

    def con_t(self, t: Any) -> "SistemaTsikh":
        return SistemaTsikh(self.a, self.m, self.Q, t, self.modo)

    def en_modo(self, modo: Modo) -> "SistemaTsikh":
        if modo == self.modo:
            return self
        if modo == Modo.FLOTANTE:
            return SistemaTsikh(
                [[complex(x) for x in fila] for fila in self.a],
                self.m,
                [p.a_flotante() for p in self.Q],
                complex(self.t),
                Modo.FLOTANTE,
            )
        return SistemaTsikh(
            [[a_exacto(x) for x in fila] for fila in self.a],
            self.m,
            [p.a_exacto() for p in self.Q],
            a_exacto(self.t),
            Modo.EXACTO,
        )

    def __repr__(self):
        return f"SistemaTsikh(n={self.n}, modo={self.modo.value}, m={self.m})"


class SistemaTransformado:
    """Sistema del lado w tras la transformación recíproca."""

    def __init__(
        self,
        a: Tuple[Tuple[Escalar, ...], ...],
        mhat: Tuple[Tuple[int, ...], ...],
        qtilde: Sequence[Polinomio],
        Qtilde: Sequence[Polinomio],
        t: Escalar,
        modo: Modo,
    ):
        self.n = len(qtilde)
        self.a = a
        self.mhat = mhat
        self.qtilde = tuple(qtilde)
        self.Qtilde = tuple(Qtilde)
        self.t = t
        self.modo = modo

    def F(self, t: Any = None) -> List[Polinomio]:
        """F̃ᵢ = q̃ᵢ + t·Q̃ᵢ."""
        t = self.t if t is None else convertir(t, self.modo)
        return [q + Q.por_escalar(t) for q, Q in zip(self.qtilde, self.Qtilde)]

    def jacobiano(self, t: Any = None) -> Polinomio:
        """Δ̃: jacobiano de q̃ + tQ̃ con t numérico."""
        return determinante_jacobiano(self.F(t))

    def q_deflactado(self, i: int, j: int) -> Polinomio:
        """q̃ᵢ[j] = q̃ᵢ / (w_j − a_ij)^{m̂_ij}."""
        producto = Polinomio.constante(self.n, 1, self.modo)
        for l in range(self.n):
            if l == j:
                continue
            producto = producto * Polinomio.lineal(self.n, l, self.a[i][l], self.modo) ** self.mhat[i][l]
        return producto

    def en_modo(self, modo: Modo) -> "SistemaTransformado":
        if modo == self.modo:
            return self
        conv = complex if modo == Modo.FLOTANTE else a_exacto
        return SistemaTransformado(
            tuple(tuple(conv(x) for x in fila) for fila in self.a),
            self.mhat,
            [p.en_modo(modo) for p in self.qtilde],
            [p.en_modo(modo) for p in self.Qtilde],
            conv(self.t),
            modo,
        )

    def __repr__(self):
        return f"SistemaTransformado(n={self.n}, mhat={self.mhat})"


class RaizReticular(NamedTuple):
    """Raíz a_J del sistema sin perturbar: la coordenada jᵢ vale a_{i,jᵢ}."""
    J: Tuple[int, ...]
    punto: Tuple[Escalar, ...]
    signo: int
    multiplicidad: int
