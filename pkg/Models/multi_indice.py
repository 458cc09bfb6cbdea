"""
Multi-índices: tuplas de exponentes no negativos (α, β, γ, K).
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, List

from Util.error_handler import ErrorDimension


class MultiIndice(tuple):
    """Tupla inmutable de enteros ≥ 0."""

    def __new__(cls, exponentes: Iterable[int]):
        valores = tuple(exponentes)
        for e in valores:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ErrorDimension(f"exponente inválido en multi-índice: {e!r}")
        return super().__new__(cls, valores)

    @classmethod
    def ceros(cls, n: int) -> "MultiIndice":
        return cls((0,) * n)

    @classmethod
    def unos(cls, n: int) -> "MultiIndice":
        """El multi-índice I = (1,…,1)."""
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def norma(self) -> int:
        """‖α‖ = α₁+…+αₙ."""
        return sum(self)

    def mas(self, otro: Iterable[int]) -> "MultiIndice":
        otro = tuple(otro)
        _misma_dimension(self, otro)
        return MultiIndice(a + b for a, b in zip(self, otro))

    def menos(self, otro: Iterable[int]) -> "MultiIndice":
        otro = tuple(otro)
        _misma_dimension(self, otro)
        return MultiIndice(a - b for a, b in zip(self, otro))

    def acotado_por(self, otro: Iterable[int]) -> bool:
        """True si self ≤ otro componente a componente."""
        return all(a <= b for a, b in zip(self, otro))

    def minimo(self, otro: Iterable[int]) -> "MultiIndice":
        return MultiIndice(min(a, b) for a, b in zip(self, otro))

    def factorial(self) -> int:
        return math.prod(math.factorial(e) for e in self)

    def __repr__(self):
        return f"MultiIndice{tuple(self)}"


def _misma_dimension(a, b) -> None:
    if len(a) != len(b):
        raise ErrorDimension(f"dimensiones distintas: {len(a)} y {len(b)}")


def clave_grlex(indice: Iterable[int]):
    """Orden lexicográfico graduado: primero el grado total, luego lex descendente."""
    indice = tuple(indice)
    return (sum(indice), tuple(-e for e in indice))


def indices_acotados(orden: Iterable[int]) -> List[MultiIndice]:
    """Todos los δ ≤ orden (componente a componente), en orden grlex."""
    rangos = [range(o + 1) for o in orden]
    return sorted((MultiIndice(d) for d in itertools.product(*rangos)), key=clave_grlex)


def indices_norma_hasta(n: int, cota: int) -> List[MultiIndice]:
    """Todos los K ≥ 0 de dimensión n con ‖K‖ ≤ cota, en orden grlex."""
    if cota < 0:
        return []
    return [k for k in indices_acotados((cota,) * n) if k.norma <= cota]


def recorrer_capas(n: int, cota: int) -> Iterator[List[MultiIndice]]:
    """Capas ‖K‖ = 0, 1, …, cota, cada una en orden grlex."""
    todos = indices_norma_hasta(n, cota)
    for grado in range(cota + 1):
        yield [k for k in todos if k.norma == grado]
