"""
Combinatoria: permutaciones con signo y permanente.
"""

import itertools
import math
from typing import List, Sequence, Tuple


def permutaciones(n: int) -> List[Tuple[int, ...]]:
    """Permutaciones J: i ↦ jᵢ de {0..n-1}, en orden lexicográfico."""
    return list(itertools.permutations(range(n)))


def signo_permutacion(perm: Sequence[int]) -> int:
    """Signo (−1)^{inversiones}."""
    inversiones = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversiones % 2 else 1


def permanente(matriz: Sequence[Sequence[int]]) -> int:
    """
    Permanente por la fórmula de Ryser (inclusión–exclusión sobre columnas).

    perm(A) = (−1)ⁿ Σ_{S ⊆ columnas} (−1)^{|S|} ∏ᵢ Σ_{j∈S} a_ij

    Args:
        matriz: Matriz cuadrada de enteros no negativos

    Returns:
        El permanente (entero exacto)
    """
    n = len(matriz)
    if any(len(fila) != n for fila in matriz):
        raise ValueError("la matriz del permanente debe ser cuadrada")
    if n == 0:
        return 1

    total = 0
    for tamano in range(1, n + 1):
        for columnas in itertools.combinations(range(n), tamano):
            producto = math.prod(sum(fila[j] for j in columnas) for fila in matriz)
            total += (-1) ** tamano * producto
    return (-1) ** n * total
