import random
from fractions import Fraction
from pathlib import Path
from typing import List

import pytest

from Models.escalar import Gaussiano, Modo
from Models.polinomio import Polinomio
from Models.sistema import SistemaTsikh
from Util.series_transcendentes import sistema_ejemplo1

EJEMPLOS = Path(__file__).resolve().parent.parent / "ejemplos"

VALORES_A = [-3, -1, 1, 3]
COEFICIENTES_Q = [Fraction(s, d) for s in (1, -1) for d in (3, 4, 5)]


def sistema_aleatorio(rng: random.Random, con_cero: bool = False, max_monomios: int = 2) -> SistemaTsikh:
    """
    Sistema válido con n = 2 y m̂ ≤ 2: columnas de a distintas, Qᵢ con 1 a
    max_monomios términos divisibles por z₁z₂ y grados dentro de la cota.
    """
    n = 2
    a = [[0] * n for _ in range(n)]
    for j in range(n):
        for i, valor in enumerate(rng.sample(VALORES_A, n)):
            a[i][j] = valor
    if con_cero:
        a[0][0] = 0
    m = [[rng.randint(1, 2) if a[i][j] else 0 for j in range(n)] for i in range(n)]

    Q = []
    for i in range(n):
        terminos = {}
        for _ in range(rng.randint(1, max_monomios)):
            exps = tuple(rng.randint(1, m[i][j] if a[i][j] else 2) for j in range(n))
            terminos[exps] = rng.choice(COEFICIENTES_Q)
        Q.append(Polinomio(n, terminos, Modo.EXACTO))
    return SistemaTsikh(a, m, Q, t=1, modo=Modo.EXACTO)


def sistemas_aleatorios(cantidad: int, semilla: int, **kwargs) -> List[SistemaTsikh]:
    rng = random.Random(semilla)
    return [sistema_aleatorio(rng, con_cero=(k % 3 == 2), **kwargs) for k in range(cantidad)]


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def ejemplo1() -> SistemaTsikh:
    """a₂=1, a₃=1, b₁=1, b₂=−1, b₃=1."""
    return sistema_ejemplo1(1, 1, 1, -1, 1)


@pytest.fixture
def ruta_ejemplos() -> Path:
    return EJEMPLOS


def G(re, im=0) -> Gaussiano:
    return Gaussiano(re, im)
