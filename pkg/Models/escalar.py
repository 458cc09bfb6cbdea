"""
Escalares del motor.

Modo exacto: complejo con partes real e imaginaria racionales (Gaussiano).
Modo flotante: complex de Python (doble precisión).
Dentro de un mismo cálculo el modo es uniforme; mezclarlos es un error.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, Union

from Util.error_handler import ErrorModo


class Modo(str, Enum):
    EXACTO = "exact"
    FLOTANTE = "float"


def _racional(valor: Any) -> Fraction:
    if isinstance(valor, Fraction):
        return valor
    if isinstance(valor, bool):
        raise ErrorModo(f"booleano no es un coeficiente: {valor!r}")
    if isinstance(valor, int):
        return Fraction(valor)
    if isinstance(valor, str):
        try:
            return Fraction(valor.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ErrorModo(f"racional inválido: {valor!r}") from e
    raise ErrorModo(f"valor no exacto en modo exacto: {valor!r} ({type(valor).__name__})")


class Gaussiano:
    """Complejo racional exacto: re + im·i con re, im ∈ ℚ."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0):
        self.re = _racional(re)
        self.im = _racional(im)

    @staticmethod
    def _coercer(otro: Any) -> "Gaussiano | None":
        if isinstance(otro, Gaussiano):
            return otro
        if isinstance(otro, (int, Fraction)) and not isinstance(otro, bool):
            return Gaussiano(otro)
        if isinstance(otro, (float, complex)):
            raise ErrorModo(f"mezcla de modos: Gaussiano con {type(otro).__name__}")
        return None

    def __add__(self, otro):
        o = self._coercer(otro)
        if o is None:
            return NotImplemented
        return Gaussiano(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, otro):
        o = self._coercer(otro)
        if o is None:
            return NotImplemented
        return Gaussiano(self.re - o.re, self.im - o.im)

    def __rsub__(self, otro):
        o = self._coercer(otro)
        if o is None:
            return NotImplemented
        return Gaussiano(o.re - self.re, o.im - self.im)

    def __mul__(self, otro):
        o = self._coercer(otro)
        if o is None:
            return NotImplemented
        if not o.im:
            return Gaussiano(self.re * o.re, self.im * o.re)
        return Gaussiano(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverso(self) -> "Gaussiano":
        norma = self.re * self.re + self.im * self.im
        if not norma:
            raise ZeroDivisionError("división por cero exacto")
        return Gaussiano(self.re / norma, -self.im / norma)

    def __truediv__(self, otro):
        o = self._coercer(otro)
        if o is None:
            return NotImplemented
        if not o.im:
            if not o.re:
                raise ZeroDivisionError("división por cero exacto")
            return Gaussiano(self.re / o.re, self.im / o.re)
        return self * o.inverso()

    def __rtruediv__(self, otro):
        o = self._coercer(otro)
        if o is None:
            return NotImplemented
        return o * self.inverso()

    def __neg__(self):
        return Gaussiano(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponente: int):
        if not isinstance(exponente, int):
            return NotImplemented
        base = self if exponente >= 0 else self.inverso()
        k = abs(exponente)
        resultado = Gaussiano(1)
        while k:
            if k & 1:
                resultado = resultado * base
            k >>= 1
            if k:
                base = base * base
        return resultado

    def __eq__(self, otro):
        if isinstance(otro, Gaussiano):
            return self.re == otro.re and self.im == otro.im
        if isinstance(otro, (int, Fraction)):
            return not self.im and self.re == otro
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(complex(self))

    def conjugado(self) -> "Gaussiano":
        return Gaussiano(self.re, -self.im)

    def __repr__(self):
        return f"Gaussiano({texto_racional(self.re)}, {texto_racional(self.im)})"

    def __str__(self):
        if not self.im:
            return texto_racional(self.re)
        return f"{texto_racional(self.re)}{'+' if self.im >= 0 else '-'}{texto_racional(abs(self.im))}i"


Escalar = Union[Gaussiano, complex]


def texto_racional(valor: Fraction) -> str:
    """Forma canónica "p/q" (o "p" si el denominador es 1)."""
    if valor.denominator == 1:
        return str(valor.numerator)
    return f"{valor.numerator}/{valor.denominator}"


def cero(modo: Modo) -> Escalar:
    return Gaussiano(0) if modo == Modo.EXACTO else 0j


def uno(modo: Modo) -> Escalar:
    return Gaussiano(1) if modo == Modo.EXACTO else 1 + 0j


def modo_de(valor: Any) -> Modo | None:
    """Modo de un escalar; None para enteros y racionales (neutros)."""
    if isinstance(valor, Gaussiano):
        return Modo.EXACTO
    if isinstance(valor, (float, complex)):
        return Modo.FLOTANTE
    return None


def convertir(valor: Any, modo: Modo) -> Escalar:
    """
    Lleva un valor al modo indicado.

    Acepta Gaussiano, enteros, Fraction, cadenas "p/q" y pares [re, im].
    En modo exacto rechaza float/complex (mezcla de modos).
    """
    if isinstance(valor, (tuple, list)):
        if len(valor) != 2:
            raise ErrorModo(f"complejo debe ser [re, im]: {valor!r}")
        re, im = valor
        if modo == Modo.EXACTO:
            return Gaussiano(re, im)
        return complex(float(_a_float(re)), float(_a_float(im)))

    if modo == Modo.EXACTO:
        if isinstance(valor, Gaussiano):
            return valor
        return Gaussiano(valor)

    if isinstance(valor, Gaussiano):
        return complex(valor)
    return complex(_a_float(valor)) if not isinstance(valor, complex) else valor


def _a_float(valor: Any) -> float:
    if isinstance(valor, str):
        return float(Fraction(valor.strip()))
    if isinstance(valor, complex):
        raise ErrorModo(f"se esperaba una parte real, no {valor!r}")
    return float(valor)


def a_exacto(valor: Any) -> Gaussiano:
    """Conversión explícita a exacto; los float se toman por su valor binario exacto."""
    if isinstance(valor, Gaussiano):
        return valor
    if isinstance(valor, complex):
        return Gaussiano(Fraction(valor.real), Fraction(valor.imag))
    if isinstance(valor, float):
        return Gaussiano(Fraction(valor))
    return convertir(valor, Modo.EXACTO)
