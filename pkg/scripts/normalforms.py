#!/usr/bin/env python3
"""
Forma normal de Hermite sobre los enteros y resolución de sistemas
lineales enteros, con matrices numpy de tipo object (aritmética exacta)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from errors import MathDomainError


def exgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) con x·a + y·b = g = gcd(a, b) >= 0"""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def integer_matrix(rows, cols: int | None = None) -> np.ndarray:
    rows = [list(row) for row in rows]
    if cols is None:
        cols = len(rows[0]) if rows else 0
    result = np.zeros((len(rows), cols), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            result[i, j] = int(entry)
    return result


def hermite_normal_form(G: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Forma de Hermite por filas: H = U @ G con U unimodular

    H está en forma escalonada, los pivotes son positivos y las entradas
    por encima de cada pivote quedan reducidas módulo el pivote.
    """
    H = np.array(G, dtype=object)
    m, n = H.shape
    U = np.zeros((m, m), dtype=object)
    for i in range(m):
        U[i, i] = 1

    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        for row in range(pivot_row + 1, m):
            a, b = H[pivot_row, col], H[row, col]
            if b == 0:
                continue
            g, x, y = exgcd(a, b)
            # transformación 2x2 de determinante 1 que lleva (a, b) a (g, 0)
            p, q = a // g, b // g
            top_h, bottom_h = x * H[pivot_row] + y * H[row], -q * H[pivot_row] + p * H[row]
            top_u, bottom_u = x * U[pivot_row] + y * U[row], -q * U[pivot_row] + p * U[row]
            H[pivot_row], H[row] = top_h, bottom_h
            U[pivot_row], U[row] = top_u, bottom_u
        pivot = H[pivot_row, col]
        if pivot == 0:
            continue
        if pivot < 0:
            H[pivot_row] = -H[pivot_row]
            U[pivot_row] = -U[pivot_row]
            pivot = -pivot
        for row in range(pivot_row):
            q = H[row, col] // pivot
            if q:
                H[row] = H[row] - q * H[pivot_row]
                U[row] = U[row] - q * U[pivot_row]
        pivot_row += 1
    return H, U


def pivots(H: np.ndarray) -> dict[int, int]:
    """Columna del pivote -> fila, para una matriz en forma de Hermite"""
    found = {}
    for row in range(H.shape[0]):
        for col in range(H.shape[1]):
            if H[row, col] != 0:
                found[col] = row
                break
    return found


@dataclass(frozen=True)
class Obstruction:
    """En la coordenada `coordinate` el subgrupo generado toma valores en modulus·ℤ
    (una vez reducidas las coordenadas anteriores) y el objetivo deja resto `residue`"""
    coordinate: int
    residue: int
    modulus: int


def solve_integer_system(G: np.ndarray, target) -> tuple[list[int] | None, Obstruction | None]:
    """Coeficientes c con c @ G = target, o la obstrucción que lo impide"""
    G = np.array(G, dtype=object)
    m, n = G.shape
    t = np.array([int(v) for v in target], dtype=object)
    if m == 0:
        for col in range(n):
            if t[col] != 0:
                return None, Obstruction(col, int(t[col]), 0)
        return [], None
    H, U = hermite_normal_form(G)
    where = pivots(H)
    remainder = t.copy()
    quotients = np.zeros(m, dtype=object)
    for col in range(n):
        value = remainder[col]
        if col not in where:
            if value != 0:
                return None, Obstruction(col, int(value), 0)
            continue
        row = where[col]
        pivot = H[row, col]
        if value % pivot != 0:
            return None, Obstruction(col, int(value % pivot), int(pivot))
        quotients[row] = value // pivot
        remainder = remainder - quotients[row] * H[row]
    coefficients = quotients.dot(U)
    if list(coefficients.dot(G)) != list(t):
        raise MathDomainError('unimodular back-substitution does not reproduce the target')
    return [int(c) for c in coefficients], None
