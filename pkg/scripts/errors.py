#!/usr/bin/env python3
"""
Jerarquía de errores de la librería de multiespacios booleanos
Cada familia de error tiene su código de salida en la CLI
"""

EXIT_OK = 0
EXIT_IO = 1
EXIT_SCHEMA = 2
EXIT_MATH = 3
EXIT_VERIFICATION = 4


class MultispaceError(Exception):
    """Error base de la librería"""
    kind = 'error'
    exit_code = EXIT_MATH


class InputOutputError(MultispaceError):
    """Archivo inexistente o ilegible"""
    kind = 'io'
    exit_code = EXIT_IO


class SchemaError(MultispaceError):
    """Entrada mal formada: etiquetas duplicadas, longitudes, JSON inválido"""
    kind = 'schema'
    exit_code = EXIT_SCHEMA


class MathDomainError(MultispaceError):
    """Violación de una condición matemática"""
    kind = 'math-domain'
    exit_code = EXIT_MATH


class DivisibilityError(MathDomainError):
    """La multiplicidad del codominio no divide la del dominio"""

    def __init__(self, point, u_dom, u_cod):
        self.point = point
        self.u_dom = u_dom
        self.u_cod = u_cod
        super().__init__(
            f"divisibility violated at {point!r}: {u_cod} does not divide {u_dom}"
        )


class MultiplicityOverflowError(MathDomainError):
    """Resultado fuera del rango de enteros de 64 bits"""
    kind = 'overflow'


class GroupMismatchError(MathDomainError):
    """Operandos de grupos (o álgebras) distintos"""


class NotSingularError(MathDomainError):
    """Se esperaba un elemento singular"""


class LHomShapeError(MathDomainError):
    """La matriz no define un ℓ-homomorfismo unital"""


class NoColimitError(MathDomainError):
    """Colímite que no existe en general en Bms"""


class VerificationFailure(MultispaceError):
    """Un barrido de verificación encontró fallas"""
    kind = 'verification'
    exit_code = EXIT_VERIFICATION
